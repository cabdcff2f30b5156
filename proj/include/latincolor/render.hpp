#pragma once

#include "latincolor/certificate.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace latincolor {

enum class RenderFormat { Ascii, Latex, Json };
enum class Marker { Red, Blue, Bold };

// target: a class id ("7"), a ladder rim ("D0", from the "ladders" audit),
// or "X" / "Y" for the two deletion classes of an abelian-n+2 certificate.
struct Highlight {
    std::string target;
    Marker marker;
};

struct RenderStyle {
    RenderFormat format = RenderFormat::Ascii;
    std::vector<Highlight> highlight;
};

RenderFormat parse_render_format(std::string_view text);
// "X:red", "D0:bold", "3:blue"
Highlight parse_highlight(std::string_view text);

// Class id per cell, one row per line.
std::string render_ascii(const Certificate& cert);
// Standalone LaTeX document: the table's symbols (group labels when the
// group is known) with the highlighted cells marked.
std::string render_latex(const Certificate& cert, const std::vector<Highlight>& highlight);

}  // namespace latincolor

#include "latincolor/render.hpp"

#include "latincolor/error.hpp"
#include "latincolor/group_spec.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace latincolor {

namespace {

    std::vector<std::vector<int>> class_grid(const Certificate& cert)
    {
        const int n = cert.coloring.square.order();
        std::vector<std::vector<int>> grid(n, std::vector<int>(n, -1));
        for (std::size_t k = 0; k < cert.coloring.classes.size(); ++k)
            for (const Cell& c : cert.coloring.classes[k])
                if (cert.coloring.square.contains(c))
                    grid[c.r][c.c] = static_cast<int>(k);
        return grid;
    }

    std::vector<Cell> highlight_cells(const Certificate& cert, const std::string& target)
    {
        const auto& classes = cert.coloring.classes;
        if (target == "X" || target == "Y") {
            if (cert.method != "abelian-n+2")
                fail(ErrorCode::InvalidArgument, "X and Y highlights need an abelian-n+2 certificate");
            const std::size_t q = cert.coloring.square.order() / 2;
            const std::size_t id = 2 * q + (target == "Y" ? 1 : 0);
            if (id >= classes.size())
                fail(ErrorCode::InvalidArgument, "certificate has no class " + std::to_string(id));
            return classes[id];
        }
        if (target.size() > 1 && target[0] == 'D') {
            int d = -1;
            auto [p, ec] = std::from_chars(target.data() + 1, target.data() + target.size(), d);
            if (ec != std::errc() || p != target.data() + target.size())
                fail(ErrorCode::InvalidArgument, "bad highlight target " + target);
            for (const LadderAudit& l : cert.ladders)
                if (l.d_index == d)
                    return l.rim;
            fail(ErrorCode::InvalidArgument, "certificate has no ladder " + target);
        }
        std::size_t id = 0;
        auto [p, ec] = std::from_chars(target.data(), target.data() + target.size(), id);
        if (ec != std::errc() || p != target.data() + target.size())
            fail(ErrorCode::InvalidArgument, "bad highlight target " + target);
        if (id >= classes.size())
            fail(ErrorCode::InvalidArgument, "certificate has no class " + target);
        return classes[id];
    }

    // Labels of direct products carry "×" separators, which would not survive
    // math mode; print the bare digits instead.
    std::string latex_label(std::string label)
    {
        const std::string times = "×";
        for (auto pos = label.find(times); pos != std::string::npos; pos = label.find(times))
            label.erase(pos, times.size());
        return label;
    }

}  // namespace

RenderFormat parse_render_format(std::string_view text)
{
    if (text == "ascii")
        return RenderFormat::Ascii;
    if (text == "latex")
        return RenderFormat::Latex;
    if (text == "json")
        return RenderFormat::Json;
    fail(ErrorCode::InvalidArgument, "unknown render format " + std::string(text));
}

Highlight parse_highlight(std::string_view text)
{
    const auto colon = text.rfind(':');
    if (colon == std::string_view::npos || colon == 0)
        fail(ErrorCode::InvalidArgument, "highlight must look like TARGET:MARKER");
    const std::string_view marker = text.substr(colon + 1);
    Highlight h{std::string(text.substr(0, colon)), Marker::Bold};
    if (marker == "red")
        h.marker = Marker::Red;
    else if (marker == "blue")
        h.marker = Marker::Blue;
    else if (marker == "bold")
        h.marker = Marker::Bold;
    else
        fail(ErrorCode::InvalidArgument, "unknown marker " + std::string(marker));
    return h;
}

std::string render_ascii(const Certificate& cert)
{
    const auto grid = class_grid(cert);
    const int width = static_cast<int>(std::max<std::size_t>(1, std::to_string(cert.coloring.class_count()).size()));
    std::ostringstream out;
    for (const auto& row : grid) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            std::string s = row[c] < 0 ? "." : std::to_string(row[c]);
            if (c > 0)
                out << ' ';
            out << std::string(width - s.size(), ' ') << s;
        }
        out << '\n';
    }
    return out.str();
}

std::string render_latex(const Certificate& cert, const std::vector<Highlight>& highlight)
{
    const LatinSquare& square = cert.coloring.square;
    const int n = square.order();
    std::optional<FiniteGroup> group;
    if (!cert.group.empty())
        group = build_group(cert.group);

    struct Marks {
        bool red = false, blue = false, bold = false;
    };
    std::vector<std::vector<Marks>> marks(n, std::vector<Marks>(n));
    for (const Highlight& h : highlight)
        for (const Cell& c : highlight_cells(cert, h.target)) {
            if (!square.contains(c))
                continue;
            Marks& m = marks[c.r][c.c];
            (h.marker == Marker::Red ? m.red : h.marker == Marker::Blue ? m.blue : m.bold) = true;
        }

    std::ostringstream out;
    out << "\\documentclass{standalone}\n\\usepackage{xcolor}\n\\usepackage{amsmath}\n\\begin{document}\n";
    out << "$\\begin{array}{" << std::string(n, 'c') << "}\n";
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
            const int s = square.symbol(r, c);
            std::string text = group ? latex_label(group->label(s)) : std::to_string(s);
            const Marks& m = marks[r][c];
            if (m.bold)
                text = "\\boldsymbol{" + text + "}";
            if (m.red)
                text = "\\textcolor{red}{" + text + "}";
            else if (m.blue)
                text = "\\textcolor{blue}{" + text + "}";
            out << (c > 0 ? " & " : "") << text;
        }
        out << (r + 1 < n ? " \\\\\n" : "\n");
    }
    out << "\\end{array}$\n\\end{document}\n";
    return out.str();
}

}  // namespace latincolor

#pragma once

#include "latincolor/exact.hpp"
#include "latincolor/latin.hpp"
#include "latincolor/lsq_graph.hpp"

#include <json.hpp>

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace latincolor {

using Json = nlohmann::ordered_json;

struct LadderAudit {
    int d_index = 0;
    std::vector<Cell> rim;
};

// A coloring plus the provenance needed to rebuild its square: a group spec
// (Cayley table under row_order/col_order) or, for squares that are not
// Cayley tables, the raw symbol array.
struct Certificate {
    std::string group;  // empty when the square came from "symbols"
    Coloring coloring;
    std::string method;
    std::vector<LadderAudit> ladders;
};

Json certificate_to_json(const Certificate& cert);
// Throws ParseError for anything structurally wrong. Cells outside the
// square are kept so the verifier can report them.
Certificate certificate_from_json(const Json& j);

Json chromatic_to_json(const ChromaticResult& result, const std::string& group);

Json read_json_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const Json& j);

std::vector<LadderAudit> ladder_audit(const std::vector<LadderCertificate>& ladders);

}  // namespace latincolor

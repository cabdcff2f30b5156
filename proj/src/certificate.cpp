#include "latincolor/certificate.hpp"

#include "latincolor/error.hpp"
#include "latincolor/group_spec.hpp"

#include <fstream>
#include <sstream>

namespace latincolor {

namespace {

    Json cell_json(Cell c) { return Json::array({c.r, c.c}); }

    Json cells_json(const std::vector<Cell>& cells)
    {
        Json out = Json::array();
        for (const Cell& c : cells)
            out.push_back(cell_json(c));
        return out;
    }

    [[noreturn]] void malformed(const std::string& what) { fail(ErrorCode::ParseError, "certificate: " + what); }

    const Json& field(const Json& j, const char* key)
    {
        auto it = j.find(key);
        if (it == j.end())
            malformed(std::string("missing \"") + key + "\"");
        return *it;
    }

    int as_int(const Json& j, const std::string& where)
    {
        if (!j.is_number_integer())
            malformed(where + " must be an integer");
        return j.get<int>();
    }

    std::vector<int> int_list(const Json& j, const std::string& where)
    {
        if (!j.is_array())
            malformed(where + " must be an array");
        std::vector<int> out;
        for (const Json& v : j)
            out.push_back(as_int(v, where));
        return out;
    }

    Cell parse_cell(const Json& j)
    {
        if (!j.is_array() || j.size() != 2)
            malformed("a cell must be a [row, col] pair");
        return {as_int(j[0], "cell row"), as_int(j[1], "cell column")};
    }

    std::vector<Cell> parse_cells(const Json& j, const std::string& where)
    {
        if (!j.is_array())
            malformed(where + " must be an array of cells");
        std::vector<Cell> out;
        for (const Json& c : j)
            out.push_back(parse_cell(c));
        return out;
    }

    LatinSquare rebuild_square(const Json& j, const std::string& group, int order)
    {
        std::optional<std::vector<int>> rows, cols;
        if (j.contains("row_order"))
            rows = int_list(j["row_order"], "row_order");
        if (j.contains("col_order"))
            cols = int_list(j["col_order"], "col_order");

        try {
            if (j.contains("symbols")) {
                const Json& s = j["symbols"];
                if (!s.is_array())
                    malformed("symbols must be an array of rows");
                std::vector<std::vector<int>> symbols;
                for (const Json& row : s)
                    symbols.push_back(int_list(row, "symbols row"));
                if (static_cast<int>(symbols.size()) != order)
                    malformed("symbols has " + std::to_string(symbols.size()) + " rows, order is " +
                              std::to_string(order));
                if (rows && cols)
                    return LatinSquare(symbols, *rows, *cols);
                return LatinSquare(symbols);
            }
            if (group.empty())
                malformed("needs either \"group\" or \"symbols\"");
            const FiniteGroup g = build_group(group);
            if (g.order() != order)
                malformed("group " + group + " has order " + std::to_string(g.order()) + ", certificate says " +
                          std::to_string(order));
            std::vector<int> identity(order);
            for (int i = 0; i < order; ++i)
                identity[i] = i;
            return cayley_table(g, rows ? *rows : identity, cols ? *cols : identity);
        } catch (const Error& e) {
            if (e.code() == ErrorCode::ParseError)
                throw;
            malformed(std::string("square cannot be rebuilt: ") + e.what());
        }
    }

}  // namespace

std::vector<LadderAudit> ladder_audit(const std::vector<LadderCertificate>& ladders)
{
    std::vector<LadderAudit> out;
    for (std::size_t i = 0; i < ladders.size(); ++i)
        out.push_back({static_cast<int>(i), ladders[i].rim});
    return out;
}

Json certificate_to_json(const Certificate& cert)
{
    const LatinSquare& square = cert.coloring.square;
    Json j;
    if (!cert.group.empty())
        j["group"] = cert.group;
    j["order"] = square.order();
    if (square.row_order())
        j["row_order"] = *square.row_order();
    if (square.col_order())
        j["col_order"] = *square.col_order();
    if (cert.group.empty())
        j["symbols"] = square.rows();
    if (!cert.method.empty())
        j["method"] = cert.method;
    Json classes = Json::array();
    for (const auto& cls : cert.coloring.classes)
        classes.push_back(cells_json(cls));
    j["classes"] = std::move(classes);
    if (!cert.ladders.empty()) {
        Json ladders = Json::array();
        for (const LadderAudit& l : cert.ladders)
            ladders.push_back({{"d_index", l.d_index}, {"rim", cells_json(l.rim)}});
        j["ladders"] = std::move(ladders);
    }
    return j;
}

Certificate certificate_from_json(const Json& j)
{
    if (!j.is_object())
        malformed("top level must be an object");
    std::string group;
    if (j.contains("group")) {
        if (!j["group"].is_string())
            malformed("group must be a string");
        group = j["group"].get<std::string>();
    }
    const int order = as_int(field(j, "order"), "order");
    if (order < 1)
        malformed("order must be positive");
    LatinSquare square = rebuild_square(j, group, order);

    const Json& cls = field(j, "classes");
    if (!cls.is_array())
        malformed("classes must be an array");
    std::vector<std::vector<Cell>> classes;
    for (const Json& c : cls)
        classes.push_back(parse_cells(c, "class"));

    std::string method;
    if (j.contains("method")) {
        if (!j["method"].is_string())
            malformed("method must be a string");
        method = j["method"].get<std::string>();
    }
    std::vector<LadderAudit> ladders;
    if (j.contains("ladders")) {
        if (!j["ladders"].is_array())
            malformed("ladders must be an array");
        for (const Json& l : j["ladders"])
            ladders.push_back({as_int(field(l, "d_index"), "d_index"), parse_cells(field(l, "rim"), "rim")});
    }
    return Certificate{std::move(group), Coloring{std::move(square), std::move(classes)}, std::move(method),
                       std::move(ladders)};
}

Json chromatic_to_json(const ChromaticResult& result, const std::string& group)
{
    Json j;
    j["chi"] = result.value;
    j["lower_bound"] = {{"kind", std::string(to_string(result.lower_bound))}, {"k", result.lower_bound_k}};
    j["certificate"] = certificate_to_json(Certificate{group, result.coloring, "exact", {}});
    return j;
}

Json read_json_file(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        fail(ErrorCode::ParseError, "cannot open " + path.string());
    std::stringstream buffer;
    buffer << in.rdbuf();
    try {
        return Json::parse(buffer.str());
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorCode::ParseError, path.string() + ": " + e.what());
    }
}

void write_json_file(const std::filesystem::path& path, const Json& j)
{
    std::ofstream out(path);
    if (!out)
        fail(ErrorCode::InvalidArgument, "cannot write " + path.string());
    out << j.dump(2) << '\n';
}

}  // namespace latincolor

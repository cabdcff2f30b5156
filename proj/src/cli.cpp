#include "latincolor/cli.hpp"

#include "latincolor/abelian.hpp"
#include "latincolor/certificate.hpp"
#include "latincolor/composite.hpp"
#include "latincolor/exact.hpp"
#include "latincolor/group_spec.hpp"
#include "latincolor/render.hpp"

#include <CLI11.hpp>

#include <fstream>

namespace latincolor {

namespace {

    std::uint64_t resolve_budget(const std::string& flag, std::uint64_t fallback)
    {
        if (flag.empty())
            return budget_from_env(fallback);
        const auto parsed = parse_budget(flag);
        if (!parsed)
            fail(ErrorCode::InvalidArgument, "bad --budget value " + flag);
        return *parsed;
    }

    void emit_json(const Json& j, const std::string& path, std::ostream& out)
    {
        if (path.empty())
            out << j.dump(2) << '\n';
        else
            write_json_file(path, j);
    }

    std::string cells_text(const std::vector<Cell>& cells)
    {
        std::string s;
        for (const Cell& c : cells)
            s += (s.empty() ? "" : " ") + to_string(c);
        return s;
    }

    struct ColorArgs {
        std::string spec;
        std::string method = "auto";
        std::string out_path;
        std::string budget;
    };

    Certificate make_certificate(const GroupSpec& spec, const FiniteGroup& g, const std::string& method,
                                 std::uint64_t budget)
    {
        const std::string name = spec.to_string();
        auto abelian = [&] {
            AbelianColoring a = abelian_n_plus_2_coloring(g);
            return Certificate{name, std::move(a.coloring), "abelian-n+2", ladder_audit(a.ladders)};
        };
        if (method == "abelian")
            return abelian();
        if (method == "product") {
            MethodColoring m = product_method_coloring(spec, budget);
            return Certificate{name, std::move(m.coloring), m.method, {}};
        }
        if (method == "power-bound")
            return Certificate{name, power_bound_coloring(g), "power-bound", {}};
        if (method == "three-halves")
            return Certificate{name, three_halves_coloring(g).coloring, "three-halves", {}};
        if (method == "exact") {
            const LatinSquare square = cayley_table(g);
            ChromaticOutcome outcome = exact_chromatic(square, 0, budget);
            if (!outcome.result) {
                const std::string upper = outcome.upper ? std::to_string(*outcome.upper) : "?";
                fail(outcome.budget_exhausted ? ErrorCode::BudgetExhausted : ErrorCode::Consistency,
                     "exact search undecided: " + std::to_string(outcome.lower) + " <= chi <= " + upper);
            }
            return Certificate{name, std::move(outcome.result->coloring), "exact", {}};
        }
        MethodColoring best = best_coloring(g, budget);
        if (best.method == "abelian-n+2")
            return abelian();
        return Certificate{name, std::move(best.coloring), best.method, {}};
    }

    int cmd_color(const ColorArgs& a, std::ostream& out, std::ostream& err)
    {
        const GroupSpec spec = parse_group_spec(a.spec);
        const FiniteGroup g = spec.build();
        const std::uint64_t budget =
            resolve_budget(a.budget, a.method == "exact" ? kDefaultChromaticBudget : kDefaultSearchBudget);
        const Certificate cert = make_certificate(spec, g, a.method, budget);
        const ColoringReport report = verify_coloring(cert.coloring);

        // keep stdout clean for the certificate when no file is given
        std::ostream& info = a.out_path.empty() ? err : out;
        info << "classes: " << cert.coloring.class_count() << "\nmethod: " << cert.method << '\n';
        if (!report.valid()) {
            err << report.describe() << '\n';
            return exit_code_for(ErrorCode::Consistency);
        }
        emit_json(certificate_to_json(cert), a.out_path, out);
        return 0;
    }

    int cmd_verify(const std::string& path, std::ostream& out)
    {
        const Certificate cert = certificate_from_json(read_json_file(path));
        const ColoringReport report = verify_coloring(cert.coloring);
        out << report.describe() << '\n';
        return report.valid() ? 0 : 1;
    }

    struct ChromaticArgs {
        std::string spec;
        bool exact = false;
        int max_k = 0;
        std::string budget;
        std::string out_path;
    };

    int cmd_chromatic(const ChromaticArgs& a, std::ostream& out)
    {
        const GroupSpec spec = parse_group_spec(a.spec);
        const FiniteGroup g = spec.build();
        const int n = g.order();
        const std::string name = spec.to_string();

        if (!a.exact) {
            const std::uint64_t budget = resolve_budget(a.budget, kDefaultSearchBudget);
            MethodColoring best = best_coloring(g, budget);
            const int upper = static_cast<int>(best.coloring.class_count());
            if (upper == n) {
                out << n << "\nlower bound: clique-n (k=" << n << ")\nupper bound: " << best.method << '\n';
                if (!a.out_path.empty())
                    emit_json(chromatic_to_json(ChromaticResult{n, std::move(best.coloring),
                                                                ChromaticResult::LowerBound::CliqueN, n},
                                                name),
                              a.out_path, out);
            } else {
                out << "bounds: " << n << " <= chi <= " << upper << "\nlower bound: clique-n (k=" << n
                    << ")\nupper bound: " << best.method << "\n(run with --exact to decide)\n";
            }
            return 0;
        }

        const std::uint64_t budget = resolve_budget(a.budget, kDefaultChromaticBudget);
        ChromaticOutcome outcome = exact_chromatic(cayley_table(g), a.max_k, budget);
        if (outcome.result) {
            const ChromaticResult& r = *outcome.result;
            out << r.value << "\nlower bound: " << to_string(r.lower_bound) << " (k=" << r.lower_bound_k
                << ")\nnodes: " << outcome.nodes << '\n';
            if (!a.out_path.empty())
                emit_json(chromatic_to_json(r, name), a.out_path, out);
            return 0;
        }
        const std::string upper = outcome.upper ? std::to_string(*outcome.upper) : "?";
        if (outcome.budget_exhausted) {
            out << "budget exhausted after " << outcome.nodes << " nodes\nbounds: " << outcome.lower
                << " <= chi <= " << upper << '\n';
            return exit_code_for(ErrorCode::BudgetExhausted);
        }
        out << "no coloring with at most " << (a.max_k > 0 ? a.max_k : chromatic_upper_limit(n))
            << " classes\nbounds: " << outcome.lower << " <= chi\n";
        return 0;
    }

    struct RenderArgs {
        std::string path;
        std::string format = "ascii";
        std::vector<std::string> highlight;
        std::string out_path;
    };

    int cmd_render(const RenderArgs& a, std::ostream& out)
    {
        const RenderFormat format = parse_render_format(a.format);
        std::vector<Highlight> highlight;
        for (const auto& h : a.highlight)
            highlight.push_back(parse_highlight(h));
        const Json j = read_json_file(a.path);
        const Certificate cert = certificate_from_json(j);

        std::string text;
        if (format == RenderFormat::Json)
            text = j.dump(2) + "\n";
        else if (format == RenderFormat::Ascii)
            text = render_ascii(cert);
        else
            text = render_latex(cert, highlight);

        if (a.out_path.empty()) {
            out << text;
        } else {
            std::ofstream f(a.out_path);
            if (!f)
                fail(ErrorCode::InvalidArgument, "cannot write " + a.out_path);
            f << text;
        }
        return 0;
    }

    struct TransversalArgs {
        std::string spec;
        std::string mode = "find";
        std::string budget;
        std::string out_path;
    };

    int cmd_transversal(const TransversalArgs& a, std::ostream& out, std::ostream& err)
    {
        const GroupSpec spec = parse_group_spec(a.spec);
        const FiniteGroup g = spec.build();
        const LatinSquare square = cayley_table(g);
        const std::uint64_t budget = resolve_budget(a.budget, kDefaultSearchBudget);

        auto status_exit = [](SearchStatus s) {
            return s == SearchStatus::BudgetExhausted ? exit_code_for(ErrorCode::BudgetExhausted) : 0;
        };
        if (a.mode == "find" || a.mode == "near") {
            const TransversalSearch s =
                a.mode == "find" ? find_transversal(square, budget) : find_near_transversal(square, budget);
            out << to_string(s.status) << " (" << s.nodes << " nodes)\n";
            if (s.status == SearchStatus::Found)
                out << cells_text(s.cells) << '\n';
            return status_exit(s.status);
        }
        if (a.mode == "max") {
            const MaxPartialTransversal m = max_partial_transversal(square, budget);
            out << "max partial transversal: " << m.size << (m.proven ? " (proven)" : " (lower bound only)") << '\n'
                << cells_text(m.witness) << '\n';
            return m.proven ? 0 : exit_code_for(ErrorCode::BudgetExhausted);
        }
        if (a.mode == "partition") {
            PartitionSearch p = partition_into_transversals(square, budget);
            std::ostream& info = a.out_path.empty() && p.coloring ? err : out;
            info << to_string(p.status) << " (" << p.nodes << " nodes)\n";
            if (p.coloring)
                emit_json(certificate_to_json(Certificate{spec.to_string(), std::move(*p.coloring),
                                                          "search-partition", {}}),
                          a.out_path, out);
            return status_exit(p.status);
        }
        fail(ErrorCode::InvalidArgument, "unknown transversal mode " + a.mode);
    }

}  // namespace

int exit_code_for(ErrorCode code)
{
    switch (code) {
    case ErrorCode::ParseError:
    case ErrorCode::InvalidArgument:
    case ErrorCode::NotPermutation:
    case ErrorCode::InvalidInputColoring: return 2;
    case ErrorCode::WrongGroupClass: return 3;
    case ErrorCode::BudgetExhausted:
    case ErrorCode::SearchExhausted: return 5;
    default: return 4;
    }
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Partial-transversal colorings of Cayley tables"};
    app.require_subcommand(1);

    ColorArgs color;
    auto* color_cmd = app.add_subcommand("color", "Build a verified coloring and write its certificate");
    color_cmd->add_option("spec", color.spec, "Group spec, e.g. Z2xZ3xZ3, D3, Dic3")->required();
    color_cmd->add_option("--method", color.method, "Construction")
        ->check(CLI::IsMember({"auto", "abelian", "product", "power-bound", "three-halves", "exact"}));
    color_cmd->add_option("-o,--out", color.out_path, "Certificate path (default: stdout)");
    color_cmd->add_option("--budget", color.budget, "Search node budget (e.g. 1e8)");

    std::string verify_path;
    auto* verify_cmd = app.add_subcommand("verify", "Check a certificate");
    verify_cmd->add_option("certificate", verify_path)->required();

    ChromaticArgs chrom;
    auto* chrom_cmd = app.add_subcommand("chromatic", "Bounds on, or the exact value of, the chromatic number");
    chrom_cmd->add_option("spec", chrom.spec)->required();
    chrom_cmd->add_flag("--exact", chrom.exact, "Run the exact solver");
    chrom_cmd->add_option("--max-k", chrom.max_k, "Largest class count to try (default 3n-3)");
    chrom_cmd->add_option("--budget", chrom.budget, "Solver node budget (e.g. 1e9)");
    chrom_cmd->add_option("-o,--out", chrom.out_path, "Write the result JSON here");

    RenderArgs render;
    auto* render_cmd = app.add_subcommand("render", "Render a certificate");
    render_cmd->add_option("certificate", render.path)->required();
    render_cmd->add_option("--format", render.format)->check(CLI::IsMember({"ascii", "latex", "json"}));
    render_cmd->add_option("--highlight", render.highlight, "TARGET:red|blue|bold, TARGET a class id, D<i>, X or Y");
    render_cmd->add_option("-o,--out", render.out_path);

    TransversalArgs tv;
    auto* tv_cmd = app.add_subcommand("transversal", "Transversal searches on a Cayley table");
    tv_cmd->add_option("spec", tv.spec)->required();
    tv_cmd->add_option("--mode", tv.mode)->check(CLI::IsMember({"find", "near", "max", "partition"}));
    tv_cmd->add_option("--budget", tv.budget);
    tv_cmd->add_option("-o,--out", tv.out_path, "Partition certificate path (default: stdout)");

    std::vector<std::string> reversed(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return 2;
    }

    try {
        if (color_cmd->parsed())
            return cmd_color(color, out, err);
        if (verify_cmd->parsed())
            return cmd_verify(verify_path, out);
        if (chrom_cmd->parsed())
            return cmd_chromatic(chrom, out);
        if (render_cmd->parsed())
            return cmd_render(render, out);
        if (tv_cmd->parsed())
            return cmd_transversal(tv, out, err);
    } catch (const Error& e) {
        err << e.what() << '\n';
        if (!e.cells().empty()) {
            err << "cells:";
            for (auto [r, c] : e.cells())
                err << " (" << r << "," << c << ")";
            err << '\n';
        }
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return 4;
    }
    return 2;
}

}  // namespace latincolor

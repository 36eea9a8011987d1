#include "subcomp/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "subcomp/canonical.hpp"
#include "subcomp/census.hpp"
#include "subcomp/classic.hpp"
#include "subcomp/families.hpp"
#include "subcomp/graph6.hpp"
#include "subcomp/invariants.hpp"
#include "subcomp/qpoly.hpp"

namespace subcomp {

namespace {

graph load_graph(const std::string& arg, std::istream& in) {
    if (arg == "-") {
        std::ostringstream buf;
        buf << in.rdbuf();
        return parse_graph_text(buf.str());
    }
    std::error_code ec;
    if (std::filesystem::is_regular_file(arg, ec)) {
        std::ifstream file(arg);
        if (!file) throw malformed_input_error("cannot read file \"" + arg + "\"");
        std::ostringstream buf;
        buf << file.rdbuf();
        return parse_graph_text(buf.str());
    }
    // not a file: treat as an inline graph6 string (or inline edge list)
    return parse_graph_text(arg);
}

bipoly compute_q(const graph& g, const std::string& method, int subset_bound,
                 std::size_t memo_cap) {
    if (method == "definition") return q_by_definition(g, subset_bound).poly;
    if (method == "recurrence") {
        memo_table memo(memo_cap);
        return q_by_recurrence(g, memo).poly;
    }
    // auto: subset enumeration is cache-friendly while 2^n stays small
    if (g.n <= 15 && g.n <= subset_bound) return q_by_definition(g, subset_bound).poly;
    memo_table memo(memo_cap);
    return q_by_recurrence(g, memo).poly;
}

void require_order8_optin(int order, bool enabled) {
    if (order >= 8 && !enabled)
        throw resource_limit_error(
            "order-8 runs take a 2^28 mask scan; pass --enable-order-8 to opt in");
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"subgraph component polynomial toolkit"};
    app.name("subcomp");
    app.require_subcommand(1);

    std::string input = "-", input_b;
    std::string poly_kind = "q", method = "auto", format = "text";
    int subset_bound = default_subset_order_bound;
    std::size_t memo_cap = memo_table::default_capacity;
    int census_order = 0, workers = 1;
    std::string out_path;
    bool order8 = false;
    std::string group_by = "q";
    std::string family_name;
    std::vector<int> family_params;

    auto* compute = app.add_subcommand("compute", "compute a polynomial of a graph");
    compute->add_option("input", input, "graph file, inline graph6/edge list, or - for stdin");
    compute->add_option("--poly", poly_kind, "q|tutte|matching|charpoly")
        ->check(CLI::IsMember({"q", "tutte", "matching", "charpoly"}));
    compute->add_option("--method", method, "q computation: definition|recurrence|auto")
        ->check(CLI::IsMember({"definition", "recurrence", "auto"}));
    compute->add_option("--format", format, "text|json")->check(CLI::IsMember({"text", "json"}));
    compute->add_option("--subset-bound", subset_bound, "max order for subset enumeration");
    compute->add_option("--memo-cap", memo_cap, "memo table capacity");

    auto* invariants = app.add_subcommand("invariants", "invariant report from Q vs direct");
    invariants->add_option("input", input, "graph file, inline graph6/edge list, or - for stdin");
    invariants->add_option("--format", format, "text|json")->check(CLI::IsMember({"text", "json"}));

    auto* compare = app.add_subcommand("compare", "compare q/charpoly/matching/tutte of two graphs");
    compare->add_option("a", input, "first graph")->required();
    compare->add_option("b", input_b, "second graph")->required();
    compare->add_option("--format", format, "text|json")->check(CLI::IsMember({"text", "json"}));

    auto* family = app.add_subcommand("family", "emit a named family graph as graph6");
    family->add_option("name", family_name,
                       "complete|path|cycle|star|complete_bipartite|tadpole|friendship|book|"
                       "hypercube|fan|fan_plus")
        ->required();
    family->add_option("params", family_params, "family parameters");

    auto* census = app.add_subcommand("census", "enumerate all graphs of an order, grouped by Q");
    census->add_option("--order", census_order, "graph order (0..8)")->required();
    census->add_option("--group-by", group_by, "grouping key (only: q)")
        ->check(CLI::IsMember({"q"}));
    census->add_option("--out", out_path, "census file path (default stdout)");
    census->add_option("--workers", workers, "parallel mask-scan workers");
    census->add_flag("--enable-order-8", order8, "opt in to the order-8 scan");

    auto* verify = app.add_subcommand("verify-unique", "check whether a graph is Q-unique");
    verify->add_option("input", input, "graph file, inline graph6/edge list, or - for stdin");
    verify->add_option("--workers", workers, "parallel mask-scan workers");
    verify->add_flag("--enable-order-8", order8, "opt in to the order-8 scan");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "subcomp: " << e.what() << "\n";
        return 1;
    }

    try {
        if (*compute) {
            graph g = load_graph(input, in);
            if (poly_kind == "q") {
                bipoly q = compute_q(g, method, subset_bound, memo_cap);
                out << (format == "json" ? q.to_json().dump() : q.to_text()) << "\n";
            } else if (poly_kind == "tutte") {
                bipoly t = tutte_poly(g);
                out << (format == "json" ? t.to_json().dump() : t.to_text()) << "\n";
            } else {
                unipoly p = poly_kind == "matching" ? matching_poly(g) : characteristic_poly(g);
                out << (format == "json" ? p.to_json().dump() : p.to_text()) << "\n";
            }
        } else if (*invariants) {
            invariant_report rep = full_report(load_graph(input, in));
            if (format == "json")
                out << report_to_json(rep).dump(2) << "\n";
            else
                out << report_to_text(rep);
        } else if (*compare) {
            graph a = load_graph(input, in);
            graph b = load_graph(input_b, in);
            power_comparison cmp = compare_powers(a, b);
            if (format == "json") {
                out << nlohmann::json{{"q_equal", cmp.q_equal},
                                      {"charpoly_equal", cmp.charpoly_equal},
                                      {"matching_equal", cmp.matching_equal},
                                      {"tutte_equal", cmp.tutte_equal}}
                           .dump()
                    << "\n";
            } else {
                auto word = [](bool eq) { return eq ? "equal" : "different"; };
                out << "q:        " << word(cmp.q_equal) << "\n";
                out << "charpoly: " << word(cmp.charpoly_equal) << "\n";
                out << "matching: " << word(cmp.matching_equal) << "\n";
                out << "tutte:    " << word(cmp.tutte_equal) << "\n";
            }
        } else if (*family) {
            graph g = make(parse_family_spec(family_name, family_params));
            out << graph6_encode(g) << "\n";
        } else if (*census) {
            require_order8_optin(census_order, order8);
            std::ostream* progress = census_order >= 8 ? &err : nullptr;
            q_class_table table = q_classes(census_order, workers, progress);
            std::size_t largest = 0, nonsingleton = 0;
            for (const auto& [q, members] : table.classes) {
                largest = std::max(largest, members.size());
                if (members.size() > 1) ++nonsingleton;
            }
            std::ostream* summary = &out;
            if (out_path.empty()) {
                write_census_file(table, out);
                summary = &err;
            } else {
                std::ofstream file(out_path);
                if (!file) throw malformed_input_error("cannot write file \"" + out_path + "\"");
                write_census_file(table, file);
            }
            *summary << "order " << table.order << ": " << table.graph_count << " graphs, "
                     << table.classes.size() << " Q-classes, largest class " << largest
                     << ", non-singleton classes " << nonsingleton << "\n";
            for (const auto& [q, members] : table.classes)
                if (members.size() > 1) {
                    *summary << "  class:";
                    for (const std::string& g6 : members) *summary << " " << g6;
                    *summary << "\n";
                }
        } else if (*verify) {
            graph g = load_graph(input, in);
            require_order8_optin(g.n, order8);
            uniqueness_report rep = verify_q_unique(g, workers);
            if (rep.unique) {
                out << rep.graph_g6 << " is Q-unique at order " << rep.order << "\n";
            } else {
                out << rep.graph_g6 << " is NOT Q-unique; Q-equivalent graphs:";
                for (const std::string& g6 : rep.co_members) out << " " << g6;
                out << "\n";
            }
        }
    } catch (const malformed_input_error& e) {
        err << "subcomp: " << e.what() << "\n";
        return 2;
    } catch (const invalid_argument_error& e) {
        err << "subcomp: " << e.what() << "\n";
        return 2;
    } catch (const precondition_error& e) {
        err << "subcomp: " << e.what() << "\n";
        return 2;
    } catch (const resource_limit_error& e) {
        err << "subcomp: " << e.what() << "\n";
        return 3;
    } catch (const internal_consistency_error& e) {
        err << "subcomp: internal consistency failure: " << e.what() << "\n";
        return 4;
    }
    return 0;
}

} // namespace subcomp

// stmod: graph vulnerability and spanning tree modulus from the command line.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "stmod/bench.hpp"
#include "stmod/errors.hpp"
#include "stmod/generators.hpp"
#include "stmod/io.hpp"
#include "stmod/modulus.hpp"
#include "stmod/oracle.hpp"
#include "stmod/report.hpp"
#include "stmod/vulnerability.hpp"

namespace {

enum ExitCode : int { ok = 0, usage = 1, parse = 2, domain = 3, guard = 4, invariant = 5 };

stmod::EdgeList load(const std::string& path) {
    if (path == "-") return stmod::parse_edge_list(std::cin);
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    return stmod::parse_edge_list(in);
}

void warn(const stmod::EdgeList& list) {
    for (const auto& w : list.warnings) std::cerr << "warning: " << w << '\n';
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + out_path + "'");
    out << text;
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream in(s);
    for (std::string item; std::getline(in, item, ',');)
        if (!item.empty()) out.push_back(item);
    return out;
}

std::string leading_digits(const std::string& digits, std::size_t k) {
    return digits.substr(0, std::min(k, digits.size()));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact graph vulnerability and spanning tree modulus"};
    app.require_subcommand(1);

    std::string input;
    std::string format = "text";
    std::string out_path;
    std::uint64_t seed = 0;
    std::size_t max_edges_check = stmod::oracle::max_modulus_edges;

    auto* vuln = app.add_subcommand("vuln", "Vulnerability theta(G) and a critical edge set");
    vuln->add_option("input", input, "Edge-list file, or - for stdin")->required();
    vuln->add_option("--format", format, "text | json")->check(CLI::IsMember({"text", "json"}));
    vuln->add_option("--out", out_path, "Write output to a file");

    auto* modulus = app.add_subcommand("modulus", "Spanning tree modulus, eta* and rho*");
    modulus->add_option("input", input, "Edge-list file, or - for stdin")->required();
    modulus->add_option("--format", format, "text | json | csv | dot")
        ->check(CLI::IsMember({"text", "json", "csv", "dot"}));
    modulus->add_option("--out", out_path, "Write output to a file");

    std::string family;
    std::size_t param = 0;
    auto* generate = app.add_subcommand("generate", "Emit an edge list for a benchmark family");
    generate->add_option("family", family, "complete | multipartite | gnp | geometric")
        ->required()
        ->check(CLI::IsMember({"complete", "multipartite", "gnp", "geometric"}));
    generate->add_option("param", param, "n (k for multipartite)")->required();
    auto* seed_opt = generate->add_option("--seed", seed, "Seed for the random families");
    generate->add_option("--out", out_path, "Write output to a file");

    std::string families = "complete,multipartite,gnp,geometric";
    std::string sizes;
    unsigned reps = 1;
    long long timeout_ms = 0;
    auto* bench = app.add_subcommand("bench", "Time the modulus on generated families");
    bench->add_option("--families", families, "Comma-separated family list");
    auto* sizes_opt = bench->add_option("--sizes", sizes, "Comma-separated sizes (default: per family)");
    bench->add_option("--reps", reps, "Repetitions per instance (fastest is kept)");
    bench->add_option("--seed", seed, "Base seed for the random families");
    bench->add_option("--out", out_path, "Write the CSV to a file");
    bench->add_option("--timeout-ms", timeout_ms, "Per-instance time limit; 0 disables");

    auto* stats = app.add_subcommand("stats", "Graph statistics including the spanning tree count");
    stats->add_option("input", input, "Edge-list file, or - for stdin")->required();
    stats->add_option("--format", format, "text | json")->check(CLI::IsMember({"text", "json"}));

    auto* check = app.add_subcommand("check", "Verify the modulus against brute-force oracles");
    check->add_option("input", input, "Edge-list file, or - for stdin")->required();
    check->add_option("--max-edges-check", max_edges_check, "Refuse larger graphs (exit 4)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? ok : usage;
    }

    try {
        if (vuln->parsed()) {
            const auto list = load(input);
            warn(list);
            const auto r = stmod::vulnerability(list.graph);
            emit(format == "json" ? stmod::report::vulnerability_json(list.graph, list.labels, r).dump(2) + "\n"
                                  : stmod::report::vulnerability_text(list.graph, list.labels, r),
                 out_path);
        } else if (modulus->parsed()) {
            const auto list = load(input);
            warn(list);
            const auto r = stmod::spanning_tree_modulus(list.graph);
            std::string text;
            if (format == "json")
                text = stmod::report::modulus_json(list.graph, list.labels, r).dump(2) + "\n";
            else if (format == "csv")
                text = stmod::report::modulus_csv(list.graph, list.labels, r);
            else if (format == "dot")
                text = stmod::report::modulus_dot(list.graph, list.labels, r);
            else
                text = stmod::report::modulus_text(list.graph, list.labels, r);
            emit(text, out_path);
        } else if (generate->parsed()) {
            if (stmod::gen::is_random_family(family) && seed_opt->count() == 0) {
                std::cerr << "error: --seed is required for the " << family << " family\n";
                return usage;
            }
            const auto g = stmod::gen::generate(family, param, seed);
            emit(stmod::format_edge_list(g), out_path);
        } else if (bench->parsed()) {
            stmod::bench::BenchConfig config;
            config.families = split_list(families);
            for (const auto& f : config.families)
                if (!stmod::gen::is_family(f)) throw CLI::ValidationError("--families", "unknown family " + f);
            if (sizes_opt->count() > 0) {
                for (const auto& s : split_list(sizes)) config.sizes.push_back(std::stoul(s));
                if (config.sizes.empty()) {
                    emit(std::string(stmod::bench::csv_header) + "\n", out_path);
                    return ok;
                }
            }
            config.reps = reps;
            config.seed = seed;
            if (timeout_ms > 0) config.timeout = std::chrono::milliseconds(timeout_ms);
            const auto records = stmod::bench::run_bench(config);
            emit(stmod::bench::to_csv(records), out_path);
            std::ostream& summary = out_path.empty() ? std::cerr : std::cout;
            for (const auto& f : config.families) {
                const auto slope = stmod::bench::fit_loglog_slope(records, f);
                summary << "# " << f << ": fitted exponent ";
                if (slope)
                    summary << *slope;
                else
                    summary << "n/a";
                summary << ", envelope exponent " << stmod::bench::envelope_exponent(f) << '\n';
            }
        } else if (stats->parsed()) {
            const auto list = load(input);
            warn(list);
            const auto& g = list.graph;
            const std::size_t components = stmod::component_count(g, g.all_edges());
            const std::string trees =
                components == 1 ? stmod::oracle::count_spanning_trees(g).str() : std::string("0");
            const std::size_t bridge_count = stmod::bridges(g).count();
            if (format == "json") {
                nlohmann::json doc{{"vertices", g.vertex_count()},
                                   {"edges", g.edge_count()},
                                   {"self_loops_dropped", list.self_loops_dropped},
                                   {"components", components},
                                   {"bridges", bridge_count},
                                   {"spanning_trees", trees},
                                   {"spanning_tree_digits", trees.size()}};
                std::cout << doc.dump(2) << '\n';
            } else {
                std::cout << "vertices = " << g.vertex_count() << '\n'
                          << "edges = " << g.edge_count() << '\n'
                          << "self-loops dropped = " << list.self_loops_dropped << '\n'
                          << "components = " << components << '\n'
                          << "bridges = " << bridge_count << '\n'
                          << "spanning trees = " << trees << '\n'
                          << "spanning tree digits = " << trees.size() << " (leading "
                          << leading_digits(trees, 2) << ")\n";
            }
        } else if (check->parsed()) {
            const auto list = load(input);
            warn(list);
            const auto& g = list.graph;
            if (g.edge_count() > max_edges_check)
                throw stmod::GuardError("check is limited to " + std::to_string(max_edges_check) +
                                        " edges; graph has " + std::to_string(g.edge_count()));
            const auto r = stmod::spanning_tree_modulus(g);
            auto report = stmod::oracle::verify_modulus(g, r);

            const auto brute = stmod::oracle::brute_modulus(g);
            report.checks.push_back({"brute_modulus", brute.eta_star == r.eta_star,
                                     "eta* against exhaustive peeling"});
            const auto bt = stmod::oracle::brute_theta(g);
            const auto v = stmod::vulnerability(g);
            bool member = false;
            for (const auto& s : bt.maximizers) member = member || s == v.critical;
            report.checks.push_back({"brute_theta", bt.theta == v.theta && member,
                                     "theta " + stmod::to_fraction_string(v.theta) + ", exhaustive " +
                                         stmod::to_fraction_string(bt.theta)});
            std::cout << stmod::report::verification_text(report);
            return report.all_passed() ? ok : invariant;
        }
    } catch (const stmod::ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return parse;
    } catch (const stmod::DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return domain;
    } catch (const stmod::GuardError& e) {
        std::cerr << "refused: " << e.what() << '\n';
        return guard;
    } catch (const stmod::InvariantViolation& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return invariant;
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return usage;
    }
    return ok;
}

// Command-line front end: parse graphs and weights, run the coloring engines
// and structure detectors, emit colorings, certificates and bound values in
// the stable text formats described in FORMATS.md.
//
// Exit codes: 0 ok, 2 parse/usage error, 3 rejection with witness, 4 budget
// exhausted.

#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "mgc/bounds.hpp"
#include "mgc/edge_color.hpp"
#include "mgc/io.hpp"
#include "mgc/multigraph.hpp"
#include "mgc/oracle.hpp"
#include "mgc/structure.hpp"
#include "mgc/vertex_color.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitWitness = 3;
constexpr int kExitBudget = 4;

mgc::Multigraph load_graph(const std::string& path) {
    if (path == "-") return mgc::parse_edge_list(std::cin);
    std::ifstream in(path);
    if (!in) throw mgc::GraphFormatError(0, "cannot open '" + path + "'");
    return mgc::parse_edge_list(in);
}

mgc::WeightVector load_weights(const std::string& source, int expected) {
    if (source == "ones") return mgc::WeightVector(static_cast<size_t>(expected), 1);
    mgc::WeightVector w;
    if (source == "-") {
        w = mgc::parse_weights(std::cin);
    } else {
        std::ifstream in(source);
        if (!in) throw mgc::GraphFormatError(0, "cannot open '" + source + "'");
        w = mgc::parse_weights(in);
    }
    if (static_cast<int>(w.size()) != expected)
        throw mgc::GraphFormatError(0, "expected " + std::to_string(expected) +
                                           " weights, got " + std::to_string(w.size()));
    return w;
}

void print_edge_coloring(const mgc::Multigraph& h, const mgc::EdgeColoring& col) {
    std::cout << col.palette_size() << '\n';
    for (mgc::EdgeId e = 0; e < h.edge_count(); ++e)
        std::cout << e << ' ' << col.color_of(e) << '\n';
}

int run_edge_color(const std::string& file) {
    mgc::Multigraph h = load_graph(file);
    mgc::EdgeColorResult result = mgc::color_edges(h);
    auto check = mgc::verify_edge_coloring(h, result.coloring);
    if (!check.ok) throw std::logic_error("self-check failed: " + check.violation);
    bool optimal = result.coloring.palette_size() == mgc::kappa_edge(h);
    std::cout << "palette " << result.coloring.palette_size() << '\n';
    std::cout << "optimal " << (optimal ? "true" : "false") << '\n';
    print_edge_coloring(h, result.coloring);
    for (const auto& cert : result.ring_certificates)
        std::cout << mgc::format_ring_certificate(cert) << '\n';
    for (const auto& cert : result.degree_certificates)
        std::cout << mgc::format_degree_certificate(cert) << '\n';
    for (const auto& cert : result.c5p_certificates)
        std::cout << mgc::format_certificate(cert) << '\n';
    return kExitOk;
}

int run_chi_index(const std::string& file) {
    mgc::Multigraph h = load_graph(file);
    std::cout << "delta " << h.max_degree() << '\n';
    std::cout << "gamma_prime " << mgc::format_rational(mgc::gamma_prime(h)) << '\n';
    std::cout << "kappa " << mgc::kappa_edge(h) << '\n';
    return kExitOk;
}

int run_vertex_color(const std::string& file, const std::string& weights_source,
                     const std::string& line_root) {
    mgc::Multigraph g = load_graph(file);
    mgc::WeightVector c = load_weights(weights_source, g.vertex_count());

    if (!line_root.empty()) {
        mgc::Multigraph root = load_graph(line_root);
        mgc::Multigraph check = mgc::line_graph(root);
        auto pair_set = [](const mgc::Multigraph& graph) {
            std::set<std::pair<int, int>> out;
            for (mgc::EdgeId e = 0; e < graph.edge_count(); ++e) {
                auto [u, v] = graph.endpoints(e);
                out.insert(std::minmax(u, v));
            }
            return out;
        };
        if (g.vertex_count() != check.vertex_count() || pair_set(g) != pair_set(check))
            throw mgc::GraphFormatError(0, "root graph's line graph does not match the input");
        auto result = mgc::color_line_graph_weighted(root, c);
        auto verified = mgc::verify_vertex_coloring(g, c, result.coloring);
        if (!verified.ok) throw std::logic_error("self-check failed: " + verified.violation);
        std::cout << "formula " << mgc::chi_weighted_formula(g, c) << '\n';
        std::cout << "optimal " << (result.optimal ? "true" : "false") << '\n';
        std::cout << mgc::format_vertex_coloring(result.coloring);
        for (const auto& cert : result.certificates)
            std::cout << mgc::format_certificate(cert) << '\n';
        return kExitOk;
    }

    auto result = mgc::color_tperfect_clawfree(g, c);
    if (!result.ok) {
        for (const auto& w : result.witnesses) std::cout << w.format() << '\n';
        return kExitWitness;
    }
    std::cout << "formula " << result.formula << '\n';
    std::cout << "optimal " << (result.optimal ? "true" : "false") << '\n';
    std::cout << mgc::format_vertex_coloring(result.coloring);
    return kExitOk;
}

int run_line_graph(const std::string& file) {
    mgc::Multigraph h = load_graph(file);
    mgc::write_edge_list(std::cout, mgc::line_graph(h));
    return kExitOk;
}

int run_root_graph(const std::string& file) {
    mgc::Multigraph g = load_graph(file);
    auto root = mgc::root_graph(g);
    if (!root) {
        std::cout << "NOT-A-LINE-GRAPH\n";
        return kExitOk;
    }
    mgc::write_edge_list(std::cout, root->graph);
    return kExitOk;
}

int run_analyze(const std::string& file, long long budget) {
    mgc::Multigraph h = load_graph(file);
    mgc::Multigraph simple = mgc::underlying_simple(h);

    if (auto claw = mgc::find_claw(simple)) {
        std::cout << "claw " << claw->center << ' ' << claw->leaves[0] << ' ' << claw->leaves[1]
                  << ' ' << claw->leaves[2] << '\n';
    } else {
        std::cout << "claw none\n";
    }
    if (auto k4 = mgc::find_k4(simple)) {
        std::cout << "k4 " << (*k4)[0] << ' ' << (*k4)[1] << ' ' << (*k4)[2] << ' ' << (*k4)[3]
                  << '\n';
    } else {
        std::cout << "k4 none\n";
    }
    auto diamonds = mgc::find_diamonds(simple);
    int small = 0;
    for (const auto& d : diamonds) small += d.small ? 1 : 0;
    std::cout << "diamonds " << diamonds.size() << " small " << small << " large "
              << diamonds.size() - small << '\n';
    std::cout << "odd_rings " << mgc::enumerate_odd_rings(h).size() << '\n';
    std::cout << "gamma_prime " << mgc::format_rational(mgc::gamma_prime(h)) << '\n';

    auto search = mgc::find_odd_c5p(h, budget);
    switch (search.status) {
        case mgc::SearchStatus::Found:
            std::cout << "odd_c5p found\n" << mgc::format_certificate(*search.certificate) << '\n';
            break;
        case mgc::SearchStatus::Absent:
            std::cout << "odd_c5p absent\n";
            break;
        case mgc::SearchStatus::Unknown:
            std::cout << "odd_c5p unknown\n";
            break;
    }
    if (auto k = mgc::recognize_square_of_circuit(simple))
        std::cout << "square_of_circuit k=" << *k << '\n';
    else
        std::cout << "square_of_circuit none\n";
    return search.status == mgc::SearchStatus::Unknown ? kExitBudget : kExitOk;
}

int run_gen(const std::string& kind, const std::vector<long long>& params) {
    auto need = [&](size_t count) {
        if (params.size() != count)
            throw CLI::ValidationError("gen " + kind + " takes " + std::to_string(count) +
                                       " parameter(s)");
        for (long long p : params)
            if (p < 0 || p > 1'000'000)
                throw CLI::ValidationError("generator parameter out of range");
    };
    mgc::Multigraph g;
    if (kind == "c5plus") {
        need(0);
        g = mgc::c5_plus();
    } else if (kind == "hm") {
        need(1);
        g = mgc::h_m(static_cast<int>(params[0]));
    } else if (kind == "petersen") {
        need(0);
        g = mgc::petersen();
    } else if (kind == "square") {
        need(1);
        g = mgc::square_of_circuit(static_cast<int>(params[0]));
    } else if (kind == "ring") {
        need(2);
        g = mgc::odd_ring_graph(static_cast<int>(params[0]), static_cast<int>(params[1]));
    } else {
        throw CLI::ValidationError("unknown generator '" + kind + "'");
    }
    mgc::write_edge_list(std::cout, g);
    return kExitOk;
}

int run_oracle(const std::string& which, const std::string& file,
               const std::string& weights_source, long long budget) {
    mgc::Multigraph g = load_graph(file);
    mgc::oracle::SearchBudget limits;
    limits.node_limit = budget;
    if (which == "chi-prime") {
        std::cout << "chi_prime " << mgc::oracle::brute_chi_prime(g, limits) << '\n';
    } else if (which == "chi") {
        if (weights_source.empty()) throw CLI::ValidationError("oracle chi needs --weights");
        mgc::WeightVector c = load_weights(weights_source, g.vertex_count());
        std::cout << "chi " << mgc::oracle::brute_chi_weighted(g, c, limits) << '\n';
    } else {
        throw CLI::ValidationError("unknown oracle '" + which + "'");
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"multigraph edge and weighted vertex coloring toolkit"};
    app.require_subcommand(1);

    std::string file, weights, line_root, gen_kind, oracle_which;
    std::vector<long long> gen_params;
    long long budget = 4'000'000;
    long long oracle_budget = 50'000'000;

    auto* edge_color = app.add_subcommand("edge-color", "color the edges of a multigraph");
    edge_color->add_option("file", file, "edge list file, or - for stdin")->required();

    auto* chi_index = app.add_subcommand("chi-index", "degree and odd-ring bounds");
    chi_index->add_option("file", file)->required();

    auto* vertex_color = app.add_subcommand("vertex-color", "weighted stable-set cover");
    vertex_color->add_option("file", file)->required();
    vertex_color->add_option("--weights", weights, "weight file, -, or 'ones'")->required();
    vertex_color->add_option("--line-root", line_root, "root graph to use as the base case");

    auto* line_graph_cmd = app.add_subcommand("line-graph", "print the line graph");
    line_graph_cmd->add_option("file", file)->required();

    auto* root_graph_cmd = app.add_subcommand("root-graph", "reconstruct a line graph's root");
    root_graph_cmd->add_option("file", file)->required();

    auto* analyze = app.add_subcommand("analyze", "structural report");
    analyze->add_option("file", file)->required();
    analyze->add_option("--budget", budget, "node budget for the subdivision search");

    auto* gen = app.add_subcommand("gen", "emit a named construction");
    gen->add_option("kind", gen_kind, "c5plus | hm M | petersen | square N | ring L MULT")
        ->required();
    gen->add_option("params", gen_params, "generator parameters");

    auto* oracle_cmd = app.add_subcommand("oracle", "exact brute-force values");
    oracle_cmd->add_option("which", oracle_which, "chi-prime | chi")->required();
    oracle_cmd->add_option("file", file)->required();
    oracle_cmd->add_option("--weights", weights);
    oracle_cmd->add_option("--budget", oracle_budget, "node budget");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitParse;
    }

    try {
        if (app.got_subcommand(edge_color)) return run_edge_color(file);
        if (app.got_subcommand(chi_index)) return run_chi_index(file);
        if (app.got_subcommand(vertex_color)) return run_vertex_color(file, weights, line_root);
        if (app.got_subcommand(line_graph_cmd)) return run_line_graph(file);
        if (app.got_subcommand(root_graph_cmd)) return run_root_graph(file);
        if (app.got_subcommand(analyze)) return run_analyze(file, budget);
        if (app.got_subcommand(gen)) return run_gen(gen_kind, gen_params);
        if (app.got_subcommand(oracle_cmd))
            return run_oracle(oracle_which, file, weights, oracle_budget);
    } catch (const mgc::GraphFormatError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kExitParse;
    } catch (const mgc::oracle::BudgetExceededError& e) {
        std::cerr << e.what() << '\n';
        return kExitBudget;
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << '\n';
        return kExitParse;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << '\n';
        return kExitParse;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return kExitParse;
}

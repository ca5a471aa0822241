// cmw: command-line front end. JSON goes to stdout, a one-line summary to
// stderr. Exit codes: 0 ok, 1 disagreement found, 2 bad input or usage,
// 3 budget exceeded.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "cmw/cm_oracle.hpp"
#include "cmw/covers.hpp"
#include "cmw/crossvalidate.hpp"
#include "cmw/generate.hpp"
#include "cmw/report.hpp"
#include "cmw/weight_conditions.hpp"

namespace {

using namespace cmw;

enum Exit { ok = 0, disagreement = 1, bad_input = 2, over_budget = 3 };

struct Common {
    std::optional<std::uint64_t> budget;
    unsigned field_char = 0;
    std::string route = "degree-complexes";
    bool timing = false;
};

struct Input {
    std::string text;
    WeightedGraph graph;
};

std::string read_all(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Budgets budgets_for(const Common& c) {
    auto b = Budgets::from_environment();
    if (c.budget) b.cover_search = b.faces = *c.budget;
    return b;
}

bool is_prime(unsigned p) {
    if (p < 2) return false;
    for (unsigned d = 2; d * d <= p; ++d) {
        if (p % d == 0) return false;
    }
    return true;
}

void emit(RunReport report, std::chrono::steady_clock::time_point start, bool timing) {
    if (timing) report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << report.to_json().dump(2) << "\n";
}

int run_analyze(const Input& in, const Common& c) {
    const auto start = std::chrono::steady_clock::now();
    const auto cert = classify_cm(in.graph);
    RunReport report{"analyze", input_digest(in.text), std::nullopt, {}, std::nullopt};
    report.results["vertices"] = in.graph.order();
    report.results["edges"] = in.graph.size();
    report.results["certificate"] = certificate_json(in.graph, cert);
    emit(std::move(report), start, c.timing);

    std::cerr << to_string(cert.verdict);
    if (cert.verdict == Verdict::out_of_scope) {
        std::cerr << " (girth " << *cert.girth << " < 5)";
    } else if (cert.not_pc) {
        std::cerr << " (not in class PC: " << to_string(cert.not_pc->reason) << ")";
    } else if (!cert.violations.empty()) {
        std::cerr << " (condition " << to_string(cert.violations.front().condition) << " fails)";
    }
    std::cerr << "\n";
    return ok;
}

int run_decompose(const Input& in, const Common& c) {
    const auto start = std::chrono::steady_clock::now();
    const auto budget = budgets_for(c).cover_search;
    const auto& g = in.graph;
    const auto covers = minimal_weighted_covers(g, budget);
    const auto ring = make_ring(g.labels());
    Json cover_list = Json::array(), components = Json::array();
    for (const auto& cv : covers) {
        cover_list.push_back(cover_json(g, cv));
        components.push_back(ideal_json(cover_ideal(ring, g, cv)));
    }
    const auto mix = unmixedness_of(covers);
    RunReport report{"decompose", input_digest(in.text), std::nullopt, {}, std::nullopt};
    report.results["covers"] = std::move(cover_list);
    report.results["decomposition"] = std::move(components);
    report.results["unmixed"] = mix.unmixed;
    report.results["height"] = mix.height;
    report.results["bigheight"] = mix.bigheight;
    emit(std::move(report), start, c.timing);
    std::cerr << covers.size() << " minimal weighted covers, " << (mix.unmixed ? "unmixed" : "mixed") << "\n";
    return ok;
}

int run_oracle(const Input& in, const Common& c) {
    const auto start = std::chrono::steady_clock::now();
    const auto route = c.route == "polarization" ? OracleRoute::polarization : OracleRoute::degree_complexes;
    const auto r = is_cm_oracle(in.graph, c.field_char, route, budgets_for(c).faces);
    RunReport report{"oracle", input_digest(in.text), std::nullopt, {}, std::nullopt};
    report.results = oracle_json(r, c.field_char, route);
    emit(std::move(report), start, c.timing);
    std::cerr << (r.cohen_macaulay ? "cohen-macaulay" : "not-cohen-macaulay");
    if (r.torsion_seen) std::cerr << " (torsion seen: field-dependent)";
    std::cerr << "\n";
    return ok;
}

int run_crossvalidate(CrossOptions o, const Common& c) {
    const auto start = std::chrono::steady_clock::now();
    const auto b = budgets_for(c);
    o.budgets = b;
    o.characteristic = c.field_char;
    o.route = c.route == "polarization" ? OracleRoute::polarization : OracleRoute::degree_complexes;
    const auto r = crossvalidate(o);
    std::ostringstream params;
    params << to_string(o.mode) << ' ' << o.count << ' ' << o.max_vertices << ' ' << o.max_weight << ' ' << o.seed
           << ' ' << o.characteristic << ' ' << c.route << ' ' << b.cover_search << ' ' << b.faces;
    RunReport report{"crossvalidate", input_digest(params.str()), o.seed, cross_json(o, r), std::nullopt};
    emit(std::move(report), start, c.timing);
    std::cerr << r.agreements << "/" << r.instances << " agree, " << r.disagreements.size() << " disagree, "
              << r.skipped << " skipped\n";
    return r.disagreements.empty() ? ok : disagreement;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cohen-Macaulay test for edge-weighted graphs of girth at least 5"};
    app.require_subcommand(1);

    Common common;
    std::string path;
    auto add_common = [&](CLI::App* sub, bool oracle_flags) {
        sub->add_option("--budget", common.budget, "Search/face budget (overrides CMW_BUDGET)")->check(CLI::PositiveNumber);
        sub->add_flag("--timing", common.timing, "Include wall-clock time in the report");
        if (oracle_flags) {
            sub->add_option("--field-char", common.field_char, "Field characteristic: 0 or a prime");
            sub->add_option("--route", common.route, "Oracle route")
                ->check(CLI::IsMember({"degree-complexes", "polarization"}));
        }
    };

    auto* analyze = app.add_subcommand("analyze", "Classify a graph document");
    analyze->add_option("path", path, "Graph document, or - for stdin")->required();
    add_common(analyze, false);

    auto* decompose = app.add_subcommand("decompose", "Minimal weighted covers and irreducible decomposition");
    decompose->add_option("path", path, "Graph document, or - for stdin")->required();
    add_common(decompose, false);

    auto* oracle = app.add_subcommand("oracle", "Exact Cohen-Macaulay test of the weighted edge ideal");
    oracle->add_option("path", path, "Graph document, or - for stdin")->required();
    add_common(oracle, true);

    CrossOptions cross;
    std::string mode = "theorem-vs-unmixed";
    auto* crossv = app.add_subcommand("crossvalidate", "Compare the classifier with an algebraic check");
    crossv->add_option("--mode", mode)->check(CLI::IsMember({"theorem-vs-unmixed", "theorem-vs-oracle"}));
    crossv->add_option("--count", cross.count);
    crossv->add_option("--max-vertices", cross.max_vertices)->check(CLI::Range(1, 64));
    crossv->add_option("--max-weight", cross.max_weight)->check(CLI::Range(1u, kMaxWeight));
    crossv->add_option("--seed", cross.seed);
    add_common(crossv, true);

    GeneratorOptions gen;
    std::string kind = "any-girth5", plan = "random";
    std::uint64_t seed = 1;
    auto* generate = app.add_subcommand("generate", "Print a random graph document");
    generate->add_option("--kind", kind)->check(CLI::IsMember({"class-pc", "any-girth5"}));
    generate->add_option("-n,--vertices", gen.vertices)->check(CLI::Range(0, 64));
    generate->add_option("--max-weight", gen.max_weight)->check(CLI::Range(1u, kMaxWeight));
    generate->add_option("--weights", plan, "random, satisfy, violate-a, violate-b or violate-c")
        ->check(CLI::IsMember({"random", "satisfy", "violate-a", "violate-b", "violate-c"}));
    generate->add_option("--seed", seed);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? ok : bad_input;
    }
    if (common.field_char != 0 && !is_prime(common.field_char)) {
        std::cerr << "error: --field-char must be 0 or a prime\n";
        return bad_input;
    }

    try {
        if (*generate) {
            gen.kind = *parse_graph_kind(kind);
            gen.weights = *parse_weight_plan(plan);
            Rng rng(seed);
            auto g = generate_graph(gen, rng);
            std::cout << graph_json(g).dump(2) << "\n";
            std::cerr << g.order() << " vertices, " << g.size() << " edges\n";
            return ok;
        }
        if (*crossv) {
            cross.mode = *parse_cross_mode(mode);
            return run_crossvalidate(cross, common);
        }
        Input in{read_all(path), WeightedGraph{}};
        in.graph = parse_graph(in.text);
        if (*analyze) return run_analyze(in, common);
        if (*decompose) return run_decompose(in, common);
        return run_oracle(in, common);
    } catch (const GraphError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return bad_input;
    } catch (const GenerationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return bad_input;
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return over_budget;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return bad_input;
    }
}

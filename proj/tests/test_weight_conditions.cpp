#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "cmw/covers.hpp"
#include "cmw/generate.hpp"
#include "cmw/weight_conditions.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace cmw;

namespace {

// Straight from the definition, trying every start and both directions.
std::set<VertexId> brute_balanced(const WeightedGraph& g, const FiveCycle& c) {
    std::set<VertexId> out;
    for (int s = 0; s < 5; ++s) {
        for (int dir : {1, 4}) {
            std::array<VertexId, 5> o{};
            for (int k = 0; k < 5; ++k) o[k] = c[(s + dir * k) % 5];
            auto m = g.weight(o[0], o[1]), p = g.weight(o[1], o[2]), q = g.weight(o[2], o[3]),
                 r = g.weight(o[3], o[4]), n = g.weight(o[4], o[0]);
            if (m == n && m <= p && p >= q && q <= r && r >= n) out.insert(o[0]);
        }
    }
    return out;
}

struct Brute {
    bool a = true, b = true, c = true;
};

Brute brute_conditions(const WeightedGraph& g, const PCWitness& pc) {
    Brute out;
    for (const auto& e : g.edges()) {
        if (g.degree(e.u) != 1 && g.degree(e.v) != 1) continue;
        for (auto end : {e.u, e.v}) {
            for (auto w : g.neighbors(end)) {
                if (g.weight(end, w) > e.w) out.a = false;
            }
        }
    }
    for (const auto& cyc : pc.basic_cycles) {
        bool found = false;
        for (auto x : brute_balanced(g, cyc)) {
            auto k = std::find(cyc.begin(), cyc.end(), x) - cyc.begin();
            found |= g.degree(cyc[(k + 1) % 5]) == 2 && g.degree(cyc[(k + 4) % 5]) == 2;
        }
        out.b &= found;
        for (int k = 0; k < 5; ++k) {
            auto x = cyc[k], y = cyc[(k + 1) % 5], v = cyc[(k + 4) % 5];
            auto low = std::min(g.weight(x, y), g.weight(x, v));
            for (auto w : g.neighbors(x)) {
                if (w != y && w != v && g.weight(x, w) > low) out.c = false;
            }
        }
    }
    return out;
}

// Scope check plus the conditions on every nontrivial component.
bool brute_verdict(const WeightedGraph& g) {
    for (const auto& comp : connected_components(g)) {
        if (comp.size() == 1) continue;
        auto h = induced_subgraph(g, comp);
        auto pc = classify_pc(h);
        if (!in_class_pc(pc)) return false;
        auto b = brute_conditions(h, std::get<PCWitness>(pc));
        if (!(b.a && b.b && b.c)) return false;
    }
    return true;
}

std::set<std::string> labels(const WeightedGraph& g, const std::vector<BalancedVertexWitness>& ws) {
    std::set<std::string> out;
    for (const auto& w : ws) out.insert(g.label(w.vertex));
    return out;
}

const PCWitness& witness(const WeightedGraph& g) {
    static thread_local PCClassification keep;
    keep = classify_pc(g);
    REQUIRE(in_class_pc(keep));
    return std::get<PCWitness>(keep);
}

std::vector<Condition> cited(const CMCertificate& cert) {
    std::vector<Condition> out;
    for (const auto& v : cert.violations) out.push_back(v.condition);
    return out;
}

}  // namespace

TEST_CASE("balanced vertices of C5") {
    const FiveCycle cyc{0, 1, 2, 3, 4};
    auto flat = fixtures::c5(1, 1, 1, 1, 1);
    CHECK(balanced_vertices(flat, cyc).size() == 5);

    auto alt = fixtures::c5(1, 2, 1, 2, 1);
    auto ws = balanced_vertices(alt, cyc);
    CHECK(labels(alt, ws).count("x"));
    for (const auto& w : ws) {
        if (w.vertex != 0) continue;
        CHECK(w.cycle[0] == 0);
        CHECK(w.m == 1);
        CHECK(w.n == 1);
        CHECK(w.p == 2);
    }

    CHECK(balanced_vertices(fixtures::c5(2, 1, 1, 1, 2), cyc).empty());
    CHECK_THROWS_AS(balanced_vertices(oracle::cycle({1, 1, 1, 1, 1, 1}), FiveCycle{0, 1, 2, 3, 4}),
                    std::invalid_argument);
}

TEST_CASE("conditions on small examples") {
    auto k2 = oracle::graph(2, {{0, 1, 7}});
    CHECK(check_weight_conditions(k2, witness(k2)).passes());

    // a - b - c - d with weights 1, 2, 1.
    auto p4 = WeightedGraph::build({"a", "b", "c", "d"}, {{"a", "b", 1}, {"b", "c", 2}, {"c", "d", 1}});
    auto r = check_weight_conditions(p4, witness(p4));
    REQUIRE(r.pendant.size() == 2);
    CHECK(r.balanced.empty());
    CHECK(r.cycle_branch.empty());
    CHECK(r.pendant[0].weights == std::vector<Weight>{1, 2});
    auto cert = classify_cm(p4);
    CHECK(cert.verdict == Verdict::not_cohen_macaulay);
    CHECK(cited(cert) == std::vector<Condition>{Condition::pendant, Condition::pendant});

    auto nob = fixtures::c5(2, 1, 1, 1, 2);
    auto rb = check_weight_conditions(nob, witness(nob));
    REQUIRE(rb.balanced.size() == 1);
    CHECK(rb.balanced[0].condition == Condition::balanced);
    CHECK_FALSE(is_unmixed(nob).unmixed);
}

TEST_CASE("condition (c) at a branch vertex") {
    // C5 x y z u v, stem s on x, leaf w on s.
    auto g = WeightedGraph::build({"x", "y", "z", "u", "v", "s", "w"}, {{"x", "y", 2},
                                                                        {"y", "z", 2},
                                                                        {"z", "u", 2},
                                                                        {"u", "v", 2},
                                                                        {"v", "x", 2},
                                                                        {"x", "s", 3},
                                                                        {"s", "w", 3}});
    auto r = check_weight_conditions(g, witness(g));
    CHECK(r.pendant.empty());
    CHECK(r.balanced.empty());
    REQUIRE(r.cycle_branch.size() == 1);
    const auto& v = r.cycle_branch[0];
    CHECK(g.label(v.location[0]) == "x");
    CHECK(g.label(v.location.back()) == "s");
    CHECK(v.weights == std::vector<Weight>{2, 2, 3});
    CHECK(classify_cm(g).verdict == Verdict::not_cohen_macaulay);
    CHECK_FALSE(is_unmixed(g).unmixed);

    auto fixed = g.reweighted([](const Edge&) { return 2; });
    CHECK(classify_cm(fixed).verdict == Verdict::cohen_macaulay);
    CHECK(is_unmixed(fixed).unmixed);
}

TEST_CASE("two cycles with three pendant pairs") {
    auto g = fixtures::two_cycles_three_pendants();
    auto cert = classify_cm(g);
    CHECK(cert.verdict == Verdict::cohen_macaulay);
    CHECK(cert.violations.empty());
    CHECK(labels(g, cert.balanced) == std::set<std::string>{"z", "c"});
    REQUIRE(cert.pc_witness);
    CHECK(cert.pc_witness->basic_cycles.size() == 2);
    CHECK(cert.pc_witness->pendant_matching.size() == 3);

    // Raising the link xa above xv breaks (c) at x.
    auto bad = g.reweighted([&](const Edge& e) {
        return g.label(e.u) == "x" && g.label(e.v) == "a" ? 3 : e.w;
    });
    auto bc = classify_cm(bad);
    CHECK(bc.verdict == Verdict::not_cohen_macaulay);
    auto conds = cited(bc);
    CHECK(std::count(conds.begin(), conds.end(), Condition::cycle_branch) >= 1);
}

TEST_CASE("scope and components") {
    CHECK(classify_cm(oracle::cycle({1, 1, 1})).verdict == Verdict::out_of_scope);
    CHECK(classify_cm(oracle::cycle({1, 1, 1, 1})).verdict == Verdict::out_of_scope);
    auto c7 = classify_cm(oracle::cycle({1, 2, 3, 1, 2, 3, 1}));
    CHECK(c7.verdict == Verdict::not_cohen_macaulay);
    REQUIRE(c7.not_pc);
    CHECK(c7.not_pc->reason == NotPCReason::uncovered);

    CHECK(classify_cm(oracle::graph(1, {})).verdict == Verdict::cohen_macaulay);
    CHECK(classify_cm(oracle::graph(0, {})).verdict == Verdict::cohen_macaulay);

    // C5 plus an isolated vertex and a K2.
    auto g = oracle::graph(8, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {3, 4, 1}, {4, 0, 1}, {6, 7, 5}});
    auto cert = classify_cm(g);
    CHECK(cert.verdict == Verdict::cohen_macaulay);
    CHECK(cert.componentwise);
    CHECK(cert.components.size() == 3);
    CHECK(cert.isolated_vertices == std::vector<VertexId>{5});
    CHECK(cert.girth == 5u);
}

TEST_CASE("a witness for another graph is rejected") {
    auto c5 = fixtures::c5(1, 1, 1, 1, 1);
    auto k2 = oracle::graph(2, {{0, 1, 1}});
    CHECK_THROWS_AS(check_weight_conditions(c5, witness(k2)), std::invalid_argument);
}

TEST_CASE("property: balanced vertices match the definition") {
    const FiveCycle cyc{0, 1, 2, 3, 4};
    for (int code = 0; code < 1024; ++code) {
        std::vector<std::int64_t> w;
        for (int k = 0, c = code; k < 5; ++k, c /= 4) w.push_back(1 + c % 4);
        auto g = fixtures::c5(w[0], w[1], w[2], w[3], w[4]);
        auto ws = balanced_vertices(g, cyc);
        std::set<VertexId> got;
        for (const auto& b : ws) {
            got.insert(b.vertex);
            CHECK(b.cycle[0] == b.vertex);
            CHECK(b.m == b.n);
        }
        CHECK(got.size() == ws.size());
        CHECK(got == brute_balanced(g, cyc));
    }
}

TEST_CASE("property: verdicts match direct evaluation of the conditions") {
    Rng rng(51);
    const WeightPlan plans[] = {WeightPlan::random, WeightPlan::satisfy, WeightPlan::violate_pendant,
                                WeightPlan::violate_balanced, WeightPlan::violate_cycle_branch};
    for (int i = 0; i < 400; ++i) {
        WeightedGraph g;
        if (i % 2 == 0) {
            GeneratorOptions opt;
            opt.kind = GraphKind::class_pc;
            opt.vertices = 2 + (i / 2) % 15;
            opt.max_weight = 5;
            opt.weights = plans[(i / 2) % 5];
            try {
                g = generate_graph(opt, rng);
            } catch (const GenerationError&) {
                continue;
            }
        } else {
            g = random_girth5_graph(1 + i % 14, 4, rng);
        }
        INFO(serialize_graph(g));
        auto cert = classify_cm(g);
        REQUIRE(cert.verdict != Verdict::out_of_scope);
        CHECK((cert.verdict == Verdict::cohen_macaulay) == brute_verdict(g));

        auto pc = classify_pc(g);
        if (!in_class_pc(pc)) continue;
        const auto& w = std::get<PCWitness>(pc);
        auto r = check_weight_conditions(g, w);
        auto b = brute_conditions(g, w);
        CHECK(r.pendant.empty() == b.a);
        CHECK(r.balanced.empty() == b.b);
        CHECK(r.cycle_branch.empty() == b.c);
        REQUIRE(r.qualifying.size() == w.basic_cycles.size());
        for (const auto& q : r.qualifying) {
            for (const auto& bw : q) {
                CHECK(g.degree(bw.cycle[1]) == 2);
                CHECK(g.degree(bw.cycle[4]) == 2);
            }
        }
    }
}

TEST_CASE("property: scaling and trivial weights") {
    Rng rng(52);
    for (int i = 0; i < 300; ++i) {
        auto g = random_girth5_graph(1 + i % 14, 4, rng);
        if (i % 3 == 0) {
            GeneratorOptions opt;
            opt.kind = GraphKind::class_pc;
            opt.vertices = 2 + i % 13;
            try {
                g = generate_graph(opt, rng);
            } catch (const GenerationError&) {
            }
        }
        INFO(serialize_graph(g));
        auto verdict = classify_cm(g).verdict;
        for (Weight k : {2u, 3u, 7u}) {
            CHECK(classify_cm(g.reweighted([k](const Edge& e) { return e.w * k; })).verdict == verdict);
        }
        // Equal weights: only the class PC test remains.
        auto flat = g.reweighted([](const Edge&) { return 3; });
        bool pc_everywhere = true;
        for (const auto& comp : connected_components(g)) {
            if (comp.size() > 1) pc_everywhere &= in_class_pc(classify_pc(induced_subgraph(g, comp)));
        }
        CHECK((classify_cm(flat).verdict == Verdict::cohen_macaulay) == pc_everywhere);
    }
}

TEST_CASE("property: violate plans cite the chosen condition") {
    Rng rng(53);
    const std::pair<WeightPlan, Condition> plans[] = {{WeightPlan::violate_pendant, Condition::pendant},
                                                      {WeightPlan::violate_balanced, Condition::balanced},
                                                      {WeightPlan::violate_cycle_branch, Condition::cycle_branch}};
    int made = 0;
    for (int i = 0; i < 150; ++i) {
        auto [plan, cond] = plans[i % 3];
        GeneratorOptions opt;
        opt.kind = GraphKind::class_pc;
        opt.vertices = 7 + i % 10;
        opt.weights = plan;
        WeightedGraph g;
        try {
            g = generate_graph(opt, rng);
        } catch (const GenerationError&) {
            continue;
        }
        ++made;
        INFO(serialize_graph(g));
        auto cert = classify_cm(g);
        CHECK(cert.verdict == Verdict::not_cohen_macaulay);
        auto conds = cited(cert);
        CHECK(std::count(conds.begin(), conds.end(), cond) >= 1);
    }
    CHECK(made >= 100);
}

#include "cmw/weight_conditions.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace cmw {

std::vector<BalancedVertexWitness> balanced_vertices(const WeightedGraph& g, const FiveCycle& cycle) {
    if (!is_induced_five_cycle(g, cycle)) {
        throw std::invalid_argument("not an induced 5-cycle of the graph");
    }
    std::vector<BalancedVertexWitness> out;
    for (std::size_t i = 0; i < 5; ++i) {
        FiveCycle c;
        for (std::size_t k = 0; k < 5; ++k) c[k] = cycle[(i + k) % 5];
        const Weight m = g.weight(c[0], c[1]);
        const Weight p = g.weight(c[1], c[2]);
        const Weight q = g.weight(c[2], c[3]);
        const Weight r = g.weight(c[3], c[4]);
        const Weight n = g.weight(c[4], c[0]);
        if (m == n && m <= p && p >= q && q <= r && r >= n) {
            out.push_back({c, c[0], m, p, q, r, n});
        }
    }
    return out;
}

std::string_view to_string(Condition c) {
    switch (c) {
        case Condition::pendant: return "a";
        case Condition::balanced: return "b";
        case Condition::cycle_branch: return "c";
    }
    return "?";
}

std::string_view to_string(Verdict v) {
    switch (v) {
        case Verdict::cohen_macaulay: return "cohen-macaulay";
        case Verdict::not_cohen_macaulay: return "not-cohen-macaulay";
        case Verdict::out_of_scope: return "out-of-scope";
    }
    return "?";
}

std::vector<Violation> ConditionReport::all() const {
    std::vector<Violation> out = pendant;
    out.insert(out.end(), balanced.begin(), balanced.end());
    out.insert(out.end(), cycle_branch.begin(), cycle_branch.end());
    return out;
}

ConditionReport check_weight_conditions(const WeightedGraph& g, const PCWitness& pc) {
    auto fresh = classify_pc(g);
    if (!in_class_pc(fresh) || std::get<PCWitness>(fresh) != pc) {
        throw std::invalid_argument("PC witness is inconsistent with the graph");
    }
    ConditionReport report;

    for (const auto& e : pc.pendant_matching) {
        for (VertexId t : {e.u, e.v}) {
            const VertexId s = e.other(t);
            for (auto w : g.neighbors(t)) {
                if (w == s) continue;
                const Weight f = g.weight(t, w);
                if (e.w < f) report.pendant.push_back({Condition::pendant, {s, t, w}, {e.w, f}});
            }
        }
    }

    for (const auto& c : pc.basic_cycles) {
        std::vector<BalancedVertexWitness> ok;
        for (auto& b : balanced_vertices(g, c)) {
            if (g.degree(b.cycle[1]) == 2 && g.degree(b.cycle[4]) == 2) ok.push_back(b);
        }
        if (ok.empty()) {
            std::vector<Weight> ws;
            for (std::size_t i = 0; i < 5; ++i) ws.push_back(g.weight(c[i], c[(i + 1) % 5]));
            report.balanced.push_back({Condition::balanced, {c.begin(), c.end()}, ws});
        }
        report.qualifying.push_back(std::move(ok));

        for (std::size_t i = 0; i < 5; ++i) {
            const VertexId x = c[i];
            if (g.degree(x) < 3) continue;
            const VertexId y = c[(i + 1) % 5];
            const VertexId v = c[(i + 4) % 5];
            const Weight wy = g.weight(x, y), wv = g.weight(x, v);
            for (auto w : g.neighbors(x)) {
                if (w == y || w == v) continue;
                const Weight ww = g.weight(x, w);
                if (std::min(wy, wv) < ww) {
                    report.cycle_branch.push_back({Condition::cycle_branch, {x, y, v, w}, {wy, wv, ww}});
                }
            }
        }
    }
    return report;
}

namespace {

template <class Range>
std::vector<VertexId> lift(const Range& local, const std::vector<VertexId>& to_global) {
    std::vector<VertexId> out;
    for (auto v : local) out.push_back(to_global[v]);
    return out;
}

FiveCycle lift_cycle(const FiveCycle& c, const std::vector<VertexId>& to_global) {
    FiveCycle out;
    for (std::size_t i = 0; i < 5; ++i) out[i] = to_global[c[i]];
    return out;
}

Edge lift_edge(const Edge& e, const std::vector<VertexId>& to_global) {
    return {to_global[e.u], to_global[e.v], e.w};
}

PCWitness lift_witness(const PCWitness& w, const std::vector<VertexId>& to_global) {
    PCWitness out;
    out.pendant_vertices = lift(w.pendant_vertices, to_global);
    out.cycle_vertices = lift(w.cycle_vertices, to_global);
    for (const auto& e : w.pendant_matching) out.pendant_matching.push_back(lift_edge(e, to_global));
    for (const auto& c : w.basic_cycles) out.basic_cycles.push_back(lift_cycle(c, to_global));
    return out;
}

BalancedVertexWitness lift_balanced(BalancedVertexWitness b, const std::vector<VertexId>& to_global) {
    b.cycle = lift_cycle(b.cycle, to_global);
    b.vertex = to_global[b.vertex];
    return b;
}

ConditionReport lift_report(const ConditionReport& r, const std::vector<VertexId>& to_global) {
    ConditionReport out;
    auto lift_all = [&](const std::vector<Violation>& in, std::vector<Violation>& dst) {
        for (const auto& v : in) dst.push_back({v.condition, lift(v.location, to_global), v.weights});
    };
    lift_all(r.pendant, out.pendant);
    lift_all(r.balanced, out.balanced);
    lift_all(r.cycle_branch, out.cycle_branch);
    for (const auto& per_cycle : r.qualifying) {
        std::vector<BalancedVertexWitness> lifted;
        for (const auto& b : per_cycle) lifted.push_back(lift_balanced(b, to_global));
        out.qualifying.push_back(std::move(lifted));
    }
    return out;
}

}  // namespace

CMCertificate classify_cm(const WeightedGraph& g) {
    CMCertificate cert;
    cert.girth = girth(g);
    if (cert.girth && *cert.girth < 5) {
        cert.verdict = Verdict::out_of_scope;
        return cert;
    }

    bool all_cm = true;
    bool all_structured = true;
    PCWitness merged;
    for (const auto& comp : connected_components(g)) {
        ComponentResult res;
        res.vertices = comp;
        if (comp.size() == 1) {
            res.single_vertex = true;
            res.cohen_macaulay = true;
            cert.isolated_vertices.push_back(comp.front());
            cert.components.push_back(std::move(res));
            continue;
        }
        const auto sub = induced_subgraph(g, comp);
        auto pc = classify_pc(sub);
        if (auto* bad = std::get_if<NotPC>(&pc)) {
            NotPC lifted{bad->reason, lift(bad->vertices, comp)};
            if (!cert.not_pc) cert.not_pc = lifted;
            res.not_pc = std::move(lifted);
            all_cm = false;
            all_structured = false;
            cert.components.push_back(std::move(res));
            continue;
        }
        const auto& local = std::get<PCWitness>(pc);
        auto report = lift_report(check_weight_conditions(sub, local), comp);
        auto witness = lift_witness(local, comp);

        for (const auto& per_cycle : report.qualifying) {
            if (per_cycle.empty()) continue;
            auto best = std::min_element(per_cycle.begin(), per_cycle.end(), [&](const auto& a, const auto& b) {
                return g.label(a.vertex) < g.label(b.vertex);
            });
            cert.balanced.push_back(*best);
        }
        auto violations = report.all();
        cert.violations.insert(cert.violations.end(), violations.begin(), violations.end());

        res.cohen_macaulay = report.passes();
        all_cm = all_cm && res.cohen_macaulay;

        auto append = [](auto& dst, const auto& src) { dst.insert(dst.end(), src.begin(), src.end()); };
        append(merged.pendant_vertices, witness.pendant_vertices);
        append(merged.cycle_vertices, witness.cycle_vertices);
        append(merged.pendant_matching, witness.pendant_matching);
        append(merged.basic_cycles, witness.basic_cycles);

        res.pc = std::move(witness);
        res.conditions = std::move(report);
        cert.components.push_back(std::move(res));
    }
    cert.componentwise = cert.components.size() > 1;
    if (all_structured) {
        std::sort(merged.pendant_vertices.begin(), merged.pendant_vertices.end());
        std::sort(merged.cycle_vertices.begin(), merged.cycle_vertices.end());
        std::sort(merged.basic_cycles.begin(), merged.basic_cycles.end());
        std::sort(merged.pendant_matching.begin(), merged.pendant_matching.end(),
                  [](const Edge& a, const Edge& b) { return std::tie(a.u, a.v) < std::tie(b.u, b.v); });
        cert.pc_witness = std::move(merged);
    }
    cert.verdict = all_cm ? Verdict::cohen_macaulay : Verdict::not_cohen_macaulay;
    return cert;
}

}  // namespace cmw

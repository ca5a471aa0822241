#include "cmw/report.hpp"

#include <algorithm>
#include <cstdio>

namespace cmw {

std::string input_digest(std::string_view text) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char ch : text) {
        h ^= ch;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

namespace {

Json labels(const WeightedGraph& g, const std::vector<VertexId>& vs) {
    Json out = Json::array();
    for (auto v : vs) out.push_back(g.label(v));
    return out;
}

Json cycle_json(const WeightedGraph& g, const FiveCycle& c) { return labels(g, {c.begin(), c.end()}); }

Json edge_json(const WeightedGraph& g, const Edge& e) {
    return Json{{"u", g.label(e.u)}, {"v", g.label(e.v)}, {"w", e.w}};
}

Json witness_json(const WeightedGraph& g, const PCWitness& w) {
    Json matching = Json::array(), cycles = Json::array();
    for (const auto& e : w.pendant_matching) matching.push_back(edge_json(g, e));
    for (const auto& c : w.basic_cycles) cycles.push_back(cycle_json(g, c));
    Json out;
    out["pendant_vertices"] = labels(g, w.pendant_vertices);
    out["cycle_vertices"] = labels(g, w.cycle_vertices);
    out["pendant_matching"] = std::move(matching);
    out["basic_cycles"] = std::move(cycles);
    return out;
}

Json not_pc_json(const WeightedGraph& g, const NotPC& n) {
    Json out;
    out["reason"] = to_string(n.reason);
    out["vertices"] = labels(g, n.vertices);
    return out;
}

Json balanced_json(const WeightedGraph& g, const BalancedVertexWitness& b) {
    Json out;
    out["vertex"] = g.label(b.vertex);
    out["cycle"] = cycle_json(g, b.cycle);
    out["weights"] = {b.m, b.p, b.q, b.r, b.n};
    return out;
}

Json violation_json(const WeightedGraph& g, const Violation& v) {
    Json out;
    out["condition"] = to_string(v.condition);
    out["location"] = labels(g, v.location);
    out["weights"] = v.weights;
    return out;
}

}  // namespace

Json certificate_json(const WeightedGraph& g, const CMCertificate& cert) {
    Json out;
    out["verdict"] = to_string(cert.verdict);
    out["girth"] = cert.girth ? Json(*cert.girth) : Json(nullptr);
    if (cert.verdict == Verdict::out_of_scope) {
        out["out_of_scope"] = "girth below 5";
        return out;
    }
    out["pc"] = cert.pc_witness ? witness_json(g, *cert.pc_witness) : Json(nullptr);
    out["not_pc"] = cert.not_pc ? not_pc_json(g, *cert.not_pc) : Json(nullptr);
    out["isolated_vertices"] = labels(g, cert.isolated_vertices);

    Json conditions = nullptr;
    if (cert.pc_witness) {
        conditions = Json::object();
        for (auto c : {Condition::pendant, Condition::balanced, Condition::cycle_branch}) {
            conditions[std::string(to_string(c))] = std::none_of(
                cert.violations.begin(), cert.violations.end(), [&](const Violation& v) { return v.condition == c; });
        }
    }
    out["conditions"] = std::move(conditions);

    Json balanced = Json::array(), violations = Json::array(), components = Json::array();
    for (const auto& b : cert.balanced) balanced.push_back(balanced_json(g, b));
    for (const auto& v : cert.violations) violations.push_back(violation_json(g, v));
    for (const auto& c : cert.components) {
        Json comp;
        comp["vertices"] = labels(g, c.vertices);
        comp["class"] = c.single_vertex ? "vertex" : c.pc ? "pc" : "not-pc";
        comp["cohen_macaulay"] = c.cohen_macaulay;
        components.push_back(std::move(comp));
    }
    out["balanced"] = std::move(balanced);
    out["violations"] = std::move(violations);
    out["componentwise"] = cert.componentwise;
    out["components"] = std::move(components);
    return out;
}

Json cover_json(const WeightedGraph& g, const WeightedCover& c) {
    Json out;
    const auto support = c.support();
    out["support"] = labels(g, support);
    Json level = Json::object();
    for (auto v : support) level[g.label(v)] = c.level(v);
    out["level"] = std::move(level);
    return out;
}

Json ideal_json(const MonomialIdeal& ideal) {
    const auto& ring = ideal.ring();
    std::vector<std::size_t> order(ring.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](auto a, auto b) { return ring.name(a) < ring.name(b); });
    Json out = Json::array();
    for (const auto& m : ideal.generators()) {
        Json term = Json::object();
        for (auto i : order) {
            if (m[i]) term[ring.name(i)] = m[i];
        }
        out.push_back(std::move(term));
    }
    return out;
}

Json oracle_json(const OracleResult& r, Characteristic characteristic, OracleRoute route) {
    Json out;
    out["cohen_macaulay"] = r.cohen_macaulay;
    out["field_characteristic"] = characteristic;
    out["route"] = route == OracleRoute::polarization ? "polarization" : "degree-complexes";
    out["faces_examined"] = r.faces_examined;
    out["torsion_seen"] = r.torsion_seen;
    if (r.torsion_seen) out["warning"] = "integral torsion met; the verdict may depend on the field";
    return out;
}

Json graph_json(const WeightedGraph& g) { return Json::parse(serialize_graph(g)); }

Json cross_json(const CrossOptions& o, const CrossResult& r) {
    Json out;
    out["mode"] = to_string(o.mode);
    out["count"] = o.count;
    out["max_vertices"] = o.max_vertices;
    out["max_weight"] = o.max_weight;
    if (o.mode == CrossMode::theorem_vs_oracle) {
        out["field_characteristic"] = o.characteristic;
        out["route"] = o.route == OracleRoute::polarization ? "polarization" : "degree-complexes";
    }
    out["instances"] = r.instances;
    out["agreements"] = r.agreements;
    out["skipped"] = r.skipped;
    out["class_pc"] = r.class_pc;
    out["cohen_macaulay"] = r.cohen_macaulay;
    if (o.mode == CrossMode::theorem_vs_oracle) out["torsion_seen"] = r.torsion_seen;
    Json bad = Json::array();
    for (const auto& d : r.disagreements) {
        Json item;
        item["index"] = d.index;
        item["theorem"] = d.theorem;
        item["other"] = d.other;
        item["graph"] = graph_json(d.graph);
        bad.push_back(std::move(item));
    }
    out["disagreements"] = std::move(bad);
    return out;
}

Json RunReport::to_json() const {
    Json out;
    out["command"] = command;
    out["input_digest"] = input_digest;
    if (seed) out["seed"] = *seed;
    out["results"] = results;
    if (seconds) out["timing"] = Json{{"seconds", *seconds}};
    return out;
}

}  // namespace cmw

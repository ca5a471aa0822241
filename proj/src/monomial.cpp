#include "cmw/monomial.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace cmw {

Ring::Ring(std::vector<std::string> names) : names_(std::move(names)) {
    std::unordered_set<std::string> seen;
    for (const auto& n : names_) {
        if (!seen.insert(n).second) {
            throw std::invalid_argument("duplicate variable name: " + n);
        }
    }
}

std::size_t Ring::index_of(std::string_view name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) {
        throw std::out_of_range("unknown variable: " + std::string(name));
    }
    return static_cast<std::size_t>(it - names_.begin());
}

bool Ring::contains(std::string_view name) const {
    return std::find(names_.begin(), names_.end(), name) != names_.end();
}

RingPtr make_ring(std::vector<std::string> names) { return std::make_shared<const Ring>(std::move(names)); }

Monomial Monomial::of(const Ring& ring, std::initializer_list<std::pair<std::string_view, Exponent>> factors) {
    Monomial m(ring.size());
    for (const auto& [name, e] : factors) {
        m.exps_[ring.index_of(name)] += e;
    }
    return m;
}

std::uint64_t Monomial::degree() const { return std::accumulate(exps_.begin(), exps_.end(), std::uint64_t{0}); }

bool Monomial::is_one() const {
    return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
}

bool Monomial::is_squarefree() const {
    return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e <= 1; });
}

bool Monomial::divides(const Monomial& other) const {
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        if (exps_[i] > other.exps_[i]) return false;
    }
    return true;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a.nvars());
    for (std::size_t i = 0; i < a.nvars(); ++i) r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
    return r;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
    Monomial r(a.nvars());
    for (std::size_t i = 0; i < a.nvars(); ++i) r.exps_[i] = std::min(a.exps_[i], b.exps_[i]);
    return r;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r(a.nvars());
    for (std::size_t i = 0; i < a.nvars(); ++i) r.exps_[i] = a.exps_[i] + b.exps_[i];
    return r;
}

Monomial strip(const Monomial& a, const Monomial& b) {
    Monomial r(a.nvars());
    for (std::size_t i = 0; i < a.nvars(); ++i) r.exps_[i] = a.exps_[i] > b.exps_[i] ? a.exps_[i] - b.exps_[i] : 0;
    return r;
}

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
    std::vector<std::pair<std::uint64_t, Monomial>> keyed;
    keyed.reserve(gens.size());
    for (auto& g : gens) {
        auto d = g.degree();
        keyed.emplace_back(d, std::move(g));
    }
    std::sort(keyed.begin(), keyed.end());
    std::vector<Monomial> kept;
    for (auto& [d, g] : keyed) {
        bool redundant = false;
        for (const auto& k : kept) {
            if (k.divides(g)) {
                redundant = true;
                break;
            }
        }
        if (!redundant) kept.push_back(std::move(g));
    }
    // Already canonical: ascending degree, then exponent vector.
    return kept;
}

MonomialIdeal::MonomialIdeal(RingPtr ring) : ring_(std::move(ring)) {}

MonomialIdeal::MonomialIdeal(RingPtr ring, std::vector<Monomial> generators) : ring_(std::move(ring)) {
    for (const auto& g : generators) {
        if (g.nvars() != ring_->size()) {
            throw std::invalid_argument("monomial does not match the ring's variable count");
        }
    }
    gens_ = minimalize(std::move(generators));
}

bool MonomialIdeal::is_unit() const { return gens_.size() == 1 && gens_.front().is_one(); }

bool MonomialIdeal::is_squarefree() const {
    return std::all_of(gens_.begin(), gens_.end(), [](const Monomial& m) { return m.is_squarefree(); });
}

bool MonomialIdeal::contains(const Monomial& m) const {
    return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(m); });
}

bool MonomialIdeal::contains(const MonomialIdeal& other) const {
    return std::all_of(other.gens_.begin(), other.gens_.end(), [&](const Monomial& m) { return contains(m); });
}

bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
    return *a.ring_ == *b.ring_ && a.gens_ == b.gens_;
}

namespace {

void require_same_ring(const MonomialIdeal& a, const MonomialIdeal& b) {
    if (!(a.ring() == b.ring())) {
        throw std::invalid_argument("ideals live in different rings");
    }
}

MonomialIdeal edge_ideal_impl(const WeightedGraph& g, const RingPtr& ring, bool unit_weights) {
    std::vector<std::size_t> var(g.order());
    for (VertexId v = 0; v < g.order(); ++v) var[v] = ring->index_of(g.label(v));
    std::vector<Monomial> gens;
    gens.reserve(g.size());
    for (const auto& e : g.edges()) {
        Monomial m(ring->size());
        const Exponent w = unit_weights ? 1 : e.w;
        m[var[e.u]] = w;
        m[var[e.v]] = w;
        gens.push_back(std::move(m));
    }
    return MonomialIdeal(ring, std::move(gens));
}

}  // namespace

MonomialIdeal weighted_edge_ideal(const WeightedGraph& g) { return weighted_edge_ideal(g, make_ring(g.labels())); }

MonomialIdeal weighted_edge_ideal(const WeightedGraph& g, const RingPtr& ring) {
    return edge_ideal_impl(g, ring, false);
}

MonomialIdeal edge_ideal(const WeightedGraph& g) { return edge_ideal(g, make_ring(g.labels())); }

MonomialIdeal edge_ideal(const WeightedGraph& g, const RingPtr& ring) { return edge_ideal_impl(g, ring, true); }

MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& f) {
    std::vector<Monomial> gens;
    gens.reserve(ideal.generators().size());
    for (const auto& g : ideal.generators()) gens.push_back(strip(g, f));
    return MonomialIdeal(ideal.ring_ptr(), std::move(gens));
}

MonomialIdeal add(const MonomialIdeal& ideal, const Monomial& f) {
    auto gens = ideal.generators();
    gens.push_back(f);
    return MonomialIdeal(ideal.ring_ptr(), std::move(gens));
}

MonomialIdeal add(const MonomialIdeal& a, const MonomialIdeal& b) {
    require_same_ring(a, b);
    auto gens = a.generators();
    gens.insert(gens.end(), b.generators().begin(), b.generators().end());
    return MonomialIdeal(a.ring_ptr(), std::move(gens));
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
    require_same_ring(a, b);
    std::vector<Monomial> gens;
    gens.reserve(a.generators().size() * b.generators().size());
    for (const auto& x : a.generators()) {
        for (const auto& y : b.generators()) gens.push_back(lcm(x, y));
    }
    return MonomialIdeal(a.ring_ptr(), std::move(gens));
}

MonomialIdeal intersect_all(const std::vector<MonomialIdeal>& parts) {
    if (parts.empty()) {
        throw std::invalid_argument("intersection of an empty family");
    }
    MonomialIdeal acc = parts.front();
    for (std::size_t i = 1; i < parts.size(); ++i) acc = intersect(acc, parts[i]);
    return acc;
}

MonomialIdeal radical(const MonomialIdeal& ideal) {
    std::vector<Monomial> gens;
    gens.reserve(ideal.generators().size());
    for (const auto& g : ideal.generators()) {
        Monomial r(g.nvars());
        for (std::size_t i = 0; i < g.nvars(); ++i) r[i] = g[i] ? 1 : 0;
        gens.push_back(std::move(r));
    }
    return MonomialIdeal(ideal.ring_ptr(), std::move(gens));
}

Polarization polarize(const MonomialIdeal& ideal) {
    const auto& ring = ideal.ring();
    std::vector<Exponent> top(ring.size(), 0);
    for (const auto& g : ideal.generators()) {
        for (std::size_t i = 0; i < ring.size(); ++i) top[i] = std::max(top[i], g[i]);
    }

    std::unordered_set<std::string> taken(ring.names().begin(), ring.names().end());
    std::vector<std::string> names;
    std::vector<std::vector<std::size_t>> copies(ring.size());
    for (std::size_t i = 0; i < ring.size(); ++i) {
        const Exponent k = std::max<Exponent>(top[i], 1);
        std::string sep = "_";
        // Pick one separator for all copies of this variable.
        for (;;) {
            bool clash = false;
            for (Exponent j = 1; j <= k && !clash; ++j) clash = taken.count(ring.name(i) + sep + std::to_string(j)) > 0;
            if (!clash) break;
            sep += "_";
        }
        for (Exponent j = 1; j <= k; ++j) {
            auto name = ring.name(i) + sep + std::to_string(j);
            taken.insert(name);
            copies[i].push_back(names.size());
            names.push_back(std::move(name));
        }
    }
    auto expanded = make_ring(std::move(names));

    std::vector<Monomial> gens;
    gens.reserve(ideal.generators().size());
    for (const auto& g : ideal.generators()) {
        Monomial m(expanded->size());
        for (std::size_t i = 0; i < ring.size(); ++i) {
            for (Exponent j = 0; j < g[i]; ++j) m[copies[i][j]] = 1;
        }
        gens.push_back(std::move(m));
    }
    return {MonomialIdeal(expanded, std::move(gens)), std::move(copies)};
}

std::string to_string(const Ring& ring, const Monomial& m) {
    std::string out;
    for (std::size_t i = 0; i < m.nvars(); ++i) {
        if (m[i] == 0) continue;
        if (!out.empty()) out += '*';
        out += ring.name(i);
        if (m[i] > 1) out += '^' + std::to_string(m[i]);
    }
    return out.empty() ? "1" : out;
}

std::string to_string(const MonomialIdeal& ideal) {
    std::string out = "(";
    for (std::size_t i = 0; i < ideal.generators().size(); ++i) {
        if (i) out += ", ";
        out += to_string(ideal.ring(), ideal.generators()[i]);
    }
    return out + ")";
}

}  // namespace cmw

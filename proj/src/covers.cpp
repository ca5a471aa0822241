#include "cmw/covers.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace cmw {

WeightedCover WeightedCover::from_parts(std::size_t order, const std::vector<VertexId>& support,
                                        const std::map<VertexId, Weight>& levels) {
    std::vector<Weight> dense(order, 0);
    for (auto v : support) {
        if (v >= order) throw std::invalid_argument("support vertex outside the graph");
        auto it = levels.find(v);
        if (it == levels.end()) throw std::invalid_argument("support vertex without a level");
        if (it->second == 0) throw std::invalid_argument("levels must be positive");
        dense[v] = it->second;
    }
    for (const auto& [v, w] : levels) {
        if (v >= order || dense[v] == 0 || dense[v] != w) {
            throw std::invalid_argument("level defined off-support");
        }
    }
    return WeightedCover(std::move(dense));
}

std::vector<VertexId> WeightedCover::support() const {
    std::vector<VertexId> out;
    for (VertexId v = 0; v < levels_.size(); ++v) {
        if (levels_[v]) out.push_back(v);
    }
    return out;
}

std::size_t WeightedCover::support_size() const {
    return static_cast<std::size_t>(std::count_if(levels_.begin(), levels_.end(), [](Weight w) { return w != 0; }));
}

bool canonical_less(const WeightedCover& a, const WeightedCover& b) {
    auto sa = a.support(), sb = b.support();
    if (sa.size() != sb.size()) return sa.size() < sb.size();
    if (sa != sb) return sa < sb;
    return a.levels() < b.levels();
}

namespace {

void require_order(const WeightedGraph& g, const WeightedCover& c) {
    if (c.order() != g.order()) {
        throw std::invalid_argument("cover is sized for a different graph");
    }
}

inline bool covers_edge(Weight level, Weight w) { return level != 0 && level <= w; }

}  // namespace

bool is_weighted_cover(const WeightedGraph& g, const WeightedCover& c) {
    require_order(g, c);
    return std::all_of(g.edges().begin(), g.edges().end(), [&](const Edge& e) {
        return covers_edge(c.level(e.u), e.w) || covers_edge(c.level(e.v), e.w);
    });
}

bool cover_leq(const WeightedCover& a, const WeightedCover& b) {
    if (a.order() != b.order()) return false;
    for (VertexId v = 0; v < a.order(); ++v) {
        if (a.level(v) == 0) continue;
        if (b.level(v) == 0 || a.level(v) < b.level(v)) return false;
    }
    return true;
}

namespace {

// Some edge xw is covered by x and only by x; with `exact`, additionally at
// weight equal to delta(x), so that raising delta(x) uncovers it.
bool is_sole_coverer(const WeightedGraph& g, const std::vector<Weight>& level, VertexId x, bool exact) {
    const Weight lx = level[x];
    for (auto w : g.neighbors(x)) {
        const Weight we = g.weight(x, w);
        const bool hit = exact ? lx == we : lx <= we;
        if (hit && !covers_edge(level[w], we)) return true;
    }
    return false;
}

}  // namespace

bool is_minimal_cover(const WeightedGraph& g, const WeightedCover& c) {
    if (!is_weighted_cover(g, c)) return false;
    for (VertexId v = 0; v < g.order(); ++v) {
        if (c.level(v) && !is_sole_coverer(g, c.levels(), v, true)) return false;
    }
    return true;
}

bool is_minimal_support(const WeightedGraph& g, const WeightedCover& c) {
    if (!is_weighted_cover(g, c)) return false;
    for (VertexId v = 0; v < g.order(); ++v) {
        if (c.level(v) && !is_sole_coverer(g, c.levels(), v, false)) return false;
    }
    return true;
}

std::vector<Weight> incident_weights(const WeightedGraph& g, VertexId v) {
    std::vector<Weight> ws;
    for (auto w : g.neighbors(v)) ws.push_back(g.weight(v, w));
    std::sort(ws.begin(), ws.end());
    ws.erase(std::unique(ws.begin(), ws.end()), ws.end());
    return ws;
}

std::uint64_t cover_search_space(const WeightedGraph& g) {
    constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t total = 1;
    for (VertexId v = 0; v < g.order(); ++v) {
        const std::uint64_t k = incident_weights(g, v).size() + 1;
        if (total > kMax / k) return kMax;
        total *= k;
    }
    return total;
}

namespace {

// Backtracking over vertices in BFS order. Each vertex is absent or present
// at one of its incident weights. A partial assignment is cut as soon as an
// edge between decided vertices is uncovered, or a present vertex whose
// neighbours are all decided fails the sole-coverer test.
class CoverSearch {
public:
    CoverSearch(const WeightedGraph& g, bool exact) : g_(g), exact_(exact), level_(g.order(), 0) {
        const auto n = g.order();
        std::vector<char> seen(n, 0);
        for (VertexId s = 0; s < n; ++s) {
            if (seen[s]) continue;
            seen[s] = 1;
            std::size_t head = order_.size();
            order_.push_back(s);
            while (head < order_.size()) {
                auto a = order_[head++];
                for (auto b : g.neighbors(a)) {
                    if (!seen[b]) {
                        seen[b] = 1;
                        order_.push_back(b);
                    }
                }
            }
        }
        pos_.assign(n, 0);
        for (std::size_t k = 0; k < n; ++k) pos_[order_[k]] = k;
        closes_at_.assign(n, {});
        for (VertexId x = 0; x < n; ++x) {
            std::size_t last = pos_[x];
            for (auto w : g.neighbors(x)) last = std::max(last, pos_[w]);
            closes_at_[last].push_back(x);
        }
        options_.resize(n);
        for (VertexId v = 0; v < n; ++v) options_[v] = incident_weights(g, v);
    }

    std::vector<WeightedCover> run() {
        found_.clear();
        descend(0);
        std::sort(found_.begin(), found_.end(), canonical_less);
        return std::move(found_);
    }

private:
    void descend(std::size_t k) {
        if (k == order_.size()) {
            found_.emplace_back(level_);
            return;
        }
        const VertexId v = order_[k];
        try_level(k, v, 0);
        for (auto w : options_[v]) try_level(k, v, w);
        level_[v] = 0;
    }

    void try_level(std::size_t k, VertexId v, Weight lv) {
        level_[v] = lv;
        for (auto w : g_.neighbors(v)) {
            if (pos_[w] > k) continue;
            const Weight we = g_.weight(v, w);
            if (!covers_edge(lv, we) && !covers_edge(level_[w], we)) return;
        }
        for (auto x : closes_at_[k]) {
            if (level_[x] && !is_sole_coverer(g_, level_, x, exact_)) return;
        }
        descend(k + 1);
    }

    const WeightedGraph& g_;
    bool exact_;
    std::vector<Weight> level_;
    std::vector<VertexId> order_;
    std::vector<std::size_t> pos_;
    std::vector<std::vector<VertexId>> closes_at_;
    std::vector<std::vector<Weight>> options_;
    std::vector<WeightedCover> found_;
};

void check_budget(const WeightedGraph& g, std::uint64_t budget) {
    const auto space = cover_search_space(g);
    if (space > budget) {
        throw BudgetExceeded("cover search space " + std::to_string(space) + " exceeds budget " +
                             std::to_string(budget));
    }
}

}  // namespace

std::vector<WeightedCover> minimal_weighted_covers(const WeightedGraph& g, std::uint64_t budget) {
    check_budget(g, budget);
    return CoverSearch(g, true).run();
}

std::vector<WeightedCover> minimal_support_covers(const WeightedGraph& g, std::uint64_t budget) {
    check_budget(g, budget);
    return CoverSearch(g, false).run();
}

MonomialIdeal cover_ideal(const RingPtr& ring, const WeightedGraph& g, const WeightedCover& c) {
    require_order(g, c);
    std::vector<Monomial> gens;
    for (VertexId v = 0; v < g.order(); ++v) {
        if (!c.level(v)) continue;
        Monomial m(ring->size());
        m[ring->index_of(g.label(v))] = c.level(v);
        gens.push_back(std::move(m));
    }
    return MonomialIdeal(ring, std::move(gens));
}

std::vector<MonomialIdeal> irreducible_decomposition(const WeightedGraph& g, std::uint64_t budget) {
    auto ring = make_ring(g.labels());
    std::vector<MonomialIdeal> parts;
    for (const auto& c : minimal_weighted_covers(g, budget)) parts.push_back(cover_ideal(ring, g, c));
    return parts;
}

Unmixedness unmixedness_of(const std::vector<WeightedCover>& minimal_covers) {
    std::size_t lo = std::numeric_limits<std::size_t>::max(), hi = 0;
    for (const auto& c : minimal_covers) {
        lo = std::min(lo, c.support_size());
        hi = std::max(hi, c.support_size());
    }
    if (minimal_covers.empty()) lo = 0;
    return {lo == hi, lo, hi};
}

Unmixedness is_unmixed(const WeightedGraph& g, std::uint64_t budget) {
    return unmixedness_of(minimal_weighted_covers(g, budget));
}

}  // namespace cmw

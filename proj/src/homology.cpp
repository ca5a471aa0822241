#include "cmw/homology.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include <boost/multiprecision/cpp_int.hpp>

namespace cmw {

namespace {

std::vector<VertexMask> maximal_only(std::vector<VertexMask> sets) {
    std::sort(sets.begin(), sets.end(),
              [](VertexMask a, VertexMask b) { return std::popcount(a) > std::popcount(b) || (std::popcount(a) == std::popcount(b) && a < b); });
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    std::vector<VertexMask> kept;
    for (auto s : sets) {
        bool inside = std::any_of(kept.begin(), kept.end(), [&](VertexMask k) { return (s & ~k) == 0; });
        if (!inside) kept.push_back(s);
    }
    std::sort(kept.begin(), kept.end());
    return kept;
}

}  // namespace

SimplicialComplex::SimplicialComplex(std::size_t nvertices) : nvertices_(nvertices) {
    if (nvertices > 64) throw BudgetExceeded("simplicial complexes support at most 64 vertices");
}

SimplicialComplex::SimplicialComplex(std::size_t nvertices, std::vector<VertexMask> facets) : nvertices_(nvertices) {
    if (nvertices > 64) throw BudgetExceeded("simplicial complexes support at most 64 vertices");
    const VertexMask all = nvertices == 64 ? ~VertexMask{0} : (bit(nvertices) - 1);
    for (auto f : facets) {
        if (f & ~all) throw std::invalid_argument("facet uses a vertex outside the complex");
    }
    facets_ = maximal_only(std::move(facets));
}

SimplicialComplex SimplicialComplex::simplex(std::size_t nvertices) {
    const VertexMask all = nvertices == 64 ? ~VertexMask{0} : (bit(nvertices) - 1);
    return SimplicialComplex(nvertices, {all});
}

int SimplicialComplex::dimension() const {
    if (facets_.empty()) return -2;
    int best = 0;
    for (auto f : facets_) best = std::max(best, std::popcount(f));
    return best - 1;
}

bool SimplicialComplex::is_pure() const {
    if (facets_.empty()) return true;
    const int d = std::popcount(facets_.front());
    return std::all_of(facets_.begin(), facets_.end(), [&](VertexMask f) { return std::popcount(f) == d; });
}

bool SimplicialComplex::contains(VertexMask face) const {
    return std::any_of(facets_.begin(), facets_.end(), [&](VertexMask f) { return (face & ~f) == 0; });
}

VertexMask SimplicialComplex::used_vertices() const {
    VertexMask m = 0;
    for (auto f : facets_) m |= f;
    return m;
}

VertexMask SimplicialComplex::unused_vertices() const {
    const VertexMask all = nvertices_ == 64 ? ~VertexMask{0} : (bit(nvertices_) - 1);
    return all & ~used_vertices();
}

SimplicialComplex SimplicialComplex::link(VertexMask face) const {
    std::vector<VertexMask> out;
    for (auto f : facets_) {
        if ((face & ~f) == 0) out.push_back(f & ~face);
    }
    return SimplicialComplex(nvertices_, std::move(out));
}

std::optional<VertexId> SimplicialComplex::cone_apex() const {
    if (facets_.empty()) return std::nullopt;
    VertexMask common = facets_.front();
    for (auto f : facets_) common &= f;
    if (!common) return std::nullopt;
    return static_cast<VertexId>(std::countr_zero(common));
}

SimplicialComplex SimplicialComplex::cone() const {
    std::vector<VertexMask> out;
    for (auto f : facets_) out.push_back(f | bit(nvertices_));
    return SimplicialComplex(nvertices_ + 1, std::move(out));
}

std::vector<VertexMask> SimplicialComplex::faces(std::uint64_t budget) const {
    if (facets_.empty()) return {};
    const int top = dimension() + 1;
    std::vector<std::unordered_set<VertexMask>> by_size(static_cast<std::size_t>(top) + 1);
    std::uint64_t count = 0;
    auto add = [&](VertexMask f) {
        if (by_size[static_cast<std::size_t>(std::popcount(f))].insert(f).second && ++count > budget) {
            throw BudgetExceeded("face enumeration exceeds budget " + std::to_string(budget));
        }
    };
    for (auto f : facets_) add(f);
    for (int s = top; s >= 1; --s) {
        for (auto f : by_size[static_cast<std::size_t>(s)]) {
            for (VertexMask m = f; m; m &= m - 1) add(f & ~(m & -m));
        }
    }
    std::vector<VertexMask> out;
    out.reserve(count);
    for (auto& level : by_size) {
        std::vector<VertexMask> sorted(level.begin(), level.end());
        std::sort(sorted.begin(), sorted.end());
        out.insert(out.end(), sorted.begin(), sorted.end());
    }
    return out;
}

std::vector<std::uint64_t> SimplicialComplex::f_vector(std::uint64_t budget) const {
    std::vector<std::uint64_t> f(static_cast<std::size_t>(dimension() + 2), 0);
    for (auto face : faces(budget)) ++f[static_cast<std::size_t>(std::popcount(face))];
    return f;
}

std::size_t ReducedHomology::rank_at(int k) const {
    const auto i = static_cast<std::size_t>(k + 1);
    return k >= -1 && i < rank.size() ? rank[i] : 0;
}

bool ReducedHomology::torsion_at(int k) const {
    const auto i = static_cast<std::size_t>(k + 1);
    return k >= -1 && i < torsion.size() ? torsion[i] : false;
}

bool ReducedHomology::acyclic() const {
    return std::all_of(rank.begin(), rank.end(), [](std::size_t r) { return r == 0; }) &&
           std::none_of(torsion.begin(), torsion.end(), [](bool t) { return t; });
}

namespace {

using BigInt = boost::multiprecision::cpp_int;

struct Overflow {};

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
    return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
    return r;
}

inline BigInt checked_mul(const BigInt& a, const BigInt& b) { return a * b; }
inline BigInt checked_sub(const BigInt& a, const BigInt& b) { return a - b; }

template <class Int>
using SparseRow = std::vector<std::pair<std::size_t, Int>>;

template <class Int>
const Int* find_entry(const SparseRow<Int>& row, std::size_t col) {
    auto it = std::lower_bound(row.begin(), row.end(), col, [](const auto& e, std::size_t c) { return e.first < c; });
    return (it != row.end() && it->first == col) ? &it->second : nullptr;
}

// target -= factor * source
template <class Int>
SparseRow<Int> axpy(const SparseRow<Int>& target, const Int& factor, const SparseRow<Int>& source) {
    SparseRow<Int> out;
    out.reserve(target.size() + source.size());
    std::size_t i = 0, j = 0;
    while (i < target.size() || j < source.size()) {
        if (j == source.size() || (i < target.size() && target[i].first < source[j].first)) {
            out.push_back(target[i++]);
        } else if (i == target.size() || source[j].first < target[i].first) {
            Int v = checked_sub(Int(0), checked_mul(factor, source[j].second));
            out.emplace_back(source[j].first, v);
            ++j;
        } else {
            Int v = checked_sub(target[i].second, checked_mul(factor, source[j].second));
            if (v != 0) out.emplace_back(target[i].first, v);
            ++i;
            ++j;
        }
    }
    return out;
}

bool divisible(const BigInt& d, Characteristic p) { return p != 0 && (d % p) == 0; }

// Dense diagonalization of the residual block; returns the nonzero diagonal.
std::vector<BigInt> dense_diagonal(std::vector<std::vector<BigInt>> a) {
    std::vector<BigInt> diag;
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a.front().size() : 0;
    for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
        for (;;) {
            // Smallest nonzero entry of the trailing block becomes the pivot.
            std::size_t pr = rows, pc = cols;
            BigInt best;
            for (std::size_t i = t; i < rows; ++i) {
                for (std::size_t j = t; j < cols; ++j) {
                    if (a[i][j] == 0) continue;
                    BigInt mag = abs(a[i][j]);
                    if (pr == rows || mag < best) {
                        best = mag;
                        pr = i;
                        pc = j;
                    }
                }
            }
            if (pr == rows) return diag;
            std::swap(a[t], a[pr]);
            for (auto& row : a) std::swap(row[t], row[pc]);

            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (a[i][t] == 0) continue;
                BigInt q = a[i][t] / a[t][t];
                for (std::size_t j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
                if (a[i][t] != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (a[t][j] == 0) continue;
                BigInt q = a[t][j] / a[t][t];
                for (std::size_t i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
                if (a[t][j] != 0) clean = false;
            }
            if (clean) break;
        }
        diag.push_back(abs(a[t][t]));
    }
    return diag;
}

template <class Int>
Diagonalization diagonalize_impl(std::size_t ncols, std::vector<SparseRow<Int>> rows, Characteristic p) {
    Diagonalization out;
    std::vector<std::vector<std::size_t>> col_rows(ncols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (const auto& [c, v] : rows[r]) col_rows[c].push_back(r);
    }
    std::vector<char> active(rows.size(), 1);

    // Unit pivots: clear the pivot column by row operations; the pivot row
    // is then cleared by column operations that touch no other row.
    bool progress = true;
    while (progress) {
        progress = false;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (!active[r] || rows[r].empty()) continue;
            auto it = std::find_if(rows[r].begin(), rows[r].end(), [](const auto& e) { return e.second == 1 || e.second == -1; });
            if (it == rows[r].end()) continue;
            const std::size_t c = it->first;
            const Int u = it->second;
            active[r] = 0;
            ++out.rank;
            ++out.rational_rank;
            auto touched = col_rows[c];
            std::sort(touched.begin(), touched.end());
            touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
            for (auto r2 : touched) {
                if (!active[r2]) continue;
                const Int* v = find_entry(rows[r2], c);
                if (!v) continue;
                const Int factor = checked_mul(*v, u);
                auto updated = axpy(rows[r2], factor, rows[r]);
                for (const auto& [c2, val] : updated) {
                    if (!find_entry(rows[r2], c2)) col_rows[c2].push_back(r2);
                }
                rows[r2] = std::move(updated);
            }
            col_rows[c].clear();
            progress = true;
        }
    }

    std::vector<std::size_t> live_cols;
    std::vector<std::size_t> live_rows;
    {
        std::vector<char> used(ncols, 0);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (!active[r] || rows[r].empty()) continue;
            live_rows.push_back(r);
            for (const auto& [c, v] : rows[r]) used[c] = 1;
        }
        for (std::size_t c = 0; c < ncols; ++c) {
            if (used[c]) live_cols.push_back(c);
        }
    }
    if (live_rows.empty()) return out;

    std::vector<std::size_t> col_pos(ncols, 0);
    for (std::size_t j = 0; j < live_cols.size(); ++j) col_pos[live_cols[j]] = j;
    std::vector<std::vector<BigInt>> dense(live_rows.size(), std::vector<BigInt>(live_cols.size()));
    for (std::size_t i = 0; i < live_rows.size(); ++i) {
        for (const auto& [c, v] : rows[live_rows[i]]) dense[i][col_pos[c]] = BigInt(v);
    }
    for (const auto& d : dense_diagonal(std::move(dense))) {
        ++out.rational_rank;
        if (!divisible(d, p)) ++out.rank;
        if (d > 1) out.torsion = true;
    }
    return out;
}

}  // namespace

Diagonalization diagonalize(std::size_t ncols, std::vector<std::vector<std::pair<std::size_t, std::int64_t>>> rows,
                            Characteristic characteristic) {
    for (auto& row : rows) {
        std::sort(row.begin(), row.end());
        std::erase_if(row, [](const auto& e) { return e.second == 0; });
    }
    try {
        return diagonalize_impl<std::int64_t>(ncols, rows, characteristic);
    } catch (const Overflow&) {
        std::vector<SparseRow<BigInt>> big(rows.size());
        for (std::size_t r = 0; r < rows.size(); ++r) {
            for (const auto& [c, v] : rows[r]) big[r].emplace_back(c, BigInt(v));
        }
        return diagonalize_impl<BigInt>(ncols, std::move(big), characteristic);
    }
}

ReducedHomology reduced_homology_of_faces(const std::vector<VertexMask>& faces, Characteristic characteristic) {
    ReducedHomology h;
    if (faces.empty()) return h;
    int top = 0;
    for (auto f : faces) top = std::max(top, std::popcount(f));
    // Size s faces are the (s-1)-dimensional chains.
    std::vector<std::vector<VertexMask>> by_size(static_cast<std::size_t>(top) + 1);
    for (auto f : faces) by_size[static_cast<std::size_t>(std::popcount(f))].push_back(f);
    std::vector<std::unordered_map<VertexMask, std::size_t>> index(by_size.size());
    for (std::size_t s = 0; s < by_size.size(); ++s) {
        for (std::size_t i = 0; i < by_size[s].size(); ++i) index[s][by_size[s][i]] = i;
    }

    // boundary[s] : chains of size s -> chains of size s-1, for s >= 1.
    std::vector<Diagonalization> boundary(by_size.size() + 1);
    for (std::size_t s = 1; s < by_size.size(); ++s) {
        std::vector<std::vector<std::pair<std::size_t, std::int64_t>>> rows;
        rows.reserve(by_size[s].size());
        for (auto f : by_size[s]) {
            std::vector<std::pair<std::size_t, std::int64_t>> row;
            std::int64_t sign = 1;
            for (VertexMask m = f; m; m &= m - 1) {
                const VertexMask low = m & -m;
                auto it = index[s - 1].find(f & ~low);
                if (it == index[s - 1].end()) throw std::invalid_argument("face family is not closed under subsets");
                row.emplace_back(it->second, sign);
                sign = -sign;
            }
            rows.push_back(std::move(row));
        }
        boundary[s] = diagonalize(by_size[s - 1].size(), std::move(rows), characteristic);
    }

    for (std::size_t s = 0; s < by_size.size(); ++s) {
        const std::size_t out_rank = s >= 1 ? boundary[s].rank : 0;
        const std::size_t in_rank = s + 1 < by_size.size() ? boundary[s + 1].rank : 0;
        h.rank.push_back(by_size[s].size() - out_rank - in_rank);
        h.torsion.push_back(s + 1 < by_size.size() && boundary[s + 1].torsion);
    }
    return h;
}

ReducedHomology reduced_homology(const SimplicialComplex& k, Characteristic characteristic, std::uint64_t budget) {
    return reduced_homology_of_faces(k.faces(budget), characteristic);
}

}  // namespace cmw

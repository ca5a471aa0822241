#pragma once

// Exact monomial ideal arithmetic over a named set of variables.

#include <cstdint>
#include <initializer_list>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cmw/graph.hpp"

namespace cmw {

using Exponent = std::uint32_t;

/// Ordered, duplicate-free variable names of a polynomial ring.
class Ring {
public:
    explicit Ring(std::vector<std::string> names);

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_.at(i); }
    const std::vector<std::string>& names() const { return names_; }
    /// Throws std::out_of_range for an unknown name.
    std::size_t index_of(std::string_view name) const;
    bool contains(std::string_view name) const;

    friend bool operator==(const Ring& a, const Ring& b) { return a.names_ == b.names_; }

private:
    std::vector<std::string> names_;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(std::vector<std::string> names);

/// Exponent vector, dense over the ring's variables.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
    explicit Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {}

    /// Product of name^exponent factors; repeated names multiply.
    static Monomial of(const Ring& ring, std::initializer_list<std::pair<std::string_view, Exponent>> factors);

    std::size_t nvars() const { return exps_.size(); }
    Exponent operator[](std::size_t i) const { return exps_[i]; }
    Exponent& operator[](std::size_t i) { return exps_[i]; }
    const std::vector<Exponent>& exponents() const { return exps_; }

    std::uint64_t degree() const;
    bool is_one() const;
    bool is_squarefree() const;
    bool divides(const Monomial& other) const;

    friend Monomial lcm(const Monomial& a, const Monomial& b);
    friend Monomial gcd(const Monomial& a, const Monomial& b);
    friend Monomial operator*(const Monomial& a, const Monomial& b);
    /// a / gcd(a, b)
    friend Monomial strip(const Monomial& a, const Monomial& b);

    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend auto operator<=>(const Monomial&, const Monomial&) = default;

private:
    std::vector<Exponent> exps_;
};

/// Monomial ideal stored by its unique minimal generating set, in canonical
/// order (by degree, then exponent vector).
class MonomialIdeal {
public:
    /// The zero ideal.
    explicit MonomialIdeal(RingPtr ring);
    MonomialIdeal(RingPtr ring, std::vector<Monomial> generators);

    const Ring& ring() const { return *ring_; }
    const RingPtr& ring_ptr() const { return ring_; }
    const std::vector<Monomial>& generators() const { return gens_; }

    bool is_zero() const { return gens_.empty(); }
    bool is_unit() const;
    bool is_squarefree() const;
    bool contains(const Monomial& m) const;
    /// Every generator of `other` lies in *this.
    bool contains(const MonomialIdeal& other) const;

    friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b);

private:
    RingPtr ring_;
    std::vector<Monomial> gens_;
};

/// Minimal generators of a monomial list: sorted, deduplicated, no element
/// divisible by another.
std::vector<Monomial> minimalize(std::vector<Monomial> gens);

/// ((x_i x_j)^w : x_i x_j an edge of weight w) over the vertex labels.
MonomialIdeal weighted_edge_ideal(const WeightedGraph& g);
/// Same ideal embedded in a ring whose names include every vertex label.
MonomialIdeal weighted_edge_ideal(const WeightedGraph& g, const RingPtr& ring);
/// Weighted edge ideal with all weights 1.
MonomialIdeal edge_ideal(const WeightedGraph& g);
MonomialIdeal edge_ideal(const WeightedGraph& g, const RingPtr& ring);

MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& f);
MonomialIdeal add(const MonomialIdeal& ideal, const Monomial& f);
MonomialIdeal add(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);
/// Intersection of a non-empty list.
MonomialIdeal intersect_all(const std::vector<MonomialIdeal>& parts);
MonomialIdeal radical(const MonomialIdeal& ideal);
inline bool equals(const MonomialIdeal& a, const MonomialIdeal& b) { return a == b; }

struct Polarization {
    MonomialIdeal ideal;  // squarefree, over the expanded ring
    /// copies[i] = indices in the expanded ring of x_i's copies, in order
    /// x_i,1, x_i,2, ...
    std::vector<std::vector<std::size_t>> copies;
};

/// Replaces x^e by x_1 ... x_e with fresh variables. Every original variable
/// keeps at least one copy, so the ambient dimension is preserved. Copy
/// names are `<label>_<k>`, extended with more underscores on collision.
Polarization polarize(const MonomialIdeal& ideal);

/// Human-readable form such as "(x^2*y^2, y*z)".
std::string to_string(const MonomialIdeal& ideal);
std::string to_string(const Ring& ring, const Monomial& m);

}  // namespace cmw

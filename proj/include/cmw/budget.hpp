#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cmw {

/// Thrown when an exhaustive computation would exceed its configured bound.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Budgets {
    /// Max vertices for maximal independent set enumeration.
    std::size_t independent_set_vertices = 20;
    /// Max vertices for the vertex decomposability recursion.
    std::size_t decomposability_vertices = 14;
    /// Max raw candidate count prod_v (|W(v)| + 1) for cover enumeration.
    std::uint64_t cover_search = 1'000'000'000;
    /// Max faces enumerated by a homology / Reisner computation.
    std::uint64_t faces = 2'000'000;

    /// Defaults, with CMW_BUDGET (if set to a positive integer) replacing
    /// both the cover-search and face budgets.
    static Budgets from_environment();
};

}  // namespace cmw

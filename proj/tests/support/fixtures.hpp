#pragma once

#include "cmw/graph.hpp"

namespace fixtures {

using cmw::WeightedGraph;

inline WeightedGraph c5(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d, std::int64_t e) {
    return WeightedGraph::build({"x", "y", "z", "u", "v"},
                                {{"x", "y", a}, {"y", "z", b}, {"z", "u", c}, {"u", "v", d}, {"v", "x", e}});
}

/// x - y - z.
inline WeightedGraph p3(std::int64_t xy, std::int64_t yz) {
    return WeightedGraph::build({"x", "y", "z"}, {{"x", "y", xy}, {"y", "z", yz}});
}

/// Two vertices joined by paths with 2, 3 and 3 edges: girth 5, two basic
/// 5-cycles sharing a path, not well-covered.
inline WeightedGraph theta_2_3_3() {
    return WeightedGraph::build({"s", "t", "m", "p1", "p2", "q1", "q2"}, {{"s", "m"},
                                                                          {"m", "t"},
                                                                          {"s", "p1"},
                                                                          {"p1", "p2"},
                                                                          {"p2", "t"},
                                                                          {"s", "q1"},
                                                                          {"q1", "q2"},
                                                                          {"q2", "t"}});
}

/// Cycles x y z u v and a b c d e, leaves f, h, j on stems g, i, k. The
/// branch vertices are x (to a and g), z (to k) and c (to i); z and c are
/// balanced with degree-2 cycle neighbours. Weights satisfy (a)-(c).
inline WeightedGraph two_cycles_three_pendants() {
    return WeightedGraph::build({"x", "y", "z", "u", "v", "a", "b", "c", "d", "e", "f", "g", "h", "i", "j", "k"},
                                {{"x", "y", 3},
                                 {"y", "z", 2},
                                 {"z", "u", 2},
                                 {"u", "v", 3},
                                 {"v", "x", 2},
                                 {"a", "b", 2},
                                 {"b", "c", 1},
                                 {"c", "d", 1},
                                 {"d", "e", 2},
                                 {"e", "a", 1},
                                 {"x", "a", 1},
                                 {"x", "g", 2},
                                 {"f", "g", 2},
                                 {"c", "i", 1},
                                 {"h", "i", 1},
                                 {"z", "k", 2},
                                 {"j", "k", 3}});
}

}  // namespace fixtures

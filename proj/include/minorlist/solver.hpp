#ifndef MINORLIST_SOLVER_HPP
#define MINORLIST_SOLVER_HPP

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "minorlist/assignment.hpp"
#include "minorlist/graph.hpp"

namespace minorlist {

using Coloring = std::vector<int>;  // one colour per vertex

// Exhaustive backtracking for a proper colouring from the lists, extending
// `partial` when given.  Unassigned regions are split into connected
// components; components inducing cliques are solved by clique_sdr.
// Throws std::invalid_argument when partial violates lists or adjacency.
std::optional<Coloring> find_coloring(const Graph& g, const ListAssignment& l,
                                      const std::map<int, int>& partial = {});

// System of distinct representatives via maximum bipartite matching.  On
// failure, hall_violator is a set of list indices whose union of colours is
// smaller than the set.
struct SdrResult {
    std::optional<std::vector<int>> reps;
    std::vector<int> hall_violator;

    explicit operator bool() const { return reps.has_value(); }
};
SdrResult clique_sdr(const std::vector<std::vector<int>>& lists);

struct BfoldResult {
    std::optional<FoldColoring> fold;
    std::string reason;

    explicit operator bool() const { return fold.has_value(); }
};
// b-fold list colouring: |phi(v)| = b, phi(v) within L(v), adjacent vertices
// disjoint.  Per-vertex b-subsets tried in lexicographic order.
BfoldResult find_bfold(const Graph& g, const ListAssignment& l, int b);

// Enumerate proper colourings in canonical order (vertices ascending, colours
// ascending).  Callback returns false to stop.  Returns the number visited.
uint64_t enumerate_colorings(const Graph& g, const ListAssignment& l,
                             const std::function<bool(const Coloring&)>& cb);

}  // namespace minorlist

#endif

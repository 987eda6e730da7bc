#ifndef MINORLIST_OBSTACLE_HPP
#define MINORLIST_OBSTACLE_HPP

#include <functional>
#include <stdexcept>

#include "minorlist/solver.hpp"
#include "minorlist/witness.hpp"

namespace minorlist {

// A copy cap or enumeration cap was hit; a distinct outcome, never silently
// folded into success or failure.
struct CapExceeded : std::runtime_error {
    explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Family of obstacle list assignments for (h1, k, classes): `respond` maps a
// proper clique colouring psi (colours by position in k) to a full list
// assignment L_psi of h1 under which psi is placed on k.
struct ObstacleFamily {
    Graph h1;
    std::vector<int> k;
    Lambda lam;
    ColourClasses classes;
    std::function<ListAssignment(const std::vector<int>&)> respond;
};

// True iff psi placed on fam.k cannot be extended to a proper L_psi-colouring
// of h1.  Throws when psi is not proper on k or not within its lists.
bool check_obstacle(const ObstacleFamily& fam, const std::vector<int>& psi);

struct ComposeOptions {
    uint64_t copy_cap = 1'000'000;
    bool validate_obstacles = true;
};

struct ComposeResult {
    Graph graph;
    ListAssignment lists;
    ComposeProvenance provenance;
    bool degenerate = false;  // h2 had no proper colouring; returned unchanged
    std::string warning;
};

using CliqueSelector = std::function<std::vector<int>(const Coloring&)>;

// The composition step: one fresh copy of fam.h1 per proper l2-colouring psi
// of h2, glued by identifying fam.k with select(psi), lists extended by the
// obstacle assignment on each copy's private vertices.
ComposeResult compose(const ObstacleFamily& fam, const Graph& h2, const ListAssignment& l2,
                      const CliqueSelector& select, const ComposeOptions& opts = {});

std::string psi_key(const Coloring& psi);

// Documented toy family: h1 = K_3, k = vertex 0, lambda = {2}, one class
// {0,1,2}; both non-k vertices answer with the same two-colour list
// {psi, other}, so they collide after psi is placed.
ObstacleFamily toy_family();
// Matching base: K_2 with both lists {0,1}; selector = vertex 0.
Graph toy_base();
ListAssignment toy_base_lists();
CliqueSelector toy_selector();

// Induction step: turns a verified witness for t-1 with lambda =
// {1*(t-4), 2} into one for t with lambda' = {1*(t-3), 2}, by adding a
// universal apex, one fresh singleton colour, and composing against a
// triangle with uniform (t-1)-colour lists.
Witness apex_step(const Witness& w);

}  // namespace minorlist

#endif

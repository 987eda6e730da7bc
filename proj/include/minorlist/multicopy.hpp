#ifndef MINORLIST_MULTICOPY_HPP
#define MINORLIST_MULTICOPY_HPP

#include "minorlist/obstacle.hpp"
#include "minorlist/steiner.hpp"

namespace minorlist {

// eps' = eps / (2(q+4)); the choice is checked exactly against the inequality
// (2 - q*eps') / (1 + 2*eps') >= 2 - eps/2 it must satisfy.
Rational pick_eps_prime(Rational eps, int q);

struct InjectionRecord {
    std::vector<int> image;        // colour (or colour-set id) per A position
    std::vector<int> copy_map;     // H vertex -> composed vertex
};

struct MultiCopyBuild {
    Graph graph;
    ListAssignment lists;
    Lambda lam;
    ColourClasses classes;
    int t = 0;                 // minor-freeness order inherited from H
    int universe_size = 0;
    std::vector<InjectionRecord> copies;
    ComposeProvenance provenance;  // copies glued on the shared A-clique
};

// Shared A plus one copy of B per injection A -> X_1 u ... u X_q; lists on a
// copy drop the colours its non-neighbours received.  lambda = {k_1..k_q},
// classes C_j = X_j u Y_j with |Y_j| = floor(eps' * n).
MultiCopyBuild build_thmkq(const SteinerGraph& h, int q, std::span<const int> ks,
                           Rational eps_prime, uint64_t copy_cap = 100'000);

struct PerCopyReport {
    uint64_t copies_checked = 0;
    bool all_blocked = true;
    std::vector<std::string> failures;  // injection keys that extended
};

// Checks, injection by injection and without materializing the graph, that
// the B-copy cannot be completed once A is coloured by the injection.
PerCopyReport verify_thmkq_percopy(const SteinerGraph& h, int q, std::span<const int> ks,
                                   Rational eps_prime, uint64_t copy_cap = 100'000);

// (a,b)-variant: colour sets are the m-subsets of [2nm-1]; a copy per
// injection A -> D; per-copy failure means no m-fold completion of B.
MultiCopyBuild build_ab(const SteinerGraph& h, int m, uint64_t copy_cap = 100'000);

// Only injections with pairwise disjoint images can arise as restrictions of
// an m-fold colouring of the A-clique; those are the ones checked.
PerCopyReport verify_ab_percopy(const SteinerGraph& h, int m, uint64_t copy_cap = 100'000);

uint64_t count_injections(uint64_t pool, int slots);  // pool * (pool-1) * ...

}  // namespace minorlist

#endif

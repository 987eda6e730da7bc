#ifndef MINORLIST_STEINER_HPP
#define MINORLIST_STEINER_HPP

#include <optional>

#include "minorlist/minor.hpp"
#include "minorlist/rational.hpp"
#include "minorlist/witness.hpp"

namespace minorlist {

// Two n-cliques A and B with at most floor(eps*n) non-neighbours per vertex
// and no K_t minor for t = ceil((1+2*eps)*n).
struct SteinerGraph {
    Graph graph;
    std::vector<int> A, B;
    int n = 0;
    Rational eps;
    std::optional<int> verified_t;
};

struct SteinerReport {
    bool cliques_ok = false;      // property 1
    bool degrees_ok = false;      // property 2
    CheckStatus minor_status = CheckStatus::Unchecked;  // property 3
    int t = 0;
    std::string detail;

    bool all_pass() const {
        return cliques_ok && degrees_ok && minor_status == CheckStatus::Pass;
    }
};

SteinerReport verify_steiner(const Graph& h, const std::vector<int>& A, const std::vector<int>& B,
                             int n, Rational eps, uint64_t minor_budget = kDefaultMinorBudget);

// Sample-and-verify: cross edges between A and B dropped independently with
// probability eps/2, attempts rejected as soon as a vertex exceeds the
// non-neighbour bound, survivors gated by verify_steiner.  Deterministic in
// (n, eps, seed); per-attempt generators derive from (seed, attempt index).
std::optional<SteinerGraph> sample_steiner(int n, Rational eps, uint64_t seed, int budget_attempts,
                                           uint64_t minor_budget = kDefaultMinorBudget);

// Deterministic instances for tests and toy builds: the complete join of two
// n-cliques minus `shifts` cyclic cross matchings (vertex a_j loses b_(j+s)).
SteinerGraph cyclic_instance(int n, int shifts, Rational eps);
SteinerGraph complete_join(int n, Rational eps);

}  // namespace minorlist

#endif

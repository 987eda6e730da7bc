#ifndef MINORLIST_MINOR_HPP
#define MINORLIST_MINOR_HPP

#include <cstdint>
#include <optional>

#include "minorlist/graph.hpp"

namespace minorlist {

// Budget exhaustion is a distinct non-answer, never conflated with None.
enum class MinorStatus { Found, None, BudgetExceeded };

struct MinorSearchResult {
    MinorStatus status = MinorStatus::None;
    std::optional<MinorModel> model;
    uint64_t nodes = 0;

    bool found() const { return status == MinorStatus::Found; }
    bool none() const { return status == MinorStatus::None; }
};

inline constexpr uint64_t kDefaultMinorBudget = 100'000'000;

// Exact K_t-minor search. Two strategies picked automatically:
//   - low-deficiency mode when n - t <= 6: enumerate the few vertices that
//     are deleted or merged into multi-vertex branch sets;
//   - otherwise a contraction search with partition memoization, meant for
//     small graphs (n up to ~16).
// Deterministic: ascending ids everywhere, first model in that order.
MinorSearchResult find_kt_minor(const Graph& g, int t, uint64_t node_budget = kDefaultMinorBudget);

}  // namespace minorlist

#endif

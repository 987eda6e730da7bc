#ifndef MINORLIST_CHOOSABILITY_HPP
#define MINORLIST_CHOOSABILITY_HPP

#include <cstdint>
#include <optional>
#include <span>

#include "minorlist/assignment.hpp"
#include "minorlist/graph.hpp"
#include "minorlist/solver.hpp"

namespace minorlist {

inline constexpr uint64_t kDefaultChoosabilityBudget = 2'000'000;

struct ChoosableVerdict {
    enum class Kind { Choosable, Witness, CapExceeded } kind = Kind::Choosable;
    std::optional<ListAssignment> witness_lists;
    std::optional<ColourClasses> witness_classes;
    uint64_t assignments_tried = 0;

    bool witness() const { return kind == Kind::Witness; }
    bool choosable() const { return kind == Kind::Choosable; }
};

// Small-scale lambda-choosability decision by canonical enumeration:
//   - parts equal to 1 get a fixed singleton class {c_i} shared by all lists;
//   - a part k_i >= 2 gets a colour universe capped at universe_caps[i]
//     (default k_i * n), and per-vertex k_i-subsets are enumerated up to
//     colour permutation within the class (new colours enter consecutively).
// Returns the first assignment with no L-colouring, else "choosable relative
// to caps".  The verdict is CapExceeded once `budget` assignments were tried.
// Caps are per-part, aligned with the canonical (non-increasing) part order.
ChoosableVerdict lambda_choosable_small(const Graph& g, const Lambda& lam,
                                        std::span<const int> universe_caps = {},
                                        uint64_t budget = kDefaultChoosabilityBudget);

}  // namespace minorlist

#endif

#include "minorlist/lambda.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace minorlist {

Lambda::Lambda(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_)
        if (p < 1) throw std::invalid_argument("lambda parts must be positive");
    std::sort(parts_.begin(), parts_.end(), std::greater<int>());
}

namespace {

// Group-sum dominance: rhs slots split into |lhs| nonempty groups, each
// group's sum at least its lhs part.  This is the transitive closure of
// "refine, then increase parts", and the order under which merging the rhs
// colour classes of a list assignment yields an lhs-assignment.
// State: which rhs slots are still free, which lhs part we are serving next.
// Slots for one lhs part are chosen with ascending indices to kill orderings.
struct LeqSolver {
    const std::vector<int>& lhs;
    const std::vector<int>& rhs;
    std::map<std::pair<int, uint64_t>, bool> memo;

    bool solve(int part_idx, uint64_t free_mask) {
        if (part_idx == static_cast<int>(lhs.size())) return free_mask == 0;
        auto key = std::make_pair(part_idx, free_mask);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        bool ok = pick(part_idx, free_mask, 0, 0, 0, 0);
        memo[key] = ok;
        return ok;
    }

    bool pick(int part_idx, uint64_t free_mask, int from, int taken, int cap_sum, uint64_t used) {
        int k = lhs[part_idx];
        if (taken > 0 && cap_sum >= k) {
            if (solve(part_idx + 1, free_mask & ~used)) return true;
        }
        for (int j = from; j < static_cast<int>(rhs.size()); ++j) {
            uint64_t bit = uint64_t{1} << j;
            if (!(free_mask & bit)) continue;
            // skip equal-valued slots already considered at this position
            if (j > from && rhs[j] == rhs[j - 1] && (free_mask & (uint64_t{1} << (j - 1))) && !(used & (uint64_t{1} << (j - 1))))
                continue;
            if (pick(part_idx, free_mask, j + 1, taken + 1, cap_sum + rhs[j], used | bit)) return true;
        }
        return false;
    }
};

}  // namespace

bool leq_order(const Lambda& lhs, const Lambda& rhs) {
    if (lhs.count() > rhs.count()) return false;
    if (lhs.sum() > rhs.sum()) return false;
    if (rhs.count() > 63) throw std::invalid_argument("leq_order: rhs too large");
    LeqSolver s{lhs.parts(), rhs.parts(), {}};
    uint64_t all = (rhs.count() == 63) ? ~uint64_t{0} >> 1 : (uint64_t{1} << rhs.count()) - 1;
    return s.solve(0, all);
}

}  // namespace minorlist

#ifndef MINORLIST_LAMBDA_HPP
#define MINORLIST_LAMBDA_HPP

#include <compare>
#include <numeric>
#include <vector>

namespace minorlist {

// Multiset partition {k_1,...,k_q}, stored canonically in non-increasing
// order.  Every part is >= 1.
class Lambda {
public:
    Lambda() = default;
    explicit Lambda(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int sum() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
    int count() const { return static_cast<int>(parts_.size()); }

    friend bool operator==(const Lambda&, const Lambda&) = default;

private:
    std::vector<int> parts_;
};

// The order lam <= rhs: rhs is obtained from a refinement of lam by
// increasing some parts.  Equivalently, the rhs slots can be partitioned into
// |lam| nonempty groups G_i with |G_i| <= k_i <= sum of the slots in G_i.
// Decided by exhaustive grouping with memoization.
bool leq_order(const Lambda& lhs, const Lambda& rhs);

}  // namespace minorlist

#endif

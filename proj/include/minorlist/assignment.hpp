#ifndef MINORLIST_ASSIGNMENT_HPP
#define MINORLIST_ASSIGNMENT_HPP

#include <string>
#include <vector>

#include "minorlist/graph.hpp"
#include "minorlist/lambda.hpp"

namespace minorlist {

// Colours are opaque nonnegative integers; class membership is explicit.
// Classes align index-by-index with a Lambda's (canonically sorted) parts.
struct ColourClasses {
    std::vector<std::vector<int>> classes;  // each sorted ascending, disjoint

    int count() const { return static_cast<int>(classes.size()); }
};

struct ListAssignment {
    std::vector<std::vector<int>> lists;  // per vertex, sorted ascending

    int size() const { return static_cast<int>(lists.size()); }
};

// b colours per vertex, adjacent vertices disjoint.
struct FoldColoring {
    std::vector<std::vector<int>> sets;
};

struct AssignmentCheck {
    bool ok = false;
    std::string reason;
    int vertex = -1;       // first violating vertex, when applicable
    int class_index = -1;  // first violating class, when applicable

    explicit operator bool() const { return ok; }
};

// True iff the classes are pairwise disjoint and every vertex meets every
// class quota |L(v) n C_i| >= k_i.  The report names the first violation.
AssignmentCheck is_valid_assignment(const Graph& g, const ListAssignment& l,
                                    const Lambda& lam, const ColourClasses& c);

void sort_unique(std::vector<int>& v);
int max_color(const ListAssignment& l, const ColourClasses& c);

}  // namespace minorlist

#endif

#include "minorlist/assignment.hpp"

#include <algorithm>
#include <stdexcept>

namespace minorlist {

void sort_unique(std::vector<int>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

int max_color(const ListAssignment& l, const ColourClasses& c) {
    int m = -1;
    for (auto& xs : l.lists)
        for (int x : xs) m = std::max(m, x);
    for (auto& xs : c.classes)
        for (int x : xs) m = std::max(m, x);
    return m;
}

AssignmentCheck is_valid_assignment(const Graph& g, const ListAssignment& l,
                                    const Lambda& lam, const ColourClasses& c) {
    if (c.count() != lam.count())
        throw std::invalid_argument("class tuple is not aligned with lambda");
    if (l.size() != g.size())
        throw std::invalid_argument("list assignment does not cover every vertex");

    for (int i = 0; i < c.count(); ++i) {
        for (int j = i + 1; j < c.count(); ++j) {
            std::vector<int> inter;
            std::set_intersection(c.classes[i].begin(), c.classes[i].end(),
                                  c.classes[j].begin(), c.classes[j].end(),
                                  std::back_inserter(inter));
            if (!inter.empty())
                return {false,
                        "classes " + std::to_string(i) + " and " + std::to_string(j) +
                            " share colour " + std::to_string(inter.front()),
                        -1, i};
        }
    }
    for (int v = 0; v < g.size(); ++v) {
        if (l.lists[v].empty()) return {false, "vertex " + std::to_string(v) + " has an empty list", v, -1};
        for (int i = 0; i < c.count(); ++i) {
            std::vector<int> inter;
            std::set_intersection(l.lists[v].begin(), l.lists[v].end(),
                                  c.classes[i].begin(), c.classes[i].end(),
                                  std::back_inserter(inter));
            if (static_cast<int>(inter.size()) < lam.parts()[i])
                return {false,
                        "vertex " + std::to_string(v) + " meets class " + std::to_string(i) +
                            " in only " + std::to_string(inter.size()) + " colours (quota " +
                            std::to_string(lam.parts()[i]) + ")",
                        v, i};
        }
    }
    return {true, "", -1, -1};
}

}  // namespace minorlist

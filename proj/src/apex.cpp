#include <algorithm>

#include "minorlist/obstacle.hpp"

namespace minorlist {

// Adds a universal apex u to the witness graph, gives every old vertex one
// fresh singleton colour, and composes against a triangle whose uniform list
// is u's list.  Any proper triangle colouring leaves at most two vertices on
// the two big-class colours, so some vertex lands on a singleton colour and
// activates the obstacle.
Witness apex_step(const Witness& w) {
    const auto& parts = w.lam.parts();
    int t_in = w.t;
    if (parts.empty() || parts[0] != 2)
        throw std::invalid_argument("apex_step: lambda must be {1*(t-4), 2}");
    for (size_t i = 1; i < parts.size(); ++i)
        if (parts[i] != 1) throw std::invalid_argument("apex_step: lambda must be {1*(t-4), 2}");
    if (w.lam.sum() != t_in - 1) throw std::invalid_argument("apex_step: lambda must partition t-1");
    if (w.classes.count() != w.lam.count()) throw std::invalid_argument("apex_step: classes misaligned");
    for (int i = 1; i < w.classes.count(); ++i)
        if (w.classes.classes[i].size() != 1)
            throw std::invalid_argument("apex_step: non-singleton class behind a 1-part");
    if (w.classes.classes[0].size() < 2) throw std::invalid_argument("apex_step: big class needs two colours");
    if (!w.pinned.empty()) throw std::invalid_argument("apex_step: input witness must be globally non-colourable");
    bool usable = w.verification.assignment == CheckStatus::Pass && w.verification.coloring == CheckStatus::Pass &&
                  (w.verification.minor == CheckStatus::Pass || w.verification.minor == CheckStatus::Skipped);
    if (!usable) throw std::invalid_argument("apex_step: witness is not verified");

    int n = w.graph.size();
    int fresh = max_color(w.lists, w.classes) + 1;
    int big_a = w.classes.classes[0][0];
    int big_b = w.classes.classes[0][1];
    std::vector<int> singles;  // c_1..c_{t-4}
    for (int i = 1; i < w.classes.count(); ++i) singles.push_back(w.classes.classes[i][0]);

    Graph h1(n + 1);
    for (auto [u, v] : w.graph.edges()) h1.add_edge(u, v);
    for (int v = 0; v < n; ++v) h1.add_edge(v, n);
    h1.set_label(n, "apex");

    ListAssignment l1;
    l1.lists.assign(n + 1, {});
    for (int v = 0; v < n; ++v) {
        l1.lists[v] = w.lists.lists[v];
        l1.lists[v].push_back(fresh);
        std::sort(l1.lists[v].begin(), l1.lists[v].end());
    }
    std::vector<int> apex_list = singles;
    apex_list.push_back(fresh);
    apex_list.push_back(big_a);
    apex_list.push_back(big_b);
    std::sort(apex_list.begin(), apex_list.end());
    l1.lists[n] = apex_list;

    // lambda' = {1*(t-3), 2}; classes: old big class, old singletons, fresh
    std::vector<int> parts2(w.lam.count() + 1, 1);
    parts2[0] = 2;
    Lambda lam2(parts2);
    ColourClasses classes2;
    classes2.classes.push_back(w.classes.classes[0]);
    for (int c : singles) classes2.classes.push_back({c});
    classes2.classes.push_back({fresh});

    ObstacleFamily fam;
    fam.h1 = h1;
    fam.k = {n};
    fam.lam = lam2;
    fam.classes = classes2;
    fam.respond = [l1](const std::vector<int>&) { return l1; };

    Graph triangle = complete_graph(3);
    ListAssignment tri_lists;
    tri_lists.lists = {apex_list, apex_list, apex_list};

    std::vector<int> obstacle_colors = singles;
    obstacle_colors.push_back(fresh);
    std::sort(obstacle_colors.begin(), obstacle_colors.end());
    CliqueSelector select = [obstacle_colors](const Coloring& psi) {
        for (size_t v = 0; v < psi.size(); ++v)
            if (std::binary_search(obstacle_colors.begin(), obstacle_colors.end(), psi[v]))
                return std::vector<int>{static_cast<int>(v)};
        throw std::invalid_argument("apex_step: triangle colouring avoided every singleton colour");
    };

    auto composed = compose(fam, triangle, tri_lists, select);
    Witness out;
    out.graph = std::move(composed.graph);
    out.lists = std::move(composed.lists);
    out.lam = lam2;
    out.classes = classes2;
    out.t = t_in + 1;
    out.provenance = "apex(" + w.provenance + ")";
    out.compose_info = std::move(composed.provenance);
    return out;
}

}  // namespace minorlist

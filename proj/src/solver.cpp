#include "minorlist/solver.hpp"

#include <algorithm>
#include <stdexcept>

namespace minorlist {

namespace {

// Kuhn's augmenting-path matching, deterministic (lists and colours ascending).
struct Matcher {
    const std::vector<std::vector<int>>& adj;  // list index -> colour indices
    std::vector<int> match_color;              // colour index -> list index
    std::vector<int> match_list;               // list index -> colour index
    std::vector<char> visited;

    explicit Matcher(const std::vector<std::vector<int>>& a, int ncolors)
        : adj(a), match_color(ncolors, -1), match_list(a.size(), -1), visited(ncolors, 0) {}

    bool try_augment(int li) {
        for (int ci : adj[li]) {
            if (visited[ci]) continue;
            visited[ci] = 1;
            if (match_color[ci] < 0 || try_augment(match_color[ci])) {
                match_color[ci] = li;
                match_list[li] = ci;
                return true;
            }
        }
        return false;
    }

    int run() {
        int matched = 0;
        for (size_t li = 0; li < adj.size(); ++li) {
            std::fill(visited.begin(), visited.end(), 0);
            if (try_augment(static_cast<int>(li))) ++matched;
        }
        return matched;
    }
};

struct ColoringSolver {
    const Graph& g;
    int n;
    std::vector<std::vector<int>> eff;  // effective lists (shrinks as colours fix)
    std::vector<int> color;             // -1 unassigned

    ColoringSolver(const Graph& gr, const ListAssignment& l) : g(gr), n(gr.size()), eff(l.lists), color(gr.size(), -1) {}

    bool assign(int v, int c) {
        color[v] = c;
        return true;
    }

    std::vector<int> effective_list(int v) const {
        std::vector<int> out;
        for (int c : eff[v]) {
            bool blocked = false;
            for (int u = g.neighbors(v).next(0); u >= 0; u = g.neighbors(v).next(u + 1))
                if (color[u] == c) {
                    blocked = true;
                    break;
                }
            if (!blocked) out.push_back(c);
        }
        return out;
    }

    bool solve(const std::vector<int>& vertices) {
        if (vertices.empty()) return true;
        // split into connected components of the unassigned subgraph
        Bitset pending(n);
        for (int v : vertices) pending.set(v);
        std::vector<std::vector<int>> comps;
        Bitset seen(n);
        for (int v : vertices) {
            if (seen.test(v)) continue;
            std::vector<int> comp, stack{v};
            seen.set(v);
            while (!stack.empty()) {
                int x = stack.back();
                stack.pop_back();
                comp.push_back(x);
                for (int u = g.neighbors(x).next(0); u >= 0; u = g.neighbors(x).next(u + 1))
                    if (pending.test(u) && !seen.test(u)) {
                        seen.set(u);
                        stack.push_back(u);
                    }
            }
            std::sort(comp.begin(), comp.end());
            comps.push_back(std::move(comp));
        }
        for (auto& comp : comps)
            if (!solve_component(comp)) return false;
        return true;
    }

    bool solve_component(const std::vector<int>& comp) {
        if (comp.size() == 1) {
            auto avail = effective_list(comp[0]);
            if (avail.empty()) return false;
            color[comp[0]] = avail.front();
            return true;
        }
        if (induces_clique(comp)) return solve_clique(comp);
        // MRV: smallest effective list, ties by id
        int best = -1;
        size_t best_size = ~size_t{0};
        std::vector<std::vector<int>> lists(comp.size());
        for (size_t i = 0; i < comp.size(); ++i) {
            lists[i] = effective_list(comp[i]);
            if (lists[i].size() < best_size) {
                best_size = lists[i].size();
                best = static_cast<int>(i);
            }
        }
        if (best_size == 0) return false;
        int v = comp[best];
        std::vector<int> rest;
        for (int u : comp)
            if (u != v) rest.push_back(u);
        for (int c : lists[best]) {
            color[v] = c;
            if (solve(rest)) return true;
            // undo colours set by the failed subtree
            for (int u : rest) color[u] = -1;
        }
        color[v] = -1;
        return false;
    }

    bool induces_clique(const std::vector<int>& comp) const {
        for (size_t i = 0; i < comp.size(); ++i)
            for (size_t j = i + 1; j < comp.size(); ++j)
                if (!g.adjacent(comp[i], comp[j])) return false;
        return true;
    }

    bool solve_clique(const std::vector<int>& comp) {
        std::vector<std::vector<int>> lists;
        for (int v : comp) lists.push_back(effective_list(v));
        auto sdr = clique_sdr(lists);
        if (!sdr) return false;
        for (size_t i = 0; i < comp.size(); ++i) color[comp[i]] = (*sdr.reps)[i];
        return true;
    }
};

}  // namespace

SdrResult clique_sdr(const std::vector<std::vector<int>>& lists) {
    // compress colours
    std::vector<int> colors;
    for (auto& l : lists) colors.insert(colors.end(), l.begin(), l.end());
    sort_unique(colors);
    auto color_index = [&](int c) {
        return static_cast<int>(std::lower_bound(colors.begin(), colors.end(), c) - colors.begin());
    };
    std::vector<std::vector<int>> adj(lists.size());
    for (size_t i = 0; i < lists.size(); ++i) {
        auto l = lists[i];
        sort_unique(l);
        for (int c : l) adj[i].push_back(color_index(c));
    }
    Matcher m(adj, static_cast<int>(colors.size()));
    int matched = m.run();
    SdrResult r;
    if (matched == static_cast<int>(lists.size())) {
        std::vector<int> reps(lists.size());
        for (size_t i = 0; i < lists.size(); ++i) reps[i] = colors[m.match_list[i]];
        r.reps = std::move(reps);
        return r;
    }
    // Hall violator: lists reachable by alternating paths from any unmatched
    // list.  Their colour neighbourhood is fully matched inside the set, so it
    // is strictly smaller than the set.
    std::vector<char> list_seen(lists.size(), 0), color_seen(colors.size(), 0);
    std::vector<int> queue;
    for (size_t i = 0; i < lists.size(); ++i)
        if (m.match_list[i] < 0) {
            list_seen[i] = 1;
            queue.push_back(static_cast<int>(i));
        }
    while (!queue.empty()) {
        int li = queue.back();
        queue.pop_back();
        for (int ci : adj[li]) {
            if (color_seen[ci]) continue;
            color_seen[ci] = 1;
            int lj = m.match_color[ci];
            if (lj >= 0 && !list_seen[lj]) {
                list_seen[lj] = 1;
                queue.push_back(lj);
            }
        }
    }
    for (size_t i = 0; i < lists.size(); ++i)
        if (list_seen[i]) r.hall_violator.push_back(static_cast<int>(i));
    return r;
}

std::optional<Coloring> find_coloring(const Graph& g, const ListAssignment& l,
                                      const std::map<int, int>& partial) {
    if (l.size() != g.size()) throw std::invalid_argument("find_coloring: lists do not cover every vertex");
    for (auto& [v, c] : partial) {
        if (v < 0 || v >= g.size()) throw std::invalid_argument("find_coloring: partial vertex out of range");
        if (!std::binary_search(l.lists[v].begin(), l.lists[v].end(), c))
            throw std::invalid_argument("find_coloring: partial colour not in the vertex list");
    }
    for (auto& [v, c] : partial)
        for (auto& [u, d] : partial)
            if (u > v && c == d && g.adjacent(u, v))
                throw std::invalid_argument("find_coloring: partial colouring is not proper");

    ColoringSolver s(g, l);
    for (auto& [v, c] : partial) s.color[v] = c;
    std::vector<int> todo;
    for (int v = 0; v < g.size(); ++v)
        if (s.color[v] < 0) todo.push_back(v);
    if (!s.solve(todo)) return std::nullopt;
    return s.color;
}

BfoldResult find_bfold(const Graph& g, const ListAssignment& l, int b) {
    if (b < 1) throw std::invalid_argument("find_bfold: b must be positive");
    if (l.size() != g.size()) throw std::invalid_argument("find_bfold: lists do not cover every vertex");
    for (int v = 0; v < g.size(); ++v)
        if (static_cast<int>(l.lists[v].size()) < b)
            return {std::nullopt, "vertex " + std::to_string(v) + " has fewer than b colours"};

    int n = g.size();
    std::vector<std::vector<int>> chosen(n);
    // lexicographic b-subsets per vertex via index combinations
    std::function<bool(int)> rec = [&](int v) -> bool {
        if (v == n) return true;
        const auto& list = l.lists[v];
        std::vector<int> idx(b);
        for (int i = 0; i < b; ++i) idx[i] = i;
        while (true) {
            std::vector<int> sub(b);
            for (int i = 0; i < b; ++i) sub[i] = list[idx[i]];
            bool clash = false;
            for (int u = g.neighbors(v).next(0); u >= 0 && !clash; u = g.neighbors(v).next(u + 1)) {
                if (u >= v || chosen[u].empty()) continue;
                for (int c : sub)
                    if (std::binary_search(chosen[u].begin(), chosen[u].end(), c)) {
                        clash = true;
                        break;
                    }
            }
            if (!clash) {
                chosen[v] = sub;
                if (rec(v + 1)) return true;
                chosen[v].clear();
            }
            // next combination
            int i = b - 1;
            while (i >= 0 && idx[i] == static_cast<int>(list.size()) - b + i) --i;
            if (i < 0) return false;
            ++idx[i];
            for (int j = i + 1; j < b; ++j) idx[j] = idx[j - 1] + 1;
        }
    };
    if (!rec(0)) return {std::nullopt, "exhausted"};
    FoldColoring f;
    f.sets = std::move(chosen);
    return {std::move(f), ""};
}

uint64_t enumerate_colorings(const Graph& g, const ListAssignment& l,
                             const std::function<bool(const Coloring&)>& cb) {
    if (l.size() != g.size()) throw std::invalid_argument("enumerate_colorings: lists do not cover every vertex");
    int n = g.size();
    Coloring col(n, -1);
    uint64_t count = 0;
    bool stop = false;
    std::function<void(int)> rec = [&](int v) {
        if (stop) return;
        if (v == n) {
            ++count;
            if (!cb(col)) stop = true;
            return;
        }
        for (int c : l.lists[v]) {
            bool ok = true;
            for (int u = g.neighbors(v).next(0); u >= 0 && ok; u = g.neighbors(v).next(u + 1))
                if (u < v && col[u] == c) ok = false;
            if (!ok) continue;
            col[v] = c;
            rec(v + 1);
            col[v] = -1;
            if (stop) return;
        }
    };
    rec(0);
    return count;
}

}  // namespace minorlist

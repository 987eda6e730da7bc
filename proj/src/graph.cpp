#include "minorlist/graph.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <stdexcept>

namespace minorlist {

int Bitset::count() const {
    int c = 0;
    for (uint64_t x : w_) c += std::popcount(x);
    return c;
}

bool Bitset::any() const {
    for (uint64_t x : w_)
        if (x) return true;
    return false;
}

bool Bitset::intersects(const Bitset& o) const {
    size_t k = std::min(w_.size(), o.w_.size());
    for (size_t i = 0; i < k; ++i)
        if (w_[i] & o.w_[i]) return true;
    return false;
}

bool Bitset::is_subset_of(const Bitset& o) const {
    size_t k = std::min(w_.size(), o.w_.size());
    for (size_t i = 0; i < k; ++i)
        if (w_[i] & ~o.w_[i]) return false;
    for (size_t i = k; i < w_.size(); ++i)
        if (w_[i]) return false;
    return true;
}

int Bitset::intersection_count(const Bitset& o) const {
    int c = 0;
    size_t k = std::min(w_.size(), o.w_.size());
    for (size_t i = 0; i < k; ++i) c += std::popcount(w_[i] & o.w_[i]);
    return c;
}

Bitset& Bitset::operator|=(const Bitset& o) {
    for (size_t i = 0; i < w_.size() && i < o.w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
}

Bitset& Bitset::operator&=(const Bitset& o) {
    for (size_t i = 0; i < w_.size(); ++i) w_[i] &= (i < o.w_.size() ? o.w_[i] : 0);
    return *this;
}

int Bitset::next(int from) const {
    if (from >= nbits_) return -1;
    int word = from >> 6;
    uint64_t cur = w_[word] & (~uint64_t{0} << (from & 63));
    while (true) {
        if (cur) {
            int v = (word << 6) + std::countr_zero(cur);
            return v < nbits_ ? v : -1;
        }
        if (++word >= static_cast<int>(w_.size())) return -1;
        cur = w_[word];
    }
}

std::vector<int> Bitset::to_vector() const {
    std::vector<int> out;
    for_each([&](int v) { out.push_back(v); });
    return out;
}

namespace {
std::atomic<int> g_max_vertices{1024};
}

int Graph::max_vertices() { return g_max_vertices.load(); }
void Graph::set_max_vertices(int n) { g_max_vertices.store(n); }

Graph::Graph(int n) : n_(n) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    if (n > max_vertices()) throw std::invalid_argument("vertex count exceeds configured cap");
    adj_.assign(n, Bitset(n));
}

void Graph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("self-loop");
    if (adj_[u].test(v)) return;
    adj_[u].set(v);
    adj_[v].set(u);
    ++m_;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(m_);
    for (int u = 0; u < n_; ++u)
        for (int v = adj_[u].next(u + 1); v >= 0; v = adj_[u].next(v + 1)) out.emplace_back(u, v);
    return out;
}

bool Graph::connected_subset(const Bitset& s) const {
    int start = s.next(0);
    if (start < 0) return false;  // empty set is not connected
    Bitset seen(n_);
    seen.set(start);
    std::vector<int> stack{start};
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u = adj_[v].next(0); u >= 0; u = adj_[v].next(u + 1)) {
            if (s.test(u) && !seen.test(u)) {
                seen.set(u);
                stack.push_back(u);
                ++reached;
            }
        }
    }
    return reached == s.count();
}

void Graph::set_label(int v, std::string text) {
    if (v < 0 || v >= n_) throw std::invalid_argument("label vertex out of range");
    labels_[v] = std::move(text);
}

bool is_clique(const Graph& g, std::span<const int> s) {
    for (int v : s)
        if (v < 0 || v >= g.size()) throw std::invalid_argument("clique vertex out of range");
    for (size_t i = 0; i < s.size(); ++i)
        for (size_t j = i + 1; j < s.size(); ++j) {
            if (s[i] == s[j]) throw std::invalid_argument("repeated vertex in clique set");
            if (!g.adjacent(s[i], s[j])) return false;
        }
    return true;
}

CliqueSumResult clique_sum(const Graph& g1, std::span<const int> s1,
                           const Graph& g2, std::span<const int> s2,
                           std::span<const std::pair<int, int>> drop) {
    if (s1.size() != s2.size()) throw std::invalid_argument("clique-sum: size mismatch");
    if (!is_clique(g1, s1)) throw std::invalid_argument("clique-sum: s1 is not a clique of g1");
    if (!is_clique(g2, s2)) throw std::invalid_argument("clique-sum: s2 is not a clique of g2");

    std::vector<bool> shared1(g1.size(), false);
    for (int v : s1) shared1[v] = true;
    for (auto [u, v] : drop) {
        if (u < 0 || v < 0 || u >= g1.size() || v >= g1.size() || u == v || !shared1[u] || !shared1[v])
            throw std::invalid_argument("clique-sum: dropped edge is not inside the shared clique");
    }

    int p = static_cast<int>(s1.size());
    int n = g1.size() + g2.size() - p;
    CliqueSumResult r;
    r.graph = Graph(n);
    r.map1.resize(g1.size());
    for (int v = 0; v < g1.size(); ++v) r.map1[v] = v;
    r.map2.assign(g2.size(), -1);
    for (int i = 0; i < p; ++i) r.map2[s2[i]] = s1[i];
    int next = g1.size();
    for (int v = 0; v < g2.size(); ++v)
        if (r.map2[v] < 0) r.map2[v] = next++;

    for (auto [u, v] : g1.edges()) r.graph.add_edge(u, v);
    for (auto [u, v] : g2.edges()) {
        int a = r.map2[u], b = r.map2[v];
        if (a != b) r.graph.add_edge(a, b);
    }
    // Deleting the listed shared-clique edges realizes the "possibly deleting
    // some of the clique edges" step; rebuild without them.
    if (!drop.empty()) {
        Graph pruned(n);
        std::vector<std::pair<int, int>> bad;
        for (auto [u, v] : drop) bad.emplace_back(std::min(u, v), std::max(u, v));
        for (auto [u, v] : r.graph.edges()) {
            std::pair<int, int> e{u, v};
            bool dropped = false;
            for (auto& d : bad)
                if (d == e) dropped = true;
            if (!dropped) pruned.add_edge(u, v);
        }
        r.graph = std::move(pruned);
    }
    for (auto& [v, text] : g1.labels()) r.graph.set_label(r.map1[v], text);
    for (auto& [v, text] : g2.labels()) {
        int w = r.map2[v];
        if (!r.graph.labels().count(w)) r.graph.set_label(w, text);
    }
    return r;
}

ModelCheck verify_minor_model(const Graph& g, const MinorModel& m) {
    int n = g.size();
    Bitset used(n);
    std::vector<Bitset> sets;
    for (size_t i = 0; i < m.branch_sets.size(); ++i) {
        const auto& bs = m.branch_sets[i];
        if (bs.empty()) return {false, "branch set " + std::to_string(i) + " is empty"};
        Bitset b(n);
        for (int v : bs) {
            if (v < 0 || v >= n) return {false, "branch set " + std::to_string(i) + " has an out-of-range vertex"};
            if (used.test(v)) return {false, "branch sets are not pairwise disjoint at vertex " + std::to_string(v)};
            used.set(v);
            b.set(v);
        }
        if (!g.connected_subset(b)) return {false, "branch set " + std::to_string(i) + " is not connected"};
        sets.push_back(std::move(b));
    }
    for (size_t i = 0; i < sets.size(); ++i) {
        Bitset nb(n);
        for (int v = sets[i].next(0); v >= 0; v = sets[i].next(v + 1)) nb |= g.neighbors(v);
        for (size_t j = i + 1; j < sets.size(); ++j)
            if (!nb.intersects(sets[j]))
                return {false, "branch sets " + std::to_string(i) + " and " + std::to_string(j) + " are not joined by an edge"};
    }
    return {true, ""};
}

Graph complete_graph(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph cycle_graph(int n) {
    Graph g(n);
    for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}

Graph path_graph(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

}  // namespace minorlist

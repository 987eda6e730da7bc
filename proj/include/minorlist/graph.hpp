#ifndef MINORLIST_GRAPH_HPP
#define MINORLIST_GRAPH_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace minorlist {

// Fixed-capacity bitset sized at construction. Vertex sets everywhere below.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int nbits) : nbits_(nbits), w_((nbits + 63) / 64, 0) {}

    void set(int i) { w_[i >> 6] |= (uint64_t{1} << (i & 63)); }
    void reset(int i) { w_[i >> 6] &= ~(uint64_t{1} << (i & 63)); }
    bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

    int count() const;
    bool any() const;
    bool intersects(const Bitset& o) const;
    bool is_subset_of(const Bitset& o) const;
    int intersection_count(const Bitset& o) const;

    Bitset& operator|=(const Bitset& o);
    Bitset& operator&=(const Bitset& o);
    friend bool operator==(const Bitset& a, const Bitset& b) { return a.w_ == b.w_; }

    // First set bit at position >= from, or -1.
    int next(int from = 0) const;

    template <typename F>
    void for_each(F f) const {
        for (int v = next(0); v >= 0; v = next(v + 1)) f(v);
    }

    std::vector<int> to_vector() const;
    int capacity() const { return nbits_; }

private:
    int nbits_ = 0;
    std::vector<uint64_t> w_;
};

// Simple undirected graph, dense vertex ids 0..n-1, adjacency rows as bitsets.
// Optional text labels mark gadget roles.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    int size() const { return n_; }
    int edge_count() const { return m_; }

    void add_edge(int u, int v);
    bool adjacent(int u, int v) const { return adj_[u].test(v); }
    const Bitset& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return adj_[v].count(); }

    // Edges as (u,v) with u < v, lexicographically sorted.
    std::vector<std::pair<int, int>> edges() const;

    bool connected_subset(const Bitset& s) const;
    bool is_complete() const { return m_ == n_ * (n_ - 1) / 2; }

    void set_label(int v, std::string text);
    const std::map<int, std::string>& labels() const { return labels_; }

    // Global cap on vertex counts; all paper gadgets at minimal parameters
    // fit well below the default.
    static int max_vertices();
    static void set_max_vertices(int n);

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.adj_ == b.adj_ && a.labels_ == b.labels_;
    }

private:
    int n_ = 0;
    int m_ = 0;
    std::vector<Bitset> adj_;
    std::map<int, std::string> labels_;
};

// True iff every pair in s is adjacent. Throws std::invalid_argument on an
// out-of-range vertex.
bool is_clique(const Graph& g, std::span<const int> s);

// Clique-sum of g1 and g2: s1[i] is identified with s2[i], then the edges in
// `drop` (given as pairs of g1-side clique vertices) are deleted from the
// shared clique. map1/map2 send original vertex ids into the result.
struct CliqueSumResult {
    Graph graph;
    std::vector<int> map1;
    std::vector<int> map2;
};
CliqueSumResult clique_sum(const Graph& g1, std::span<const int> s1,
                           const Graph& g2, std::span<const int> s2,
                           std::span<const std::pair<int, int>> drop = {});

// Certificate that K_t is a minor: t branch sets, pairwise disjoint, each
// connected, every pair joined by an edge.
struct MinorModel {
    std::vector<std::vector<int>> branch_sets;
    int order() const { return static_cast<int>(branch_sets.size()); }
};

struct ModelCheck {
    bool ok = false;
    std::string reason;
};
ModelCheck verify_minor_model(const Graph& g, const MinorModel& m);

Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);

}  // namespace minorlist

#endif

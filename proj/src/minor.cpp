#include "minorlist/minor.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace minorlist {

namespace {

struct BudgetHit {};

// ---------------------------------------------------------------------------
// Low-deficiency mode.  A model with exactly t branch sets in an n-vertex
// graph satisfies |D| + sum(|P|-1 over multi-vertex parts P) = n - t, where D
// is the set of unused vertices.  The vertices outside S := D u (union of
// parts) are singleton branch sets, so they must form a clique: S is a vertex
// cover of the complement graph, of size at most 2(n-t).
// ---------------------------------------------------------------------------
class DeficiencySearch {
public:
    DeficiencySearch(const Graph& g, int t, uint64_t budget)
        : g_(g), n_(g.size()), t_(t), d_(g.size() - t), budget_(budget) {}

    MinorSearchResult run() {
        for (int u = 0; u < n_; ++u)
            for (int v = u + 1; v < n_; ++v)
                if (!g_.adjacent(u, v)) comp_edges_.emplace_back(u, v);
        MinorSearchResult r;
        try {
            Bitset s(n_);
            enumerate_covers(s, 0, 0);
        } catch (const BudgetHit&) {
            r.status = MinorStatus::BudgetExceeded;
            r.nodes = nodes_;
            return r;
        }
        r.status = found_ ? MinorStatus::Found : MinorStatus::None;
        r.model = std::move(model_);
        r.nodes = nodes_;
        return r;
    }

private:
    // Branch on the first uncovered complement edge; at every covered state,
    // also allow padding S with extra vertices (they become deletions that
    // spend leftover cost).  Duplicates filtered through seen_.
    void enumerate_covers(Bitset& s, int size, int /*depth*/) {
        if (found_) return;
        tick();
        int eu = -1, ev = -1;
        for (auto& [u, v] : comp_edges_) {
            if (!s.test(u) && !s.test(v)) {
                eu = u;
                ev = v;
                break;
            }
        }
        if (eu < 0) {
            process_cover(s, size);
            if (found_ || size >= 2 * d_) return;
            // Padding: supersets are covers too and can be required to make
            // the cost come out exactly.
            for (int v = 0; v < n_; ++v) {
                if (s.test(v)) continue;
                s.set(v);
                enumerate_covers(s, size + 1, 0);
                s.reset(v);
                if (found_) return;
            }
            return;
        }
        if (size >= 2 * d_) return;
        s.set(eu);
        enumerate_covers(s, size + 1, 0);
        s.reset(eu);
        if (found_) return;
        s.set(ev);
        enumerate_covers(s, size + 1, 0);
        s.reset(ev);
    }

    void process_cover(const Bitset& s, int size) {
        auto key = s.to_vector();
        if (!seen_.insert(key).second) return;
        std::vector<int> elems = key;
        std::vector<int> deleted;
        std::vector<std::vector<int>> parts;
        split(elems, 0, 0, deleted, parts, s, size);
    }

    // Assign each element of S a role: deleted, or grouped into parts of
    // size >= 2.  cost = |deleted| + sum(|part|-1) must equal d exactly.
    void split(const std::vector<int>& elems, size_t idx, int cost,
               std::vector<int>& deleted, std::vector<std::vector<int>>& parts,
               const Bitset& s, int size) {
        if (found_) return;
        tick();
        if (cost > d_) return;
        if (idx == elems.size()) {
            for (auto& p : parts)
                if (p.size() < 2) return;
            if (cost == d_) try_structure(deleted, parts, s);
            return;
        }
        int v = elems[idx];
        // v deleted
        deleted.push_back(v);
        split(elems, idx + 1, cost + 1, deleted, parts, s, size);
        deleted.pop_back();
        if (found_) return;
        // v joins an existing part
        for (auto& p : parts) {
            p.push_back(v);
            split(elems, idx + 1, cost + 1, deleted, parts, s, size);
            p.pop_back();
            if (found_) return;
        }
        // v opens a new part (canonical: parts ordered by first element)
        parts.push_back({v});
        split(elems, idx + 1, cost, deleted, parts, s, size);
        parts.pop_back();
    }

    void try_structure(const std::vector<int>& deleted,
                       const std::vector<std::vector<int>>& parts, const Bitset& s) {
        tick();
        int n = n_;
        std::vector<Bitset> psets;
        for (auto& p : parts) {
            Bitset b(n);
            for (int v : p) b.set(v);
            if (!g_.connected_subset(b)) return;
            psets.push_back(std::move(b));
        }
        Bitset w(n);
        for (int v = 0; v < n; ++v)
            if (!s.test(v)) w.set(v);
        std::vector<Bitset> pn;
        for (auto& b : psets) {
            Bitset nb(n);
            for (int v = b.next(0); v >= 0; v = b.next(v + 1)) nb |= g_.neighbors(v);
            pn.push_back(std::move(nb));
        }
        // every part adjacent to all singletons and all other parts
        for (size_t i = 0; i < psets.size(); ++i) {
            if (!w.is_subset_of(pn[i])) return;
            for (size_t j = i + 1; j < psets.size(); ++j)
                if (!pn[i].intersects(psets[j])) return;
        }
        MinorModel m;
        for (int v = w.next(0); v >= 0; v = w.next(v + 1)) m.branch_sets.push_back({v});
        for (auto& p : parts) {
            auto q = p;
            std::sort(q.begin(), q.end());
            m.branch_sets.push_back(std::move(q));
        }
        std::sort(m.branch_sets.begin(), m.branch_sets.end());
        model_ = std::move(m);
        found_ = true;
    }

    void tick() {
        if (++nodes_ > budget_) throw BudgetHit{};
    }

    const Graph& g_;
    int n_, t_, d_;
    uint64_t budget_;
    uint64_t nodes_ = 0;
    bool found_ = false;
    std::optional<MinorModel> model_;
    std::vector<std::pair<int, int>> comp_edges_;
    std::set<std::vector<int>> seen_;
};

// ---------------------------------------------------------------------------
// General mode: contract edges one at a time and look for a K_t subgraph in
// the quotient.  States are partitions of the original vertex set into
// connected groups; identical partitions reached through different contraction
// orders are dropped via a signature set.
// ---------------------------------------------------------------------------
class ContractionSearch {
public:
    ContractionSearch(const Graph& g, int t, uint64_t budget) : g_(g), t_(t), budget_(budget) {}

    MinorSearchResult run() {
        int n = g_.size();
        std::vector<std::vector<int>> parts(n);
        for (int v = 0; v < n; ++v) parts[v] = {v};
        MinorSearchResult r;
        try {
            rec(g_, parts);
        } catch (const BudgetHit&) {
            r.status = MinorStatus::BudgetExceeded;
            r.nodes = nodes_;
            return r;
        }
        r.status = found_ ? MinorStatus::Found : MinorStatus::None;
        r.model = std::move(model_);
        r.nodes = nodes_;
        return r;
    }

private:
    void rec(const Graph& q, const std::vector<std::vector<int>>& parts) {
        if (found_) return;
        if (++nodes_ > budget_) throw BudgetHit{};
        int k = q.size();
        if (k < t_) return;
        if (q.edge_count() < t_ * (t_ - 1) / 2) return;
        std::vector<int> clique;
        if (find_clique(q, clique)) {
            MinorModel m;
            for (int i : clique) {
                auto b = parts[i];
                std::sort(b.begin(), b.end());
                m.branch_sets.push_back(std::move(b));
            }
            std::sort(m.branch_sets.begin(), m.branch_sets.end());
            model_ = std::move(m);
            found_ = true;
            return;
        }
        if (k == t_) return;  // contracting further only shrinks below t
        for (auto [i, j] : q.edges()) {
            auto merged = contract(q, parts, i, j);
            if (seen_.insert(signature(merged.second)).second) rec(merged.first, merged.second);
            if (found_) return;
        }
    }

    static std::pair<Graph, std::vector<std::vector<int>>> contract(
        const Graph& q, const std::vector<std::vector<int>>& parts, int i, int j) {
        int k = q.size();
        Graph out(k - 1);
        std::vector<int> remap(k);
        int next = 0;
        for (int v = 0; v < k; ++v) remap[v] = (v == j) ? -1 : next++;
        remap[j] = remap[i];
        for (auto [u, v] : q.edges()) {
            int a = remap[u], b = remap[v];
            if (a != b) out.add_edge(a, b);
        }
        std::vector<std::vector<int>> np(k - 1);
        for (int v = 0; v < k; ++v) {
            auto& dst = np[remap[v]];
            dst.insert(dst.end(), parts[v].begin(), parts[v].end());
        }
        for (auto& p : np) std::sort(p.begin(), p.end());
        return {std::move(out), std::move(np)};
    }

    // Partition signature: each original vertex mapped to the minimum vertex
    // of its group.
    std::string signature(const std::vector<std::vector<int>>& parts) const {
        std::vector<int> rep(g_.size());
        for (auto& p : parts)
            for (int v : p) rep[v] = p.front();
        std::string s;
        s.reserve(rep.size() * 2);
        for (int r : rep) {
            s.push_back(static_cast<char>(r & 0xff));
            s.push_back(static_cast<char>((r >> 8) & 0xff));
        }
        return s;
    }

    bool find_clique(const Graph& q, std::vector<int>& out) const {
        Bitset cand(q.size());
        for (int v = 0; v < q.size(); ++v) cand.set(v);
        out.clear();
        return extend_clique(q, out, cand);
    }

    bool extend_clique(const Graph& q, std::vector<int>& cur, const Bitset& cand) const {
        if (static_cast<int>(cur.size()) == t_) return true;
        int need = t_ - static_cast<int>(cur.size());
        if (cand.count() < need) return false;
        for (int v = cand.next(cur.empty() ? 0 : cur.back() + 1); v >= 0; v = cand.next(v + 1)) {
            Bitset nc = cand;
            nc &= q.neighbors(v);
            cur.push_back(v);
            if (extend_clique(q, cur, nc)) return true;
            cur.pop_back();
        }
        return false;
    }

    const Graph& g_;
    int t_;
    uint64_t budget_;
    uint64_t nodes_ = 0;
    bool found_ = false;
    std::optional<MinorModel> model_;
    std::unordered_set<std::string> seen_;
};

}  // namespace

MinorSearchResult find_kt_minor(const Graph& g, int t, uint64_t node_budget) {
    if (t <= 0) throw std::invalid_argument("find_kt_minor: t must be positive");
    int n = g.size();
    MinorSearchResult r;
    if (t > n) {
        r.status = MinorStatus::None;
        return r;
    }
    if (t == 1) {
        r.status = MinorStatus::Found;
        r.model = MinorModel{{{0}}};
        return r;
    }
    if (t == 2) {
        auto es = g.edges();
        if (es.empty()) {
            r.status = MinorStatus::None;
            return r;
        }
        r.status = MinorStatus::Found;
        r.model = MinorModel{{{es[0].first}, {es[0].second}}};
        return r;
    }
    if (n - t <= 6) return DeficiencySearch(g, t, node_budget).run();
    return ContractionSearch(g, t, node_budget).run();
}

}  // namespace minorlist

#include "minorlist/multicopy.hpp"

#include <algorithm>
#include <functional>

namespace minorlist {

Rational pick_eps_prime(Rational eps, int q) {
    if (eps.num == 0) throw std::invalid_argument("pick_eps_prime: eps must be positive");
    Rational ep(eps.num, eps.den * 2 * (q + 4));
    // verify (2 - q*eps') / (1 + 2*eps') >= 2 - eps/2 exactly:
    // (2*ed - q*en) * 2*pd >= (4*pd - pn) * (ed + 2*en), all denominators positive
    __int128 lhs = static_cast<__int128>(2 * ep.den - q * ep.num) * (2 * eps.den);
    __int128 rhs = static_cast<__int128>(4 * eps.den - eps.num) * (ep.den + 2 * ep.num);
    if (lhs < rhs) throw std::logic_error("pick_eps_prime: chosen eps' violates the required inequality");
    return ep;
}

uint64_t count_injections(uint64_t pool, int slots) {
    uint64_t c = 1;
    for (int i = 0; i < slots; ++i) {
        if (pool < static_cast<uint64_t>(i) + 1) return 0;
        c *= pool - i;
    }
    return c;
}

namespace {

std::string injection_key(const std::vector<int>& image) {
    std::string s;
    for (size_t i = 0; i < image.size(); ++i) {
        if (i) s.push_back(',');
        s += std::to_string(image[i]);
    }
    return s;
}

// enumerate injections A -> pool (by colour value, lexicographic)
void for_each_injection(const std::vector<int>& pool, int slots,
                        const std::function<void(const std::vector<int>&)>& cb) {
    std::vector<int> image;
    std::vector<char> used(pool.size(), 0);
    std::function<void()> rec = [&]() {
        if (static_cast<int>(image.size()) == slots) {
            cb(image);
            return;
        }
        for (size_t i = 0; i < pool.size(); ++i) {
            if (used[i]) continue;
            used[i] = 1;
            image.push_back(pool[i]);
            rec();
            image.pop_back();
            used[i] = 0;
        }
    };
    rec();
}

struct Pools {
    std::vector<std::vector<int>> X, Y;
    std::vector<int> allX;      // sorted
    std::vector<int> universe;  // sorted
};

Pools make_pools(int q, std::span<const int> ks, long long ysize) {
    Pools p;
    int next = 0;
    for (int j = 0; j < q; ++j) {
        std::vector<int> x;
        for (int i = 0; i < ks[j]; ++i) x.push_back(next++);
        p.X.push_back(std::move(x));
    }
    for (int j = 0; j < q; ++j) {
        std::vector<int> y;
        for (int i = 0; i < ysize; ++i) y.push_back(next++);
        p.Y.push_back(std::move(y));
    }
    for (auto& x : p.X) p.allX.insert(p.allX.end(), x.begin(), x.end());
    p.universe.resize(next);
    for (int i = 0; i < next; ++i) p.universe[i] = i;
    return p;
}

std::vector<int> copy_list(const SteinerGraph& h, const std::vector<int>& universe,
                           const std::vector<int>& image, int b_index) {
    // universe minus the colours of y's non-neighbours in A
    int y = h.B[b_index];
    std::vector<int> drop;
    for (int i = 0; i < h.n; ++i)
        if (!h.graph.adjacent(h.A[i], y)) drop.push_back(image[i]);
    std::sort(drop.begin(), drop.end());
    std::vector<int> out;
    for (int c : universe)
        if (!std::binary_search(drop.begin(), drop.end(), c)) out.push_back(c);
    return out;
}

}  // namespace

MultiCopyBuild build_thmkq(const SteinerGraph& h, int q, std::span<const int> ks,
                           Rational eps_prime, uint64_t copy_cap) {
    if (q < 1 || static_cast<int>(ks.size()) != q) throw std::invalid_argument("build_thmkq: ks must have q entries");
    int n = h.n;
    long long ysize = eps_prime.floor_times(n);
    Pools pools = make_pools(q, ks, ysize);
    uint64_t total = count_injections(pools.allX.size(), n);
    if (total > copy_cap)
        throw CapExceeded("build_thmkq: " + std::to_string(total) + " copies exceed the cap of " +
                          std::to_string(copy_cap));

    MultiCopyBuild out;
    out.universe_size = static_cast<int>(pools.universe.size());
    out.t = n + static_cast<int>(h.eps.ceil_times(2LL * n));
    std::vector<int> parts(ks.begin(), ks.end());
    // canonical lambda is non-increasing; realign the classes with it
    std::vector<int> order(q);
    for (int j = 0; j < q; ++j) order[j] = j;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return ks[a] > ks[b]; });
    out.lam = Lambda(parts);
    for (int j : order) {
        std::vector<int> cls = pools.X[j];
        cls.insert(cls.end(), pools.Y[j].begin(), pools.Y[j].end());
        std::sort(cls.begin(), cls.end());
        out.classes.classes.push_back(std::move(cls));
    }

    out.graph = Graph(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) out.graph.add_edge(i, j);
    out.lists.lists.assign(n, pools.allX);
    out.provenance.h1 = h.graph;
    out.provenance.k_in_h1 = h.A;
    out.provenance.base_size = n;

    std::vector<int> shared(n);
    for (int i = 0; i < n; ++i) shared[i] = i;
    for_each_injection(pools.allX, n, [&](const std::vector<int>& image) {
        auto sum = clique_sum(out.graph, shared, h.graph, h.A);
        out.graph = std::move(sum.graph);
        out.lists.lists.resize(out.graph.size());
        InjectionRecord rec;
        rec.image = image;
        rec.copy_map = sum.map2;
        for (int bi = 0; bi < n; ++bi) {
            int v = sum.map2[h.B[bi]];
            out.lists.lists[v] = copy_list(h, pools.universe, image, bi);
        }
        CopyRecord crec;
        crec.psi_key = injection_key(image);
        crec.base_clique = shared;
        crec.copy_map = sum.map2;
        out.provenance.copies.push_back(std::move(crec));
        out.copies.push_back(std::move(rec));
    });
    return out;
}

PerCopyReport verify_thmkq_percopy(const SteinerGraph& h, int q, std::span<const int> ks,
                                   Rational eps_prime, uint64_t copy_cap) {
    if (q < 1 || static_cast<int>(ks.size()) != q) throw std::invalid_argument("verify_thmkq_percopy: ks must have q entries");
    int n = h.n;
    Pools pools = make_pools(q, ks, eps_prime.floor_times(n));
    uint64_t total = count_injections(pools.allX.size(), n);
    if (total > copy_cap)
        throw CapExceeded("verify_thmkq_percopy: " + std::to_string(total) + " injections exceed the cap of " +
                          std::to_string(copy_cap));
    PerCopyReport rep;
    for_each_injection(pools.allX, n, [&](const std::vector<int>& image) {
        ++rep.copies_checked;
        // A fixed by the injection; the B-clique must pick distinct colours
        // from lists that already exclude the colours of adjacent A vertices
        std::vector<std::vector<int>> lists;
        for (int bi = 0; bi < n; ++bi) {
            auto l = copy_list(h, pools.universe, image, bi);
            std::vector<int> eff;
            for (int c : l) {
                bool clash = false;
                for (int i = 0; i < n && !clash; ++i)
                    if (h.graph.adjacent(h.A[i], h.B[bi]) && image[i] == c) clash = true;
                if (!clash) eff.push_back(c);
            }
            lists.push_back(std::move(eff));
        }
        if (clique_sdr(lists)) {
            rep.all_blocked = false;
            rep.failures.push_back(injection_key(image));
        }
    });
    return rep;
}

MultiCopyBuild build_ab(const SteinerGraph& h, int m, uint64_t copy_cap) {
    if (m < 1) throw std::invalid_argument("build_ab: m must be positive");
    int n = h.n;
    long long ncolors = 2LL * n * m - 1;
    // D = all m-subsets of [2nm-1], ranked lexicographically
    std::vector<std::vector<int>> subsets;
    {
        std::vector<int> comb(m);
        for (int i = 0; i < m; ++i) comb[i] = i;
        while (true) {
            subsets.push_back(comb);
            int i = m - 1;
            while (i >= 0 && comb[i] == ncolors - m + i) --i;
            if (i < 0) break;
            ++comb[i];
            for (int j = i + 1; j < m; ++j) comb[j] = comb[j - 1] + 1;
        }
    }
    uint64_t total = count_injections(subsets.size(), n);
    if (total > copy_cap)
        throw CapExceeded("build_ab: " + std::to_string(total) + " copies exceed the cap of " +
                          std::to_string(copy_cap));

    MultiCopyBuild out;
    out.universe_size = static_cast<int>(ncolors);
    out.t = n + static_cast<int>(h.eps.ceil_times(2LL * n));
    out.lam = Lambda(std::vector<int>(1, static_cast<int>(ncolors)));  // descriptive only: a-list universe
    std::vector<int> universe(ncolors);
    for (int i = 0; i < ncolors; ++i) universe[i] = i;
    out.classes.classes.push_back(universe);

    out.graph = Graph(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) out.graph.add_edge(i, j);
    out.lists.lists.assign(n, universe);
    out.provenance.h1 = h.graph;
    out.provenance.k_in_h1 = h.A;
    out.provenance.base_size = n;

    std::vector<int> shared(n);
    for (int i = 0; i < n; ++i) shared[i] = i;
    std::vector<int> sub_ids(subsets.size());
    for (size_t i = 0; i < subsets.size(); ++i) sub_ids[i] = static_cast<int>(i);
    for_each_injection(sub_ids, n, [&](const std::vector<int>& image_ids) {
        auto sum = clique_sum(out.graph, shared, h.graph, h.A);
        out.graph = std::move(sum.graph);
        out.lists.lists.resize(out.graph.size());
        InjectionRecord rec;
        rec.image = image_ids;
        rec.copy_map = sum.map2;
        for (int bi = 0; bi < n; ++bi) {
            int y = h.B[bi];
            std::vector<int> drop;
            for (int i = 0; i < n; ++i)
                if (!h.graph.adjacent(h.A[i], y))
                    drop.insert(drop.end(), subsets[image_ids[i]].begin(), subsets[image_ids[i]].end());
            sort_unique(drop);
            std::vector<int> l;
            for (int c : universe)
                if (!std::binary_search(drop.begin(), drop.end(), c)) l.push_back(c);
            out.lists.lists[sum.map2[y]] = std::move(l);
        }
        CopyRecord crec;
        crec.psi_key = injection_key(image_ids);
        crec.base_clique = shared;
        crec.copy_map = sum.map2;
        out.provenance.copies.push_back(std::move(crec));
        out.copies.push_back(std::move(rec));
    });
    return out;
}

PerCopyReport verify_ab_percopy(const SteinerGraph& h, int m, uint64_t copy_cap) {
    if (m < 1) throw std::invalid_argument("verify_ab_percopy: m must be positive");
    int n = h.n;
    long long ncolors = 2LL * n * m - 1;
    std::vector<std::vector<int>> subsets;
    {
        std::vector<int> comb(m);
        for (int i = 0; i < m; ++i) comb[i] = i;
        while (true) {
            subsets.push_back(comb);
            int i = m - 1;
            while (i >= 0 && comb[i] == ncolors - m + i) --i;
            if (i < 0) break;
            ++comb[i];
            for (int j = i + 1; j < m; ++j) comb[j] = comb[j - 1] + 1;
        }
    }
    uint64_t total = count_injections(subsets.size(), n);
    if (total > copy_cap)
        throw CapExceeded("verify_ab_percopy: " + std::to_string(total) + " injections exceed the cap of " +
                          std::to_string(copy_cap));
    PerCopyReport rep;
    std::vector<int> sub_ids(subsets.size());
    for (size_t i = 0; i < subsets.size(); ++i) sub_ids[i] = static_cast<int>(i);
    std::vector<int> universe(ncolors);
    for (int i = 0; i < ncolors; ++i) universe[i] = i;
    for_each_injection(sub_ids, n, [&](const std::vector<int>& image_ids) {
        // only injections with pairwise disjoint images arise from a proper
        // m-fold colouring of the A-clique
        std::vector<int> all;
        for (int id : image_ids) all.insert(all.end(), subsets[id].begin(), subsets[id].end());
        auto uniq = all;
        sort_unique(uniq);
        if (uniq.size() != all.size()) return;
        ++rep.copies_checked;

        Graph bclique(n);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) bclique.add_edge(i, j);
        // every colour used on A is unavailable to every B vertex: removed
        // from the list if the A vertex is a non-neighbour, blocked by
        // adjacency otherwise
        ListAssignment lists;
        std::vector<int> drop = all;
        sort_unique(drop);
        for (int bi = 0; bi < n; ++bi) {
            std::vector<int> l;
            for (int c : universe)
                if (!std::binary_search(drop.begin(), drop.end(), c)) l.push_back(c);
            lists.lists.push_back(std::move(l));
        }
        if (find_bfold(bclique, lists, m)) {
            rep.all_blocked = false;
            rep.failures.push_back(injection_key(image_ids));
        }
    });
    return rep;
}

}  // namespace minorlist

#include "minorlist/steiner.hpp"

#include "minorlist/assignment.hpp"

#include <random>

namespace minorlist {

SteinerReport verify_steiner(const Graph& h, const std::vector<int>& A, const std::vector<int>& B,
                             int n, Rational eps, uint64_t minor_budget) {
    SteinerReport rep;
    if (static_cast<int>(A.size()) != n || static_cast<int>(B.size()) != n)
        throw std::invalid_argument("verify_steiner: |A| and |B| must both equal n");
    {
        std::vector<int> all = A;
        all.insert(all.end(), B.begin(), B.end());
        auto uniq = all;
        sort_unique(uniq);
        if (uniq.size() != all.size()) throw std::invalid_argument("verify_steiner: A and B must be disjoint");
        if (static_cast<int>(all.size()) != h.size())
            throw std::invalid_argument("verify_steiner: A and B must partition the vertex set");
    }
    rep.cliques_ok = is_clique(h, A) && is_clique(h, B);

    long long bound = eps.floor_times(n);
    rep.degrees_ok = true;
    for (int v = 0; v < h.size(); ++v) {
        int nonnbrs = h.size() - 1 - h.degree(v);
        if (nonnbrs > bound) {
            rep.degrees_ok = false;
            rep.detail += "vertex " + std::to_string(v) + " has " + std::to_string(nonnbrs) +
                          " non-neighbours (bound " + std::to_string(bound) + "); ";
            break;
        }
    }

    rep.t = n + static_cast<int>(eps.ceil_times(2LL * n));  // ceil((1+2eps)n)
    auto r = find_kt_minor(h, rep.t, minor_budget);
    switch (r.status) {
        case MinorStatus::None: rep.minor_status = CheckStatus::Pass; break;
        case MinorStatus::Found:
            rep.minor_status = CheckStatus::Fail;
            rep.detail += "K_" + std::to_string(rep.t) + " minor found; ";
            break;
        case MinorStatus::BudgetExceeded: rep.minor_status = CheckStatus::Inconclusive; break;
    }
    return rep;
}

std::optional<SteinerGraph> sample_steiner(int n, Rational eps, uint64_t seed, int budget_attempts,
                                           uint64_t minor_budget) {
    // drop probability eps/2 realized as a 64-bit threshold
    unsigned __int128 scale = (unsigned __int128)1 << 64;
    uint64_t threshold =
        eps.num == 0 ? 0 : static_cast<uint64_t>(scale * static_cast<unsigned __int128>(eps.num) / (2ULL * eps.den));
    long long bound = eps.floor_times(n);

    for (int attempt = 0; attempt < budget_attempts; ++attempt) {
        std::seed_seq sq{seed, static_cast<uint64_t>(attempt)};
        std::mt19937_64 rng(sq);
        std::vector<std::vector<bool>> missing(n, std::vector<bool>(n, false));
        std::vector<int> miss_a(n, 0), miss_b(n, 0);
        bool rejected = false;
        for (int i = 0; i < n && !rejected; ++i)
            for (int j = 0; j < n; ++j) {
                if (rng() < threshold) {
                    missing[i][j] = true;
                    if (++miss_a[i] > bound || ++miss_b[j] > bound) {
                        rejected = true;
                        break;
                    }
                }
            }
        if (rejected) continue;

        SteinerGraph s;
        s.n = n;
        s.eps = eps;
        s.graph = Graph(2 * n);
        for (int i = 0; i < n; ++i) s.A.push_back(i);
        for (int j = 0; j < n; ++j) s.B.push_back(n + j);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                s.graph.add_edge(i, j);
                s.graph.add_edge(n + i, n + j);
            }
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (!missing[i][j]) s.graph.add_edge(i, n + j);

        auto rep = verify_steiner(s.graph, s.A, s.B, n, eps, minor_budget);
        if (rep.all_pass()) {
            s.verified_t = rep.t;
            return s;
        }
    }
    return std::nullopt;
}

SteinerGraph cyclic_instance(int n, int shifts, Rational eps) {
    if (shifts < 0 || shifts > n) throw std::invalid_argument("cyclic_instance: bad shift count");
    SteinerGraph s;
    s.n = n;
    s.eps = eps;
    s.graph = Graph(2 * n);
    for (int i = 0; i < n; ++i) s.A.push_back(i);
    for (int j = 0; j < n; ++j) s.B.push_back(n + j);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            s.graph.add_edge(i, j);
            s.graph.add_edge(n + i, n + j);
        }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            bool miss = false;
            for (int sft = 0; sft < shifts; ++sft)
                if (j == (i + sft) % n) miss = true;
            if (!miss) s.graph.add_edge(i, n + j);
        }
    return s;
}

SteinerGraph complete_join(int n, Rational eps) { return cyclic_instance(n, 0, eps); }

}  // namespace minorlist

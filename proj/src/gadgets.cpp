#include "minorlist/gadgets.hpp"

#include <algorithm>
#include <stdexcept>

namespace minorlist {

long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

long long thm2_threshold(int a) { return (2LL * a + 5) * binomial(2 * a + 5, a + 3) + 2; }
long long thm3_threshold(int a) {
    long long m = 1;
    for (int i = 0; i < a + 2; ++i) m *= 3;
    return (2LL * a + 5) * m + a + 3;
}

namespace {

std::vector<std::vector<int>> subsets_of_size(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> comb(k);
    for (int i = 0; i < k; ++i) comb[i] = i;
    while (true) {
        out.push_back(comb);
        int i = k - 1;
        while (i >= 0 && comb[i] == n - k + i) --i;
        if (i < 0) break;
        ++comb[i];
        for (int j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
    }
    return out;
}

std::string subset_text(const std::vector<int>& xs) {
    std::string s = "{";
    for (size_t i = 0; i < xs.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(xs[i]);
    }
    return s + "}";
}

}  // namespace

Thm2Gadget build_thm2(int a, int t) {
    if (a < 0) throw std::invalid_argument("build_thm2: a must be nonnegative");
    int asz = 2 * a + 5;
    if (t < asz) throw std::invalid_argument("build_thm2: t below 2a+5");

    Thm2Gadget g;
    g.a = a;
    g.t = t;
    g.in_regime = t >= thm2_threshold(a);
    int bsz = t - 2;
    g.graph = Graph(asz + bsz);
    for (int i = 0; i < asz; ++i) g.A.push_back(i);
    for (int i = 0; i < bsz; ++i) g.B.push_back(asz + i);
    for (int i = 0; i < asz; ++i)
        for (int j = i + 1; j < asz; ++j) g.graph.add_edge(i, j);
    for (int i = 0; i < bsz; ++i)
        for (int j = i + 1; j < bsz; ++j) g.graph.add_edge(asz + i, asz + j);

    // B spread round-robin over the (a+3)-subsets of A in lexicographic
    // order; fibre sizes differ by at most one and meet the floor bound.
    auto xs = subsets_of_size(asz, a + 3);
    for (auto& x : xs) g.families.emplace_back(x, std::vector<int>{});
    for (int i = 0; i < bsz; ++i) {
        int v = asz + i;
        auto& fam = g.families[i % g.families.size()];
        fam.second.push_back(v);
        for (int u : fam.first) g.graph.add_edge(u, v);
        g.graph.set_label(v, "B" + std::to_string(i) + ":X=" + subset_text(fam.first));
    }
    for (int i = 0; i < asz; ++i) g.graph.set_label(i, "A" + std::to_string(i));
    return g;
}

GadgetLists thm2_lists(const Thm2Gadget& g, std::span<const int> psi) {
    int a = g.a, t = g.t;
    int nb = t - 2 * a - 6;
    if (nb < 0) throw std::invalid_argument("thm2_lists: t below 2a+6");
    int na = 3 * a + 6, nc = 2 * a + 3;
    GadgetLists out;
    for (int i = 0; i < nb; ++i) out.b_colors.push_back(i);
    for (int i = 0; i < na; ++i) out.a_colors.push_back(nb + i);
    std::vector<int> c_colors;
    for (int i = 0; i < nc; ++i) c_colors.push_back(nb + na + i);

    int asz = static_cast<int>(g.A.size());
    if (psi.empty()) {
        for (int i = 0; i < asz; ++i) out.psi.push_back(out.a_colors[i]);
    } else {
        if (static_cast<int>(psi.size()) != asz) throw std::invalid_argument("thm2_lists: psi size mismatch");
        std::vector<int> seen;
        for (int c : psi) {
            if (!std::binary_search(out.a_colors.begin(), out.a_colors.end(), c))
                throw std::invalid_argument("thm2_lists: psi colour outside the a-colours");
            seen.push_back(c);
        }
        sort_unique(seen);
        if (seen.size() != psi.size()) throw std::invalid_argument("thm2_lists: psi is not injective");
        out.psi.assign(psi.begin(), psi.end());
    }

    out.lists.lists.assign(g.graph.size(), {});
    for (int v : g.A) {
        auto& l = out.lists.lists[v];
        l.insert(l.end(), out.b_colors.begin(), out.b_colors.end());
        l.insert(l.end(), out.a_colors.begin(), out.a_colors.end());
    }
    for (int v : g.B) {
        auto& l = out.lists.lists[v];
        for (int i = 0; i < asz; ++i)
            if (g.graph.adjacent(v, g.A[i])) l.push_back(out.psi[i]);
        l.insert(l.end(), out.b_colors.begin(), out.b_colors.end());
        l.insert(l.end(), c_colors.begin(), c_colors.end());
        std::sort(l.begin(), l.end());
    }

    std::vector<int> parts(nb, 1);
    parts.push_back(na);
    out.lam = Lambda(parts);
    // classes aligned with the canonical (non-increasing) part order: the big
    // class first, then the singletons
    out.classes.classes.push_back({});
    auto& bigc = out.classes.classes.back();
    bigc.insert(bigc.end(), out.a_colors.begin(), out.a_colors.end());
    bigc.insert(bigc.end(), c_colors.begin(), c_colors.end());
    std::sort(bigc.begin(), bigc.end());
    for (int i = 0; i < nb; ++i) out.classes.classes.push_back({out.b_colors[i]});
    return out;
}

CertificateReport verify_thm2_certificate(const Thm2Gadget& g) {
    int a = g.a, t = g.t;
    CertificateReport r;
    if (static_cast<int>(g.A.size()) != 2 * a + 5) return {false, "A has the wrong size", 0};
    if (static_cast<int>(g.B.size()) != t - 2) return {false, "B has the wrong size", 0};
    if (!is_clique(g.graph, g.A)) return {false, "A is not a clique", 0};
    if (!is_clique(g.graph, g.B)) return {false, "B is not a clique", 0};
    Bitset amask(g.graph.size());
    for (int v : g.A) amask.set(v);
    for (int v : g.B)
        if (g.graph.neighbors(v).intersection_count(amask) != a + 3)
            return {false, "vertex " + std::to_string(v) + " does not have exactly a+3 neighbours in A", 0};
    // every B vertex's A-neighbourhood must be one of the declared fibres
    long long total = 0;
    long long min_fibre = -1;
    for (auto& [x, bx] : g.families) {
        for (int v : bx) {
            for (int u : g.A) {
                bool want = std::binary_search(x.begin(), x.end(), u);
                if (g.graph.adjacent(v, u) != want) return {false, "fibre membership mismatch at vertex " + std::to_string(v), 0};
            }
        }
        total += static_cast<long long>(bx.size());
        long long sz = static_cast<long long>(bx.size());
        if (min_fibre < 0 || sz < min_fibre) min_fibre = sz;
    }
    if (total != static_cast<long long>(g.B.size())) return {false, "fibres do not partition B", 0};
    long long m = binomial(2 * a + 5, a + 3);
    long long fl = (t - 2) / m;
    if (min_fibre < fl) return {false, "a fibre is below floor((t-2)/m)", 0};
    // the chain: |A| + |B| - min |B_X| < t - 1 bounds every branch set's
    // neighbourhood when two branch sets sit inside A
    r.chain_value = (2LL * a + 5) + (t - 2) - min_fibre;
    if (r.chain_value >= t - 1) {
        r.ok = false;
        r.detail = "counting chain fails: " + std::to_string(r.chain_value) + " >= " + std::to_string(t - 1);
        return r;
    }
    r.ok = true;
    r.detail = "chain " + std::to_string(r.chain_value) + " < " + std::to_string(t - 1);
    return r;
}

std::vector<int> Thm3Gadget::A() const {
    std::vector<int> out;
    for (auto& tr : triples) out.insert(out.end(), tr.begin(), tr.end());
    return out;
}

Thm3Gadget build_thm3(int a, int t) {
    if (a < 0) throw std::invalid_argument("build_thm3: a must be nonnegative");
    if (t < a + 4) throw std::invalid_argument("build_thm3: t leaves B empty");
    Thm3Gadget g;
    g.a = a;
    g.t = t;
    g.in_regime = t >= thm3_threshold(a);
    int ntr = a + 2;
    int asz = 3 * ntr;
    int bsz = t - a - 3;
    g.graph = Graph(asz + bsz);
    for (int i = 0; i < ntr; ++i) g.triples.push_back({3 * i, 3 * i + 1, 3 * i + 2});
    for (int i = 0; i < bsz; ++i) g.B.push_back(asz + i);
    for (int i = 0; i < asz; ++i)
        for (int j = i + 1; j < asz; ++j) g.graph.add_edge(i, j);
    for (int i = 0; i < bsz; ++i)
        for (int j = i + 1; j < bsz; ++j) g.graph.add_edge(asz + i, asz + j);

    // T = subsets meeting every triple in exactly two vertices, enumerated by
    // which vertex each triple omits (lexicographic over omission patterns).
    int m = 1;
    for (int i = 0; i < ntr; ++i) m *= 3;
    for (int code = 0; code < m; ++code) {
        std::vector<int> x;
        int c = code;
        for (int i = 0; i < ntr; ++i) {
            int omit = c % 3;
            c /= 3;
            for (int j = 0; j < 3; ++j)
                if (j != omit) x.push_back(g.triples[i][j]);
        }
        std::sort(x.begin(), x.end());
        g.families.emplace_back(x, std::vector<int>{});
    }
    for (int i = 0; i < bsz; ++i) {
        int v = asz + i;
        auto& fam = g.families[i % g.families.size()];
        fam.second.push_back(v);
        for (int u : fam.first) g.graph.add_edge(u, v);
        g.graph.set_label(v, "B" + std::to_string(i) + ":X=" + subset_text(fam.first));
    }
    for (int i = 0; i < ntr; ++i)
        for (int j = 0; j < 3; ++j) g.graph.set_label(g.triples[i][j], "A" + std::to_string(i + 1) + "_" + std::to_string(j + 1));
    return g;
}

Thm3Lists thm3_lists(const Thm3Gadget& g, std::span<const int> psi) {
    int a = g.a, t = g.t;
    int nb = t - 5 * a - 9;
    if (nb < 0) throw std::invalid_argument("thm3_lists: t below 5a+9");
    int ntr = a + 2, nd = 2 * a + 3;

    Thm3Lists out;
    int next = 0;
    for (int j = 0; j < nd; ++j) out.d_triples.push_back({next, next + 1, next + 2}), next += 3;
    for (int i = 0; i < nb; ++i) out.b_colors.push_back(next++);
    std::vector<int> c_colors(nd);
    for (int j = 0; j < nd; ++j) c_colors[j] = next++;
    std::vector<std::array<int, 3>> cj_triples(nd);
    for (int j = 0; j < nd; ++j) cj_triples[j] = {next, next + 1, next + 2}, next += 3;

    auto avec = g.A();
    int asz = static_cast<int>(avec.size());
    if (psi.empty()) {
        for (int i = 0; i < ntr; ++i)
            for (int j = 0; j < 3; ++j) out.psi.push_back(out.d_triples[i][j]);
    } else {
        if (static_cast<int>(psi.size()) != asz) throw std::invalid_argument("thm3_lists: psi size mismatch");
        out.psi.assign(psi.begin(), psi.end());
    }
    // psi must map triple i onto a full d-triple, position by position, with
    // distinct targets
    std::vector<int> targets;
    for (int i = 0; i < ntr; ++i) {
        int i0 = -1;
        for (int j = 0; j < nd; ++j)
            if (out.psi[3 * i] == out.d_triples[j][0] && out.psi[3 * i + 1] == out.d_triples[j][1] &&
                out.psi[3 * i + 2] == out.d_triples[j][2])
                i0 = j;
        if (i0 < 0) throw std::invalid_argument("thm3_lists: psi is not triple-structured");
        targets.push_back(i0);
    }
    {
        auto check = targets;
        sort_unique(check);
        if (check.size() != targets.size()) throw std::invalid_argument("thm3_lists: psi repeats a d-triple");
    }
    out.selected_triples = targets;

    std::vector<int> iset = targets;
    std::sort(iset.begin(), iset.end());

    out.lists.lists.assign(g.graph.size(), {});
    for (int v : avec) {
        auto& l = out.lists.lists[v];
        for (auto& tr : out.d_triples) l.insert(l.end(), tr.begin(), tr.end());
        l.insert(l.end(), out.b_colors.begin(), out.b_colors.end());
        std::sort(l.begin(), l.end());
    }
    for (int v : g.B) {
        auto& l = out.lists.lists[v];
        for (int i = 0; i < asz; ++i)
            if (g.graph.adjacent(v, avec[i])) l.push_back(out.psi[i]);
        l.insert(l.end(), out.b_colors.begin(), out.b_colors.end());
        for (int j : iset) l.push_back(c_colors[j]);
        for (int j = 0; j < nd; ++j)
            if (!std::binary_search(iset.begin(), iset.end(), j))
                l.insert(l.end(), cj_triples[j].begin(), cj_triples[j].end());
        std::sort(l.begin(), l.end());
    }

    std::vector<int> parts(nd, 3);
    for (int i = 0; i < nb; ++i) parts.push_back(1);
    out.lam = Lambda(parts);
    // canonical order puts the 3-parts first; class j = d-triple + c_j + its
    // c^j triple, then the b singletons
    for (int j = 0; j < nd; ++j) {
        std::vector<int> cls(out.d_triples[j].begin(), out.d_triples[j].end());
        cls.push_back(c_colors[j]);
        cls.insert(cls.end(), cj_triples[j].begin(), cj_triples[j].end());
        std::sort(cls.begin(), cls.end());
        out.classes.classes.push_back(std::move(cls));
    }
    for (int i = 0; i < nb; ++i) out.classes.classes.push_back({out.b_colors[i]});
    return out;
}

CertificateReport verify_thm3_certificate(const Thm3Gadget& g) {
    int a = g.a, t = g.t;
    auto avec = g.A();
    if (static_cast<int>(avec.size()) != 3 * (a + 2)) return {false, "A has the wrong size", 0};
    if (static_cast<int>(g.B.size()) != t - a - 3) return {false, "B has the wrong size", 0};
    if (!is_clique(g.graph, avec)) return {false, "A is not a clique", 0};
    if (!is_clique(g.graph, g.B)) return {false, "B is not a clique", 0};
    for (int v : g.B)
        for (auto& tr : g.triples) {
            int cnt = 0;
            for (int u : tr)
                if (g.graph.adjacent(v, u)) ++cnt;
            if (cnt != 2) return {false, "vertex " + std::to_string(v) + " does not meet every triple in exactly 2", 0};
        }
    long long total = 0, min_fibre = -1;
    for (auto& [x, bx] : g.families) {
        for (int v : bx)
            for (int u : avec) {
                bool want = std::binary_search(x.begin(), x.end(), u);
                if (g.graph.adjacent(v, u) != want) return {false, "fibre membership mismatch at vertex " + std::to_string(v), 0};
            }
        total += static_cast<long long>(bx.size());
        long long sz = static_cast<long long>(bx.size());
        if (min_fibre < 0 || sz < min_fibre) min_fibre = sz;
    }
    if (total != static_cast<long long>(g.B.size())) return {false, "fibres do not partition B", 0};
    long long m = 1;
    for (int i = 0; i < a + 2; ++i) m *= 3;
    if (min_fibre < (t - a - 3) / m) return {false, "a fibre is below floor((t-a-3)/m)", 0};
    CertificateReport r;
    r.chain_value = 3LL * (a + 2) + (t - a - 3) - min_fibre;
    if (r.chain_value >= t - 1) {
        r.detail = "counting chain fails: " + std::to_string(r.chain_value) + " >= " + std::to_string(t - 1);
        return r;
    }
    r.ok = true;
    r.detail = "chain " + std::to_string(r.chain_value) + " < " + std::to_string(t - 1);
    return r;
}

std::vector<int> pattern_clique_thm2(std::span<const int> psi, const std::vector<int>& a_colors, int size) {
    std::vector<int> out;
    for (size_t v = 0; v < psi.size() && static_cast<int>(out.size()) < size; ++v)
        if (std::binary_search(a_colors.begin(), a_colors.end(), psi[v])) out.push_back(static_cast<int>(v));
    if (static_cast<int>(out.size()) < size)
        throw std::invalid_argument("pattern_clique_thm2: fewer than the guaranteed a-coloured vertices");
    return out;
}

Thm3Selection pattern_clique_thm3(std::span<const int> psi,
                                  const std::vector<std::array<int, 3>>& d_triples, int a) {
    int need = a + 2;
    Thm3Selection sel;
    for (size_t j = 0; j < d_triples.size() && static_cast<int>(sel.triple_ids.size()) < need; ++j) {
        std::array<int, 3> where{-1, -1, -1};
        for (size_t v = 0; v < psi.size(); ++v)
            for (int r = 0; r < 3; ++r)
                if (psi[v] == d_triples[j][r]) where[r] = static_cast<int>(v);
        if (where[0] >= 0 && where[1] >= 0 && where[2] >= 0) {
            sel.triple_ids.push_back(static_cast<int>(j));
            for (int r = 0; r < 3; ++r) sel.vertices.push_back(where[r]);
        }
    }
    if (static_cast<int>(sel.triple_ids.size()) < need)
        throw std::invalid_argument("pattern_clique_thm3: fewer complete d-triples than the counting bound requires");
    return sel;
}

Witness thm2_witness(int a, int t) {
    auto g = build_thm2(a, t);
    auto gl = thm2_lists(g);
    Witness w;
    w.graph = g.graph;
    w.lam = gl.lam;
    w.classes = gl.classes;
    w.lists = gl.lists;
    w.t = t;
    w.provenance = "thm2(a=" + std::to_string(a) + ",t=" + std::to_string(t) + ")";
    for (size_t i = 0; i < g.A.size(); ++i) w.pinned[g.A[i]] = gl.psi[i];
    GadgetInfo info;
    info.kind = "thm2";
    info.params = {{"a", a}, {"t", t}};
    info.A = g.A;
    info.B = g.B;
    w.gadget = std::move(info);
    return w;
}

Witness thm3_witness(int a, int t) {
    auto g = build_thm3(a, t);
    auto gl = thm3_lists(g);
    Witness w;
    w.graph = g.graph;
    w.lam = gl.lam;
    w.classes = gl.classes;
    w.lists = gl.lists;
    w.t = t;
    w.provenance = "thm3(a=" + std::to_string(a) + ",t=" + std::to_string(t) + ")";
    auto avec = g.A();
    for (size_t i = 0; i < avec.size(); ++i) w.pinned[avec[i]] = gl.psi[i];
    GadgetInfo info;
    info.kind = "thm3";
    info.params = {{"a", a}, {"t", t}};
    info.A = avec;
    info.B = g.B;
    w.gadget = std::move(info);
    return w;
}

ObstacleFamily thm2_family(int a, int t) {
    auto g = build_thm2(a, t);
    ObstacleFamily fam;
    fam.h1 = g.graph;
    fam.k = g.A;
    auto canonical = thm2_lists(g);
    fam.lam = canonical.lam;
    fam.classes = canonical.classes;
    fam.respond = [g](const std::vector<int>& psi) { return thm2_lists(g, psi).lists; };
    return fam;
}

ObstacleFamily thm3_family(int a, int t) {
    auto g = build_thm3(a, t);
    ObstacleFamily fam;
    fam.h1 = g.graph;
    fam.k = g.A();
    auto canonical = thm3_lists(g);
    fam.lam = canonical.lam;
    fam.classes = canonical.classes;
    fam.respond = [g](const std::vector<int>& psi) { return thm3_lists(g, psi).lists; };
    return fam;
}

}  // namespace minorlist

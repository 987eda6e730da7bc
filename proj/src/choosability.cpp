#include "minorlist/choosability.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace minorlist {

namespace {

// Enumerates, for one class, the canonical sequences of k-subsets over n
// vertices: new colours beyond the palette used so far must enter as a
// consecutive run starting at the first unused colour.  Subsets for a given
// palette size are cached in lexicographic order.
struct ClassEnumerator {
    int n, k, cap;
    std::vector<int> idx;          // per-vertex index into the table for its palette
    std::vector<int> used_before;  // palette size before vertex v chose
    std::map<int, std::vector<std::vector<int>>> tables;

    ClassEnumerator(int n_, int k_, int cap_)
        : n(n_), k(k_), cap(cap_), idx(n_, 0), used_before(n_ + 1, 0) {}

    const std::vector<std::vector<int>>& table(int used) {
        auto it = tables.find(used);
        if (it != tables.end()) return it->second;
        std::vector<std::vector<int>> subs;
        for (int j = 0; j <= k && used + j <= cap; ++j) {
            int old_take = k - j;
            if (old_take > used) continue;
            std::vector<int> comb(old_take);
            for (int i = 0; i < old_take; ++i) comb[i] = i;
            while (true) {
                std::vector<int> s = comb;
                for (int r = 0; r < j; ++r) s.push_back(used + r);
                subs.push_back(std::move(s));
                int i = old_take - 1;
                while (i >= 0 && comb[i] == used - old_take + i) --i;
                if (i < 0) break;
                ++comb[i];
                for (int r = i + 1; r < old_take; ++r) comb[r] = comb[r - 1] + 1;
            }
            if (old_take == 0) break;  // the single all-new subset
        }
        std::sort(subs.begin(), subs.end());
        return tables.emplace(used, std::move(subs)).first->second;
    }

    const std::vector<int>& choice(int v) { return table(used_before[v])[idx[v]]; }

    void settle(int v) {  // recompute palette size after v's choice
        const auto& s = choice(v);
        used_before[v + 1] = std::max(used_before[v], s.empty() ? 0 : s.back() + 1);
    }

    bool first() {
        for (int v = 0; v < n; ++v) {
            if (table(used_before[v]).empty()) return false;
            idx[v] = 0;
            settle(v);
        }
        return true;
    }

    // odometer step; false when the whole sequence space is exhausted
    bool advance() {
        for (int v = n - 1; v >= 0; --v) {
            if (idx[v] + 1 < static_cast<int>(table(used_before[v]).size())) {
                ++idx[v];
                settle(v);
                for (int u = v + 1; u < n; ++u) {
                    idx[u] = 0;
                    settle(u);
                }
                return true;
            }
        }
        return false;
    }
};

}  // namespace

ChoosableVerdict lambda_choosable_small(const Graph& g, const Lambda& lam,
                                        std::span<const int> universe_caps, uint64_t budget) {
    int n = g.size();
    ChoosableVerdict verdict;
    if (n == 0) return verdict;
    const auto& parts = lam.parts();
    if (!universe_caps.empty() && universe_caps.size() != parts.size())
        throw std::invalid_argument("universe_caps must align with lambda parts");

    // colour layout: one fixed colour per singleton part, one block per part
    // of size >= 2
    std::vector<int> caps(parts.size());
    for (size_t i = 0; i < parts.size(); ++i) {
        caps[i] = universe_caps.empty() ? parts[i] * n : universe_caps[i];
        if (parts[i] == 1) caps[i] = 1;  // singleton classes are canonical
        if (caps[i] < parts[i]) throw std::invalid_argument("cap below quota");
    }
    std::vector<int> base(parts.size());
    int next_color = 0;
    for (size_t i = 0; i < parts.size(); ++i) {
        base[i] = next_color;
        next_color += caps[i];
    }

    std::vector<size_t> big;
    for (size_t i = 0; i < parts.size(); ++i)
        if (parts[i] >= 2) big.push_back(i);

    std::vector<ClassEnumerator> enums;
    for (size_t i : big) enums.emplace_back(n, parts[i], caps[i]);
    for (auto& e : enums) e.first();

    auto build_and_test = [&]() -> bool {  // true when a witness was found
        ++verdict.assignments_tried;
        ListAssignment l;
        l.lists.assign(n, {});
        for (int v = 0; v < n; ++v) {
            for (size_t i = 0; i < parts.size(); ++i)
                if (parts[i] == 1) l.lists[v].push_back(base[i]);
            for (size_t bi = 0; bi < big.size(); ++bi)
                for (int c : enums[bi].choice(v)) l.lists[v].push_back(base[big[bi]] + c);
            std::sort(l.lists[v].begin(), l.lists[v].end());
        }
        if (find_coloring(g, l)) return false;
        ColourClasses cc;  // classes trimmed to the colours that appear
        cc.classes.assign(parts.size(), {});
        for (size_t i = 0; i < parts.size(); ++i)
            if (parts[i] == 1) cc.classes[i] = {base[i]};
        for (auto& xs : l.lists)
            for (int c : xs)
                for (size_t i = 0; i < parts.size(); ++i)
                    if (parts[i] >= 2 && c >= base[i] && c < base[i] + caps[i]) {
                        cc.classes[i].push_back(c);
                        break;
                    }
        for (auto& cls : cc.classes) sort_unique(cls);
        verdict.kind = ChoosableVerdict::Kind::Witness;
        verdict.witness_lists = std::move(l);
        verdict.witness_classes = std::move(cc);
        return true;
    };

    while (true) {
        if (verdict.assignments_tried >= budget) {
            verdict.kind = ChoosableVerdict::Kind::CapExceeded;
            return verdict;
        }
        if (build_and_test()) return verdict;
        // advance the class odometer, last class fastest
        int bi = static_cast<int>(enums.size()) - 1;
        while (bi >= 0 && !enums[bi].advance()) {
            enums[bi].first();
            --bi;
        }
        if (bi < 0) break;
    }
    verdict.kind = ChoosableVerdict::Kind::Choosable;
    return verdict;
}

}  // namespace minorlist

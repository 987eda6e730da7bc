#include "minorlist/obstacle.hpp"

#include <algorithm>

namespace minorlist {

std::string psi_key(const Coloring& psi) {
    std::string s;
    for (size_t i = 0; i < psi.size(); ++i) {
        if (i) s.push_back(',');
        s += std::to_string(psi[i]);
    }
    return s;
}

bool check_obstacle(const ObstacleFamily& fam, const std::vector<int>& psi) {
    if (psi.size() != fam.k.size()) throw std::invalid_argument("check_obstacle: psi size mismatch");
    ListAssignment l = fam.respond(psi);
    std::map<int, int> partial;
    for (size_t i = 0; i < fam.k.size(); ++i) partial[fam.k[i]] = psi[i];
    // find_coloring validates psi against lists and adjacency
    return !find_coloring(fam.h1, l, partial).has_value();
}

ComposeResult compose(const ObstacleFamily& fam, const Graph& h2, const ListAssignment& l2,
                      const CliqueSelector& select, const ComposeOptions& opts) {
    if (l2.size() != h2.size()) throw std::invalid_argument("compose: lists do not cover h2");
    if (!is_clique(fam.h1, fam.k)) throw std::invalid_argument("compose: family k is not a clique of h1");

    std::vector<Coloring> colorings;
    enumerate_colorings(h2, l2, [&](const Coloring& c) {
        colorings.push_back(c);
        return colorings.size() <= opts.copy_cap;
    });
    if (colorings.size() > opts.copy_cap)
        throw CapExceeded("compose: more than " + std::to_string(opts.copy_cap) + " proper colourings of h2");

    ComposeResult out;
    out.provenance.h1 = fam.h1;
    out.provenance.k_in_h1 = fam.k;
    out.provenance.base_size = h2.size();
    if (colorings.empty()) {
        out.graph = h2;
        out.lists = l2;
        out.degenerate = true;
        out.warning = "h2 admits no proper colouring; composition returns h2 unchanged";
        return out;
    }

    out.graph = h2;
    out.lists = l2;
    int p = static_cast<int>(fam.k.size());
    for (const auto& psi : colorings) {
        auto kv = select(psi);
        if (static_cast<int>(kv.size()) != p)
            throw std::invalid_argument("compose: selector returned a clique of the wrong size for psi=" + psi_key(psi));
        for (int v : kv)
            if (v < 0 || v >= h2.size())
                throw std::invalid_argument("compose: selector left h2 for psi=" + psi_key(psi));
        if (!is_clique(out.graph, kv))
            throw std::invalid_argument("compose: selector output is not a clique for psi=" + psi_key(psi));
        std::vector<int> psi_on_k(p);
        for (int i = 0; i < p; ++i) psi_on_k[i] = psi[kv[i]];
        if (opts.validate_obstacles && !check_obstacle(fam, psi_on_k))
            throw std::invalid_argument("compose: no obstacle for psi=" + psi_key(psi));

        ListAssignment l_psi = fam.respond(psi_on_k);
        auto sum = clique_sum(out.graph, kv, fam.h1, fam.k);
        out.graph = std::move(sum.graph);
        out.lists.lists.resize(out.graph.size());
        for (int v = 0; v < fam.h1.size(); ++v) {
            int w = sum.map2[v];
            if (w >= out.provenance.base_size && out.lists.lists[w].empty()) out.lists.lists[w] = l_psi.lists[v];
        }
        CopyRecord rec;
        rec.psi_key = psi_key(psi);
        rec.base_clique = kv;
        rec.copy_map = sum.map2;
        out.provenance.copies.push_back(std::move(rec));
    }
    return out;
}

ObstacleFamily toy_family() {
    ObstacleFamily fam;
    fam.h1 = complete_graph(3);
    fam.k = {0};
    fam.lam = Lambda({2});
    fam.classes.classes = {{0, 1, 2}};
    fam.respond = [](const std::vector<int>& psi) {
        int c = psi.at(0);
        int decoy = (c == 2) ? 1 : 2;  // class colour that never appears on the base
        ListAssignment l;
        l.lists = {{0, 1}, {c, decoy}, {c, decoy}};
        for (auto& xs : l.lists) std::sort(xs.begin(), xs.end());
        return l;
    };
    return fam;
}

Graph toy_base() { return complete_graph(2); }

ListAssignment toy_base_lists() { return ListAssignment{{{0, 1}, {0, 1}}}; }

CliqueSelector toy_selector() {
    return [](const Coloring&) { return std::vector<int>{0}; };
}

}  // namespace minorlist

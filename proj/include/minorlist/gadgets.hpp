#ifndef MINORLIST_GADGETS_HPP
#define MINORLIST_GADGETS_HPP

#include <array>
#include <span>

#include "minorlist/obstacle.hpp"
#include "minorlist/witness.hpp"

namespace minorlist {

// Two-clique gadget: A a (2a+5)-clique, B a (t-2)-clique, every B vertex with
// exactly a+3 neighbours in A, the fibre over each (a+3)-subset X of A at
// least floor((t-2)/m) large, m = C(2a+5, a+3).
struct Thm2Gadget {
    Graph graph;
    int a = 0, t = 0;
    std::vector<int> A;
    std::vector<int> B;
    std::vector<std::pair<std::vector<int>, std::vector<int>>> families;  // X -> B_X
    bool in_regime = false;                                               // t >= t_1(a)

    int m() const { return static_cast<int>(families.size()); }
};

long long binomial(int n, int k);
long long thm2_threshold(int a);  // t_1(a) = (2a+5)*C(2a+5,a+3) + 2

Thm2Gadget build_thm2(int a, int t);

struct GadgetLists {
    ListAssignment lists;
    Lambda lam;
    ColourClasses classes;
    std::vector<int> psi;       // colours placed on A, by A position
    std::vector<int> a_colors;  // pattern colours available on the base clique
    std::vector<int> b_colors;  // singleton-class colours
};

// Lists for an injective psi: A -> a-colours (empty psi = canonical, A in id
// order onto the first a-colours).  lambda = {1*(t-2a-6), 3a+6}.
GadgetLists thm2_lists(const Thm2Gadget& g, std::span<const int> psi = {});

struct CertificateReport {
    bool ok = false;
    std::string detail;
    long long chain_value = 0;  // |A| + |B| - min_X |B_X|, must be < t-1

    explicit operator bool() const { return ok; }
};

// Checks the structural hypotheses and the counting chain that certify
// K_t-minor-freeness without search.
CertificateReport verify_thm2_certificate(const Thm2Gadget& g);

// Triple-structured gadget: A = (a+2) triples, B a (t-a-3)-clique, every B
// vertex meeting each triple in exactly 2 vertices, fibres over T at least
// floor((t-a-3)/3^(a+2)) large.
struct Thm3Gadget {
    Graph graph;
    int a = 0, t = 0;
    std::vector<std::array<int, 3>> triples;  // A_1..A_{a+2}
    std::vector<int> B;
    std::vector<std::pair<std::vector<int>, std::vector<int>>> families;  // X in T -> B_X
    bool in_regime = false;                                               // t >= t_2(a)

    std::vector<int> A() const;
    int m() const { return static_cast<int>(families.size()); }
};

long long thm3_threshold(int a);  // t_2(a) = (2a+5)*3^(a+2) + a + 3

Thm3Gadget build_thm3(int a, int t);

struct Thm3Lists {
    ListAssignment lists;
    Lambda lam;
    ColourClasses classes;
    std::vector<int> psi;                        // colours on A, by A position
    std::vector<std::array<int, 3>> d_triples;   // d^j_1..3 for j in [2a+3]
    std::vector<int> b_colors;
    std::vector<int> selected_triples;           // I(psi)
};

// Lists for a triple-structured injective psi (empty = canonical: triple i
// coloured by d-triple i).  lambda = {1*(t-5a-9), 3*(2a+3)}.
Thm3Lists thm3_lists(const Thm3Gadget& g, std::span<const int> psi = {});

CertificateReport verify_thm3_certificate(const Thm3Gadget& g);

// Any proper colouring of a clique with colours from b-colours u a-colours
// uses at least `size` a-coloured vertices; returns the first `size` of them.
std::vector<int> pattern_clique_thm2(std::span<const int> psi, const std::vector<int>& a_colors, int size);

struct Thm3Selection {
    std::vector<int> vertices;     // 3(a+2) vertices, grouped by triple
    std::vector<int> triple_ids;   // the i_0 chosen per group, distinct
};

// Selects a+2 complete d-triples among the colours used by psi (the counting
// bound guarantees them) and returns the matching vertices in slot order.
Thm3Selection pattern_clique_thm3(std::span<const int> psi,
                                  const std::vector<std::array<int, 3>>& d_triples, int a);

// Witness bundles for the gadgets under the canonical psi, pinned on A.
Witness thm2_witness(int a, int t);
Witness thm3_witness(int a, int t);

// Obstacle families for composing against K_{t-1} (lists on the base are the
// A-side lists of the gadget).
ObstacleFamily thm2_family(int a, int t);
ObstacleFamily thm3_family(int a, int t);

}  // namespace minorlist

#endif

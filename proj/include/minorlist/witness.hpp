#ifndef MINORLIST_WITNESS_HPP
#define MINORLIST_WITNESS_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "minorlist/assignment.hpp"
#include "minorlist/graph.hpp"
#include "minorlist/lambda.hpp"
#include "minorlist/minor.hpp"

namespace minorlist {

enum class CheckStatus { Unchecked, Pass, Fail, Skipped, Inconclusive };
std::string to_string(CheckStatus s);

struct VerificationRecord {
    CheckStatus assignment = CheckStatus::Unchecked;
    CheckStatus coloring = CheckStatus::Unchecked;
    CheckStatus minor = CheckStatus::Unchecked;
    std::string notes;

    bool verified() const {
        return assignment == CheckStatus::Pass && coloring == CheckStatus::Pass && minor == CheckStatus::Pass;
    }
    bool partially_verified() const {
        return assignment == CheckStatus::Pass && coloring == CheckStatus::Pass && minor == CheckStatus::Skipped;
    }
};

// One glued copy of the obstacle graph inside a composed witness.
struct CopyRecord {
    std::string psi_key;           // base colouring serialized in vertex order
    std::vector<int> base_clique;  // vertices of the base the copy was glued on
    std::vector<int> copy_map;     // obstacle-graph vertex -> composed vertex
};

// Enough structure to re-derive minor-freeness of a composed graph from its
// ingredients: every copy of h1 is glued onto a clique of the base.
struct ComposeProvenance {
    Graph h1;
    std::vector<int> k_in_h1;
    int base_size = 0;
    std::vector<CopyRecord> copies;
};

// Parameters of a builder gadget, kept for certificate-mode verification and
// serialization.
struct GadgetInfo {
    std::string kind;  // "thm2" | "thm3" | "thmkq" | "ab"
    std::map<std::string, long long> params;
    std::vector<int> A, B;
};

// Bundle asserting "this graph is K_t-minor-free and not lambda-choosable".
// When `pinned` is nonempty the colouring claim is obstacle-style: the pinned
// clique colouring cannot be extended (the lists alone may admit colourings).
struct Witness {
    Graph graph;
    Lambda lam;
    ColourClasses classes;
    ListAssignment lists;
    int t = 0;
    std::string provenance;
    std::map<int, int> pinned;
    VerificationRecord verification;
    std::optional<ComposeProvenance> compose_info;
    std::optional<GadgetInfo> gadget;
};

enum class MinorMode { Exact, Certificate, SkipMinor };

struct VerificationReport {
    VerificationRecord record;
    std::string summary;  // "verified" | "partially verified" | "failed" | "inconclusive"
};

// Runs the assignment check, the (non-)colourability check and the minor
// check per mode; fills w.verification.  Budget hits yield Inconclusive,
// never Pass.
VerificationReport verify_witness(Witness& w, MinorMode mode,
                                  uint64_t minor_budget = kDefaultMinorBudget);

struct HBound {
    Lambda lam;
    int bound = 0;  // h(lambda) <= bound
};

// Records h(lambda) <= w.t - 1 in the witness provenance.  Refuses witnesses
// that are not verified (minor check may be certificate-based, not skipped).
HBound certify_h_upper(Witness& w);

}  // namespace minorlist

#endif

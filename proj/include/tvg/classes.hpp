#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tvg/graph.hpp"
#include "tvg/reach.hpp"

namespace tvg {

enum class ClassTag {
    J_st,       // a journey s ~> t exists
    TC,         // journeys between every ordered pair
    J_R_st,     // J_st from every start time
    TC_R,       // TC from every start time
    C_star,     // every snapshot connected
    E_R,        // every edge recurs infinitely often
    J_stk,      // DynMinCut(s,t) >= k
    J_R_stk,    // J_stk from every start time
    TC_k,       // DynMinCut >= k between every ordered pair
    TC_R_k,     // TC_k from every start time
    E_R_k,      // E_R and k-connected underlying graph
    CK_star_k,  // every snapshot k-connected
};

struct ClassQuery {
    ClassTag tag;
    std::optional<NodeId> s, t;
    std::optional<int> k;
    std::optional<int> from;
    bool exact = false;  // force exponential path for TC_R_k
    SearchLimits limits;
};

enum class Method { ExactExponential, Polynomial };

struct MembershipVerdict {
    bool member = false;
    Method method = Method::Polynomial;
    std::string witness;  // human-readable witness or counterexample
    std::optional<Journey> journey;
};

MembershipVerdict is_member(const EvolvingGraph& g, const ClassQuery& q);

// Union of cycle edge sets of an eventually-periodic graph; prefix-only
// edges appear a finite number of times and are excluded.
EdgeSet recurrent_edge_set(const EvolvingGraph& g);

// Parses class names as they appear on the CLI: "J_st", "TC", "J^R_st",
// "TC^R", "C*", "E^R", "J_stk", "J^R_stk", "TC_k", "TC^R_k", "E^R_k",
// "CK*_k".  Underscore spellings (ER_k, TCR_k, Cstar, ...) also accepted.
ClassTag parse_class_tag(const std::string& name);
std::string class_tag_name(ClassTag tag);

struct TheoremCheck {
    std::string name;
    bool applicable = false;
    bool pass = false;
    std::string detail;
};

// Executable forms of the inclusion theorems: a k-connected recurrent edge
// core implies recurrent temporal k-connectivity; snapshot k-connectivity
// implies a k-cut within every window of n-k instants; snapshot
// k-connectivity with infinite lifetime implies a k-connected recurrent
// edge set.  Throws HypothesisNotSatisfied when no hypothesis applies.
std::vector<TheoremCheck> check_inclusion_theorems(const EvolvingGraph& g, int k,
                                                   const SearchLimits& limits = {});

// Start offsets that exhaust all distinct suffixes G_[j,*] of a periodic
// graph: {0, ..., prefix_len + period - 1}.
std::vector<int> representative_offsets(const EvolvingGraph& g);

}  // namespace tvg

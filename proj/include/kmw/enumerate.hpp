#pragma once

#include <map>
#include <vector>

#include "kmw/cartan.hpp"
#include "kmw/engine.hpp"
#include "kmw/formulas.hpp"
#include "kmw/weights.hpp"

namespace kmw {

struct EnumerationPlan {
    std::vector<int> ordering;     // permutation of the input node set
    NodeSet terminal_independent;  // the independent set the loop stopped at
    std::map<int, int> c;          // exponent per node

    bool operator==(const EnumerationPlan&) const = default;
};

enum class EnumerationMode { Deterministic, Exhaustive };

// Free-direction enumeration. The loop repeatedly picks two adjacent nodes in
// the remaining set and removes the one with the smaller exponent, until the
// remainder is independent. For general lambda the ordering is
//   picked prefix, then H' \ H, then H, then the J_lambda^c part last,
// where H' is the terminal independent set and
//   H = { i in H' : c(i) > lambda_i - <xi, alpha_i^vee> },
// xi the total depth of the trailing J_lambda^c block.
//
// Deterministic mode picks the lexicographically least adjacent pair and
// breaks exponent ties toward the lower index; exhaustive mode branches over
// every adjacent pair and every tied minimum (the choices that can change the
// terminal set) and returns all distinct plans.
std::vector<EnumerationPlan> enumerate_free(const Gcm& g, const HighestWeight& lam,
                                            const NodeSet& free_nodes, const std::map<int, int>& c,
                                            EnumerationMode mode);

// Evaluates f_{i_1}^{c(i_1)} ... f_{i_n}^{c(i_n)} v_lambda in V along the
// plan's ordering and reports whether it is nonzero.
bool verify_nonvanishing(QuotientModule& v, const EnumerationPlan& plan);

struct BoundContributor {
    NodeSet h;                // the reindexed terminal subset H_t
    HighestWeight shifted;    // w_{H_t} . lambda
    DepthVector mu_relative;  // depth of mu below the shifted weight
    long dim = 0;             // multiplicity of mu in L(w_{H_t} . lambda)
};

struct MultiplicityBound {
    DepthVector mu;
    long bound = 0;
    bool exact = false;  // false = membership bound (engine unavailable)
    std::vector<BoundContributor> contributors;
};

// Lower bound on dim V_mu at mu = lambda - sum c(i) alpha_i over the free
// directions: runs the enumeration exhaustively, collects the distinct
// terminal sets H_t, and sums dim L(w_{H_t}.lambda)_mu via Shapovalov ranks.
// `engine` may be null; the bound then degrades to counting contributors
// whose membership the formula layer confirms, flagged exact = false.
MultiplicityBound multiplicity_lower_bound(const Gcm& g, const HighestWeight& lam,
                                           const NodeSet& free_nodes, const std::map<int, int>& c,
                                           QuotientModule* engine, int h);

}  // namespace kmw

#pragma once

#include <map>
#include <vector>

#include "kmw/cartan.hpp"
#include "kmw/engine.hpp"
#include "kmw/roots.hpp"
#include "kmw/weights.hpp"

namespace kmw {

// Queryable weight-membership predicate, valid up to a stated height; backed
// by a materialized truncated weight-set (formula-built or engine-built).
class MembershipOracle {
public:
    MembershipOracle() = default;
    explicit MembershipOracle(TruncatedWeightSet s);  // requires oracle(0) = true
    static MembershipOracle from_module(QuotientModule& m) { return MembershipOracle(m.weights()); }

    int height() const { return set_.height_bound(); }
    const HighestWeight& lambda() const { return set_.lambda(); }
    bool contains(const DepthVector& d) const { return set_.contains(d); }
    const TruncatedWeightSet& set() const { return set_; }

private:
    TruncatedWeightSet set_;
};

// wt M(lambda, J) truncated at H, computed three ways (Minkowski difference
// over Delta^+ \ Delta_J^+, minimal generators Delta_{J^c,1}, and the
// integrable slice decomposition); throws InternalMismatch if they disagree,
// JNotIntegrableForLambda if J is not contained in J_lambda.
TruncatedWeightSet parabolic_verma_weights(const Gcm& g, const HighestWeight& lam, const NodeSet& j, int h);

// wt L(lambda) = wt M(lambda, J_lambda) truncated at H.
TruncatedWeightSet simple_weights(const Gcm& g, const HighestWeight& lam, int h);

// cone_subtract(slice, Delta_{J_lambda^c,1}, H); equals wt V whenever the
// slice is wt_{J_lambda} V. Throws SliceOutsideJLambda.
TruncatedWeightSet extend_thmA(const TruncatedWeightSet& slice, const Gcm& g, const HighestWeight& lam,
                               int h);

struct MinkowskiReport {
    bool holds = false;
    int verified_height = 0;                // H minus the maximal generator height
    std::vector<DepthVector> mismatches;    // counterexample depths, either direction
};

struct JvReport {
    NodeSet jv;
    std::vector<NodeSet> witnesses;  // minimal independent sets with missing dot-shift
    int heights_checked = 0;
};

struct IntervalReport {
    bool holds = false;          // engine weight-set equals wt M(lambda, J)
    bool max_surjects = false;   // M(lambda, J) ->> V, i.e. J inside the integrability of V
    bool min_surjects = false;   // V ->> M(lambda)/N(lambda, J), i.e. kernel inside N(lambda, J)
    int verified_height = 0;
};

struct ChainEntry {
    DepthVector depth;
    int node = -1;  // node used to ascend from this entry; -1 on the last entry
};

MinkowskiReport minkowski_holds(const MembershipOracle& o, const Gcm& g, const NodeSet& j, int h);
JvReport compute_jv(const MembershipOracle& o, const Gcm& g, int h);
bool full_weights_holds(const MembershipOracle& o, const Gcm& g, int h);
IntervalReport interval_check(QuotientModule& v, const NodeSet& j, int h);

// Partition of the oracle's weight-set by the J^c-part xi of each depth;
// every slice is the weight-set of a highest-weight g_J-submodule, so each
// nonempty slice contains its own top xi. pre: J contains J_V; throws
// JDoesNotContainJV.
std::map<DepthVector, TruncatedWeightSet> slice_decompose(const MembershipOracle& o, const Gcm& g,
                                                          const NodeSet& j, int h);

// Ascent chain mu = mu_0 < mu_1 < ... < mu_n inside the J-slice of mu, with
// <mu_t, alpha_{i_t}^vee> > 0 and mu_{t-1} in [s_{i_t} mu_t, mu_t], ending
// once supp(lambda - mu_n) meet J is independent and none of its nodes can
// be cleared outright (so the top sits past every reachable dot-shift).
// Lowest admissible node first; throws ChainNotFound (a counterexample
// candidate) if the bounded search fails.
std::vector<ChainEntry> ascend_chain(const MembershipOracle& o, const Gcm& g, const DepthVector& mu,
                                     const NodeSet& j, int h);
std::vector<std::vector<ChainEntry>> all_ascend_chains(const MembershipOracle& o, const Gcm& g,
                                                       const DepthVector& mu, const NodeSet& j, int h,
                                                       std::size_t cap);

}  // namespace kmw

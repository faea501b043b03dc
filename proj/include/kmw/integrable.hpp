#pragma once

#include "kmw/cartan.hpp"
#include "kmw/weights.hpp"

namespace kmw {

// Weight-set of the largest integrable highest-weight module over the
// parabolic subalgebra for J, by saturated string closure: starting from
// lambda, every member mu with k = <mu, alpha_j^vee> > 0 (j in J) pulls in
// the full string mu - alpha_j, ..., mu - k alpha_j, to a fixpoint within
// height <= height_bound. pre: J contained in j_lambda(lambda); throws
// JNotIntegrableForLambda otherwise.
TruncatedWeightSet integrable_weights(const Gcm& g, const HighestWeight& lam, const NodeSet& j,
                                      int height_bound);

}  // namespace kmw

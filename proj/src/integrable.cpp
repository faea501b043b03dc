#include "kmw/integrable.hpp"

#include <deque>

#include "kmw/error.hpp"

namespace kmw {

TruncatedWeightSet integrable_weights(const Gcm& g, const HighestWeight& lam, const NodeSet& j,
                                      int height_bound) {
    g.check_nodes(j);
    if (!j.subset_of(j_lambda(lam)))
        fail("JNotIntegrableForLambda",
             "J = " + j.str() + " is not contained in J_lambda = " + j_lambda(lam).str());
    TruncatedWeightSet out(lam, height_bound);
    std::deque<DepthVector> work;
    out.insert(DepthVector::zero(g.n));
    work.push_back(DepthVector::zero(g.n));
    while (!work.empty()) {
        const DepthVector d = work.front();
        work.pop_front();
        for (int i : j) {
            const Rat p = pairing(g, lam, d, i);
            const long k = rat_to_long(p);  // integral since J is contained in J_lambda
            for (long t = 1; t <= k; ++t) {
                DepthVector nd = d.plus_units(i, static_cast<int>(t));
                if (nd.height() > height_bound) break;
                if (out.insert(nd)) work.push_back(std::move(nd));
            }
        }
    }
    return out;
}

}  // namespace kmw

#include "kmw/formulas.hpp"

#include <algorithm>

#include "kmw/error.hpp"
#include "kmw/integrable.hpp"

namespace kmw {

namespace {

std::vector<DepthVector> root_depths(const std::vector<Root>& rs) {
    std::vector<DepthVector> out;
    out.reserve(rs.size());
    for (const auto& r : rs) out.push_back(r.depth);
    return out;
}

// Delta_{J^c,1}: by the parabolic partial sum property this is the smallest
// generating set of the cone Z>=0(Delta^+ \ Delta_J^+); its generators are
// also as low as possible, which keeps truncation margins tight.
std::vector<DepthVector> minimal_cone_generators(const Gcm& g, const RootSet& rs, const NodeSet& j) {
    const NodeSet jc = g.all_nodes().minus(j);
    if (jc.empty()) return {};
    return root_depths(unit_height_roots(rs, jc));
}

int max_height(const std::vector<DepthVector>& v) {
    int h = 0;
    for (const auto& d : v) h = std::max(h, d.height());
    return h;
}

}  // namespace

MembershipOracle::MembershipOracle(TruncatedWeightSet s) : set_(std::move(s)) {
    // weight-sets of nonzero highest-weight modules always contain lambda
    require(set_.contains(DepthVector::zero(set_.lambda().size())), "Precondition",
            "membership oracle without the highest weight (zero module?)");
}

TruncatedWeightSet parabolic_verma_weights(const Gcm& g, const HighestWeight& lam, const NodeSet& j, int h) {
    g.check_nodes(j);
    const RootSet rs = positive_roots(g, h);
    const TruncatedWeightSet top = integrable_weights(g, lam, j, h);  // throws JNotIntegrableForLambda

    // route 1: Minkowski difference over all of Delta^+ \ Delta_J^+
    std::vector<DepthVector> full_gens;
    for (const auto& r : rs.roots)
        if (!r.depth.support().subset_of(j)) full_gens.push_back(r.depth);
    const TruncatedWeightSet route1 = cone_subtract(top, full_gens, h);

    // route 2: minimal generators Delta_{J^c,1}
    const TruncatedWeightSet route2 = cone_subtract(top, minimal_cone_generators(g, rs, j), h);

    // route 3: integrable slice decomposition over xi in Z>=0 Pi_{J^c}
    TruncatedWeightSet route3(lam, h);
    const NodeSet jc = g.all_nodes().minus(j);
    for (const auto& xi : all_depths(g.n, h)) {
        if (!xi.support().subset_of(jc)) continue;
        HighestWeight shifted = lam;
        for (int k = 0; k < g.n; ++k) shifted.p[k] = pairing(g, lam, xi, k);
        const TruncatedWeightSet slice = integrable_weights(g, shifted, j, h - xi.height());
        for (const auto& d : slice.depths()) route3.insert(xi.plus(d));
    }

    require(route1.equals(route2), "InternalMismatch",
            "parabolic Verma weights: Minkowski route differs from the minimal-generator route");
    require(route1.equals(route3), "InternalMismatch",
            "parabolic Verma weights: Minkowski route differs from the slice-decomposition route");
    return route1;
}

TruncatedWeightSet simple_weights(const Gcm& g, const HighestWeight& lam, int h) {
    return parabolic_verma_weights(g, lam, j_lambda(lam), h);
}

TruncatedWeightSet extend_thmA(const TruncatedWeightSet& slice, const Gcm& g, const HighestWeight& lam,
                               int h) {
    const NodeSet jl = j_lambda(lam);
    for (const auto& d : slice.depths())
        if (!d.support().subset_of(jl))
            fail("SliceOutsideJLambda", "slice member " + d.str() + " is not supported on J_lambda = " + jl.str());
    const RootSet rs = positive_roots(g, h);
    return cone_subtract(slice, minimal_cone_generators(g, rs, jl), h);
}

MinkowskiReport minkowski_holds(const MembershipOracle& o, const Gcm& g, const NodeSet& j, int h) {
    g.check_nodes(j);
    require(h <= o.height(), "InsufficientHeight",
            "oracle valid to " + std::to_string(o.height()) + ", requested " + std::to_string(h));
    const RootSet rs = positive_roots(g, h);
    const auto gens = minimal_cone_generators(g, rs, j);
    MinkowskiReport rep;
    rep.verified_height = h - max_height(gens);
    const TruncatedWeightSet lhs = o.set().truncate(rep.verified_height);
    const TruncatedWeightSet slice = lhs.restrict_support(j);
    const TruncatedWeightSet rhs = cone_subtract(slice, gens, rep.verified_height);
    for (const auto& d : lhs.difference(rhs)) rep.mismatches.push_back(d);
    for (const auto& d : rhs.difference(lhs)) rep.mismatches.push_back(d);
    std::sort(rep.mismatches.begin(), rep.mismatches.end());
    rep.holds = rep.mismatches.empty();
    return rep;
}

JvReport compute_jv(const MembershipOracle& o, const Gcm& g, int h) {
    require(h <= o.height(), "InsufficientHeight",
            "oracle valid to " + std::to_string(o.height()) + ", requested " + std::to_string(h));
    const HighestWeight& lam = o.lambda();
    const NodeSet jl = j_lambda(lam);
    const auto independents = independent_subsets(g, jl);
    int required = 0;
    for (const auto& i : independents) {
        int ht = 0;
        for (int k : i) ht += static_cast<int>(rat_to_long(lam.p[k])) + 1;
        required = std::max(required, ht);
    }
    require(required <= h, "InsufficientHeight",
            "compute_jv needs height >= " + std::to_string(required) + ", given " + std::to_string(h));
    JvReport rep;
    rep.heights_checked = h;
    // increasing cardinality, supersets of witnesses pruned: a superset of a
    // witness cannot be minimal
    for (const auto& i : independents) {
        if (i.empty()) continue;
        bool above_witness = false;
        for (const auto& w : rep.witnesses)
            if (w.subset_of(i)) { above_witness = true; break; }
        if (above_witness) continue;
        DepthVector dot = DepthVector::zero(g.n);
        for (int k : i) dot.c[k] = static_cast<int>(rat_to_long(lam.p[k])) + 1;
        if (!o.contains(dot)) {
            rep.witnesses.push_back(i);
            rep.jv = rep.jv.unioned(i);
        }
    }
    return rep;
}

bool full_weights_holds(const MembershipOracle& o, const Gcm& g, int h) {
    require(h <= o.height(), "InsufficientHeight",
            "oracle valid to " + std::to_string(o.height()) + ", requested " + std::to_string(h));
    // (B0) criterion: every depth supported on an independent set is present.
    for (const auto& d : all_depths(g.n, h)) {
        if (!is_independent(g, d.support())) continue;
        if (!o.contains(d)) return false;
    }
    return true;
}

IntervalReport interval_check(QuotientModule& v, const NodeSet& j, int h) {
    const Gcm& g = v.presentation().algebra;
    const HighestWeight& lam = v.presentation().lambda;
    require(j.subset_of(j_lambda(lam)), "Precondition", "J must be contained in J_lambda");
    require(h <= v.presentation().height_bound, "InsufficientHeight", "engine height too small");
    IntervalReport rep;
    rep.verified_height = h;
    rep.holds = v.weights().truncate(h).equals(parabolic_verma_weights(g, lam, j, h));
    // module-interval criterion (BJ): M(lambda,J) ->> V ->> M(lambda)/N(lambda,J)
    rep.max_surjects = j.subset_of(v.integrability());
    const GradedSubspaces nlj = construct_n_lambda_j(v.verma(), j);
    rep.min_surjects = true;
    for (const auto& [d, sp] : v.kernel()) {
        if (d.height() > h) continue;
        auto it = nlj.find(d);
        for (const auto& row : sp.rows()) {
            if (it == nlj.end() || !it->second.contains(row)) {
                rep.min_surjects = false;
                break;
            }
        }
        if (!rep.min_surjects) break;
    }
    return rep;
}

std::map<DepthVector, TruncatedWeightSet> slice_decompose(const MembershipOracle& o, const Gcm& g,
                                                          const NodeSet& j, int h) {
    require(h <= o.height(), "InsufficientHeight",
            "oracle valid to " + std::to_string(o.height()) + ", requested " + std::to_string(h));
    const JvReport jv = compute_jv(o, g, h);
    require(jv.jv.subset_of(j), "JDoesNotContainJV",
            "J = " + j.str() + " does not contain J_V = " + jv.jv.str());
    const NodeSet jc = g.all_nodes().minus(j);
    std::map<DepthVector, TruncatedWeightSet> slices;
    for (const auto& d : o.set().depths()) {
        if (d.height() > h) continue;
        DepthVector xi = DepthVector::zero(g.n);
        for (int k : jc) xi.c[k] = d.c[k];
        auto it = slices.find(xi);
        if (it == slices.end()) it = slices.emplace(xi, TruncatedWeightSet(o.lambda(), h)).first;
        it->second.insert(d);
    }
    return slices;
}

namespace {

// A chain stops once supp(beta) meet J is independent and no node of it can
// be cleared outright; the full-clearing steps push the top weight past every
// dot-shift it can still cross.
bool chain_terminal(const MembershipOracle& o, const Gcm& g, const HighestWeight& lam, const NodeSet& j,
                    const DepthVector& b) {
    const NodeSet sj = b.support().intersect(j);
    if (!is_independent(g, sj)) return false;
    for (int i : sj) {
        DepthVector next = b;
        next.c[i] = 0;
        const Rat p = pairing(g, lam, next, i);
        if (is_integer(p) && sgn(p) > 0 && Rat(b.c[i]) <= p && o.contains(next)) return false;
    }
    return true;
}

bool ascend_search(const MembershipOracle& o, const Gcm& g, const HighestWeight& lam,
                   const NodeSet& nodes, const NodeSet& j, const DepthVector& cur,
                   std::vector<ChainEntry>& chain, std::vector<std::vector<ChainEntry>>* collect,
                   std::size_t cap, std::vector<DepthVector>& dead) {
    if (chain_terminal(o, g, lam, j, cur)) {
        chain.push_back({cur, -1});
        if (collect) {
            collect->push_back(chain);
            chain.pop_back();
            return collect->size() >= cap;
        }
        return true;
    }
    if (std::find(dead.begin(), dead.end(), cur) != dead.end()) return false;
    // candidates: mu_next = mu_cur + s alpha_i with <mu_next, alpha_i^vee> > 0
    // and s <= <mu_next, alpha_i^vee>, staying inside the oracle
    for (int i : nodes) {
        for (int s = 1; s <= cur.c[i]; ++s) {
            DepthVector next = cur;
            next.c[i] -= s;
            const Rat p = pairing(g, lam, next, i);
            if (!(is_integer(p) && sgn(p) > 0 && Rat(s) <= p)) continue;
            if (!o.contains(next)) continue;
            chain.push_back({cur, i});
            const bool done = ascend_search(o, g, lam, nodes, j, next, chain, collect, cap, dead);
            if (done) return true;
            chain.pop_back();
        }
    }
    dead.push_back(cur);
    return false;
}

}  // namespace

std::vector<ChainEntry> ascend_chain(const MembershipOracle& o, const Gcm& g, const DepthVector& mu,
                                     const NodeSet& j, int h) {
    require(h <= o.height(), "InsufficientHeight", "oracle height too small");
    require(o.contains(mu), "Precondition", "mu = " + mu.str() + " is not a weight of the module");
    require(j.subset_of(j_lambda(o.lambda())), "Precondition", "J must be contained in J_lambda");
    const NodeSet nodes = mu.support().intersect(j);
    std::vector<ChainEntry> chain;
    std::vector<DepthVector> dead;
    if (!ascend_search(o, g, o.lambda(), nodes, j, mu, chain, nullptr, 0, dead))
        fail("ChainNotFound", "no ascent chain from " + mu.str() +
                                  " (counterexample candidate: the slice theorem guarantees one)");
    return chain;
}

std::vector<std::vector<ChainEntry>> all_ascend_chains(const MembershipOracle& o, const Gcm& g,
                                                       const DepthVector& mu, const NodeSet& j, int h,
                                                       std::size_t cap) {
    require(h <= o.height(), "InsufficientHeight", "oracle height too small");
    require(o.contains(mu), "Precondition", "mu = " + mu.str() + " is not a weight of the module");
    const NodeSet nodes = mu.support().intersect(j);
    std::vector<std::vector<ChainEntry>> out;
    std::vector<ChainEntry> tmp;
    // exhaustive search without the dead-state cut
    struct Rec {
        const MembershipOracle& o;
        const Gcm& g;
        const HighestWeight& lam;
        const NodeSet& nodes;
        const NodeSet& j;
        std::size_t cap;
        std::vector<std::vector<ChainEntry>>& out;
        void run(const DepthVector& cur, std::vector<ChainEntry>& acc) {
            if (out.size() >= cap) return;
            if (chain_terminal(o, g, lam, j, cur)) {
                acc.push_back({cur, -1});
                out.push_back(acc);
                acc.pop_back();
                return;
            }
            for (int i : nodes) {
                for (int s = 1; s <= cur.c[i]; ++s) {
                    DepthVector next = cur;
                    next.c[i] -= s;
                    const Rat p = pairing(g, lam, next, i);
                    if (!(is_integer(p) && sgn(p) > 0 && Rat(s) <= p)) continue;
                    if (!o.contains(next)) continue;
                    acc.push_back({cur, i});
                    run(next, acc);
                    acc.pop_back();
                    if (out.size() >= cap) return;
                }
            }
        }
    } rec{o, g, o.lambda(), nodes, j, cap, out};
    rec.run(mu, tmp);
    return out;
}

}  // namespace kmw

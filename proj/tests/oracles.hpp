// Test-side oracles, independent of the implementation paths they check.
#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "kmw/cartan.hpp"
#include "kmw/rational.hpp"
#include "kmw/weights.hpp"

namespace kmw::testing {

// Finite-type positive roots by closing the simple roots under all simple
// reflections (kept when the image stays positive). Independent of the
// Weyl-descent classifier used by positive_roots().
inline std::set<std::vector<int>> reflection_closure_roots(const Gcm& g) {
    std::set<std::vector<int>> roots;
    std::vector<std::vector<int>> work;
    for (int i = 0; i < g.n; ++i) {
        std::vector<int> e(g.n, 0);
        e[i] = 1;
        roots.insert(e);
        work.push_back(e);
    }
    while (!work.empty()) {
        const std::vector<int> b = work.back();
        work.pop_back();
        for (int i = 0; i < g.n; ++i) {
            long p = 0;
            for (int j = 0; j < g.n; ++j) p += static_cast<long>(g.a[i][j]) * b[j];
            std::vector<int> r = b;
            r[i] -= static_cast<int>(p);
            bool nonneg = true;
            for (int x : r) nonneg = nonneg && x >= 0;
            if (nonneg && roots.insert(r).second) work.push_back(r);
        }
    }
    return roots;
}

// Number of multisets of `roots` summing to d.
inline long kostant_count(const std::vector<DepthVector>& roots, const DepthVector& d, size_t from = 0) {
    if (d.is_zero()) return 1;
    if (from >= roots.size()) return 0;
    long total = kostant_count(roots, d, from + 1);
    if (auto rest = d.minus(roots[from])) total += kostant_count(roots, *rest, from);
    return total;
}

// Naive Minkowski-cone closure with std::set, for cross-checking cone_subtract.
inline std::set<DepthVector> naive_cone(const std::vector<DepthVector>& base,
                                        const std::vector<DepthVector>& gens, int h) {
    std::set<DepthVector> out;
    std::vector<DepthVector> work;
    for (const auto& b : base)
        if (b.height() <= h && out.insert(b).second) work.push_back(b);
    while (!work.empty()) {
        const DepthVector d = work.back();
        work.pop_back();
        for (const auto& g : gens) {
            DepthVector nd = d.plus(g);
            if (nd.height() <= h && out.insert(nd).second) work.push_back(nd);
        }
    }
    return out;
}

// Finite Weyl orbit of the weight lambda - beta (ordinary action), as depth
// vectors relative to lambda; members outside lambda - Z>=0 Pi are dropped.
inline std::set<DepthVector> weyl_orbit_depths(const Gcm& g, const HighestWeight& lam,
                                               const DepthVector& beta) {
    std::set<DepthVector> out{beta};
    std::vector<DepthVector> work{beta};
    while (!work.empty()) {
        const DepthVector b = work.back();
        work.pop_back();
        for (int i = 0; i < g.n; ++i) {
            const Rat p = pairing(g, lam, b, i);
            if (!is_integer(p)) continue;
            DepthVector r = b;
            r.c[i] += static_cast<int>(rat_to_long(p));
            if (r.c[i] < 0) continue;
            if (out.insert(r).second) work.push_back(r);
        }
    }
    return out;
}

// Weights of the sl2 module L(lambda): {lambda - 2k} for 0 <= k <= lambda if
// lambda is a nonnegative integer, every k >= 0 otherwise.
inline bool sl2_simple_has_depth(const Rat& lambda, int k) {
    if (is_nonneg_integer(lambda)) return Rat(k) <= lambda;
    return true;
}

}  // namespace kmw::testing

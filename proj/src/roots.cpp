#include "kmw/roots.hpp"

#include <algorithm>
#include <set>

#include "kmw/error.hpp"

namespace kmw {

bool RootSet::contains(const DepthVector& d) const { return find(d) != nullptr; }

const Root* RootSet::find(const DepthVector& d) const {
    Root probe{d, RootKind::Real};
    auto it = std::lower_bound(roots.begin(), roots.end(), probe);
    if (it != roots.end() && it->depth == d) return &*it;
    return nullptr;
}

std::optional<RootKind> classify_root(const Gcm& g, const DepthVector& d) {
    if (d.is_zero()) return std::nullopt;
    std::vector<int> v = d.c;
    auto support_connected = [&](const std::vector<int>& w) {
        std::vector<int> sup;
        for (int i = 0; i < g.n; ++i)
            if (w[i] != 0) sup.push_back(i);
        return connected_components(g, NodeSet(sup)).size() == 1;
    };
    while (true) {
        bool simple = false;
        int nonzero = 0, last = -1;
        for (int i = 0; i < g.n; ++i)
            if (v[i] != 0) { ++nonzero; last = i; }
        if (nonzero == 1 && v[last] == 1) simple = true;
        if (simple) return RootKind::Real;

        int pick = -1;
        long pick_pairing = 0;
        for (int i = 0; i < g.n; ++i) {
            long p = 0;
            for (int j = 0; j < g.n; ++j) p += static_cast<long>(g.a[i][j]) * v[j];
            if (p > 0) { pick = i; pick_pairing = p; break; }
        }
        if (pick < 0) {
            // all pairings <= 0: in the fundamental imaginary chamber
            return support_connected(v) ? std::optional<RootKind>(RootKind::Imaginary) : std::nullopt;
        }
        v[pick] -= static_cast<int>(pick_pairing);
        if (v[pick] < 0) return std::nullopt;  // reflection left the positive cone
    }
}

RootSet positive_roots(const Gcm& g, int height_bound) {
    require(height_bound >= 1, "Precondition", "height bound must be >= 1");
    RootSet rs;
    rs.gcm = g;
    rs.height_bound = height_bound;
    std::set<DepthVector> seen;
    std::vector<DepthVector> layer;
    for (int i = 0; i < g.n; ++i) {
        DepthVector d = DepthVector::unit(g.n, i);
        rs.roots.push_back({d, RootKind::Real});
        seen.insert(d);
        layer.push_back(d);
    }
    for (int h = 2; h <= height_bound && !layer.empty(); ++h) {
        std::vector<DepthVector> next;
        std::set<DepthVector> tried;
        for (const auto& b : layer) {
            for (int i = 0; i < g.n; ++i) {
                DepthVector cand = b.plus_units(i, 1);
                if (seen.count(cand) || !tried.insert(cand).second) continue;
                if (auto k = classify_root(g, cand)) {
                    rs.roots.push_back({cand, *k});
                    seen.insert(cand);
                    next.push_back(cand);
                }
            }
        }
        layer = std::move(next);
    }
    std::sort(rs.roots.begin(), rs.roots.end());
    return rs;
}

RootSet parabolic_roots(const RootSet& rs, const NodeSet& j) {
    rs.gcm.check_nodes(j);
    RootSet out;
    out.gcm = rs.gcm;
    out.height_bound = rs.height_bound;
    for (const auto& r : rs.roots)
        if (r.depth.support().subset_of(j)) out.roots.push_back(r);
    return out;
}

std::vector<Root> unit_height_roots(const RootSet& rs, const NodeSet& i) {
    require(!i.empty(), "Precondition", "unit_height_roots needs a nonempty node set");
    rs.gcm.check_nodes(i);
    std::vector<Root> out;
    for (const auto& r : rs.roots)
        if (r.depth.height_on(i) == 1) out.push_back(r);
    return out;
}

Root psp_witness(const RootSet& rs, const NodeSet& i, const Root& beta) {
    require(beta.depth.height_on(i) > 1, "Precondition", "psp_witness needs I-height > 1");
    require(beta.depth.height() <= rs.height_bound, "Precondition", "root set does not cover height of beta");
    for (const auto& g : unit_height_roots(rs, i)) {
        auto rest = beta.depth.minus(g.depth);
        if (rest && rs.contains(*rest)) return g;
    }
    fail("NoWitness", "no unit-I-height root splits off " + beta.depth.str() +
                          " (root-generation bug: the parabolic partial sum property guarantees one)");
}

std::vector<Root> descend_chain(const RootSet& rs, const NodeSet& i, const Root& beta) {
    require(beta.depth.height_on(i) == 1, "Precondition", "descend_chain needs beta in Delta_{I,1}");
    const NodeSet ic = rs.gcm.all_nodes().minus(i);
    std::vector<Root> chain{beta};
    DepthVector cur = beta.depth;
    while (cur.height_on(ic) > 0) {
        bool stepped = false;
        for (int j : ic.intersect(cur.support())) {
            auto down = cur.minus(DepthVector::unit(rs.gcm.n, j));
            if (!down) continue;
            if (const Root* r = rs.find(*down)) {
                chain.push_back(*r);
                cur = *down;
                stepped = true;
                break;
            }
        }
        if (!stepped)
            fail("NoStep", "no simple step below " + cur.str() +
                               " inside Delta_{I,1} (the descent lemma guarantees one)");
    }
    return chain;
}

}  // namespace kmw

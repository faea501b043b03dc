#include "kmw/weights.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

#include "kmw/error.hpp"

namespace kmw {

DepthVector DepthVector::unit(int n, int i) {
    std::vector<int> v(n, 0);
    v.at(i) = 1;
    return DepthVector(std::move(v));
}

int DepthVector::height() const { return std::accumulate(c.begin(), c.end(), 0); }

int DepthVector::height_on(const NodeSet& s) const {
    int h = 0;
    for (int i : s) h += c.at(i);
    return h;
}

NodeSet DepthVector::support() const {
    std::vector<int> v;
    for (int i = 0; i < size(); ++i)
        if (c[i] != 0) v.push_back(i);
    return NodeSet(std::move(v));
}

DepthVector DepthVector::plus(const DepthVector& o) const {
    DepthVector r = *this;
    for (int i = 0; i < size(); ++i) r.c[i] += o.c[i];
    return r;
}

DepthVector DepthVector::plus_units(int i, int k) const {
    DepthVector r = *this;
    r.c.at(i) += k;
    return r;
}

std::optional<DepthVector> DepthVector::minus(const DepthVector& o) const {
    DepthVector r = *this;
    for (int i = 0; i < size(); ++i) {
        r.c[i] -= o.c[i];
        if (r.c[i] < 0) return std::nullopt;
    }
    return r;
}

bool DepthVector::operator<(const DepthVector& o) const {
    const int h = height(), oh = o.height();
    if (h != oh) return h < oh;
    return c < o.c;
}

std::string DepthVector::str() const {
    std::string s = "[";
    for (int i = 0; i < size(); ++i) {
        if (i) s += ",";
        s += std::to_string(c[i]);
    }
    return s + "]";
}

std::vector<DepthVector> all_depths(int n, int h) {
    std::vector<DepthVector> out;
    DepthVector cur = DepthVector::zero(n);
    // depth-first over coordinates, then sort graded-lex
    std::vector<int> v(n, 0);
    auto rec = [&](auto&& self, int pos, int left) -> void {
        if (pos == n) {
            out.emplace_back(std::vector<int>(v));
            return;
        }
        for (int k = 0; k <= left; ++k) {
            v[pos] = k;
            self(self, pos + 1, left - k);
        }
        v[pos] = 0;
    };
    rec(rec, 0, h);
    std::sort(out.begin(), out.end());
    return out;
}

std::string HighestWeight::str() const {
    std::string s = "(";
    for (int i = 0; i < size(); ++i) {
        if (i) s += ",";
        s += rat_str(p[i]);
    }
    return s + ")";
}

Rat pairing(const Gcm& g, const HighestWeight& lam, const DepthVector& beta, int i) {
    g.check_node(i);
    Rat r = lam.p.at(i);
    for (int j = 0; j < g.n; ++j) r -= g.a[i][j] * beta.c.at(j);
    return r;
}

int depth_pairing(const Gcm& g, const DepthVector& beta, int i) {
    int r = 0;
    for (int j = 0; j < g.n; ++j) r += g.a[i][j] * beta.c.at(j);
    return r;
}

NodeSet j_lambda(const HighestWeight& lam) {
    std::vector<int> v;
    for (int i = 0; i < lam.size(); ++i)
        if (is_nonneg_integer(lam.p[i])) v.push_back(i);
    return NodeSet(std::move(v));
}

std::pair<HighestWeight, DepthVector> dot_reflect(const Gcm& g, const HighestWeight& lam, const NodeSet& h) {
    g.check_nodes(h);
    require(is_independent(g, h), "NotIndependent", "dot_reflect needs an independent node set, got " + h.str());
    DepthVector d = DepthVector::zero(g.n);
    for (int i : h) {
        require(is_nonneg_integer(lam.p.at(i)), "NotDominantOnH",
                "lambda_" + std::to_string(i) + " = " + rat_str(lam.p.at(i)) + " is not in Z>=0");
        d.c[i] = static_cast<int>(rat_to_long(lam.p[i])) + 1;
    }
    HighestWeight mu = lam;
    for (int k = 0; k < g.n; ++k) mu.p[k] = pairing(g, lam, d, k);
    return {mu, d};
}

std::pair<DepthVector, std::vector<int>> dominant_conjugate(const Gcm& g, const HighestWeight& lam,
                                                            const DepthVector& beta, const NodeSet& j) {
    g.check_nodes(j);
    for (int i : j)
        require(is_nonneg_integer(lam.p.at(i)), "Precondition",
                "dominant_conjugate needs lambda dominant-integral on J; lambda_" + std::to_string(i) + " = " + rat_str(lam.p.at(i)));
    DepthVector cur = beta;
    std::vector<int> word;
    bool moved = true;
    while (moved) {
        moved = false;
        for (int i : j) {
            const Rat p = pairing(g, lam, cur, i);
            if (sgn(p) >= 0) continue;
            const long k = rat_to_long(p);  // integral on J
            if (cur.c[i] + k < 0) continue;  // reflection would exit lambda - Z>=0 Pi
            cur.c[i] += static_cast<int>(k);
            word.push_back(i);
            moved = true;
            break;
        }
    }
    return {cur, word};
}

bool TruncatedWeightSet::contains(const DepthVector& d) const {
    return std::binary_search(depths_.begin(), depths_.end(), d);
}

bool TruncatedWeightSet::insert(const DepthVector& d) {
    require(d.height() <= h_, "HeightOverflow",
            "depth " + d.str() + " exceeds bound " + std::to_string(h_));
    auto it = std::lower_bound(depths_.begin(), depths_.end(), d);
    if (it != depths_.end() && *it == d) return false;
    depths_.insert(it, d);
    return true;
}

void TruncatedWeightSet::check_comparable(const TruncatedWeightSet& o) const {
    require(h_ == o.h_, "HeightMismatch",
            "comparing weight-sets with bounds " + std::to_string(h_) + " and " + std::to_string(o.h_));
    require(lambda_ == o.lambda_, "Precondition", "comparing weight-sets with different highest weights");
}

bool TruncatedWeightSet::equals(const TruncatedWeightSet& o) const {
    check_comparable(o);
    return depths_ == o.depths_;
}

TruncatedWeightSet TruncatedWeightSet::restrict_support(const NodeSet& j) const {
    TruncatedWeightSet r(lambda_, h_);
    for (const auto& d : depths_)
        if (d.support().subset_of(j)) r.depths_.push_back(d);
    return r;
}

TruncatedWeightSet TruncatedWeightSet::truncate(int h) const {
    require(h <= h_, "HeightMismatch", "cannot extend a weight-set beyond its bound");
    TruncatedWeightSet r(lambda_, h);
    for (const auto& d : depths_)
        if (d.height() <= h) r.depths_.push_back(d);
    return r;
}

std::vector<DepthVector> TruncatedWeightSet::difference(const TruncatedWeightSet& o) const {
    check_comparable(o);
    std::vector<DepthVector> out;
    std::set_difference(depths_.begin(), depths_.end(), o.depths_.begin(), o.depths_.end(),
                        std::back_inserter(out));
    return out;
}

TruncatedWeightSet cone_subtract(const TruncatedWeightSet& s, const std::vector<DepthVector>& gens,
                                 int height_bound) {
    for (const auto& gv : gens)
        require(!gv.is_zero(), "Precondition", "cone_subtract generators must be nonzero");
    TruncatedWeightSet out(s.lambda(), height_bound);
    std::deque<DepthVector> work;
    for (const auto& d : s.depths())
        if (d.height() <= height_bound && out.insert(d)) work.push_back(d);
    while (!work.empty()) {
        const DepthVector d = work.front();
        work.pop_front();
        for (const auto& gv : gens) {
            DepthVector nd = d.plus(gv);
            if (nd.height() > height_bound) continue;
            if (out.insert(nd)) work.push_back(std::move(nd));
        }
    }
    return out;
}

}  // namespace kmw

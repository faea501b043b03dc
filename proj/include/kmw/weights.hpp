#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kmw/cartan.hpp"
#include "kmw/rational.hpp"

namespace kmw {

// beta in Z>=0 Pi, encoding the weight lambda - beta of a highest-weight
// module. All weight bookkeeping is relative to lambda; there is no absolute
// weight-lattice representation.
struct DepthVector {
    std::vector<int> c;

    DepthVector() = default;
    explicit DepthVector(std::vector<int> v) : c(std::move(v)) {}
    static DepthVector zero(int n) { return DepthVector(std::vector<int>(n, 0)); }
    static DepthVector unit(int n, int i);

    int size() const { return static_cast<int>(c.size()); }
    int height() const;
    int height_on(const NodeSet& s) const;
    NodeSet support() const;
    bool is_zero() const { return height() == 0; }
    int operator[](int i) const { return c[i]; }

    DepthVector plus(const DepthVector& o) const;
    DepthVector plus_units(int i, int k) const;
    // nullopt when some coordinate would go negative.
    std::optional<DepthVector> minus(const DepthVector& o) const;

    bool operator==(const DepthVector&) const = default;
    // graded-lex: by height, then lexicographic on coefficients.
    bool operator<(const DepthVector& o) const;
    std::string str() const;
};

// All depth vectors on n nodes of height <= h, in graded-lex order.
std::vector<DepthVector> all_depths(int n, int h);

struct HighestWeight {
    std::vector<Rat> p;  // p[i] = <lambda, alpha_i^vee>

    HighestWeight() = default;
    explicit HighestWeight(std::vector<Rat> v) : p(std::move(v)) {}
    int size() const { return static_cast<int>(p.size()); }
    bool operator==(const HighestWeight&) const = default;
    std::string str() const;
};

// <lambda - sum beta_j alpha_j, alpha_i^vee> = lambda_i - sum_j a[i][j] beta_j.
Rat pairing(const Gcm& g, const HighestWeight& lam, const DepthVector& beta, int i);

// <beta, alpha_i^vee> for an integer depth vector.
int depth_pairing(const Gcm& g, const DepthVector& beta, int i);

// {i : lambda_i in Z>=0}, the integrable directions for lambda.
NodeSet j_lambda(const HighestWeight& lam);

// (prod_{i in H} s_i) . lambda for independent H with lambda_i in Z>=0 on H;
// returns the new pairing vector and the depth sum_{i in H} (lambda_i+1) alpha_i.
// Throws NotIndependent / NotDominantOnH.
std::pair<HighestWeight, DepthVector> dot_reflect(const Gcm& g, const HighestWeight& lam, const NodeSet& h);

// Applies s_j (j in J, lambda J-dominant) while some pairing is negative and
// the reflection stays in lambda - Z>=0 Pi; returns the conjugate depth and
// the reflection word applied.
std::pair<DepthVector, std::vector<int>> dominant_conjugate(const Gcm& g, const HighestWeight& lam,
                                                            const DepthVector& beta, const NodeSet& j);

// Finite set of depth vectors of height <= height_bound, canonically ordered.
// The bound is part of the set's identity: comparing sets with different
// bounds throws HeightMismatch rather than coercing.
class TruncatedWeightSet {
public:
    TruncatedWeightSet() = default;
    TruncatedWeightSet(HighestWeight lam, int height_bound)
        : lambda_(std::move(lam)), h_(height_bound) {}

    const HighestWeight& lambda() const { return lambda_; }
    int height_bound() const { return h_; }
    const std::vector<DepthVector>& depths() const { return depths_; }
    int size() const { return static_cast<int>(depths_.size()); }

    bool contains(const DepthVector& d) const;
    bool insert(const DepthVector& d);  // throws HeightOverflow above the bound
    bool equals(const TruncatedWeightSet& o) const;

    TruncatedWeightSet restrict_support(const NodeSet& j) const;
    TruncatedWeightSet truncate(int h) const;  // pre: h <= height_bound
    // members of *this missing from o (same lambda and bound required)
    std::vector<DepthVector> difference(const TruncatedWeightSet& o) const;

private:
    HighestWeight lambda_;
    int h_ = 0;
    std::vector<DepthVector> depths_;  // sorted graded-lex

    void check_comparable(const TruncatedWeightSet& o) const;
};

// {s + sum n_g g : s in S, n_g >= 0} truncated to height <= height_bound
// (depths add because weights subtract). pre: generators nonzero.
TruncatedWeightSet cone_subtract(const TruncatedWeightSet& s, const std::vector<DepthVector>& gens,
                                 int height_bound);

}  // namespace kmw

#pragma once

#include <optional>
#include <vector>

#include "kmw/cartan.hpp"
#include "kmw/weights.hpp"

namespace kmw {

enum class RootKind { Real, Imaginary };

struct Root {
    DepthVector depth;
    RootKind kind = RootKind::Real;

    bool operator==(const Root& o) const { return depth == o.depth; }
    bool operator<(const Root& o) const { return depth < o.depth; }
};

// Positive roots of height <= height_bound, deduplicated, in graded-lex order.
struct RootSet {
    Gcm gcm;
    int height_bound = 0;
    std::vector<Root> roots;

    bool contains(const DepthVector& d) const;
    const Root* find(const DepthVector& d) const;
};

// Weyl-descent classifier: repeatedly reflect at any node with positive
// pairing (strictly height-decreasing). A nonzero candidate is a positive
// root iff the descent ends at a simple root (Real) or at a vector with all
// pairings <= 0, connected support, never leaving the positive cone
// (Imaginary). Exposed for reuse and for independent re-verification.
std::optional<RootKind> classify_root(const Gcm& g, const DepthVector& d);

// Breadth-first generation over depth vectors by height. pre: H >= 1.
RootSet positive_roots(const Gcm& g, int height_bound);

// Roots of rs with support contained in j.
RootSet parabolic_roots(const RootSet& rs, const NodeSet& j);

// Delta_{I,1}: roots whose coefficient sum over I equals 1. pre: I nonempty.
std::vector<Root> unit_height_roots(const RootSet& rs, const NodeSet& i);

// gamma in Delta_{I,1} with beta - gamma again a positive root.
// pre: height_I(beta) > 1 and rs covers height(beta). Throws NoWitness.
Root psp_witness(const RootSet& rs, const NodeSet& i, const Root& beta);

// Chain beta = beta_1 > beta_2 > ... inside Delta_{I,1} with consecutive
// differences simple roots from Pi_{I^c}, ending at I^c-height 0.
// pre: beta in Delta_{I,1}. Throws NoStep.
std::vector<Root> descend_chain(const RootSet& rs, const NodeSet& i, const Root& beta);

}  // namespace kmw

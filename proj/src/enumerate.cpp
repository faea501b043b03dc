#include "kmw/enumerate.hpp"

#include <algorithm>
#include <set>

#include "kmw/error.hpp"

namespace kmw {

namespace {

int exponent_of(const std::map<int, int>& c, int node) {
    auto it = c.find(node);
    require(it != c.end(), "Precondition", "no exponent for node " + std::to_string(node));
    require(it->second >= 0, "Precondition", "exponents must be >= 0");
    return it->second;
}

std::vector<std::pair<int, int>> adjacent_pairs(const Gcm& g, const NodeSet& s) {
    std::vector<std::pair<int, int>> out;
    for (int a : s)
        for (int b : s)
            if (a < b && g.adjacent(a, b)) out.push_back({a, b});
    return out;
}

// All (picked-prefix, terminal) outcomes of the removal loop on `nodes`.
void removal_loop(const Gcm& g, const NodeSet& nodes, const std::map<int, int>& c, bool exhaustive,
                  std::vector<int>& prefix, std::set<std::pair<std::vector<int>, NodeSet>>& out) {
    const auto pairs = adjacent_pairs(g, nodes);
    if (pairs.empty()) {
        out.insert({prefix, nodes});
        return;
    }
    const size_t limit = exhaustive ? pairs.size() : 1;
    for (size_t k = 0; k < limit; ++k) {
        const auto [a, b] = pairs[k];
        const int ca = exponent_of(c, a), cb = exponent_of(c, b);
        std::vector<int> picks;
        if (ca < cb) picks = {a};
        else if (cb < ca) picks = {b};
        else picks = exhaustive ? std::vector<int>{a, b} : std::vector<int>{a};  // tie -> lower index
        for (int pick : picks) {
            prefix.push_back(pick);
            removal_loop(g, nodes.minus(NodeSet{pick}), c, exhaustive, prefix, out);
            prefix.pop_back();
        }
    }
}

}  // namespace

std::vector<EnumerationPlan> enumerate_free(const Gcm& g, const HighestWeight& lam,
                                            const NodeSet& free_nodes, const std::map<int, int>& c,
                                            EnumerationMode mode) {
    g.check_nodes(free_nodes);
    require(!free_nodes.empty(), "Precondition", "enumerate_free needs a nonempty node set");
    for (int i : free_nodes) exponent_of(c, i);

    const NodeSet jl = j_lambda(lam);
    const NodeSet head = free_nodes.intersect(jl);      // enumerated by the removal loop
    const NodeSet tail = free_nodes.minus(jl);          // J_lambda^c part, fixed order, last
    DepthVector xi = DepthVector::zero(g.n);
    for (int i : tail) xi.c[i] = exponent_of(c, i);

    std::set<std::pair<std::vector<int>, NodeSet>> outcomes;
    if (head.empty()) {
        outcomes.insert({{}, NodeSet{}});
    } else {
        std::vector<int> prefix;
        removal_loop(g, head, c, mode == EnumerationMode::Exhaustive, prefix, outcomes);
    }

    std::vector<EnumerationPlan> plans;
    for (const auto& [prefix, terminal] : outcomes) {
        EnumerationPlan plan;
        plan.terminal_independent = terminal;
        for (int i : free_nodes) plan.c[i] = exponent_of(c, i);
        plan.ordering = prefix;
        // split the terminal set: H' \ H first, then H
        NodeSet hset;
        for (int i : terminal) {
            const Rat threshold = lam.p.at(i) - Rat(depth_pairing(g, xi, i));
            if (Rat(exponent_of(c, i)) > threshold) hset.add(i);
        }
        for (int i : terminal.minus(hset)) plan.ordering.push_back(i);
        for (int i : hset) plan.ordering.push_back(i);
        for (int i : tail) plan.ordering.push_back(i);
        plans.push_back(std::move(plan));
    }
    std::sort(plans.begin(), plans.end(),
              [](const EnumerationPlan& x, const EnumerationPlan& y) { return x.ordering < y.ordering; });
    plans.erase(std::unique(plans.begin(), plans.end()), plans.end());
    return plans;
}

bool verify_nonvanishing(QuotientModule& v, const EnumerationPlan& plan) {
    Word w;
    for (int i : plan.ordering) {
        const int e = plan.c.at(i);
        if (e > 0) w.factors.push_back({i, e});
    }
    return v.apply_word(w).has_value();
}

MultiplicityBound multiplicity_lower_bound(const Gcm& g, const HighestWeight& lam,
                                           const NodeSet& free_nodes, const std::map<int, int>& c,
                                           QuotientModule* engine, int h) {
    MultiplicityBound out;
    out.mu = DepthVector::zero(g.n);
    for (int i : free_nodes) out.mu.c[i] = exponent_of(c, i);
    require(out.mu.height() <= h, "InsufficientHeight",
            "mu has height " + std::to_string(out.mu.height()) + " > " + std::to_string(h));

    const NodeSet tail = free_nodes.minus(j_lambda(lam));
    DepthVector xi = DepthVector::zero(g.n);
    for (int i : tail) xi.c[i] = exponent_of(c, i);

    // distinct terminal subsets H_t over all exhaustive runs
    std::set<NodeSet> hsets;
    for (const auto& plan : enumerate_free(g, lam, free_nodes, c, EnumerationMode::Exhaustive)) {
        NodeSet hset;
        for (int i : plan.terminal_independent) {
            const Rat threshold = lam.p.at(i) - Rat(depth_pairing(g, xi, i));
            if (Rat(exponent_of(c, i)) > threshold) hset.add(i);
        }
        hsets.insert(hset);
    }

    out.exact = engine != nullptr;
    for (const auto& hset : hsets) {
        BoundContributor contrib;
        contrib.h = hset;
        auto [shifted, dot] = dot_reflect(g, lam, hset);
        contrib.shifted = shifted;
        auto rel = out.mu.minus(dot);
        require(rel.has_value(), "InternalMismatch", "dot-shifted weight above mu");
        contrib.mu_relative = *rel;
        // membership check through the formula layer (positivity certificate)
        const bool member = simple_weights(g, shifted, rel->height() ? rel->height() : 1).contains(*rel);
        require(member, "InternalMismatch",
                "contributor simple does not contain mu (H = " + hset.str() + ")");
        if (engine) {
            VermaContext shifted_ctx(std::make_shared<PbwAlgebra>(
                                         std::make_shared<const ChevalleyBasis>(engine->verma().cb()),
                                         std::max(1, rel->height())),
                                     shifted);
            contrib.dim = shapovalov_rank(shifted_ctx, *rel);
            require(contrib.dim > 0, "InternalMismatch", "Shapovalov rank of a contributor vanished");
        } else {
            contrib.dim = 1;  // membership bound only
        }
        out.bound += contrib.dim;
        out.contributors.push_back(std::move(contrib));
    }
    return out;
}

}  // namespace kmw

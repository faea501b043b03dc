#include <doctest.h>

#include "kmw/error.hpp"
#include "kmw/formulas.hpp"
#include "kmw/integrable.hpp"
#include "kmw/verify.hpp"
#include "oracles.hpp"

using namespace kmw;

namespace {

DepthVector dv(std::vector<int> v) { return DepthVector(std::move(v)); }
HighestWeight hw(std::vector<Rat> v) { return HighestWeight(std::move(v)); }

QuotientModule example14(int h = 8) {
    return QuotientModule({gcm_of_type("A2"), hw({0, 0}), {Word{{{0, 2}, {1, 1}}}}, h});
}

QuotientModule example_a1a1(int h = 8) {
    return QuotientModule({gcm_of_type("A1xA1"), hw({0, 0}), {Word{{{0, 1}, {1, 1}}}}, h});
}

}  // namespace

TEST_CASE("parabolic_verma_weights examples") {
    const Gcm a2 = gcm_of_type("A2");
    // J = empty: the Verma has full weights
    const TruncatedWeightSet full = parabolic_verma_weights(a2, hw({0, 0}), NodeSet{}, 3);
    CHECK(full.size() == static_cast<int>(all_depths(2, 3).size()));
    // J = {0}: Z>=0{a1, a0+a1} as depths, cross-checked against the engine
    const TruncatedWeightSet j0 = parabolic_verma_weights(a2, hw({0, 0}), NodeSet{0}, 6);
    const auto naive = testing::naive_cone({dv({0, 0})}, {dv({0, 1}), dv({1, 1})}, 6);
    CHECK(naive == std::set<DepthVector>(j0.depths().begin(), j0.depths().end()));
    QuotientModule engine({a2, hw({0, 0}), {Word{{{0, 1}}}}, 6});
    CHECK(engine.weights().equals(j0));
    // J = all: the trivial module
    CHECK(parabolic_verma_weights(a2, hw({0, 0}), NodeSet{0, 1}, 6).size() == 1);
    CHECK_THROWS_WITH_AS(parabolic_verma_weights(a2, hw({-1, 0}), NodeSet{0}, 4),
                         doctest::Contains("JNotIntegrableForLambda"), Error);
}

TEST_CASE("simple_weights examples") {
    const Gcm a2 = gcm_of_type("A2");
    {
        // lambda = -alpha_0, pairings (-2, 1): paper Example 1.4 writes
        // wt L(-a1) = -Z>=0{a1, a1+a2} \ {0} anchored at zero; as depths from
        // lambda this is the slice {0, a2} extended by the cone {a1, a1+a2},
        // and in particular contains the depth a2 alone.
        const TruncatedWeightSet s = simple_weights(a2, hw({-2, 1}), 6);
        CHECK(s.contains(dv({0, 1})));
        CHECK_FALSE(s.contains(dv({0, 2})));
        const auto naive = testing::naive_cone({dv({0, 0}), dv({0, 1})}, {dv({1, 0}), dv({1, 1})}, 6);
        CHECK(naive == std::set<DepthVector>(s.depths().begin(), s.depths().end()));
        // engine route: membership equals positive Shapovalov rank
        auto alg = std::make_shared<PbwAlgebra>(
            std::make_shared<const ChevalleyBasis>(build_algebra(a2)), 6);
        VermaContext vc(alg, hw({-2, 1}));
        for (const auto& d : all_depths(2, 6)) CHECK(s.contains(d) == (shapovalov_rank(vc, d) > 0));
    }
    {
        const TruncatedWeightSet s = simple_weights(gcm_of_type("A1"), hw({3}), 6);
        REQUIRE(s.size() == 4);
        for (int k = 0; k <= 3; ++k) CHECK(s.contains(dv({k})));
    }
    CHECK(simple_weights(a2, hw({0, 0}), 5).size() == 1);
}

TEST_CASE("extend_thmA examples") {
    const Gcm a2 = gcm_of_type("A2");
    {  // J_lambda = I: the cone is empty and the slice is returned unchanged
        QuotientModule v = example14();
        const TruncatedWeightSet slice = v.weights().restrict_support(NodeSet{0, 1});
        CHECK(extend_thmA(slice, a2, hw({0, 0}), 8).equals(v.weights()));
    }
    {  // lambda = (1, -3/2): slice {0, a0}; extension equals wt L(lambda)
        const HighestWeight lam = hw({1, Rat(-3) / 2});
        TruncatedWeightSet slice(lam, 6);
        slice.insert(dv({0, 0}));
        slice.insert(dv({1, 0}));
        const TruncatedWeightSet ext = extend_thmA(slice, a2, lam, 6);
        CHECK(ext.equals(simple_weights(a2, lam, 6)));
        auto alg = std::make_shared<PbwAlgebra>(
            std::make_shared<const ChevalleyBasis>(build_algebra(a2)), 6);
        VermaContext vc(alg, lam);
        for (const auto& d : all_depths(2, 6)) CHECK(ext.contains(d) == (shapovalov_rank(vc, d) > 0));
    }
    {  // A1xA1, lambda = (-1, 0), slice {0}: the free ray over node 0
        const HighestWeight lam = hw({-1, 0});
        TruncatedWeightSet slice(lam, 6);
        slice.insert(dv({0, 0}));
        const TruncatedWeightSet ext = extend_thmA(slice, gcm_of_type("A1xA1"), lam, 6);
        REQUIRE(ext.size() == 7);
        for (int k = 0; k <= 6; ++k) CHECK(ext.contains(dv({k, 0})));
        // engine cross-check: V = M(lambda)/<f_1 v>
        QuotientModule v({gcm_of_type("A1xA1"), lam, {Word{{{1, 1}}}}, 6});
        CHECK(v.weights().equals(ext));
    }
    {
        TruncatedWeightSet bad(hw({1, Rat(-3) / 2}), 4);
        bad.insert(dv({0, 1}));
        CHECK_THROWS_WITH_AS(extend_thmA(bad, a2, hw({1, Rat(-3) / 2}), 4),
                             doctest::Contains("SliceOutsideJLambda"), Error);
    }
}

TEST_CASE("minkowski_holds examples") {
    QuotientModule v = example_a1a1();
    const Gcm g = v.presentation().algebra;
    const MembershipOracle o = MembershipOracle::from_module(v);
    CHECK_FALSE(minkowski_holds(o, g, NodeSet{0}, 8).holds);
    CHECK_FALSE(minkowski_holds(o, g, NodeSet{}, 8).holds);
    CHECK(minkowski_holds(o, g, NodeSet{0, 1}, 8).holds);
    QuotientModule v2 = example14();
    const MembershipOracle o2 = MembershipOracle::from_module(v2);
    CHECK(minkowski_holds(o2, v2.presentation().algebra, NodeSet{}, 8).holds);
    // failed checks report counterexample depths
    const MinkowskiReport rep = minkowski_holds(o, g, NodeSet{0}, 8);
    CHECK_FALSE(rep.mismatches.empty());
    CHECK_THROWS_WITH_AS(minkowski_holds(o, g, NodeSet{0}, 9), doctest::Contains("InsufficientHeight"),
                         Error);
}

TEST_CASE("compute_jv examples") {
    {
        QuotientModule v = example14();
        const JvReport rep = compute_jv(MembershipOracle::from_module(v), v.presentation().algebra, 8);
        CHECK(rep.jv == NodeSet{});
        CHECK(rep.witnesses.empty());
    }
    {
        QuotientModule v = example_a1a1();
        const JvReport rep = compute_jv(MembershipOracle::from_module(v), v.presentation().algebra, 8);
        CHECK(rep.jv == NodeSet{0, 1});
        REQUIRE(rep.witnesses.size() == 1);
        CHECK(rep.witnesses[0] == NodeSet{0, 1});
    }
    {  // paper Example 5.4(3) on sl5 at reduced height (witness depths <= 3)
        QuotientModule v({gcm_of_type("A4"), hw({0, 1, 0, 0}),
                          {Word{{{0, 1}, {2, 1}}}, Word{{{1, 2}}}, Word{{{2, 2}, {3, 1}}},
                           Word{{{1, 2}, {3, 1}}}},
                          5});
        const JvReport rep = compute_jv(MembershipOracle::from_module(v), v.presentation().algebra, 5);
        CHECK(rep.jv == NodeSet{0, 1, 2});
        REQUIRE(rep.witnesses.size() == 2);
        CHECK(rep.witnesses[0] == NodeSet{1});
        CHECK(rep.witnesses[1] == NodeSet{0, 2});
    }
    {  // the insufficient-height error reports the required bound
        QuotientModule v({gcm_of_type("A1"), hw({6}), {}, 4});
        CHECK_THROWS_WITH_AS(compute_jv(MembershipOracle::from_module(v), v.presentation().algebra, 4),
                             doctest::Contains("7"), Error);
    }
}

TEST_CASE("formula layer on an affine algebra") {
    // the engine is finite-type only, but the formula routes accept any GCM
    const Gcm aff = gcm_of_type("A1~");
    const TruncatedWeightSet s = parabolic_verma_weights(aff, hw({0, 0}), NodeSet{0}, 5);
    CHECK(s.contains(dv({0, 0})));
    CHECK(s.contains(dv({1, 1})));   // delta lies in the cone over Delta_{{1},1}
    CHECK_FALSE(s.contains(dv({1, 0})));  // f_0 direction is integrable at lambda_0 = 0
    const TruncatedWeightSet verma = parabolic_verma_weights(aff, hw({0, 0}), NodeSet{}, 5);
    CHECK(verma.size() == static_cast<int>(all_depths(2, 5).size()));
    const TruncatedWeightSet l = simple_weights(aff, hw({1, 0}), 4);
    CHECK(l.contains(dv({1, 0})));
    CHECK_FALSE(l.contains(dv({2, 0})));
    // Minkowski check against a formula-built oracle
    const MembershipOracle o{s};
    CHECK(minkowski_holds(o, aff, NodeSet{0}, 5).holds);
}

TEST_CASE("jv witnesses are minimal") {
    QuotientModule v({gcm_of_type("A4"), hw({0, 1, 0, 0}),
                      {Word{{{0, 1}, {2, 1}}}, Word{{{1, 2}}}, Word{{{2, 2}, {3, 1}}},
                       Word{{{1, 2}, {3, 1}}}},
                      6});
    const MembershipOracle o = MembershipOracle::from_module(v);
    const Gcm g = v.presentation().algebra;
    const JvReport rep = compute_jv(o, g, 6);
    NodeSet uni;
    for (const auto& w : rep.witnesses) {
        uni = uni.unioned(w);
        for (const auto& k : all_subsets(w)) {
            if (k == w) continue;
            DepthVector dot = DepthVector::zero(g.n);
            for (int i : k) dot.c[i] = static_cast<int>(rat_to_long(o.lambda().p[i])) + 1;
            CHECK(o.contains(dot));  // proper subsets keep their dot-shifted weight
        }
    }
    CHECK(uni == rep.jv);
}

TEST_CASE("full_weights_holds examples") {
    QuotientModule v = example14();
    CHECK(full_weights_holds(MembershipOracle::from_module(v), v.presentation().algebra, 8));
    QuotientModule v2 = example_a1a1();
    CHECK_FALSE(full_weights_holds(MembershipOracle::from_module(v2), v2.presentation().algebra, 8));
    QuotientModule verma({gcm_of_type("B2"), hw({1, Rat(-1) / 2}), {}, 8});
    CHECK(full_weights_holds(MembershipOracle::from_module(verma), verma.presentation().algebra, 8));
}

TEST_CASE("interval_check examples") {
    {  // wt L(0) = wt M(0, J_lambda): the trivial-module presentation
        QuotientModule v({gcm_of_type("A2"), hw({0, 0}), {Word{{{0, 1}}}, Word{{{1, 1}}}}, 8});
        const IntervalReport rep = interval_check(v, NodeSet{0, 1}, 8);
        CHECK(rep.holds);
        CHECK(rep.max_surjects);
        CHECK(rep.min_surjects);
    }
    {  // A1xA1 example vs J = {0}: wt V != wt M(0, {0})
        QuotientModule v = example_a1a1();
        const IntervalReport rep = interval_check(v, NodeSet{0}, 8);
        CHECK_FALSE(rep.holds);
    }
    {  // Example 1.4 vs J = empty: full weights
        QuotientModule v = example14();
        const IntervalReport rep = interval_check(v, NodeSet{}, 8);
        CHECK(rep.holds);
        CHECK(rep.max_surjects);
        CHECK(rep.min_surjects);
    }
}

TEST_CASE("slice_decompose examples") {
    const Gcm a2 = gcm_of_type("A2");
    {  // M(0,{0}): slice at xi = k a1 is {k a1 + j a0 : 0 <= j <= k}
        QuotientModule v({a2, hw({0, 0}), {Word{{{0, 1}}}}, 8});
        const auto slices = slice_decompose(MembershipOracle::from_module(v), a2, NodeSet{0}, 8);
        for (const auto& [xi, slice] : slices) {
            const int k = xi.c[1];
            CHECK(slice.size() == std::min(k, 8 - k) + 1);
            for (int j = 0; j <= k && k + j <= 8; ++j) CHECK(slice.contains(dv({j, k})));
        }
    }
    {  // A1xA1 example with J = I: a single slice equal to wt V
        QuotientModule v = example_a1a1();
        const auto slices =
            slice_decompose(MembershipOracle::from_module(v), v.presentation().algebra, NodeSet{0, 1}, 8);
        REQUIRE(slices.size() == 1);
        CHECK(slices.begin()->second.equals(v.weights()));
    }
    {  // sl2 Verma with J = empty: singleton slices
        QuotientModule v({gcm_of_type("A1"), hw({-1}), {}, 6});
        const auto slices =
            slice_decompose(MembershipOracle::from_module(v), v.presentation().algebra, NodeSet{}, 6);
        CHECK(slices.size() == 7);
        for (const auto& [xi, slice] : slices) CHECK(slice.size() == 1);
    }
    {  // J must contain J_V
        QuotientModule v = example_a1a1();
        CHECK_THROWS_WITH_AS(
            slice_decompose(MembershipOracle::from_module(v), v.presentation().algebra, NodeSet{0}, 8),
            doctest::Contains("JDoesNotContainJV"), Error);
    }
}

TEST_CASE("ascend_chain examples") {
    {  // sl2, L(2), mu = lambda - 2a: single step up to lambda
        QuotientModule v({gcm_of_type("A1"), hw({2}), {Word{{{0, 3}}}}, 6});
        const auto chain =
            ascend_chain(MembershipOracle::from_module(v), v.presentation().algebra, dv({2}), NodeSet{0}, 6);
        REQUIRE(chain.size() == 2);
        CHECK(chain[0].depth == dv({2}));
        CHECK(chain[0].node == 0);
        CHECK(chain[1].depth == dv({0}));
        CHECK(chain[1].node == -1);
    }
    {  // A1xA1 example, mu = 2a0: support already independent
        QuotientModule v = example_a1a1();
        const auto chain = ascend_chain(MembershipOracle::from_module(v), v.presentation().algebra,
                                        dv({2, 0}), NodeSet{0, 1}, 8);
        REQUIRE(chain.size() == 1);
        CHECK(chain[0].node == -1);
    }
    {  // Example 1.4, mu = a0+a1: one step to an independent support
        QuotientModule v = example14();
        const auto chain = ascend_chain(MembershipOracle::from_module(v), v.presentation().algebra,
                                        dv({1, 1}), NodeSet{0, 1}, 8);
        CHECK(chain.size() == 2);
        CHECK(is_independent(v.presentation().algebra, chain.back().depth.support()));
        const auto all = all_ascend_chains(MembershipOracle::from_module(v), v.presentation().algebra,
                                           dv({1, 1}), NodeSet{0, 1}, 8, 50);
        CHECK(all.size() >= 2);  // both nodes admit a step
    }
}

TEST_CASE("route agreement and the (A2) equivalence on sampled presentations") {
    CheckResult routes = check_pvm_routes_vs_engine({"A2", "B2"}, {0, 1, 2}, 6);
    INFO(routes.detail);
    CHECK(routes.pass);
    CheckResult thmA = check_thmA_equivalence({"A2", "A1xA1", "B2"}, 12, 7, 17);
    INFO(thmA.detail);
    CHECK(thmA.pass);
    CheckResult thmC = check_thmC_equivalence({"A2", "A1xA1", "B2"}, 10, 7, 10, 23);
    INFO(thmC.detail);
    CHECK(thmC.pass);
}

TEST_CASE("theorem C monotonicity in J") {
    QuotientModule v = example_a1a1();
    const Gcm g = v.presentation().algebra;
    const MembershipOracle o = MembershipOracle::from_module(v);
    for (const auto& j : all_subsets(g.all_nodes()))
        for (const auto& jp : all_subsets(g.all_nodes())) {
            if (!j.subset_of(jp)) continue;
            if (minkowski_holds(o, g, j, 8).holds) CHECK(minkowski_holds(o, g, jp, 8).holds);
        }
}

TEST_CASE("(C0) freeness along J_V^c") {
    QuotientModule v({gcm_of_type("A2"), hw({1, 1}), {Word{{{0, 2}}}}, 7});
    const Gcm g = v.presentation().algebra;
    const MembershipOracle o = MembershipOracle::from_module(v);
    const JvReport jv = compute_jv(o, g, 7);
    const NodeSet free = g.all_nodes().minus(jv.jv);
    for (const auto& j : all_subsets(free))
        for (const auto& d : all_depths(g.n, 7))
            if (d.support().subset_of(j)) CHECK(o.contains(d));
}

TEST_CASE("free-direction lemma and string lemma on sampled presentations") {
    CheckResult fd = check_free_direction_lemma({"A2", "A1xA1", "B2"}, 8, 6, 31);
    INFO(fd.detail);
    CHECK(fd.pass);
    CheckResult sl = check_string_lemma({"A2", "B2"}, 3, 6, 37);
    INFO(sl.detail);
    CHECK(sl.pass);
    CheckResult rp = check_reaching_property({"A2", "A1xA1", "B2"}, 6, 6, 41);
    INFO(rp.detail);
    CHECK(rp.pass);
}

TEST_CASE("slice and chain properties on sampled presentations") {
    CheckResult sp = check_slice_properties({"A2", "A1xA1", "B2"}, 8, 7, 43);
    INFO(sp.detail);
    CHECK(sp.pass);
    CheckResult ac = check_ascend_chains({"A2", "A1xA1", "B2"}, 8, 7, 47);
    INFO(ac.detail);
    CHECK(ac.pass);
}

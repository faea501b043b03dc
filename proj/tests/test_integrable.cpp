#include <doctest.h>

#include "kmw/error.hpp"
#include "kmw/engine.hpp"
#include "kmw/integrable.hpp"
#include "oracles.hpp"

using namespace kmw;

namespace {

DepthVector dv(std::vector<int> v) { return DepthVector(std::move(v)); }
HighestWeight hw(std::vector<Rat> v) { return HighestWeight(std::move(v)); }

}  // namespace

TEST_CASE("sl2 string for lambda = 3") {
    const TruncatedWeightSet s = integrable_weights(gcm_of_type("A1"), hw({3}), NodeSet{0}, 5);
    REQUIRE(s.size() == 4);
    for (int k = 0; k <= 3; ++k) CHECK(s.contains(dv({k})));
    CHECK_FALSE(s.contains(dv({4})));
    // sl2 oracle: depth k lies in wt L(lambda) iff k <= lambda
    for (int k = 0; k <= 5; ++k) CHECK(s.contains(dv({k})) == testing::sl2_simple_has_depth(Rat(3), k));
}

TEST_CASE("trivial module and a single short string") {
    CHECK(integrable_weights(gcm_of_type("A2"), hw({0, 0}), NodeSet{0, 1}, 6).size() == 1);
    const TruncatedWeightSet s = integrable_weights(gcm_of_type("A2"), hw({1, Rat(-3) / 2}), NodeSet{0}, 6);
    REQUIRE(s.size() == 2);
    CHECK(s.contains(dv({0, 0})));
    CHECK(s.contains(dv({1, 0})));
}

TEST_CASE("J must consist of integrable directions") {
    CHECK_THROWS_WITH_AS(integrable_weights(gcm_of_type("A2"), hw({1, Rat(-3) / 2}), NodeSet{1}, 4),
                         doctest::Contains("JNotIntegrableForLambda"), Error);
}

TEST_CASE("empty J gives the singleton and closure stays in Pi_J") {
    const Gcm b2 = gcm_of_type("B2");
    CHECK(integrable_weights(b2, hw({2, 1}), NodeSet{}, 5).size() == 1);
    const TruncatedWeightSet s = integrable_weights(b2, hw({2, 1}), NodeSet{1}, 5);
    for (const auto& d : s.depths()) CHECK(d.support().subset_of(NodeSet{1}));
}

TEST_CASE("W_J-invariance within truncation") {
    for (const auto& label : {"A2", "B2", "G2"}) {
        const Gcm g = gcm_of_type(label);
        const HighestWeight lam = hw({2, 1});
        const NodeSet j = g.all_nodes();
        const int h = 8;
        const TruncatedWeightSet s = integrable_weights(g, lam, j, h);
        for (const auto& d : s.depths())
            for (int i : j) {
                const long k = rat_to_long(pairing(g, lam, d, i));
                const long lo = std::min<long>(0, k), hi = std::max<long>(0, k);
                for (long t = lo; t <= hi; ++t) {
                    DepthVector m = d;
                    m.c[i] += static_cast<int>(t);
                    if (m.c[i] < 0 || m.height() > h) continue;
                    CHECK(s.contains(m));
                }
            }
    }
}

TEST_CASE("closure equals the engine's parabolic quotient restricted to J") {
    // string closure vs the weight support of M(lambda)/<f_j^{lambda_j+1} v>
    // restricted to Pi_J, on finite type of rank <= 3
    for (const auto& label : {"A2", "B2", "A3"}) {
        const Gcm g = gcm_of_type(label);
        for (const auto& lam : {std::vector<long>{1, 0, 2}, std::vector<long>{2, 2, 1},
                                std::vector<long>{0, 1, 3}}) {
            std::vector<Rat> p;
            for (int i = 0; i < g.n; ++i) p.push_back(Rat(lam[i]));
            const HighestWeight hwl(std::move(p));
            for (const auto& j : all_subsets(g.all_nodes())) {
                std::vector<Word> rels;
                for (int jj : j) rels.push_back(Word{{{jj, static_cast<int>(lam[jj]) + 1}}});
                QuotientModule v({g, hwl, rels, 7});
                const TruncatedWeightSet closure = integrable_weights(g, hwl, j, 7);
                CHECK(v.weights().restrict_support(j).equals(closure));
            }
        }
    }
}

TEST_CASE("descent certificate for every member below the top") {
    const Gcm g = gcm_of_type("B2");
    const HighestWeight lam = hw({1, 2});
    const int h = 7;
    const TruncatedWeightSet s = integrable_weights(g, lam, NodeSet{0, 1}, h);
    for (const auto& d : s.depths()) {
        if (d.is_zero()) continue;
        bool certified = false;
        for (int i : NodeSet{0, 1}) {
            for (int t = 1; t <= d.c[i] && !certified; ++t) {
                DepthVector up = d;
                up.c[i] -= t;
                certified = s.contains(up) && pairing(g, lam, up, i) >= t;
            }
        }
        CHECK(certified);
    }
}

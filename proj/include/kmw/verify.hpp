#pragma once

#include <random>
#include <string>
#include <vector>

#include "kmw/engine.hpp"
#include "kmw/rational.hpp"

namespace kmw {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

// Deterministic corpus of quotient presentations used by the oracle-equivalence
// checks: lambda pairings drawn from `pool`, up to `max_relations` monomial
// relations of height <= `max_rel_height`.
ModulePresentation random_presentation(const Gcm& g, const std::vector<Rat>& pool, int max_relations,
                                       int max_rel_height, int height_bound, std::mt19937& rng);

CheckResult check_root_counts();
CheckResult check_root_classification(const std::vector<std::string>& algebras, int h);
CheckResult check_affine_a1_roots(int h);
CheckResult check_psp_totality(const std::vector<std::string>& algebras, int h);
CheckResult check_descend_chains(const std::vector<std::string>& algebras, int h);
CheckResult check_cone_algebra(unsigned seed);
CheckResult check_structure_constants(const std::vector<std::string>& algebras);
CheckResult check_action_consistency(const std::vector<std::string>& algebras, int h, unsigned seed);
CheckResult check_contravariance(const std::vector<std::string>& algebras, int h, unsigned seed);
CheckResult check_eserre2(const std::vector<std::string>& algebras, int instances, unsigned seed);
CheckResult check_serre_containment(const std::vector<std::string>& algebras, int instances, unsigned seed);
CheckResult check_integrable_invariance(const std::vector<std::string>& algebras, int h);
CheckResult check_string_lemma(const std::vector<std::string>& algebras, int instances, int h,
                               unsigned seed);
CheckResult check_reaching_property(const std::vector<std::string>& algebras, int instances, int h,
                                    unsigned seed);
CheckResult check_pvm_routes_vs_engine(const std::vector<std::string>& algebras,
                                       const std::vector<long>& pairing_pool, int h);
CheckResult check_simple_vs_shapovalov(const std::vector<std::string>& algebras,
                                       const std::vector<Rat>& pool, int lambdas_per_algebra, int h,
                                       unsigned seed);
CheckResult check_thmA_equivalence(const std::vector<std::string>& algebras, int instances, int h,
                                   unsigned seed);
// Theorem C equivalence; `safe_h` is the oracle height used so that every
// truncation margin still covers the largest possible witness depth.
CheckResult check_thmC_equivalence(const std::vector<std::string>& algebras, int instances, int h,
                                   int safe_h, unsigned seed);
CheckResult check_slice_properties(const std::vector<std::string>& algebras, int instances, int h,
                                   unsigned seed);
CheckResult check_ascend_chains(const std::vector<std::string>& algebras, int instances, int h,
                                unsigned seed);
CheckResult check_prop118(const std::vector<std::string>& algebras, int instances, unsigned seed);
CheckResult check_n_lambda_observations();
CheckResult check_free_direction_lemma(const std::vector<std::string>& algebras, int instances, int h,
                                       unsigned seed);
// (A2): wt_J V - Z>=0 Pi_{J^c} inside wt V  <=>  the Minkowski formula for J.
CheckResult check_freeness_iff_minkowski(const std::vector<std::string>& algebras, int instances, int h,
                                         int safe_h, unsigned seed);
// (BJ): wt V = wt M(lambda,J)  <=>  M(lambda,J) ->> V ->> M(lambda)/N(lambda,J).
CheckResult check_thmB_interval(const std::vector<std::string>& algebras, int instances, int h,
                                unsigned seed);
// Kostant partition dims, rank-one lattices in simples, and the rank <= 2
// local composition-series consistency.
CheckResult check_engine_dimensions();

// The compact full sweep behind `kmw verify-suite`.
std::vector<CheckResult> run_verification_suite(bool quick, unsigned seed);

}  // namespace kmw

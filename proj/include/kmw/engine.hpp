#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "kmw/cartan.hpp"
#include "kmw/linalg.hpp"
#include "kmw/roots.hpp"
#include "kmw/weights.hpp"

namespace kmw {

// Monomial word in lowering operators, read left to right as written:
// {{0,2},{1,1}} is f_0^2 f_1 . v (the rightmost factor acts first).
struct Word {
    std::vector<std::pair<int, int>> factors;  // (node, exponent)

    DepthVector depth(int n) const;
    int height() const;
    std::string str() const;
};

// Chevalley basis of a finite-type algebra: positive roots in (height, lex)
// order and the full table of structure constants. Signs are fixed by an
// extraspecial-pair rule and then tested (antisymmetry, Jacobi on all basis
// triples, |N_{a,b}| = p+1) at build time, never assumed.
struct ChevalleyBasis {
    Gcm gcm;
    std::vector<DepthVector> roots;  // positive roots, graded-lex
    std::vector<int> simple_index;   // node -> root index
    std::vector<Rat> norm2;          // (gamma, gamma) under a fixed symmetrizer
    std::vector<int> chain_node;     // least i with gamma - alpha_i a root (-1 for simples)
    std::vector<int> chain_rest;     // index of gamma - alpha_{chain_node}
    QMat npos;                       // [x_a, x_b] = npos[a][b] x_{a+b}, 0 when a+b is not a root
    QMat coroot;                     // root index -> coords of gamma^vee over simple coroots

    int nroots() const { return static_cast<int>(roots.size()); }
    int root_index(const DepthVector& d) const;  // -1 if absent
    bool is_root_signed(const std::vector<int>& v) const;
    // p = max k with gamma_b - k gamma_a a root.
    int string_down(int a, int b) const;
    // N_{gamma_a, -gamma_b} for distinct positive roots a, b.
    Rat mixed_n(int a, int b) const;
    // [f_i, f_r] = c f_t; nullopt when alpha_i + gamma_r is not a root.
    std::optional<std::pair<int, Rat>> ff_bracket(int node, int r) const;
    // [e_i, f_r] = c f_t for gamma_r != alpha_i; nullopt when zero.
    std::optional<std::pair<int, Rat>> ef_bracket(int node, int r) const;

    // Full bracket on the basis {e_r, h_i, f_r}, for validation and tests.
    enum class BK { E, H, F };
    using BElem = std::map<std::pair<BK, int>, Rat>;
    BElem bracket_basis(BK k1, int i1, BK k2, int i2) const;

    void validate() const;  // throws InternalMismatch on any failed identity
};

// pre: finite type (throws NotFiniteType). Runs validate() before returning.
ChevalleyBasis build_algebra(const Gcm& g);

struct GradedVector {
    DepthVector depth;
    QVec coords;  // over the PBW monomial basis at `depth`

    bool is_zero() const { return is_zero_vec(coords); }
};

// Graded data of U(n^-) up to a height bound: PBW monomial bases per depth,
// the straightening rewriter, and the (lambda-independent) f-action matrices.
// Shared between Verma contexts over the same algebra.
class PbwAlgebra {
public:
    PbwAlgebra(std::shared_ptr<const ChevalleyBasis> cb, int height_bound);

    const ChevalleyBasis& cb() const { return *cb_; }
    const Gcm& gcm() const { return cb_->gcm; }
    int height_bound() const { return h_; }

    // Kostant partition count; 0 for invalid (out-of-range) depths.
    int dim(const DepthVector& d);
    // Monomials as flat letter words (root indices, larger roots on the left).
    const std::vector<std::vector<int>>& basis(const DepthVector& d);
    int monomial_index(const DepthVector& d, const std::vector<int>& w);

    // PBW coordinates of an arbitrary letter word.
    using Comb = std::map<std::vector<int>, Rat>;
    const Comb& straighten(const std::vector<int>& word);

    // Left multiplication by the PBW letter f_{gamma_rootidx}.
    const QMat& letter_matrix(int rootidx, const DepthVector& from);
    // f_node : M_d -> M_{d+alpha_node}; matrix is dim(target) x dim(d).
    const QMat& f_matrix(int node, const DepthVector& from);

private:
    std::shared_ptr<const ChevalleyBasis> cb_;
    int h_;
    std::map<DepthVector, std::vector<std::vector<int>>> basis_;
    std::map<DepthVector, std::map<std::vector<int>, int>> index_;
    std::map<std::vector<int>, Comb> straight_;
    std::map<std::pair<int, DepthVector>, QMat> fmat_;
};

// Exact model of the Verma module M(lambda) truncated at the height bound:
// e/f/h actions, transpose-letter operators, and Shapovalov Gram matrices.
class VermaContext {
public:
    VermaContext(std::shared_ptr<PbwAlgebra> alg, HighestWeight lambda);

    PbwAlgebra& alg() { return *alg_; }
    const ChevalleyBasis& cb() const { return alg_->cb(); }
    const Gcm& gcm() const { return alg_->gcm(); }
    const HighestWeight& lambda() const { return lambda_; }
    int height_bound() const { return alg_->height_bound(); }

    const QMat& e_matrix(int node, const DepthVector& from);
    // Operator of tau(f_gamma) (transpose of the PBW letter), used by gram().
    const QMat& tau_matrix(int rootidx, const DepthVector& from);

    GradedVector highest() const;
    GradedVector act_f(int node, const GradedVector& v);  // throws HeightOverflow
    GradedVector act_e(int node, const GradedVector& v);  // zero vector at same depth if target invalid
    Rat h_scalar(int node, const DepthVector& at) const;  // <lambda - at, alpha_node^vee>
    GradedVector eval_word(const Word& w);                // applied to v_lambda

    // Gram matrix of the contravariant form on M(lambda)_{lambda-d}.
    const QMat& gram(const DepthVector& d);
    Rat form(const GradedVector& x, const GradedVector& y);

private:
    std::shared_ptr<PbwAlgebra> alg_;
    HighestWeight lambda_;
    std::map<std::pair<int, DepthVector>, QMat> emat_;
    std::map<std::pair<int, DepthVector>, QMat> taumat_;
    std::map<DepthVector, QMat> gram_;
};

using GradedSubspaces = std::map<DepthVector, RowSpace>;

// Smallest graded family containing the generators and closed under all e_i
// and f_i (f truncated at the height bound).
GradedSubspaces submodule_closure(VermaContext& vc, const std::vector<GradedVector>& gens);
// Same, closed under f_i only (the U(n^-)-closure).
GradedSubspaces nminus_closure(VermaContext& vc, const std::vector<GradedVector>& gens);

// Truncated N(lambda, J): the largest graded family closed under all e_i/f_i
// whose weights mu = lambda - beta with supp(beta) independent all satisfy
// supp(beta) meet J != empty (for J = empty: no independent support at all).
GradedSubspaces construct_n_lambda_j(VermaContext& vc, const NodeSet& j);

// dim L(lambda)_{lambda-depth}: exact rank of the contravariant Gram matrix.
int shapovalov_rank(VermaContext& vc, const DepthVector& depth);

struct ModulePresentation {
    Gcm algebra;
    HighestWeight lambda;
    std::vector<Word> relations;
    int height_bound = 0;
    std::vector<GradedVector> vector_relations;  // explicit generators, PBW coords

    ModulePresentation() = default;
    ModulePresentation(Gcm g, HighestWeight lam, std::vector<Word> rels, int h,
                       std::vector<GradedVector> vrels = {})
        : algebra(std::move(g)),
          lambda(std::move(lam)),
          relations(std::move(rels)),
          height_bound(h),
          vector_relations(std::move(vrels)) {}
};

// V = M(lambda) / closure(relations), with exact weights and multiplicities.
class QuotientModule {
public:
    explicit QuotientModule(ModulePresentation p);

    const ModulePresentation& presentation() const { return pres_; }
    VermaContext& verma() { return *vc_; }
    const GradedSubspaces& kernel() const { return kernel_; }
    const TruncatedWeightSet& weights() const { return weights_; }
    const std::map<DepthVector, int>& dims() const { return dims_; }
    int dim_at(const DepthVector& d) const;

    GradedVector reduce(const GradedVector& v) const;  // canonical rep mod kernel
    bool is_zero_in_quotient(const GradedVector& v) const;
    // Image of the word applied to v_lambda, reduced mod the kernel;
    // nullopt when the image is zero in V.
    std::optional<GradedVector> apply_word(const Word& w);
    // {i in J_lambda : f_i^{lambda_i+1} v = 0 in V}.
    NodeSet integrability();

private:
    ModulePresentation pres_;
    std::shared_ptr<PbwAlgebra> alg_;
    std::shared_ptr<VermaContext> vc_;
    GradedSubspaces kernel_;
    TruncatedWeightSet weights_;
    std::map<DepthVector, int> dims_;
};

// Convenience wrappers matching the operation-level API.
std::vector<std::vector<int>> verma_component(PbwAlgebra& alg, const DepthVector& depth);
std::pair<TruncatedWeightSet, std::map<DepthVector, int>> module_weights(const ModulePresentation& p);
std::optional<GradedVector> monomial_apply(QuotientModule& v, const Word& w);

}  // namespace kmw

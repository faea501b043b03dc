#include <deque>

#include "kmw/engine.hpp"
#include "kmw/error.hpp"

namespace kmw {

namespace {

GradedSubspaces closure_impl(VermaContext& vc, const std::vector<GradedVector>& gens, bool with_e) {
    const int H = vc.height_bound();
    const int n = vc.gcm().n;
    GradedSubspaces spaces;
    auto space_at = [&](const DepthVector& d) -> RowSpace& {
        auto it = spaces.find(d);
        if (it == spaces.end()) it = spaces.emplace(d, RowSpace(vc.alg().dim(d))).first;
        return it->second;
    };
    std::deque<GradedVector> work(gens.begin(), gens.end());
    while (!work.empty()) {
        GradedVector v = std::move(work.front());
        work.pop_front();
        if (v.is_zero()) continue;
        require(v.depth.height() <= H, "HeightOverflow", "closure generator above the height bound");
        RowSpace& sp = space_at(v.depth);
        QVec red = sp.reduce(v.coords);
        if (is_zero_vec(red)) continue;
        sp.insert(red);
        const GradedVector nv{v.depth, std::move(red)};
        for (int i = 0; i < n; ++i) {
            if (nv.depth.height() + 1 <= H) work.push_back(vc.act_f(i, nv));
            if (with_e && nv.depth.c[i] >= 1) work.push_back(vc.act_e(i, nv));
        }
    }
    // prune zero-dimensional entries
    for (auto it = spaces.begin(); it != spaces.end();)
        it = it->second.dim() == 0 ? spaces.erase(it) : std::next(it);
    return spaces;
}

}  // namespace

GradedSubspaces submodule_closure(VermaContext& vc, const std::vector<GradedVector>& gens) {
    return closure_impl(vc, gens, true);
}

GradedSubspaces nminus_closure(VermaContext& vc, const std::vector<GradedVector>& gens) {
    return closure_impl(vc, gens, false);
}

GradedSubspaces construct_n_lambda_j(VermaContext& vc, const NodeSet& j) {
    const Gcm& g = vc.gcm();
    g.check_nodes(j);
    const int H = vc.height_bound();
    const auto depths = all_depths(g.n, H);
    auto forbidden = [&](const DepthVector& d) {
        const NodeSet sup = d.support();
        return is_independent(g, sup) && sup.intersect(j).empty();
    };
    // Largest graded family avoiding the forbidden weights and closed under
    // every e_i and (truncated) f_i: start from the pointwise-allowed spaces
    // and shave until stable.
    GradedSubspaces c;
    for (const auto& d : depths) {
        RowSpace sp(vc.alg().dim(d));
        if (!forbidden(d)) {
            for (int k = 0; k < sp.width(); ++k) {
                QVec row(sp.width(), Rat(0));
                row[k] = 1;
                sp.insert(std::move(row));
            }
        }
        c.emplace(d, std::move(sp));
    }
    auto refine = [&](RowSpace& sp, const QMat& op, const RowSpace& target) -> bool {
        if (sp.dim() == 0) return false;
        QMat residues;
        bool any = false;
        for (const auto& row : sp.rows()) {
            QVec img = target.reduce(mat_apply(op, row));
            any = any || !is_zero_vec(img);
            residues.push_back(std::move(img));
        }
        if (!any) return false;
        const auto kern = kernel_of(mat_transpose(residues), sp.dim());
        RowSpace next(sp.width());
        for (const auto& x : kern) {
            QVec v(sp.width(), Rat(0));
            for (int r = 0; r < sp.dim(); ++r) {
                if (sgn(x[r]) == 0) continue;
                for (int cc = 0; cc < sp.width(); ++cc) v[cc] += x[r] * sp.rows()[r][cc];
            }
            next.insert(std::move(v));
        }
        sp = std::move(next);
        return true;
    };
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& d : depths) {
            RowSpace& sp = c.at(d);
            if (sp.dim() == 0) continue;
            for (int i = 0; i < g.n; ++i) {
                if (d.height() + 1 <= H)
                    changed |= refine(sp, vc.alg().f_matrix(i, d), c.at(d.plus_units(i, 1)));
                if (sp.dim() == 0) break;
                if (auto up = d.minus(DepthVector::unit(g.n, i)))
                    changed |= refine(sp, vc.e_matrix(i, d), c.at(*up));
                if (sp.dim() == 0) break;
            }
        }
    }
    for (auto it = c.begin(); it != c.end();)
        it = it->second.dim() == 0 ? c.erase(it) : std::next(it);
    return c;
}

QuotientModule::QuotientModule(ModulePresentation p) : pres_(std::move(p)) {
    auto cb = std::make_shared<const ChevalleyBasis>(build_algebra(pres_.algebra));
    alg_ = std::make_shared<PbwAlgebra>(cb, pres_.height_bound);
    vc_ = std::make_shared<VermaContext>(alg_, pres_.lambda);
    std::vector<GradedVector> gens;
    for (const auto& w : pres_.relations) {
        require(w.height() <= pres_.height_bound, "HeightOverflow",
                "relation " + w.str() + " exceeds the height bound");
        gens.push_back(vc_->eval_word(w));
    }
    for (const auto& v : pres_.vector_relations) {
        require(v.depth.height() <= pres_.height_bound, "HeightOverflow",
                "relation vector exceeds the height bound");
        require(static_cast<int>(v.coords.size()) == alg_->dim(v.depth), "Precondition",
                "relation vector has the wrong coordinate length");
        gens.push_back(v);
    }
    kernel_ = submodule_closure(*vc_, gens);
    weights_ = TruncatedWeightSet(pres_.lambda, pres_.height_bound);
    for (const auto& d : all_depths(pres_.algebra.n, pres_.height_bound)) {
        const int full = alg_->dim(d);
        auto it = kernel_.find(d);
        const int dim = full - (it == kernel_.end() ? 0 : it->second.dim());
        dims_[d] = dim;
        if (dim > 0) weights_.insert(d);
    }
}

int QuotientModule::dim_at(const DepthVector& d) const {
    auto it = dims_.find(d);
    require(it != dims_.end(), "HeightOverflow", "depth " + d.str() + " above the height bound");
    return it->second;
}

GradedVector QuotientModule::reduce(const GradedVector& v) const {
    auto it = kernel_.find(v.depth);
    if (it == kernel_.end()) return v;
    return GradedVector{v.depth, it->second.reduce(v.coords)};
}

bool QuotientModule::is_zero_in_quotient(const GradedVector& v) const { return reduce(v).is_zero(); }

std::optional<GradedVector> QuotientModule::apply_word(const Word& w) {
    GradedVector v = reduce(vc_->eval_word(w));
    if (v.is_zero()) return std::nullopt;
    return v;
}

NodeSet QuotientModule::integrability() {
    NodeSet out;
    for (int i : j_lambda(pres_.lambda)) {
        const long k = rat_to_long(pres_.lambda.p[i]) + 1;
        require(k <= pres_.height_bound, "HeightOverflow",
                "integrability test needs height >= " + std::to_string(k));
        Word w{{{i, static_cast<int>(k)}}};
        if (!apply_word(w)) out.add(i);
    }
    return out;
}

std::pair<TruncatedWeightSet, std::map<DepthVector, int>> module_weights(const ModulePresentation& p) {
    QuotientModule q(p);
    return {q.weights(), q.dims()};
}

std::optional<GradedVector> monomial_apply(QuotientModule& v, const Word& w) { return v.apply_word(w); }

}  // namespace kmw

#include <algorithm>

#include "kmw/engine.hpp"
#include "kmw/error.hpp"

namespace kmw {

PbwAlgebra::PbwAlgebra(std::shared_ptr<const ChevalleyBasis> cb, int height_bound)
    : cb_(std::move(cb)), h_(height_bound) {
    require(h_ >= 1, "Precondition", "height bound must be >= 1");
}

const std::vector<std::vector<int>>& PbwAlgebra::basis(const DepthVector& d) {
    auto it = basis_.find(d);
    if (it != basis_.end()) return it->second;
    // Kostant partitions of d into positive roots; letters emitted with the
    // larger root first, exponents chosen from the largest root downward.
    std::vector<std::vector<int>> words;
    std::vector<int> letters;  // non-increasing, since roots are taken largest first
    const int nr = cb_->nroots();
    auto rec = [&](auto&& self, int ridx, const DepthVector& rem) -> void {
        if (rem.is_zero()) {
            words.push_back(letters);
            return;
        }
        if (ridx < 0) return;
        self(self, ridx - 1, rem);  // exponent 0
        DepthVector cur = rem;
        int pushed = 0;
        while (auto nxt = cur.minus(cb_->roots[ridx])) {
            cur = *nxt;
            letters.push_back(ridx);
            ++pushed;
            self(self, ridx - 1, cur);
        }
        letters.resize(letters.size() - pushed);
    };
    rec(rec, nr - 1, d);
    std::sort(words.begin(), words.end());
    auto& slot = basis_[d];
    slot = std::move(words);
    auto& idx = index_[d];
    for (size_t i = 0; i < slot.size(); ++i) idx[slot[i]] = static_cast<int>(i);
    return slot;
}

int PbwAlgebra::dim(const DepthVector& d) {
    for (int x : d.c)
        if (x < 0) return 0;
    return static_cast<int>(basis(d).size());
}

int PbwAlgebra::monomial_index(const DepthVector& d, const std::vector<int>& w) {
    basis(d);
    const auto& idx = index_.at(d);
    auto it = idx.find(w);
    require(it != idx.end(), "InternalMismatch", "monomial not in PBW basis at depth " + d.str());
    return it->second;
}

const PbwAlgebra::Comb& PbwAlgebra::straighten(const std::vector<int>& word) {
    auto it = straight_.find(word);
    if (it != straight_.end()) return it->second;
    Comb out;
    // find the first adjacent inversion (smaller root left of a larger one)
    int inv = -1;
    for (size_t t = 0; t + 1 < word.size(); ++t)
        if (word[t] < word[t + 1]) { inv = static_cast<int>(t); break; }
    if (inv < 0) {
        out[word] = 1;
    } else {
        std::vector<int> swapped = word;
        std::swap(swapped[inv], swapped[inv + 1]);
        for (const auto& [w, c] : straighten(swapped)) out[w] += c;
        // f_a f_b = f_b f_a - N_{a,b} f_{a+b}
        const int a = word[inv], b = word[inv + 1];
        const Rat n = cb_->npos[a][b];
        if (sgn(n) != 0) {
            const int t = cb_->root_index(cb_->roots[a].plus(cb_->roots[b]));
            std::vector<int> merged;
            merged.reserve(word.size() - 1);
            merged.insert(merged.end(), word.begin(), word.begin() + inv);
            merged.push_back(t);
            merged.insert(merged.end(), word.begin() + inv + 2, word.end());
            for (const auto& [w, c] : straighten(merged)) {
                out[w] += -n * c;
                if (sgn(out[w]) == 0) out.erase(w);
            }
        }
    }
    return straight_[word] = std::move(out);
}

const QMat& PbwAlgebra::letter_matrix(int rootidx, const DepthVector& from) {
    const auto key = std::make_pair(rootidx, from);
    auto it = fmat_.find(key);
    if (it != fmat_.end()) return it->second;
    const DepthVector to = from.plus(cb_->roots[rootidx]);
    const auto& src = basis(from);
    const int rows = dim(to), cols = static_cast<int>(src.size());
    QMat m(rows, QVec(cols, Rat(0)));
    for (int j = 0; j < cols; ++j) {
        std::vector<int> w;
        w.reserve(src[j].size() + 1);
        w.push_back(rootidx);
        w.insert(w.end(), src[j].begin(), src[j].end());
        for (const auto& [sw, c] : straighten(w)) m[monomial_index(to, sw)][j] += c;
    }
    return fmat_[key] = std::move(m);
}

const QMat& PbwAlgebra::f_matrix(int node, const DepthVector& from) {
    return letter_matrix(cb_->simple_index[node], from);
}

VermaContext::VermaContext(std::shared_ptr<PbwAlgebra> alg, HighestWeight lambda)
    : alg_(std::move(alg)), lambda_(std::move(lambda)) {
    require(lambda_.size() == gcm().n, "Precondition", "lambda has wrong rank");
}

Rat VermaContext::h_scalar(int node, const DepthVector& at) const {
    return pairing(gcm(), lambda_, at, node);
}

const QMat& VermaContext::e_matrix(int node, const DepthVector& from) {
    const auto key = std::make_pair(node, from);
    auto it = emat_.find(key);
    if (it != emat_.end()) return it->second;
    auto to = from.minus(DepthVector::unit(gcm().n, node));
    const auto& src = alg_->basis(from);
    const int rows = to ? alg_->dim(*to) : 0;
    QMat m(rows, QVec(src.size(), Rat(0)));
    if (rows > 0) {
        const ChevalleyBasis& cb = alg_->cb();
        const int s = cb.simple_index[node];
        for (size_t j = 0; j < src.size(); ++j) {
            const std::vector<int>& w = src[j];
            // e_i past each letter: [e_i, f_gamma] is 0, a scalar h-term, or
            // a lower letter; e_i annihilates the highest-weight vector.
            DepthVector below = DepthVector::zero(gcm().n);  // depth of the suffix
            for (size_t t = w.size(); t-- > 0;) {
                if (w[t] == s) {
                    std::vector<int> rest;
                    rest.reserve(w.size() - 1);
                    rest.insert(rest.end(), w.begin(), w.begin() + t);
                    rest.insert(rest.end(), w.begin() + t + 1, w.end());
                    const Rat sc = h_scalar(node, below);
                    if (sgn(sc) != 0) m[alg_->monomial_index(*to, rest)][j] += sc;
                } else if (auto br = cb.ef_bracket(node, w[t])) {
                    std::vector<int> repl = w;
                    repl[t] = br->first;
                    for (const auto& [sw, c] : alg_->straighten(repl))
                        m[alg_->monomial_index(*to, sw)][j] += br->second * c;
                }
                below = below.plus(cb.roots[w[t]]);
            }
        }
    }
    return emat_[key] = std::move(m);
}

const QMat& VermaContext::tau_matrix(int rootidx, const DepthVector& from) {
    const auto key = std::make_pair(rootidx, from);
    auto it = taumat_.find(key);
    if (it != taumat_.end()) return it->second;
    const ChevalleyBasis& cb = alg_->cb();
    QMat m;
    if (cb.roots[rootidx].height() == 1) {
        m = e_matrix(cb.roots[rootidx].support().members()[0], from);
    } else {
        // f_gamma = (1/cN) [f_i, f_rest]  =>  tau(f_gamma) = (1/cN) [tau(f_rest), e_i]
        const int i = cb.chain_node[rootidx];
        const int rest = cb.chain_rest[rootidx];
        const int s = cb.simple_index[i];
        const Rat cn = -cb.npos[s][rest];
        const DepthVector gam = cb.roots[rootidx];
        auto tgt = from.minus(gam);
        const int rows = tgt ? alg_->dim(*tgt) : 0;
        m.assign(rows, QVec(alg_->dim(from), Rat(0)));
        if (rows > 0) {
            // term tau(f_rest) o e_i
            if (auto mid = from.minus(DepthVector::unit(gcm().n, i)); mid && alg_->dim(*mid) > 0) {
                QMat t1 = mat_mul(tau_matrix(rest, *mid), e_matrix(i, from));
                for (int r = 0; r < rows; ++r)
                    for (size_t c = 0; c < t1[r].size(); ++c) m[r][c] += t1[r][c];
            }
            // minus e_i o tau(f_rest)
            if (auto mid = from.minus(cb.roots[rest]); mid && alg_->dim(*mid) > 0) {
                QMat t2 = mat_mul(e_matrix(i, *mid), tau_matrix(rest, from));
                for (int r = 0; r < rows; ++r)
                    for (size_t c = 0; c < t2[r].size(); ++c) m[r][c] -= t2[r][c];
            }
            for (auto& row : m)
                for (auto& x : row) x /= cn;
        }
    }
    return taumat_[key] = std::move(m);
}

GradedVector VermaContext::highest() const {
    return GradedVector{DepthVector::zero(gcm().n), QVec{Rat(1)}};
}

GradedVector VermaContext::act_f(int node, const GradedVector& v) {
    const DepthVector to = v.depth.plus_units(node, 1);
    require(to.height() <= height_bound(), "HeightOverflow",
            "action exceeds engine height bound " + std::to_string(height_bound()));
    return GradedVector{to, mat_apply(alg_->f_matrix(node, v.depth), v.coords)};
}

GradedVector VermaContext::act_e(int node, const GradedVector& v) {
    auto to = v.depth.minus(DepthVector::unit(gcm().n, node));
    if (!to) return GradedVector{v.depth, QVec(v.coords.size(), Rat(0))};
    return GradedVector{*to, mat_apply(e_matrix(node, v.depth), v.coords)};
}

GradedVector VermaContext::eval_word(const Word& w) {
    GradedVector v = highest();
    for (auto it = w.factors.rbegin(); it != w.factors.rend(); ++it)
        for (int k = 0; k < it->second; ++k) v = act_f(it->first, v);
    return v;
}

const QMat& VermaContext::gram(const DepthVector& d) {
    auto it = gram_.find(d);
    if (it != gram_.end()) return it->second;
    const auto& words = alg_->basis(d);
    const int n = static_cast<int>(words.size());
    QMat g(n, QVec(n, Rat(0)));
    // Rows are functionals x -> coefficient of v_lambda in tau(m_a) x, built
    // letter by letter; monomials sharing their small-letter prefix share the
    // partial rows, so enumerate partitions with ascending root index.
    const int nr = cb().nroots();
    std::vector<int> picked;  // ascending letters
    auto rec = [&](auto&& self, int ridx, const DepthVector& part, const QVec& u) -> void {
        if (part == d) {
            std::vector<int> w(picked.rbegin(), picked.rend());
            g[alg_->monomial_index(d, w)] = u;
            return;
        }
        if (ridx >= nr) return;
        self(self, ridx + 1, part, u);  // exponent 0
        DepthVector cur = part;
        QVec cu = u;
        int added = 0;
        while (true) {
            DepthVector nxt = cur.plus(cb().roots[ridx]);
            if (!d.minus(nxt)) break;
            cu = row_times_mat(cu, tau_matrix(ridx, nxt));
            cur = nxt;
            picked.push_back(ridx);
            ++added;
            self(self, ridx + 1, cur, cu);
        }
        picked.erase(picked.end() - added, picked.end());
    };
    rec(rec, 0, DepthVector::zero(gcm().n), QVec{Rat(1)});
    return gram_[d] = std::move(g);
}

Rat VermaContext::form(const GradedVector& x, const GradedVector& y) {
    require(x.depth == y.depth, "Precondition", "form arguments at different depths");
    const QMat& g = gram(x.depth);
    Rat acc(0);
    for (size_t a = 0; a < x.coords.size(); ++a) {
        if (sgn(x.coords[a]) == 0) continue;
        for (size_t b = 0; b < y.coords.size(); ++b)
            if (sgn(y.coords[b]) != 0) acc += x.coords[a] * g[a][b] * y.coords[b];
    }
    return acc;
}

int shapovalov_rank(VermaContext& vc, const DepthVector& depth) {
    return rank_of(vc.gram(depth));
}

std::vector<std::vector<int>> verma_component(PbwAlgebra& alg, const DepthVector& depth) {
    return alg.basis(depth);
}

}  // namespace kmw

#include <algorithm>
#include <map>

#include "kmw/engine.hpp"
#include "kmw/error.hpp"

namespace kmw {

DepthVector Word::depth(int n) const {
    DepthVector d = DepthVector::zero(n);
    for (auto [node, exp] : factors) {
        require(node >= 0 && node < n, "Precondition", "word node out of range");
        require(exp >= 0, "Precondition", "word exponent must be >= 0");
        d.c[node] += exp;
    }
    return d;
}

int Word::height() const {
    int h = 0;
    for (auto [node, exp] : factors) h += exp;
    return h;
}

std::string Word::str() const {
    std::string s;
    for (auto [node, exp] : factors) {
        s += "f" + std::to_string(node);
        if (exp != 1) s += "^" + std::to_string(exp);
        s += " ";
    }
    return s.empty() ? "1" : s;
}

int ChevalleyBasis::root_index(const DepthVector& d) const {
    Root probe{d, RootKind::Real};
    auto it = std::lower_bound(roots.begin(), roots.end(), d,
                               [](const DepthVector& a, const DepthVector& b) { return a < b; });
    if (it != roots.end() && *it == d) return static_cast<int>(it - roots.begin());
    return -1;
}

bool ChevalleyBasis::is_root_signed(const std::vector<int>& v) const {
    bool pos = false, neg = false;
    for (int x : v) {
        if (x > 0) pos = true;
        if (x < 0) neg = true;
    }
    if (pos && neg) return false;
    std::vector<int> a(v.size());
    for (size_t i = 0; i < v.size(); ++i) a[i] = neg ? -v[i] : v[i];
    return root_index(DepthVector(std::move(a))) >= 0;
}

int ChevalleyBasis::string_down(int a, int b) const {
    int p = 0;
    std::vector<int> v = roots[b].c;
    while (true) {
        for (size_t i = 0; i < v.size(); ++i) v[i] -= roots[a].c[i];
        if (!is_root_signed(v)) break;
        ++p;
    }
    return p;
}

Rat ChevalleyBasis::mixed_n(int a, int b) const {
    // N_{gamma_a, -gamma_b}: reduce to the positive table via the
    // root-triple identity N_{x,y}/(z,z) = N_{y,z}/(x,x) = N_{z,x}/(y,y)
    // for x + y + z = 0.
    std::vector<int> w(roots[a].size());
    for (int i = 0; i < roots[a].size(); ++i) w[i] = roots[a].c[i] - roots[b].c[i];
    bool pos = true, neg = true;
    for (int x : w) {
        if (x > 0) neg = false;
        if (x < 0) pos = false;
    }
    if (pos) {  // w = a - b in Delta^+
        std::vector<int> wp = w;
        const int t = root_index(DepthVector(std::move(wp)));
        if (t < 0) return Rat(0);
        return norm2[t] * npos[t][b] / norm2[a];
    }
    if (neg) {  // b - a in Delta^+
        std::vector<int> wn(w.size());
        for (size_t i = 0; i < w.size(); ++i) wn[i] = -w[i];
        const int t = root_index(DepthVector(std::move(wn)));
        if (t < 0) return Rat(0);
        return norm2[t] * npos[t][a] / norm2[b];
    }
    return Rat(0);
}

std::optional<std::pair<int, Rat>> ChevalleyBasis::ff_bracket(int node, int r) const {
    const int s = simple_index[node];
    DepthVector sum = roots[r].plus_units(node, 1);
    const int t = root_index(sum);
    if (t < 0) return std::nullopt;
    // [x_{-a}, x_{-b}] = -N_{a,b} x_{-(a+b)}
    return std::make_pair(t, -npos[s][r]);
}

std::optional<std::pair<int, Rat>> ChevalleyBasis::ef_bracket(int node, int r) const {
    const int s = simple_index[node];
    auto diff = roots[r].minus(DepthVector::unit(gcm.n, node));
    if (!diff || diff->is_zero()) return std::nullopt;
    const int t = root_index(*diff);
    if (t < 0) return std::nullopt;
    return std::make_pair(t, mixed_n(s, r));
}

ChevalleyBasis::BElem ChevalleyBasis::bracket_basis(BK k1, int i1, BK k2, int i2) const {
    BElem out;
    auto add = [&out](BK k, int i, const Rat& c) {
        if (sgn(c) != 0) out[{k, i}] += c;
    };
    if (k1 == BK::H && k2 == BK::H) return out;
    if (k1 == BK::H || k2 == BK::H) {
        const bool flip = (k2 == BK::H);
        const int hi = flip ? i2 : i1;
        const BK xk = flip ? k1 : k2;
        const int xr = flip ? i1 : i2;
        Rat c(depth_pairing(gcm, roots[xr], hi));
        if (xk == BK::F) c = -c;
        if (!flip) add(xk, xr, c);   // [h, x]
        else add(xk, xr, -c);        // [x, h]
        return out;
    }
    if (k1 == k2) {  // [e,e] or [f,f]
        DepthVector sum = roots[i1].plus(roots[i2]);
        const int t = root_index(sum);
        if (t < 0) return out;
        Rat c = npos[i1][i2];
        if (k1 == BK::F) c = -c;
        add(k1, t, c);
        return out;
    }
    // mixed [e_a, f_b] or [f_b, e_a]
    const bool flipped = (k1 == BK::F);
    const int a = flipped ? i2 : i1;
    const int b = flipped ? i1 : i2;
    const Rat sign = flipped ? Rat(-1) : Rat(1);
    if (a == b) {
        for (int i = 0; i < gcm.n; ++i) add(BK::H, i, sign * coroot[a][i]);
        return out;
    }
    std::vector<int> w(gcm.n);
    for (int i = 0; i < gcm.n; ++i) w[i] = roots[a].c[i] - roots[b].c[i];
    bool pos = true, neg = true;
    for (int x : w) {
        if (x > 0) neg = false;
        if (x < 0) pos = false;
    }
    const Rat c = mixed_n(a, b);
    if (sgn(c) == 0) return out;
    if (pos) {
        std::vector<int> wp = w;
        add(BK::E, root_index(DepthVector(std::move(wp))), sign * c);
    } else if (neg) {
        std::vector<int> wn(w.size());
        for (size_t i = 0; i < w.size(); ++i) wn[i] = -w[i];
        add(BK::F, root_index(DepthVector(std::move(wn))), sign * c);
    }
    return out;
}

namespace {

using BK = ChevalleyBasis::BK;
using BElem = ChevalleyBasis::BElem;

BElem bracket_elem(const ChevalleyBasis& cb, const BElem& x, const BElem& y) {
    BElem out;
    for (const auto& [bx, cx] : x)
        for (const auto& [by, cy] : y) {
            const BElem b = cb.bracket_basis(bx.first, bx.second, by.first, by.second);
            for (const auto& [bz, cz] : b) {
                out[bz] += cx * cy * cz;
                if (sgn(out[bz]) == 0) out.erase(bz);
            }
        }
    return out;
}

std::vector<Rat> symmetrizer(const Gcm& g) {
    // d_i with d_i a[i][j] = d_j a[j][i]; exists for finite type.
    std::vector<Rat> d(g.n, Rat(0));
    for (int start = 0; start < g.n; ++start) {
        if (sgn(d[start]) != 0) continue;
        d[start] = 1;
        std::vector<int> frontier{start};
        while (!frontier.empty()) {
            const int i = frontier.back();
            frontier.pop_back();
            for (int j = 0; j < g.n; ++j) {
                if (!g.adjacent(i, j) || sgn(d[j]) != 0) continue;
                d[j] = d[i] * g.a[i][j] / g.a[j][i];
                frontier.push_back(j);
            }
        }
    }
    return d;
}

}  // namespace

void ChevalleyBasis::validate() const {
    const int nr = nroots();
    // sl2 triples: [e_r, f_r] = gamma^vee with <gamma, gamma^vee> = 2
    for (int r = 0; r < nr; ++r) {
        Rat acc(0);
        for (int i = 0; i < gcm.n; ++i) acc += coroot[r][i] * depth_pairing(gcm, roots[r], i);
        require(acc == 2, "InternalMismatch", "coroot normalization failed at root " + roots[r].str());
    }
    // string-length magnitudes
    for (int a = 0; a < nr; ++a)
        for (int b = 0; b < nr; ++b) {
            if (a == b) continue;
            const int t = root_index(roots[a].plus(roots[b]));
            if (t < 0) {
                require(sgn(npos[a][b]) == 0, "InternalMismatch", "nonzero N on a non-root sum");
                continue;
            }
            const Rat expect(string_down(a, b) + 1);
            require(abs(npos[a][b]) == expect && is_integer(npos[a][b]), "InternalMismatch",
                    "constant N[" + roots[a].str() + "][" + roots[b].str() + "] = " + rat_str(npos[a][b]) +
                        " is not +-(p+1) = " + rat_str(expect));
        }
    // antisymmetry and Jacobi over the whole basis
    std::vector<std::pair<BK, int>> basis;
    for (int r = 0; r < nr; ++r) basis.push_back({BK::E, r});
    for (int i = 0; i < gcm.n; ++i) basis.push_back({BK::H, i});
    for (int r = 0; r < nr; ++r) basis.push_back({BK::F, r});
    const int nb = static_cast<int>(basis.size());
    std::vector<std::vector<BElem>> table(nb, std::vector<BElem>(nb));
    for (int x = 0; x < nb; ++x)
        for (int y = 0; y < nb; ++y)
            table[x][y] = bracket_basis(basis[x].first, basis[x].second, basis[y].first, basis[y].second);
    for (int x = 0; x < nb; ++x)
        for (int y = x; y < nb; ++y) {
            BElem sum = table[x][y];
            for (const auto& [k, c] : table[y][x]) {
                sum[k] += c;
                if (sgn(sum[k]) == 0) sum.erase(k);
            }
            require(sum.empty(), "InternalMismatch", "bracket antisymmetry failed");
        }
    for (int x = 0; x < nb; ++x)
        for (int y = x + 1; y < nb; ++y)
            for (int z = y + 1; z < nb; ++z) {
                BElem acc = bracket_elem(*this, table[x][y], {{basis[z], Rat(1)}});
                for (const auto& [k, c] : bracket_elem(*this, table[y][z], {{basis[x], Rat(1)}})) {
                    acc[k] += c;
                    if (sgn(acc[k]) == 0) acc.erase(k);
                }
                for (const auto& [k, c] : bracket_elem(*this, table[z][x], {{basis[y], Rat(1)}})) {
                    acc[k] += c;
                    if (sgn(acc[k]) == 0) acc.erase(k);
                }
                require(acc.empty(), "InternalMismatch", "Jacobi identity failed on a basis triple");
            }
}

ChevalleyBasis build_algebra(const Gcm& g) {
    // Finite type iff layer-by-layer root generation stops and never meets an
    // imaginary root.
    constexpr int kCap = 40;
    RootSet rs = positive_roots(g, kCap);
    int max_ht = 0;
    for (const auto& r : rs.roots) {
        if (r.kind == RootKind::Imaginary)
            fail("NotFiniteType", "imaginary root " + r.depth.str() + " present");
        max_ht = std::max(max_ht, r.depth.height());
    }
    require(max_ht < kCap, "NotFiniteType", "root generation did not terminate by height " + std::to_string(kCap));

    ChevalleyBasis cb;
    cb.gcm = g;
    for (const auto& r : rs.roots) cb.roots.push_back(r.depth);
    const int nr = cb.nroots();
    cb.simple_index.assign(g.n, -1);
    for (int r = 0; r < nr; ++r)
        if (cb.roots[r].height() == 1) cb.simple_index[cb.roots[r].support().members()[0]] = r;

    const std::vector<Rat> d = symmetrizer(g);
    for (int i = 0; i < g.n; ++i)
        for (int j = 0; j < g.n; ++j)
            require(d[i] * g.a[i][j] == d[j] * g.a[j][i], "InternalMismatch", "symmetrizer failed");
    cb.norm2.resize(nr);
    for (int r = 0; r < nr; ++r) {
        Rat acc(0);
        for (int i = 0; i < g.n; ++i)
            for (int j = 0; j < g.n; ++j) acc += Rat(cb.roots[r].c[i]) * cb.roots[r].c[j] * d[i] * g.a[i][j];
        cb.norm2[r] = acc;
    }

    cb.chain_node.assign(nr, -1);
    cb.chain_rest.assign(nr, -1);
    for (int r = 0; r < nr; ++r) {
        if (cb.roots[r].height() == 1) continue;
        for (int i = 0; i < g.n; ++i) {
            auto rest = cb.roots[r].minus(DepthVector::unit(g.n, i));
            if (!rest) continue;
            const int t = cb.root_index(*rest);
            if (t >= 0) {
                cb.chain_node[r] = i;
                cb.chain_rest[r] = t;
                break;
            }
        }
        require(cb.chain_node[r] >= 0, "InternalMismatch", "no simple step below root " + cb.roots[r].str());
    }

    // coroots: gamma^vee = sum_i c_i (alpha_i,alpha_i)/(gamma,gamma) alpha_i^vee
    cb.coroot.assign(nr, QVec(g.n, Rat(0)));
    for (int r = 0; r < nr; ++r)
        for (int i = 0; i < g.n; ++i) {
            cb.coroot[r][i] = Rat(cb.roots[r].c[i]) * (2 * d[i]) / cb.norm2[r];
            require(is_integer(cb.coroot[r][i]), "InternalMismatch", "non-integral coroot coefficient");
        }

    // Structure constants, by increasing height of the sum. The extraspecial
    // pair of each non-simple root gets N = +(p+1); every other special pair
    // follows from the two standard identities on root quadruples/triples.
    cb.npos.assign(nr, QVec(nr, Rat(0)));
    for (int gidx = 0; gidx < nr; ++gidx) {
        if (cb.roots[gidx].height() < 2) continue;
        std::vector<std::pair<int, int>> pairs;
        for (int a = 0; a < nr; ++a) {
            auto restd = cb.roots[gidx].minus(cb.roots[a]);
            if (!restd || restd->is_zero()) continue;
            const int b = cb.root_index(*restd);
            if (b > a) pairs.push_back({a, b});
        }
        require(!pairs.empty(), "InternalMismatch", "no special pair for root " + cb.roots[gidx].str());
        const auto [a0, b0] = pairs.front();  // minimal first component = extraspecial
        cb.npos[a0][b0] = Rat(cb.string_down(a0, b0) + 1);
        cb.npos[b0][a0] = -cb.npos[a0][b0];
        for (size_t k = 1; k < pairs.size(); ++k) {
            const auto [xi, eta] = pairs[k];
            // N_{xi,eta} N_{a0,b0}/(g,g) = N_{b0,-xi}N_{a0,-eta}/(b0-xi norm)
            //                            - N_{a0,-xi}N_{b0,-eta}/(a0-xi norm)
            auto norm_of_diff = [&](int u, int v) -> Rat {
                std::vector<int> w(g.n);
                for (int i = 0; i < g.n; ++i) w[i] = cb.roots[u].c[i] - cb.roots[v].c[i];
                bool neg = false;
                for (int x : w) neg = neg || x < 0;
                std::vector<int> av(g.n);
                for (int i = 0; i < g.n; ++i) av[i] = neg ? -w[i] : w[i];
                const int t = cb.root_index(DepthVector(std::move(av)));
                require(t >= 0, "InternalMismatch", "difference of special-pair roots is not a root");
                return cb.norm2[t];
            };
            Rat acc(0);
            {
                const Rat t1 = cb.mixed_n(b0, xi), t2 = cb.mixed_n(a0, eta);
                if (sgn(t1) != 0 && sgn(t2) != 0) acc += t1 * t2 / norm_of_diff(b0, xi);
            }
            {
                const Rat t1 = cb.mixed_n(a0, xi), t2 = cb.mixed_n(b0, eta);
                if (sgn(t1) != 0 && sgn(t2) != 0) acc -= t1 * t2 / norm_of_diff(a0, xi);
            }
            cb.npos[xi][eta] = cb.norm2[gidx] * acc / cb.npos[a0][b0];
            cb.npos[eta][xi] = -cb.npos[xi][eta];
        }
    }

    cb.validate();
    return cb;
}

}  // namespace kmw

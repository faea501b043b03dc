#include "kmw/cartan.hpp"

#include <algorithm>
#include <map>

#include "kmw/error.hpp"

namespace kmw {

NodeSet::NodeSet(std::initializer_list<int> xs) : NodeSet(std::vector<int>(xs)) {}

NodeSet::NodeSet(std::vector<int> xs) : m_(std::move(xs)) {
    std::sort(m_.begin(), m_.end());
    m_.erase(std::unique(m_.begin(), m_.end()), m_.end());
}

NodeSet NodeSet::range(int n) {
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) v[i] = i;
    return NodeSet(std::move(v));
}

bool NodeSet::contains(int i) const {
    return std::binary_search(m_.begin(), m_.end(), i);
}

bool NodeSet::subset_of(const NodeSet& o) const {
    return std::includes(o.m_.begin(), o.m_.end(), m_.begin(), m_.end());
}

NodeSet NodeSet::unioned(const NodeSet& o) const {
    std::vector<int> v;
    std::set_union(m_.begin(), m_.end(), o.m_.begin(), o.m_.end(), std::back_inserter(v));
    return NodeSet(std::move(v));
}

NodeSet NodeSet::intersect(const NodeSet& o) const {
    std::vector<int> v;
    std::set_intersection(m_.begin(), m_.end(), o.m_.begin(), o.m_.end(), std::back_inserter(v));
    return NodeSet(std::move(v));
}

NodeSet NodeSet::minus(const NodeSet& o) const {
    std::vector<int> v;
    std::set_difference(m_.begin(), m_.end(), o.m_.begin(), o.m_.end(), std::back_inserter(v));
    return NodeSet(std::move(v));
}

void NodeSet::add(int i) {
    auto it = std::lower_bound(m_.begin(), m_.end(), i);
    if (it == m_.end() || *it != i) m_.insert(it, i);
}

std::string NodeSet::str() const {
    std::string s = "{";
    for (size_t k = 0; k < m_.size(); ++k) {
        if (k) s += ",";
        s += std::to_string(m_[k]);
    }
    return s + "}";
}

void Gcm::check_node(int i) const {
    require(i >= 0 && i < n, "Precondition", "node " + std::to_string(i) + " out of range for rank " + std::to_string(n));
}

void Gcm::check_nodes(const NodeSet& s) const {
    for (int i : s) check_node(i);
}

Gcm build_gcm(const std::vector<std::vector<int>>& matrix) {
    const int n = static_cast<int>(matrix.size());
    require(n > 0, "Precondition", "empty matrix");
    for (const auto& row : matrix)
        require(static_cast<int>(row.size()) == n, "Precondition", "matrix is not square");
    for (int i = 0; i < n; ++i) {
        if (matrix[i][i] != 2)
            fail("DiagonalNotTwo", "entry (" + std::to_string(i) + "," + std::to_string(i) + ") is " + std::to_string(matrix[i][i]));
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            if (matrix[i][j] > 0)
                fail("PositiveOffDiagonal", "entry (" + std::to_string(i) + "," + std::to_string(j) + ") is " + std::to_string(matrix[i][j]));
            if ((matrix[i][j] == 0) != (matrix[j][i] == 0))
                fail("AsymmetricZero", "entry (" + std::to_string(i) + "," + std::to_string(j) + ") is zero but (" + std::to_string(j) + "," + std::to_string(i) + ") is not");
        }
    }
    Gcm g;
    g.n = n;
    g.a = matrix;
    return g;
}

namespace {

std::vector<std::vector<int>> path_matrix(int n) {  // type A_n
    std::vector<std::vector<int>> m(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) {
        m[i][i] = 2;
        if (i + 1 < n) m[i][i + 1] = m[i + 1][i] = -1;
    }
    return m;
}

std::vector<std::vector<int>> block_diag(const std::vector<std::vector<std::vector<int>>>& blocks) {
    int n = 0;
    for (const auto& b : blocks) n += static_cast<int>(b.size());
    std::vector<std::vector<int>> m(n, std::vector<int>(n, 0));
    int off = 0;
    for (const auto& b : blocks) {
        const int k = static_cast<int>(b.size());
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) m[off + i][off + j] = b[i][j];
        off += k;
    }
    return m;
}

const std::map<std::string, std::vector<std::vector<int>>>& builtin_table() {
    static const std::map<std::string, std::vector<std::vector<int>>> t = [] {
        std::map<std::string, std::vector<std::vector<int>>> m;
        m["A1"] = path_matrix(1);
        m["A2"] = path_matrix(2);
        m["A3"] = path_matrix(3);
        m["A4"] = path_matrix(4);
        m["A1xA1"] = block_diag({path_matrix(1), path_matrix(1)});
        m["A1xA1xA1"] = block_diag({path_matrix(1), path_matrix(1), path_matrix(1)});
        m["A2xA1"] = block_diag({path_matrix(2), path_matrix(1)});
        m["B2"] = {{2, -1}, {-2, 2}};
        m["C2"] = {{2, -2}, {-1, 2}};
        m["G2"] = {{2, -1}, {-3, 2}};
        m["B2xA1"] = block_diag({m["B2"], path_matrix(1)});
        m["G2xA1"] = block_diag({m["G2"], path_matrix(1)});
        m["B3"] = {{2, -1, 0}, {-1, 2, -1}, {0, -2, 2}};
        m["C3"] = {{2, -1, 0}, {-1, 2, -2}, {0, -1, 2}};
        m["B4"] = {{2, -1, 0, 0}, {-1, 2, -1, 0}, {0, -1, 2, -1}, {0, 0, -2, 2}};
        m["C4"] = {{2, -1, 0, 0}, {-1, 2, -1, 0}, {0, -1, 2, -2}, {0, 0, -1, 2}};
        m["D4"] = {{2, 0, -1, 0}, {0, 2, -1, 0}, {-1, -1, 2, -1}, {0, 0, -1, 2}};
        m["F4"] = {{2, -1, 0, 0}, {-1, 2, -1, 0}, {0, -2, 2, -1}, {0, 0, -1, 2}};
        m["A1~"] = {{2, -2}, {-2, 2}};
        m["A2~"] = {{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}};
        return m;
    }();
    return t;
}

}  // namespace

bool is_builtin_type(const std::string& label) { return builtin_table().count(label) > 0; }

Gcm gcm_of_type(const std::string& label) {
    auto it = builtin_table().find(label);
    if (it == builtin_table().end()) fail("ParseError", "unknown algebra type '" + label + "'");
    Gcm g = build_gcm(it->second);
    g.label = label;
    return g;
}

bool is_independent(const Gcm& g, const NodeSet& s) {
    g.check_nodes(s);
    for (int i : s)
        for (int j : s)
            if (i < j && g.adjacent(i, j)) return false;
    return true;
}

std::vector<NodeSet> connected_components(const Gcm& g, const NodeSet& s) {
    g.check_nodes(s);
    std::vector<NodeSet> comps;
    std::vector<int> pending = s.members();
    while (!pending.empty()) {
        std::vector<int> comp{pending.front()};
        std::vector<int> frontier{pending.front()};
        pending.erase(pending.begin());
        while (!frontier.empty()) {
            const int v = frontier.back();
            frontier.pop_back();
            for (auto it = pending.begin(); it != pending.end();) {
                if (g.adjacent(v, *it)) {
                    comp.push_back(*it);
                    frontier.push_back(*it);
                    it = pending.erase(it);
                } else {
                    ++it;
                }
            }
        }
        comps.emplace_back(std::move(comp));
    }
    std::sort(comps.begin(), comps.end());
    return comps;
}

std::vector<NodeSet> all_subsets(const NodeSet& s) {
    const auto& m = s.members();
    const int k = s.size();
    std::vector<NodeSet> out;
    for (unsigned mask = 0; mask < (1u << k); ++mask) {
        std::vector<int> v;
        for (int b = 0; b < k; ++b)
            if (mask & (1u << b)) v.push_back(m[b]);
        out.emplace_back(std::move(v));
    }
    std::sort(out.begin(), out.end(), [](const NodeSet& x, const NodeSet& y) {
        if (x.size() != y.size()) return x.size() < y.size();
        return x < y;
    });
    return out;
}

std::vector<NodeSet> independent_subsets(const Gcm& g, const NodeSet& s) {
    std::vector<NodeSet> out;
    for (auto& sub : all_subsets(s))
        if (is_independent(g, sub)) out.push_back(sub);
    return out;
}

}  // namespace kmw

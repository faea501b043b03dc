#pragma once

#include <initializer_list>
#include <string>
#include <vector>

namespace kmw {

// Subset of Dynkin nodes {0..n-1}; kept sorted and duplicate-free.
class NodeSet {
public:
    NodeSet() = default;
    NodeSet(std::initializer_list<int> xs);
    explicit NodeSet(std::vector<int> xs);

    static NodeSet range(int n);

    bool contains(int i) const;
    bool empty() const { return m_.empty(); }
    int size() const { return static_cast<int>(m_.size()); }
    bool subset_of(const NodeSet& o) const;
    NodeSet unioned(const NodeSet& o) const;
    NodeSet intersect(const NodeSet& o) const;
    NodeSet minus(const NodeSet& o) const;
    void add(int i);

    auto begin() const { return m_.begin(); }
    auto end() const { return m_.end(); }
    const std::vector<int>& members() const { return m_; }

    bool operator==(const NodeSet&) const = default;
    bool operator<(const NodeSet& o) const { return m_ < o.m_; }
    std::string str() const;

private:
    std::vector<int> m_;
};

// Generalized Cartan matrix over a finite node set.
//
// Convention, used by every pairing in the project: a[i][j] = <alpha_j, alpha_i^vee>,
// row index = coroot. The Dynkin graph has an edge {i,j} iff a[i][j] != 0.
struct Gcm {
    int n = 0;
    std::vector<std::vector<int>> a;
    std::string label;  // optional built-in type name

    int entry(int i, int j) const { return a[i][j]; }
    bool adjacent(int i, int j) const { return i != j && a[i][j] != 0; }
    NodeSet all_nodes() const { return NodeSet::range(n); }
    void check_node(int i) const;
    void check_nodes(const NodeSet& s) const;
    bool operator==(const Gcm& o) const { return a == o.a; }
};

// Validates the GCM axioms: 2s on the diagonal, non-positive off-diagonal,
// symmetric zero pattern. Throws DiagonalNotTwo / PositiveOffDiagonal /
// AsymmetricZero naming the first violating entry.
Gcm build_gcm(const std::vector<std::vector<int>>& matrix);

// Built-in type labels ("A2", "B2", "G2", "A1xA1", "A1~", ...).
Gcm gcm_of_type(const std::string& label);
bool is_builtin_type(const std::string& label);

// True iff the induced Dynkin subgraph on s has no edges.
bool is_independent(const Gcm& g, const NodeSet& s);

// Partition of s into Dynkin-graph connected components, sorted by minimum node.
std::vector<NodeSet> connected_components(const Gcm& g, const NodeSet& s);

// All independent subsets of s (including the empty set), ordered by
// cardinality then lexicographically.
std::vector<NodeSet> independent_subsets(const Gcm& g, const NodeSet& s);

std::vector<NodeSet> all_subsets(const NodeSet& s);  // by cardinality then lex

}  // namespace kmw

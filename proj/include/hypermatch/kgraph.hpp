#ifndef HYPERMATCH_KGRAPH_HPP
#define HYPERMATCH_KGRAPH_HPP

#include "hypermatch/bitset.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace hypermatch {

/// A k-set of vertices, stored strictly increasing, 1-based.
using Edge = std::vector<int>;

/// Subset of {1..n}, sorted increasing.
using VertexSet = std::vector<int>;

/// k-uniform hypergraph on the vertex set {1..n}. Immutable after
/// construction; edges are kept in lexicographic order with a bitmask
/// per edge for fast disjointness tests.
class KGraph {
public:
    KGraph() = default;  // degenerate placeholder; build() is the real entry

    /// Validates, canonicalizes (sorts each tuple and the edge list) and
    /// deduplicates. Rejects out-of-range vertices, wrong arity and repeated
    /// vertices within a tuple, naming the offending edge.
    static KGraph build(int n, int k, std::vector<Edge> edges);

    int n() const { return n_; }
    int k() const { return k_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(int i) const { return edges_[static_cast<size_t>(i)]; }
    const VertexBitset& edge_mask(int i) const { return masks_[static_cast<size_t>(i)]; }

    bool has_edge(const Edge& e) const;

    /// d_H(T): number of edges containing every vertex of T. |T| = 0 gives
    /// |E(H)|; |T| > k is an error.
    int degree(const VertexSet& t) const;

    int max_degree() const;    // max over singletons; 0 if edgeless
    int max_codegree() const;  // max over pairs; 0 if edgeless or k < 2

    /// H[S] relabeled onto {1..|S|} preserving relative vertex order. The map
    /// sends new label i (1-based) to the original vertex map[i-1].
    std::pair<KGraph, std::vector<int>> induced(const VertexSet& s) const;

    /// H - S, i.e. induced on the complement of S.
    std::pair<KGraph, std::vector<int>> remove(const VertexSet& s) const;

    /// Edge set closed downward under the dominance order. Checked via
    /// immediate predecessors only: a set of sorted tuples is a downset iff
    /// it is closed under decrementing a single coordinate.
    bool is_stable() const;

    /// Adds one edge (validated); used by saturation and perturbation sweeps.
    KGraph with_edge(const Edge& e) const;
    KGraph without_edge(const Edge& e) const;

    bool operator==(const KGraph& o) const {
        return n_ == o.n_ && k_ == o.k_ && edges_ == o.edges_;
    }

private:
    KGraph(int n, int k, std::vector<Edge> edges, std::vector<VertexBitset> masks)
        : n_(n), k_(k), edges_(std::move(edges)), masks_(std::move(masks)) {}

    int n_ = 0;
    int k_ = 0;
    std::vector<Edge> edges_;
    std::vector<VertexBitset> masks_;
};

/// Pairwise-disjoint edge list.
struct Matching {
    std::vector<Edge> edges;
    int size() const { return static_cast<int>(edges.size()); }
};

/// a_i <= b_i componentwise on sorted tuples; error on arity mismatch.
bool dominance_leq(const Edge& e, const Edge& f);

/// The immediate predecessors of f in the dominance order: each legal
/// single-coordinate decrement. Covering relation of the order, so downset
/// checks and closures only ever need these.
std::vector<Edge> immediate_predecessors(const Edge& f);
std::vector<Edge> immediate_successors(const Edge& f, int n);

VertexBitset make_mask(int n, const Edge& e);

/// True iff edges are pairwise disjoint and each is an edge of h.
bool validate_matching(const KGraph& h, const Matching& m);

/// All k-subsets of {1..n} in lexicographic order.
std::vector<Edge> all_k_subsets(int n, int k);

}  // namespace hypermatch

#endif  // HYPERMATCH_KGRAPH_HPP

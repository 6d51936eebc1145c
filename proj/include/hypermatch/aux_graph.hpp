#ifndef HYPERMATCH_AUX_GRAPH_HPP
#define HYPERMATCH_AUX_GRAPH_HPP

#include "hypermatch/kgraph.hpp"

#include <string>

namespace hypermatch {

/// The (k+1)-graph H(F) or H*(F): base vertices {1..n}, label vertices
/// v_1..v_m and u_1..u_r embedded as n+1..n+m and n+m+1..n+m+r. Every edge
/// contains exactly one label vertex; u-labels appear only in the H* variant
/// (r = 0 for plain H(F)).
struct AuxGraph {
    int base_n = 0;
    int k = 0;  // base uniformity; graph is (k+1)-uniform
    int m = 0;
    int r = 0;
    KGraph graph;  // on base_n + m + r vertices

    int v_label(int i) const { return base_n + i; }          // i in 1..m
    int u_label(int j) const { return base_n + m + j; }      // j in 1..r
    bool is_v_label(int x) const { return x > base_n && x <= base_n + m; }
    bool is_u_label(int x) const { return x > base_n + m; }
    int total_vertices() const { return base_n + m + r; }

    /// "v3", "u1", or the decimal base vertex.
    std::string vertex_name(int x) const;

    bool operator==(const AuxGraph& o) const = default;
};

/// Validates the label discipline: every edge has exactly one label vertex,
/// and u-labels only when r > 0.
AuxGraph make_aux(int base_n, int k, int m, int r, std::vector<Edge> edges);

}  // namespace hypermatch

#endif  // HYPERMATCH_AUX_GRAPH_HPP

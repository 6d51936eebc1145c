#ifndef HYPERMATCH_FRACTIONAL_HPP
#define HYPERMATCH_FRACTIONAL_HPP

#include "hypermatch/aux_graph.hpp"
#include "hypermatch/kgraph.hpp"
#include "hypermatch/numeric.hpp"

#include <vector>

namespace hypermatch {

/// Nonnegative edge weights with per-vertex load accounting. Entirely exact
/// rational; no tolerances exist anywhere in this module.
class FracMatching {
public:
    FracMatching(int n, int k) : n_(n), k_(k), loads_(static_cast<size_t>(n) + 1) {}

    int n() const { return n_; }
    int k() const { return k_; }

    /// Accumulates onto an edge (weights may be built up in several steps).
    void add_weight(const Edge& e, const Rat& w);

    const Rat& load(int v) const { return loads_[static_cast<size_t>(v)]; }
    Rat total_weight() const;

    /// Sorted (edge, weight) pairs with nonzero weight.
    const std::vector<std::pair<Edge, Rat>>& weights() const { return entries_; }

    bool all_weights_nonneg() const;
    bool all_loads_at_most_one() const;

    /// Every load exactly 1 (equivalently total weight = n/k).
    bool is_perfect() const;

private:
    int n_;
    int k_;
    std::vector<std::pair<Edge, Rat>> entries_;  // kept sorted by edge
    std::vector<Rat> loads_;
};

struct LpCertificate {
    Rat value;
    FracMatching primal;
    std::vector<Rat> dual;  // fractional vertex cover, dual[v-1] for v in 1..n
};

/// Exact maximum fractional matching: max sum w(e) subject to loads <= 1,
/// w >= 0. Dense simplex with Bland's rule; the returned dual certificate is
/// audited (primal feasible, dual a fractional vertex cover, equal values)
/// before return.
LpCertificate max_fractional(const KGraph& h);

/// Independent audit of an LP certificate; what max_fractional enforces.
bool lp_certificate_ok(const KGraph& h, const LpCertificate& cert);

/// True iff the LP optimum equals n/k.
bool has_perfect_fractional(const KGraph& h);

/// Grows a partial load vector on the complete 3-graph over {1..nv} into a
/// perfect fractional matching: repeatedly saturates a maximum-load vertex by
/// raising one edge inside the unsaturated working set, then closes the last
/// two vertices with a fixed patch through four reserved zero-load vertices.
/// Requires nv % 3 == 0, all loads in [0,1), and at least 4 zero loads.
/// The returned weights are the added mass: for every vertex,
/// initial_loads[v-1] + result.load(v) == 1 (checked before return).
FracMatching extend_complete3(int nv, const std::vector<Rat>& initial_loads);

/// Projects a fractional matching supported on v-edges of an auxiliary graph
/// down to base-vertex loads. Errors on u-edges or label-free support, or if
/// some v_i carries total weight > 1.
std::vector<Rat> project_aux(const AuxGraph& aux, const FracMatching& w);

/// Splits a nonnegative residual of total mass `count` into `count` unit
/// parcels by greedy water-filling in lexicographic edge order (an edge may
/// straddle a parcel boundary). Errors on a mass mismatch.
std::vector<FracMatching> distribute_to_u(const FracMatching& residual, int count);

}  // namespace hypermatch

#endif  // HYPERMATCH_FRACTIONAL_HPP

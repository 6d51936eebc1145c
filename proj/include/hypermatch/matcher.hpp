#ifndef HYPERMATCH_MATCHER_HPP
#define HYPERMATCH_MATCHER_HPP

#include "hypermatch/aux_graph.hpp"
#include "hypermatch/family.hpp"
#include "hypermatch/kgraph.hpp"

#include <optional>

namespace hypermatch {

/// Exact maximum matching size. Branch and bound on the lowest-index vertex
/// still coverable; always proves optimality before returning.
int nu(const KGraph& h);

/// Early-exit variant: true iff nu(h) >= target. Stops as soon as a matching
/// of size target is found, but a false answer is still a proof.
bool nu_at_least(const KGraph& h, int target);

/// A witness of size nu(h), validated before return.
Matching max_matching(const KGraph& h);

/// True iff nu(h) * k = n; witness covers every vertex.
bool has_perfect_matching(const KGraph& h);
std::optional<Matching> perfect_matching(const KGraph& h);

/// Exact rainbow matching search; returns a validated witness or nullopt.
std::optional<RainbowMatching> rainbow(const Family& f);

/// H(F): one label vertex v_i per member, edges e + v_i for e in F_i.
AuxGraph reduce_H(const Family& f);

/// H*(F): additionally u_1..u_r with r = floor(n/k) - m, each u_j joined to
/// every k-set of the base. Requires n >= km.
AuxGraph reduce_Hstar(const Family& f);

/// Checks on a concrete instance that the three predicates agree:
/// rainbow(F) exists  <=>  nu(H(F)) >= m  <=>  nu(H*(F)) = m + r.
bool aux_matching_equiv(const Family& f);

}  // namespace hypermatch

#endif  // HYPERMATCH_MATCHER_HPP

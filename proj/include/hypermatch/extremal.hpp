#ifndef HYPERMATCH_EXTREMAL_HPP
#define HYPERMATCH_EXTREMAL_HPP

#include "hypermatch/aux_graph.hpp"
#include "hypermatch/kgraph.hpp"
#include "hypermatch/numeric.hpp"

namespace hypermatch {

/// The extremal edge count among n-vertex k-graphs without a matching of
/// size m: max{ C(n,k) - C(n-m+1,k), C(km-1,k) } for n >= km-1, and C(n,k)
/// below that (no matching of size m fits at all). No domain guard; callers
/// that need the threshold semantics go through f_bound.
BigInt f_formula(long long n, long long m, long long k);

/// The threshold below which matchings of size m can be avoided.
/// Requires k >= 1, m >= 1 and n >= km - 1.
BigInt f_bound(long long n, long long m, long long k);

/// S(n,m,k): every k-set of [n] meeting [m-1].  D(n,m,k): every k-set
/// inside [km-1].  Both on vertex set [n]; require n >= km.
KGraph make_S(int n, int m, int k);
KGraph make_D(int n, int m, int k);

/// H(F) for m identical copies of S(n,m,k) resp. D(n,m,k).
AuxGraph make_HS(int n, int m, int k);
AuxGraph make_HD(int n, int m, int k);

/// |E(h1) \ E(h2)| / |V|^k, so h2 is eps-close to h1 iff the value is <= eps.
/// Asymmetric by definition. Both graphs must share n and k.
Rat closeness(const KGraph& h1, const KGraph& h2);

/// Same predicate for auxiliary graphs: |V| = n + m + r, exponent k+1.
Rat closeness(const AuxGraph& h1, const AuxGraph& h2);

/// f(n,m,k) >= f(n-1,m-1,k) + C(n-1,k-1); requires n >= km-1, m >= 2.
bool check_f_superadditivity(long long n, long long m, long long k);

enum class ShiftIneq { kLower, kUpper };

/// The two displayed inequalities for f(-,-,3):
///   kLower: f(x,y,3) >= f(x,y-a,3) + C(a,3)
///   kUpper: f(x,y,3) >= f(x,y+a,3) - 3*a*x^2
/// Requires positive x, y, a with a < y.
bool check_f_shift_ineq(long long x, long long y, long long a, ShiftIneq which);

}  // namespace hypermatch

#endif  // HYPERMATCH_EXTREMAL_HPP

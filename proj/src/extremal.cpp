#include "hypermatch/extremal.hpp"

#include "hypermatch/errors.hpp"

#include <algorithm>

namespace hypermatch {

BigInt f_formula(long long n, long long m, long long k) {
    // Below km-1 vertices no k-graph can reach a matching of size m at all,
    // so the extremal value degenerates to C(n,k); at n = km-1 this agrees
    // with the D branch.
    if (n <= k * m - 1) return binomial(n, k);
    BigInt s_branch = binomial(n, k) - binomial(n - m + 1, k);
    BigInt d_branch = binomial(k * m - 1, k);
    return std::max(s_branch, d_branch);
}

BigInt f_bound(long long n, long long m, long long k) {
    if (k < 1 || m < 1 || n < k * m - 1)
        throw precondition_error("f_bound requires k >= 1, m >= 1, n >= km-1");
    return f_formula(n, m, k);
}

namespace {

void require_construction_params(int n, int m, int k) {
    if (k < 1 || m < 1 || n < k * m)
        throw precondition_error("construction requires k >= 1, m >= 1, n >= km");
}

}  // namespace

KGraph make_S(int n, int m, int k) {
    require_construction_params(n, m, k);
    std::vector<Edge> edges;
    for (Edge& e : all_k_subsets(n, k))
        if (e[0] <= m - 1) edges.push_back(std::move(e));  // sorted, so e[0] = min
    return KGraph::build(n, k, std::move(edges));
}

KGraph make_D(int n, int m, int k) {
    require_construction_params(n, m, k);
    std::vector<Edge> edges;
    for (Edge& e : all_k_subsets(n, k))
        if (e.back() <= k * m - 1) edges.push_back(std::move(e));
    return KGraph::build(n, k, std::move(edges));
}

namespace {

AuxGraph m_fold_aux(const KGraph& g, int m) {
    std::vector<Edge> edges;
    edges.reserve(static_cast<size_t>(g.edge_count()) * static_cast<size_t>(m));
    for (int i = 1; i <= m; ++i)
        for (const Edge& e : g.edges()) {
            Edge ae = e;
            ae.push_back(g.n() + i);
            edges.push_back(std::move(ae));
        }
    return make_aux(g.n(), g.k(), m, 0, std::move(edges));
}

}  // namespace

AuxGraph make_HS(int n, int m, int k) { return m_fold_aux(make_S(n, m, k), m); }
AuxGraph make_HD(int n, int m, int k) { return m_fold_aux(make_D(n, m, k), m); }

namespace {

Rat closeness_impl(const std::vector<Edge>& e1, const KGraph& g2, long long nv, unsigned exponent) {
    long long missing = 0;
    for (const Edge& e : e1)
        if (!g2.has_edge(e)) ++missing;
    return rat_num_den(BigInt(missing), ipow(BigInt(nv), exponent));
}

}  // namespace

Rat closeness(const KGraph& h1, const KGraph& h2) {
    if (h1.n() != h2.n() || h1.k() != h2.k())
        throw input_error("closeness: vertex set / uniformity mismatch");
    return closeness_impl(h1.edges(), h2, h1.n(), static_cast<unsigned>(h1.k()));
}

Rat closeness(const AuxGraph& h1, const AuxGraph& h2) {
    if (h1.base_n != h2.base_n || h1.k != h2.k || h1.m != h2.m || h1.r != h2.r)
        throw input_error("closeness: aux graph shape mismatch");
    return closeness_impl(h1.graph.edges(), h2.graph, h1.total_vertices(),
                          static_cast<unsigned>(h1.k) + 1);
}

bool check_f_superadditivity(long long n, long long m, long long k) {
    if (k < 1 || m < 2 || n < k * m - 1)
        throw precondition_error("check_f_superadditivity requires m >= 2, n >= km-1");
    return f_formula(n, m, k) >= f_formula(n - 1, m - 1, k) + binomial(n - 1, k - 1);
}

bool check_f_shift_ineq(long long x, long long y, long long a, ShiftIneq which) {
    if (x < 1 || y < 1 || a < 1 || a >= y)
        throw precondition_error("check_f_shift_ineq requires positive x, y, a with a < y");
    if (which == ShiftIneq::kLower)
        return f_formula(x, y, 3) >= f_formula(x, y - a, 3) + binomial(a, 3);
    return f_formula(x, y, 3) >= f_formula(x, y + a, 3) - BigInt(3) * a * x * x;
}

}  // namespace hypermatch

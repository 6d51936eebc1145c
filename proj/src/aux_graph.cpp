#include "hypermatch/aux_graph.hpp"

#include "hypermatch/errors.hpp"

namespace hypermatch {

std::string AuxGraph::vertex_name(int x) const {
    if (is_u_label(x)) return "u" + std::to_string(x - base_n - m);
    if (is_v_label(x)) return "v" + std::to_string(x - base_n);
    return std::to_string(x);
}

AuxGraph make_aux(int base_n, int k, int m, int r, std::vector<Edge> edges) {
    if (base_n < 1 || k < 1 || m < 1 || r < 0) throw input_error("make_aux: bad parameters");
    AuxGraph a;
    a.base_n = base_n;
    a.k = k;
    a.m = m;
    a.r = r;
    a.graph = KGraph::build(base_n + m + r, k + 1, std::move(edges));
    for (const Edge& e : a.graph.edges()) {
        int labels = 0;
        for (int x : e)
            if (x > base_n) ++labels;
        if (labels != 1) throw input_error("aux edge must contain exactly one label vertex");
    }
    return a;
}

}  // namespace hypermatch

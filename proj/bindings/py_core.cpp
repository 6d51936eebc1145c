// Python bindings for the main operations: constructions, exact solvers,
// shifting/saturation, fractional matchings, and the verification sweeps.
// Exact rationals cross the boundary as fractions.Fraction, big integers as
// python ints.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hypermatch/errors.hpp"
#include "hypermatch/extremal.hpp"
#include "hypermatch/fractional.hpp"
#include "hypermatch/harness.hpp"
#include "hypermatch/io.hpp"
#include "hypermatch/matcher.hpp"
#include "hypermatch/shift.hpp"

#include <sstream>

namespace py = pybind11;
using namespace hypermatch;

namespace {

py::object to_fraction(const Rat& r) {
    return py::module_::import("fractions").attr("Fraction")(format_rat(r));
}

py::object to_pyint(const BigInt& x) { return py::int_(py::str(x.str())); }

Rat rat_from_object(const py::object& obj) {
    return parse_rat(py::str(obj).cast<std::string>());
}

py::object rainbow_or_none(const Family& f) {
    auto rm = rainbow(f);
    if (!rm) return py::none();
    py::list out;
    for (const auto& [i, e] : rm->pairs) out.append(py::make_tuple(i, py::tuple(py::cast(e))));
    return out;
}

py::dict verdict_to_dict(const Verdict& v) {
    py::dict d;
    switch (v.status) {
        case VerdictStatus::kConfirmed: d["status"] = "CONFIRMED"; break;
        case VerdictStatus::kCounterexample: d["status"] = "COUNTEREXAMPLE"; break;
        case VerdictStatus::kInconclusive: d["status"] = "INCONCLUSIVE"; break;
    }
    d["sweep_cases"] = v.sweep_cases;
    d["random_trials"] = v.random_trials;
    if (v.witness) {
        d["witness_revalidated"] = v.witness->revalidated;
        if (v.witness->graph) d["witness"] = emit_kgraph(*v.witness->graph);
        if (v.witness->family) d["witness"] = emit_family(*v.witness->family);
    }
    return d;
}

TrialConfig config_from_args(int n, int m, int k, long long trials, uint64_t seed) {
    TrialConfig cfg;
    cfg.n = n;
    cfg.m = m;
    cfg.k = k;
    cfg.trials = trials;
    cfg.seed = seed;
    return cfg;
}

}  // namespace

PYBIND11_MODULE(_core, mod) {
    mod.doc() = "exact hypergraph matching laboratory (C++ core)";

    py::register_exception<input_error>(mod, "InputError", PyExc_ValueError);
    py::register_exception<precondition_error>(mod, "PreconditionError", PyExc_ValueError);

    py::class_<KGraph>(mod, "KGraph")
        .def(py::init([](int n, int k, const std::vector<Edge>& edges) {
                 return KGraph::build(n, k, edges);
             }),
             py::arg("n"), py::arg("k"), py::arg("edges"))
        .def_property_readonly("n", &KGraph::n)
        .def_property_readonly("k", &KGraph::k)
        .def("edge_count", &KGraph::edge_count)
        .def("edges",
             [](const KGraph& g) {
                 py::list out;
                 for (const Edge& e : g.edges()) out.append(py::tuple(py::cast(e)));
                 return out;
             })
        .def("has_edge", [](const KGraph& g, const Edge& e) { return g.has_edge(e); })
        .def("degree", [](const KGraph& g, const VertexSet& t) { return g.degree(t); })
        .def("max_degree", &KGraph::max_degree)
        .def("max_codegree", &KGraph::max_codegree)
        .def("is_stable", &KGraph::is_stable)
        .def("with_edge", &KGraph::with_edge)
        .def("induced", [](const KGraph& g, const VertexSet& s) { return g.induced(s); })
        .def("remove", [](const KGraph& g, const VertexSet& s) { return g.remove(s); })
        .def("__eq__", [](const KGraph& a, const KGraph& b) { return a == b; })
        .def("__repr__", [](const KGraph& g) {
            std::ostringstream os;
            os << "KGraph(n=" << g.n() << ", k=" << g.k() << ", edges=" << g.edge_count() << ")";
            return os.str();
        });

    py::class_<Family>(mod, "Family")
        .def(py::init([](const std::vector<KGraph>& members) { return Family::build(members); }),
             py::arg("members"))
        .def_property_readonly("n", &Family::n)
        .def_property_readonly("k", &Family::k)
        .def_property_readonly("m", &Family::m)
        .def("member", &Family::member, py::return_value_policy::copy)
        .def("__eq__", [](const Family& a, const Family& b) { return a == b; })
        .def("__repr__", [](const Family& f) {
            std::ostringstream os;
            os << "Family(n=" << f.n() << ", k=" << f.k() << ", m=" << f.m() << ")";
            return os.str();
        });

    mod.def("f_bound",
            [](long long n, long long m, long long k) { return to_pyint(f_bound(n, m, k)); },
            py::arg("n"), py::arg("m"), py::arg("k"));
    mod.def("make_S", &make_S, py::arg("n"), py::arg("m"), py::arg("k"));
    mod.def("make_D", &make_D, py::arg("n"), py::arg("m"), py::arg("k"));
    mod.def("closeness",
            [](const KGraph& h1, const KGraph& h2) { return to_fraction(closeness(h1, h2)); });
    mod.def("check_f_superadditivity", &check_f_superadditivity);

    mod.def("nu", &nu);
    mod.def("max_matching", [](const KGraph& g) {
        py::list out;
        for (const Edge& e : max_matching(g).edges) out.append(py::tuple(py::cast(e)));
        return out;
    });
    mod.def("has_perfect_matching", &has_perfect_matching);
    mod.def("rainbow", &rainbow_or_none,
            "rainbow matching as [(member, edge)] or None");
    mod.def("aux_matching_equiv", &aux_matching_equiv);

    mod.def("stabilize", [](const KGraph& g) { return stabilize(g); });
    mod.def("stabilize_family", [](const Family& f) { return stabilize(f); });
    mod.def("saturate", &saturate);
    mod.def("is_saturated", &is_saturated);

    mod.def("max_fractional", [](const KGraph& g) {
        LpCertificate cert = max_fractional(g);
        py::list weights;
        for (const auto& [e, w] : cert.primal.weights())
            weights.append(py::make_tuple(py::tuple(py::cast(e)), to_fraction(w)));
        py::list dual;
        for (const Rat& y : cert.dual) dual.append(to_fraction(y));
        return py::make_tuple(to_fraction(cert.value), weights, dual);
    });
    mod.def("has_perfect_fractional", &has_perfect_fractional);
    mod.def("extend_complete3", [](int nv, const py::sequence& loads) {
        std::vector<Rat> init;
        for (const auto& item : loads) init.push_back(rat_from_object(py::reinterpret_borrow<py::object>(item)));
        FracMatching added = extend_complete3(nv, init);
        py::list out;
        for (const auto& [e, w] : added.weights())
            out.append(py::make_tuple(py::tuple(py::cast(e)), to_fraction(w)));
        return out;
    });

    mod.def("verify_erdos",
            [](int n, int m, int k, long long trials, uint64_t seed) {
                return verdict_to_dict(verify_erdos(config_from_args(n, m, k, trials, seed)));
            },
            py::arg("n"), py::arg("m"), py::arg("k"), py::arg("trials") = 0, py::arg("seed") = 1);
    mod.def("verify_rainbow",
            [](int n, int m, int k, long long trials, uint64_t seed) {
                return verdict_to_dict(verify_rainbow(config_from_args(n, m, k, trials, seed)));
            },
            py::arg("n"), py::arg("m"), py::arg("k"), py::arg("trials") = 0, py::arg("seed") = 1);

    mod.def("parse_kgraph", [](const std::string& text) {
        std::istringstream in(text);
        return parse_kgraph(in);
    });
    mod.def("emit_kgraph", &emit_kgraph);
    mod.def("parse_family", [](const std::string& text) {
        std::istringstream in(text);
        return parse_family(in);
    });
    mod.def("emit_family", &emit_family);
}

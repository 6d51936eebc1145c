#include "hypermatch/fractional.hpp"

#include "hypermatch/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace hypermatch {

void FracMatching::add_weight(const Edge& e, const Rat& w) {
    if (w == 0) return;
    for (size_t i = 0; i < e.size(); ++i) {
        if (e[i] < 1 || e[i] > n_) throw input_error("FracMatching: vertex out of range");
        if (i > 0 && e[i] <= e[i - 1]) throw input_error("FracMatching: edge not strictly increasing");
    }
    if (static_cast<int>(e.size()) != k_) throw input_error("FracMatching: wrong edge arity");
    auto it = std::lower_bound(entries_.begin(), entries_.end(), e,
                               [](const auto& entry, const Edge& key) { return entry.first < key; });
    if (it != entries_.end() && it->first == e) {
        it->second += w;
        if (it->second == 0) entries_.erase(it);
    } else {
        entries_.insert(it, {e, w});
    }
    for (int v : e) loads_[static_cast<size_t>(v)] += w;
}

Rat FracMatching::total_weight() const {
    Rat t = 0;
    for (const auto& [e, w] : entries_) t += w;
    return t;
}

bool FracMatching::all_weights_nonneg() const {
    for (const auto& [e, w] : entries_)
        if (w < 0) return false;
    return true;
}

bool FracMatching::all_loads_at_most_one() const {
    for (int v = 1; v <= n_; ++v)
        if (load(v) > 1) return false;
    return true;
}

bool FracMatching::is_perfect() const {
    for (int v = 1; v <= n_; ++v)
        if (load(v) != 1) return false;
    return all_weights_nonneg();
}

namespace {

// Dense tableau simplex for  max 1.x  s.t.  Ax <= 1, x >= 0  where A is the
// vertex/edge incidence matrix. The slack basis is feasible, Bland's rule
// guarantees termination, and exact rationals make every pivot exact.
class MatchingSimplex {
public:
    explicit MatchingSimplex(const KGraph& h)
        : h_(h), rows_(h.n()), cols_(h.edge_count() + h.n()) {
        tab_.assign(static_cast<size_t>(rows_) + 1,
                    std::vector<Rat>(static_cast<size_t>(cols_) + 1, Rat(0)));
        basis_.resize(static_cast<size_t>(rows_));
        for (int ei = 0; ei < h_.edge_count(); ++ei)
            for (int v : h_.edge(ei)) tab_[static_cast<size_t>(v - 1)][static_cast<size_t>(ei)] = 1;
        for (int r = 0; r < rows_; ++r) {
            tab_[static_cast<size_t>(r)][static_cast<size_t>(h_.edge_count() + r)] = 1;
            tab_[static_cast<size_t>(r)][static_cast<size_t>(cols_)] = 1;  // rhs
            basis_[static_cast<size_t>(r)] = h_.edge_count() + r;
        }
        // objective row: maximize sum of edge variables, stored as z - c
        for (int ei = 0; ei < h_.edge_count(); ++ei)
            tab_[static_cast<size_t>(rows_)][static_cast<size_t>(ei)] = -1;
    }

    void run() {
        while (true) {
            int entering = -1;  // Bland: lowest-index column with negative reduced cost
            for (int c = 0; c < cols_; ++c)
                if (obj(c) < 0) {
                    entering = c;
                    break;
                }
            if (entering == -1) return;
            int leaving = -1;
            Rat best_ratio = 0;
            for (int r = 0; r < rows_; ++r) {
                const Rat& coef = tab_[static_cast<size_t>(r)][static_cast<size_t>(entering)];
                if (coef <= 0) continue;
                Rat ratio = rhs(r) / coef;
                if (leaving == -1 || ratio < best_ratio ||
                    (ratio == best_ratio && basis_[static_cast<size_t>(r)] < basis_[static_cast<size_t>(leaving)])) {
                    leaving = r;
                    best_ratio = ratio;
                }
            }
            if (leaving == -1) throw std::logic_error("matching LP cannot be unbounded");
            pivot(leaving, entering);
        }
    }

    Rat objective() const { return tab_[static_cast<size_t>(rows_)][static_cast<size_t>(cols_)]; }

    Rat primal_value(int col) const {
        for (int r = 0; r < rows_; ++r)
            if (basis_[static_cast<size_t>(r)] == col) return rhs(r);
        return 0;
    }

    /// Dual variable of row v = reduced cost of its slack column.
    Rat dual_value(int row) const { return obj(h_.edge_count() + row); }

private:
    const Rat& obj(int c) const { return tab_[static_cast<size_t>(rows_)][static_cast<size_t>(c)]; }
    const Rat& rhs(int r) const { return tab_[static_cast<size_t>(r)][static_cast<size_t>(cols_)]; }

    void pivot(int r, int c) {
        auto& row = tab_[static_cast<size_t>(r)];
        Rat inv = row[static_cast<size_t>(c)];
        for (auto& x : row) x /= inv;
        for (int i = 0; i <= rows_; ++i) {
            if (i == r) continue;
            Rat factor = tab_[static_cast<size_t>(i)][static_cast<size_t>(c)];
            if (factor == 0) continue;
            for (int j = 0; j <= cols_; ++j)
                tab_[static_cast<size_t>(i)][static_cast<size_t>(j)] -=
                    factor * row[static_cast<size_t>(j)];
        }
        basis_[static_cast<size_t>(r)] = c;
    }

    const KGraph& h_;
    int rows_;
    int cols_;
    std::vector<std::vector<Rat>> tab_;
    std::vector<int> basis_;
};

}  // namespace

bool lp_certificate_ok(const KGraph& h, const LpCertificate& cert) {
    // primal feasibility
    if (!cert.primal.all_weights_nonneg() || !cert.primal.all_loads_at_most_one()) return false;
    for (const auto& [e, w] : cert.primal.weights())
        if (!h.has_edge(e)) return false;
    if (cert.primal.total_weight() != cert.value) return false;
    // dual feasibility: a fractional vertex cover
    if (static_cast<int>(cert.dual.size()) != h.n()) return false;
    Rat dual_total = 0;
    for (const Rat& y : cert.dual) {
        if (y < 0) return false;
        dual_total += y;
    }
    for (const Edge& e : h.edges()) {
        Rat cover = 0;
        for (int v : e) cover += cert.dual[static_cast<size_t>(v - 1)];
        if (cover < 1) return false;
    }
    // weak duality closes the gap exactly
    return dual_total == cert.value;
}

LpCertificate max_fractional(const KGraph& h) {
    MatchingSimplex simplex(h);
    simplex.run();
    LpCertificate cert{simplex.objective(), FracMatching(h.n(), h.k()), {}};
    for (int ei = 0; ei < h.edge_count(); ++ei) {
        Rat w = simplex.primal_value(ei);
        if (w != 0) cert.primal.add_weight(h.edge(ei), w);
    }
    cert.dual.reserve(static_cast<size_t>(h.n()));
    for (int r = 0; r < h.n(); ++r) cert.dual.push_back(simplex.dual_value(r));
    if (!lp_certificate_ok(h, cert))
        throw std::logic_error("max_fractional produced an inconsistent certificate");
    return cert;
}

bool has_perfect_fractional(const KGraph& h) {
    return max_fractional(h).value == Rat(h.n(), h.k());
}

FracMatching extend_complete3(int nv, const std::vector<Rat>& initial_loads) {
    if (nv % 3 != 0 || nv < 6) throw precondition_error("extend_complete3 requires nv >= 6 divisible by 3");
    if (static_cast<int>(initial_loads.size()) != nv)
        throw precondition_error("extend_complete3: load vector must have nv entries");
    std::vector<int> zero_loads;
    for (int v = 1; v <= nv; ++v) {
        const Rat& w = initial_loads[static_cast<size_t>(v - 1)];
        if (w < 0 || w >= 1) throw precondition_error("extend_complete3: loads must lie in [0,1)");
        if (w == 0) zero_loads.push_back(v);
    }
    if (zero_loads.size() < 4)
        throw precondition_error("extend_complete3 requires at least 4 zero-load vertices");

    FracMatching added(nv, 3);
    auto load = [&](int v) {
        return initial_loads[static_cast<size_t>(v - 1)] + added.load(v);
    };

    // a_1..a_4: the four lowest zero-load vertices, reserved for the patch.
    std::vector<int> a(zero_loads.begin(), zero_loads.begin() + 4);
    std::vector<int> working;
    for (int v = 1; v <= nv; ++v)
        if (std::find(a.begin(), a.end(), v) == a.end()) working.push_back(v);

    while (working.size() > 2) {
        // max-load vertex, lowest index on ties
        int v = working[0];
        for (int u : working)
            if (load(u) > load(v)) v = u;
        // lexicographically least working edge through v
        std::vector<int> others;
        for (int u : working)
            if (u != v) others.push_back(u);
        Edge f{v, others[0], others[1]};
        std::sort(f.begin(), f.end());
        added.add_weight(f, Rat(1) - load(v));
        std::erase_if(working, [&](int u) { return load(u) == 1; });
    }

    // close with b_1, b_2 (load(b1) >= load(b2)); when fewer than two
    // unsaturated vertices remain, saturated ones fill the slots (the patch
    // then adds zero there).
    std::vector<int> b = working;
    for (int v = 1; v <= nv && b.size() < 2; ++v)
        if (std::find(a.begin(), a.end(), v) == a.end() &&
            std::find(b.begin(), b.end(), v) == b.end())
            b.push_back(v);
    if (load(b[0]) < load(b[1])) std::swap(b[0], b[1]);
    Rat w1 = load(b[0]), w2 = load(b[1]);

    auto patch = [&](int x, int y, int z, const Rat& w) {
        Edge e{x, y, z};
        std::sort(e.begin(), e.end());
        added.add_weight(e, w);
    };
    patch(a[0], a[1], b[0], Rat(1) - w1);
    patch(a[0], a[1], b[1], (w1 - w2) / 2);
    patch(a[2], a[3], b[1], Rat(1) - w1 + (w1 - w2) / 2);
    Rat corner = (w1 + w2) / 6;
    patch(a[0], a[1], a[2], corner);
    patch(a[0], a[1], a[3], corner);
    patch(a[0], a[2], a[3], corner);
    patch(a[1], a[2], a[3], corner);

    for (int v = 1; v <= nv; ++v)
        if (load(v) != 1) throw std::logic_error("extend_complete3: vertex missed load 1");
    if (!added.all_weights_nonneg()) throw std::logic_error("extend_complete3: negative weight");
    return added;
}

std::vector<Rat> project_aux(const AuxGraph& aux, const FracMatching& w) {
    if (w.n() != aux.total_vertices() || w.k() != aux.k + 1)
        throw input_error("project_aux: fractional matching shape mismatch");
    std::vector<Rat> loads(static_cast<size_t>(aux.base_n), Rat(0));
    for (const auto& [e, weight] : w.weights()) {
        int labels = 0;
        for (int x : e) {
            if (aux.is_u_label(x)) throw input_error("project_aux: weight on a u-edge");
            if (aux.is_v_label(x)) ++labels;
        }
        if (labels != 1) throw input_error("project_aux: edge without exactly one v-label");
        if (!aux.graph.has_edge(e)) throw input_error("project_aux: weight on a non-edge");
        for (int x : e)
            if (x <= aux.base_n) loads[static_cast<size_t>(x - 1)] += weight;
    }
    for (int i = 1; i <= aux.m; ++i) {
        Rat per_label = 0;
        for (const auto& [e, weight] : w.weights())
            if (std::binary_search(e.begin(), e.end(), aux.v_label(i))) per_label += weight;
        if (per_label > 1) throw input_error("project_aux: v-label carries weight > 1");
    }
    return loads;
}

std::vector<FracMatching> distribute_to_u(const FracMatching& residual, int count) {
    if (count < 0) throw input_error("distribute_to_u: negative count");
    if (!residual.all_weights_nonneg())
        throw input_error("distribute_to_u: negative residual weight");
    if (residual.total_weight() != count)
        throw input_error("distribute_to_u: residual mass does not equal parcel count");
    std::vector<FracMatching> parcels;
    parcels.reserve(static_cast<size_t>(count));
    if (count == 0) return parcels;
    parcels.emplace_back(residual.n(), residual.k());
    Rat room = 1;  // capacity left in the open parcel
    for (const auto& [e, w] : residual.weights()) {
        Rat left = w;
        while (left > 0) {
            Rat take = std::min(left, room);
            parcels.back().add_weight(e, take);
            left -= take;
            room -= take;
            if (room == 0 && (left > 0 || static_cast<int>(parcels.size()) < count)) {
                parcels.emplace_back(residual.n(), residual.k());
                room = 1;
            }
        }
    }
    for (const FracMatching& p : parcels)
        if (p.total_weight() != 1) throw std::logic_error("distribute_to_u: parcel mass is not 1");
    return parcels;
}

}  // namespace hypermatch

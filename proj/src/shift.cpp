#include "hypermatch/shift.hpp"

#include "hypermatch/errors.hpp"
#include "hypermatch/matcher.hpp"
#include "hypermatch/numeric.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hypermatch {

namespace {

// One (i,j)-compression of a single edge set. The replacement test is
// against the member's original edge set, which is what keeps the map
// injective (and hence size-preserving).
std::vector<Edge> compress_edges(const KGraph& g, int i, int j) {
    std::vector<Edge> out;
    out.reserve(static_cast<size_t>(g.edge_count()));
    for (const Edge& e : g.edges()) {
        bool has_j = std::binary_search(e.begin(), e.end(), j);
        bool has_i = std::binary_search(e.begin(), e.end(), i);
        if (has_j && !has_i) {
            Edge shifted;
            shifted.reserve(e.size());
            for (int v : e)
                if (v != j) shifted.push_back(v);
            shifted.push_back(i);
            std::sort(shifted.begin(), shifted.end());
            out.push_back(g.has_edge(shifted) ? e : shifted);
        } else {
            out.push_back(e);
        }
    }
    return out;
}

}  // namespace

KGraph shift_ij(const KGraph& g, int i, int j) {
    if (i < 1 || j > g.n() || i >= j) throw input_error("shift_ij requires 1 <= i < j <= n");
    return KGraph::build(g.n(), g.k(), compress_edges(g, i, j));
}

Family shift_ij(const Family& f, int i, int j) {
    if (i < 1 || j > f.n() || i >= j) throw input_error("shift_ij requires 1 <= i < j <= n");
    std::vector<KGraph> members;
    members.reserve(static_cast<size_t>(f.m()));
    for (const KGraph& g : f.members())
        members.push_back(KGraph::build(g.n(), g.k(), compress_edges(g, i, j)));
    return Family::build(std::move(members));
}

namespace {

int vertex_count(const KGraph& g) { return g.n(); }
int vertex_count(const Family& f) { return f.n(); }

// Restarting lexicographic sweep; the per-edge label sum strictly decreases
// on every effective shift, so this terminates.
template <typename T>
T stabilize_impl(const T& input) {
    T cur = input;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int i = 1; i <= vertex_count(cur) - 1 && !changed; ++i)
            for (int j = i + 1; j <= vertex_count(cur) && !changed; ++j) {
                T next = shift_ij(cur, i, j);
                if (!(next == cur)) {
                    cur = std::move(next);
                    changed = true;
                }
            }
    }
    return cur;
}

}  // namespace

KGraph stabilize(const KGraph& g) { return stabilize_impl(g); }
Family stabilize(const Family& f) { return stabilize_impl(f); }

bool rainbow_free_preserved(const Family& f, const Family& fs) {
    if (rainbow(f).has_value()) return true;
    return !rainbow(fs).has_value();
}

namespace {

std::string edge_str(const Edge& e) {
    std::ostringstream os;
    for (size_t i = 0; i < e.size(); ++i) os << (i ? "," : "") << e[i];
    return os.str();
}

std::string rainbow_str(const RainbowMatching& rm) {
    std::ostringstream os;
    for (const auto& [i, e] : rm.pairs) os << " F" << (i + 1) << ":(" << edge_str(e) << ")";
    return os.str();
}

}  // namespace

Family saturate(const Family& f) {
    if (auto rm = rainbow(f))
        throw precondition_error("saturate: family already admits a rainbow matching:" +
                                 rainbow_str(*rm));
    std::vector<Edge> universe = all_k_subsets(f.n(), f.k());
    Family cur = f;
    bool changed = true;
    while (changed) {
        changed = false;
        Family stable = stabilize(cur);
        if (!(stable == cur)) {
            cur = std::move(stable);
            changed = true;
        }
        for (int i = 0; i < cur.m(); ++i) {
            for (const Edge& e : universe) {
                if (cur.member(i).has_edge(e)) continue;
                Family candidate = cur.with_member(i, cur.member(i).with_edge(e));
                if (!rainbow(candidate).has_value()) {
                    cur = std::move(candidate);
                    changed = true;
                }
            }
        }
    }
    return cur;
}

bool is_saturated(const Family& f) {
    if (rainbow(f).has_value()) return false;
    for (int i = 0; i < f.m(); ++i)
        for (const Edge& e : all_k_subsets(f.n(), f.k())) {
            if (f.member(i).has_edge(e)) continue;
            Family candidate = f.with_member(i, f.member(i).with_edge(e));
            if (!rainbow(candidate).has_value()) return false;
        }
    return true;
}

DegreeCapReport degree_cap_check(const Family& f, bool trust_saturated) {
    DegreeCapReport report;
    if (trust_saturated) {
        report.saturated = true;
    } else {
        report.saturation_checked = true;
        report.saturated = is_saturated(f);
    }
    BigInt full = binomial(f.n() - 1, f.k() - 1);
    BigInt cap = full - binomial(f.n() - 1 - f.k() * (f.m() - 1), f.k() - 1);
    for (int i = 0; i < f.m(); ++i)
        for (int v = 1; v <= f.n(); ++v) {
            BigInt d = f.member(i).degree({v});
            if (d <= cap || d == full) continue;
            report.violations.emplace_back(i, v);
        }
    return report;
}

std::optional<std::pair<int, int>> find_full_degree(const Family& f) {
    BigInt full = binomial(f.n() - 1, f.k() - 1);
    for (int i = 0; i < f.m(); ++i)
        for (int v = 1; v <= f.n(); ++v)
            if (BigInt(f.member(i).degree({v})) == full) return std::make_pair(i, v);
    return std::nullopt;
}

std::pair<Family, PeelEvent> peel_step(const Family& f, int dropped_member, int removed_vertex) {
    if (f.m() < 2) throw precondition_error("peel_step requires m >= 2");
    if (dropped_member < 0 || dropped_member >= f.m() || removed_vertex < 1 ||
        removed_vertex > f.n())
        throw input_error("peel_step: index out of range");
    PeelEvent ev;
    ev.removed_vertex = removed_vertex;
    ev.dropped_member = dropped_member;
    ev.before = f;
    std::vector<KGraph> members;
    for (int j = 0; j < f.m(); ++j) {
        if (j == dropped_member) continue;
        auto [g, map] = f.member(j).remove({removed_vertex});
        members.push_back(std::move(g));
        ev.relabel_map = std::move(map);
    }
    return {Family::build(std::move(members)), std::move(ev)};
}

PeelResult peel_full_degree(const Family& f) {
    if (auto rm = rainbow(f))
        throw precondition_error("peel_full_degree: family admits a rainbow matching:" +
                                 rainbow_str(*rm));
    PeelResult result{saturate(f), {}};
    int iteration = 0;
    while (true) {
        auto hit = find_full_degree(result.family);
        if (!hit) break;
        auto [next, ev] = peel_step(result.family, hit->first, hit->second);
        ev.iteration = iteration++;
        result.log.push_back(std::move(ev));
        result.family = saturate(next);
    }
    return result;
}

RainbowMatching peel_lift(const PeelResult& peeled, const RainbowMatching& rm) {
    RainbowMatching cur = rm;
    if (!validate_rainbow(peeled.family, cur))
        throw input_error("peel_lift: matching invalid for the peeled family");
    for (auto it = peeled.log.rbegin(); it != peeled.log.rend(); ++it) {
        const PeelEvent& ev = *it;
        const Family& host = *ev.before;
        RainbowMatching lifted;
        VertexBitset used(host.n());
        for (const auto& [i, e] : cur.pairs) {
            Edge mapped;
            mapped.reserve(e.size());
            for (int v : e) mapped.push_back(ev.relabel_map[static_cast<size_t>(v - 1)]);
            std::sort(mapped.begin(), mapped.end());
            used |= make_mask(host.n(), mapped);
            int host_index = i >= ev.dropped_member ? i + 1 : i;
            lifted.pairs.emplace_back(host_index, std::move(mapped));
        }
        // The dropped member has full degree at the removed vertex, so any
        // k-1 free vertices complete an edge through it.
        Edge extra{ev.removed_vertex};
        for (int v = 1; v <= host.n() && static_cast<int>(extra.size()) < host.k(); ++v)
            if (v != ev.removed_vertex && !used.test(v)) extra.push_back(v);
        if (static_cast<int>(extra.size()) != host.k())
            throw std::logic_error("peel_lift: not enough free vertices");
        std::sort(extra.begin(), extra.end());
        lifted.pairs.emplace_back(ev.dropped_member, std::move(extra));
        std::sort(lifted.pairs.begin(), lifted.pairs.end());
        if (!validate_rainbow(host, lifted)) throw std::logic_error("peel_lift: lift failed to validate");
        cur = std::move(lifted);
    }
    return cur;
}

}  // namespace hypermatch

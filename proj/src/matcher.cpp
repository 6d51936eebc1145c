#include "hypermatch/matcher.hpp"

#include "hypermatch/errors.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace hypermatch {

namespace {

// Shared search state for the maximum-matching branch and bound. Branches on
// the lowest-index vertex not yet covered or discarded: either some incident
// edge (lexicographic order) joins the matching, or the vertex is left
// uncovered for good. Upper bound: |M| + floor(remaining usable vertices / k).
class MatchingSearch {
public:
    MatchingSearch(const KGraph& h, int target)
        : h_(h), target_(target), blocked_(h.n()), free_count_(h.n()) {
        incident_.assign(static_cast<size_t>(h.n()) + 1, {});
        for (int ei = 0; ei < h.edge_count(); ++ei)
            for (int v : h.edge(ei)) incident_[static_cast<size_t>(v)].push_back(ei);
        greedy_seed();
    }

    int best() const { return best_; }
    const std::vector<int>& best_edges() const { return best_edges_; }

    void run() {
        cur_edges_.clear();
        recurse(1);
    }

private:
    // A greedy pass gives the bound-closure something to prune against.
    void greedy_seed() {
        VertexBitset used(h_.n());
        std::vector<int> picked;
        for (int ei = 0; ei < h_.edge_count(); ++ei)
            if (!used.intersects(h_.edge_mask(ei))) {
                used |= h_.edge_mask(ei);
                picked.push_back(ei);
            }
        best_ = static_cast<int>(picked.size());
        best_edges_ = std::move(picked);
    }

    bool done() const { return target_ >= 0 && best_ >= target_; }

    void recurse(int from) {
        if (done()) return;
        int v = from;
        while (v <= h_.n() && blocked_.test(v)) ++v;
        if (v > h_.n()) {
            commit();
            return;
        }
        if (static_cast<int>(cur_edges_.size()) + free_count_ / h_.k() <= best_) return;

        for (int ei : incident_[static_cast<size_t>(v)]) {
            const VertexBitset& em = h_.edge_mask(ei);
            if (blocked_.intersects(em)) continue;
            blocked_ |= em;
            free_count_ -= h_.k();
            cur_edges_.push_back(ei);
            recurse(v + 1);
            cur_edges_.pop_back();
            free_count_ += h_.k();
            blocked_ -= em;
            if (done()) return;
        }
        // leave v uncovered: no later edge may use it
        blocked_.set(v);
        --free_count_;
        recurse(v + 1);
        ++free_count_;
        blocked_.reset(v);
    }

    void commit() {
        if (static_cast<int>(cur_edges_.size()) > best_) {
            best_ = static_cast<int>(cur_edges_.size());
            best_edges_ = cur_edges_;
        }
    }

    const KGraph& h_;
    int target_;
    VertexBitset blocked_;  // covered by the matching or discarded
    int free_count_;
    std::vector<std::vector<int>> incident_;
    std::vector<int> cur_edges_;
    int best_ = 0;
    std::vector<int> best_edges_;
};

Matching edges_by_index(const KGraph& h, const std::vector<int>& idx) {
    Matching m;
    m.edges.reserve(idx.size());
    for (int ei : idx) m.edges.push_back(h.edge(ei));
    return m;
}

}  // namespace

int nu(const KGraph& h) {
    if (h.edge_count() == 0) return 0;
    MatchingSearch s(h, -1);
    s.run();
    return s.best();
}

bool nu_at_least(const KGraph& h, int target) {
    if (target <= 0) return true;
    if (h.edge_count() == 0) return false;
    MatchingSearch s(h, target);
    s.run();
    return s.best() >= target;
}

Matching max_matching(const KGraph& h) {
    if (h.edge_count() == 0) return {};
    MatchingSearch s(h, -1);
    s.run();
    Matching m = edges_by_index(h, s.best_edges());
    if (!validate_matching(h, m)) throw std::logic_error("max_matching produced an invalid witness");
    return m;
}

bool has_perfect_matching(const KGraph& h) {
    return h.n() % h.k() == 0 && nu_at_least(h, h.n() / h.k());
}

std::optional<Matching> perfect_matching(const KGraph& h) {
    if (h.n() % h.k() != 0 || h.edge_count() == 0) return std::nullopt;
    MatchingSearch s(h, h.n() / h.k());
    s.run();
    if (s.best() < h.n() / h.k()) return std::nullopt;
    Matching m = edges_by_index(h, s.best_edges());
    if (!validate_matching(h, m)) throw std::logic_error("perfect_matching produced an invalid witness");
    return m;
}

namespace {

// Rainbow search: members ordered by ascending size (small families fail
// fastest), branch member by member, prune when the remaining members cannot
// fit into the free vertices.
class RainbowSearch {
public:
    explicit RainbowSearch(const Family& f) : f_(f), used_(f.n()) {
        order_.resize(static_cast<size_t>(f.m()));
        std::iota(order_.begin(), order_.end(), 0);
        std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) {
            return f.member(a).edge_count() < f.member(b).edge_count();
        });
        chosen_.assign(static_cast<size_t>(f.m()), -1);
    }

    std::optional<RainbowMatching> run() {
        if (!recurse(0)) return std::nullopt;
        RainbowMatching rm;
        for (int pos = 0; pos < f_.m(); ++pos) {
            int member = order_[static_cast<size_t>(pos)];
            rm.pairs.emplace_back(member, f_.member(member).edge(chosen_[static_cast<size_t>(pos)]));
        }
        std::sort(rm.pairs.begin(), rm.pairs.end());
        return rm;
    }

private:
    bool recurse(int pos) {
        if (pos == f_.m()) return true;
        int remaining = f_.m() - pos;
        if (remaining > (f_.n() - used_.count()) / f_.k()) return false;
        const KGraph& g = f_.member(order_[static_cast<size_t>(pos)]);
        for (int ei = 0; ei < g.edge_count(); ++ei) {
            if (used_.intersects(g.edge_mask(ei))) continue;
            used_ |= g.edge_mask(ei);
            chosen_[static_cast<size_t>(pos)] = ei;
            if (recurse(pos + 1)) return true;
            used_ -= g.edge_mask(ei);
        }
        return false;
    }

    const Family& f_;
    VertexBitset used_;
    std::vector<int> order_;
    std::vector<int> chosen_;
};

}  // namespace

std::optional<RainbowMatching> rainbow(const Family& f) {
    RainbowSearch s(f);
    auto rm = s.run();
    if (rm && !validate_rainbow(f, *rm)) throw std::logic_error("rainbow produced an invalid witness");
    return rm;
}

AuxGraph reduce_H(const Family& f) {
    std::vector<Edge> edges;
    for (int i = 1; i <= f.m(); ++i)
        for (const Edge& e : f.member(i - 1).edges()) {
            Edge ae = e;
            ae.push_back(f.n() + i);
            edges.push_back(std::move(ae));
        }
    return make_aux(f.n(), f.k(), f.m(), 0, std::move(edges));
}

AuxGraph reduce_Hstar(const Family& f) {
    if (f.n() < f.k() * f.m())
        throw precondition_error("reduce_Hstar requires n >= km");
    int r = f.n() / f.k() - f.m();
    std::vector<Edge> edges;
    for (int i = 1; i <= f.m(); ++i)
        for (const Edge& e : f.member(i - 1).edges()) {
            Edge ae = e;
            ae.push_back(f.n() + i);
            edges.push_back(std::move(ae));
        }
    std::vector<Edge> base = all_k_subsets(f.n(), f.k());
    for (int j = 1; j <= r; ++j)
        for (const Edge& e : base) {
            Edge ae = e;
            ae.push_back(f.n() + f.m() + j);
            edges.push_back(std::move(ae));
        }
    return make_aux(f.n(), f.k(), f.m(), r, std::move(edges));
}

bool aux_matching_equiv(const Family& f) {
    bool has_rainbow = rainbow(f).has_value();
    AuxGraph h = reduce_H(f);
    bool h_side = nu_at_least(h.graph, f.m());
    AuxGraph hs = reduce_Hstar(f);
    bool hs_side = nu_at_least(hs.graph, f.m() + hs.r);
    return has_rainbow == h_side && h_side == hs_side;
}

}  // namespace hypermatch

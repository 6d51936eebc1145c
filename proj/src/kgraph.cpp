#include "hypermatch/kgraph.hpp"

#include "hypermatch/errors.hpp"

#include <algorithm>
#include <sstream>
#include <string>

namespace hypermatch {

namespace {

std::string edge_str(const Edge& e) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < e.size(); ++i) os << (i ? "," : "") << e[i];
    os << ")";
    return os.str();
}

}  // namespace

KGraph KGraph::build(int n, int k, std::vector<Edge> edges) {
    if (k < 1 || n < k) throw input_error("KGraph requires 1 <= k <= n");
    for (Edge& e : edges) {
        if (static_cast<int>(e.size()) != k)
            throw input_error("edge " + edge_str(e) + " does not have arity " + std::to_string(k));
        std::sort(e.begin(), e.end());
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] < 1 || e[i] > n)
                throw input_error("edge " + edge_str(e) + ": vertex " + std::to_string(e[i]) +
                                  " out of range [1," + std::to_string(n) + "]");
            if (i > 0 && e[i] == e[i - 1])
                throw input_error("edge " + edge_str(e) + ": repeated vertex " + std::to_string(e[i]));
        }
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    std::vector<VertexBitset> masks;
    masks.reserve(edges.size());
    for (const Edge& e : edges) masks.push_back(make_mask(n, e));
    return KGraph(n, k, std::move(edges), std::move(masks));
}

bool KGraph::has_edge(const Edge& e) const {
    return std::binary_search(edges_.begin(), edges_.end(), e);
}

int KGraph::degree(const VertexSet& t) const {
    if (static_cast<int>(t.size()) > k_)
        throw input_error("degree: |T| = " + std::to_string(t.size()) + " exceeds k = " +
                          std::to_string(k_));
    for (int v : t)
        if (v < 1 || v > n_) throw input_error("degree: vertex " + std::to_string(v) + " out of range");
    VertexBitset tm(n_);
    for (int v : t) tm.set(v);
    int d = 0;
    for (const VertexBitset& m : masks_)
        if (m.contains(tm)) ++d;
    return d;
}

int KGraph::max_degree() const {
    std::vector<int> deg(static_cast<size_t>(n_) + 1, 0);
    for (const Edge& e : edges_)
        for (int v : e) ++deg[static_cast<size_t>(v)];
    int best = 0;
    for (int v = 1; v <= n_; ++v) best = std::max(best, deg[static_cast<size_t>(v)]);
    return best;
}

int KGraph::max_codegree() const {
    if (k_ < 2) return 0;
    std::vector<int> codeg(static_cast<size_t>(n_ + 1) * static_cast<size_t>(n_ + 1), 0);
    int best = 0;
    for (const Edge& e : edges_)
        for (size_t i = 0; i < e.size(); ++i)
            for (size_t j = i + 1; j < e.size(); ++j) {
                int& c = codeg[static_cast<size_t>(e[i]) * static_cast<size_t>(n_ + 1) +
                               static_cast<size_t>(e[j])];
                best = std::max(best, ++c);
            }
    return best;
}

std::pair<KGraph, std::vector<int>> KGraph::induced(const VertexSet& s) const {
    std::vector<int> map(s);  // map[new-1] = old
    std::sort(map.begin(), map.end());
    map.erase(std::unique(map.begin(), map.end()), map.end());
    for (int v : map)
        if (v < 1 || v > n_) throw input_error("induced: vertex " + std::to_string(v) + " out of range");
    std::vector<int> relabel(static_cast<size_t>(n_) + 1, 0);  // old -> new, 0 = dropped
    for (size_t i = 0; i < map.size(); ++i) relabel[static_cast<size_t>(map[i])] = static_cast<int>(i) + 1;

    std::vector<Edge> kept;
    for (const Edge& e : edges_) {
        Edge ne;
        ne.reserve(e.size());
        for (int v : e) {
            if (relabel[static_cast<size_t>(v)] == 0) break;
            ne.push_back(relabel[static_cast<size_t>(v)]);
        }
        if (ne.size() == e.size()) kept.push_back(std::move(ne));
    }
    int nn = static_cast<int>(map.size());
    if (nn < k_) kept.clear();  // too few vertices to host any k-edge
    // An empty vertex set still needs a representable graph: use n = 0 only
    // through the degenerate build below.
    if (nn == 0) return {KGraph(0, k_, {}, {}), map};
    if (nn < k_) return {KGraph(nn, k_, {}, {}), map};
    return {KGraph::build(nn, k_, std::move(kept)), map};
}

std::pair<KGraph, std::vector<int>> KGraph::remove(const VertexSet& s) const {
    VertexBitset drop(n_);
    for (int v : s) {
        if (v < 1 || v > n_) throw input_error("remove: vertex " + std::to_string(v) + " out of range");
        drop.set(v);
    }
    VertexSet keep;
    for (int v = 1; v <= n_; ++v)
        if (!drop.test(v)) keep.push_back(v);
    return induced(keep);
}

bool KGraph::is_stable() const {
    for (const Edge& f : edges_)
        for (const Edge& p : immediate_predecessors(f))
            if (!has_edge(p)) return false;
    return true;
}

KGraph KGraph::with_edge(const Edge& e) const {
    std::vector<Edge> es = edges_;
    es.push_back(e);
    return build(n_, k_, std::move(es));
}

KGraph KGraph::without_edge(const Edge& e) const {
    std::vector<Edge> es;
    es.reserve(edges_.size());
    for (const Edge& f : edges_)
        if (f != e) es.push_back(f);
    return build(n_, k_, std::move(es));
}

bool dominance_leq(const Edge& e, const Edge& f) {
    if (e.size() != f.size()) throw input_error("dominance_leq: arity mismatch");
    for (size_t i = 0; i < e.size(); ++i)
        if (e[i] > f[i]) return false;
    return true;
}

std::vector<Edge> immediate_predecessors(const Edge& f) {
    std::vector<Edge> preds;
    for (size_t i = 0; i < f.size(); ++i) {
        int lo = (i == 0) ? 1 : f[i - 1] + 1;
        if (f[i] - 1 >= lo) {
            Edge p = f;
            --p[i];
            preds.push_back(std::move(p));
        }
    }
    return preds;
}

std::vector<Edge> immediate_successors(const Edge& f, int n) {
    std::vector<Edge> succs;
    for (size_t i = 0; i < f.size(); ++i) {
        int hi = (i + 1 == f.size()) ? n : f[i + 1] - 1;
        if (f[i] + 1 <= hi) {
            Edge s = f;
            ++s[i];
            succs.push_back(std::move(s));
        }
    }
    return succs;
}

VertexBitset make_mask(int n, const Edge& e) {
    VertexBitset m(n);
    for (int v : e) m.set(v);
    return m;
}

bool validate_matching(const KGraph& h, const Matching& m) {
    VertexBitset used(h.n());
    for (const Edge& e : m.edges) {
        if (!h.has_edge(e)) return false;
        VertexBitset em = make_mask(h.n(), e);
        if (used.intersects(em)) return false;
        used |= em;
    }
    return true;
}

std::vector<Edge> all_k_subsets(int n, int k) {
    std::vector<Edge> out;
    if (k > n || k < 0) return out;
    Edge cur(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) cur[static_cast<size_t>(i)] = i + 1;
    while (true) {
        out.push_back(cur);
        int i = k - 1;
        while (i >= 0 && cur[static_cast<size_t>(i)] == n - (k - 1 - i)) --i;
        if (i < 0) break;
        ++cur[static_cast<size_t>(i)];
        for (int j = i + 1; j < k; ++j) cur[static_cast<size_t>(j)] = cur[static_cast<size_t>(j - 1)] + 1;
    }
    return out;
}

}  // namespace hypermatch

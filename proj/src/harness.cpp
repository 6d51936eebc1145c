#include "hypermatch/harness.hpp"

#include "hypermatch/errors.hpp"
#include "hypermatch/extremal.hpp"
#include "hypermatch/matcher.hpp"
#include "hypermatch/shift.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <set>
#include <stdexcept>
#include <thread>

namespace hypermatch {

void TrialConfig::validate() const {
    if (n < 1 || m < 1 || k < 1 || n < k * m)
        throw precondition_error("TrialConfig requires n >= km with positive n, m, k");
    if (trials < 0) throw precondition_error("TrialConfig: negative trial count");
    if (!(Rat(0) < gamma_prime && gamma_prime < gamma))
        throw precondition_error("TrialConfig requires 0 < gamma' < gamma");
    if (!(Rat(0) < epsilon && epsilon < c && c < Rat(1)))
        throw precondition_error("TrialConfig requires 0 < epsilon < c < 1");
}

int worker_count() {
    if (const char* env = std::getenv("HYPERMATCH_THREADS")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

namespace {

/// Runs fn(0..count-1) on worker_count() threads. Work is pure per index,
/// so scheduling cannot affect results.
template <typename Fn>
void parallel_for(long long count, Fn&& fn) {
    int workers = std::min<long long>(worker_count(), count);
    if (workers <= 1) {
        for (long long i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<long long> next{0};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(workers));
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            while (true) {
                long long i = next.fetch_add(1);
                if (i >= count) return;
                fn(i);
            }
        });
    for (auto& t : pool) t.join();
}

int to_int_checked(const BigInt& x, const char* what) {
    if (x < 0 || x > 1000000) throw precondition_error(std::string(what) + " out of desk-scale range");
    return static_cast<int>(x);
}

}  // namespace

KGraph sample_stable_kgraph(Rng& rng, int n, int k, int edge_count) {
    BigInt cap = binomial(n, k);
    if (edge_count < 0 || BigInt(edge_count) > cap)
        throw precondition_error("sample_stable_kgraph: edge count exceeds C(n,k)");
    std::set<Edge> edges;
    auto close_downward = [&](const Edge& seed) {
        std::vector<Edge> work{seed};
        while (!work.empty()) {
            Edge e = std::move(work.back());
            work.pop_back();
            if (!edges.insert(e).second) continue;
            for (Edge& p : immediate_predecessors(e)) work.push_back(std::move(p));
        }
    };
    for (int i = 0; i < edge_count; ++i) close_downward(random_k_subset(rng, n, k));
    while (static_cast<int>(edges.size()) < edge_count) {
        Edge e = random_k_subset(rng, n, k);
        if (!edges.count(e)) close_downward(e);
    }
    while (static_cast<int>(edges.size()) > edge_count) {
        std::vector<Edge> maximal;
        for (const Edge& e : edges) {
            bool is_max = true;
            for (const Edge& s : immediate_successors(e, n))
                if (edges.count(s)) {
                    is_max = false;
                    break;
                }
            if (is_max) maximal.push_back(e);
        }
        edges.erase(maximal[uniform_below(rng, maximal.size())]);
    }
    return KGraph::build(n, k, {edges.begin(), edges.end()});
}

namespace {

// Deterministic near-extremal perturbations of one branch: every single
// absent edge alone, and (when the branch sits below f) windows of
// t = f - |X| + 1 absent edges so each perturbed graph crosses the
// threshold. check() returns false on a violation.
template <typename Check>
bool sweep_branch(const KGraph& base, const BigInt& f, const Check& check,
                  long long& cases, KGraph* failure) {
    std::vector<Edge> absent;
    for (Edge& e : all_k_subsets(base.n(), base.k()))
        if (!base.has_edge(e)) absent.push_back(std::move(e));
    for (const Edge& e : absent) {
        KGraph g = base.with_edge(e);
        ++cases;
        if (!check(g)) {
            if (failure) *failure = g;
            return false;
        }
    }
    BigInt t_big = f - base.edge_count() + 1;
    if (t_big > 1 && t_big <= BigInt(absent.size())) {
        int t = to_int_checked(t_big, "perturbation window");
        std::vector<size_t> starts;
        for (size_t s = 0; s + static_cast<size_t>(t) <= absent.size(); s += static_cast<size_t>(t))
            starts.push_back(s);
        if (absent.size() % static_cast<size_t>(t) != 0)
            starts.push_back(absent.size() - static_cast<size_t>(t));
        for (size_t s : starts) {
            KGraph g = base;
            for (int j = 0; j < t; ++j) g = g.with_edge(absent[s + static_cast<size_t>(j)]);
            ++cases;
            if (!check(g)) {
                if (failure) *failure = g;
                return false;
            }
        }
    }
    return true;
}

struct TrialOutcome {
    bool violated = false;
    std::optional<KGraph> graph;
    std::optional<Family> family;
};

}  // namespace

Verdict verify_erdos(const TrialConfig& cfg) {
    cfg.validate();
    auto t0 = std::chrono::steady_clock::now();
    Verdict verdict;
    BigInt f = f_bound(cfg.n, cfg.m, cfg.k);
    auto nu_ok = [&](const KGraph& g) { return nu_at_least(g, cfg.m); };

    KGraph failure;
    bool ok = sweep_branch(make_S(cfg.n, cfg.m, cfg.k), f, nu_ok, verdict.sweep_cases, &failure) &&
              sweep_branch(make_D(cfg.n, cfg.m, cfg.k), f, nu_ok, verdict.sweep_cases, &failure);
    if (ok && cfg.trials > 0) {
        int target = to_int_checked(f + 1, "sample size");
        std::vector<TrialOutcome> outcomes(static_cast<size_t>(cfg.trials));
        parallel_for(cfg.trials, [&](long long i) {
            Rng rng(mix_seed(cfg.seed, static_cast<uint64_t>(i)));
            KGraph h = sample_stable_kgraph(rng, cfg.n, cfg.k, target);
            if (!nu_at_least(h, cfg.m)) outcomes[static_cast<size_t>(i)] = {true, h, std::nullopt};
        });
        verdict.random_trials = cfg.trials;
        for (const TrialOutcome& o : outcomes)
            if (o.violated) {
                ok = false;
                failure = *o.graph;
                break;
            }
    }
    if (ok) {
        verdict.status = VerdictStatus::kConfirmed;
    } else {
        verdict.status = VerdictStatus::kCounterexample;
        CounterexampleWitness w;
        w.graph = failure;
        w.description = "stable 3-graph with e(H) > f(n,m,k) and nu(H) < m";
        w.revalidated = BigInt(failure.edge_count()) > f && nu(failure) < cfg.m;
        verdict.witness = std::move(w);
    }
    verdict.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return verdict;
}

namespace {

Family m_fold(const KGraph& g, int m) {
    return Family::build(std::vector<KGraph>(static_cast<size_t>(m), g));
}

}  // namespace

Verdict verify_rainbow(const TrialConfig& cfg) {
    cfg.validate();
    auto t0 = std::chrono::steady_clock::now();
    Verdict verdict;
    BigInt f = f_bound(cfg.n, cfg.m, cfg.k);
    auto rainbow_ok = [&](const KGraph& g) { return rainbow(m_fold(g, cfg.m)).has_value(); };

    KGraph graph_failure;
    std::optional<Family> failure;
    bool ok =
        sweep_branch(make_S(cfg.n, cfg.m, cfg.k), f, rainbow_ok, verdict.sweep_cases, &graph_failure) &&
        sweep_branch(make_D(cfg.n, cfg.m, cfg.k), f, rainbow_ok, verdict.sweep_cases, &graph_failure);
    if (!ok) failure = m_fold(graph_failure, cfg.m);

    if (ok && cfg.trials > 0) {
        int target = to_int_checked(f + 1, "sample size");
        std::vector<TrialOutcome> outcomes(static_cast<size_t>(cfg.trials));
        parallel_for(cfg.trials, [&](long long i) {
            Rng rng(mix_seed(cfg.seed, static_cast<uint64_t>(i)));
            std::vector<KGraph> members;
            members.reserve(static_cast<size_t>(cfg.m));
            for (int j = 0; j < cfg.m; ++j)
                members.push_back(sample_stable_kgraph(rng, cfg.n, cfg.k, target));
            Family fam = Family::build(std::move(members));
            // members are stable by construction: the family equals its own
            // stabilization, so the exhaustive search on the original is the
            // whole story
            if (!rainbow(fam).has_value()) outcomes[static_cast<size_t>(i)] = {true, std::nullopt, fam};
        });
        verdict.random_trials = cfg.trials;
        for (TrialOutcome& o : outcomes)
            if (o.violated) {
                ok = false;
                failure = std::move(o.family);
                break;
            }
    }
    if (ok) {
        verdict.status = VerdictStatus::kConfirmed;
    } else {
        verdict.status = VerdictStatus::kCounterexample;
        CounterexampleWitness w;
        w.family = failure;
        w.description = "family with |F_i| > f(n,m,k) and no rainbow matching";
        bool premises = true;
        for (const KGraph& g : failure->members())
            premises = premises && BigInt(g.edge_count()) > f;
        w.revalidated = premises && !rainbow(*failure).has_value();
        verdict.witness = std::move(w);
    }
    verdict.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return verdict;
}

Matching build_absorbing(const Family& f, int t) {
    if (t < 0) throw precondition_error("build_absorbing: t must be nonnegative");
    if (t == 0) return {};
    int n = f.n(), k = f.k(), m = f.m();
    if (n < k * m) throw precondition_error("build_absorbing requires n >= km");
    int r = n / k - m;
    if (t > r) throw precondition_error("build_absorbing: t exceeds r = floor(n/k) - m");
    // |F_i| > f(n,m,k) is the asymptotic route to the clique property below;
    // the construction itself only needs stability plus the clique check, so
    // the size premise is not enforced here.
    for (int i = 0; i < m; ++i)
        if (!f.member(i).is_stable())
            throw precondition_error("build_absorbing: member " + std::to_string(i + 1) +
                                     " is not stable");
    if (k * t > n) throw precondition_error("build_absorbing: kt exceeds n");
    for (int i = 0; i < m; ++i)
        for (const Edge& e : all_k_subsets(k * t, k))
            if (!f.member(i).has_edge(e)) {
                std::string es;
                for (size_t j = 0; j < e.size(); ++j) es += (j ? "," : "") + std::to_string(e[j]);
                throw precondition_error("build_absorbing: member " + std::to_string(i + 1) +
                                         " misses clique edge {" + es + "} inside [kt]");
            }
    Matching mt;
    for (int j = 1; j <= t; ++j) {
        Edge e;
        for (int v = k * (j - 1) + 1; v <= k * j; ++v) e.push_back(v);
        e.push_back(n + m + j);  // u_j
        mt.edges.push_back(std::move(e));
    }
    AuxGraph hstar = reduce_Hstar(f);
    if (!validate_matching(hstar.graph, mt))
        throw std::logic_error("build_absorbing produced an invalid matching");
    return mt;
}

Matching absorb(const Family& f, const Matching& m_abs, int t, const VertexSet& s) {
    int n = f.n(), k = f.k(), m = f.m();
    AuxGraph hstar = reduce_Hstar(f);
    VertexBitset vm(hstar.total_vertices());
    for (const Edge& e : m_abs.edges)
        for (int v : e) vm.set(v);

    std::vector<int> s_base, s_labels;
    for (int v : s) {
        if (v < 1 || v > hstar.total_vertices()) throw input_error("absorb: S vertex out of range");
        if (vm.test(v)) throw precondition_error("absorb: S intersects V(M)");
        (v <= n ? s_base : s_labels).push_back(v);
    }
    if (static_cast<int>(s_base.size()) != k * static_cast<int>(s_labels.size()))
        throw precondition_error("absorb: S violates k|S ∩ labels| = |S ∩ base|");
    int tp = static_cast<int>(s_labels.size());
    if (tp >= t && tp > 0) throw precondition_error("absorb: |S ∩ labels| must be < t");
    if (s.empty()) return m_abs;

    std::sort(s_base.begin(), s_base.end());
    std::sort(s_labels.begin(), s_labels.end());

    Matching out;
    // M_1: each label of S gets a block of the first kt' base vertices of
    // V(M); v_i edges exist because F_i is complete on [kt].
    for (int a = 0; a < tp; ++a) {
        Edge e;
        for (int v = k * a + 1; v <= k * (a + 1); ++v) e.push_back(v);
        e.push_back(s_labels[static_cast<size_t>(a)]);
        std::sort(e.begin(), e.end());
        if (!hstar.graph.has_edge(e)) {
            throw precondition_error("absorb: required edge through label " +
                                     hstar.vertex_name(s_labels[static_cast<size_t>(a)]) +
                                     " is missing");
        }
        out.edges.push_back(std::move(e));
    }
    // M_2: the u-labels of M re-cover the leftover base vertices.
    std::vector<int> leftover;
    for (int v = k * tp + 1; v <= k * t; ++v) leftover.push_back(v);
    leftover.insert(leftover.end(), s_base.begin(), s_base.end());
    std::sort(leftover.begin(), leftover.end());
    if (static_cast<int>(leftover.size()) != k * t)
        throw std::logic_error("absorb: leftover base count mismatch");
    for (int j = 0; j < t; ++j) {
        Edge e(leftover.begin() + static_cast<long>(k) * j, leftover.begin() + static_cast<long>(k) * (j + 1));
        e.push_back(n + m + j + 1);  // u_{j+1}
        std::sort(e.begin(), e.end());
        out.edges.push_back(std::move(e));
    }
    std::sort(out.edges.begin(), out.edges.end());

    // validated as a perfect matching of H*[V(M) ∪ S], never trusted
    if (!validate_matching(hstar.graph, out)) throw std::logic_error("absorb: invalid matching");
    VertexBitset covered(hstar.total_vertices());
    int covered_count = 0;
    for (const Edge& e : out.edges)
        for (int v : e) {
            covered.set(v);
            ++covered_count;
        }
    VertexBitset expected = vm;
    for (int v : s) expected.set(v);
    if (!(covered == expected) || covered_count != expected.count())
        throw std::logic_error("absorb: output does not cover exactly V(M) ∪ S");
    return out;
}

NearDOutcome near_D_rainbow(const Family& f, const Rat& eps) {
    if (f.k() != 3) throw input_error("near_D_rainbow requires k = 3");
    if (eps <= 0) throw input_error("near_D_rainbow requires eps > 0");
    int n = f.n(), m = f.m();
    NearDOutcome outcome;

    // b = smallest integer >= 6 eps^{1/6} n, exactly: b^6 >= 6^6 n^6 eps.
    Rat threshold = eps * ipow(BigInt(6), 6) * ipow(BigInt(n), 6);
    int b = 0;
    while (Rat(ipow(BigInt(b), 6)) < threshold && b <= m) ++b;
    b = std::min(b, m);
    outcome.b = b;

    // members not sqrt(eps)-close to D take the low slots
    KGraph d = make_D(n, m, 3);
    std::vector<int> far, close;
    for (int i = 0; i < m; ++i) {
        BigInt missing = 0;
        for (const Edge& e : d.edges())
            if (!f.member(i).has_edge(e)) ++missing;
        bool is_far = Rat(missing * missing) > eps * ipow(BigInt(n), 6);
        (is_far ? far : close).push_back(i);
    }
    std::vector<int> slot_member = far;
    slot_member.insert(slot_member.end(), close.begin(), close.end());

    RainbowMatching rm;
    for (int slot = 1; slot <= m; ++slot) {
        Edge pattern{2 * slot - 1, 2 * slot, 3 * m - slot + 1};
        std::sort(pattern.begin(), pattern.end());
        int member = slot_member[static_cast<size_t>(slot - 1)];
        if (!f.member(member).has_edge(pattern)) {
            outcome.failed_member = member;
            outcome.missing_edge = pattern;
            return outcome;
        }
        rm.pairs.emplace_back(member, std::move(pattern));
    }
    std::sort(rm.pairs.begin(), rm.pairs.end());
    if (!validate_rainbow(f, rm)) throw std::logic_error("near_D_rainbow: pattern matching invalid");
    outcome.matching = std::move(rm);
    return outcome;
}

ExtremalClass classify_near_extremal(const KGraph& h, int m, const Rat& eps) {
    if (h.k() != 3) throw input_error("classify_near_extremal requires k = 3");
    if (h.n() < 3 * m) throw precondition_error("classify_near_extremal requires n >= 3m");
    bool s_close = closeness(make_S(h.n(), m, 3), h) <= eps;
    bool d_close = closeness(make_D(h.n(), m, 3), h) <= eps;
    if (s_close && d_close) return ExtremalClass::kBoth;
    if (s_close) return ExtremalClass::kSClose;
    if (d_close) return ExtremalClass::kDClose;
    return ExtremalClass::kNeither;
}

namespace {

// Deletes d dominance-maximal edges uniformly at random; the result stays
// stable.
KGraph delete_maximal_edges(Rng& rng, const KGraph& g, int d) {
    std::set<Edge> edges(g.edges().begin(), g.edges().end());
    for (int step = 0; step < d; ++step) {
        std::vector<Edge> maximal;
        for (const Edge& e : edges) {
            bool is_max = true;
            for (const Edge& s : immediate_successors(e, g.n()))
                if (edges.count(s)) {
                    is_max = false;
                    break;
                }
            if (is_max) maximal.push_back(e);
        }
        edges.erase(maximal[uniform_below(rng, maximal.size())]);
    }
    return KGraph::build(g.n(), g.k(), {edges.begin(), edges.end()});
}

}  // namespace

StabilityProbeReport stability_probe(int n, int m, const Rat& eps, long long trials,
                                     uint64_t seed) {
    if (m < 1 || n < 3 * m) throw precondition_error("stability_probe requires n >= 3m");
    StabilityProbeReport report;
    Rat slack = eps * eps * eps * eps * ipow(BigInt(n), 3);
    BigInt f = f_formula(n, m, 3);
    report.window_vacuous = Rat(f) <= slack;

    auto classify_count = [&](const KGraph& h) {
        switch (classify_near_extremal(h, m, eps)) {
            case ExtremalClass::kSClose: ++report.s_close; break;
            case ExtremalClass::kDClose: ++report.d_close; break;
            case ExtremalClass::kBoth: ++report.both; break;
            case ExtremalClass::kNeither:
                ++report.neither;
                report.neither_witnesses.push_back(h);
                break;
        }
    };

    struct Source {
        KGraph base;
        long long count;
        long long* counter;
    };
    std::vector<Source> sources{{make_S(n, m, 3), (trials + 1) / 2, &report.s_source_trials},
                                {make_D(n, m, 3), trials / 2, &report.d_source_trials}};
    uint64_t stream = 0;
    for (Source& src : sources) {
        // deletions keep e(H) > f - eps^4 n^3: d < |base| - f + eps^4 n^3
        Rat bound = Rat(BigInt(src.base.edge_count()) - f) + slack;
        long long d_max = -1;
        // largest integer strictly below `bound`, capped by the edge count
        if (bound > 0) {
            BigInt fl = numerator(bound) / denominator(bound);  // floor for positive bound
            d_max = std::min<long long>(static_cast<long long>(fl),
                                        src.base.edge_count());
            if (Rat(fl) == bound) --d_max;
        }
        if (d_max < 0) continue;  // source cannot reach the window
        for (long long i = 0; i < src.count; ++i) {
            Rng rng(mix_seed(seed, stream++));
            int d = static_cast<int>(uniform_below(rng, static_cast<uint64_t>(d_max) + 1));
            classify_count(delete_maximal_edges(rng, src.base, d));
            ++*src.counter;
        }
    }
    return report;
}

BalancedSample sample_balanced(const AuxGraph& aux, const Rat& p, uint64_t seed) {
    if (!(Rat(0) < p && p < Rat(1))) throw precondition_error("sample_balanced requires 0 < p < 1");
    Rng rng(seed);
    BalancedSample sample;
    std::vector<int> base, labels;
    for (int v = 1; v <= aux.total_vertices(); ++v)
        if (bernoulli(rng, p)) {
            sample.r.push_back(v);
            (v <= aux.base_n ? base : labels).push_back(v);
        }
    int k = aux.k;
    auto delete_random = [&](std::vector<int>& pool, int count) {
        for (int i = 0; i < count; ++i)
            pool.erase(pool.begin() + static_cast<long>(uniform_below(rng, pool.size())));
    };
    int nb = static_cast<int>(base.size());
    int nl = static_cast<int>(labels.size());
    if (nb >= k * nl) {
        delete_random(base, nb - k * nl);
    } else {
        delete_random(base, nb % k);
        int ell = static_cast<int>(base.size());
        delete_random(labels, nl - ell / k);
    }
    sample.r_prime = base;
    sample.r_prime.insert(sample.r_prime.end(), labels.begin(), labels.end());
    std::sort(sample.r_prime.begin(), sample.r_prime.end());
    return sample;
}

}  // namespace hypermatch

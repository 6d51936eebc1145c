#ifndef HYPERMATCH_HARNESS_HPP
#define HYPERMATCH_HARNESS_HPP

#include "hypermatch/aux_graph.hpp"
#include "hypermatch/family.hpp"
#include "hypermatch/kgraph.hpp"
#include "hypermatch/numeric.hpp"
#include "hypermatch/rng.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hypermatch {

/// Knobs for verification sweeps. The closeness/absorption constants have no
/// canonical numeric values; the defaults here are working choices, nothing
/// more.
struct TrialConfig {
    int n = 9;
    int m = 3;
    int k = 3;
    long long trials = 0;
    uint64_t seed = 1;
    Rat epsilon{1, 100};
    Rat c{1, 10};
    Rat gamma{1, 50};
    Rat gamma_prime{1, 500};

    void validate() const;  // 0 < gamma' < gamma, 0 < epsilon < c < 1, n >= km
};

enum class VerdictStatus { kConfirmed, kCounterexample, kInconclusive };

struct CounterexampleWitness {
    std::optional<KGraph> graph;    // verify_erdos
    std::optional<Family> family;   // verify_rainbow
    std::string description;
    bool revalidated = false;
};

struct Verdict {
    VerdictStatus status = VerdictStatus::kInconclusive;
    std::optional<CounterexampleWitness> witness;
    long long sweep_cases = 0;
    long long random_trials = 0;
    double elapsed_seconds = 0;  // display only; never serialized into reports
};

/// Stable random k-graph with exactly `edge_count` edges: random draws closed
/// downward under dominance, then trimmed back by deleting dominance-maximal
/// edges. Stability holds by construction.
KGraph sample_stable_kgraph(Rng& rng, int n, int k, int edge_count);

/// Deterministic near-extremal perturbations (every single absent edge, then
/// lexicographic windows of t absent edges where t is the count needed to
/// push the branch above f) plus seeded random stable graphs of size
/// f(n,m,k)+1; every sampled graph must satisfy nu >= m.
Verdict verify_erdos(const TrialConfig& cfg);

/// Same perturbation scheme around m-fold S and m-fold D (each member gets
/// the same extra edges), plus random families of stable members of size
/// f(n,m,k)+1; every family must admit a rainbow matching. A counterexample
/// is only reported after the unstabilized family itself fails an exhaustive
/// search and its cardinality premises re-validate.
Verdict verify_rainbow(const TrialConfig& cfg);

/// The absorbing matching M = { {u_j} ∪ {k(j-1)+1..kj} : j in [t] } in
/// H*(F). Checks stability, |F_i| > f(n,m,k), t <= r, and that every member
/// restricted to [kt] is complete (failure names the member and a missing
/// edge).
Matching build_absorbing(const Family& f, int t);

/// Given the absorbing matching of size t and a balanced set S disjoint from
/// V(M) with k|S ∩ labels| = |S ∩ base| and |S ∩ labels| < t, produces and
/// validates a perfect matching of H*(F)[V(M) ∪ S].
Matching absorb(const Family& f, const Matching& m, int t, const VertexSet& s);

struct NearDOutcome {
    std::optional<RainbowMatching> matching;
    // on failure: which member misses which pattern edge
    int failed_member = -1;
    Edge missing_edge;
    int b = 0;  // the pattern cutoff actually used
};

/// Lemma-style rainbow constructor for stable 3-graph families near the
/// D-configuration: checks the pattern edges {2i-1, 2i, 3m-i+1} member by
/// member (members far from D(n,m,3) get the low slots) and assembles the
/// matching if every check passes. Failure is an outcome, not an error.
NearDOutcome near_D_rainbow(const Family& f, const Rat& eps);

enum class ExtremalClass { kSClose, kDClose, kBoth, kNeither };

/// Thresholds closeness(S(n,m,3), h) and closeness(D(n,m,3), h) at eps.
ExtremalClass classify_near_extremal(const KGraph& h, int m, const Rat& eps);

struct StabilityProbeReport {
    bool window_vacuous = false;  // f(n,m,3) <= eps^4 n^3
    long long s_source_trials = 0;
    long long d_source_trials = 0;
    long long s_close = 0;
    long long d_close = 0;
    long long both = 0;
    long long neither = 0;
    std::vector<KGraph> neither_witnesses;
};

/// Samples stable 3-graphs inside the stability window (e(H) close to
/// f(n,m,3) from below, nu < m) by deleting maximal edges from S and D, and
/// classifies each sample. NEITHER outcomes are recorded, never raised.
StabilityProbeReport stability_probe(int n, int m, const Rat& eps, long long trials, uint64_t seed);

struct BalancedSample {
    VertexSet r;        // raw inclusion sample over V(H*)
    VertexSet r_prime;  // balanced subset: |R' ∩ base| = k |R' ∩ labels|
};

/// Independent inclusion with probability p on the vertices of an auxiliary
/// graph, then the two-branch deletion rule until the base/label balance
/// holds.
BalancedSample sample_balanced(const AuxGraph& aux, const Rat& p, uint64_t seed);

/// Worker cap for parallel sweeps: HYPERMATCH_THREADS if set, else the
/// hardware count.
int worker_count();

}  // namespace hypermatch

#endif  // HYPERMATCH_HARNESS_HPP

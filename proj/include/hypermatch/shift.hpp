#ifndef HYPERMATCH_SHIFT_HPP
#define HYPERMATCH_SHIFT_HPP

#include "hypermatch/family.hpp"

#include <optional>
#include <vector>

namespace hypermatch {

/// (i,j)-compression, i < j, applied to every member in lockstep: each edge e
/// with j in e and i not in e is replaced by e - j + i unless that set is
/// already an edge of the same member. Preserves each member's edge count.
Family shift_ij(const Family& f, int i, int j);
KGraph shift_ij(const KGraph& g, int i, int j);

/// Sweeps pairs (i,j) in lexicographic order, restarting after any effective
/// shift, until a clean sweep. Every member of the result is stable.
Family stabilize(const Family& f);
KGraph stabilize(const KGraph& g);

/// Checks the compression safety contract on a concrete pair: either f
/// admits a rainbow matching, or its stabilization admits none.
/// Expects fs == stabilize(f).
bool rainbow_free_preserved(const Family& f, const Family& fs);

/// Alternates saturation sweeps (lexicographic by member, then edge; an edge
/// is kept only if adding it creates no rainbow matching) with stabilization,
/// until a full pass changes nothing. Errors if f already admits a rainbow
/// matching (witness in the message).
Family saturate(const Family& f);

/// No rainbow matching, and every single-edge augmentation of any member
/// admits one.
bool is_saturated(const Family& f);

struct DegreeCapReport {
    bool saturation_checked = false;
    bool saturated = false;  // meaningful only if checked or trusted
    std::vector<std::pair<int, int>> violations;  // (member index 0-based, vertex)
};

/// Audits the saturated-family degree cap: every vertex degree is either at
/// most C(n-1,k-1) - C(n-1-k(m-1),k-1) or exactly C(n-1,k-1).
/// With trust_saturated the (expensive) saturation check is skipped and the
/// flag is merely echoed.
DegreeCapReport degree_cap_check(const Family& f, bool trust_saturated = false);

struct PeelEvent {
    int iteration = 0;
    int removed_vertex = 0;        // label at the time of removal
    int dropped_member = 0;        // 0-based index at the time of removal
    std::vector<int> relabel_map;  // new label -> old label for that step
    std::optional<Family> before;  // the family the step was applied to
};

struct PeelResult {
    Family family;
    std::vector<PeelEvent> log;
};

/// First (member, vertex) pair in lexicographic order with full degree
/// C(n-1,k-1), if any.
std::optional<std::pair<int, int>> find_full_degree(const Family& f);

/// Drops one member and removes one vertex from all others, relabeling onto
/// {1..n-1}. No precondition; the building block of peel_full_degree.
std::pair<Family, PeelEvent> peel_step(const Family& f, int dropped_member, int removed_vertex);

/// Repeatedly makes the family stable+saturated and, while some member has a
/// vertex of full degree C(n-1,k-1), applies peel_step to the first such pair
/// in lexicographic order. Errors if f admits a rainbow matching.
PeelResult peel_full_degree(const Family& f);

/// Lifts a rainbow matching of the peeled family back through the log: each
/// step re-adds the dropped member with an edge through its removed
/// full-degree vertex (such an edge always exists by fullness) and maps
/// labels back. The result is validated against each step's recorded family.
RainbowMatching peel_lift(const PeelResult& peeled, const RainbowMatching& rm);

}  // namespace hypermatch

#endif  // HYPERMATCH_SHIFT_HPP

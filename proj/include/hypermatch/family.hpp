#ifndef HYPERMATCH_FAMILY_HPP
#define HYPERMATCH_FAMILY_HPP

#include "hypermatch/kgraph.hpp"

#include <vector>

namespace hypermatch {

/// Ordered list F_1..F_m of k-graphs on a shared vertex set {1..n}.
class Family {
public:
    static Family build(std::vector<KGraph> members);

    int n() const { return members_[0].n(); }
    int k() const { return members_[0].k(); }
    int m() const { return static_cast<int>(members_.size()); }
    const std::vector<KGraph>& members() const { return members_; }
    const KGraph& member(int i) const { return members_[static_cast<size_t>(i)]; }

    Family with_member(int i, KGraph g) const;

    bool operator==(const Family& o) const { return members_ == o.members_; }

private:
    explicit Family(std::vector<KGraph> members) : members_(std::move(members)) {}
    std::vector<KGraph> members_;
};

/// A rainbow matching: one edge per member, pairwise disjoint.
/// pairs[i] = (member index, edge of that member), member indices 0-based
/// internally and exactly {0..m-1} as a set.
struct RainbowMatching {
    std::vector<std::pair<int, Edge>> pairs;
};

bool validate_rainbow(const Family& f, const RainbowMatching& rm);

}  // namespace hypermatch

#endif  // HYPERMATCH_FAMILY_HPP

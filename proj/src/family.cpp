#include "hypermatch/family.hpp"

#include "hypermatch/errors.hpp"

#include <algorithm>

namespace hypermatch {

Family Family::build(std::vector<KGraph> members) {
    if (members.empty()) throw input_error("Family requires m >= 1");
    for (const KGraph& g : members)
        if (g.n() != members[0].n() || g.k() != members[0].k())
            throw input_error("Family members must share n and k");
    return Family(std::move(members));
}

Family Family::with_member(int i, KGraph g) const {
    if (g.n() != n() || g.k() != k()) throw input_error("with_member: n/k mismatch");
    std::vector<KGraph> ms = members_;
    ms[static_cast<size_t>(i)] = std::move(g);
    return Family(std::move(ms));
}

bool validate_rainbow(const Family& f, const RainbowMatching& rm) {
    if (static_cast<int>(rm.pairs.size()) != f.m()) return false;
    std::vector<bool> seen(static_cast<size_t>(f.m()), false);
    VertexBitset used(f.n());
    for (const auto& [i, e] : rm.pairs) {
        if (i < 0 || i >= f.m() || seen[static_cast<size_t>(i)]) return false;
        seen[static_cast<size_t>(i)] = true;
        if (!f.member(i).has_edge(e)) return false;
        VertexBitset em = make_mask(f.n(), e);
        if (used.intersects(em)) return false;
        used |= em;
    }
    return true;
}

}  // namespace hypermatch

#ifndef HYPERMATCH_BITSET_HPP
#define HYPERMATCH_BITSET_HPP

#include <bit>
#include <cstdint>
#include <vector>

namespace hypermatch {

/// Fixed-width vertex set over {1..n}. A single word covers n <= 64 (the
/// common case for solver state); larger n spills into extra words.
/// Disjointness tests dominate solver runtime, so those stay branch-light.
class VertexBitset {
public:
    VertexBitset() : lo_(0) {}
    explicit VertexBitset(int n) : lo_(0) {
        if (n > 64) ext_.assign(static_cast<size_t>((n - 1) / 64), 0);
    }

    void set(int v) { word(v) |= bit(v); }
    void reset(int v) { word(v) &= ~bit(v); }
    bool test(int v) const {
        int w = (v - 1) >> 6;
        uint64_t b = uint64_t{1} << ((v - 1) & 63);
        return ((w == 0 ? lo_ : ext_[static_cast<size_t>(w - 1)]) & b) != 0;
    }

    bool intersects(const VertexBitset& o) const {
        if ((lo_ & o.lo_) != 0) return true;
        size_t m = std::min(ext_.size(), o.ext_.size());
        for (size_t i = 0; i < m; ++i)
            if ((ext_[i] & o.ext_[i]) != 0) return true;
        return false;
    }

    bool contains(const VertexBitset& o) const {
        if ((o.lo_ & ~lo_) != 0) return false;
        for (size_t i = 0; i < o.ext_.size(); ++i) {
            uint64_t mine = i < ext_.size() ? ext_[i] : 0;
            if ((o.ext_[i] & ~mine) != 0) return false;
        }
        return true;
    }

    VertexBitset& operator|=(const VertexBitset& o) {
        lo_ |= o.lo_;
        if (o.ext_.size() > ext_.size()) ext_.resize(o.ext_.size(), 0);
        for (size_t i = 0; i < o.ext_.size(); ++i) ext_[i] |= o.ext_[i];
        return *this;
    }

    /// Remove o's bits (used to undo a branch step).
    VertexBitset& operator-=(const VertexBitset& o) {
        lo_ &= ~o.lo_;
        size_t m = std::min(ext_.size(), o.ext_.size());
        for (size_t i = 0; i < m; ++i) ext_[i] &= ~o.ext_[i];
        return *this;
    }

    int count() const {
        int c = std::popcount(lo_);
        for (uint64_t w : ext_) c += std::popcount(w);
        return c;
    }

    bool operator==(const VertexBitset& o) const = default;

private:
    uint64_t& word(int v) {
        int w = (v - 1) >> 6;
        return w == 0 ? lo_ : ext_[static_cast<size_t>(w - 1)];
    }
    static uint64_t bit(int v) { return uint64_t{1} << ((v - 1) & 63); }

    uint64_t lo_;
    std::vector<uint64_t> ext_;
};

}  // namespace hypermatch

#endif  // HYPERMATCH_BITSET_HPP

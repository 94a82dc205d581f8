#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "polymix/errors.hpp"

namespace polymix {

/// A word over the edge colors {0..n-1}, applied left to right:
/// the flag reached by w then i is apply_word(g, f, w) pushed through color i.
using ColorWord = std::vector<int>;

/// Properly edge-colored n-regular graph on flags. Each color i acts as a
/// fixed-point-free involution r_i on {0..F-1}; the graph is connected and
/// r_i, r_j commute whenever |i-j| >= 2. Instances are immutable after
/// validation and safe to share across threads.
class FlagGraph {
public:
    int rank() const { return static_cast<int>(adjacency_.size()); }
    int flags() const { return flag_count_; }

    /// The i-adjacent flag f^i.
    int32_t adjacent(int color, int32_t flag) const { return adjacency_[color][flag]; }

    const std::vector<std::vector<int32_t>>& adjacency() const { return adjacency_; }

    bool operator==(const FlagGraph& other) const = default;

private:
    friend FlagGraph validate_maniplex(const std::vector<std::vector<int32_t>>&);

    FlagGraph(int flag_count, std::vector<std::vector<int32_t>> adjacency)
        : flag_count_(flag_count), adjacency_(std::move(adjacency)) {}

    int flag_count_ = 0;
    std::vector<std::vector<int32_t>> adjacency_;
};

/// A flag graph with a distinguished base flag.
struct RootedFlagGraph {
    FlagGraph graph;
    int32_t base = 0;
};

/// Checks all maniplex invariants over every flag and color pair, scanning
/// flags in ascending order and colors in ascending order, and throws the
/// first witness found: NotInvolution, FixedPoint, Disconnected,
/// SquareViolation.
FlagGraph validate_maniplex(const std::vector<std::vector<int32_t>>& adjacency);

/// The flag f^w.
int32_t apply_word(const FlagGraph& g, int32_t flag, const ColorWord& w);

/// Color i edges become color n-1-i edges.
FlagGraph dual(const FlagGraph& g);

/// The unique color-preserving map a->b extending base_a -> base_b, if any.
/// On conflict returns the witness: a word closed at base_a but not at base_b.
struct Propagation {
    std::optional<std::vector<int32_t>> mapping;
    ColorWord conflict_witness;
};
Propagation propagate_colors(const FlagGraph& a, int32_t base_a, const FlagGraph& b,
                             int32_t base_b);

/// True iff the propagation base(a)->base(b) is a well-defined bijection.
bool isomorphic_rooted(const RootedFlagGraph& a, const RootedFlagGraph& b);

/// Unrooted isomorphism, decided by trying every rooting of b against flag 0
/// of a.
bool isomorphic_unrooted(const FlagGraph& a, const FlagGraph& b);

/// Normal form of a word in the universal Coxeter group [inf,...,inf]:
/// fully cancelled (deleting pairs of equal letters separated only by
/// far-commuting ones) and lexicographically minimal under adjacent swaps of
/// commuting letters. Two words are equal in the group iff their normal
/// forms coincide.
ColorWord canonical_word(const ColorWord& w);

}  // namespace polymix

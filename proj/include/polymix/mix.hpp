#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "polymix/flag_graph.hpp"
#include "polymix/mode.hpp"
#include "polymix/symmetry.hpp"

namespace polymix {

/// Color-preserving surjection sending base to base; determined by the base
/// assignment.
struct Covering {
    int32_t root_source = 0;
    int32_t root_target = 0;
    std::vector<int32_t> mapping;  // flag of a -> flag of b
};

/// Either the covering a -> b, or a witness word closed at base(a) but not
/// at base(b).
struct CoverResult {
    std::optional<Covering> covering;
    ColorWord witness;

    bool covers() const { return covering.has_value(); }
};
CoverResult covers(const RootedFlagGraph& a, const RootedFlagGraph& b);

/// Connected component of (base, base) in the colorwise product, rooted
/// there. Flags are numbered in BFS discovery order (colors ascending), so
/// the root is flag 0.
RootedFlagGraph mix_rooted(const RootedFlagGraph& a, const RootedFlagGraph& b);

/// Mix of rooted symmetry type graphs: component of the base pair; a color
/// is a semi-edge exactly when it is a semi-edge on both sides.
RootedStg mix_stg(const RootedStg& s, const RootedStg& t);

/// Builds T(P,phi) mix T(Q,psi), the mix M of the rooted graphs, and the
/// vertex map (orbit pair at word w) -> (orbit of the mix flag at w);
/// checks it is a surjective color-preserving homomorphism onto T(M).
struct StgSurjectionReport {
    int32_t pair_vertices = 0;
    int32_t mix_orbits = 0;
    bool surjective = false;
    bool homomorphism = false;
    int32_t k = 0, m = 0;
    bool within_km = false;
};
StgSurjectionReport verify_stg_surjection(const RootedFlagGraph& p, const RootedFlagGraph& q,
                                          Exec mode = Exec::parallel);

/// Computes the rooted mixes over one representative flag per orbit pair
/// (minimum flag index per orbit). Well-defined iff all underlying graphs
/// are isomorphic; otherwise two non-isomorphic witnesses are returned.
/// Also reports whether T(P) mix T(Q) (the full product) is connected,
/// which is sufficient for well-definedness.
struct UnrootedMixResult {
    bool well_defined = false;
    std::optional<FlagGraph> mixed;  // present when well defined
    std::optional<FlagGraph> witness_a, witness_b;
    std::pair<int32_t, int32_t> witness_roots_a{-1, -1}, witness_roots_b{-1, -1};
    bool stg_product_connected = false;
};
UnrootedMixResult unrooted_mix_welldefined(const FlagGraph& p, const FlagGraph& q,
                                           Exec mode = Exec::parallel);

}  // namespace polymix

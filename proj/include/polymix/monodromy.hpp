#pragma once

#include <cstdint>
#include <vector>

#include "polymix/flag_graph.hpp"
#include "polymix/mode.hpp"
#include "polymix/perm_group.hpp"

namespace polymix {

/// The permutation group on flags generated by the n connection
/// involutions; transitive because the graph is connected.
struct MonodromyGroup {
    PermGroup group;
    std::vector<Perm> connection;  // images of r_0..r_{n-1}
};

MonodromyGroup monodromy_group(const FlagGraph& g);

/// Point stabilizer in Mon; its index is always the flag count.
PermGroup flag_stabilizer_image(const MonodromyGroup& m, int32_t flag);

/// Flags lie in the same orbit iff their stabilizer images coincide as
/// subgroups.
bool same_orbit_by_stabilizer(const MonodromyGroup& m, int32_t f1, int32_t f2);

/// Cayley flag graph of Mon on its connection generators: flags are group
/// elements numbered in BFS order from the identity (colors ascending),
/// i-edges by right multiplication. Rooted at the identity. Reflexible and
/// covers g; polytopality is not guaranteed.
RootedFlagGraph minimal_regular_cover(const FlagGraph& g, uint64_t budget_group = 20000);

/// For a two-orbit polytope: the stabilizer image of a flag, whose order
/// satisfies |Mon| = 2 |Gamma| |X|. Throws NotTwoOrbit with the actual
/// orbit count otherwise.
PermGroup chirality_group(const FlagGraph& g, Exec mode = Exec::parallel);

/// String group generated by involutions: checked against the involution
/// and far-commutation relations on construction.
struct Sggi {
    int rank = 0;
    int degree = 0;
    std::vector<Perm> generators;
};
Sggi make_sggi(int rank, int degree, std::vector<Perm> generators);
Sggi sggi_of_monodromy(const MonodromyGroup& m);

/// Intersection condition over all pairs of generator subsets; the witness
/// names the first violating pair (I, J) in subset-mask order.
struct StringCReport {
    bool is_string_c = false;
    std::vector<int> witness_i, witness_j;
};
StringCReport is_string_c_group(const Sggi& s, uint64_t budget = 20000);

/// Everything the monodromy bounds need, computed in the finite image: the
/// k distinct flag-stabilizer images S_i, their normalizers N_i, N = inter
/// N_i, T = intersection of all stabilizers but one. Verifies
///   [Mon:N] |T|^k <= |Mon| <= [Mon:N] |Gamma|^k <= k! |Gamma|^k.
struct MonBoundsReport {
    uint64_t mon_order = 0;
    int32_t k = 0;
    uint64_t gamma_order = 0;    // |N_i| / |S_i|
    uint64_t index_n = 0;        // [Mon : N]
    uint64_t t_order = 0;        // |T_1| (the full intersection is trivial)
    uint64_t stab_order = 0;
    bool lower_holds = false;
    bool upper_holds = false;
    bool factorial_holds = false;
};
MonBoundsReport mon_bounds_report(const FlagGraph& g, uint64_t budget = 20000,
                                  Exec mode = Exec::parallel);

}  // namespace polymix

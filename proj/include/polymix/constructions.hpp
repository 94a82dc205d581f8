#pragma once

#include <cstdint>

#include "polymix/face_poset.hpp"
#include "polymix/flag_graph.hpp"

namespace polymix {

/// The polygon {p} as a 2p-flag cycle alternating colors 0 and 1.
/// Flag 2k is (vertex k, edge k), flag 2k+1 is (vertex k+1, edge k).
FlagGraph polygon(int p);

/// Poset of the prism over a p-gon: two p-gon faces, p squares.
FacePoset prism_poset(int p);

/// Prism over a rank-2 flag graph with 2p flags, built from its poset.
FlagGraph prism_over(const FlagGraph& gon);

/// Torus map {4,4}_(b,c): quotient of the square tiling by the lattice
/// generated by (b,c) and (-c,b). Flags are indexed by (square position in
/// the fundamental domain in lexicographic order, corner 0-3 counted
/// counterclockwise from lower-left, side 0-1 with side 0 the
/// counterclockwise edge at the corner); the base flag under this numbering
/// is square (0,0), corner 0, side 0. Throws DegenerateLattice for b=c=0
/// and propagates validation failures of degenerate small quotients.
FlagGraph toroid_44(int b, int c);

/// Raw quotient adjacency, for callers that want to inspect invalid cases.
std::vector<std::vector<int32_t>> toroid_44_adjacency(int b, int c);

/// Poset of m stacked cubes with the seam vertices and edges kept.
FacePoset cube_stack_poset(int m);

/// Stack of m cubes: 4m+4 vertices, 8m+4 edges, 4m+2 faces, 32m+16 flags.
FlagGraph cube_stack(int m);

/// Two copies of g joined pointwise by color n; rank n+1 on 2F flags.
FlagGraph trivial_extension(const FlagGraph& g);

/// Flag set Omega x Z_2^m: color 0 flips the coordinate of the vertex the
/// flag contains, color i >= 1 acts as input color i-1. Vertex j is the
/// j-th 0-face component of g (canonical order). Flag (f, x) has index
/// f * 2^m + x.
FlagGraph two_power(const FlagGraph& g, uint64_t budget_flags = 10000000);

enum class ShiftStep { trivial_extension, two_power };

/// Iterates a rank-raising step whose symmetry type graph contract is
/// "labels shifted up by one, 0-semi-edges added": either
/// dual(trivial_extension(dual(g))) or two_power(g). The contract is
/// verified after every step.
FlagGraph shift_stg_iterate(const FlagGraph& g, int steps, ShiftStep step,
                            uint64_t budget_flags = 10000000);

}  // namespace polymix

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "polymix/flag_graph.hpp"
#include "polymix/mode.hpp"
#include "polymix/perm_group.hpp"

namespace polymix {

/// Edge-colored multigraph with semi-edges: for each color an involution on
/// vertices whose fixed points are the semi-edges. Vertices of a quotient
/// carry the orbit ids of the underlying flag graph.
struct SymmetryTypeGraph {
    int rank = 0;
    int32_t vertices = 0;
    std::vector<std::vector<int32_t>> adj;

    bool operator==(const SymmetryTypeGraph&) const = default;
};

struct RootedStg {
    SymmetryTypeGraph stg;
    int32_t base = 0;
};

struct OrbitPartition {
    std::vector<int32_t> orbit_of;
    int32_t count = 0;
};

/// The group of flag permutations commuting with every color involution,
/// found by propagating each candidate image of flag 0. Acts semiregularly.
PermGroup automorphism_group(const FlagGraph& g, Exec mode = Exec::parallel);

/// Orbits of the automorphism group; ids assigned by minimum flag index.
OrbitPartition flag_orbits(const FlagGraph& g, Exec mode = Exec::parallel);

SymmetryTypeGraph symmetry_type_graph(const FlagGraph& g, Exec mode = Exec::parallel);
RootedStg symmetry_type_graph_rooted(const RootedFlagGraph& g, Exec mode = Exec::parallel);

/// Generators of the automorphism group read off closed walks in the
/// symmetry type graph: BFS spanning tree from the base orbit (children in
/// ascending color order), one word per non-tree dart, skipping words that
/// repeat an earlier generator in the universal Coxeter group.
struct StgGenerator {
    ColorWord word;
    Perm automorphism;
};
std::vector<StgGenerator> stg_generators(const RootedFlagGraph& g, Exec mode = Exec::parallel);

/// Connected, and far-apart color involutions commute.
bool is_allowable(const SymmetryTypeGraph& t);

/// Orbit counts of a facet, a vertex-figure and the whole polytope,
/// together with the divisibility lcm(k1,k2) | k3. Requires all facets
/// mutually isomorphic and all vertex-figures mutually isomorphic.
struct AmalgamReport {
    int32_t k1 = 0, k2 = 0, k3 = 0;
    bool divides = false;
};
AmalgamReport amalgam_orbit_divisibility(const FlagGraph& g, Exec mode = Exec::parallel);

/// DOT export; semi-edges are drawn as half-edges to invisible points.
std::string stg_to_dot(const SymmetryTypeGraph& t);

/// The facet sections of g (components after deleting color n-1), each as a
/// rank n-1 flag graph. extract_vertex_figures deletes color 0 and shifts
/// the remaining colors down by one.
std::vector<FlagGraph> extract_facets(const FlagGraph& g);
std::vector<FlagGraph> extract_vertex_figures(const FlagGraph& g);

}  // namespace polymix

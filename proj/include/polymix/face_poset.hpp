#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "polymix/flag_graph.hpp"
#include "polymix/mode.hpp"

namespace polymix {

struct Face {
    int rank = 0;
    std::string id;
};

/// Ranked poset of faces given by cover pairs (lower, upper) with
/// rank(upper) = rank(lower) + 1. Construction checks ranks, id uniqueness
/// and the cover rank step; the polytope conditions are checked by
/// flag_graph_of_poset.
class FacePoset {
public:
    FacePoset(int rank, std::vector<Face> faces, std::vector<std::pair<int32_t, int32_t>> covers);

    int rank() const { return rank_; }
    const std::vector<Face>& faces() const { return faces_; }
    const std::vector<std::pair<int32_t, int32_t>>& covers() const { return covers_; }

    int32_t face_index(const std::string& id) const;
    const std::vector<int32_t>& upper(int32_t f) const { return upper_[f]; }
    const std::vector<int32_t>& lower(int32_t f) const { return lower_[f]; }
    const std::vector<int32_t>& by_rank(int r) const { return by_rank_[r + 1]; }

    /// Order relation (reflexive) as the transitive closure of covers.
    bool leq(int32_t a, int32_t b) const;

private:
    int rank_;
    std::vector<Face> faces_;
    std::vector<std::pair<int32_t, int32_t>> covers_;
    std::vector<std::vector<int32_t>> upper_, lower_;
    std::vector<std::vector<int32_t>> by_rank_;  // index shifted by +1
    std::unordered_map<std::string, int32_t> index_;
};

/// Enumerates the maximal chains and builds the flag graph; r_i swaps the
/// i-face inside each flag. Flags are numbered lexicographically by their
/// proper-face index tuple (f_0,...,f_{n-1}), indices in poset face order.
/// Checks conditions 1-3 first (MultipleExtrema, RankGap,
/// DiamondViolation); Disconnected propagates from maniplex validation.
FlagGraph flag_graph_of_poset(const FacePoset& p);

/// Same enumeration, returning the face tuple of every flag alongside.
struct PosetFlags {
    FlagGraph graph;
    std::vector<std::vector<int32_t>> chains;  // per flag, faces of rank 0..n-1
};
PosetFlags flag_graph_of_poset_with_chains(const FacePoset& p);

/// Connected components after deleting color-i edges; these are the
/// i-faces. Component ids are assigned in order of their minimum flag.
struct FacePartition {
    std::vector<int32_t> component_of;
    std::vector<std::vector<int32_t>> members;  // sorted flag lists
    int count() const { return static_cast<int>(members.size()); }
};
FacePartition faces_of(const FlagGraph& g, int color);

/// Ranked poset of components with incidence = nonempty intersection, plus
/// formal extrema "bot" and "top". An i-face is named "f<i>_<minflag>".
/// Polytopality is not guaranteed.
FacePoset poset_of_flag_graph(const FlagGraph& g);

/// Component intersection property: every chain of pairwise-intersecting
/// faces with ascending ranks has nonempty connected intersection. On
/// failure the witness names the offending faces.
struct PolytopalityReport {
    bool polytopal = false;
    std::vector<std::string> witness_chain;  // face ids, ascending rank
};
PolytopalityReport is_polytopal(const FlagGraph& g, Exec mode = Exec::parallel);

/// Induced poset on {H : F <= H <= G}, reranked to rank(G)-rank(F)-1.
FacePoset section(const FacePoset& p, int32_t f, int32_t g);

/// True iff some rank-2 section has exactly 2 proper faces per rank.
bool has_digonal_section(const FacePoset& p);

}  // namespace polymix

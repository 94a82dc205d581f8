#pragma once

#include <string>

#include <json.hpp>

#include "polymix/face_poset.hpp"
#include "polymix/flag_graph.hpp"

namespace polymix {

/// Interchange format: {"rank": n, "flags": F, "adjacency": [[...],...]}
/// with adjacency[i][f] = f^i. Round-trips losslessly.
nlohmann::json graph_to_json(const FlagGraph& g);
FlagGraph graph_from_json(const nlohmann::json& j);

/// Poset format: {"rank": n, "faces": [{"rank": r, "id": s}...],
///                "covers": [[id,id]...]}.
nlohmann::json poset_to_json(const FacePoset& p);
FacePoset poset_from_json(const nlohmann::json& j);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

/// FNV-1a 64-bit content digest, hex encoded; used by run manifests.
std::string fnv1a64_hex(const std::string& content);

}  // namespace polymix

#pragma once

#include <functional>
#include <string>
#include <vector>

#include "polymix/flag_graph.hpp"

namespace polymix {

/// The named example corpus regenerated by `polymix corpus` and shared by
/// the test suites. Deterministic: same names, same graphs, every run.
struct CorpusEntry {
    std::string name;
    std::function<FlagGraph()> build;
};

/// polygons 2..6, prisms 3..6, the toroids {4,4}_(b,c) used throughout,
/// cube stacks 1..6, and small derived graphs (dual, trivial extension,
/// 2^P).
const std::vector<CorpusEntry>& corpus();

/// Rank-3 members only (prisms, toroids, cube stacks).
std::vector<CorpusEntry> corpus_rank3();

FlagGraph corpus_graph(const std::string& name);

}  // namespace polymix

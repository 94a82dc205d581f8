#include "polymix/face_poset.hpp"

#include <algorithm>
#include <atomic>
#include <map>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace polymix {

FacePoset::FacePoset(int rank, std::vector<Face> faces,
                     std::vector<std::pair<int32_t, int32_t>> covers)
    : rank_(rank), faces_(std::move(faces)), covers_(std::move(covers)) {
    const auto nf = static_cast<int32_t>(faces_.size());
    upper_.resize(nf);
    lower_.resize(nf);
    by_rank_.resize(rank_ + 2);
    for (int32_t i = 0; i < nf; ++i) {
        const Face& f = faces_[i];
        if (f.rank < -1 || f.rank > rank_)
            throw ValidationError("RankGap", "face rank out of range", {{"face", f.id}});
        if (!index_.emplace(f.id, i).second)
            throw ValidationError("DuplicateFace", "face id repeated", {{"face", f.id}});
        by_rank_[f.rank + 1].push_back(i);
    }
    for (const auto& [lo, hi] : covers_) {
        if (lo < 0 || lo >= nf || hi < 0 || hi >= nf)
            throw ValidationError("BadCover", "cover index out of range", {});
        if (faces_[hi].rank != faces_[lo].rank + 1)
            throw ValidationError("BadCover", "cover does not step rank by one",
                                  {{"lower", faces_[lo].id}, {"upper", faces_[hi].id}});
        upper_[lo].push_back(hi);
        lower_[hi].push_back(lo);
    }
    for (auto& v : upper_) std::sort(v.begin(), v.end());
    for (auto& v : lower_) std::sort(v.begin(), v.end());
}

int32_t FacePoset::face_index(const std::string& id) const {
    auto it = index_.find(id);
    if (it == index_.end())
        throw ValidationError("UnknownFace", "no face with id " + id, {{"face", id}});
    return it->second;
}

bool FacePoset::leq(int32_t a, int32_t b) const {
    if (a == b) return true;
    if (faces_[a].rank >= faces_[b].rank) return false;
    std::vector<int32_t> stack = {a};
    std::vector<char> seen(faces_.size(), 0);
    seen[a] = 1;
    while (!stack.empty()) {
        const int32_t f = stack.back();
        stack.pop_back();
        for (const int32_t u : upper_[f]) {
            if (u == b) return true;
            if (!seen[u] && faces_[u].rank < faces_[b].rank) {
                seen[u] = 1;
                stack.push_back(u);
            }
        }
    }
    return false;
}

namespace {

void check_polytope_conditions(const FacePoset& p) {
    const int n = p.rank();
    if (p.by_rank(-1).size() != 1 || p.by_rank(n).size() != 1)
        throw ValidationError("MultipleExtrema",
                              "need exactly one face of rank -1 and one of rank " +
                                  std::to_string(n),
                              {});
    const int32_t bot = p.by_rank(-1)[0];
    const int32_t top = p.by_rank(n)[0];
    for (int32_t f = 0; f < static_cast<int32_t>(p.faces().size()); ++f) {
        if (f != top && p.upper(f).empty())
            throw ValidationError("RankGap", "face has no upper cover", {{"face", p.faces()[f].id}});
        if (f != bot && p.lower(f).empty())
            throw ValidationError("RankGap", "face has no lower cover", {{"face", p.faces()[f].id}});
    }
    // diamond: every comparable pair with rank gap 2 has exactly two middles
    for (int32_t a = 0; a < static_cast<int32_t>(p.faces().size()); ++a) {
        std::map<int32_t, int> count;
        for (const int32_t h : p.upper(a))
            for (const int32_t b : p.upper(h)) ++count[b];
        for (const auto& [b, c] : count) {
            if (c != 2)
                throw ValidationError("DiamondViolation",
                                      "faces " + p.faces()[a].id + " < " + p.faces()[b].id +
                                          " have " + std::to_string(c) + " middle faces",
                                      {{"lower", p.faces()[a].id}, {"upper", p.faces()[b].id}});
        }
    }
}

}  // namespace

PosetFlags flag_graph_of_poset_with_chains(const FacePoset& p) {
    check_polytope_conditions(p);
    const int n = p.rank();
    const int32_t bot = p.by_rank(-1)[0];
    std::vector<std::vector<int32_t>> chains;
    std::vector<int32_t> cur;
    // DFS over upper covers in ascending face order yields lexicographic
    // flag numbering.
    auto rec = [&](auto&& self, int32_t face) -> void {
        if (static_cast<int>(cur.size()) == n) {
            chains.push_back(cur);
            return;
        }
        for (const int32_t u : p.upper(face)) {
            cur.push_back(u);
            self(self, u);
            cur.pop_back();
        }
    };
    rec(rec, bot);
    std::map<std::vector<int32_t>, int32_t> index;
    for (int32_t i = 0; i < static_cast<int32_t>(chains.size()); ++i) index[chains[i]] = i;

    const int32_t F = static_cast<int32_t>(chains.size());
    if (F == 0) throw ValidationError("RankGap", "poset has no maximal chains", {});
    std::vector<std::vector<int32_t>> adjacency(n, std::vector<int32_t>(F));
    for (int32_t fi = 0; fi < F; ++fi) {
        for (int i = 0; i < n; ++i) {
            const int32_t below = (i == 0) ? bot : chains[fi][i - 1];
            const int32_t here = chains[fi][i];
            int32_t other = -1;
            if (i == n - 1) {
                // every upper cover of `below` lies under the unique top face
                for (const int32_t h : p.upper(below))
                    if (h != here) { other = h; break; }
            } else {
                const int32_t above = chains[fi][i + 1];
                for (const int32_t h : p.upper(below)) {
                    if (h == here) continue;
                    if (std::binary_search(p.upper(h).begin(), p.upper(h).end(), above)) {
                        other = h;
                        break;
                    }
                }
            }
            auto swapped = chains[fi];
            swapped[i] = other;
            adjacency[i][fi] = index.at(swapped);
        }
    }
    return {validate_maniplex(adjacency), std::move(chains)};
}

FlagGraph flag_graph_of_poset(const FacePoset& p) {
    return flag_graph_of_poset_with_chains(p).graph;
}

FacePartition faces_of(const FlagGraph& g, int color) {
    if (color < 0 || color >= g.rank()) throw err_color_out_of_range(color, g.rank());
    FacePartition out;
    out.component_of.assign(g.flags(), -1);
    for (int32_t s = 0; s < g.flags(); ++s) {
        if (out.component_of[s] >= 0) continue;
        const int32_t id = static_cast<int32_t>(out.members.size());
        std::vector<int32_t> comp = {s};
        out.component_of[s] = id;
        for (size_t qi = 0; qi < comp.size(); ++qi) {
            for (int i = 0; i < g.rank(); ++i) {
                if (i == color) continue;
                const int32_t t = g.adjacent(i, comp[qi]);
                if (out.component_of[t] < 0) {
                    out.component_of[t] = id;
                    comp.push_back(t);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        out.members.push_back(std::move(comp));
    }
    return out;
}

FacePoset poset_of_flag_graph(const FlagGraph& g) {
    const int n = g.rank();
    std::vector<FacePartition> parts;
    parts.reserve(n);
    for (int i = 0; i < n; ++i) parts.push_back(faces_of(g, i));

    std::vector<Face> faces;
    std::vector<std::pair<int32_t, int32_t>> covers;
    faces.push_back({-1, "bot"});
    std::vector<std::vector<int32_t>> ids(n);
    for (int i = 0; i < n; ++i) {
        ids[i].resize(parts[i].count());
        for (int32_t c = 0; c < parts[i].count(); ++c) {
            ids[i][c] = static_cast<int32_t>(faces.size());
            faces.push_back(
                {i, "f" + std::to_string(i) + "_" + std::to_string(parts[i].members[c][0])});
        }
    }
    const int32_t top = static_cast<int32_t>(faces.size());
    faces.push_back({n, "top"});

    for (int32_t c = 0; c < parts[0].count(); ++c) covers.push_back({0, ids[0][c]});
    for (int i = 0; i + 1 < n; ++i) {
        std::vector<std::pair<int32_t, int32_t>> pairs;
        pairs.reserve(g.flags());
        for (int32_t f = 0; f < g.flags(); ++f)
            pairs.push_back({parts[i].component_of[f], parts[i + 1].component_of[f]});
        std::sort(pairs.begin(), pairs.end());
        pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
        for (const auto& [a, b] : pairs) covers.push_back({ids[i][a], ids[i + 1][b]});
    }
    for (int32_t c = 0; c < parts[n - 1].count(); ++c) covers.push_back({ids[n - 1][c], top});
    return FacePoset(n, std::move(faces), std::move(covers));
}

namespace {

// Shared context for the component intersection property check.
struct CipContext {
    const FlagGraph& g;
    std::vector<FacePartition> parts;
    // intersects[r1][r2][f1]: sorted r2-face ids sharing a flag with face f1
    std::vector<std::vector<std::vector<std::vector<int32_t>>>> intersects;

    explicit CipContext(const FlagGraph& graph) : g(graph) {
        const int n = g.rank();
        parts.reserve(n);
        for (int i = 0; i < n; ++i) parts.push_back(faces_of(g, i));
        intersects.assign(n, {});
        for (int r1 = 0; r1 < n; ++r1) {
            intersects[r1].assign(n, {});
            for (int r2 = r1 + 1; r2 < n; ++r2)
                intersects[r1][r2].assign(parts[r1].count(), {});
        }
        for (int r1 = 0; r1 < n; ++r1)
            for (int r2 = r1 + 1; r2 < n; ++r2) {
                auto& adj = intersects[r1][r2];
                for (int32_t f = 0; f < g.flags(); ++f)
                    adj[parts[r1].component_of[f]].push_back(parts[r2].component_of[f]);
                for (auto& v : adj) {
                    std::sort(v.begin(), v.end());
                    v.erase(std::unique(v.begin(), v.end()), v.end());
                }
            }
    }

    std::string face_id(int rank, int32_t c) const {
        return "f" + std::to_string(rank) + "_" + std::to_string(parts[rank].members[c][0]);
    }

    bool connected_within(const std::vector<int32_t>& flags, const std::vector<int>& ranks) const {
        if (flags.empty()) return false;
        std::vector<char> banned(g.rank(), 0);
        for (const int r : ranks) banned[r] = 1;
        std::vector<char> inside_seen(flags.size(), 0);
        auto locate = [&](int32_t f) {
            const auto it = std::lower_bound(flags.begin(), flags.end(), f);
            return (it != flags.end() && *it == f) ? static_cast<int32_t>(it - flags.begin())
                                                   : static_cast<int32_t>(-1);
        };
        std::vector<int32_t> stack = {0};
        inside_seen[0] = 1;
        size_t reached = 1;
        while (!stack.empty()) {
            const int32_t pos = stack.back();
            stack.pop_back();
            for (int i = 0; i < g.rank(); ++i) {
                if (banned[i]) continue;
                const int32_t q = locate(g.adjacent(i, flags[pos]));
                if (q >= 0 && !inside_seen[q]) {
                    inside_seen[q] = 1;
                    ++reached;
                    stack.push_back(q);
                }
            }
        }
        return reached == flags.size();
    }

    // DFS over chains rooted at (rank r0, face f0), extending to higher
    // ranks through pairwise-intersecting faces; returns the first failing
    // chain in deterministic order, empty if none.
    std::vector<std::pair<int, int32_t>> scan_root(int r0, int32_t f0) const {
        std::vector<std::pair<int, int32_t>> chain = {{r0, f0}};
        std::vector<int32_t> inter = parts[r0].members[f0];
        std::vector<std::pair<int, int32_t>> bad;
        dfs(chain, inter, bad);
        return bad;
    }

    void dfs(std::vector<std::pair<int, int32_t>>& chain, const std::vector<int32_t>& inter,
             std::vector<std::pair<int, int32_t>>& bad) const {
        if (!bad.empty()) return;
        const int n = g.rank();
        for (int r = chain.back().first + 1; r < n; ++r) {
            // faces of rank r intersecting every chain member
            std::vector<int32_t> cands = intersects[chain[0].first][r][chain[0].second];
            for (size_t ci = 1; ci < chain.size() && !cands.empty(); ++ci) {
                const auto& other = intersects[chain[ci].first][r][chain[ci].second];
                std::vector<int32_t> merged;
                std::set_intersection(cands.begin(), cands.end(), other.begin(), other.end(),
                                      std::back_inserter(merged));
                cands = std::move(merged);
            }
            for (const int32_t f : cands) {
                chain.push_back({r, f});
                std::vector<int32_t> next;
                std::set_intersection(inter.begin(), inter.end(), parts[r].members[f].begin(),
                                      parts[r].members[f].end(), std::back_inserter(next));
                std::vector<int> ranks;
                ranks.reserve(chain.size());
                for (const auto& [cr, cf] : chain) ranks.push_back(cr);
                if (!connected_within(next, ranks)) {
                    bad = chain;
                    chain.pop_back();
                    return;
                }
                dfs(chain, next, bad);
                chain.pop_back();
                if (!bad.empty()) return;
            }
        }
    }
};

}  // namespace

PolytopalityReport is_polytopal(const FlagGraph& g, Exec mode) {
    const CipContext ctx(g);
    const int n = g.rank();
    std::vector<std::pair<int, int32_t>> roots;
    for (int r = 0; r < n; ++r)
        for (int32_t f = 0; f < ctx.parts[r].count(); ++f) roots.push_back({r, f});

    std::vector<std::pair<int, int32_t>> witness;
    if (mode == Exec::serial) {
        for (const auto& [r, f] : roots) {
            witness = ctx.scan_root(r, f);
            if (!witness.empty()) break;
        }
    } else {
        const auto nroots = static_cast<long>(roots.size());
        std::vector<std::vector<std::pair<int, int32_t>>> found(roots.size());
        std::atomic<long> best{nroots};
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
        for (long i = 0; i < nroots; ++i) {
            if (i > best.load(std::memory_order_relaxed)) continue;
            auto bad = ctx.scan_root(roots[i].first, roots[i].second);
            if (!bad.empty()) {
                found[i] = std::move(bad);
                long cur = best.load();
                while (i < cur && !best.compare_exchange_weak(cur, i)) {
                }
            }
        }
        if (best.load() < nroots) witness = found[best.load()];
    }
    PolytopalityReport report;
    report.polytopal = witness.empty();
    for (const auto& [r, f] : witness) report.witness_chain.push_back(ctx.face_id(r, f));
    return report;
}

FacePoset section(const FacePoset& p, int32_t f, int32_t g) {
    if (f == g || !p.leq(f, g))
        throw ValidationError("NotComparable",
                              "faces " + p.faces()[f].id + " and " + p.faces()[g].id +
                                  " do not satisfy F < G",
                              {{"f", p.faces()[f].id}, {"g", p.faces()[g].id}});
    const int base_rank = p.faces()[f].rank;
    std::vector<int32_t> keep;
    for (int32_t h = 0; h < static_cast<int32_t>(p.faces().size()); ++h)
        if (p.leq(f, h) && p.leq(h, g)) keep.push_back(h);
    std::vector<int32_t> remap(p.faces().size(), -1);
    std::vector<Face> faces;
    for (const int32_t h : keep) {
        remap[h] = static_cast<int32_t>(faces.size());
        faces.push_back({p.faces()[h].rank - base_rank - 1, p.faces()[h].id});
    }
    std::vector<std::pair<int32_t, int32_t>> covers;
    for (const auto& [lo, hi] : p.covers())
        if (remap[lo] >= 0 && remap[hi] >= 0) covers.push_back({remap[lo], remap[hi]});
    return FacePoset(p.faces()[g].rank - base_rank - 1, std::move(faces), std::move(covers));
}

bool has_digonal_section(const FacePoset& p) {
    const auto nf = static_cast<int32_t>(p.faces().size());
    for (int32_t f = 0; f < nf; ++f) {
        for (int32_t g = 0; g < nf; ++g) {
            if (p.faces()[g].rank != p.faces()[f].rank + 3) continue;
            if (!p.leq(f, g)) continue;
            int lo = 0, hi = 0;
            for (int32_t h = 0; h < nf; ++h) {
                if (p.faces()[h].rank == p.faces()[f].rank + 1 && p.leq(f, h) && p.leq(h, g)) ++lo;
                if (p.faces()[h].rank == p.faces()[f].rank + 2 && p.leq(f, h) && p.leq(h, g)) ++hi;
            }
            if (lo == 2 && hi == 2) return true;
        }
    }
    return false;
}

}  // namespace polymix

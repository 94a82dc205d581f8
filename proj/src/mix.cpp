#include "polymix/mix.hpp"

#include <algorithm>
#include <unordered_map>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace polymix {

CoverResult covers(const RootedFlagGraph& a, const RootedFlagGraph& b) {
    if (a.graph.rank() != b.graph.rank())
        throw err_rank_mismatch(a.graph.rank(), b.graph.rank());
    Propagation prop = propagate_colors(a.graph, a.base, b.graph, b.base);
    if (!prop.mapping) return {std::nullopt, std::move(prop.conflict_witness)};
    // the image is all of b because b is connected
    return {Covering{a.base, b.base, std::move(*prop.mapping)}, {}};
}

RootedFlagGraph mix_rooted(const RootedFlagGraph& a, const RootedFlagGraph& b) {
    if (a.graph.rank() != b.graph.rank())
        throw err_rank_mismatch(a.graph.rank(), b.graph.rank());
    const int n = a.graph.rank();
    const int64_t fb = b.graph.flags();
    auto key = [fb](int32_t x, int32_t y) { return static_cast<int64_t>(x) * fb + y; };
    std::unordered_map<int64_t, int32_t> index;
    std::vector<std::pair<int32_t, int32_t>> pairs = {{a.base, b.base}};
    index[key(a.base, b.base)] = 0;
    std::vector<std::vector<int32_t>> adj(n);
    for (size_t qi = 0; qi < pairs.size(); ++qi) {
        const auto [x, y] = pairs[qi];
        for (int i = 0; i < n; ++i) {
            const int32_t px = a.graph.adjacent(i, x);
            const int32_t py = b.graph.adjacent(i, y);
            auto [it, inserted] = index.emplace(key(px, py), static_cast<int32_t>(pairs.size()));
            if (inserted) pairs.push_back({px, py});
            adj[i].push_back(it->second);
        }
    }
    return {validate_maniplex(adj), 0};
}

RootedStg mix_stg(const RootedStg& s, const RootedStg& t) {
    if (s.stg.rank != t.stg.rank) throw err_rank_mismatch(s.stg.rank, t.stg.rank);
    const int n = s.stg.rank;
    const int64_t m = t.stg.vertices;
    auto key = [m](int32_t x, int32_t y) { return static_cast<int64_t>(x) * m + y; };
    std::unordered_map<int64_t, int32_t> index;
    std::vector<std::pair<int32_t, int32_t>> pairs = {{s.base, t.base}};
    index[key(s.base, t.base)] = 0;
    SymmetryTypeGraph out;
    out.rank = n;
    out.adj.assign(n, {});
    for (size_t qi = 0; qi < pairs.size(); ++qi) {
        const auto [x, y] = pairs[qi];
        for (int i = 0; i < n; ++i) {
            const int32_t px = s.stg.adj[i][x];
            const int32_t py = t.stg.adj[i][y];
            auto [it, inserted] = index.emplace(key(px, py), static_cast<int32_t>(pairs.size()));
            if (inserted) pairs.push_back({px, py});
            out.adj[i].push_back(it->second);
        }
    }
    out.vertices = static_cast<int32_t>(pairs.size());
    return {std::move(out), 0};
}

StgSurjectionReport verify_stg_surjection(const RootedFlagGraph& p, const RootedFlagGraph& q,
                                          Exec mode) {
    if (p.graph.rank() != q.graph.rank())
        throw err_rank_mismatch(p.graph.rank(), q.graph.rank());
    const int n = p.graph.rank();
    const RootedStg tp = symmetry_type_graph_rooted(p, mode);
    const RootedStg tq = symmetry_type_graph_rooted(q, mode);
    const RootedStg pair_graph = mix_stg(tp, tq);

    // witness word per pair vertex (BFS first arrival, colors ascending)
    std::vector<ColorWord> words(pair_graph.stg.vertices);
    {
        std::vector<char> seen(pair_graph.stg.vertices, 0);
        std::vector<int32_t> queue = {pair_graph.base};
        seen[pair_graph.base] = 1;
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            const int32_t v = queue[qi];
            for (int i = 0; i < n; ++i) {
                const int32_t w = pair_graph.stg.adj[i][v];
                if (!seen[w]) {
                    seen[w] = 1;
                    words[w] = words[v];
                    words[w].push_back(i);
                    queue.push_back(w);
                }
            }
        }
    }

    const RootedFlagGraph m = mix_rooted(p, q);
    const RootedStg tm = symmetry_type_graph_rooted(m, mode);
    const OrbitPartition morbits = flag_orbits(m.graph, mode);

    std::vector<int32_t> image(pair_graph.stg.vertices);
    for (int32_t v = 0; v < pair_graph.stg.vertices; ++v)
        image[v] = morbits.orbit_of[apply_word(m.graph, m.base, words[v])];

    StgSurjectionReport report;
    report.pair_vertices = pair_graph.stg.vertices;
    report.mix_orbits = morbits.count;
    report.k = tp.stg.vertices;
    report.m = tq.stg.vertices;
    report.homomorphism = true;
    for (int32_t v = 0; v < pair_graph.stg.vertices && report.homomorphism; ++v)
        for (int i = 0; i < n; ++i)
            if (image[pair_graph.stg.adj[i][v]] != tm.stg.adj[i][image[v]]) {
                report.homomorphism = false;
                break;
            }
    std::vector<char> hit(morbits.count, 0);
    for (const int32_t v : image) hit[v] = 1;
    report.surjective = std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
    report.within_km =
        report.mix_orbits <= static_cast<int64_t>(report.k) * static_cast<int64_t>(report.m);
    return report;
}

UnrootedMixResult unrooted_mix_welldefined(const FlagGraph& p, const FlagGraph& q, Exec mode) {
    if (p.rank() != q.rank()) throw err_rank_mismatch(p.rank(), q.rank());
    const OrbitPartition op = flag_orbits(p, mode);
    const OrbitPartition oq = flag_orbits(q, mode);
    std::vector<int32_t> reps_p(op.count, -1), reps_q(oq.count, -1);
    for (int32_t f = 0; f < p.flags(); ++f)
        if (reps_p[op.orbit_of[f]] < 0) reps_p[op.orbit_of[f]] = f;
    for (int32_t f = 0; f < q.flags(); ++f)
        if (reps_q[oq.orbit_of[f]] < 0) reps_q[oq.orbit_of[f]] = f;

    std::vector<std::pair<int32_t, int32_t>> root_pairs;
    for (const int32_t rp : reps_p)
        for (const int32_t rq : reps_q) root_pairs.push_back({rp, rq});

    std::vector<std::optional<FlagGraph>> mixes(root_pairs.size());
    const auto npairs = static_cast<long>(root_pairs.size());
    if (mode == Exec::parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
        for (long i = 0; i < npairs; ++i)
            mixes[i] = mix_rooted({p, root_pairs[i].first}, {q, root_pairs[i].second}).graph;
    } else {
        for (long i = 0; i < npairs; ++i)
            mixes[i] = mix_rooted({p, root_pairs[i].first}, {q, root_pairs[i].second}).graph;
    }

    UnrootedMixResult result;
    const SymmetryTypeGraph tp = symmetry_type_graph(p, mode);
    const SymmetryTypeGraph tq = symmetry_type_graph(q, mode);
    {
        // connectivity of the full symmetry-type product graph
        const int32_t total = tp.vertices * tq.vertices;
        std::vector<char> seen(total, 0);
        std::vector<int32_t> stack = {0};
        seen[0] = 1;
        int32_t reached = 1;
        while (!stack.empty()) {
            const int32_t v = stack.back();
            stack.pop_back();
            const int32_t vx = v / tq.vertices, vy = v % tq.vertices;
            for (int i = 0; i < p.rank(); ++i) {
                const int32_t w = tp.adj[i][vx] * tq.vertices + tq.adj[i][vy];
                if (!seen[w]) {
                    seen[w] = 1;
                    ++reached;
                    stack.push_back(w);
                }
            }
        }
        result.stg_product_connected = reached == total;
    }

    for (size_t i = 1; i < mixes.size(); ++i) {
        if (!isomorphic_unrooted(*mixes[0], *mixes[i])) {
            result.well_defined = false;
            result.witness_a = std::move(mixes[0]);
            result.witness_b = std::move(mixes[i]);
            result.witness_roots_a = root_pairs[0];
            result.witness_roots_b = root_pairs[i];
            return result;
        }
    }
    result.well_defined = true;
    result.mixed = std::move(mixes[0]);
    return result;
}

}  // namespace polymix

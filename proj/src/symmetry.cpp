#include "polymix/symmetry.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

#include "polymix/face_poset.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace polymix {

namespace {

// Candidate images of flag 0 already reachable under the generators found
// so far need no propagation; the serial and parallel paths add successes
// in the same ascending order, so they produce identical generator lists.
std::vector<Perm> automorphism_generators(const FlagGraph& g, Exec mode, uint64_t& order_out) {
    const int32_t F = g.flags();
    std::vector<Perm> gens;
    std::vector<char> in_orbit(F, 0);
    std::vector<int32_t> orbit = {0};
    in_orbit[0] = 1;
    auto extend_orbit = [&]() {
        for (size_t qi = 0; qi < orbit.size(); ++qi)
            for (const Perm& p : gens) {
                const int32_t y = p.of(orbit[qi]);
                if (!in_orbit[y]) {
                    in_orbit[y] = 1;
                    orbit.push_back(y);
                }
            }
    };
    auto admit = [&](int32_t t, std::vector<int32_t>&& mapping) {
        if (in_orbit[t]) return;
        gens.push_back(Perm(std::move(mapping)));
        extend_orbit();
    };

    if (mode == Exec::serial) {
        for (int32_t t = 1; t < F; ++t) {
            if (in_orbit[t]) continue;
            auto prop = propagate_colors(g, 0, g, t);
            if (prop.mapping) admit(t, std::move(*prop.mapping));
        }
    } else {
        int32_t next = 1;
        while (next < F) {
            std::vector<int32_t> chunk;
            const int32_t want = std::clamp<int32_t>((F - next) / 8, 64, 4096);
            for (int32_t t = next; t < F && static_cast<int32_t>(chunk.size()) < want; ++t)
                if (!in_orbit[t]) chunk.push_back(t);
            next = chunk.empty() ? F : chunk.back() + 1;
            std::vector<std::optional<std::vector<int32_t>>> results(chunk.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
            for (long i = 0; i < static_cast<long>(chunk.size()); ++i)
                results[i] = propagate_colors(g, 0, g, chunk[i]).mapping;
            for (size_t i = 0; i < chunk.size(); ++i)
                if (results[i]) admit(chunk[i], std::move(*results[i]));
        }
    }
    order_out = orbit.size();
    return gens;
}

}  // namespace

PermGroup automorphism_group(const FlagGraph& g, Exec mode) {
    uint64_t order = 0;
    std::vector<Perm> gens = automorphism_generators(g, mode, order);
    return PermGroup(g.flags(), std::move(gens), order, -1);
}

OrbitPartition flag_orbits(const FlagGraph& g, Exec mode) {
    const PermGroup gamma = automorphism_group(g, mode);
    const int32_t F = g.flags();
    std::vector<int32_t> parent(F);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int32_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    for (const Perm& p : gamma.generators())
        for (int32_t f = 0; f < F; ++f) {
            const int32_t a = find(f), b = find(p.of(f));
            if (a != b) parent[std::max(a, b)] = std::min(a, b);
        }
    OrbitPartition out;
    out.orbit_of.assign(F, -1);
    for (int32_t f = 0; f < F; ++f) {
        const int32_t r = find(f);
        if (out.orbit_of[r] < 0) out.orbit_of[r] = out.count++;
        out.orbit_of[f] = out.orbit_of[r];
    }
    return out;
}

SymmetryTypeGraph symmetry_type_graph(const FlagGraph& g, Exec mode) {
    const OrbitPartition orbits = flag_orbits(g, mode);
    SymmetryTypeGraph st;
    st.rank = g.rank();
    st.vertices = orbits.count;
    st.adj.assign(g.rank(), std::vector<int32_t>(orbits.count, -1));
    for (int32_t f = 0; f < g.flags(); ++f)
        for (int i = 0; i < g.rank(); ++i)
            st.adj[i][orbits.orbit_of[f]] = orbits.orbit_of[g.adjacent(i, f)];
    return st;
}

RootedStg symmetry_type_graph_rooted(const RootedFlagGraph& g, Exec mode) {
    const OrbitPartition orbits = flag_orbits(g.graph, mode);
    SymmetryTypeGraph st;
    st.rank = g.graph.rank();
    st.vertices = orbits.count;
    st.adj.assign(st.rank, std::vector<int32_t>(orbits.count, -1));
    for (int32_t f = 0; f < g.graph.flags(); ++f)
        for (int i = 0; i < st.rank; ++i)
            st.adj[i][orbits.orbit_of[f]] = orbits.orbit_of[g.graph.adjacent(i, f)];
    return {std::move(st), orbits.orbit_of[g.base]};
}

std::vector<StgGenerator> stg_generators(const RootedFlagGraph& g, Exec mode) {
    const OrbitPartition orbits = flag_orbits(g.graph, mode);
    const int n = g.graph.rank();
    SymmetryTypeGraph st;
    st.rank = n;
    st.vertices = orbits.count;
    st.adj.assign(n, std::vector<int32_t>(orbits.count, -1));
    for (int32_t f = 0; f < g.graph.flags(); ++f)
        for (int i = 0; i < n; ++i)
            st.adj[i][orbits.orbit_of[f]] = orbits.orbit_of[g.graph.adjacent(i, f)];

    const int32_t root = orbits.orbit_of[g.base];
    // BFS spanning tree, children explored in ascending color order
    std::vector<int32_t> parent(st.vertices, -1), parent_color(st.vertices, -1);
    std::vector<int32_t> order;
    std::deque<int32_t> queue = {root};
    std::vector<char> seen(st.vertices, 0);
    seen[root] = 1;
    while (!queue.empty()) {
        const int32_t v = queue.front();
        queue.pop_front();
        order.push_back(v);
        for (int i = 0; i < n; ++i) {
            const int32_t w = st.adj[i][v];
            if (w != v && !seen[w]) {
                seen[w] = 1;
                parent[w] = v;
                parent_color[w] = i;
                queue.push_back(w);
            }
        }
    }
    auto tree_path = [&](int32_t v) {
        ColorWord w;
        while (parent[v] != -1) {
            w.push_back(parent_color[v]);
            v = parent[v];
        }
        std::reverse(w.begin(), w.end());
        return w;
    };

    std::vector<StgGenerator> out;
    std::set<ColorWord> seen_words;
    for (const int32_t v : order) {
        const ColorWord down = tree_path(v);
        for (int i = 0; i < n; ++i) {
            const int32_t w = st.adj[i][v];
            const bool tree_dart =
                (w != v) && ((parent[w] == v && parent_color[w] == i) ||
                             (parent[v] == w && parent_color[v] == i));
            if (tree_dart) continue;
            ColorWord word = down;
            word.push_back(i);
            const ColorWord back = tree_path(w);
            word.insert(word.end(), back.rbegin(), back.rend());
            if (!seen_words.insert(canonical_word(word)).second) continue;
            const int32_t target = apply_word(g.graph, g.base, word);
            auto prop = propagate_colors(g.graph, g.base, g.graph, target);
            if (!prop.mapping)
                throw Error("Internal", "closed orbit walk did not lift to an automorphism", {});
            out.push_back({std::move(word), Perm(std::move(*prop.mapping))});
        }
    }
    return out;
}

bool is_allowable(const SymmetryTypeGraph& t) {
    if (t.rank < 1 || t.vertices < 1) return false;
    for (int i = 0; i < t.rank; ++i) {
        if (static_cast<int32_t>(t.adj[i].size()) != t.vertices) return false;
        for (int32_t v = 0; v < t.vertices; ++v) {
            const int32_t w = t.adj[i][v];
            if (w < 0 || w >= t.vertices || t.adj[i][w] != v) return false;
        }
    }
    std::vector<char> seen(t.vertices, 0);
    std::vector<int32_t> stack = {0};
    seen[0] = 1;
    int32_t reached = 1;
    while (!stack.empty()) {
        const int32_t v = stack.back();
        stack.pop_back();
        for (int i = 0; i < t.rank; ++i) {
            const int32_t w = t.adj[i][v];
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    if (reached != t.vertices) return false;
    for (int i = 0; i < t.rank; ++i)
        for (int j = i + 2; j < t.rank; ++j)
            for (int32_t v = 0; v < t.vertices; ++v)
                if (t.adj[i][t.adj[j][v]] != t.adj[j][t.adj[i][v]]) return false;
    return true;
}

namespace {

std::vector<FlagGraph> split_components(const FlagGraph& g, int deleted_color, int color_shift) {
    const FacePartition part = faces_of(g, deleted_color);
    std::vector<FlagGraph> out;
    out.reserve(part.count());
    for (const auto& members : part.members) {
        std::vector<int32_t> local(g.flags(), -1);
        for (size_t i = 0; i < members.size(); ++i) local[members[i]] = static_cast<int32_t>(i);
        std::vector<std::vector<int32_t>> adj(g.rank() - 1,
                                              std::vector<int32_t>(members.size()));
        for (int i = 0; i < g.rank(); ++i) {
            if (i == deleted_color) continue;
            for (size_t fi = 0; fi < members.size(); ++fi)
                adj[i - color_shift][fi] = local[g.adjacent(i, members[fi])];
        }
        out.push_back(validate_maniplex(adj));
    }
    return out;
}

}  // namespace

std::vector<FlagGraph> extract_facets(const FlagGraph& g) {
    return split_components(g, g.rank() - 1, 0);
}

std::vector<FlagGraph> extract_vertex_figures(const FlagGraph& g) {
    return split_components(g, 0, 1);
}

AmalgamReport amalgam_orbit_divisibility(const FlagGraph& g, Exec mode) {
    if (!is_polytopal(g, mode).polytopal)
        throw Error("NotAnAmalgamation", "graph is not polytopal", {});
    const std::vector<FlagGraph> facets = extract_facets(g);
    for (size_t i = 1; i < facets.size(); ++i)
        if (!isomorphic_unrooted(facets[0], facets[i]))
            throw Error("NotAnAmalgamation", "facets are not mutually isomorphic", {});
    const std::vector<FlagGraph> vfigs = extract_vertex_figures(g);
    for (size_t i = 1; i < vfigs.size(); ++i)
        if (!isomorphic_unrooted(vfigs[0], vfigs[i]))
            throw Error("NotAnAmalgamation", "vertex-figures are not mutually isomorphic", {});
    AmalgamReport r;
    r.k1 = flag_orbits(facets[0], mode).count;
    r.k2 = flag_orbits(vfigs[0], mode).count;
    r.k3 = flag_orbits(g, mode).count;
    r.divides = (r.k3 % std::lcm(r.k1, r.k2)) == 0;
    return r;
}

std::string stg_to_dot(const SymmetryTypeGraph& t) {
    std::ostringstream os;
    os << "graph stg {\n  node [shape=circle];\n";
    for (int32_t v = 0; v < t.vertices; ++v)
        os << "  v" << v << " [label=\"" << v << "\"];\n";
    for (int i = 0; i < t.rank; ++i)
        for (int32_t v = 0; v < t.vertices; ++v) {
            const int32_t w = t.adj[i][v];
            if (w == v) {
                os << "  s" << v << "_" << i << " [shape=point, style=invis, label=\"\"];\n";
                os << "  v" << v << " -- s" << v << "_" << i << " [label=\"" << i << "\"];\n";
            } else if (v < w) {
                os << "  v" << v << " -- v" << w << " [label=\"" << i << "\"];\n";
            }
        }
    os << "}\n";
    return os.str();
}

}  // namespace polymix

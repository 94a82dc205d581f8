#include "polymix/constructions.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <tuple>

#include "polymix/symmetry.hpp"

namespace polymix {

FlagGraph polygon(int p) {
    if (p < 2) throw ValidationError("TooSmall", "polygon needs p >= 2", {{"p", std::to_string(p)}});
    const int32_t F = 2 * p;
    std::vector<std::vector<int32_t>> adj(2, std::vector<int32_t>(F));
    for (int k = 0; k < p; ++k) {
        const int32_t a = 2 * k, b = 2 * k + 1;
        adj[0][a] = b;
        adj[0][b] = a;
        adj[1][b] = (2 * k + 2) % F;
        adj[1][(2 * k + 2) % F] = b;
    }
    return validate_maniplex(adj);
}

FacePoset prism_poset(int p) {
    if (p < 2) throw ValidationError("TooSmall", "prism needs p >= 2", {{"p", std::to_string(p)}});
    std::vector<Face> faces;
    std::vector<std::pair<int32_t, int32_t>> covers;
    std::map<std::string, int32_t> ix;
    auto add = [&](int rank, const std::string& id) {
        ix[id] = static_cast<int32_t>(faces.size());
        faces.push_back({rank, id});
    };
    auto cover = [&](const std::string& lo, const std::string& hi) {
        covers.push_back({ix.at(lo), ix.at(hi)});
    };
    add(-1, "bot");
    for (int l = 0; l < 2; ++l)
        for (int i = 0; i < p; ++i) add(0, "v" + std::to_string(l) + "_" + std::to_string(i));
    for (int l = 0; l < 2; ++l)
        for (int i = 0; i < p; ++i) add(1, "h" + std::to_string(l) + "_" + std::to_string(i));
    for (int i = 0; i < p; ++i) add(1, "e" + std::to_string(i));
    add(2, "gon0");
    add(2, "gon1");
    for (int i = 0; i < p; ++i) add(2, "sq" + std::to_string(i));
    add(3, "top");

    auto vs = [](int l, int i) { return "v" + std::to_string(l) + "_" + std::to_string(i); };
    auto hs = [](int l, int i) { return "h" + std::to_string(l) + "_" + std::to_string(i); };
    for (int l = 0; l < 2; ++l)
        for (int i = 0; i < p; ++i) {
            cover("bot", vs(l, i));
            cover(vs(l, i), hs(l, i));
            cover(vs(l, (i + 1) % p), hs(l, i));
            cover(vs(l, i), "e" + std::to_string(i));
            cover(hs(l, i), "gon" + std::to_string(l));
            cover(hs(l, i), "sq" + std::to_string(i));
        }
    for (int i = 0; i < p; ++i) {
        cover("e" + std::to_string(i), "sq" + std::to_string(i));
        cover("e" + std::to_string(i), "sq" + std::to_string((i - 1 + p) % p));
    }
    cover("gon0", "top");
    cover("gon1", "top");
    for (int i = 0; i < p; ++i) cover("sq" + std::to_string(i), "top");
    return FacePoset(3, std::move(faces), std::move(covers));
}

FlagGraph prism_over(const FlagGraph& gon) {
    if (gon.rank() != 2) throw err_rank_mismatch(gon.rank(), 2);
    return flag_graph_of_poset(prism_poset(gon.flags() / 2));
}

namespace {

// Hermite form of the lattice spanned by (b,c) and (-c,b): basis (e,0) and
// (f,g) with e*g = b^2+c^2.
struct Lattice {
    int64_t e, f, g;

    std::pair<int64_t, int64_t> reduce(int64_t x, int64_t y) const {
        int64_t ry = ((y % g) + g) % g;
        const int64_t k = (y - ry) / g;
        int64_t rx = ((x - k * f) % e + e) % e;
        return {rx, ry};
    }
};

// iterative extended gcd: returns (g, x, y) with a*x + b*y = g
std::tuple<int64_t, int64_t, int64_t> egcd(int64_t a, int64_t b) {
    int64_t x0 = 1, y0 = 0, x1 = 0, y1 = 1;
    while (b != 0) {
        const int64_t q = a / b;
        std::tie(a, b) = std::make_pair(b, a - q * b);
        std::tie(x0, x1) = std::make_pair(x1, x0 - q * x1);
        std::tie(y0, y1) = std::make_pair(y1, y0 - q * y1);
    }
    return {a, x0, y0};
}

Lattice lattice_of(int b, int c) {
    const int64_t n = static_cast<int64_t>(b) * b + static_cast<int64_t>(c) * c;
    const int64_t d = std::gcd(static_cast<int64_t>(b), static_cast<int64_t>(c));
    // Bezout: m*c + n2*b = d
    auto [g2, m, n2] = egcd(static_cast<int64_t>(c), static_cast<int64_t>(b));
    if (g2 < 0) {
        g2 = -g2;
        m = -m;
        n2 = -n2;
    }
    Lattice L;
    L.e = n / d;
    L.g = d;
    L.f = ((m * b - n2 * c) % L.e + L.e) % L.e;
    return L;
}

}  // namespace

std::vector<std::vector<int32_t>> toroid_44_adjacency(int b, int c) {
    if (b == 0 && c == 0) throw ValidationError("DegenerateLattice", "(b,c) must not be (0,0)", {});
    const Lattice L = lattice_of(b, c);
    const int64_t N = L.e * L.g;
    // squares of the fundamental domain in lexicographic (x,y) order
    std::vector<std::pair<int64_t, int64_t>> squares;
    std::map<std::pair<int64_t, int64_t>, int32_t> sq_index;
    for (int64_t x = 0; x < L.e; ++x)
        for (int64_t y = 0; y < L.g; ++y) {
            squares.push_back({x, y});
            sq_index[{x, y}] = static_cast<int32_t>(squares.size()) - 1;
        }
    auto sq_of = [&](int64_t x, int64_t y) {
        const auto r = L.reduce(x, y);
        return sq_index.at(r);
    };
    const int32_t F = static_cast<int32_t>(8 * N);
    auto flag = [&](int32_t s, int k, int t) { return s * 8 + k * 2 + t; };
    auto corner = [&](int32_t s, int k) {
        const auto [x, y] = squares[s];
        switch (k) {
            case 0: return std::pair<int64_t, int64_t>{x, y};
            case 1: return std::pair<int64_t, int64_t>{x + 1, y};
            case 2: return std::pair<int64_t, int64_t>{x + 1, y + 1};
            default: return std::pair<int64_t, int64_t>{x, y + 1};
        }
    };
    // edge at (square, ccw index kk): kk=0 bottom h(x,y), 1 right v(x+1,y),
    // 2 top h(x,y+1), 3 left v(x,y); key = (is_vertical, reduced base point)
    auto edge_key = [&](int32_t s, int k, int t) {
        const auto [x, y] = squares[s];
        const int kk = (t == 0) ? k : (k + 3) % 4;
        int64_t px = x, py = y;
        bool vertical = false;
        switch (kk) {
            case 0: break;
            case 1: px = x + 1; vertical = true; break;
            case 2: py = y + 1; break;
            default: vertical = true; break;
        }
        const auto r = L.reduce(px, py);
        return std::tuple<bool, int64_t, int64_t>{vertical, r.first, r.second};
    };
    std::map<std::tuple<int64_t, int64_t, bool, int64_t, int64_t, int32_t>, int32_t> triple;
    for (int32_t s = 0; s < static_cast<int32_t>(N); ++s)
        for (int k = 0; k < 4; ++k)
            for (int t = 0; t < 2; ++t) {
                const auto [vx, vy] = corner(s, k);
                const auto v = L.reduce(vx, vy);
                const auto [vert, ex, ey] = edge_key(s, k, t);
                triple[{v.first, v.second, vert, ex, ey, s}] = flag(s, k, t);
            }
    std::vector<std::vector<int32_t>> adj(3, std::vector<int32_t>(F));
    for (int32_t s = 0; s < static_cast<int32_t>(N); ++s)
        for (int k = 0; k < 4; ++k)
            for (int t = 0; t < 2; ++t) {
                const int32_t i = flag(s, k, t);
                adj[1][i] = flag(s, k, 1 - t);
                adj[0][i] = (t == 0) ? flag(s, (k + 1) % 4, 1) : flag(s, (k + 3) % 4, 0);
                const auto [vert, ex, ey] = edge_key(s, k, t);
                // the two squares on an edge: h(x,y) borders (x,y) and
                // (x,y-1); v(x,y) borders (x,y) and (x-1,y)
                const int32_t s1 = sq_of(ex, ey);
                const int32_t s2 = vert ? sq_of(ex - 1, ey) : sq_of(ex, ey - 1);
                const int32_t other = (s1 == s) ? s2 : s1;
                const auto [vx, vy] = corner(s, k);
                const auto v = L.reduce(vx, vy);
                adj[2][i] = triple.at({v.first, v.second, vert, ex, ey, other});
            }
    return adj;
}

FlagGraph toroid_44(int b, int c) { return validate_maniplex(toroid_44_adjacency(b, c)); }

FacePoset cube_stack_poset(int m) {
    if (m < 1) throw ValidationError("TooSmall", "cube stack needs m >= 1", {{"m", std::to_string(m)}});
    std::vector<Face> faces;
    std::vector<std::pair<int32_t, int32_t>> covers;
    std::map<std::string, int32_t> ix;
    auto add = [&](int rank, const std::string& id) {
        ix[id] = static_cast<int32_t>(faces.size());
        faces.push_back({rank, id});
    };
    auto cover = [&](const std::string& lo, const std::string& hi) {
        covers.push_back({ix.at(lo), ix.at(hi)});
    };
    auto vs = [](int i, int c4) { return "v" + std::to_string(i) + "_" + std::to_string(c4); };
    auto hs = [](int i, int c4) { return "h" + std::to_string(i) + "_" + std::to_string(c4); };
    auto es = [](int i, int c4) { return "e" + std::to_string(i) + "_" + std::to_string(c4); };
    auto ss = [](int i, int c4) { return "s" + std::to_string(i) + "_" + std::to_string(c4); };
    add(-1, "bot");
    for (int i = 0; i <= m; ++i)
        for (int c4 = 0; c4 < 4; ++c4) add(0, vs(i, c4));
    for (int i = 0; i <= m; ++i)
        for (int c4 = 0; c4 < 4; ++c4) add(1, hs(i, c4));  // ring edges of layer i
    for (int i = 0; i < m; ++i)
        for (int c4 = 0; c4 < 4; ++c4) add(1, es(i, c4));  // vertical edges
    add(2, "bottom");
    add(2, "topface");
    for (int i = 0; i < m; ++i)
        for (int c4 = 0; c4 < 4; ++c4) add(2, ss(i, c4));  // side squares
    add(3, "top");

    for (int i = 0; i <= m; ++i)
        for (int c4 = 0; c4 < 4; ++c4) {
            cover("bot", vs(i, c4));
            cover(vs(i, c4), hs(i, c4));
            cover(vs(i, (c4 + 1) % 4), hs(i, c4));
            if (i > 0) cover(vs(i, c4), es(i - 1, c4));
            if (i < m) cover(vs(i, c4), es(i, c4));
            cover(hs(i, c4), i == 0 ? "bottom" : ss(i - 1, c4));
            cover(hs(i, c4), i == m ? "topface" : ss(i, c4));
        }
    for (int i = 0; i < m; ++i)
        for (int c4 = 0; c4 < 4; ++c4) {
            cover(es(i, c4), ss(i, c4));
            cover(es(i, c4), ss(i, (c4 + 3) % 4));
            cover(ss(i, c4), "top");
        }
    cover("bottom", "top");
    cover("topface", "top");
    return FacePoset(3, std::move(faces), std::move(covers));
}

FlagGraph cube_stack(int m) { return flag_graph_of_poset(cube_stack_poset(m)); }

FlagGraph trivial_extension(const FlagGraph& g) {
    const int n = g.rank();
    const int32_t F = g.flags();
    std::vector<std::vector<int32_t>> adj(n + 1, std::vector<int32_t>(2 * F));
    for (int32_t f = 0; f < F; ++f) {
        for (int i = 0; i < n; ++i) {
            adj[i][f] = g.adjacent(i, f);
            adj[i][f + F] = g.adjacent(i, f) + F;
        }
        adj[n][f] = f + F;
        adj[n][f + F] = f;
    }
    return validate_maniplex(adj);
}

FlagGraph two_power(const FlagGraph& g, uint64_t budget_flags) {
    const int n = g.rank();
    const int32_t F = g.flags();
    const FacePartition verts = faces_of(g, 0);
    const int m = verts.count();
    if (m >= 63 || (static_cast<uint64_t>(F) << m) > budget_flags)
        throw err_budget_exceeded("two_power flag count", budget_flags);
    const int64_t M = int64_t{1} << m;
    const int64_t F2 = F * M;
    std::vector<std::vector<int32_t>> adj(n + 1, std::vector<int32_t>(F2));
    for (int32_t f = 0; f < F; ++f) {
        const int vertex = verts.component_of[f];
        for (int64_t x = 0; x < M; ++x) {
            const int64_t fi = f * M + x;
            adj[0][fi] = static_cast<int32_t>(f * M + (x ^ (int64_t{1} << vertex)));
            for (int i = 0; i < n; ++i)
                adj[i + 1][fi] = static_cast<int32_t>(g.adjacent(i, f) * M + x);
        }
    }
    return validate_maniplex(adj);
}

FlagGraph shift_stg_iterate(const FlagGraph& g, int steps, ShiftStep step, uint64_t budget_flags) {
    FlagGraph cur = g;
    for (int s = 0; s < steps; ++s) {
        const SymmetryTypeGraph before = symmetry_type_graph(cur);
        FlagGraph next = (step == ShiftStep::two_power)
                             ? two_power(cur, budget_flags)
                             : dual(trivial_extension(dual(cur)));
        if (static_cast<uint64_t>(next.flags()) > budget_flags)
            throw err_budget_exceeded("shifted flag count", budget_flags);
        const SymmetryTypeGraph after = symmetry_type_graph(next);
        SymmetryTypeGraph expected;
        expected.rank = before.rank + 1;
        expected.vertices = before.vertices;
        expected.adj.resize(before.rank + 1);
        expected.adj[0].resize(before.vertices);
        for (int32_t v = 0; v < before.vertices; ++v) expected.adj[0][v] = v;
        for (int i = 0; i < before.rank; ++i) expected.adj[i + 1] = before.adj[i];
        if (!(after == expected))
            throw Error("StgContract",
                        "shift step did not add 0-semi-edges and shift labels up by one", {});
        cur = std::move(next);
    }
    return cur;
}

}  // namespace polymix

#pragma once

// Independent oracles used to freeze expected values. Everything here is
// deliberately brute force and shares no code path with the library
// implementations it checks.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

#include "polymix/face_poset.hpp"
#include "polymix/flag_graph.hpp"

namespace oracles {

// ---- gaussian integer lattice-lcm oracle for torus maps ----

struct Gint {
    long long re = 0, im = 0;

    long long norm() const { return re * re + im * im; }
    bool is_zero() const { return re == 0 && im == 0; }

    Gint operator*(const Gint& o) const { return {re * o.re - im * o.im, re * o.im + im * o.re}; }
    Gint operator-(const Gint& o) const { return {re - o.re, im - o.im}; }
};

// rounded division a/b in Z[i]
inline Gint gdiv(const Gint& a, const Gint& b) {
    const long long n = b.norm();
    const double qre = static_cast<double>(a.re * b.re + a.im * b.im) / static_cast<double>(n);
    const double qim = static_cast<double>(a.im * b.re - a.re * b.im) / static_cast<double>(n);
    return {static_cast<long long>(std::llround(qre)), static_cast<long long>(std::llround(qim))};
}

inline Gint ggcd(Gint a, Gint b) {
    while (!b.is_zero()) {
        const Gint q = gdiv(a, b);
        const Gint r = a - q * b;
        a = b;
        b = r;
    }
    return a;
}

// |X({4,4}_(b,c))| and |Mon| from the lattice lcm of b+ci and its conjugate:
// the minimal regular cover is the torus map on the intersection lattice.
struct ChiralityOracle {
    long long x_order;
    long long mon_order;
};

inline ChiralityOracle toroid_chirality(int b, int c) {
    const Gint beta{b, c}, bbar{b, -c};
    const Gint g = ggcd(beta, bbar);
    // N(lcm) = N(beta) N(bbar) / N(gcd); the cover has 8 N(lcm) flags
    const long long n_lcm = beta.norm() / g.norm() * bbar.norm();
    return {n_lcm / beta.norm(), 8 * n_lcm};
}

// ---- brute-force group order by closure ----

inline uint64_t closure_order(const std::vector<std::vector<int32_t>>& gens, uint64_t cap) {
    if (gens.empty()) return 1;
    const size_t deg = gens[0].size();
    std::vector<int32_t> ident(deg);
    std::iota(ident.begin(), ident.end(), 0);
    std::set<std::vector<int32_t>> seen = {ident};
    std::vector<std::vector<int32_t>> frontier = {ident};
    while (!frontier.empty()) {
        std::vector<std::vector<int32_t>> next;
        for (const auto& x : frontier) {
            for (const auto& g : gens) {
                std::vector<int32_t> y(deg);
                for (size_t i = 0; i < deg; ++i) y[i] = g[x[i]];
                if (seen.insert(y).second) {
                    if (seen.size() > cap) return cap + 1;
                    next.push_back(std::move(y));
                }
            }
        }
        frontier = std::move(next);
    }
    return seen.size();
}

// ---- graph automorphisms of a 1-skeleton, brute force over vertex maps ----

inline uint64_t skeleton_automorphism_count(int vertices,
                                            std::vector<std::pair<int, int>> edges) {
    for (auto& [a, b] : edges)
        if (a > b) std::swap(a, b);
    std::sort(edges.begin(), edges.end());
    std::vector<int> perm(vertices);
    std::iota(perm.begin(), perm.end(), 0);
    uint64_t count = 0;
    do {
        bool ok = true;
        for (const auto& [a, b] : edges) {
            int pa = perm[a], pb = perm[b];
            if (pa > pb) std::swap(pa, pb);
            if (!std::binary_search(edges.begin(), edges.end(), std::make_pair(pa, pb))) {
                ok = false;
                break;
            }
        }
        if (ok) ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return count;
}

// ---- exhaustive component-intersection-property oracle ----

// Checks every family of faces with distinct ranks, with no pruning: if the
// family is pairwise intersecting it must have nonempty connected
// intersection.
inline bool cip_exhaustive(const polymix::FlagGraph& g) {
    const int n = g.rank();
    std::vector<polymix::FacePartition> parts;
    for (int i = 0; i < n; ++i) parts.push_back(polymix::faces_of(g, i));

    auto intersect = [](const std::vector<int32_t>& a, const std::vector<int32_t>& b) {
        std::vector<int32_t> out;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
        return out;
    };
    auto connected = [&](const std::vector<int32_t>& flags, const std::vector<int>& ranks) {
        if (flags.empty()) return false;
        std::set<int32_t> inside(flags.begin(), flags.end());
        std::set<int32_t> seen = {flags[0]};
        std::vector<int32_t> stack = {flags[0]};
        while (!stack.empty()) {
            const int32_t f = stack.back();
            stack.pop_back();
            for (int i = 0; i < n; ++i) {
                if (std::find(ranks.begin(), ranks.end(), i) != ranks.end()) continue;
                const int32_t t = g.adjacent(i, f);
                if (inside.count(t) && !seen.count(t)) {
                    seen.insert(t);
                    stack.push_back(t);
                }
            }
        }
        return seen.size() == flags.size();
    };

    // iterate over every nonempty subset of ranks and every face tuple
    for (int mask = 1; mask < (1 << n); ++mask) {
        std::vector<int> ranks;
        for (int i = 0; i < n; ++i)
            if (mask & (1 << i)) ranks.push_back(i);
        if (ranks.size() < 2) continue;
        std::vector<int> pick(ranks.size(), 0);
        while (true) {
            bool pairwise = true;
            for (size_t a = 0; a < ranks.size() && pairwise; ++a)
                for (size_t b = a + 1; b < ranks.size(); ++b) {
                    if (intersect(parts[ranks[a]].members[pick[a]],
                                  parts[ranks[b]].members[pick[b]])
                            .empty()) {
                        pairwise = false;
                        break;
                    }
                }
            if (pairwise) {
                std::vector<int32_t> meet = parts[ranks[0]].members[pick[0]];
                for (size_t a = 1; a < ranks.size(); ++a)
                    meet = intersect(meet, parts[ranks[a]].members[pick[a]]);
                if (!connected(meet, ranks)) return false;
            }
            size_t pos = 0;
            while (pos < ranks.size()) {
                if (++pick[pos] < parts[ranks[pos]].count()) break;
                pick[pos] = 0;
                ++pos;
            }
            if (pos == ranks.size()) break;
        }
    }
    return true;
}

// ---- cube poset built by hand ----

inline polymix::FacePoset cube_poset() {
    using polymix::Face;
    std::vector<Face> faces;
    std::vector<std::pair<int32_t, int32_t>> covers;
    std::map<std::string, int32_t> ix;
    auto add = [&](int rank, const std::string& id) {
        ix[id] = static_cast<int32_t>(faces.size());
        faces.push_back({rank, id});
    };
    auto cov = [&](const std::string& lo, const std::string& hi) {
        covers.push_back({ix.at(lo), ix.at(hi)});
    };
    auto vname = [](int x, int y, int z) {
        return "v" + std::to_string(x) + std::to_string(y) + std::to_string(z);
    };
    add(-1, "bot");
    for (int v = 0; v < 8; ++v) add(0, vname(v & 1, (v >> 1) & 1, (v >> 2) & 1));
    // edges along each axis
    std::vector<std::pair<std::string, std::pair<int, int>>> edges;  // id -> endpoints
    int eid = 0;
    for (int v = 0; v < 8; ++v)
        for (int d = 0; d < 3; ++d) {
            if (v & (1 << d)) continue;
            const int w = v | (1 << d);
            add(1, "e" + std::to_string(eid));
            edges.push_back({"e" + std::to_string(eid), {v, w}});
            ++eid;
        }
    // faces: fix one axis to a value
    for (int d = 0; d < 3; ++d)
        for (int val = 0; val < 2; ++val) add(2, "f" + std::to_string(d) + std::to_string(val));
    add(3, "top");
    for (int v = 0; v < 8; ++v) cov("bot", vname(v & 1, (v >> 1) & 1, (v >> 2) & 1));
    for (const auto& [id, vw] : edges) {
        const auto [v, w] = vw;
        cov(vname(v & 1, (v >> 1) & 1, (v >> 2) & 1), id);
        cov(vname(w & 1, (w >> 1) & 1, (w >> 2) & 1), id);
        for (int d = 0; d < 3; ++d) {
            if ((v & (1 << d)) == (w & (1 << d)))
                cov(id, "f" + std::to_string(d) + std::to_string((v >> d) & 1));
        }
    }
    for (int d = 0; d < 3; ++d)
        for (int val = 0; val < 2; ++val) cov("f" + std::to_string(d) + std::to_string(val), "top");
    return polymix::FacePoset(3, std::move(faces), std::move(covers));
}

}  // namespace oracles

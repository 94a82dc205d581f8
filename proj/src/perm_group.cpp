#include "polymix/perm_group.hpp"

#include <algorithm>

namespace polymix {

// Stabilizer chain with Schreier-vector transversals. New base points are
// the smallest point moved by the offending element. When the group order
// is known in advance the builder stops processing Schreier generators once
// the transversal product reaches it.
struct PermGroup::ChainCache {
    struct Level {
        int32_t base = 0;
        std::vector<char> in_orbit;
        std::vector<int32_t> parent;
        std::vector<int32_t> parent_gen;
        std::vector<int32_t> orbit_points;
        std::vector<Perm> gens;
    };

    int degree = 0;
    uint64_t known_order = 0;
    bool complete = false;
    std::vector<Level> levels;

    Perm coset_rep(size_t lvl, int32_t t) const {
        const Level& L = levels[lvl];
        std::vector<int32_t> path;
        while (t != L.base) {
            path.push_back(L.parent_gen[t]);
            t = L.parent[t];
        }
        Perm rep(degree);
        for (auto it = path.rbegin(); it != path.rend(); ++it) rep = rep * L.gens[*it];
        return rep;
    }

    void new_level(int32_t base) {
        Level L;
        L.base = base;
        L.in_orbit.assign(degree, 0);
        L.parent.assign(degree, -1);
        L.parent_gen.assign(degree, -1);
        L.in_orbit[base] = 1;
        L.orbit_points.push_back(base);
        levels.push_back(std::move(L));
    }

    bool reached_known_order() {
        if (known_order == 0 || complete) return complete;
        unsigned __int128 prod = 1;
        for (const Level& L : levels) prod *= L.orbit_points.size();
        if (prod == known_order) complete = true;
        return complete;
    }

    void add(Perm p, size_t lvl) {
        if (complete || p.is_identity()) return;
        if (lvl == levels.size()) {
            int32_t moved = 0;
            while (p.of(moved) == moved) ++moved;
            new_level(moved);
        }
        {
            const Level& L = levels[lvl];
            const int32_t t = p.of(L.base);
            if (L.in_orbit[t]) {
                add(p * coset_rep(lvl, t).inverse(), lvl + 1);
                return;
            }
        }
        Level& L = levels[lvl];
        const size_t old_count = L.orbit_points.size();
        const size_t new_gen = L.gens.size();
        L.gens.push_back(std::move(p));
        // extend the orbit: the new generator from old points, then BFS
        for (size_t qi = 0; qi < old_count; ++qi) {
            const int32_t x = L.orbit_points[qi];
            const int32_t y = L.gens[new_gen].of(x);
            if (!L.in_orbit[y]) {
                L.in_orbit[y] = 1;
                L.parent[y] = x;
                L.parent_gen[y] = static_cast<int32_t>(new_gen);
                L.orbit_points.push_back(y);
            }
        }
        for (size_t qi = old_count; qi < L.orbit_points.size(); ++qi) {
            const int32_t x = L.orbit_points[qi];
            for (size_t gi = 0; gi < L.gens.size(); ++gi) {
                const int32_t y = L.gens[gi].of(x);
                if (!L.in_orbit[y]) {
                    L.in_orbit[y] = 1;
                    L.parent[y] = x;
                    L.parent_gen[y] = static_cast<int32_t>(gi);
                    L.orbit_points.push_back(y);
                }
            }
        }
        if (reached_known_order()) return;
        // Schreier generators for pairs not seen before: (old point, new
        // generator) and (new point, any generator). Old coset reps are
        // unchanged by the extension.
        auto schreier = [&](int32_t x, size_t gi) {
            if (complete) return;
            const Perm& s = levels[lvl].gens[gi];
            const Perm u = coset_rep(lvl, x) * s;
            add(u * coset_rep(lvl, s.of(x)).inverse(), lvl + 1);
        };
        for (size_t qi = 0; qi < old_count; ++qi) schreier(levels[lvl].orbit_points[qi], new_gen);
        for (size_t qi = old_count; qi < levels[lvl].orbit_points.size(); ++qi) {
            const int32_t x = levels[lvl].orbit_points[qi];
            for (size_t gi = 0; gi < levels[lvl].gens.size(); ++gi) schreier(x, gi);
        }
    }
};

PermGroup::PermGroup(int degree, std::vector<Perm> generators, uint64_t known_order,
                     int32_t forced_first_base)
    : degree_(degree),
      generators_(std::move(generators)),
      known_order_(known_order),
      forced_first_base_(forced_first_base) {
    for (const Perm& g : generators_) {
        if (g.degree() != degree_)
            throw Error("DegreeMismatch", "generator degree does not match group degree", {});
    }
}

PermGroup::PermGroup(int degree, std::vector<Perm> generators)
    : PermGroup(degree, std::move(generators), 0, -1) {}

const PermGroup::ChainCache& PermGroup::chain() const {
    if (!chain_) {
        auto cache = std::make_shared<ChainCache>();
        cache->degree = degree_;
        cache->known_order = known_order_;
        if (forced_first_base_ >= 0) cache->new_level(forced_first_base_);
        // Once the transversal product reaches an exact known order the
        // chain already describes the whole group and later generators
        // need no sifting.
        for (const Perm& g : generators_) cache->add(g, 0);
        chain_ = std::move(cache);
    }
    return *chain_;
}

uint64_t PermGroup::order() const {
    unsigned __int128 prod = 1;
    for (const auto& L : chain().levels) {
        prod *= L.orbit_points.size();
        if (prod > static_cast<unsigned __int128>(UINT64_MAX)) return UINT64_MAX;
    }
    return static_cast<uint64_t>(prod);
}

bool PermGroup::order_exceeds(uint64_t bound) const {
    unsigned __int128 prod = 1;
    for (const auto& L : chain().levels) {
        prod *= L.orbit_points.size();
        if (prod > bound) return true;
    }
    return false;
}

std::vector<int32_t> PermGroup::orbit(int32_t point) const {
    if (point < 0 || point >= degree_) throw err_point_out_of_range(point, degree_);
    std::vector<char> seen(degree_, 0);
    std::vector<int32_t> out = {point};
    seen[point] = 1;
    for (size_t qi = 0; qi < out.size(); ++qi) {
        for (const Perm& g : generators_) {
            const int32_t y = g.of(out[qi]);
            if (!seen[y]) {
                seen[y] = 1;
                out.push_back(y);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

PermGroup PermGroup::point_stabilizer(int32_t point) const {
    if (point < 0 || point >= degree_) throw err_point_out_of_range(point, degree_);
    const uint64_t n = order();
    PermGroup rooted(degree_, generators_, n == UINT64_MAX ? 0 : n, point);
    const auto& levels = rooted.chain().levels;
    std::vector<Perm> gens;
    for (size_t lvl = 1; lvl < levels.size(); ++lvl)
        gens.insert(gens.end(), levels[lvl].gens.begin(), levels[lvl].gens.end());
    return PermGroup(degree_, std::move(gens));
}

bool PermGroup::contains(const Perm& p) const {
    if (p.degree() != degree_) return false;
    Perm cur = p;
    const auto& c = chain();
    for (size_t lvl = 0; lvl < c.levels.size(); ++lvl) {
        if (cur.is_identity()) return true;
        const int32_t t = cur.of(c.levels[lvl].base);
        if (!c.levels[lvl].in_orbit[t]) return false;
        cur = cur * c.coset_rep(lvl, t).inverse();
    }
    return cur.is_identity();
}

bool PermGroup::contains_subgroup(const PermGroup& h) const {
    for (const Perm& g : h.generators())
        if (!contains(g)) return false;
    return true;
}

bool PermGroup::same_subgroup(const PermGroup& h) const {
    return degree_ == h.degree_ && order() == h.order() && contains_subgroup(h);
}

std::vector<Perm> PermGroup::elements(uint64_t bound) const {
    if (order_exceeds(bound)) throw err_too_large("group order", bound);
    const auto& c = chain();
    std::vector<Perm> out = {Perm(degree_)};
    for (size_t lvl = c.levels.size(); lvl-- > 0;) {
        std::vector<Perm> reps;
        reps.reserve(c.levels[lvl].orbit_points.size());
        for (const int32_t x : c.levels[lvl].orbit_points) reps.push_back(c.coset_rep(lvl, x));
        std::vector<Perm> next;
        next.reserve(out.size() * reps.size());
        for (const Perm& h : out)
            for (const Perm& u : reps) next.push_back(h * u);
        out = std::move(next);
    }
    return out;
}

PermGroup PermGroup::normalizer_bruteforce(const PermGroup& h, uint64_t bound) const {
    if (!contains_subgroup(h)) throw Error("NotSubgroup", "h is not contained in the group", {});
    if (order_exceeds(bound)) throw err_too_large("group order", bound);
    std::vector<Perm> gens;
    PermGroup n = PermGroup::trivial(degree_);
    for (const Perm& x : elements(bound)) {
        const Perm xi = x.inverse();
        bool ok = true;
        for (const Perm& s : h.generators()) {
            if (!h.contains(xi * s * x)) {
                ok = false;
                break;
            }
        }
        if (ok && !n.contains(x)) {
            gens.push_back(x);
            n = PermGroup(degree_, gens);
        }
    }
    return n;
}

Perm GroupHom::apply(const Perm& g) const {
    std::vector<int32_t> img(target_degree_, -1);
    for (int32_t x = 0; x < source_degree_; ++x) {
        const int32_t from = point_map_[x];
        const int32_t to = point_map_[g.of(x)];
        if (img[from] == -1) {
            img[from] = to;
        } else if (img[from] != to) {
            throw Error("HomUndefined", "point surjection does not intertwine the actions", {});
        }
    }
    for (int32_t y = 0; y < target_degree_; ++y)
        if (img[y] == -1)
            throw Error("HomUndefined", "point surjection misses a target point", {});
    return Perm(std::move(img));
}

}  // namespace polymix

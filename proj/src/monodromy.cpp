#include "polymix/monodromy.hpp"

#include <algorithm>
#include <map>

#include "polymix/symmetry.hpp"

namespace polymix {

MonodromyGroup monodromy_group(const FlagGraph& g) {
    std::vector<Perm> conn;
    conn.reserve(g.rank());
    for (int i = 0; i < g.rank(); ++i) conn.push_back(Perm(g.adjacency()[i]));
    PermGroup group(g.flags(), conn);
    return {std::move(group), std::move(conn)};
}

PermGroup flag_stabilizer_image(const MonodromyGroup& m, int32_t flag) {
    return m.group.point_stabilizer(flag);
}

bool same_orbit_by_stabilizer(const MonodromyGroup& m, int32_t f1, int32_t f2) {
    return flag_stabilizer_image(m, f1).same_subgroup(flag_stabilizer_image(m, f2));
}

RootedFlagGraph minimal_regular_cover(const FlagGraph& g, uint64_t budget_group) {
    const int n = g.rank();
    std::vector<Perm> conn;
    for (int i = 0; i < n; ++i) conn.push_back(Perm(g.adjacency()[i]));
    std::map<std::vector<int32_t>, int32_t> index;
    std::vector<Perm> elements = {Perm(g.flags())};
    index[elements[0].images()] = 0;
    std::vector<std::vector<int32_t>> adj(n);
    for (size_t qi = 0; qi < elements.size(); ++qi) {
        const Perm x = elements[qi];  // copy: elements reallocates below
        for (int i = 0; i < n; ++i) {
            const Perm y = x * conn[i];
            auto [it, inserted] = index.emplace(y.images(), static_cast<int32_t>(elements.size()));
            if (inserted) {
                if (elements.size() >= budget_group)
                    throw err_too_large("monodromy group order", budget_group);
                elements.push_back(y);
            }
            adj[i].push_back(it->second);
        }
    }
    return {validate_maniplex(adj), 0};
}

PermGroup chirality_group(const FlagGraph& g, Exec mode) {
    const OrbitPartition orbits = flag_orbits(g, mode);
    if (orbits.count != 2)
        throw Error("NotTwoOrbit",
                    "graph has " + std::to_string(orbits.count) + " flag orbits, need 2",
                    {{"orbits", std::to_string(orbits.count)}});
    return monodromy_group(g).group.point_stabilizer(0);
}

Sggi make_sggi(int rank, int degree, std::vector<Perm> generators) {
    if (static_cast<int>(generators.size()) != rank)
        throw Error("NotSggi", "need one generator per color", {});
    for (int i = 0; i < rank; ++i) {
        const Perm& p = generators[i];
        if (p.degree() != degree || p.is_identity() || !(p * p).is_identity())
            throw Error("NotSggi", "generator " + std::to_string(i) + " is not an involution",
                        {{"i", std::to_string(i)}});
    }
    for (int i = 0; i < rank; ++i)
        for (int j = i + 2; j < rank; ++j) {
            const Perm comm = generators[i] * generators[j] * generators[i] * generators[j];
            if (!comm.is_identity())
                throw Error("NotSggi",
                            "generators " + std::to_string(i) + "," + std::to_string(j) +
                                " do not commute",
                            {{"i", std::to_string(i)}, {"j", std::to_string(j)}});
        }
    return {rank, degree, std::move(generators)};
}

Sggi sggi_of_monodromy(const MonodromyGroup& m) {
    return make_sggi(static_cast<int>(m.connection.size()), m.group.degree(), m.connection);
}

StringCReport is_string_c_group(const Sggi& s, uint64_t budget) {
    const int n = s.rank;
    const int masks = 1 << n;
    std::vector<PermGroup> sub;
    sub.reserve(masks);
    for (int mask = 0; mask < masks; ++mask) {
        std::vector<Perm> gens;
        for (int i = 0; i < n; ++i)
            if (mask & (1 << i)) gens.push_back(s.generators[i]);
        sub.push_back(PermGroup(s.degree, std::move(gens)));
    }
    std::vector<std::vector<Perm>> cached_elements(masks);
    auto elements_of = [&](int mask) -> const std::vector<Perm>& {
        if (cached_elements[mask].empty()) cached_elements[mask] = sub[mask].elements(budget);
        return cached_elements[mask];
    };
    auto subset_to_list = [&](int mask) {
        std::vector<int> out;
        for (int i = 0; i < n; ++i)
            if (mask & (1 << i)) out.push_back(i);
        return out;
    };
    for (int mi = 0; mi < masks; ++mi) {
        for (int mj = 0; mj < masks; ++mj) {
            if ((mi & mj) == mi || (mi & mj) == mj) continue;  // nested pairs hold trivially
            const uint64_t want = sub[mi & mj].order();
            const int small = sub[mi].order() <= sub[mj].order() ? mi : mj;
            const int big = small == mi ? mj : mi;
            uint64_t meet = 0;
            for (const Perm& p : elements_of(small))
                if (sub[big].contains(p)) ++meet;
            if (meet != want) return {false, subset_to_list(mi), subset_to_list(mj)};
        }
    }
    return {true, {}, {}};
}

namespace {

// intersection of subgroups, all inside a group of enumerable size
PermGroup intersect_groups(const std::vector<const PermGroup*>& groups, int degree,
                           uint64_t budget) {
    const PermGroup* smallest = groups[0];
    for (const PermGroup* g : groups)
        if (g->order() < smallest->order()) smallest = g;
    std::vector<Perm> gens;
    PermGroup meet = PermGroup::trivial(degree);
    for (const Perm& p : smallest->elements(budget)) {
        bool in_all = true;
        for (const PermGroup* g : groups)
            if (g != smallest && !g->contains(p)) {
                in_all = false;
                break;
            }
        if (in_all && !meet.contains(p)) {
            gens.push_back(p);
            meet = PermGroup(degree, gens);
        }
    }
    return meet;
}

}  // namespace

MonBoundsReport mon_bounds_report(const FlagGraph& g, uint64_t budget, Exec mode) {
    const MonodromyGroup mon = monodromy_group(g);
    if (mon.group.order_exceeds(budget)) throw err_too_large("monodromy group order", budget);
    const OrbitPartition orbits = flag_orbits(g, mode);

    std::vector<int32_t> reps(orbits.count, -1);
    for (int32_t f = 0; f < g.flags(); ++f)
        if (reps[orbits.orbit_of[f]] < 0) reps[orbits.orbit_of[f]] = f;

    std::vector<PermGroup> stabs;
    stabs.reserve(orbits.count);
    for (const int32_t r : reps) stabs.push_back(mon.group.point_stabilizer(r));

    MonBoundsReport report;
    report.mon_order = mon.group.order();
    report.k = orbits.count;
    report.stab_order = stabs[0].order();

    std::vector<PermGroup> norms;
    norms.reserve(stabs.size());
    for (const PermGroup& s : stabs) norms.push_back(mon.group.normalizer_bruteforce(s, budget));
    report.gamma_order = norms[0].order() / stabs[0].order();

    std::vector<const PermGroup*> nptrs;
    for (const PermGroup& n2 : norms) nptrs.push_back(&n2);
    const PermGroup n_meet = intersect_groups(nptrs, g.flags(), budget);
    report.index_n = report.mon_order / n_meet.order();

    // the image of the full stabilizer intersection is the core, hence
    // trivial; |T/S| in the bounds is then just |T|
    std::vector<const PermGroup*> sptrs;
    for (const PermGroup& s : stabs) sptrs.push_back(&s);
    const uint64_t s_meet =
        stabs.size() == 1 ? stabs[0].order() : intersect_groups(sptrs, g.flags(), budget).order();
    if (s_meet != 1)
        throw Error("Internal", "stabilizer-image intersection is not trivial", {});

    if (orbits.count == 1) {
        // empty intersection: T is the whole group, so the bounds collapse
        report.t_order = report.mon_order;
    } else {
        std::vector<const PermGroup*> tptrs;
        for (size_t j = 1; j < stabs.size(); ++j) tptrs.push_back(&stabs[j]);
        report.t_order = tptrs.size() == 1 ? stabs[1].order()
                                           : intersect_groups(tptrs, g.flags(), budget).order();
    }

    auto powk = [&](uint64_t base) {
        unsigned __int128 v = 1;
        for (int i = 0; i < report.k; ++i) v *= base;
        return v;
    };
    unsigned __int128 fact = 1;
    for (int i = 2; i <= report.k; ++i) fact *= i;
    report.lower_holds = static_cast<unsigned __int128>(report.index_n) * powk(report.t_order) <=
                         report.mon_order;
    report.upper_holds = report.mon_order <= static_cast<unsigned __int128>(report.index_n) *
                                                 powk(report.gamma_order);
    report.factorial_holds = static_cast<unsigned __int128>(report.index_n) *
                                 powk(report.gamma_order) <=
                             fact * powk(report.gamma_order);
    return report;
}

}  // namespace polymix

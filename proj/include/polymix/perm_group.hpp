#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "polymix/errors.hpp"

namespace polymix {

/// Permutation of {0..degree-1} stored as its image array. Permutations act
/// on the right, matching the exponent notation for flags: (p * q) means
/// apply p first, then q.
class Perm {
public:
    Perm() = default;
    explicit Perm(int degree) : images_(degree) {
        for (int i = 0; i < degree; ++i) images_[i] = i;
    }
    explicit Perm(std::vector<int32_t> images) : images_(std::move(images)) {}

    int degree() const { return static_cast<int>(images_.size()); }
    int32_t of(int32_t point) const { return images_[point]; }
    const std::vector<int32_t>& images() const { return images_; }

    bool is_identity() const {
        for (int32_t i = 0; i < degree(); ++i)
            if (images_[i] != i) return false;
        return true;
    }

    Perm operator*(const Perm& q) const {
        std::vector<int32_t> r(images_.size());
        for (size_t i = 0; i < images_.size(); ++i) r[i] = q.images_[images_[i]];
        return Perm(std::move(r));
    }

    Perm inverse() const {
        std::vector<int32_t> r(images_.size());
        for (size_t i = 0; i < images_.size(); ++i) r[images_[i]] = static_cast<int32_t>(i);
        return Perm(std::move(r));
    }

    bool operator==(const Perm&) const = default;
    auto operator<=>(const Perm&) const = default;

private:
    std::vector<int32_t> images_;
};

/// Finite permutation group backed by a stabilizer chain (Schreier-Sims with
/// deterministic base selection). The chain is built lazily on first use;
/// that first call is not thread-safe, everything afterwards is.
class PermGroup {
public:
    PermGroup(int degree, std::vector<Perm> generators);

    /// known_order lets the chain builder stop as soon as the transversal
    /// product reaches it (the automorphism search counts its successes, so
    /// it always knows). forced_first_base pins the first base point; -1
    /// selects automatically.
    PermGroup(int degree, std::vector<Perm> generators, uint64_t known_order,
              int32_t forced_first_base);

    static PermGroup trivial(int degree) { return PermGroup(degree, {}); }

    int degree() const { return degree_; }
    const std::vector<Perm>& generators() const { return generators_; }

    /// Exact order; saturates at UINT64_MAX on overflow.
    uint64_t order() const;

    /// True iff the order exceeds the bound (cheap: stops multiplying early).
    bool order_exceeds(uint64_t bound) const;

    std::vector<int32_t> orbit(int32_t point) const;

    PermGroup point_stabilizer(int32_t point) const;

    bool contains(const Perm& p) const;

    /// True iff every generator of h lies in this group.
    bool contains_subgroup(const PermGroup& h) const;

    /// Subgroup equality (same degree, mutual containment).
    bool same_subgroup(const PermGroup& h) const;

    /// All elements; throws TooLarge when the order exceeds the bound.
    std::vector<Perm> elements(uint64_t bound = 20000) const;

    /// Exact normalizer of h in this group by scanning all elements;
    /// permitted only while order() <= bound. Throws NotSubgroup / TooLarge.
    PermGroup normalizer_bruteforce(const PermGroup& h, uint64_t bound = 20000) const;

private:
    struct ChainCache;
    const ChainCache& chain() const;

    int degree_;
    std::vector<Perm> generators_;
    uint64_t known_order_ = 0;
    int32_t forced_first_base_ = -1;
    mutable std::shared_ptr<ChainCache> chain_;
};

/// Group homomorphism determined by a surjection of the underlying point
/// sets that intertwines the actions: hom(g) is the unique permutation h
/// with h(phi(x)) = phi(g(x)). Throws if no such permutation exists.
class GroupHom {
public:
    GroupHom(int source_degree, int target_degree, std::vector<int32_t> point_map)
        : source_degree_(source_degree),
          target_degree_(target_degree),
          point_map_(std::move(point_map)) {}

    Perm apply(const Perm& g) const;

private:
    int source_degree_;
    int target_degree_;
    std::vector<int32_t> point_map_;
};

}  // namespace polymix

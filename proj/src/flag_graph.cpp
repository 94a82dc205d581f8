#include "polymix/flag_graph.hpp"

#include <algorithm>
#include <queue>

namespace polymix {

FlagGraph validate_maniplex(const std::vector<std::vector<int32_t>>& adjacency) {
    const int n = static_cast<int>(adjacency.size());
    if (n < 1) throw ValidationError("NotInvolution", "no colors supplied", {});
    const auto flag_count = adjacency[0].size();
    if (flag_count == 0) throw ValidationError("Disconnected", "empty flag set", {});
    const int32_t F = static_cast<int32_t>(flag_count);
    for (int i = 0; i < n; ++i) {
        if (adjacency[i].size() != flag_count)
            throw ValidationError("NotInvolution",
                                  "color " + std::to_string(i) + " acts on a different flag set",
                                  {{"color", std::to_string(i)}});
        for (int32_t f = 0; f < F; ++f) {
            const int32_t g = adjacency[i][f];
            if (g < 0 || g >= F) throw err_not_involution(i);
        }
    }
    for (int32_t f = 0; f < F; ++f) {
        for (int i = 0; i < n; ++i) {
            if (adjacency[i][adjacency[i][f]] != f) throw err_not_involution(i);
            if (adjacency[i][f] == f) throw err_fixed_point(i, f);
        }
    }
    // connectivity under all colors together
    std::vector<char> seen(flag_count, 0);
    std::vector<int32_t> stack = {0};
    seen[0] = 1;
    int32_t reached = 1;
    while (!stack.empty()) {
        const int32_t f = stack.back();
        stack.pop_back();
        for (int i = 0; i < n; ++i) {
            const int32_t g = adjacency[i][f];
            if (!seen[g]) {
                seen[g] = 1;
                ++reached;
                stack.push_back(g);
            }
        }
    }
    if (reached != F) throw err_disconnected();
    for (int32_t f = 0; f < F; ++f) {
        for (int i = 0; i < n; ++i) {
            for (int j = i + 2; j < n; ++j) {
                if (adjacency[i][adjacency[j][f]] != adjacency[j][adjacency[i][f]])
                    throw err_square_violation(i, j, f);
            }
        }
    }
    return FlagGraph(F, adjacency);
}

int32_t apply_word(const FlagGraph& g, int32_t flag, const ColorWord& w) {
    for (int c : w) {
        if (c < 0 || c >= g.rank()) throw err_color_out_of_range(c, g.rank());
        flag = g.adjacent(c, flag);
    }
    return flag;
}

FlagGraph dual(const FlagGraph& g) {
    std::vector<std::vector<int32_t>> adj(g.adjacency().rbegin(), g.adjacency().rend());
    return validate_maniplex(adj);
}

Propagation propagate_colors(const FlagGraph& a, int32_t base_a, const FlagGraph& b,
                             int32_t base_b) {
    if (a.rank() != b.rank()) throw err_rank_mismatch(a.rank(), b.rank());
    const int n = a.rank();
    std::vector<int32_t> img(a.flags(), -1);
    // parent pointers for witness words
    std::vector<int32_t> parent(a.flags(), -1);
    std::vector<int8_t> parent_color(a.flags(), -1);
    img[base_a] = base_b;
    std::vector<int32_t> queue = {base_a};
    for (size_t qi = 0; qi < queue.size(); ++qi) {
        const int32_t f = queue[qi];
        for (int i = 0; i < n; ++i) {
            const int32_t g = a.adjacent(i, f);
            const int32_t h = b.adjacent(i, img[f]);
            if (img[g] == -1) {
                img[g] = h;
                parent[g] = f;
                parent_color[g] = static_cast<int8_t>(i);
                queue.push_back(g);
            } else if (img[g] != h) {
                auto access = [&](int32_t v) {
                    ColorWord w;
                    while (parent[v] != -1) {
                        w.push_back(parent_color[v]);
                        v = parent[v];
                    }
                    std::reverse(w.begin(), w.end());
                    return w;
                };
                ColorWord witness = access(f);
                witness.push_back(i);
                ColorWord back = access(g);
                witness.insert(witness.end(), back.rbegin(), back.rend());
                return {std::nullopt, std::move(witness)};
            }
        }
    }
    return {std::move(img), {}};
}

bool isomorphic_rooted(const RootedFlagGraph& a, const RootedFlagGraph& b) {
    if (a.graph.rank() != b.graph.rank())
        throw err_rank_mismatch(a.graph.rank(), b.graph.rank());
    if (a.graph.flags() != b.graph.flags()) return false;
    return propagate_colors(a.graph, a.base, b.graph, b.base).mapping.has_value();
}

bool isomorphic_unrooted(const FlagGraph& a, const FlagGraph& b) {
    if (a.rank() != b.rank()) return false;
    if (a.flags() != b.flags()) return false;
    for (int32_t t = 0; t < b.flags(); ++t) {
        if (propagate_colors(a, 0, b, t).mapping.has_value()) return true;
    }
    return false;
}

ColorWord canonical_word(const ColorWord& w) {
    auto commute = [](int a, int b) { return std::abs(a - b) >= 2; };
    ColorWord cur = w;
    // cancel pairs of equal letters separated only by letters commuting with them
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < cur.size() && !changed; ++i) {
            for (size_t j = i + 1; j < cur.size(); ++j) {
                if (cur[j] == cur[i]) {
                    bool clear = true;
                    for (size_t k = i + 1; k < j; ++k)
                        if (!commute(cur[k], cur[i])) {
                            clear = false;
                            break;
                        }
                    if (clear) {
                        cur.erase(cur.begin() + j);
                        cur.erase(cur.begin() + i);
                        changed = true;
                    }
                    break;  // nearest matching letter only
                }
                if (!commute(cur[j], cur[i])) break;
            }
        }
    }
    // lexicographic normal form within the commutation class
    changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i + 1 < cur.size(); ++i) {
            if (commute(cur[i], cur[i + 1]) && cur[i] > cur[i + 1]) {
                std::swap(cur[i], cur[i + 1]);
                changed = true;
            }
        }
    }
    return cur;
}

}  // namespace polymix

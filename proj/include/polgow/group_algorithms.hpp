#pragma once

#include "polgow/group_table.hpp"

#include <deque>
#include <stdexcept>
#include <string>
#include <vector>

namespace polgow {

/// Subgroup generated by `gens`, as a sorted member list. Breadth-first
/// closure under right multiplication, deterministic in generator order.
template <FiniteGroupLike G>
std::vector<int> closure_subgroup(const G& g, const std::vector<int>& gens) {
    const std::int64_t n = g.order();
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::deque<int> queue;
    seen[static_cast<std::size_t>(g.identity())] = 1;
    queue.push_back(g.identity());
    std::vector<int> members{g.identity()};
    while (!queue.empty()) {
        int x = queue.front();
        queue.pop_front();
        for (int s : gens) {
            int y = g.mult(x, s);
            if (!seen[static_cast<std::size_t>(y)]) {
                seen[static_cast<std::size_t>(y)] = 1;
                members.push_back(y);
                queue.push_back(y);
            }
        }
    }
    std::sort(members.begin(), members.end());
    return members;
}

/// Smallest normal subgroup containing `seeds`. Alternates multiplicative
/// closure with conjugation by `conjugators` (a generating set of g).
template <FiniteGroupLike G>
std::vector<int> normal_closure_members(const G& g, std::vector<int> seeds,
                                        const std::vector<int>& conjugators) {
    std::vector<int> gens = std::move(seeds);
    for (;;) {
        std::vector<int> members = closure_subgroup(g, gens);
        std::vector<char> in(static_cast<std::size_t>(g.order()), 0);
        for (int m : members) in[static_cast<std::size_t>(m)] = 1;
        bool grew = false;
        for (int m : members)
            for (int c : conjugators) {
                int y = g.mult(g.inverse(c), g.mult(m, c));
                if (!in[static_cast<std::size_t>(y)]) {
                    in[static_cast<std::size_t>(y)] = 1;
                    gens.push_back(y);
                    grew = true;
                }
            }
        if (!grew) return members;
    }
}

template <FiniteGroupLike G>
std::int64_t element_order_of(const G& g, int x) {
    std::int64_t k = 1;
    int y = x;
    while (y != g.identity()) {
        y = g.mult(y, x);
        ++k;
    }
    return k;
}

/// Coset decomposition by a normal subgroup given as a member list.
/// Representatives are minimal element indices; cosets are numbered in
/// order of first appearance. Normality is verified against `conjugators`.
template <FiniteGroupLike G>
QuotientResult quotient_by_members(const G& g, const std::vector<int>& members,
                                   const std::vector<int>& conjugators) {
    const std::int64_t n = g.order();
    std::vector<char> in(static_cast<std::size_t>(n), 0);
    for (int m : members) in[static_cast<std::size_t>(m)] = 1;
    if (!in[static_cast<std::size_t>(g.identity())])
        throw std::invalid_argument("subgroup does not contain the identity");
    for (int m : members)
        for (int c : conjugators) {
            int y = g.mult(g.inverse(c), g.mult(m, c));
            if (!in[static_cast<std::size_t>(y)])
                throw std::invalid_argument(
                    "subgroup is not normal: conjugation of element " + std::to_string(m) +
                    " by " + std::to_string(c) + " leaves it");
        }

    std::vector<int> coset_of(static_cast<std::size_t>(n), -1);
    std::vector<int> reps;
    for (std::int64_t x = 0; x < n; ++x) {
        if (coset_of[static_cast<std::size_t>(x)] >= 0) continue;
        int id = static_cast<int>(reps.size());
        reps.push_back(static_cast<int>(x));
        for (int m : members)
            coset_of[static_cast<std::size_t>(g.mult(static_cast<int>(x), m))] = id;
    }
    const int q = static_cast<int>(reps.size());
    if (q > kDenseTableCap)
        throw std::domain_error("quotient order " + std::to_string(q) +
                                " exceeds the dense table cap");
    std::vector<std::int32_t> table(static_cast<std::size_t>(q) * q);
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < q; ++j)
            table[static_cast<std::size_t>(i) * q + j] =
                coset_of[static_cast<std::size_t>(g.mult(reps[i], reps[j]))];
    QuotientResult out;
    out.group = GroupTable::from_table(q, coset_of[static_cast<std::size_t>(g.identity())],
                                       std::move(table));
    out.projection = std::move(coset_of);
    return out;
}

}  // namespace polgow

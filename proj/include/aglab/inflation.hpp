#pragma once

#include <map>
#include <optional>
#include <vector>

#include "aglab/inverses.hpp"

namespace aglab {

// Decomposition of a groupoid as an inflation: every element sits in a fiber
// over a base element and all products factor through the base.
struct InflationWitness {
    ElementSet base_elements;          // the base subgroupoid U as a subset
    std::vector<int> retraction;       // x -> the base element of its fiber
    std::map<int, ElementSet> fibers;  // u -> retraction^-1(u)
};

namespace detail {

// Full verification of the inflation invariants for a candidate retraction.
inline bool inflation_invariants_hold(const FiniteGroupoid& g, const ElementSet& base,
                                      const std::vector<int>& retraction) {
    const int n = g.order();
    for (int x = 0; x < n; ++x) {
        if (!base.contains(retraction[x])) return false;
    }
    for (int u : base) {
        if (retraction[u] != u) return false;
    }
    for (int x = 0; x < n; ++x) {
        if (retraction[retraction[x]] != retraction[x]) return false;
    }
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
            if (g.at(x, y) != g.at(retraction[x], retraction[y])) return false;
            if (retraction[g.at(x, y)] != g.at(retraction[x], retraction[y])) return false;
        }
    }
    return true;
}

inline std::map<int, ElementSet> fibers_of(const FiniteGroupoid& g, const ElementSet& base,
                                           const std::vector<int>& retraction) {
    std::map<int, ElementSet> fibers;
    for (int u : base) {
        fibers.emplace(u, ElementSet(g.order()));
    }
    for (int x = 0; x < g.order(); ++x) {
        fibers.at(retraction[x]).insert(x);
    }
    return fibers;
}

}  // namespace detail

struct Theorem10Result {
    bool medial;
    bool s2_good;  // the induced groupoid on S^2 is completely inverse AG**
    std::optional<InflationWitness> witness;
};

// Theorem 10: a medial groupoid is an inflation of a completely inverse
// AG**-groupoid iff S^2 is one. When both premises hold, the proof's
// retraction r(x) = x^2 (x^2)^-1 * x (inverse taken inside S^2) is built and
// every inflation invariant is verified; a verification failure would
// contradict the theorem and throws.
inline Theorem10Result theorem10_check(const FiniteGroupoid& g) {
    Theorem10Result result{};
    result.medial = check_law(g, Law::medial).holds;

    const SquareSubgroupoid sq = square_subgroupoid(g);
    result.s2_good = is_completely_inverse_agss(sq.induced);
    if (!result.medial || !result.s2_good) {
        return result;
    }

    std::array<int, kMaxOrder> index_in_square{};
    index_in_square.fill(-1);
    for (std::size_t i = 0; i < sq.old_of_new.size(); ++i) {
        index_in_square[sq.old_of_new[i]] = static_cast<int>(i);
    }
    const std::vector<int> inv_sq = *inverse_data(sq.induced).inverse_map;

    const int n = g.order();
    std::vector<int> retraction(n);
    for (int x = 0; x < n; ++x) {
        const int square = g.at(x, x);
        const int square_inv = sq.old_of_new[inv_sq[index_in_square[square]]];
        retraction[x] = g.at(g.at(square, square_inv), x);
    }
    if (!detail::inflation_invariants_hold(g, sq.elements, retraction)) {
        throw TheoremViolation("Theorem 10 retraction failed the inflation invariants");
    }
    result.witness = InflationWitness{sq.elements, retraction,
                                      detail::fibers_of(g, sq.elements, retraction)};
    return result;
}

// Builds the inflation of a base groupoid with the given fiber sizes. Base
// elements come first; every product factors through the base.
inline FiniteGroupoid inflate(const FiniteGroupoid& base, const std::vector<int>& fiber_sizes) {
    const int m = base.order();
    if (fiber_sizes.size() != static_cast<std::size_t>(m)) {
        throw InputError("expected one fiber size per base element");
    }
    int total = 0;
    for (int size : fiber_sizes) {
        if (size < 1) {
            throw InputError("fiber sizes must be positive");
        }
        total += size;
    }
    if (total > kMaxOrder) {
        throw SizeError("inflated order " + std::to_string(total) + " exceeds the supported bound "
                        + std::to_string(kMaxOrder));
    }
    std::vector<int> fiber_of(total);
    for (int u = 0; u < m; ++u) fiber_of[u] = u;
    int next = m;
    for (int u = 0; u < m; ++u) {
        for (int k = 1; k < fiber_sizes[u]; ++k) fiber_of[next++] = u;
    }
    std::vector<int> table(total * total);
    for (int x = 0; x < total; ++x) {
        for (int y = 0; y < total; ++y) {
            table[x * total + y] = base.at(fiber_of[x], fiber_of[y]);
        }
    }
    return FiniteGroupoid(total, table);
}

// Checks whether g is an inflation of the subgroupoid on `base`. The fiber
// of x is pinned down by x's products against base elements together with
// x*x = u*u; the chosen assignment is then verified against the full
// definition, so an invalid candidate can never produce a witness.
inline std::optional<InflationWitness> is_inflation_of(const FiniteGroupoid& g,
                                                       const ElementSet& base) {
    const int n = g.order();
    if (base.universe() != n) {
        throw InputError("subset universe does not match groupoid order");
    }
    if (base.empty()) return std::nullopt;
    for (int u : base) {
        for (int v : base) {
            if (!base.contains(g.at(u, v))) return std::nullopt;
        }
    }
    std::vector<int> retraction(n, -1);
    for (int u : base) retraction[u] = u;
    for (int x = 0; x < n; ++x) {
        if (retraction[x] >= 0) continue;
        for (int u : base) {
            bool matches = g.at(x, x) == g.at(u, u);
            for (int v : base) {
                if (!matches) break;
                matches = g.at(x, v) == g.at(u, v) && g.at(v, x) == g.at(v, u);
            }
            if (matches) {
                retraction[x] = u;
                break;
            }
        }
        if (retraction[x] < 0) return std::nullopt;
    }
    if (!detail::inflation_invariants_hold(g, base, retraction)) return std::nullopt;
    return InflationWitness{base, retraction, detail::fibers_of(g, base, retraction)};
}

}  // namespace aglab

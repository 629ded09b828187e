#pragma once

#include <optional>
#include <string>
#include <vector>

#include "aglab/groupoid.hpp"

namespace aglab {

// The fixed law list. `associative` and `commutative` go beyond the named
// AG laws; the derived-product checks need them.
enum class Law { invertive, medial, paramedial, ag_star_star, associative, commutative };

inline const char* law_name(Law law) {
    switch (law) {
        case Law::invertive: return "invertive";
        case Law::medial: return "medial";
        case Law::paramedial: return "paramedial";
        case Law::ag_star_star: return "ag_star_star";
        case Law::associative: return "associative";
        case Law::commutative: return "commutative";
    }
    return "?";
}

struct LawCounterexample {
    std::vector<int> tuple;  // (x,y,z) or (x,y,z,w) or (x,y)
    int lhs;
    int rhs;
};

struct LawReport {
    Law law;
    bool holds;
    std::optional<LawCounterexample> counterexample;
};

namespace detail {

inline int law_arity(Law law) {
    switch (law) {
        case Law::medial:
        case Law::paramedial: return 4;
        case Law::commutative: return 2;
        default: return 3;
    }
}

// Both sides of a law instance. Tuple values are in range.
inline std::pair<int, int> law_sides(const FiniteGroupoid& g, Law law, const int* t) {
    switch (law) {
        case Law::invertive:  // (xy)z = (zy)x
            return {g.at(g.at(t[0], t[1]), t[2]), g.at(g.at(t[2], t[1]), t[0])};
        case Law::medial:  // (xy)(zw) = (xz)(yw)
            return {g.at(g.at(t[0], t[1]), g.at(t[2], t[3])),
                    g.at(g.at(t[0], t[2]), g.at(t[1], t[3]))};
        case Law::paramedial:  // (xy)(zw) = (wy)(zx)
            return {g.at(g.at(t[0], t[1]), g.at(t[2], t[3])),
                    g.at(g.at(t[3], t[1]), g.at(t[2], t[0]))};
        case Law::ag_star_star:  // x(yz) = y(xz)
            return {g.at(t[0], g.at(t[1], t[2])), g.at(t[1], g.at(t[0], t[2]))};
        case Law::associative:  // (xy)z = x(yz)
            return {g.at(g.at(t[0], t[1]), t[2]), g.at(t[0], g.at(t[1], t[2]))};
        case Law::commutative:  // xy = yx
            return {g.at(t[0], t[1]), g.at(t[1], t[0])};
    }
    return {0, 0};
}

}  // namespace detail

// Exhaustive check; the first failing tuple in lexicographic order is the
// witness, so reports are stable across runs.
inline LawReport check_law(const FiniteGroupoid& g, Law law) {
    const int n = g.order();
    const int arity = detail::law_arity(law);
    int t[4] = {0, 0, 0, 0};
    while (true) {
        auto [lhs, rhs] = detail::law_sides(g, law, t);
        if (lhs != rhs) {
            return LawReport{law, false,
                             LawCounterexample{std::vector<int>(t, t + arity), lhs, rhs}};
        }
        int k = arity - 1;
        while (k >= 0 && t[k] == n - 1) {
            t[k--] = 0;
        }
        if (k < 0) break;
        ++t[k];
    }
    return LawReport{law, true, std::nullopt};
}

// All e with e*x = x for every x.
inline ElementSet left_identities(const FiniteGroupoid& g) {
    const int n = g.order();
    ElementSet out(n);
    for (int e = 0; e < n; ++e) {
        bool ok = true;
        for (int x = 0; x < n && ok; ++x) {
            ok = g.at(e, x) == x;
        }
        if (ok) out.insert(e);
    }
    return out;
}

struct SemilatticeReport {
    bool holds;
    std::string reason;              // empty when holds
    std::optional<std::vector<int>> witness;  // failing elements
};

// Is the product restricted to A commutative, associative and idempotent?
// A must be closed under the product (ClosureError otherwise).
inline SemilatticeReport is_semilattice_on(const FiniteGroupoid& g, const ElementSet& a) {
    for (int x : a) {
        for (int y : a) {
            if (!a.contains(g.at(x, y))) {
                throw ClosureError("subset not closed under the product", x, y);
            }
        }
    }
    for (int x : a) {
        if (g.at(x, x) != x) {
            return SemilatticeReport{false, "not idempotent", std::vector<int>{x}};
        }
    }
    for (int x : a) {
        for (int y : a) {
            if (g.at(x, y) != g.at(y, x)) {
                return SemilatticeReport{false, "not commutative", std::vector<int>{x, y}};
            }
        }
    }
    for (int x : a) {
        for (int y : a) {
            for (int z : a) {
                if (g.at(g.at(x, y), z) != g.at(x, g.at(y, z))) {
                    return SemilatticeReport{false, "not associative",
                                             std::vector<int>{x, y, z}};
                }
            }
        }
    }
    return SemilatticeReport{true, "", std::nullopt};
}

}  // namespace aglab

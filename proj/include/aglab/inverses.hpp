#pragma once

#include <optional>
#include <vector>

#include "aglab/laws.hpp"

namespace aglab {

// Left inverses, mutual-inverse sets V(a), and the total inverse map when
// every V(a) is a singleton.
struct InverseData {
    std::vector<ElementSet> left_inverses;       // b with a = (ab)a
    std::vector<ElementSet> v;                   // V(a): mutual left inverses
    std::optional<std::vector<int>> inverse_map;  // present iff |V(a)| = 1 for all a
    std::vector<bool> commuting;  // some b in V(a) has ab = ba (unique b when the map exists)
};

inline InverseData inverse_data(const FiniteGroupoid& g) {
    const int n = g.order();
    InverseData data;
    data.left_inverses.assign(n, ElementSet(n));
    data.v.assign(n, ElementSet(n));
    data.commuting.assign(n, false);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            if (g.at(g.at(a, b), a) == a) {
                data.left_inverses[a].insert(b);
            }
        }
    }
    bool unique = true;
    for (int a = 0; a < n; ++a) {
        for (int b : data.left_inverses[a]) {
            if (data.left_inverses[b].contains(a)) {
                data.v[a].insert(b);
                if (g.at(a, b) == g.at(b, a)) {
                    data.commuting[a] = true;
                }
            }
        }
        unique = unique && data.v[a].size() == 1;
    }
    if (unique) {
        std::vector<int> map(n);
        for (int a = 0; a < n; ++a) {
            map[a] = data.v[a].min();
        }
        data.inverse_map = std::move(map);
    }
    return data;
}

// Smallest x with a = (ax)a and ax = xa, or absent.
inline std::optional<int> strongly_regular_witness(const FiniteGroupoid& g, int a) {
    if (a < 0 || a >= g.order()) {
        throw InputError("no element " + std::to_string(a));
    }
    for (int x = 0; x < g.order(); ++x) {
        if (g.at(g.at(a, x), a) == a && g.at(a, x) == g.at(x, a)) {
            return x;
        }
    }
    return std::nullopt;
}

// Given a strong-regularity witness x for a, produces y = (xa)x, the
// commuting inverse of a that the Lemma 1 construction yields. In a strongly
// regular AG-groupoid the postcondition cannot fail; a failure there is a
// library bug surfaced as TheoremViolation.
inline int lemma1_inverse_from_witness(const FiniteGroupoid& g, int a, int x) {
    if (a < 0 || a >= g.order() || x < 0 || x >= g.order()) {
        throw InputError("element outside carrier");
    }
    if (g.at(g.at(a, x), a) != a || g.at(a, x) != g.at(x, a)) {
        throw InvalidWitness("x = " + std::to_string(x)
                             + " is not a strong-regularity witness for a = "
                             + std::to_string(a));
    }
    const int y = g.at(g.at(x, a), x);
    if (check_law(g, Law::invertive).holds) {
        const bool mutual = g.at(g.at(a, y), a) == a && g.at(g.at(y, a), y) == y;
        if (!mutual || g.at(a, y) != g.at(y, a)) {
            throw TheoremViolation("y = (xa)x is not a commuting inverse of a in an AG-groupoid");
        }
    }
    return y;
}

enum class Class3 { none, all_three };

// Per-class verdicts with witnesses, plus the three-way classifier. The
// three characterizations are measured by separate scans and only then
// compared; a disagreement would contradict the class equivalence theorem.
struct PropertyReport {
    bool ag = false;                 // invertive law
    bool ag_star_star = false;       // invertive and x(yz) = y(xz)
    bool strongly_regular = false;
    bool e_semilattice = false;      // E(S) closed and a semilattice
    bool completely_inverse = false; // unique inverses, each commuting

    std::optional<LawCounterexample> invertive_witness;
    std::optional<LawCounterexample> agss_witness;
    std::optional<int> irregular_element;       // no strong-regularity witness
    std::optional<int> bad_inverse_element;     // |V(a)| != 1 or non-commuting
    std::optional<std::vector<int>> e_witness;  // semilattice / closure failure

    // Theorem-3 characterizations, each from its own code path.
    bool cond_completely_inverse_agss = false;
    bool cond_strongly_regular_ag_esl = false;
    bool cond_strongly_regular_agss = false;

    Class3 class3 = Class3::none;
    bool theorem3_violation = false;  // characterizations disagree; must never happen
};

inline PropertyReport classify(const FiniteGroupoid& g) {
    const int n = g.order();
    PropertyReport r;

    const LawReport invertive = check_law(g, Law::invertive);
    const LawReport agss = check_law(g, Law::ag_star_star);
    r.ag = invertive.holds;
    r.invertive_witness = invertive.counterexample;
    r.ag_star_star = invertive.holds && agss.holds;
    if (!agss.holds) {
        r.agss_witness = agss.counterexample;
    }

    r.strongly_regular = true;
    for (int a = 0; a < n && r.strongly_regular; ++a) {
        if (!strongly_regular_witness(g, a)) {
            r.strongly_regular = false;
            r.irregular_element = a;
        }
    }

    const ElementSet e = idempotents(g);
    try {
        const SemilatticeReport sl = is_semilattice_on(g, e);
        r.e_semilattice = sl.holds;
        if (!sl.holds) r.e_witness = sl.witness;
    } catch (const ClosureError& err) {
        r.e_semilattice = false;
        r.e_witness = std::vector<int>{err.a, err.b};
    }

    const InverseData inv = inverse_data(g);
    r.completely_inverse = true;
    for (int a = 0; a < n && r.completely_inverse; ++a) {
        if (inv.v[a].size() != 1 || !inv.commuting[a]) {
            r.completely_inverse = false;
            r.bad_inverse_element = a;
        }
    }

    // Characterization (1): completely inverse AG**-groupoid.
    r.cond_completely_inverse_agss = r.ag && invertive.holds && agss.holds
                                     && r.completely_inverse;
    // Characterization (2): strongly regular AG-groupoid whose idempotents
    // form a semilattice. No inverse or AG** data enters this path.
    r.cond_strongly_regular_ag_esl = invertive.holds && r.strongly_regular && r.e_semilattice;
    // Characterization (3): strongly regular AG**-groupoid. No inverse or
    // idempotent data enters this path.
    r.cond_strongly_regular_agss = invertive.holds && agss.holds && r.strongly_regular;

    const int yes = int(r.cond_completely_inverse_agss) + int(r.cond_strongly_regular_ag_esl)
                    + int(r.cond_strongly_regular_agss);
    if (yes == 3) {
        r.class3 = Class3::all_three;
    } else if (yes != 0) {
        r.theorem3_violation = true;
    }
    return r;
}

// True iff g is a completely inverse AG**-groupoid with the classifier in
// agreement; the precondition most later operations require.
inline bool is_completely_inverse_agss(const FiniteGroupoid& g) {
    const PropertyReport r = classify(g);
    if (r.theorem3_violation) {
        throw TheoremViolation("Theorem 3 characterizations disagree on a groupoid of order "
                               + std::to_string(g.order()));
    }
    return r.class3 == Class3::all_three;
}

}  // namespace aglab

#pragma once

#include "aglab/morphisms.hpp"

namespace aglab {

// A verified semilattice of abelian groups together with one of its
// involutive, idempotent-fixed automorphisms: the raw material of the
// structure theorem.
struct StructurePair {
    FiniteGroupoid sga;
    Automorphism automorphism;
};

// Validates the pair invariants: sga decomposes as a semilattice of abelian
// groups and the permutation is an involutive, E-fixed automorphism of it.
inline StructurePair make_structure_pair(const FiniteGroupoid& sga, const Permutation& perm) {
    clifford_decompose(sga);  // throws NotSemilatticeOfAbelianGroups otherwise
    if (perm.size() != sga.order()) {
        throw InputError("permutation size does not match groupoid order");
    }
    const int n = sga.order();
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            if (perm(sga.at(a, b)) != sga.at(perm(a), perm(b))) {
                throw InvalidWitness("map is not an automorphism");
            }
        }
    }
    bool involutive = true;
    for (int x = 0; x < n && involutive; ++x) involutive = perm(perm(x)) == x;
    if (!involutive) {
        throw InvalidWitness("automorphism is not an involution");
    }
    for (int e : idempotents(sga)) {
        if (perm(e) != e) {
            throw InvalidWitness("automorphism moves an idempotent");
        }
    }
    return StructurePair{sga, Automorphism{perm, true, true}};
}

// Theorem 20 construction: a o b = Aa * b. The postconditions the theorem
// claims are re-verified on the result: it is a completely inverse
// AG**-groupoid, the o-inverse of a is A(a^-1), and deriving it recovers the
// input semilattice of abelian groups table-identically.
inline FiniteGroupoid construct_thm20(const StructurePair& pair) {
    const FiniteGroupoid& sga = pair.sga;
    const Permutation& a_map = pair.automorphism.perm;
    const int n = sga.order();
    std::vector<int> table(n * n);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            table[a * n + b] = sga.at(a_map(a), b);
        }
    }
    FiniteGroupoid result(n, table, sga.has_labels() ? sga.labels() : std::vector<std::string>{});

    if (!is_completely_inverse_agss(result)) {
        throw TheoremViolation("Theorem 20 product is not completely inverse AG**");
    }
    const std::vector<int> sga_inverse = *inverse_data(sga).inverse_map;
    const std::vector<int> result_inverse = *inverse_data(result).inverse_map;
    for (int a = 0; a < n; ++a) {
        if (result_inverse[a] != a_map(sga_inverse[a])) {
            throw TheoremViolation("Theorem 20 inverse is not A(a^-1)");
        }
    }
    if (derive(result).derived != sga) {
        throw TheoremViolation("derived product of the Theorem 20 groupoid differs from its input");
    }
    return result;
}

// Theorem 21 extraction: Aa = a * aa^-1 together with the derived semigroup.
// Every property the theorem claims for A is recomputed rather than trusted.
inline StructurePair extract_thm21(const FiniteGroupoid& g) {
    if (!is_completely_inverse_agss(g)) {
        throw NotCompletelyInverse("extraction requires a completely inverse AG**-groupoid");
    }
    const DerivedGroupoid d = derive(g);
    const int n = g.order();
    std::vector<int> images(n);
    std::array<bool, kMaxOrder> seen{};
    for (int a = 0; a < n; ++a) {
        images[a] = g.at(a, g.at(a, d.base_inverse[a]));
        if (images[a] < 0 || images[a] >= n || seen[images[a]]) {
            throw TheoremViolation("Theorem 21 map is not a bijection");
        }
        seen[images[a]] = true;
    }
    const Permutation a_map(images);

    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            if (a_map(d.derived.at(a, b)) != d.derived.at(a_map(a), a_map(b))) {
                throw TheoremViolation("Theorem 21 map is not a derived-product homomorphism");
            }
        }
    }
    for (int a = 0; a < n; ++a) {
        if (a_map(a_map(a)) != a) {
            throw TheoremViolation("Theorem 21 map is not an involution");
        }
    }
    for (int e : idempotents(d.derived)) {
        if (a_map(e) != e) {
            throw TheoremViolation("Theorem 21 map moves an idempotent");
        }
    }
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            if (g.at(a, b) != d.derived.at(a_map(a), b)) {
                throw TheoremViolation("a*b != Aa[*]b in the Theorem 21 decomposition");
            }
        }
    }
    return StructurePair{d.derived, Automorphism{a_map, true, true}};
}

// Corollary 22 round trip on a fixed carrier: rebuilding from the extracted
// pair must reproduce the table bit-identically, not merely up to
// isomorphism. Non-members simply get a false verdict.
inline bool roundtrip_cor22(const FiniteGroupoid& g) {
    if (!is_completely_inverse_agss(g)) {
        return false;
    }
    const StructurePair pair = extract_thm21(g);
    const FiniteGroupoid rebuilt = construct_thm20(pair);
    if (rebuilt != g) {
        throw TheoremViolation("Corollary 22 round trip changed the table");
    }
    return true;
}

}  // namespace aglab

#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <vector>

#include "aglab/derived.hpp"

namespace aglab {

// A permutation of [0, n), stored as the image list: perm(x) is the image
// of x.
class Permutation {
public:
    explicit Permutation(const std::vector<int>& images) : n_(static_cast<int>(images.size())) {
        if (n_ < 1 || n_ > kMaxOrder) {
            throw InputError("permutation size " + std::to_string(n_) + " outside [1, "
                             + std::to_string(kMaxOrder) + "]");
        }
        std::array<bool, kMaxOrder> seen{};
        for (int i = 0; i < n_; ++i) {
            const int v = images[i];
            if (v < 0 || v >= n_ || seen[v]) {
                throw InputError("image list is not a permutation of [0, " + std::to_string(n_)
                                 + ")");
            }
            seen[v] = true;
            p_[i] = static_cast<std::uint8_t>(v);
        }
    }

    static Permutation identity(int n) {
        std::vector<int> images(n);
        for (int i = 0; i < n; ++i) images[i] = i;
        return Permutation(images);
    }

    int size() const { return n_; }
    int operator()(int x) const { return p_[x]; }

    Permutation inverse() const {
        std::vector<int> images(n_);
        for (int i = 0; i < n_; ++i) images[p_[i]] = i;
        return Permutation(images);
    }

    bool is_identity() const {
        for (int i = 0; i < n_; ++i) {
            if (p_[i] != i) return false;
        }
        return true;
    }

    std::vector<int> images() const { return std::vector<int>(p_.begin(), p_.begin() + n_); }

    friend bool operator==(const Permutation& a, const Permutation& b) {
        return a.n_ == b.n_ && std::equal(a.p_.begin(), a.p_.begin() + a.n_, b.p_.begin());
    }
    friend bool operator!=(const Permutation& a, const Permutation& b) { return !(a == b); }
    friend bool operator<(const Permutation& a, const Permutation& b) {
        if (a.n_ != b.n_) return a.n_ < b.n_;
        return std::lexicographical_compare(a.p_.begin(), a.p_.begin() + a.n_, b.p_.begin(),
                                            b.p_.begin() + b.n_);
    }

private:
    int n_;
    std::array<std::uint8_t, kMaxOrder> p_{};
};

// All n! permutations of [0, n) in lexicographic order.
inline std::vector<Permutation> all_permutations(int n) {
    if (n < 1 || n > 8) {
        throw SizeError("permutation enumeration supported for 1 <= n <= 8");
    }
    std::vector<int> images(n);
    for (int i = 0; i < n; ++i) images[i] = i;
    std::vector<Permutation> out;
    do {
        out.emplace_back(images);
    } while (std::next_permutation(images.begin(), images.end()));
    return out;
}

// outer o inner: x -> outer(inner(x)).
inline Permutation compose(const Permutation& outer, const Permutation& inner) {
    if (outer.size() != inner.size()) {
        throw InputError("cannot compose permutations of different sizes");
    }
    std::vector<int> images(outer.size());
    for (int x = 0; x < outer.size(); ++x) images[x] = outer(inner(x));
    return Permutation(images);
}

// The relabeled groupoid h with h[p(a)][p(b)] = p(g[a][b]). Labels follow
// their elements.
inline FiniteGroupoid apply_permutation(const FiniteGroupoid& g, const Permutation& p) {
    const int n = g.order();
    if (p.size() != n) {
        throw InputError("permutation size does not match groupoid order");
    }
    std::vector<int> table(n * n);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            table[p(a) * n + p(b)] = p(g.at(a, b));
        }
    }
    std::vector<std::string> labels;
    if (g.has_labels()) {
        labels.resize(n);
        for (int a = 0; a < n; ++a) labels[p(a)] = g.label(a);
    }
    return FiniteGroupoid(n, table, std::move(labels));
}

struct Automorphism {
    Permutation perm;
    bool involutive;  // perm o perm = id
    bool e_fixed;     // perm fixes every idempotent
};

struct CanonicalForm {
    FiniteGroupoid canonical_table;  // lexicographically least relabeling, unlabeled
    Permutation witness_perm;        // apply_permutation(g, witness_perm) == canonical_table
};

namespace detail {

// Branch-and-bound search for the lexicographically least relabeled table.
// old_of_new is built one position at a time; a branch dies as soon as its
// determined row-major prefix is strictly worse than the best complete table.
class CanonicalSearch {
public:
    explicit CanonicalSearch(const FiniteGroupoid& g) : g_(g), n_(g.order()) {
        new_of_old_.fill(-1);
        old_of_new_.fill(-1);
    }

    CanonicalForm run() {
        dfs(0);
        std::vector<int> table(best_.begin(), best_.begin() + n_ * n_);
        std::vector<int> perm(best_perm_.begin(), best_perm_.begin() + n_);
        return CanonicalForm{FiniteGroupoid(n_, table), Permutation(perm)};
    }

private:
    void dfs(int k) {
        if (k == n_) {
            std::array<int, kMaxOrder * kMaxOrder> table{};
            for (int i = 0; i < n_; ++i) {
                for (int j = 0; j < n_; ++j) {
                    table[i * n_ + j] = new_of_old_[g_.at(old_of_new_[i], old_of_new_[j])];
                }
            }
            if (!have_best_
                || std::lexicographical_compare(table.begin(), table.begin() + n_ * n_,
                                                best_.begin(), best_.begin() + n_ * n_)) {
                best_ = table;
                best_perm_ = new_of_old_;
                have_best_ = true;
            }
            return;
        }
        for (int old = 0; old < n_; ++old) {
            if (new_of_old_[old] >= 0) continue;
            new_of_old_[old] = k;
            old_of_new_[k] = old;
            if (!prefix_worse(k + 1)) {
                dfs(k + 1);
            }
            new_of_old_[old] = -1;
            old_of_new_[k] = -1;
        }
    }

    // Walks the determined row-major prefix against the best table. Stops at
    // the first undetermined cell: beyond it nothing can be concluded.
    bool prefix_worse(int k) const {
        if (!have_best_) return false;
        for (int i = 0; i < k; ++i) {
            for (int j = 0; j < n_; ++j) {
                if (j >= k) return false;
                const int image = new_of_old_[g_.at(old_of_new_[i], old_of_new_[j])];
                if (image < 0) return false;
                const int cur = best_[i * n_ + j];
                if (image != cur) return image > cur;
            }
        }
        return false;
    }

    const FiniteGroupoid& g_;
    int n_;
    std::array<int, kMaxOrder> new_of_old_;
    std::array<int, kMaxOrder> old_of_new_;
    std::array<int, kMaxOrder * kMaxOrder> best_{};
    std::array<int, kMaxOrder> best_perm_{};
    bool have_best_ = false;
};

}  // namespace detail

inline CanonicalForm canonical_form(const FiniteGroupoid& g) {
    return detail::CanonicalSearch(g).run();
}

// A witness isomorphism g -> h, or absent. The returned permutation is
// re-verified as a homomorphic bijection before it is handed out.
inline std::optional<Permutation> are_isomorphic(const FiniteGroupoid& g,
                                                 const FiniteGroupoid& h) {
    if (g.order() != h.order()) return std::nullopt;
    const CanonicalForm cg = canonical_form(g);
    const CanonicalForm ch = canonical_form(h);
    if (cg.canonical_table != ch.canonical_table) return std::nullopt;
    const Permutation witness = compose(ch.witness_perm.inverse(), cg.witness_perm);
    for (int a = 0; a < g.order(); ++a) {
        for (int b = 0; b < g.order(); ++b) {
            if (witness(g.at(a, b)) != h.at(witness(a), witness(b))) {
                throw TheoremViolation("isomorphism witness failed verification");
            }
        }
    }
    return witness;
}

// All automorphisms, in lexicographic order of their image lists, each
// flagged as involutive and/or idempotent-fixed.
inline std::vector<Automorphism> automorphisms(const FiniteGroupoid& g) {
    const int n = g.order();
    const ElementSet e = idempotents(g);
    std::vector<Automorphism> out;
    std::array<int, kMaxOrder> image{};
    std::array<bool, kMaxOrder> used{};
    image.fill(-1);

    // Checks every product constraint that the assignment of image[k] makes
    // decidable: pairs involving k and pairs whose product is k.
    const auto consistent = [&](int k) -> bool {
        for (int a = 0; a <= k; ++a) {
            for (int b = 0; b <= k; ++b) {
                const int p = g.at(a, b);
                if (p > k) continue;
                if (a < k && b < k && p != k) continue;
                if (g.at(image[a], image[b]) != image[p]) return false;
            }
        }
        return true;
    };

    const auto dfs = [&](auto&& self, int k) -> void {
        if (k == n) {
            std::vector<int> images(image.begin(), image.begin() + n);
            Permutation perm(images);
            bool involutive = true;
            for (int x = 0; x < n && involutive; ++x) involutive = perm(perm(x)) == x;
            bool e_fixed = true;
            for (int x : e) {
                if (perm(x) != x) {
                    e_fixed = false;
                    break;
                }
            }
            out.push_back(Automorphism{perm, involutive, e_fixed});
            return;
        }
        for (int v = 0; v < n; ++v) {
            if (used[v]) continue;
            image[k] = v;
            used[v] = true;
            if (consistent(k)) self(self, k + 1);
            image[k] = -1;
            used[v] = false;
        }
    };
    dfs(dfs, 0);
    return out;
}

// AUT^2_e: the involutive, idempotent-fixed automorphisms.
inline std::vector<Automorphism> aut2e(const FiniteGroupoid& g) {
    std::vector<Automorphism> out;
    for (const Automorphism& a : automorphisms(g)) {
        if (a.involutive && a.e_fixed) out.push_back(a);
    }
    return out;
}

struct Theorem15Result {
    bool cond_a;  // B is an isomorphism between the derived semigroups
    bool cond_b;  // B(a*b) = [B(a^-1)]^-1 o B(b) for all a, b
};

// Both sides of the Theorem 15 equivalence for one bijection B between two
// completely inverse AG**-groupoids. The theorem says they agree; computing
// them independently and comparing is the point.
inline Theorem15Result theorem15_check(const Permutation& bijection, const FiniteGroupoid& g,
                                       const FiniteGroupoid& h) {
    if (g.order() != h.order() || bijection.size() != g.order()) {
        throw InputError("theorem15_check needs equal carriers and a matching bijection");
    }
    if (!is_completely_inverse_agss(g) || !is_completely_inverse_agss(h)) {
        throw NotCompletelyInverse("theorem15_check requires completely inverse AG**-groupoids");
    }
    const DerivedGroupoid dg = derive(g);
    const DerivedGroupoid dh = derive(h);
    const int n = g.order();

    bool cond_a = true;
    for (int a = 0; a < n && cond_a; ++a) {
        for (int b = 0; b < n && cond_a; ++b) {
            cond_a = bijection(dg.derived.at(a, b)) == dh.derived.at(bijection(a), bijection(b));
        }
    }
    bool cond_b = true;
    for (int a = 0; a < n && cond_b; ++a) {
        for (int b = 0; b < n && cond_b; ++b) {
            const int lhs = bijection(g.at(a, b));
            const int rhs = h.at(dh.base_inverse[bijection(dg.base_inverse[a])], bijection(b));
            cond_b = lhs == rhs;
        }
    }
    if (cond_a != cond_b) {
        throw TheoremViolation("Theorem 15 conditions disagree for a bijection");
    }
    return Theorem15Result{cond_a, cond_b};
}

struct Cor16Result {
    bool is_derived_automorphism;
    bool condition;
};

// Corollary 16: B is an automorphism of the derived semigroup iff
// B(a*b) = [B(a^-1)]^-1 * B(b). Both sides evaluated independently.
inline Cor16Result cor16_check(const Permutation& bijection, const FiniteGroupoid& g) {
    const Theorem15Result r = theorem15_check(bijection, g, g);
    return Cor16Result{r.cond_a, r.cond_b};
}

}  // namespace aglab

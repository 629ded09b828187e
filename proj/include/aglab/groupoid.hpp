#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "aglab/element_set.hpp"
#include "aglab/errors.hpp"

namespace aglab {

// A finite carrier [0, n) with a total binary operation given by a Cayley
// table. Row index is the left operand. Immutable after construction; labels
// are presentation-only and never take part in semantics or equality.
class FiniteGroupoid {
public:
    FiniteGroupoid(int order, const std::vector<int>& flat_table,
                   std::vector<std::string> labels = {})
        : order_(check_order(order)) {
        if (flat_table.size() != static_cast<std::size_t>(order * order)) {
            throw InputError("table has " + std::to_string(flat_table.size())
                             + " entries, expected " + std::to_string(order * order));
        }
        for (int v : flat_table) {
            if (v < 0 || v >= order) {
                throw InputError("table entry " + std::to_string(v)
                                 + " outside carrier of size " + std::to_string(order));
            }
        }
        for (int i = 0; i < order * order; ++i) {
            table_[i] = static_cast<std::uint8_t>(flat_table[i]);
        }
        if (!labels.empty()) {
            if (labels.size() != static_cast<std::size_t>(order)) {
                throw InputError("expected " + std::to_string(order) + " labels, got "
                                 + std::to_string(labels.size()));
            }
            for (std::size_t i = 0; i < labels.size(); ++i) {
                for (std::size_t j = i + 1; j < labels.size(); ++j) {
                    if (labels[i] == labels[j]) {
                        throw InputError("duplicate label \"" + labels[i] + "\"");
                    }
                }
            }
            labels_ = std::move(labels);
        }
    }

    int order() const { return order_; }

    // Table lookup with range checking.
    int product(int a, int b) const {
        if (a < 0 || a >= order_ || b < 0 || b >= order_) {
            throw InputError("element pair (" + std::to_string(a) + "," + std::to_string(b)
                             + ") outside carrier of size " + std::to_string(order_));
        }
        return at(a, b);
    }

    // Unchecked table lookup for internal loops whose indices are in range.
    int at(int a, int b) const { return table_[a * order_ + b]; }

    ElementSet carrier() const { return ElementSet::full(order_); }

    bool has_labels() const { return labels_.has_value(); }

    // Label of an element; defaults to its decimal index.
    std::string label(int x) const {
        if (x < 0 || x >= order_) {
            throw InputError("no element " + std::to_string(x));
        }
        return labels_ ? (*labels_)[x] : std::to_string(x);
    }

    std::vector<std::string> labels() const {
        std::vector<std::string> out;
        out.reserve(order_);
        for (int x = 0; x < order_; ++x) {
            out.push_back(label(x));
        }
        return out;
    }

    // The n*n table entries, row-major.
    std::vector<int> flat() const {
        std::vector<int> out(order_ * order_);
        for (int i = 0; i < order_ * order_; ++i) {
            out[i] = table_[i];
        }
        return out;
    }

    // Labels are ignored: two groupoids are equal iff their tables are.
    friend bool operator==(const FiniteGroupoid& a, const FiniteGroupoid& b) {
        return a.order_ == b.order_ && a.table_ == b.table_;
    }
    friend bool operator!=(const FiniteGroupoid& a, const FiniteGroupoid& b) {
        return !(a == b);
    }
    // Lexicographic order on (order, row-major entries); the canonical form of
    // a groupoid is the minimum of its isomorphism class under this order.
    friend bool operator<(const FiniteGroupoid& a, const FiniteGroupoid& b) {
        if (a.order_ != b.order_) return a.order_ < b.order_;
        return a.table_ < b.table_;
    }

private:
    static int check_order(int order) {
        if (order < 1) {
            throw InputError("order must be positive, got " + std::to_string(order));
        }
        if (order > kMaxOrder) {
            throw SizeError("order " + std::to_string(order) + " exceeds the supported bound "
                            + std::to_string(kMaxOrder));
        }
        return order;
    }

    std::uint8_t order_;
    std::array<std::uint8_t, kMaxOrder * kMaxOrder> table_{};  // stride = order_, rest zero
    std::optional<std::vector<std::string>> labels_;
};

// { a*b : a in A, b in B }.
inline ElementSet subset_product(const FiniteGroupoid& g, const ElementSet& a,
                                 const ElementSet& b) {
    if (a.universe() != g.order() || b.universe() != g.order()) {
        throw InputError("subset universe does not match groupoid order");
    }
    ElementSet out(g.order());
    for (int x : a) {
        for (int y : b) {
            out.insert(g.at(x, y));
        }
    }
    return out;
}

// E(S) = { x : x*x = x }.
inline ElementSet idempotents(const FiniteGroupoid& g) {
    ElementSet e(g.order());
    for (int x = 0; x < g.order(); ++x) {
        if (g.at(x, x) == x) {
            e.insert(x);
        }
    }
    return e;
}

// The groupoid induced on a product-closed subset, re-indexed by increasing
// element. old_of_new[i] is the carrier element behind new index i. Throws
// ClosureError naming a witness pair when the subset is not closed.
inline FiniteGroupoid induced_subgroupoid(const FiniteGroupoid& g, const ElementSet& members,
                                          std::vector<int>* old_of_new = nullptr) {
    if (members.universe() != g.order()) {
        throw InputError("subset universe does not match groupoid order");
    }
    if (members.empty()) {
        throw InputError("cannot induce a groupoid on the empty set");
    }
    std::array<int, kMaxOrder> new_of_old{};
    new_of_old.fill(-1);
    std::vector<int> old_elems;
    for (int x : members) {
        new_of_old[x] = static_cast<int>(old_elems.size());
        old_elems.push_back(x);
    }
    const int m = static_cast<int>(old_elems.size());
    std::vector<int> table(m * m);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            const int p = g.at(old_elems[i], old_elems[j]);
            if (!members.contains(p)) {
                throw ClosureError("subset not closed under the product", old_elems[i],
                                   old_elems[j]);
            }
            table[i * m + j] = new_of_old[p];
        }
    }
    std::vector<std::string> labels;
    if (g.has_labels()) {
        for (int x : old_elems) {
            labels.push_back(g.label(x));
        }
    }
    if (old_of_new != nullptr) {
        *old_of_new = old_elems;
    }
    return FiniteGroupoid(m, table, std::move(labels));
}

struct SquareSubgroupoid {
    ElementSet elements;       // S^2 as a subset of the original carrier
    FiniteGroupoid induced;    // the groupoid S^2 carries, re-indexed
    std::vector<int> old_of_new;
};

// S^2 = S*S with its induced groupoid. S^2 is closed by construction (a
// product of S^2 elements is a product of S elements), but the closure check
// is kept since induced_subgroupoid enforces it anyway.
inline SquareSubgroupoid square_subgroupoid(const FiniteGroupoid& g) {
    const ElementSet s = g.carrier();
    const ElementSet sq = subset_product(g, s, s);
    std::vector<int> old_of_new;
    FiniteGroupoid induced = induced_subgroupoid(g, sq, &old_of_new);
    return SquareSubgroupoid{sq, std::move(induced), std::move(old_of_new)};
}

struct PrincipalIdeals {
    ElementSet a_s;  // aS
    ElementSet s_a;  // Sa
};

inline PrincipalIdeals principal_ideals(const FiniteGroupoid& g, int a) {
    if (a < 0 || a >= g.order()) {
        throw InputError("no element " + std::to_string(a));
    }
    ElementSet single(g.order(), {a});
    const ElementSet s = g.carrier();
    return PrincipalIdeals{subset_product(g, single, s), subset_product(g, s, single)};
}

}  // namespace aglab

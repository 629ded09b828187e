#pragma once

#include <algorithm>
#include <chrono>
#include <functional>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "aglab/aggroup.hpp"
#include "aglab/structure.hpp"

namespace aglab {

enum class CensusClass { all, ag, ag_star_star, completely_inverse_agss, sga, ag_group };

inline const char* census_class_name(CensusClass c) {
    switch (c) {
        case CensusClass::all: return "all";
        case CensusClass::ag: return "ag";
        case CensusClass::ag_star_star: return "ag_star_star";
        case CensusClass::completely_inverse_agss: return "completely_inverse_agss";
        case CensusClass::sga: return "sga";
        case CensusClass::ag_group: return "ag_group";
    }
    return "?";
}

inline std::optional<CensusClass> census_class_from_name(const std::string& name) {
    if (name == "all") return CensusClass::all;
    if (name == "ag") return CensusClass::ag;
    if (name == "agss" || name == "ag_star_star") return CensusClass::ag_star_star;
    if (name == "cia" || name == "completely_inverse_agss")
        return CensusClass::completely_inverse_agss;
    if (name == "sga") return CensusClass::sga;
    if (name == "aggroup" || name == "ag_group") return CensusClass::ag_group;
    return std::nullopt;
}

enum class EnumMethod { automatic, naive, pruned };

// Laws a partial table can already violate. Each one must be implied by the
// class predicate on complete tables, which makes pruning on it sound; the
// leaf predicate stays authoritative either way.
enum class PruneLaw { invertive, ag_star_star, associative, commutative, unique_inverses };

struct ClassSpec {
    std::string name;
    std::function<bool(const FiniteGroupoid&)> predicate;
    std::vector<PruneLaw> prunes;
    // Pre-assign row 0 to the identity row. Sound for classes with a left
    // identity: every isomorphism class has a representative whose left
    // identity is element 0, and results are canonicalized afterwards.
    bool force_left_identity = false;
};

struct SearchStats {
    std::uint64_t nodes = 0;     // cell assignments tried
    std::uint64_t pruned = 0;    // assignments rejected by a prune check
    std::uint64_t leaves = 0;    // complete tables reached
    std::uint64_t accepted = 0;  // complete tables satisfying the predicate
    double wall_seconds = 0;     // not part of the canonical JSON report
};

struct CensusResult {
    int order = 0;
    std::string class_name;
    std::vector<FiniteGroupoid> canonical_tables;  // sorted, pairwise distinct
    SearchStats stats;

    int count() const { return static_cast<int>(canonical_tables.size()); }
};

struct CensusOptions {
    EnumMethod method = EnumMethod::automatic;
    int jobs = 1;
    // Skip partial tables some relabeling makes lexicographically smaller on
    // the determined prefix. Optimization only: never changes the result set.
    bool symmetry_break = false;
    // Unlocks the unpruned order-4 full enumeration (4^16 tables).
    bool allow_exhaustive_unpruned = false;
};

inline ClassSpec class_spec(CensusClass c) {
    switch (c) {
        case CensusClass::all:
            return {"all", [](const FiniteGroupoid&) { return true; }, {}, false};
        case CensusClass::ag:
            return {"ag",
                    [](const FiniteGroupoid& g) { return check_law(g, Law::invertive).holds; },
                    {PruneLaw::invertive},
                    false};
        case CensusClass::ag_star_star:
            return {"ag_star_star",
                    [](const FiniteGroupoid& g) {
                        return check_law(g, Law::invertive).holds
                               && check_law(g, Law::ag_star_star).holds;
                    },
                    {PruneLaw::invertive, PruneLaw::ag_star_star},
                    false};
        case CensusClass::completely_inverse_agss:
            return {"completely_inverse_agss",
                    [](const FiniteGroupoid& g) {
                        const PropertyReport r = classify(g);
                        if (r.theorem3_violation) {
                            throw TheoremViolation(
                                "Theorem 3 characterizations disagree during census");
                        }
                        return r.class3 == Class3::all_three;
                    },
                    {PruneLaw::invertive, PruneLaw::ag_star_star, PruneLaw::unique_inverses},
                    false};
        case CensusClass::sga:
            return {"sga",
                    [](const FiniteGroupoid& g) {
                        try {
                            clifford_decompose(g);
                            return true;
                        } catch (const NotSemilatticeOfAbelianGroups&) {
                            return false;
                        }
                    },
                    {PruneLaw::commutative, PruneLaw::associative, PruneLaw::unique_inverses},
                    false};
        case CensusClass::ag_group:
            return {"ag_group",
                    [](const FiniteGroupoid& g) { return ag_group_report(g).is_ag_group; },
                    {PruneLaw::invertive, PruneLaw::ag_star_star, PruneLaw::unique_inverses},
                    true};
    }
    throw InputError("unknown census class");
}

namespace census_detail {

struct PartialTable {
    int n = 0;
    std::array<std::int8_t, kMaxOrder * kMaxOrder> t{};  // stride n, -1 unassigned

    int get(int a, int b) const { return t[a * n + b]; }
    void set(int a, int b, int v) { t[a * n + b] = static_cast<std::int8_t>(v); }
};

// (xy)z = (zy)x on one triple; unknown cells make the instance undecided.
inline bool invertive_eval(const PartialTable& pt, int x, int y, int z) {
    const int p = pt.get(x, y);
    if (p < 0) return true;
    const int lhs = pt.get(p, z);
    if (lhs < 0) return true;
    const int q = pt.get(z, y);
    if (q < 0) return true;
    const int rhs = pt.get(q, x);
    if (rhs < 0) return true;
    return lhs == rhs;
}

// Checks every invertive instance the assignment of cell (a,b) could have
// completed: the new cell appears in one of the four lookup positions.
inline bool invertive_ok(const PartialTable& pt, int a, int b) {
    const int n = pt.n;
    for (int z = 0; z < n; ++z) {
        if (!invertive_eval(pt, a, b, z)) return false;  // (x,y) = (a,b)
        if (!invertive_eval(pt, z, b, a)) return false;  // (z,y) = (a,b)
    }
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
            if (pt.get(x, y) != a) continue;
            if (!invertive_eval(pt, x, y, b)) return false;  // (xy, z) = (a,b)
            if (!invertive_eval(pt, b, y, x)) return false;  // (zy, x) = (a,b)
        }
    }
    return true;
}

// x(yz) = y(xz) on one triple.
inline bool agss_eval(const PartialTable& pt, int x, int y, int z) {
    const int yz = pt.get(y, z);
    if (yz < 0) return true;
    const int lhs = pt.get(x, yz);
    if (lhs < 0) return true;
    const int xz = pt.get(x, z);
    if (xz < 0) return true;
    const int rhs = pt.get(y, xz);
    if (rhs < 0) return true;
    return lhs == rhs;
}

inline bool agss_ok(const PartialTable& pt, int a, int b) {
    const int n = pt.n;
    for (int x = 0; x < n; ++x) {
        if (!agss_eval(pt, x, a, b)) return false;  // (y,z) = (a,b)
        if (!agss_eval(pt, a, x, b)) return false;  // (x,z) = (a,b)
    }
    for (int y = 0; y < n; ++y) {
        for (int z = 0; z < n; ++z) {
            if (pt.get(y, z) != b) continue;
            if (!agss_eval(pt, a, y, z)) return false;  // (x, yz) = (a,b)
            if (!agss_eval(pt, y, a, z)) return false;  // (y, xz) = (a,b)
        }
    }
    return true;
}

// (xy)z = x(yz) on one triple.
inline bool assoc_eval(const PartialTable& pt, int x, int y, int z) {
    const int xy = pt.get(x, y);
    if (xy < 0) return true;
    const int lhs = pt.get(xy, z);
    if (lhs < 0) return true;
    const int yz = pt.get(y, z);
    if (yz < 0) return true;
    const int rhs = pt.get(x, yz);
    if (rhs < 0) return true;
    return lhs == rhs;
}

inline bool assoc_ok(const PartialTable& pt, int a, int b) {
    const int n = pt.n;
    for (int z = 0; z < n; ++z) {
        if (!assoc_eval(pt, a, b, z)) return false;  // (x,y) = (a,b)
        if (!assoc_eval(pt, z, a, b)) return false;  // (y,z) = (a,b)
    }
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
            if (pt.get(x, y) == a && !assoc_eval(pt, x, y, b)) return false;  // (xy, z)
            if (pt.get(x, y) == b && !assoc_eval(pt, a, x, y)) return false;  // (x, yz)
        }
    }
    return true;
}

// Two distinct mutual inverses of one element, or a mutual inverse that
// fails to commute, rule out every completion with unique commuting
// inverses.
inline bool unique_inverses_ok(const PartialTable& pt) {
    const int n = pt.n;
    for (int a = 0; a < n; ++a) {
        int partner = -1;
        for (int b = 0; b < n; ++b) {
            const int ab = pt.get(a, b);
            const int ba = pt.get(b, a);
            if (ab < 0 || ba < 0) continue;
            if (pt.get(ab, a) != a || pt.get(ba, b) != b) continue;
            if (ab != ba) return false;
            if (partner >= 0 && partner != b) return false;
            partner = b;
        }
    }
    return true;
}

// True when some relabeling is already strictly smaller on the determined
// row-major prefix; such a partial table cannot complete to the
// lexicographic minimum of any isomorphism class.
inline bool dominated(const PartialTable& pt) {
    const int n = pt.n;
    std::array<int, kMaxOrder> perm{};
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::array<int, kMaxOrder> inverse{};
    while (std::next_permutation(perm.begin(), perm.begin() + n)) {
        for (int i = 0; i < n; ++i) inverse[perm[i]] = i;
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                const int value = pt.get(i, j);
                if (value < 0) goto next_perm;
                const int source = pt.get(inverse[i], inverse[j]);
                if (source < 0) goto next_perm;
                const int image = perm[source];
                if (image < value) return true;
                if (image > value) goto next_perm;
            }
        }
    next_perm:;
    }
    return false;
}

class Searcher {
public:
    Searcher(int n, const ClassSpec& spec, bool symmetry_break)
        : n_(n), spec_(spec), symmetry_break_(symmetry_break) {}

    bool consistent(const PartialTable& pt, int a, int b) const {
        for (const PruneLaw law : spec_.prunes) {
            switch (law) {
                case PruneLaw::invertive:
                    if (!invertive_ok(pt, a, b)) return false;
                    break;
                case PruneLaw::ag_star_star:
                    if (!agss_ok(pt, a, b)) return false;
                    break;
                case PruneLaw::associative:
                    if (!assoc_ok(pt, a, b)) return false;
                    break;
                case PruneLaw::commutative: {
                    const int mirror = pt.get(b, a);
                    if (mirror >= 0 && mirror != pt.get(a, b)) return false;
                    break;
                }
                case PruneLaw::unique_inverses:
                    if (!unique_inverses_ok(pt)) return false;
                    break;
            }
        }
        if (symmetry_break_ && dominated(pt)) return false;
        return true;
    }

    // Explores all completions of pt starting at cell index `from`.
    void complete(PartialTable& pt, const std::vector<std::pair<int, int>>& cells,
                  std::size_t from, SearchStats& stats, std::set<FiniteGroupoid>& found) const {
        if (from == cells.size()) {
            leaf(pt, stats, found);
            return;
        }
        const auto [a, b] = cells[from];
        for (int v = 0; v < n_; ++v) {
            pt.set(a, b, v);
            ++stats.nodes;
            if (consistent(pt, a, b)) {
                complete(pt, cells, from + 1, stats, found);
            } else {
                ++stats.pruned;
            }
        }
        pt.set(a, b, -1);
    }

    void leaf(const PartialTable& pt, SearchStats& stats,
              std::set<FiniteGroupoid>& found) const {
        ++stats.leaves;
        std::vector<int> flat(n_ * n_);
        for (int i = 0; i < n_ * n_; ++i) flat[i] = pt.t[i];
        FiniteGroupoid g(n_, flat);
        if (spec_.predicate(g)) {
            ++stats.accepted;
            found.insert(canonical_form(g).canonical_table);
        }
    }

    // Walks the prefix tree up to `depth` cells; calls sink on every
    // consistent prefix. Stats are recorded only when `stats` is non-null so
    // that re-walks by parallel workers do not double-count.
    template <typename Sink>
    void walk_prefixes(PartialTable& pt, const std::vector<std::pair<int, int>>& cells,
                       std::size_t idx, std::size_t depth, SearchStats* stats,
                       Sink&& sink) const {
        if (idx == depth) {
            sink(pt);
            return;
        }
        const auto [a, b] = cells[idx];
        for (int v = 0; v < n_; ++v) {
            pt.set(a, b, v);
            if (stats != nullptr) ++stats->nodes;
            if (consistent(pt, a, b)) {
                walk_prefixes(pt, cells, idx + 1, depth, stats, sink);
            } else if (stats != nullptr) {
                ++stats->pruned;
            }
        }
        pt.set(a, b, -1);
    }

private:
    int n_;
    const ClassSpec& spec_;
    bool symmetry_break_;
};

inline CensusResult enumerate_pruned(int n, const ClassSpec& spec, const CensusOptions& opts) {
    PartialTable base;
    base.n = n;
    base.t.fill(-1);
    if (spec.force_left_identity) {
        for (int j = 0; j < n; ++j) base.set(0, j, j);
    }
    std::vector<std::pair<int, int>> cells;
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            if (base.get(a, b) < 0) cells.emplace_back(a, b);
        }
    }
    // Parallel split point: the first two rows of free cells. Every prefix
    // subtree is an independent task; workers claim prefixes round-robin by
    // ordinal, so totals cannot depend on the worker count.
    const std::size_t depth = std::min<std::size_t>(2 * n, cells.size());
    const int jobs = std::max(1, opts.jobs);

    const Searcher searcher(n, spec, opts.symmetry_break);
    std::vector<SearchStats> worker_stats(jobs);
    std::vector<std::set<FiniteGroupoid>> worker_found(jobs);
    SearchStats prefix_stats;

    const auto run_worker = [&](int worker) {
        std::uint64_t ordinal = 0;
        PartialTable pt = base;
        searcher.walk_prefixes(
            pt, cells, 0, depth, worker == 0 ? &prefix_stats : nullptr,
            [&](PartialTable& prefix) {
                if (static_cast<int>(ordinal++ % jobs) != worker) return;
                searcher.complete(prefix, cells, depth, worker_stats[worker],
                                  worker_found[worker]);
            });
    };

    if (jobs == 1) {
        run_worker(0);
    } else {
        std::vector<std::exception_ptr> errors(jobs);
        std::vector<std::thread> threads;
        threads.reserve(jobs);
        for (int w = 0; w < jobs; ++w) {
            threads.emplace_back([&, w] {
                try {
                    run_worker(w);
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        }
        for (std::thread& t : threads) t.join();
        for (const std::exception_ptr& error : errors) {
            if (error) std::rethrow_exception(error);
        }
    }

    CensusResult result;
    result.order = n;
    result.class_name = spec.name;
    result.stats = prefix_stats;
    std::set<FiniteGroupoid> merged;
    for (int w = 0; w < jobs; ++w) {
        result.stats.nodes += worker_stats[w].nodes;
        result.stats.pruned += worker_stats[w].pruned;
        result.stats.leaves += worker_stats[w].leaves;
        result.stats.accepted += worker_stats[w].accepted;
        merged.merge(worker_found[w]);
    }
    result.canonical_tables.assign(merged.begin(), merged.end());
    return result;
}

inline CensusResult enumerate_naive(int n, const ClassSpec& spec) {
    CensusResult result;
    result.order = n;
    result.class_name = spec.name;
    std::set<FiniteGroupoid> found;
    std::vector<int> flat(n * n, 0);
    while (true) {
        ++result.stats.nodes;
        ++result.stats.leaves;
        FiniteGroupoid g(n, flat);
        if (spec.predicate(g)) {
            ++result.stats.accepted;
            found.insert(canonical_form(g).canonical_table);
        }
        int k = n * n - 1;
        while (k >= 0 && flat[k] == n - 1) flat[k--] = 0;
        if (k < 0) break;
        ++flat[k];
    }
    result.canonical_tables.assign(found.begin(), found.end());
    return result;
}

}  // namespace census_detail

// Enumerates the isomorphism classes of order-n members of a custom class.
inline CensusResult enumerate_custom(int n, const ClassSpec& spec, CensusOptions opts = {}) {
    if (n < 1) {
        throw InputError("census order must be positive");
    }
    if (n > 5) {
        throw SizeError("census supports orders 1 to 5");
    }
    if (n == 5 && !spec.force_left_identity) {
        throw SizeError("order-5 census is supported only for classes with a left identity");
    }
    if (n >= 4 && spec.prunes.empty() && !opts.allow_exhaustive_unpruned) {
        throw SizeError("unpruned order-4 enumeration scans 4^16 tables; "
                        "pass --exhaustive-unpruned to run it anyway");
    }
    EnumMethod method = opts.method;
    if (method == EnumMethod::automatic) method = EnumMethod::pruned;
    if (method == EnumMethod::naive && n > 3) {
        throw SizeError("the naive full scan is supported only up to order 3");
    }
    const auto start = std::chrono::steady_clock::now();
    CensusResult result = method == EnumMethod::naive
                              ? census_detail::enumerate_naive(n, spec)
                              : census_detail::enumerate_pruned(n, spec, opts);
    result.stats.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
}

inline CensusResult enumerate_class(int n, CensusClass cls, CensusOptions opts = {}) {
    return enumerate_custom(n, class_spec(cls), opts);
}

struct OmegaPerSga {
    FiniteGroupoid sga;      // canonical representative
    int aut2e_count;
    int distinct_generated;  // distinct canonical groupoids its AUT2e members produce
};

struct OmegaReport {
    int order = 0;
    bool equal = false;
    std::vector<FiniteGroupoid> direct;     // canonical completely inverse AG** census
    std::vector<FiniteGroupoid> generated;  // canonical forms of every construct(T, A)
    std::vector<OmegaPerSga> per_sga;
};

// Realizes the Omega correspondence at one order: the canonical forms found
// by direct enumeration must coincide with the canonical forms generated
// from every (semilattice of abelian groups, involutive E-fixed
// automorphism) pair.
inline OmegaReport omega_cross_check(int n, CensusOptions opts = {}) {
    if (n > 4) {
        throw SizeError("omega cross-check supports orders 1 to 4");
    }
    OmegaReport report;
    report.order = n;
    report.direct = enumerate_class(n, CensusClass::completely_inverse_agss, opts).canonical_tables;

    const CensusResult sga_census = enumerate_class(n, CensusClass::sga, opts);
    std::set<FiniteGroupoid> generated;
    for (const FiniteGroupoid& sga : sga_census.canonical_tables) {
        std::set<FiniteGroupoid> local;
        const std::vector<Automorphism> members = aut2e(sga);
        for (const Automorphism& member : members) {
            const StructurePair pair = make_structure_pair(sga, member.perm);
            local.insert(canonical_form(construct_thm20(pair)).canonical_table);
        }
        generated.insert(local.begin(), local.end());
        report.per_sga.push_back(OmegaPerSga{sga, static_cast<int>(members.size()),
                                             static_cast<int>(local.size())});
    }
    report.generated.assign(generated.begin(), generated.end());
    report.equal = report.direct == report.generated;
    return report;
}

// Proposition 18 at one order: deriving lands every completely inverse
// AG**-groupoid on a semilattice of abelian groups, and isomorphic inputs
// land on the same canonical derived form.
inline bool prop18_check(int n, CensusOptions opts = {}) {
    if (n > 4) {
        throw SizeError("prop18 check supports orders 1 to 4");
    }
    const CensusResult census =
        enumerate_class(n, CensusClass::completely_inverse_agss, opts);
    for (const FiniteGroupoid& g : census.canonical_tables) {
        const DerivedGroupoid d = derive(g);
        clifford_decompose(d.derived);
        const FiniteGroupoid canon = canonical_form(d.derived).canonical_table;
        for (const Permutation& phi : all_permutations(n)) {
            const FiniteGroupoid relabeled = apply_permutation(g, phi);
            if (canonical_form(derive(relabeled).derived).canonical_table != canon) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace aglab

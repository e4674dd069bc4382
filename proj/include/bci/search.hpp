#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "bci/algebra.hpp"

namespace bci {

/// The lexicographically minimal row-major table over all relabelings that
/// fix index 0. Two algebras have equal canonical forms iff they are
/// isomorphic via a zero-fixing bijection. Brute-force minimisation over
/// (n-1)! relabelings; fine for the supported orders.
struct CanonicalForm {
    std::vector<Elem> table;

    bool operator==(const CanonicalForm&) const = default;
    bool operator<(const CanonicalForm& other) const { return table < other.table; }
};

CanonicalForm canonical_form(const FiniteAlgebra& a);

/// Stable 64-bit FNV-1a over the canonical table, for manifests.
std::uint64_t canonical_hash(const CanonicalForm& c);

/// Enumeration is hard-capped here; beyond it the search space is out of
/// desk-scale reach regardless of flags.
inline constexpr int max_enumeration_order = 6;

struct EnumerationOptions {
    int order = 1;
    bool require_bck = false;
    bool require_p_semisimple = false;
    std::vector<int> require_fenyves;  // F_i indices that must hold
    bool up_to_isomorphism = true;
    std::optional<int> limit;
};

/// Every Cayley table of the given order satisfying the BCI axioms (and any
/// extra required predicates), found by cell-by-cell backtracking in
/// row-major order. x*x = 0 and x*0 = x are filled in up front; the nested
/// defining identity and antisymmetry are checked incrementally as soon as
/// every product they touch is determined. With up_to_isomorphism the output
/// is deduplicated by canonical form; either way it is sorted, so equal
/// options always produce identical sequences. Throws OrderTooLargeError
/// beyond max_enumeration_order.
std::vector<FiniteAlgebra> enumerate_bci(const EnumerationOptions& opts);

using AlgebraPredicate = std::function<bool(const FiniteAlgebra&)>;

/// First enumerated algebra satisfying `want` and not `avoid`, if any.
std::optional<FiniteAlgebra> find_witness(const EnumerationOptions& opts,
                                          const AlgebraPredicate& want,
                                          const AlgebraPredicate& avoid);

/// One row of the theorem verification matrix.
struct SweepRow {
    std::string id;
    int pass = 0;
    int fail = 0;
    int not_applicable = 0;
    std::string first_failure;  // human-readable instance, empty when fail == 0
};

struct TheoremMatrix {
    int order_max = 0;
    std::vector<SweepRow> rows;

    int total_failures() const;
    const SweepRow* row(const std::string& id) const;
};

/// Drives every theorem, lemma and corollary check over the enumerated BCI
/// corpus up to order_max (and, for the statements about arbitrary magmas,
/// over every magma of order <= min(3, order_max)), paired with every
/// Boolean subgroup of each algebra's automorphism group. Zero failures is
/// the acceptance bar; not-applicable counts keep conditional statements
/// honest about vacuity. Throws OrderTooLargeError beyond
/// max_enumeration_order.
TheoremMatrix corpus_sweep(int order_max);

}  // namespace bci

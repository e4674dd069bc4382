#pragma once

#include <string>
#include <vector>

#include "bci/algebra.hpp"

namespace bci {

/// A permutation of element indices, written as its image array. Doubles as
/// a candidate automorphism and as a candidate regular bijection.
struct Bijection {
    std::vector<Elem> image;

    static Bijection identity(int n);

    int size() const { return static_cast<int>(image.size()); }
    Elem operator()(Elem x) const { return image[static_cast<size_t>(x)]; }
    bool is_identity() const;
    bool is_permutation() const;

    bool operator==(const Bijection&) const = default;
    bool operator<(const Bijection& other) const { return image < other.image; }
};

/// Right-action composition: apply f first, then g. (x)(f;g) = g(f(x)).
Bijection compose(const Bijection& f, const Bijection& g);
Bijection inverse(const Bijection& f);

/// A triple (U, V, W) with xU * yV = (x*y)W for all x, y.
struct Autotopism {
    Bijection u, v, w;
};

bool is_autotopism(const FiniteAlgebra& a, const Autotopism& t);

/// A set of automorphisms closed under composition and inverse, containing
/// the identity, kept sorted with the identity first.
struct AutomorphismGroup {
    std::vector<Bijection> elements;

    int size() const { return static_cast<int>(elements.size()); }
    const Bijection& identity() const { return elements.front(); }
    /// Position of `b` in `elements`, or -1.
    int index_of(const Bijection& b) const;
    bool is_boolean() const;  // abelian with every non-identity element an involution
};

/// Exhaustive pair check of b(x*y) = b(x)*b(y).
bool is_automorphism(const FiniteAlgebra& a, const Bijection& b);

/// The full group of zero-fixing automorphisms, found by point-by-point
/// backtracking with forward checking against the Cayley table. The result
/// is sorted (identity first) and its group axioms are re-verified before
/// return.
AutomorphismGroup automorphism_group(const FiniteAlgebra& a);

/// Every elementary abelian 2-subgroup of g (abelian, exponent <= 2),
/// including the trivial subgroup, found by breadth-first closure over
/// involution subsets. Deduplicated; ordered by size then lexicographically
/// on the sorted element images.
std::vector<AutomorphismGroup> boolean_automorphism_subgroups(const AutomorphismGroup& g);

/// (d, I, d) is an autotopism: d(x)*y = d(x*y) for all x, y.
bool is_lambda_regular(const FiniteAlgebra& a, const Bijection& d);
/// (I, d, d) is an autotopism: x*d(y) = d(x*y) for all x, y.
bool is_rho_regular(const FiniteAlgebra& a, const Bijection& d);
/// Self-adjoint mu-regularity: d(x)*y = x*d(y) for all x, y.
bool is_mu_regular(const FiniteAlgebra& a, const Bijection& d);

/// One regularity notion audited three ways: the defining autotopism form
/// plus its two translation-map reformulations. All sub-results are carried
/// so a disagreement pinpoints which side broke.
struct RegularityAudit {
    bool regular;
    bool right_translation_form;
    bool left_translation_form;

    bool agrees() const {
        return regular == right_translation_form && regular == left_translation_form;
    }
};

/// For each of lambda / rho / mu regularity of d on a:
///   lambda: d lambda-regular <=> dR_x = R_xd      <=> L_{xd} = L_xd   (all x)
///   rho:    d rho-regular    <=> dL_x = L_xd      <=> R_{xd} = R_xd   (all x)
///   mu:     d mu-regular     <=> dR_x = R_{xd}    <=> L_{xd} = dL_x   (all x)
/// Composed translation maps are compared pointwise.
struct Lemma1Report {
    RegularityAudit lambda;
    RegularityAudit rho;
    RegularityAudit mu;

    bool all_agree() const { return lambda.agrees() && rho.agrees() && mu.agrees(); }
};

Lemma1Report lemma1_check(const FiniteAlgebra& a, const Bijection& d);

/// The two operator identities every automorphism satisfies:
///   R_y A = A R_{yA}   and   L_x A = A L_{xA}   (all x, y),
/// verified by comparing composed translation maps pointwise.
/// Throws NotAutomorphismError when A is not an automorphism of a.
struct Lemma2Report {
    bool right_translation_identity;
    bool left_translation_identity;

    bool both_hold() const { return right_translation_identity && left_translation_identity; }
};

Lemma2Report lemma2_check(const FiniteAlgebra& a, const Bijection& A);

}  // namespace bci

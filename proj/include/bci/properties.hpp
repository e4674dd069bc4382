#pragma once

#include <array>
#include <string>
#include <vector>

#include "bci/algebra.hpp"

namespace bci {

/// Uniform result carrier for a single decidable property of a finite magma.
///
/// `holds` is true iff `counterexample` is empty. When a check fails,
/// `violated` names the specific equation that broke (a compound property
/// like the BCI axioms has several) and `counterexample` carries the
/// lexicographically first violating tuple in that equation's scan order, so
/// output is deterministic and diff-stable.
struct PropertyWitness {
    std::string property;
    bool holds = true;
    std::string violated;            // empty when holds
    std::vector<Elem> counterexample;  // empty when holds

    static PropertyWitness pass(std::string property) { return {std::move(property), true, {}, {}}; }
    static PropertyWitness fail(std::string property, std::string violated,
                                std::vector<Elem> counterexample) {
        return {std::move(property), false, std::move(violated), std::move(counterexample)};
    }
};

/// BCI test straight from the three defining conditions:
///   (1) ((x*y)*(x*z))*(z*y) = 0
///   (2) x*0 = x
///   (3) x*y = 0 and y*x = 0 imply x = y
PropertyWitness is_bci_def1(const FiniteAlgebra& a);

/// Independent BCI test via the four-condition axiomatisation:
///   (1) ((x*y)*(x*z))*(z*y) = 0
///   (2) (x*(x*y))*y = 0
///   (3) x*x = 0
///   (4) x*y = 0 and y*x = 0 imply x = y
/// Shares no predicate code with is_bci_def1; the two are cross-validated
/// exhaustively in the acceptance suite.
PropertyWitness is_bci_thm1(const FiniteAlgebra& a);

PropertyWitness is_associative(const FiniteAlgebra& a);

/// The three equivalent faces of associativity on a BCI-algebra:
/// associativity itself, 0*x = x, and commutativity. Callers assert the
/// three agree; the bundle never collapses them into one boolean.
struct Theorem2Report {
    PropertyWitness associative;
    PropertyWitness zero_left_identity;
    PropertyWitness commutative;

    bool unanimous() const {
        return associative.holds == zero_left_identity.holds &&
               associative.holds == commutative.holds;
    }
};

/// Throws NotBciError when `a` is not BCI.
Theorem2Report theorem2_equivalents(const FiniteAlgebra& a);

/// 0*(0*x) = x for all x.
PropertyWitness is_p_semisimple(const FiniteAlgebra& a);

/// Nine equivalent characterisations of p-semisimplicity, in order:
///   [0] 0*(0*x) = x
///   [1] (x*y)*(z*u) = (x*z)*(y*u)            (medial law)
///   [2] 0*(y*x) = x*y
///   [3] (x*y)*(x*z) = z*y
///   [4] z*x = z*y implies x = y              (left cancellation)
///   [5] x*y = 0 implies x = y
///   [6] x*z = y*z implies x = y              (right cancellation)
///   [7] (y*x)*(z*x) = y*z
///   [8] (x*y)*(x*z) = 0*(y*z)
struct PSemisimpleReport {
    std::array<PropertyWitness, 9> witnesses;

    bool unanimous() const {
        for (const auto& w : witnesses)
            if (w.holds != witnesses[0].holds) return false;
        return true;
    }
};

/// Throws NotBciError when `a` is not BCI.
PSemisimpleReport p_semisimple_equivalents(const FiniteAlgebra& a);

/// 0*x = 0 for all x.
PropertyWitness is_bck(const FiniteAlgebra& a);

/// Latin-square test: every row and every column of the table is a
/// permutation.
PropertyWitness is_quasigroup(const FiniteAlgebra& a);

/// Quasigroup with a two-sided identity element.
PropertyWitness is_loop(const FiniteAlgebra& a);

/// The exchange identity (x*y)*z = (x*z)*y, evaluated on any magma. It is a
/// theorem that every BCI-algebra satisfies it; the suite asserts exactly
/// that, but the check itself does not require (or verify) BCI-ness.
PropertyWitness theorem6_holds(const FiniteAlgebra& a);

/// Quasi-associativity, here defined as ((x*y)*z)*(x*(y*z)) = 0 for all
/// x,y,z. This is a convention chosen from the BCI literature, isolated
/// behind this one predicate so it can be swapped; the theorem suite audits
/// it empirically (associative iff p-semisimple and quasi-associative).
/// Throws NotBciError when `a` is not BCI.
PropertyWitness is_quasi_associative(const FiniteAlgebra& a);

/// Associative loop in which every element squares to the identity.
PropertyWitness is_boolean_group(const FiniteAlgebra& a);

}  // namespace bci

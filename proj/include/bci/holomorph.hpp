#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bci/algebra.hpp"
#include "bci/morphisms.hpp"
#include "bci/properties.hpp"

namespace bci {

/// The A-holomorph of a base magma: the algebra on pairs (alpha, x) with
///   (alpha, x) o (beta, y) = (alpha beta, x beta * y),
/// where A is a Boolean group of automorphisms of the base. Pairs are
/// flattened to indices auto_index * n + elem; the automorphisms are kept
/// sorted with the identity first, so (I, 0) lands at flat index 0 and every
/// property check runs on `algebra` unchanged.
struct HolomorphAlgebra {
    FiniteAlgebra base;
    AutomorphismGroup autos;
    FiniteAlgebra algebra;

    int flat_index(int auto_index, Elem x) const { return auto_index * base.order() + x; }
    std::pair<int, Elem> unflatten(int flat) const {
        return {flat / base.order(), flat % base.order()};
    }
};

/// Throws NotAutomorphismGroupError when `autos` is not a group of
/// automorphisms of `base`, NotBooleanGroupError when it is not Boolean.
HolomorphAlgebra build_holomorph(const FiniteAlgebra& base, const AutomorphismGroup& autos);

/// The holomorph-BCI criterion on the base:
///   ((x d * y d) * (x * z g)) * (z * y) = 0  for all x,y,z and d,g in autos.
/// Scan order (x, y, z, d, g) lexicographic; a counterexample is stored as
/// {x, y, z, d_index, g_index}. Throws NotBciError when base is not BCI and
/// the group errors as build_holomorph.
PropertyWitness theorem9_condition(const FiniteAlgebra& base, const AutomorphismGroup& autos);

/// Holomorph is BCI iff the theorem9 condition holds on the (BCI) base.
struct Theorem9Report {
    PropertyWitness holomorph_bci;
    PropertyWitness condition;
    bool agree;
};

Theorem9Report verify_theorem9(const FiniteAlgebra& base, const AutomorphismGroup& autos);

/// Holomorph is BCI iff base is BCI and the condition holds; base may be any
/// magma here. When the holomorph is BCI, additionally re-verifies that the
/// diagonal {(I, x)} is a subalgebra isomorphic to the base under
/// x -> (I, x), checked pointwise.
struct Theorem10Report {
    bool holomorph_bci;
    bool base_bci;
    bool condition;
    bool agree;
    std::optional<bool> diagonal_isomorphic;  // absent unless holomorph is BCI
};

Theorem10Report verify_theorem10(const FiniteAlgebra& base, const AutomorphismGroup& autos);

/// Base p-semisimple iff holomorph p-semisimple (both must be BCI).
struct Theorem11Report {
    bool base_p_semisimple;
    bool holomorph_p_semisimple;
    bool agree;
};

Theorem11Report verify_theorem11(const FiniteAlgebra& base, const AutomorphismGroup& autos);

/// Base is BCK iff the diagonal subalgebra {(I, x)} is BCK inside the
/// holomorph (both structures must be BCI).
struct Theorem12Report {
    bool base_bck;
    bool diagonal_bck;
    bool agree;
};

Theorem12Report verify_theorem12(const FiniteAlgebra& base, const AutomorphismGroup& autos);

/// Base associative iff holomorph associative (both must be BCI); extended
/// with the corollary that each of the 46 associativity-forcing Bol-Moufang
/// identities transfers both ways.
struct Theorem13Report {
    bool base_associative;
    bool holomorph_associative;
    bool agree;
    bool associative_class_transfer_agree;
    std::vector<int> associative_class_disagreements;
};

Theorem13Report verify_theorem13(const FiniteAlgebra& base, const AutomorphismGroup& autos);

/// Which transfer theorem covers a Fenyves index, with its regularity
/// preconditions on the non-identity automorphisms:
///   theorem 14: rho-regular, order 2           (i = 27, 38)
///   theorem 15: lambda- and rho-regular, order 2  (i = 30, 40, 50, 53, 55, 56, 58)
///   theorem 16: lambda-regular, order 2        (i = 4, 5, 6, 10, 20, 21, 25, 31)
///   theorem 17: no precondition                (i = 42, 54)
/// Returns 0 for indices covered by no transfer theorem.
int transfer_theorem_for_index(int i);

/// F_i transfer between base and holomorph. `agree` is asserted only when
/// the theorem's preconditions hold; otherwise the instance is reported as
/// not applicable rather than failed. Throws UnsupportedIndexError for
/// indices outside the four theorem lists and NotBciError when either
/// structure is not BCI.
struct TransferReport {
    int index;
    int theorem;  // 14..17
    bool preconditions_hold;
    bool base_satisfies;
    bool holomorph_satisfies;
    std::optional<bool> agree;  // absent when preconditions fail
};

TransferReport verify_fenyves_transfer(const FiniteAlgebra& base, const AutomorphismGroup& autos,
                                       int i);

}  // namespace bci

#pragma once

#include <array>
#include <bitset>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "bci/algebra.hpp"
#include "bci/properties.hpp"

namespace bci {

/// A product of variable occurrences from {x, y, z} as a tiny binary tree.
/// Bol-Moufang terms have exactly four leaves over three distinct variables
/// (one repeated) and depth at most three; those shape constraints are
/// checked by the catalog tests, not enforced here.
class Term {
  public:
    /// Parses the dotted product notation used by the catalog: juxtaposition
    /// binds tighter than '.', parentheses override, variables are x, y, z.
    /// Examples: "xy.zx", "(xy.z)x", "x(y.zx)". Throws std::invalid_argument
    /// on malformed input.
    static Term parse(std::string_view text);

    Elem eval(const FiniteAlgebra& a, Elem x, Elem y, Elem z) const;

    /// Prints back in catalog notation (inverse of parse on catalog terms).
    std::string str() const;

    /// Leaf variables left to right, as 'x'/'y'/'z'.
    std::vector<char> leaf_sequence() const;
    int depth() const;

    bool operator==(const Term& other) const { return structurally_equal(other); }

  private:
    // var in 0..2 for a leaf; -1 for an internal node with two children.
    struct Node {
        int var;
        int left;
        int right;
    };

    std::vector<Node> nodes_;
    int root_ = -1;

    bool structurally_equal(const Term& other) const;
    friend struct TermBuilder;
};

struct FenyvesIdentity {
    int index;            // 1..60
    Term lhs;
    Term rhs;
    std::string text;     // e.g. "(xy.z)x = (x.yz)x"
    std::string name;     // e.g. "Moufang identity"; empty when unnamed
    bool is_associative_class;  // satisfying it forces associativity on a BCI-algebra
};

/// The sixty Bol-Moufang identities F1..F60, parsed once from an embedded
/// declarative table and returned in index order.
const std::vector<FenyvesIdentity>& identity_catalog();

/// The fourteen indices whose identities do not force associativity.
const std::array<int, 14>& non_associative_indices();

/// Exhaustive check of F_i over all n^3 assignments, (x,y,z) lexicographic.
/// Throws UnsupportedIndexError unless 1 <= i <= 60.
PropertyWitness satisfies_fenyves(const FiniteAlgebra& a, int i);

/// All sixty identity outcomes; bit i-1 is F_i.
struct FenyvesProfile {
    std::bitset<60> bits;

    bool satisfies(int index) const { return bits[static_cast<size_t>(index - 1)]; }
    std::uint64_t mask() const { return bits.to_ullong(); }
    /// 15 lowercase hex digits, zero padded, bit 0 = F1 in the least
    /// significant position.
    std::string hex() const;
    std::vector<int> satisfied_indices() const;
};

FenyvesProfile fenyves_profile(const FiniteAlgebra& a);

}  // namespace bci

#pragma once

#include <string>
#include <vector>

namespace bci {

/// Elements are dense indices 0..n-1; the distinguished zero always lives at
/// index 0 (ingestion relabels when a source file says otherwise).
using Elem = int;

/// Orders accepted from files and by the search algorithms. Everything here
/// is exhaustive and super-exponential in the order, so this is a safety rail,
/// not a tuning knob. Derived algebras (holomorphs) may be larger.
inline constexpr int max_supported_order = 12;

/// A finite magma with a distinguished zero, stored as a row-major Cayley
/// table: table[x*n + y] = x*y. Rows are left translations, columns right
/// translations. No axiom is assumed at construction; BCI status and friends
/// are computed properties. Immutable after construction.
class FiniteAlgebra {
  public:
    FiniteAlgebra(int order, std::vector<Elem> table, std::vector<std::string> labels = {});

    static FiniteAlgebra from_rows(const std::vector<std::vector<Elem>>& rows,
                                   std::vector<std::string> labels = {});

    int order() const { return order_; }
    Elem zero() const { return 0; }

    /// Unchecked table lookup; x and y must be valid. Hot path for the
    /// exhaustive scans.
    Elem at(Elem x, Elem y) const { return table_[static_cast<size_t>(x) * order_ + y]; }

    const std::vector<Elem>& table() const { return table_; }
    const std::vector<std::string>& labels() const { return labels_; }
    std::string label(Elem x) const;

    /// Mathematical identity: same order and same table. Labels are display
    /// metadata and do not participate.
    bool operator==(const FiniteAlgebra& other) const {
        return order_ == other.order_ && table_ == other.table_;
    }

  private:
    int order_;
    std::vector<Elem> table_;
    std::vector<std::string> labels_;
};

/// Checked product x*y; throws std::out_of_range on invalid indices.
Elem multiply(const FiniteAlgebra& a, Elem x, Elem y);

enum class TranslationKind { left, right };

/// L_x (image[t] = x*t) or R_x (image[t] = t*x) as a total map.
struct TranslationMap {
    TranslationKind kind;
    Elem base;
    std::vector<Elem> image;

    bool operator==(const TranslationMap&) const = default;
};

TranslationMap left_translation(const FiniteAlgebra& a, Elem x);
TranslationMap right_translation(const FiniteAlgebra& a, Elem x);

}  // namespace bci

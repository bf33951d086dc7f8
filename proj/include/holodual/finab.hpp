#pragma once

#include <string>
#include <vector>

#include "holodual/intmat.hpp"

namespace holodual {

using Int = long long;

/// Element of Q/Z as a reduced fraction num/den with 0 <= num < den.
/// Character values live here; the complex value is zeta(q) on demand.
struct QmodZ {
    Int num = 0;
    Int den = 1;

    QmodZ() = default;
    QmodZ(Int n, Int d); // reduces and normalizes into [0,1)

    QmodZ operator+(const QmodZ& rhs) const;
    QmodZ operator-() const;
    QmodZ scaled(Int k) const; // k * q mod 1
    bool operator==(const QmodZ& rhs) const = default;
    bool is_zero() const { return num == 0; }
};

/// Coordinates of a group element: one residue per invariant factor.
struct Element {
    std::vector<Int> coords;

    bool operator==(const Element& rhs) const = default;
};

/// Finite abelian group in invariant-factor normal form: d_1 | d_2 | ...,
/// every d_i >= 2. The trivial group is the empty factor list.
///
/// Elements are enumerated lexicographically on coordinates (first
/// coordinate most significant); tables across the library index by this
/// order.
class FiniteAbelianGroup {
public:
    FiniteAbelianGroup() = default; // trivial group
    explicit FiniteAbelianGroup(std::vector<Int> invariant_factors);

    static FiniteAbelianGroup trivial() { return FiniteAbelianGroup(); }
    static FiniteAbelianGroup cyclic(Int n); // n >= 1; n == 1 gives the trivial group

    int rank() const { return int(factors_.size()); }
    Int factor(int i) const { return factors_[size_t(i)]; }
    const std::vector<Int>& invariant_factors() const { return factors_; }
    Int order() const;
    Int exponent() const { return factors_.empty() ? 1 : factors_.back(); }

    Element zero() const;
    Element add(const Element& a, const Element& b) const;
    Element negate(const Element& a) const;
    bool contains(const Element& a) const;
    Int order_of(const Element& a) const;

    Element element_at(Int index) const;
    Int index_of(const Element& a) const;

    bool operator==(const FiniteAbelianGroup& rhs) const = default;
    std::string describe() const; // e.g. "Z/2 + Z/4", "0"

private:
    std::vector<Int> factors_;
};

/// Homomorphism between finite abelian groups, stored as the integer matrix
/// A with f(g)_i = sum_j A_ij g_j mod e_i (target factors e_i, source d_j).
/// Well-definedness requires e_i | A_ij * d_j for every entry; the
/// constructor reduces entries into [0, e_i) and validates.
class Hom {
public:
    Hom(FiniteAbelianGroup source, FiniteAbelianGroup target, IMat matrix);

    static Hom identity(const FiniteAbelianGroup& g);
    static Hom zero(const FiniteAbelianGroup& source, const FiniteAbelianGroup& target);

    const FiniteAbelianGroup& source() const { return source_; }
    const FiniteAbelianGroup& target() const { return target_; }
    const IMat& matrix() const { return matrix_; }

    Element operator()(const Element& g) const;

    /// Composition f * g = f after g.
    Hom operator*(const Hom& inner) const;

    Int image_order() const;  // exact, via the cokernel of [A | diag(e)]
    Int kernel_order() const; // |source| / image_order
    bool is_injective() const { return kernel_order() == 1; }
    bool is_surjective() const { return image_order() == target_.order(); }

    bool operator==(const Hom& rhs) const = default;

private:
    FiniteAbelianGroup source_, target_;
    IMat matrix_;
};

/// The dual group: same invariant factors, tagged as the character side.
/// Only the pairing below identifies its elements with characters; code
/// must never equate dual coordinates with primal coordinates directly.
struct DualGroup {
    FiniteAbelianGroup group;
};

DualGroup dual_group(const FiniteAbelianGroup& g);

/// <g, chi> = sum_j g_j chi_j / d_j mod 1. Biadditive, nondegenerate.
QmodZ pair(const FiniteAbelianGroup& g, const Element& x, const Element& chi);

/// Dual of f : G -> H is the map H^ -> G^ with <g, dual(f)(eta)> = <f(g), eta>.
Hom dual_hom(const Hom& f);

/// The evaluation map G -> G^^, iota(g): chi -> chi(g). In the canonical
/// coordinates of this module its matrix is the identity.
Hom evaluation_map(const FiniteAbelianGroup& g);

bool is_isomorphism(const Hom& f);

/// Cokernel of a relation matrix (rows = generators, columns = relations),
/// normalized to invariant factors. Throws InfiniteCokernel when the
/// quotient is infinite.
FiniteAbelianGroup from_presentation(const IMat& relations);

/// A + B in normal form, with the four canonical maps.
struct DirectSum {
    FiniteAbelianGroup sum;
    Hom into_sum_first;   // A -> sum
    Hom into_sum_second;  // B -> sum
    Hom onto_first;       // sum -> A
    Hom onto_second;      // sum -> B
};

DirectSum direct_sum(const FiniteAbelianGroup& a, const FiniteAbelianGroup& b);

} // namespace holodual

#pragma once

#include <vector>

#include "holodual/cyclo.hpp"
#include "holodual/fingroup.hpp"
#include "holodual/qmat.hpp"
#include "holodual/towers.hpp"

namespace holodual {

/// A locally constant function on (the limit of) a projective tower,
/// recorded as an exact value table at a declared level. The table indexes
/// elements of G_level in the library's lexicographic enumeration; the
/// denoted function on the limit is the pullback along the projection.
class LocallyConstantFunction {
public:
    LocallyConstantFunction(ProGroup tower, int level, std::vector<Cyclotomic> table);

    static LocallyConstantFunction constant(ProGroup tower, const Cyclotomic& value);
    /// Indicator of a single element of G_level.
    static LocallyConstantFunction delta(ProGroup tower, int level, const Element& at);

    const ProGroup& tower() const { return tower_; }
    int level() const { return level_; }
    const std::vector<Cyclotomic>& table() const { return table_; }
    const Cyclotomic& value_at(const Element& g) const;

    bool operator==(const LocallyConstantFunction& rhs) const; // equality after inflation

private:
    ProGroup tower_;
    int level_;
    std::vector<Cyclotomic> table_;
};

/// Rewrite the same function at a higher level (pullback along the
/// transition G_m -> G_level).
LocallyConstantFunction inflate(const LocallyConstantFunction& f, int m);

/// Smallest k such that f is constant on every fiber of G_{f.level} -> G_k.
int minimal_level(const LocallyConstantFunction& f);

/// Exact Fourier coefficients over the characters of G_{f.level}:
/// c_chi = |G|^{-1} sum_g f(g) zeta(-<g,chi>), indexed by the dual element
/// enumeration. Reconstruction is exact.
std::vector<Cyclotomic> decompose_characters(const LocallyConstantFunction& f);

LocallyConstantFunction reconstruct_from_characters(const ProGroup& tower, int level,
                                                    const std::vector<Cyclotomic>& coeffs);

/// The linear isomorphism C^A (x) C^B -> C^{A x B}, delta_a (x) delta_b ->
/// delta_{(a,b)}. Columns index tensor-basis pairs (a-major); rows index
/// elements of the normalized direct sum. The matrix is a permutation.
struct PsiIso {
    DirectSum product;
    QMat matrix;
};

PsiIso psi_iso(const FiniteAbelianGroup& a, const FiniteAbelianGroup& b);

/// Same map for table groups (non-abelian allowed). There is no normal
/// form to pass through, so the product group uses pair-major enumeration
/// and the matrix is the identity permutation in those coordinates.
struct GroupPsiIso {
    FiniteGroup product;
    QMat matrix;
};

GroupPsiIso psi_iso(const FiniteGroup& a, const FiniteGroup& b);

} // namespace holodual

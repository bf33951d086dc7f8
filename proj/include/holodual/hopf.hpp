#pragma once

#include <gmpxx.h>

#include <memory>
#include <string>
#include <vector>

#include "holodual/cyclo.hpp"
#include "holodual/fingroup.hpp"
#include "holodual/qmat.hpp"
#include "holodual/report.hpp"

namespace holodual {

/// Sparse rational vector: sorted (index, coefficient) pairs, no zeros.
struct SparseVec {
    std::vector<std::pair<int, mpq_class>> terms;

    static SparseVec basis(int i) { return SparseVec{{{i, mpq_class(1)}}}; }
    void accumulate(int i, const mpq_class& c);
    void normalize(); // sort, combine, drop zeros
    bool operator==(const SparseVec& rhs) const = default;
    bool empty() const { return terms.empty(); }
};

/// One term c * e_left (x) e_right of a comultiplication value.
struct CoTerm {
    int left, right;
    mpq_class coeff;
    bool operator==(const CoTerm& rhs) const = default;
};
using CoVec = std::vector<CoTerm>; // sorted by (left, right), no zeros

void normalize(CoVec& v);

/// Finite-dimensional Hopf algebra over the rationals, given by exact
/// structure tensors. Construction checks shapes only; axiom verification
/// is explicit (check_hopf_axioms), so corrupted algebras are constructible
/// as negative controls.
class FDHopf {
public:
    FDHopf(int dim, std::vector<SparseVec> mult, SparseVec unit, std::vector<CoVec> comult,
           std::vector<mpq_class> counit, QMat antipode, std::string name = "");

    int dim() const { return dim_; }
    const std::string& name() const { return name_; }

    const SparseVec& mul_basis(int i, int j) const {
        return mult_[size_t(i) * size_t(dim_) + size_t(j)];
    }
    const CoVec& comult_basis(int i) const { return comult_[size_t(i)]; }
    const mpq_class& counit_coef(int i) const { return counit_[size_t(i)]; }
    const SparseVec& unit() const { return unit_; }
    const QMat& antipode() const { return antipode_; }

    SparseVec multiply(const SparseVec& x, const SparseVec& y) const;
    CoVec comultiply(const SparseVec& x) const;
    SparseVec apply_antipode(const SparseVec& x) const;
    mpq_class counit_of(const SparseVec& x) const;

    bool operator==(const FDHopf& rhs) const; // structural tensor equality

private:
    int dim_;
    std::vector<SparseVec> mult_;
    SparseVec unit_;
    std::vector<CoVec> comult_;
    std::vector<mpq_class> counit_;
    QMat antipode_;
    std::string name_;
};

using FDHopfPtr = std::shared_ptr<const FDHopf>;

/// C[G]: basis = group elements, m(g,h) = gh, Delta g = g (x) g,
/// eps(g) = 1, S(g) = g^{-1}.
FDHopf group_algebra_hopf(const FiniteGroup& g);

/// C^G: basis = indicators, pointwise multiplication, Delta delta_g =
/// sum over xy = g of delta_x (x) delta_y, eps(delta_g) = [g = e],
/// S(delta_g) = delta_{g^{-1}}.
FDHopf function_algebra_hopf(const FiniteGroup& g);

/// Verifies every Hopf axiom exactly as a tensor identity; one record per
/// axiom, failures carry a witness basis index.
Report check_hopf_axioms(const FDHopf& h);
bool passes_hopf_axioms(const FDHopf& h);

/// Dual Hopf algebra on the dual basis: multiplication is the transpose of
/// comultiplication and conversely; unit and counit swap; antipode
/// transposes. Requires the axioms (throws AxiomFailure).
FDHopf dual_hopf(const FDHopf& h);

struct HopfMap {
    FDHopfPtr source;
    FDHopfPtr target;
    QMat matrix;
};

HopfMap make_hopf_map(FDHopf source, FDHopf target, QMat matrix);

Report hopf_morphism_report(const HopfMap& f);
bool is_hopf_morphism(const HopfMap& f);
bool is_hopf_isomorphism(const HopfMap& f);

/// The evaluation map H -> H** ; its matrix in dual-basis coordinates is
/// the identity.
HopfMap double_dual_canonical(const FDHopf& h);

/// The canonical pairing iso dual(C[G]) -> C^G (identity matrix in the
/// shared element enumeration).
HopfMap group_function_duality_iso(const FiniteGroup& g);

/// Algebra characters of C[G] for abelian G: covector chi(g) =
/// zeta(<g,chi>), indexed by the dual element enumeration.
struct SpectrumResult {
    std::vector<std::vector<Cyclotomic>> characters;
    Report verification;
};

SpectrumResult spectrum_abelian_group_algebra(const FiniteAbelianGroup& g);
/// Table-group variant; throws NonAbelian for non-commutative input.
SpectrumResult spectrum_abelian_group_algebra(const FiniteGroup& g);

} // namespace holodual

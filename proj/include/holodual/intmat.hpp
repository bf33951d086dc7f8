#pragma once

#include <gmpxx.h>

#include <vector>

#include "holodual/error.hpp"

namespace holodual {

/// Dense integer matrix over arbitrary-precision integers.
///
/// Row/column counts may be zero; a 0xN or Nx0 matrix is a valid (empty)
/// matrix and multiplies like one.
class IMat {
public:
    IMat() = default;
    IMat(int rows, int cols);

    static IMat identity(int n);
    static IMat zero(int rows, int cols) { return IMat(rows, cols); }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    mpz_class& at(int i, int j);
    const mpz_class& at(int i, int j) const;

    IMat operator*(const IMat& rhs) const;
    bool operator==(const IMat& rhs) const = default;

    IMat transposed() const;
    bool is_identity() const;
    bool is_zero() const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<mpz_class> a_;
};

/// Decomposition m = u * d * v with u, v unimodular and d diagonal with a
/// divisibility chain d_1 | d_2 | ... of nonnegative entries.
/// The inverses satisfy d = u_inv * m * v_inv.
struct SmithDecomposition {
    IMat u, d, v;
    IMat u_inv, v_inv;

    std::vector<mpz_class> diagonal() const;
};

SmithDecomposition smith_normal_form(const IMat& m);

/// Exact determinant (fraction-free Bareiss elimination). Square input only.
mpz_class determinant(const IMat& m);

bool is_unimodular(const IMat& m);

} // namespace holodual

#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "holodual/error.hpp"

namespace holodual {

/// Reduced fraction from raw numerator/denominator.
mpq_class frac(long num, long den);

/// Parse "p/q" or "p" (exact, arbitrary precision). Throws ParseError.
mpq_class parse_rational(const std::string& text);

/// Render as "p/q", or "p" when the denominator is 1.
std::string rational_to_string(const mpq_class& q);

/// Dense matrix over exact rationals.
class QMat {
public:
    QMat() = default;
    QMat(int rows, int cols);

    static QMat identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    mpq_class& at(int i, int j);
    const mpq_class& at(int i, int j) const;

    QMat operator*(const QMat& rhs) const;
    QMat operator+(const QMat& rhs) const;
    bool operator==(const QMat& rhs) const = default;

    QMat transposed() const;
    bool is_identity() const;
    bool is_zero() const;

    /// Rank over the rationals, exact Gaussian elimination.
    int rank() const;

    /// Exact inverse; nullopt when singular or non-square.
    std::optional<QMat> inverse() const;

    /// Kronecker product (row-major block order).
    static QMat kronecker(const QMat& a, const QMat& b);

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<mpq_class> a_;
};

} // namespace holodual

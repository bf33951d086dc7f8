#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "holodual/finab.hpp"

namespace holodual {

long euler_phi(long m);

/// The m-th cyclotomic polynomial, coefficients low degree first, monic.
/// Computed by exact division of x^m - 1 by the proper-divisor factors.
std::vector<mpz_class> cyclotomic_polynomial(long m);

/// Exact element of Q(zeta_m): a polynomial in zeta_m of degree < phi(m),
/// reduced modulo the m-th cyclotomic polynomial. Operands of different
/// conductors are promoted into the lcm conductor. Conductors are capped
/// at 2^16.
class Cyclotomic {
public:
    Cyclotomic(); // zero, conductor 1
    static Cyclotomic from_rational(const mpq_class& q);
    static Cyclotomic zeta_power(long conductor, long exponent);

    long conductor() const { return conductor_; }
    const std::vector<mpq_class>& coeffs() const { return coeffs_; }

    Cyclotomic operator+(const Cyclotomic& rhs) const;
    Cyclotomic operator-(const Cyclotomic& rhs) const;
    Cyclotomic operator*(const Cyclotomic& rhs) const;
    Cyclotomic operator-() const;

    Cyclotomic inverse() const; // throws DivisionByZero on zero
    Cyclotomic conjugated() const; // zeta_m -> zeta_m^{-1}

    /// Rewrite in Q(zeta_bigger); requires conductor() | bigger.
    Cyclotomic embedded(long bigger) const;

    /// Exact inverse of embedding when the element lies in Q(zeta_smaller);
    /// requires smaller | conductor(). nullopt when not representable.
    std::optional<Cyclotomic> descended(long smaller) const;

    bool is_zero() const;
    bool is_rational(mpq_class* value = nullptr) const;

    bool operator==(const Cyclotomic& rhs) const;
    bool operator!=(const Cyclotomic& rhs) const { return !(*this == rhs); }

    std::string to_string() const;

private:
    Cyclotomic(long conductor, std::vector<mpq_class> coeffs);

    long conductor_;
    std::vector<mpq_class> coeffs_;
};

/// zeta(p/m) = zeta_m^p, the exact value of exp(2*pi*i*p/m) in Q(zeta_m).
Cyclotomic zeta(const QmodZ& q);

} // namespace holodual

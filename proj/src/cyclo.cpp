#include "holodual/cyclo.hpp"

#include "holodual/qmat.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace holodual {

namespace {

constexpr long kConductorLimit = 1L << 16;

using ZPoly = std::vector<mpz_class>; // low degree first
using QPoly = std::vector<mpq_class>;

void trim(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Exact division of integer polynomials, remainder must vanish.
ZPoly divide_exact(const ZPoly& num, const ZPoly& den) {
    ZPoly rem = num;
    ZPoly quot(num.size() >= den.size() ? num.size() - den.size() + 1 : 0);
    while (rem.size() >= den.size()) {
        size_t shift = rem.size() - den.size();
        mpz_class c = rem.back() / den.back();
        quot[shift] = c;
        for (size_t i = 0; i < den.size(); ++i) rem[shift + i] -= c * den[i];
        while (!rem.empty() && rem.back() == 0) rem.pop_back();
    }
    return quot;
}

// Remainder of p modulo a monic polynomial.
void reduce_mod_monic(QPoly& p, const ZPoly& monic) {
    const size_t deg = monic.size() - 1;
    while (p.size() > deg) {
        mpq_class c = p.back();
        size_t shift = p.size() - 1 - deg;
        if (c != 0)
            for (size_t i = 0; i < monic.size(); ++i) p[shift + i] -= c * monic[i];
        p.pop_back();
        while (!p.empty() && p.back() == 0 && p.size() > deg) p.pop_back();
    }
}

const ZPoly& cyclotomic_cached(long m) {
    static std::map<long, ZPoly> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;

    // x^m - 1 divided by the product of Phi_d over proper divisors d | m.
    std::vector<long> stack{m};
    while (!stack.empty()) {
        long n = stack.back();
        if (cache.count(n)) {
            stack.pop_back();
            continue;
        }
        bool ready = true;
        for (long d = 1; d < n; ++d)
            if (n % d == 0 && !cache.count(d)) {
                stack.push_back(d);
                ready = false;
            }
        if (!ready) continue;
        stack.pop_back();
        ZPoly num(static_cast<size_t>(n) + 1);
        num[0] = -1;
        num[size_t(n)] = 1;
        for (long d = 1; d < n; ++d)
            if (n % d == 0) num = divide_exact(num, cache.at(d));
        cache.emplace(n, std::move(num));
    }
    return cache.at(m);
}

} // namespace

long euler_phi(long m) {
    if (m < 1) throw ValidationError("euler_phi needs m >= 1");
    long result = m;
    long n = m;
    for (long p = 2; p * p <= n; ++p)
        if (n % p == 0) {
            result -= result / p;
            while (n % p == 0) n /= p;
        }
    if (n > 1) result -= result / n;
    return result;
}

std::vector<mpz_class> cyclotomic_polynomial(long m) {
    if (m < 1) throw ValidationError("cyclotomic polynomial needs m >= 1");
    if (m > kConductorLimit) throw ValidationError("conductor exceeds the 2^16 cap");
    return cyclotomic_cached(m);
}

Cyclotomic::Cyclotomic() : conductor_(1), coeffs_(1) {}

Cyclotomic::Cyclotomic(long conductor, std::vector<mpq_class> coeffs)
    : conductor_(conductor), coeffs_(std::move(coeffs)) {}

Cyclotomic Cyclotomic::from_rational(const mpq_class& q) {
    Cyclotomic out;
    out.coeffs_[0] = q;
    return out;
}

Cyclotomic Cyclotomic::zeta_power(long conductor, long exponent) {
    if (conductor < 1) throw ValidationError("conductor must be >= 1");
    if (conductor > kConductorLimit) throw ValidationError("conductor exceeds the 2^16 cap");
    const ZPoly& phi = cyclotomic_cached(conductor);
    long e = exponent % conductor;
    if (e < 0) e += conductor;
    QPoly p(static_cast<size_t>(e) + 1);
    p[size_t(e)] = 1;
    reduce_mod_monic(p, phi);
    p.resize(static_cast<size_t>(euler_phi(conductor)));
    return Cyclotomic(conductor, std::move(p));
}

Cyclotomic Cyclotomic::embedded(long bigger) const {
    if (bigger % conductor_ != 0)
        throw ValidationError("embedding target conductor must be a multiple of the current one");
    if (bigger == conductor_) return *this;
    if (bigger > kConductorLimit) throw ValidationError("conductor exceeds the 2^16 cap");
    const ZPoly& phi = cyclotomic_cached(bigger);
    const size_t deg = size_t(euler_phi(bigger));
    const long step = bigger / conductor_;

    QPoly acc(deg);
    QPoly power(1); // x^0 mod Phi, updated by multiply-by-x sweeps
    power[0] = 1;
    long cur = 0;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        long want = (long(i) * step) % bigger;
        while (cur != want) {
            power.insert(power.begin(), mpq_class(0));
            reduce_mod_monic(power, phi);
            ++cur;
        }
        if (coeffs_[i] != 0)
            for (size_t j = 0; j < power.size(); ++j) acc[j] += coeffs_[i] * power[j];
    }
    return Cyclotomic(bigger, std::move(acc));
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& rhs) const {
    long l = std::lcm(conductor_, rhs.conductor_);
    Cyclotomic a = embedded(l), b = rhs.embedded(l);
    for (size_t i = 0; i < a.coeffs_.size(); ++i) a.coeffs_[i] += b.coeffs_[i];
    return a;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& rhs) const {
    return *this + (-rhs);
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& rhs) const {
    long l = std::lcm(conductor_, rhs.conductor_);
    Cyclotomic a = embedded(l), b = rhs.embedded(l);
    QPoly prod(a.coeffs_.size() + b.coeffs_.size());
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (size_t j = 0; j < b.coeffs_.size(); ++j)
            if (b.coeffs_[j] != 0) prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    reduce_mod_monic(prod, cyclotomic_cached(l));
    prod.resize(static_cast<size_t>(euler_phi(l)));
    return Cyclotomic(l, std::move(prod));
}

Cyclotomic Cyclotomic::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero cyclotomic");
    // Extended Euclid against Phi_m in Q[x]; Phi_m is irreducible, so the
    // gcd with any nonzero representative is 1.
    const ZPoly& phi_z = cyclotomic_cached(conductor_);
    QPoly r0(phi_z.begin(), phi_z.end());
    QPoly r1 = coeffs_;
    trim(r1);
    QPoly s0{}, s1{mpq_class(1)};
    while (!r1.empty()) {
        // (q, rem) = divmod(r0, r1)
        QPoly q(r0.size() >= r1.size() ? r0.size() - r1.size() + 1 : 0);
        QPoly rem = r0;
        while (rem.size() >= r1.size() && !rem.empty()) {
            mpq_class c = rem.back() / r1.back();
            size_t shift = rem.size() - r1.size();
            q[shift] = c;
            for (size_t i = 0; i < r1.size(); ++i) rem[shift + i] -= c * r1[i];
            trim(rem);
        }
        // s2 = s0 - q * s1
        QPoly qs1(q.size() + s1.size());
        for (size_t i = 0; i < q.size(); ++i) {
            if (q[i] == 0) continue;
            for (size_t j = 0; j < s1.size(); ++j) qs1[i + j] += q[i] * s1[j];
        }
        QPoly s2(std::max(s0.size(), qs1.size()));
        for (size_t i = 0; i < s0.size(); ++i) s2[i] += s0[i];
        for (size_t i = 0; i < qs1.size(); ++i) s2[i] -= qs1[i];
        trim(s2);
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    // r0 = gcd (degree 0), s0 * f == r0 mod Phi
    mpq_class lead = r0[0];
    QPoly inv = s0;
    for (auto& c : inv) c /= lead;
    reduce_mod_monic(inv, phi_z);
    inv.resize(coeffs_.size());
    return Cyclotomic(conductor_, std::move(inv));
}

Cyclotomic Cyclotomic::conjugated() const {
    if (conductor_ <= 2) return *this; // real subfield
    Cyclotomic g = zeta_power(conductor_, conductor_ - 1);
    // Horner evaluation of the coefficient polynomial at zeta^{-1}.
    Cyclotomic acc = from_rational(coeffs_.back()).embedded(conductor_);
    for (size_t i = coeffs_.size() - 1; i-- > 0;) {
        acc = acc * g;
        acc.coeffs_[0] += coeffs_[i];
    }
    return acc;
}

std::optional<Cyclotomic> Cyclotomic::descended(long smaller) const {
    if (smaller < 1 || conductor_ % smaller != 0)
        throw ValidationError("descent target must divide the conductor");
    if (smaller == conductor_) return *this;
    const size_t big = coeffs_.size();
    const size_t small = size_t(euler_phi(smaller));

    // Solve E y = coeffs, where column j of E is the embedding of zeta_s^j.
    std::vector<QPoly> cols(small);
    for (size_t j = 0; j < small; ++j) {
        Cyclotomic basis = zeta_power(smaller, long(j)).embedded(conductor_);
        cols[j] = basis.coeffs_;
    }
    // Gaussian elimination on the augmented (big x small+1) system.
    std::vector<QPoly> aug(big, QPoly(small + 1));
    for (size_t i = 0; i < big; ++i) {
        for (size_t j = 0; j < small; ++j) aug[i][j] = cols[j][i];
        aug[i][small] = coeffs_[i];
    }
    size_t row = 0;
    std::vector<int> pivot_col(small, -1);
    for (size_t col = 0; col < small && row < big; ++col) {
        size_t piv = row;
        while (piv < big && aug[piv][col] == 0) ++piv;
        if (piv == big) continue;
        std::swap(aug[piv], aug[row]);
        for (size_t i = 0; i < big; ++i) {
            if (i == row || aug[i][col] == 0) continue;
            mpq_class f = aug[i][col] / aug[row][col];
            for (size_t j = col; j <= small; ++j) aug[i][j] -= f * aug[row][j];
        }
        pivot_col[col] = int(row);
        ++row;
    }
    QPoly y(small);
    for (size_t col = 0; col < small; ++col)
        if (pivot_col[col] >= 0) y[col] = aug[size_t(pivot_col[col])][small] / aug[size_t(pivot_col[col])][col];
    // Consistency: rows without pivots must have zero right-hand side.
    for (size_t i = 0; i < big; ++i) {
        bool zero_row = true;
        for (size_t j = 0; j < small; ++j)
            if (aug[i][j] != 0) {
                zero_row = false;
                break;
            }
        if (zero_row && aug[i][small] != 0) return std::nullopt;
    }
    Cyclotomic out(smaller, std::move(y));
    if (out.embedded(conductor_) != *this) return std::nullopt;
    return out;
}

bool Cyclotomic::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const mpq_class& c) { return c == 0; });
}

bool Cyclotomic::is_rational(mpq_class* value) const {
    for (size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) {
            auto down = descended(1);
            if (!down) return false;
            if (value) *value = down->coeffs()[0];
            return true;
        }
    if (value) *value = coeffs_[0];
    return true;
}

bool Cyclotomic::operator==(const Cyclotomic& rhs) const {
    long l = std::lcm(conductor_, rhs.conductor_);
    return embedded(l).coeffs_ == rhs.embedded(l).coeffs_;
}

std::string Cyclotomic::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        if (!first) os << " + ";
        os << rational_to_string(coeffs_[i]);
        if (i > 0) os << "*z" << conductor_ << "^" << i;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

Cyclotomic zeta(const QmodZ& q) {
    return Cyclotomic::zeta_power(q.den, q.num);
}

} // namespace holodual

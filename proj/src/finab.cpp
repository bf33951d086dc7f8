#include "holodual/finab.hpp"

#include <numeric>
#include <sstream>

namespace holodual {

namespace {

Int gcd_ll(Int a, Int b) {
    return std::gcd(a, b);
}

// gmpxx has no long long overloads; every Int here is small enough for long.
mpz_class to_mpz(Int v) {
    return mpz_class(static_cast<long>(v));
}

} // namespace

QmodZ::QmodZ(Int n, Int d) {
    if (d == 0) throw DivisionByZero("QmodZ with zero denominator");
    if (d < 0) {
        d = -d;
        n = -n;
    }
    n %= d;
    if (n < 0) n += d;
    Int g = gcd_ll(n, d);
    if (g == 0) g = 1;
    num = n / g;
    den = d / g;
    if (num == 0) den = 1;
}

QmodZ QmodZ::operator+(const QmodZ& rhs) const {
    Int g = gcd_ll(den, rhs.den);
    Int l = den / g * rhs.den;
    return QmodZ(num * (l / den) + rhs.num * (l / rhs.den), l);
}

QmodZ QmodZ::operator-() const {
    return QmodZ(-num, den);
}

QmodZ QmodZ::scaled(Int k) const {
    Int r = k % den;
    return QmodZ(num * r, den);
}

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<Int> invariant_factors)
    : factors_(std::move(invariant_factors)) {
    for (size_t i = 0; i < factors_.size(); ++i) {
        if (factors_[i] < 2)
            throw ValidationError("invariant factor must be >= 2, got " + std::to_string(factors_[i]));
        if (i > 0 && factors_[i] % factors_[i - 1] != 0)
            throw ValidationError("divisibility chain violated: " + std::to_string(factors_[i - 1]) +
                                  " does not divide " + std::to_string(factors_[i]));
    }
}

FiniteAbelianGroup FiniteAbelianGroup::cyclic(Int n) {
    if (n < 1) throw ValidationError("cyclic group order must be >= 1");
    if (n == 1) return trivial();
    return FiniteAbelianGroup({n});
}

Int FiniteAbelianGroup::order() const {
    Int o = 1;
    for (Int d : factors_) o *= d;
    return o;
}

Element FiniteAbelianGroup::zero() const {
    return Element{std::vector<Int>(factors_.size(), 0)};
}

Element FiniteAbelianGroup::add(const Element& a, const Element& b) const {
    if (!contains(a) || !contains(b)) throw DimensionMismatch("element does not belong to this group");
    Element out = zero();
    for (size_t j = 0; j < factors_.size(); ++j)
        out.coords[j] = (a.coords[j] + b.coords[j]) % factors_[j];
    return out;
}

Element FiniteAbelianGroup::negate(const Element& a) const {
    if (!contains(a)) throw DimensionMismatch("element does not belong to this group");
    Element out = zero();
    for (size_t j = 0; j < factors_.size(); ++j)
        out.coords[j] = (factors_[j] - a.coords[j]) % factors_[j];
    return out;
}

bool FiniteAbelianGroup::contains(const Element& a) const {
    if (a.coords.size() != factors_.size()) return false;
    for (size_t j = 0; j < factors_.size(); ++j)
        if (a.coords[j] < 0 || a.coords[j] >= factors_[j]) return false;
    return true;
}

Int FiniteAbelianGroup::order_of(const Element& a) const {
    if (!contains(a)) throw DimensionMismatch("element does not belong to this group");
    Int o = 1;
    for (size_t j = 0; j < factors_.size(); ++j) {
        Int d = factors_[j];
        Int ord = d / gcd_ll(a.coords[j], d);
        o = o / gcd_ll(o, ord) * ord;
    }
    return o;
}

Element FiniteAbelianGroup::element_at(Int index) const {
    if (index < 0 || index >= order()) throw DimensionMismatch("element index out of range");
    Element out = zero();
    for (size_t j = factors_.size(); j-- > 0;) {
        out.coords[j] = index % factors_[j];
        index /= factors_[j];
    }
    return out;
}

Int FiniteAbelianGroup::index_of(const Element& a) const {
    if (!contains(a)) throw DimensionMismatch("element does not belong to this group");
    Int idx = 0;
    for (size_t j = 0; j < factors_.size(); ++j) idx = idx * factors_[j] + a.coords[j];
    return idx;
}

std::string FiniteAbelianGroup::describe() const {
    if (factors_.empty()) return "0";
    std::ostringstream os;
    for (size_t i = 0; i < factors_.size(); ++i) {
        if (i) os << " + ";
        os << "Z/" << factors_[i];
    }
    return os.str();
}

Hom::Hom(FiniteAbelianGroup source, FiniteAbelianGroup target, IMat matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
    if (matrix_.rows() != target_.rank() || matrix_.cols() != source_.rank())
        throw DimensionMismatch("hom matrix must be target-rank x source-rank");
    for (int i = 0; i < matrix_.rows(); ++i) {
        mpz_class e = to_mpz(target_.factor(i));
        for (int j = 0; j < matrix_.cols(); ++j) {
            mpz_class r = matrix_.at(i, j) % e;
            if (r < 0) r += e;
            matrix_.at(i, j) = r;
            if (mpz_class(r * to_mpz(source_.factor(j))) % e != 0)
                throw ValidationError("hom not well defined: target factor " + e.get_str() +
                                      " does not divide entry*" + std::to_string(source_.factor(j)) +
                                      " at (" + std::to_string(i) + "," + std::to_string(j) + ")");
        }
    }
}

Hom Hom::identity(const FiniteAbelianGroup& g) {
    return Hom(g, g, IMat::identity(g.rank()));
}

Hom Hom::zero(const FiniteAbelianGroup& source, const FiniteAbelianGroup& target) {
    return Hom(source, target, IMat::zero(target.rank(), source.rank()));
}

Element Hom::operator()(const Element& g) const {
    if (!source_.contains(g)) throw DimensionMismatch("element not in the source group");
    Element out = target_.zero();
    for (int i = 0; i < matrix_.rows(); ++i) {
        mpz_class acc = 0;
        for (int j = 0; j < matrix_.cols(); ++j)
            acc += matrix_.at(i, j) * to_mpz(g.coords[size_t(j)]);
        acc %= to_mpz(target_.factor(i));
        out.coords[size_t(i)] = acc.get_si();
    }
    return out;
}

Hom Hom::operator*(const Hom& inner) const {
    if (!(inner.target_ == source_)) throw DimensionMismatch("composition shape mismatch");
    return Hom(inner.source_, target_, matrix_ * inner.matrix_);
}

Int Hom::image_order() const {
    // |im f| = |H| / |H / im f|, and H/im f is the cokernel of [A | diag(e)].
    const int m = target_.rank(), k = source_.rank();
    if (m == 0) return 1;
    IMat ext(m, k + m);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < k; ++j) ext.at(i, j) = matrix_.at(i, j);
        ext.at(i, k + i) = to_mpz(target_.factor(i));
    }
    auto snf = smith_normal_form(ext);
    mpz_class coker = 1;
    for (int i = 0; i < m; ++i) coker *= snf.d.at(i, i);
    mpz_class img = to_mpz(target_.order()) / coker;
    return img.get_si();
}

Int Hom::kernel_order() const {
    return source_.order() / image_order();
}

DualGroup dual_group(const FiniteAbelianGroup& g) {
    return DualGroup{g};
}

QmodZ pair(const FiniteAbelianGroup& g, const Element& x, const Element& chi) {
    if (!g.contains(x) || !g.contains(chi))
        throw DimensionMismatch("pairing arguments do not match the group");
    QmodZ acc;
    for (int j = 0; j < g.rank(); ++j)
        acc = acc + QmodZ(x.coords[size_t(j)] * chi.coords[size_t(j)], g.factor(j));
    return acc;
}

Hom dual_hom(const Hom& f) {
    // B_ji = (d_j * A_ij) / e_i mod d_j; integrality is exactly the
    // well-definedness invariant of f.
    const FiniteAbelianGroup& src = f.source();
    const FiniteAbelianGroup& dst = f.target();
    IMat b(src.rank(), dst.rank());
    for (int j = 0; j < src.rank(); ++j)
        for (int i = 0; i < dst.rank(); ++i)
            b.at(j, i) = mpz_class(to_mpz(src.factor(j)) * f.matrix().at(i, j)) / to_mpz(dst.factor(i));
    return Hom(dst, src, std::move(b));
}

Hom evaluation_map(const FiniteAbelianGroup& g) {
    return Hom::identity(g);
}

bool is_isomorphism(const Hom& f) {
    return f.source().order() == f.target().order() && f.image_order() == f.target().order();
}

FiniteAbelianGroup from_presentation(const IMat& relations) {
    const int m = relations.rows(); // generators
    const int n = relations.cols(); // relations
    auto snf = smith_normal_form(relations);
    std::vector<Int> factors;
    for (int i = 0; i < m; ++i) {
        if (i >= n || snf.d.at(i, i) == 0)
            throw InfiniteCokernel("presentation has infinite cokernel (free rank > 0)");
        mpz_class d = snf.d.at(i, i);
        if (d > 1) factors.push_back(d.get_si());
    }
    return FiniteAbelianGroup(std::move(factors));
}

DirectSum direct_sum(const FiniteAbelianGroup& a, const FiniteAbelianGroup& b) {
    const int k = a.rank(), l = b.rank(), m = k + l;
    IMat rel(m, m);
    for (int i = 0; i < k; ++i) rel.at(i, i) = to_mpz(a.factor(i));
    for (int i = 0; i < l; ++i) rel.at(k + i, k + i) = to_mpz(b.factor(i));
    auto snf = smith_normal_form(rel);

    std::vector<Int> factors;
    std::vector<int> surviving; // rows of the SNF with diagonal entry > 1
    for (int i = 0; i < m; ++i)
        if (snf.d.at(i, i) > 1) {
            surviving.push_back(i);
            factors.push_back(mpz_class(snf.d.at(i, i)).get_si());
        }
    FiniteAbelianGroup sum(factors);
    const int s = int(surviving.size());

    // Old generator j maps to (u_inv * e_j) restricted to surviving rows.
    IMat gen_images(s, m);
    for (int r = 0; r < s; ++r)
        for (int j = 0; j < m; ++j) gen_images.at(r, j) = snf.u_inv.at(surviving[size_t(r)], j);
    IMat inc_a(s, k), inc_b(s, l);
    for (int r = 0; r < s; ++r) {
        for (int j = 0; j < k; ++j) inc_a.at(r, j) = gen_images.at(r, j);
        for (int j = 0; j < l; ++j) inc_b.at(r, j) = gen_images.at(r, k + j);
    }

    // New generator r corresponds to column surviving[r] of u in old coordinates.
    IMat proj_a(k, s), proj_b(l, s);
    for (int r = 0; r < s; ++r) {
        for (int i = 0; i < k; ++i) proj_a.at(i, r) = snf.u.at(i, surviving[size_t(r)]);
        for (int i = 0; i < l; ++i) proj_b.at(i, r) = snf.u.at(k + i, surviving[size_t(r)]);
    }

    return DirectSum{sum, Hom(a, sum, std::move(inc_a)), Hom(b, sum, std::move(inc_b)),
                     Hom(sum, a, std::move(proj_a)), Hom(sum, b, std::move(proj_b))};
}

} // namespace holodual

#include "holodual/qmat.hpp"

#include <algorithm>
#include <cctype>

namespace holodual {

mpq_class frac(long num, long den) {
    if (den == 0) throw DivisionByZero("zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    return q;
}

mpq_class parse_rational(const std::string& text) {
    if (text.empty()) throw ParseError("empty rational literal");
    auto check = [&](const std::string& part) {
        if (part.empty()) throw ParseError("bad rational literal: '" + text + "'");
        size_t start = (part[0] == '-' || part[0] == '+') ? 1 : 0;
        if (start == part.size()) throw ParseError("bad rational literal: '" + text + "'");
        for (size_t i = start; i < part.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(part[i])))
                throw ParseError("bad rational literal: '" + text + "'");
    };
    auto slash = text.find('/');
    mpq_class q;
    if (slash == std::string::npos) {
        check(text);
        q = mpq_class(mpz_class(text));
    } else {
        std::string num = text.substr(0, slash), den = text.substr(slash + 1);
        check(num);
        check(den);
        mpz_class d(den);
        if (d == 0) throw ParseError("zero denominator in '" + text + "'");
        q = mpq_class(mpz_class(num), d);
        q.canonicalize();
    }
    return q;
}

std::string rational_to_string(const mpq_class& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

QMat::QMat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * size_t(cols)) {
    if (rows < 0 || cols < 0) throw DimensionMismatch("matrix dimensions must be nonnegative");
}

QMat QMat::identity(int n) {
    QMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

mpq_class& QMat::at(int i, int j) {
    return a_[size_t(i) * size_t(cols_) + size_t(j)];
}

const mpq_class& QMat::at(int i, int j) const {
    return a_[size_t(i) * size_t(cols_) + size_t(j)];
}

QMat QMat::operator*(const QMat& rhs) const {
    if (cols_ != rhs.rows_) throw DimensionMismatch("matrix product shape mismatch");
    QMat out(rows_, rhs.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const mpq_class& lik = at(i, k);
            if (lik == 0) continue;
            for (int j = 0; j < rhs.cols_; ++j) out.at(i, j) += lik * rhs.at(k, j);
        }
    return out;
}

QMat QMat::operator+(const QMat& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw DimensionMismatch("matrix sum shape mismatch");
    QMat out(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] + rhs.a_[i];
    return out;
}

QMat QMat::transposed() const {
    QMat out(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
}

bool QMat::is_identity() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (at(i, j) != (i == j ? 1 : 0)) return false;
    return true;
}

bool QMat::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](const mpq_class& x) { return x == 0; });
}

int QMat::rank() const {
    QMat a = *this;
    int rank = 0;
    for (int col = 0; col < cols_ && rank < rows_; ++col) {
        int piv = -1;
        for (int i = rank; i < rows_; ++i)
            if (a.at(i, col) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != rank)
            for (int j = 0; j < cols_; ++j) std::swap(a.at(rank, j), a.at(piv, j));
        for (int i = rank + 1; i < rows_; ++i) {
            if (a.at(i, col) == 0) continue;
            mpq_class f = a.at(i, col) / a.at(rank, col);
            for (int j = col; j < cols_; ++j) a.at(i, j) -= f * a.at(rank, j);
        }
        ++rank;
    }
    return rank;
}

std::optional<QMat> QMat::inverse() const {
    if (rows_ != cols_) return std::nullopt;
    const int n = rows_;
    QMat a = *this;
    QMat inv = QMat::identity(n);
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int i = col; i < n; ++i)
            if (a.at(i, col) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) return std::nullopt;
        if (piv != col)
            for (int j = 0; j < n; ++j) {
                std::swap(a.at(col, j), a.at(piv, j));
                std::swap(inv.at(col, j), inv.at(piv, j));
            }
        mpq_class p = a.at(col, col);
        for (int j = 0; j < n; ++j) {
            a.at(col, j) /= p;
            inv.at(col, j) /= p;
        }
        for (int i = 0; i < n; ++i) {
            if (i == col || a.at(i, col) == 0) continue;
            mpq_class f = a.at(i, col);
            for (int j = 0; j < n; ++j) {
                a.at(i, j) -= f * a.at(col, j);
                inv.at(i, j) -= f * inv.at(col, j);
            }
        }
    }
    return inv;
}

QMat QMat::kronecker(const QMat& a, const QMat& b) {
    QMat out(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            if (a.at(i, j) == 0) continue;
            for (int p = 0; p < b.rows(); ++p)
                for (int q = 0; q < b.cols(); ++q)
                    out.at(i * b.rows() + p, j * b.cols() + q) = a.at(i, j) * b.at(p, q);
        }
    return out;
}

} // namespace holodual

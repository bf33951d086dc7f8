#include "holodual/intmat.hpp"

#include <algorithm>
#include <cstdlib>

namespace holodual {

IMat::IMat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * size_t(cols)) {
    if (rows < 0 || cols < 0) throw DimensionMismatch("matrix dimensions must be nonnegative");
}

IMat IMat::identity(int n) {
    IMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

mpz_class& IMat::at(int i, int j) {
    return a_[size_t(i) * size_t(cols_) + size_t(j)];
}

const mpz_class& IMat::at(int i, int j) const {
    return a_[size_t(i) * size_t(cols_) + size_t(j)];
}

IMat IMat::operator*(const IMat& rhs) const {
    if (cols_ != rhs.rows_) throw DimensionMismatch("matrix product shape mismatch");
    IMat out(rows_, rhs.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const mpz_class& lik = at(i, k);
            if (lik == 0) continue;
            for (int j = 0; j < rhs.cols_; ++j) out.at(i, j) += lik * rhs.at(k, j);
        }
    return out;
}

IMat IMat::transposed() const {
    IMat out(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
}

bool IMat::is_identity() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (at(i, j) != (i == j ? 1 : 0)) return false;
    return true;
}

bool IMat::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](const mpz_class& x) { return x == 0; });
}

std::vector<mpz_class> SmithDecomposition::diagonal() const {
    int n = std::min(d.rows(), d.cols());
    std::vector<mpz_class> out(n);
    for (int i = 0; i < n; ++i) out[i] = d.at(i, i);
    return out;
}

namespace {

// Working state: a = current matrix, kept equal to u_inv * m * v_inv,
// while m == u * a * v stays invariant under every elementary operation.
struct SnfState {
    IMat a, u, ui, v, vi;

    void swap_rows(int i, int j) {
        if (i == j) return;
        for (int c = 0; c < a.cols(); ++c) std::swap(a.at(i, c), a.at(j, c));
        for (int r = 0; r < u.rows(); ++r) std::swap(u.at(r, i), u.at(r, j));
        for (int c = 0; c < ui.cols(); ++c) std::swap(ui.at(i, c), ui.at(j, c));
    }

    void swap_cols(int i, int j) {
        if (i == j) return;
        for (int r = 0; r < a.rows(); ++r) std::swap(a.at(r, i), a.at(r, j));
        for (int c = 0; c < v.cols(); ++c) std::swap(v.at(i, c), v.at(j, c));
        for (int r = 0; r < vi.rows(); ++r) std::swap(vi.at(r, i), vi.at(r, j));
    }

    // row i += k * row j
    void add_row(int i, int j, const mpz_class& k) {
        if (k == 0) return;
        for (int c = 0; c < a.cols(); ++c) a.at(i, c) += k * a.at(j, c);
        for (int r = 0; r < u.rows(); ++r) u.at(r, j) -= k * u.at(r, i);
        for (int c = 0; c < ui.cols(); ++c) ui.at(i, c) += k * ui.at(j, c);
    }

    // col j += k * col i
    void add_col(int j, int i, const mpz_class& k) {
        if (k == 0) return;
        for (int r = 0; r < a.rows(); ++r) a.at(r, j) += k * a.at(r, i);
        for (int c = 0; c < v.cols(); ++c) v.at(i, c) -= k * v.at(j, c);
        for (int r = 0; r < vi.rows(); ++r) vi.at(r, j) += k * vi.at(r, i);
    }

    void negate_row(int i) {
        for (int c = 0; c < a.cols(); ++c) a.at(i, c) = -a.at(i, c);
        for (int r = 0; r < u.rows(); ++r) u.at(r, i) = -u.at(r, i);
        for (int c = 0; c < ui.cols(); ++c) ui.at(i, c) = -ui.at(i, c);
    }
};

} // namespace

SmithDecomposition smith_normal_form(const IMat& m) {
    const int r = m.rows(), c = m.cols();
    SnfState s{m, IMat::identity(r), IMat::identity(r), IMat::identity(c), IMat::identity(c)};

    const int n = std::min(r, c);
    for (int t = 0; t < n; ++t) {
        // Move the absolutely smallest nonzero entry of the trailing block to (t,t).
        int pi = -1, pj = -1;
        for (int i = t; i < r; ++i)
            for (int j = t; j < c; ++j) {
                const mpz_class& x = s.a.at(i, j);
                if (x == 0) continue;
                if (pi < 0 || mpz_cmpabs(x.get_mpz_t(), s.a.at(pi, pj).get_mpz_t()) < 0) {
                    pi = i;
                    pj = j;
                }
            }
        if (pi < 0) break; // trailing block is zero
        s.swap_rows(t, pi);
        s.swap_cols(t, pj);

        for (;;) {
            // Clear column t below the pivot.
            for (int i = t + 1; i < r; ++i)
                if (s.a.at(i, t) != 0) s.add_row(i, t, -mpz_class(s.a.at(i, t) / s.a.at(t, t)));
            int best = -1;
            for (int i = t + 1; i < r; ++i)
                if (s.a.at(i, t) != 0 &&
                    (best < 0 || mpz_cmpabs(s.a.at(i, t).get_mpz_t(), s.a.at(best, t).get_mpz_t()) < 0))
                    best = i;
            if (best >= 0) { // remainder smaller than pivot becomes the new pivot
                s.swap_rows(t, best);
                continue;
            }

            // Clear row t right of the pivot.
            for (int j = t + 1; j < c; ++j)
                if (s.a.at(t, j) != 0) s.add_col(j, t, -mpz_class(s.a.at(t, j) / s.a.at(t, t)));
            best = -1;
            for (int j = t + 1; j < c; ++j)
                if (s.a.at(t, j) != 0 &&
                    (best < 0 || mpz_cmpabs(s.a.at(t, j).get_mpz_t(), s.a.at(t, best).get_mpz_t()) < 0))
                    best = j;
            if (best >= 0) {
                s.swap_cols(t, best);
                continue;
            }

            // Force the divisibility chain: the pivot must divide the trailing block.
            bool fixed = false;
            for (int i = t + 1; i < r && !fixed; ++i)
                for (int j = t + 1; j < c && !fixed; ++j)
                    if (s.a.at(i, j) % s.a.at(t, t) != 0) {
                        s.add_row(t, i, 1);
                        fixed = true;
                    }
            if (!fixed) break;
        }
        if (s.a.at(t, t) < 0) s.negate_row(t);
    }

    return SmithDecomposition{std::move(s.u), std::move(s.a), std::move(s.v), std::move(s.ui),
                              std::move(s.vi)};
}

mpz_class determinant(const IMat& m) {
    if (m.rows() != m.cols()) throw DimensionMismatch("determinant of non-square matrix");
    const int n = m.rows();
    if (n == 0) return 1;
    IMat a = m;
    mpz_class prev = 1;
    int sign = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (a.at(k, k) == 0) {
            int piv = -1;
            for (int i = k + 1; i < n; ++i)
                if (a.at(i, k) != 0) {
                    piv = i;
                    break;
                }
            if (piv < 0) return 0;
            for (int j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(piv, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
        prev = a.at(k, k);
    }
    return sign * a.at(n - 1, n - 1);
}

bool is_unimodular(const IMat& m) {
    if (m.rows() != m.cols()) return false;
    mpz_class d = determinant(m);
    return d == 1 || d == -1;
}

} // namespace holodual

#include "holodual/hopf.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace holodual {

void SparseVec::accumulate(int i, const mpq_class& c) {
    if (c == 0) return;
    terms.emplace_back(i, c);
}

void SparseVec::normalize() {
    std::sort(terms.begin(), terms.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<std::pair<int, mpq_class>> out;
    for (auto& [i, c] : terms) {
        if (!out.empty() && out.back().first == i)
            out.back().second += c;
        else
            out.emplace_back(i, c);
        if (!out.empty() && out.back().second == 0) out.pop_back();
    }
    terms = std::move(out);
}

void normalize(CoVec& v) {
    std::sort(v.begin(), v.end(), [](const CoTerm& a, const CoTerm& b) {
        return std::pair(a.left, a.right) < std::pair(b.left, b.right);
    });
    CoVec out;
    for (auto& t : v) {
        if (!out.empty() && out.back().left == t.left && out.back().right == t.right)
            out.back().coeff += t.coeff;
        else
            out.push_back(t);
        if (!out.empty() && out.back().coeff == 0) out.pop_back();
    }
    v = std::move(out);
}

FDHopf::FDHopf(int dim, std::vector<SparseVec> mult, SparseVec unit, std::vector<CoVec> comult,
               std::vector<mpq_class> counit, QMat antipode, std::string name)
    : dim_(dim), mult_(std::move(mult)), unit_(std::move(unit)), comult_(std::move(comult)),
      counit_(std::move(counit)), antipode_(std::move(antipode)), name_(std::move(name)) {
    if (dim_ < 1) throw ValidationError("hopf algebra dimension must be >= 1");
    if (mult_.size() != size_t(dim_) * size_t(dim_))
        throw DimensionMismatch("multiplication tensor needs dim^2 basis products");
    if (comult_.size() != size_t(dim_))
        throw DimensionMismatch("comultiplication tensor needs dim basis images");
    if (counit_.size() != size_t(dim_)) throw DimensionMismatch("counit needs dim coefficients");
    if (antipode_.rows() != dim_ || antipode_.cols() != dim_)
        throw DimensionMismatch("antipode must be dim x dim");
    auto check_index = [&](int i) {
        if (i < 0 || i >= dim_) throw DimensionMismatch("tensor index out of range");
    };
    for (auto& v : mult_) {
        v.normalize();
        for (auto& [i, c] : v.terms) check_index(i);
    }
    unit_.normalize();
    for (auto& [i, c] : unit_.terms) check_index(i);
    for (auto& v : comult_) {
        normalize(v);
        for (auto& t : v) {
            check_index(t.left);
            check_index(t.right);
        }
    }
}

SparseVec FDHopf::multiply(const SparseVec& x, const SparseVec& y) const {
    SparseVec out;
    for (const auto& [i, ci] : x.terms)
        for (const auto& [j, cj] : y.terms) {
            const SparseVec& base = mul_basis(i, j);
            if (base.empty()) continue;
            mpq_class c = ci * cj;
            for (const auto& [k, ck] : base.terms) out.accumulate(k, c * ck);
        }
    out.normalize();
    return out;
}

CoVec FDHopf::comultiply(const SparseVec& x) const {
    CoVec out;
    for (const auto& [i, ci] : x.terms)
        for (const CoTerm& t : comult_basis(i)) out.push_back(CoTerm{t.left, t.right, ci * t.coeff});
    normalize(out);
    return out;
}

SparseVec FDHopf::apply_antipode(const SparseVec& x) const {
    SparseVec out;
    for (const auto& [j, cj] : x.terms)
        for (int i = 0; i < dim_; ++i)
            if (antipode_.at(i, j) != 0) out.accumulate(i, cj * antipode_.at(i, j));
    out.normalize();
    return out;
}

mpq_class FDHopf::counit_of(const SparseVec& x) const {
    mpq_class acc = 0;
    for (const auto& [i, c] : x.terms) acc += c * counit_[size_t(i)];
    return acc;
}

bool FDHopf::operator==(const FDHopf& rhs) const {
    return dim_ == rhs.dim_ && mult_ == rhs.mult_ && unit_ == rhs.unit_ && comult_ == rhs.comult_ &&
           counit_ == rhs.counit_ && antipode_ == rhs.antipode_;
}

FDHopf group_algebra_hopf(const FiniteGroup& g) {
    const int n = g.order();
    std::vector<SparseVec> mult(static_cast<size_t>(n) * size_t(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) mult[size_t(a) * size_t(n) + size_t(b)] = SparseVec::basis(g.op(a, b));
    std::vector<CoVec> comult(static_cast<size_t>(n));
    for (int a = 0; a < n; ++a) comult[size_t(a)] = {CoTerm{a, a, mpq_class(1)}};
    std::vector<mpq_class> counit(static_cast<size_t>(n), mpq_class(1));
    QMat antipode(n, n);
    for (int a = 0; a < n; ++a) antipode.at(g.inverse(a), a) = 1;
    return FDHopf(n, std::move(mult), SparseVec::basis(g.identity()), std::move(comult),
                  std::move(counit), std::move(antipode), "C[" + g.name() + "]");
}

FDHopf function_algebra_hopf(const FiniteGroup& g) {
    const int n = g.order();
    std::vector<SparseVec> mult(static_cast<size_t>(n) * size_t(n));
    for (int a = 0; a < n; ++a) mult[size_t(a) * size_t(n) + size_t(a)] = SparseVec::basis(a);
    SparseVec unit;
    for (int a = 0; a < n; ++a) unit.accumulate(a, 1);
    unit.normalize();
    std::vector<CoVec> comult(static_cast<size_t>(n));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) comult[size_t(g.op(x, y))].push_back(CoTerm{x, y, mpq_class(1)});
    for (auto& v : comult) normalize(v);
    std::vector<mpq_class> counit(static_cast<size_t>(n));
    counit[size_t(g.identity())] = 1;
    QMat antipode(n, n);
    for (int a = 0; a < n; ++a) antipode.at(g.inverse(a), a) = 1;
    return FDHopf(n, std::move(mult), std::move(unit), std::move(comult), std::move(counit),
                  std::move(antipode), "C^" + g.name());
}

namespace {

using Tensor3 = std::map<std::array<int, 3>, mpq_class>;

void tensor_accumulate(Tensor3& t, int a, int b, int c, const mpq_class& v) {
    if (v == 0) return;
    auto key = std::array<int, 3>{a, b, c};
    auto it = t.find(key);
    if (it == t.end())
        t.emplace(key, v);
    else {
        it->second += v;
        if (it->second == 0) t.erase(it);
    }
}

using Tensor2 = std::map<std::pair<int, int>, mpq_class>;

void tensor_accumulate(Tensor2& t, int a, int b, const mpq_class& v) {
    if (v == 0) return;
    auto key = std::pair(a, b);
    auto it = t.find(key);
    if (it == t.end())
        t.emplace(key, v);
    else {
        it->second += v;
        if (it->second == 0) t.erase(it);
    }
}

Tensor2 covec_to_tensor(const CoVec& v) {
    Tensor2 out;
    for (const CoTerm& t : v) tensor_accumulate(out, t.left, t.right, t.coeff);
    return out;
}

std::string idx_witness(const char* what, std::initializer_list<int> idx) {
    std::ostringstream os;
    os << what << " fails at basis index";
    if (idx.size() > 1) os << "es";
    os << " (";
    bool first = true;
    for (int i : idx) {
        if (!first) os << ",";
        os << i;
        first = false;
    }
    os << ")";
    return os.str();
}

SparseVec qmat_column(const QMat& m, int j) {
    SparseVec out;
    for (int i = 0; i < m.rows(); ++i)
        if (m.at(i, j) != 0) out.accumulate(i, m.at(i, j));
    out.normalize();
    return out;
}

SparseVec apply_qmat(const QMat& m, const SparseVec& x) {
    SparseVec out;
    for (const auto& [j, c] : x.terms)
        for (int i = 0; i < m.rows(); ++i)
            if (m.at(i, j) != 0) out.accumulate(i, c * m.at(i, j));
    out.normalize();
    return out;
}

} // namespace

Report check_hopf_axioms(const FDHopf& h) {
    Report r;
    r.subject = h.name().empty() ? "hopf algebra" : h.name();
    const int n = h.dim();

    // associativity
    {
        bool ok = true;
        std::array<int, 3> w{};
        for (int i = 0; i < n && ok; ++i)
            for (int j = 0; j < n && ok; ++j) {
                const SparseVec& ij = h.mul_basis(i, j);
                for (int k = 0; k < n && ok; ++k) {
                    SparseVec lhs = h.multiply(ij, SparseVec::basis(k));
                    SparseVec rhs = h.multiply(SparseVec::basis(i), h.mul_basis(j, k));
                    if (!(lhs == rhs)) {
                        ok = false;
                        w = {i, j, k};
                    }
                }
            }
        r.add("algebra.associativity", ok, anchor::hopf_axioms, std::nullopt,
              idx_witness("associativity", {w[0], w[1], w[2]}));
    }
    // unit
    {
        bool ok = true;
        int w = -1;
        for (int i = 0; i < n && ok; ++i) {
            SparseVec e = SparseVec::basis(i);
            if (!(h.multiply(h.unit(), e) == e) || !(h.multiply(e, h.unit()) == e)) {
                ok = false;
                w = i;
            }
        }
        r.add("algebra.unit", ok, anchor::hopf_axioms, std::nullopt, idx_witness("unit law", {w}));
    }
    // coassociativity
    {
        bool ok = true;
        int w = -1;
        for (int i = 0; i < n && ok; ++i) {
            Tensor3 lhs, rhs;
            for (const CoTerm& t : h.comult_basis(i)) {
                for (const CoTerm& s : h.comult_basis(t.left))
                    tensor_accumulate(lhs, s.left, s.right, t.right, t.coeff * s.coeff);
                for (const CoTerm& s : h.comult_basis(t.right))
                    tensor_accumulate(rhs, t.left, s.left, s.right, t.coeff * s.coeff);
            }
            if (!(lhs == rhs)) {
                ok = false;
                w = i;
            }
        }
        r.add("coalgebra.coassociativity", ok, anchor::hopf_axioms, std::nullopt,
              idx_witness("coassociativity", {w}));
    }
    // counit
    {
        bool ok = true;
        int w = -1;
        for (int i = 0; i < n && ok; ++i) {
            SparseVec left, right;
            for (const CoTerm& t : h.comult_basis(i)) {
                left.accumulate(t.right, t.coeff * h.counit_coef(t.left));
                right.accumulate(t.left, t.coeff * h.counit_coef(t.right));
            }
            left.normalize();
            right.normalize();
            SparseVec e = SparseVec::basis(i);
            if (!(left == e) || !(right == e)) {
                ok = false;
                w = i;
            }
        }
        r.add("coalgebra.counit", ok, anchor::hopf_axioms, std::nullopt,
              idx_witness("counit law", {w}));
    }
    // bialgebra: comultiplication is a unital algebra morphism
    {
        bool ok = true;
        std::array<int, 2> w{};
        for (int i = 0; i < n && ok; ++i)
            for (int j = 0; j < n && ok; ++j) {
                Tensor2 lhs = covec_to_tensor(h.comultiply(h.mul_basis(i, j)));
                Tensor2 rhs;
                for (const CoTerm& a : h.comult_basis(i))
                    for (const CoTerm& b : h.comult_basis(j)) {
                        const SparseVec& lm = h.mul_basis(a.left, b.left);
                        if (lm.empty()) continue;
                        const SparseVec& rm = h.mul_basis(a.right, b.right);
                        if (rm.empty()) continue;
                        mpq_class c = a.coeff * b.coeff;
                        for (const auto& [p, cp] : lm.terms)
                            for (const auto& [q, cq] : rm.terms)
                                tensor_accumulate(rhs, p, q, c * cp * cq);
                    }
                if (!(lhs == rhs)) {
                    ok = false;
                    w = {i, j};
                }
            }
        if (ok) {
            Tensor2 lhs = covec_to_tensor(h.comultiply(h.unit()));
            Tensor2 rhs;
            for (const auto& [p, cp] : h.unit().terms)
                for (const auto& [q, cq] : h.unit().terms) tensor_accumulate(rhs, p, q, cp * cq);
            ok = lhs == rhs;
            w = {-1, -1};
        }
        r.add("bialgebra.comultiplication-multiplicative", ok, anchor::hopf_axioms, std::nullopt,
              idx_witness("Delta(xy) = Delta(x)Delta(y)", {w[0], w[1]}));
    }
    // bialgebra: counit is a unital algebra morphism
    {
        bool ok = h.counit_of(h.unit()) == 1;
        std::array<int, 2> w{-1, -1};
        for (int i = 0; i < n && ok; ++i)
            for (int j = 0; j < n && ok; ++j)
                if (h.counit_of(h.mul_basis(i, j)) != h.counit_coef(i) * h.counit_coef(j)) {
                    ok = false;
                    w = {i, j};
                }
        r.add("bialgebra.counit-multiplicative", ok, anchor::hopf_axioms, std::nullopt,
              idx_witness("eps(xy) = eps(x)eps(y)", {w[0], w[1]}));
    }
    // antipode identities
    {
        bool left_ok = true, right_ok = true;
        int wl = -1, wr = -1;
        for (int i = 0; i < n; ++i) {
            SparseVec left, right;
            for (const CoTerm& t : h.comult_basis(i)) {
                SparseVec ls = h.multiply(h.apply_antipode(SparseVec::basis(t.left)),
                                          SparseVec::basis(t.right));
                for (const auto& [k, c] : ls.terms) left.accumulate(k, t.coeff * c);
                SparseVec rs = h.multiply(SparseVec::basis(t.left),
                                          h.apply_antipode(SparseVec::basis(t.right)));
                for (const auto& [k, c] : rs.terms) right.accumulate(k, t.coeff * c);
            }
            left.normalize();
            right.normalize();
            SparseVec want;
            for (const auto& [k, c] : h.unit().terms) want.accumulate(k, c * h.counit_coef(i));
            want.normalize();
            if (left_ok && !(left == want)) {
                left_ok = false;
                wl = i;
            }
            if (right_ok && !(right == want)) {
                right_ok = false;
                wr = i;
            }
        }
        r.add("antipode.left", left_ok, anchor::hopf_axioms, std::nullopt,
              idx_witness("m(S (x) id)Delta = unit.eps", {wl}));
        r.add("antipode.right", right_ok, anchor::hopf_axioms, std::nullopt,
              idx_witness("m(id (x) S)Delta = unit.eps", {wr}));
    }
    return r;
}

bool passes_hopf_axioms(const FDHopf& h) {
    return check_hopf_axioms(h).passed();
}

namespace {

FDHopf dual_unchecked(const FDHopf& h) {
    const int n = h.dim();
    std::vector<SparseVec> mult(static_cast<size_t>(n) * size_t(n));
    for (int i = 0; i < n; ++i)
        for (const CoTerm& t : h.comult_basis(i))
            mult[size_t(t.left) * size_t(n) + size_t(t.right)].accumulate(i, t.coeff);
    for (auto& v : mult) v.normalize();

    std::vector<CoVec> comult(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (const auto& [k, c] : h.mul_basis(i, j).terms)
                comult[size_t(k)].push_back(CoTerm{i, j, c});
    for (auto& v : comult) normalize(v);

    SparseVec unit;
    for (int i = 0; i < n; ++i) unit.accumulate(i, h.counit_coef(i));
    unit.normalize();
    std::vector<mpq_class> counit(static_cast<size_t>(n));
    for (const auto& [i, c] : h.unit().terms) counit[size_t(i)] = c;

    return FDHopf(n, std::move(mult), std::move(unit), std::move(comult), std::move(counit),
                  h.antipode().transposed(), "dual(" + h.name() + ")");
}

} // namespace

FDHopf dual_hopf(const FDHopf& h) {
    Report axioms = check_hopf_axioms(h);
    if (!axioms.passed()) {
        std::string detail;
        for (const auto& rec : axioms.records)
            if (!rec.pass) {
                detail = rec.check + ": " + rec.witness;
                break;
            }
        throw AxiomFailure("dual_hopf precondition: " + detail);
    }
    return dual_unchecked(h);
}

HopfMap make_hopf_map(FDHopf source, FDHopf target, QMat matrix) {
    return HopfMap{std::make_shared<const FDHopf>(std::move(source)),
                   std::make_shared<const FDHopf>(std::move(target)), std::move(matrix)};
}

Report hopf_morphism_report(const HopfMap& f) {
    Report r;
    const FDHopf& s = *f.source;
    const FDHopf& t = *f.target;
    r.subject = "map " + s.name() + " -> " + t.name();

    bool shape = f.matrix.rows() == t.dim() && f.matrix.cols() == s.dim();
    r.add("morphism.shape", shape, anchor::hopf_duality, std::nullopt,
          "matrix must be target-dim x source-dim");
    if (!shape) return r;

    std::vector<SparseVec> cols(static_cast<size_t>(s.dim()));
    for (int j = 0; j < s.dim(); ++j) cols[size_t(j)] = qmat_column(f.matrix, j);

    {
        bool ok = true;
        std::array<int, 2> w{};
        for (int i = 0; i < s.dim() && ok; ++i)
            for (int j = 0; j < s.dim() && ok; ++j) {
                SparseVec lhs = apply_qmat(f.matrix, s.mul_basis(i, j));
                SparseVec rhs = t.multiply(cols[size_t(i)], cols[size_t(j)]);
                if (!(lhs == rhs)) {
                    ok = false;
                    w = {i, j};
                }
            }
        r.add("morphism.multiplication", ok, anchor::hopf_duality, std::nullopt,
              idx_witness("f(xy) = f(x)f(y)", {w[0], w[1]}));
    }
    {
        bool ok = apply_qmat(f.matrix, s.unit()) == t.unit();
        r.add("morphism.unit", ok, anchor::hopf_duality, std::nullopt, "f(1) != 1");
    }
    {
        bool ok = true;
        int w = -1;
        for (int i = 0; i < s.dim() && ok; ++i) {
            Tensor2 lhs = covec_to_tensor(t.comultiply(cols[size_t(i)]));
            Tensor2 rhs;
            for (const CoTerm& c : s.comult_basis(i))
                for (const auto& [p, cp] : cols[size_t(c.left)].terms)
                    for (const auto& [q, cq] : cols[size_t(c.right)].terms)
                        tensor_accumulate(rhs, p, q, c.coeff * cp * cq);
            if (!(lhs == rhs)) {
                ok = false;
                w = i;
            }
        }
        r.add("morphism.comultiplication", ok, anchor::hopf_duality, std::nullopt,
              idx_witness("Delta f = (f (x) f) Delta", {w}));
    }
    {
        bool ok = true;
        int w = -1;
        for (int i = 0; i < s.dim() && ok; ++i)
            if (t.counit_of(cols[size_t(i)]) != s.counit_coef(i)) {
                ok = false;
                w = i;
            }
        r.add("morphism.counit", ok, anchor::hopf_duality, std::nullopt,
              idx_witness("eps f = eps", {w}));
    }
    {
        bool ok = f.matrix * s.antipode() == t.antipode() * f.matrix;
        r.add("morphism.antipode", ok, anchor::hopf_duality, std::nullopt, "f S != S f");
    }
    return r;
}

bool is_hopf_morphism(const HopfMap& f) {
    return hopf_morphism_report(f).passed();
}

bool is_hopf_isomorphism(const HopfMap& f) {
    return is_hopf_morphism(f) && f.matrix.rows() == f.matrix.cols() &&
           f.matrix.inverse().has_value();
}

HopfMap double_dual_canonical(const FDHopf& h) {
    FDHopf dd = dual_hopf(dual_hopf(h));
    return make_hopf_map(h, std::move(dd), QMat::identity(h.dim()));
}

HopfMap group_function_duality_iso(const FiniteGroup& g) {
    FDHopf dual_of_group = dual_hopf(group_algebra_hopf(g));
    FDHopf functions = function_algebra_hopf(g);
    return make_hopf_map(std::move(dual_of_group), std::move(functions),
                         QMat::identity(g.order()));
}

namespace {

SpectrumResult spectrum_impl(const FiniteAbelianGroup& g, const std::vector<Element>& coords,
                             const std::string& subject) {
    const Int n = g.order();
    SpectrumResult out;
    out.verification.subject = subject;

    out.characters.resize(static_cast<size_t>(n));
    for (Int c = 0; c < n; ++c) {
        Element chi = g.element_at(c);
        std::vector<Cyclotomic> row(static_cast<size_t>(n));
        for (Int i = 0; i < n; ++i) row[size_t(i)] = zeta(pair(g, coords[size_t(i)], chi));
        out.characters[size_t(c)] = std::move(row);
    }

    Report& r = out.verification;
    const Cyclotomic one = Cyclotomic::from_rational(1);

    // locate the identity index of the table: the element with zero coords
    Int identity_index = 0;
    for (Int i = 0; i < n; ++i)
        if (coords[size_t(i)] == g.zero()) identity_index = i;

    {
        bool ok = true;
        for (Int c = 0; c < n && ok; ++c) ok = out.characters[size_t(c)][size_t(identity_index)] == one;
        r.add("spectrum.unital", ok, anchor::spectrum_recovery, std::nullopt,
              "character does not send the identity to 1");
    }
    {
        // chi(g)chi(h) = chi(g+h): multiplicative functional on the group algebra
        bool ok = true;
        std::string w;
        // index lookup by coordinates
        std::vector<Int> index_of_coord(static_cast<size_t>(n));
        for (Int i = 0; i < n; ++i) index_of_coord[size_t(g.index_of(coords[size_t(i)]))] = i;
        for (Int c = 0; c < n && ok; ++c) {
            const auto& chi = out.characters[size_t(c)];
            for (Int i = 0; i < n && ok; ++i)
                for (Int j = 0; j < n && ok; ++j) {
                    Int k = index_of_coord[size_t(
                        g.index_of(g.add(coords[size_t(i)], coords[size_t(j)])))];
                    if (!(chi[size_t(i)] * chi[size_t(j)] == chi[size_t(k)])) {
                        ok = false;
                        w = "character " + std::to_string(c) + " at pair (" + std::to_string(i) +
                            "," + std::to_string(j) + ")";
                    }
                }
        }
        r.add("spectrum.multiplicative", ok, anchor::spectrum_recovery, std::nullopt, w);
    }
    {
        bool ok = true;
        for (Int a = 0; a < n && ok; ++a)
            for (Int b = a + 1; b < n && ok; ++b) ok = !(out.characters[size_t(a)] == out.characters[size_t(b)]);
        r.add("spectrum.pairwise-distinct", ok, anchor::spectrum_recovery, std::nullopt,
              "two spectrum points coincide");
    }
    {
        // Gram matrix against the conjugate pairing is |G| * I, which forces
        // linear independence (full-rank Vandermonde-type argument).
        bool ok = true;
        Cyclotomic order = Cyclotomic::from_rational(long(n));
        for (Int a = 0; a < n && ok; ++a)
            for (Int b = 0; b < n && ok; ++b) {
                Cyclotomic acc;
                for (Int i = 0; i < n; ++i)
                    acc = acc + out.characters[size_t(a)][size_t(i)] *
                                    out.characters[size_t(b)][size_t(i)].conjugated();
                ok = (a == b) ? acc == order : acc.is_zero();
            }
        r.add("spectrum.linearly-independent", ok, anchor::spectrum_recovery, std::nullopt,
              "character Gram matrix is not |G| * I");
    }
    {
        // pointwise product of spectrum points = addition in the dual group
        bool ok = true;
        for (Int a = 0; a < n && ok; ++a)
            for (Int b = 0; b < n && ok; ++b) {
                Int c = g.index_of(g.add(g.element_at(a), g.element_at(b)));
                for (Int i = 0; i < n && ok; ++i)
                    ok = out.characters[size_t(a)][size_t(i)] * out.characters[size_t(b)][size_t(i)] ==
                         out.characters[size_t(c)][size_t(i)];
            }
        r.add("spectrum.group-law", ok, anchor::spectrum_recovery, std::nullopt,
              "pointwise products do not realize the dual group law");
    }
    return out;
}

} // namespace

SpectrumResult spectrum_abelian_group_algebra(const FiniteAbelianGroup& g) {
    std::vector<Element> coords(static_cast<size_t>(g.order()));
    for (Int i = 0; i < g.order(); ++i) coords[size_t(i)] = g.element_at(i);
    return spectrum_impl(g, coords, "spectrum of C[" + g.describe() + "]");
}

SpectrumResult spectrum_abelian_group_algebra(const FiniteGroup& g) {
    AbelianStructure s = abelian_invariants(g);
    return spectrum_impl(s.group, s.coords, "spectrum of C[" + g.name() + "]");
}

} // namespace holodual

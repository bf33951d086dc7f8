#include "holodual/locfun.hpp"

namespace holodual {

LocallyConstantFunction::LocallyConstantFunction(ProGroup tower, int level,
                                                 std::vector<Cyclotomic> table)
    : tower_(std::move(tower)), level_(level), table_(std::move(table)) {
    if (level_ < 1 || level_ > tower_.depth())
        throw LevelOutOfRange("function level " + std::to_string(level_));
    if (Int(table_.size()) != tower_.level(level_).order())
        throw DimensionMismatch("table size must be the order of the level group");
}

LocallyConstantFunction LocallyConstantFunction::constant(ProGroup tower, const Cyclotomic& value) {
    std::vector<Cyclotomic> table(static_cast<size_t>(tower.level(1).order()), value);
    return LocallyConstantFunction(std::move(tower), 1, std::move(table));
}

LocallyConstantFunction LocallyConstantFunction::delta(ProGroup tower, int level,
                                                       const Element& at) {
    const FiniteAbelianGroup& g = tower.level(level);
    std::vector<Cyclotomic> table(static_cast<size_t>(g.order()));
    table[size_t(g.index_of(at))] = Cyclotomic::from_rational(1);
    return LocallyConstantFunction(std::move(tower), level, std::move(table));
}

const Cyclotomic& LocallyConstantFunction::value_at(const Element& g) const {
    return table_[size_t(tower_.level(level_).index_of(g))];
}

bool LocallyConstantFunction::operator==(const LocallyConstantFunction& rhs) const {
    if (!(tower_ == rhs.tower_)) return false;
    int top = std::max(level_, rhs.level_);
    return inflate(*this, top).table() == inflate(rhs, top).table();
}

LocallyConstantFunction inflate(const LocallyConstantFunction& f, int m) {
    if (m < f.level() || m > f.tower().depth())
        throw LevelOutOfRange("inflation level " + std::to_string(m));
    if (m == f.level()) return f;
    Hom proj = f.tower().projection(m, f.level());
    const FiniteAbelianGroup& big = f.tower().level(m);
    std::vector<Cyclotomic> table(static_cast<size_t>(big.order()));
    for (Int i = 0; i < big.order(); ++i) table[size_t(i)] = f.value_at(proj(big.element_at(i)));
    return LocallyConstantFunction(f.tower(), m, std::move(table));
}

int minimal_level(const LocallyConstantFunction& f) {
    const FiniteAbelianGroup& g = f.tower().level(f.level());
    for (int k = 1; k < f.level(); ++k) {
        Hom proj = f.tower().projection(f.level(), k);
        const FiniteAbelianGroup& small = f.tower().level(k);
        std::vector<const Cyclotomic*> seen(static_cast<size_t>(small.order()), nullptr);
        bool constant_on_fibers = true;
        for (Int i = 0; i < g.order() && constant_on_fibers; ++i) {
            Int fiber = small.index_of(proj(g.element_at(i)));
            const Cyclotomic& v = f.table()[size_t(i)];
            if (!seen[size_t(fiber)])
                seen[size_t(fiber)] = &v;
            else
                constant_on_fibers = (*seen[size_t(fiber)] == v);
        }
        if (constant_on_fibers) return k;
    }
    return f.level();
}

std::vector<Cyclotomic> decompose_characters(const LocallyConstantFunction& f) {
    const FiniteAbelianGroup& g = f.tower().level(f.level());
    const Int n = g.order();
    Cyclotomic inv_order = Cyclotomic::from_rational(frac(1, long(n)));
    std::vector<Cyclotomic> coeffs(static_cast<size_t>(n));
    for (Int c = 0; c < n; ++c) {
        Element chi = g.element_at(c);
        Cyclotomic acc;
        for (Int i = 0; i < n; ++i) {
            const Cyclotomic& v = f.table()[size_t(i)];
            if (v.is_zero()) continue;
            acc = acc + v * zeta(-pair(g, g.element_at(i), chi));
        }
        coeffs[size_t(c)] = acc * inv_order;
    }
    return coeffs;
}

LocallyConstantFunction reconstruct_from_characters(const ProGroup& tower, int level,
                                                    const std::vector<Cyclotomic>& coeffs) {
    const FiniteAbelianGroup& g = tower.level(level);
    if (Int(coeffs.size()) != g.order())
        throw DimensionMismatch("coefficient table size must be the order of the level group");
    std::vector<Cyclotomic> table(static_cast<size_t>(g.order()));
    for (Int i = 0; i < g.order(); ++i) {
        Element x = g.element_at(i);
        Cyclotomic acc;
        for (Int c = 0; c < g.order(); ++c) {
            if (coeffs[size_t(c)].is_zero()) continue;
            acc = acc + coeffs[size_t(c)] * zeta(pair(g, x, g.element_at(c)));
        }
        table[size_t(i)] = acc;
    }
    return LocallyConstantFunction(tower, level, std::move(table));
}

PsiIso psi_iso(const FiniteAbelianGroup& a, const FiniteAbelianGroup& b) {
    DirectSum ds = direct_sum(a, b);
    const Int na = a.order(), nb = b.order();
    QMat m(int(na * nb), int(na * nb));
    for (Int i = 0; i < na; ++i) {
        Element ia = ds.into_sum_first(a.element_at(i));
        for (Int j = 0; j < nb; ++j) {
            Element target = ds.sum.add(ia, ds.into_sum_second(b.element_at(j)));
            m.at(int(ds.sum.index_of(target)), int(i * nb + j)) = 1;
        }
    }
    return PsiIso{std::move(ds), std::move(m)};
}

GroupPsiIso psi_iso(const FiniteGroup& a, const FiniteGroup& b) {
    FiniteGroup product = FiniteGroup::product(a, b);
    return GroupPsiIso{std::move(product), QMat::identity(a.order() * b.order())};
}

} // namespace holodual

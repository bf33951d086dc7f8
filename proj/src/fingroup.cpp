#include "holodual/fingroup.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace holodual {

FiniteGroup::FiniteGroup(std::vector<std::vector<int>> table, std::string name)
    : name_(std::move(name)) {
    order_ = int(table.size());
    if (order_ < 1) throw ValidationError("group table must be nonempty");
    table_.reserve(static_cast<size_t>(order_) * size_t(order_));
    for (const auto& row : table) {
        if (int(row.size()) != order_) throw ValidationError("group table must be square");
        for (int x : row) {
            if (x < 0 || x >= order_) throw ValidationError("group table entry out of range");
            table_.push_back(x);
        }
    }
    // identity
    identity_ = -1;
    for (int e = 0; e < order_ && identity_ < 0; ++e) {
        bool ok = true;
        for (int a = 0; a < order_ && ok; ++a) ok = op(e, a) == a && op(a, e) == a;
        if (ok) identity_ = e;
    }
    if (identity_ < 0) throw ValidationError("group table has no identity element");
    // inverses
    inverse_.assign(static_cast<size_t>(order_), -1);
    for (int a = 0; a < order_; ++a) {
        for (int b = 0; b < order_; ++b)
            if (op(a, b) == identity_ && op(b, a) == identity_) {
                inverse_[size_t(a)] = b;
                break;
            }
        if (inverse_[size_t(a)] < 0)
            throw ValidationError("element " + std::to_string(a) + " has no inverse");
    }
    // associativity, exhaustive
    for (int a = 0; a < order_; ++a)
        for (int b = 0; b < order_; ++b)
            for (int c = 0; c < order_; ++c)
                if (op(op(a, b), c) != op(a, op(b, c)))
                    throw ValidationError("group table is not associative at (" + std::to_string(a) +
                                          "," + std::to_string(b) + "," + std::to_string(c) + ")");
    abelian_ = true;
    for (int a = 0; a < order_ && abelian_; ++a)
        for (int b = a + 1; b < order_ && abelian_; ++b) abelian_ = op(a, b) == op(b, a);
}

FiniteGroup FiniteGroup::cyclic(int n) {
    if (n < 1) throw ValidationError("cyclic group needs n >= 1");
    std::vector<std::vector<int>> t(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) t[size_t(a)][size_t(b)] = (a + b) % n;
    return FiniteGroup(std::move(t), "cyclic:" + std::to_string(n));
}

FiniteGroup FiniteGroup::dihedral(int n) {
    if (n < 1) throw ValidationError("dihedral group needs n >= 1");
    // indices: rotation r^a -> a, reflection s r^a -> n + a
    const int order = 2 * n;
    std::vector<std::vector<int>> t(static_cast<size_t>(order), std::vector<int>(static_cast<size_t>(order)));
    auto idx = [n](int flip, int a) { return flip ? n + a : a; };
    for (int f1 = 0; f1 < 2; ++f1)
        for (int a1 = 0; a1 < n; ++a1)
            for (int f2 = 0; f2 < 2; ++f2)
                for (int a2 = 0; a2 < n; ++a2) {
                    // (s^f1 r^a1)(s^f2 r^a2) = s^(f1+f2) r^(a2 + (-1)^f2 a1)
                    int flip = (f1 + f2) % 2;
                    int a = f2 ? ((a2 - a1) % n + n) % n : (a1 + a2) % n;
                    t[size_t(idx(f1, a1))][size_t(idx(f2, a2))] = idx(flip, a);
                }
    return FiniteGroup(std::move(t), "dihedral:" + std::to_string(n));
}

namespace {

std::vector<std::vector<int>> permutations_lex(int n) {
    std::vector<int> p(static_cast<size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<int>> all;
    do {
        all.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return all;
}

bool is_even_permutation(const std::vector<int>& p) {
    int inversions = 0;
    for (size_t i = 0; i < p.size(); ++i)
        for (size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j]) ++inversions;
    return inversions % 2 == 0;
}

FiniteGroup permutation_group(std::vector<std::vector<int>> perms, const std::string& name) {
    std::map<std::vector<int>, int> index;
    for (size_t i = 0; i < perms.size(); ++i) index[perms[i]] = int(i);
    const int order = int(perms.size());
    std::vector<std::vector<int>> t(static_cast<size_t>(order), std::vector<int>(static_cast<size_t>(order)));
    for (int a = 0; a < order; ++a)
        for (int b = 0; b < order; ++b) {
            // composition (a . b)(x) = a(b(x))
            std::vector<int> c(perms[size_t(a)].size());
            for (size_t x = 0; x < c.size(); ++x)
                c[x] = perms[size_t(a)][size_t(perms[size_t(b)][x])];
            t[size_t(a)][size_t(b)] = index.at(c);
        }
    return FiniteGroup(std::move(t), name);
}

} // namespace

FiniteGroup FiniteGroup::symmetric(int n) {
    if (n < 1 || n > 5) throw ValidationError("symmetric group supported for 1 <= n <= 5");
    return permutation_group(permutations_lex(n), "symmetric:" + std::to_string(n));
}

FiniteGroup FiniteGroup::alternating(int n) {
    if (n < 1 || n > 5) throw ValidationError("alternating group supported for 1 <= n <= 5");
    std::vector<std::vector<int>> even;
    for (auto& p : permutations_lex(n))
        if (is_even_permutation(p)) even.push_back(std::move(p));
    return permutation_group(std::move(even), "alternating:" + std::to_string(n));
}

FiniteGroup FiniteGroup::quaternion8() {
    // elements: s*4 + u with sign s in {0,1} and unit u in {1, i, j, k}
    // unit products carry a sign: i^2 = j^2 = k^2 = -1, ij = k, jk = i, ki = j
    static const int unit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static const int sign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
    std::vector<std::vector<int>> t(8, std::vector<int>(8));
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b) {
            int sa = a / 4, ua = a % 4, sb = b / 4, ub = b % 4;
            int s = (sa + sb + sign[ua][ub]) % 2;
            t[size_t(a)][size_t(b)] = s * 4 + unit[ua][ub];
        }
    return FiniteGroup(std::move(t), "quaternion8");
}

FiniteGroup FiniteGroup::from_abelian(const FiniteAbelianGroup& g) {
    const Int n = g.order();
    if (n > 100000) throw ValidationError("abelian group too large to materialize as a table");
    std::vector<std::vector<int>> t(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
    for (Int a = 0; a < n; ++a)
        for (Int b = 0; b < n; ++b)
            t[size_t(a)][size_t(b)] = int(g.index_of(g.add(g.element_at(a), g.element_at(b))));
    return FiniteGroup(std::move(t), g.describe());
}

FiniteGroup FiniteGroup::product(const FiniteGroup& a, const FiniteGroup& b) {
    const int n = a.order() * b.order();
    std::vector<std::vector<int>> t(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            int ax = x / b.order(), bx = x % b.order();
            int ay = y / b.order(), by = y % b.order();
            t[size_t(x)][size_t(y)] = a.op(ax, ay) * b.order() + b.op(bx, by);
        }
    return FiniteGroup(std::move(t), a.name() + " x " + b.name());
}

GroupHom::GroupHom(FiniteGroup source, FiniteGroup target, std::vector<int> map)
    : source_(std::move(source)), target_(std::move(target)), map_(std::move(map)) {
    if (int(map_.size()) != source_.order())
        throw ValidationError("group hom map must cover the source");
    for (int x : map_)
        if (x < 0 || x >= target_.order()) throw ValidationError("group hom image out of range");
    for (int a = 0; a < source_.order(); ++a)
        for (int b = 0; b < source_.order(); ++b)
            if (map_[size_t(source_.op(a, b))] != target_.op(map_[size_t(a)], map_[size_t(b)]))
                throw ValidationError("map is not a group homomorphism at (" + std::to_string(a) +
                                      "," + std::to_string(b) + ")");
}

bool GroupHom::is_injective() const {
    std::vector<char> hit(static_cast<size_t>(target_.order()), 0);
    for (int x : map_) {
        if (hit[size_t(x)]) return false;
        hit[size_t(x)] = 1;
    }
    return true;
}

bool GroupHom::is_surjective() const {
    std::vector<char> hit(static_cast<size_t>(target_.order()), 0);
    int count = 0;
    for (int x : map_)
        if (!hit[size_t(x)]) {
            hit[size_t(x)] = 1;
            ++count;
        }
    return count == target_.order();
}

AbelianStructure abelian_invariants(const FiniteGroup& g) {
    if (!g.is_abelian()) throw NonAbelian("group " + g.name() + " is not abelian");
    const int n = g.order();

    // Greedy generating set; record an expression over the generators for
    // every element as the span closure grows.
    std::vector<int> gens;
    std::vector<int> gen_order;
    std::vector<std::vector<Int>> expr(static_cast<size_t>(n)); // element -> coefficients
    std::vector<char> in_span(static_cast<size_t>(n), 0);
    in_span[size_t(g.identity())] = 1;
    expr[size_t(g.identity())] = {};

    auto element_order = [&](int a) {
        int o = 1, x = a;
        while (x != g.identity()) {
            x = g.op(x, a);
            ++o;
        }
        return o;
    };

    while (true) {
        int pick = -1, pick_order = 0;
        for (int a = 0; a < n; ++a)
            if (!in_span[size_t(a)]) {
                int o = element_order(a);
                if (o > pick_order) {
                    pick = a;
                    pick_order = o;
                }
            }
        if (pick < 0) break;
        int s = int(gens.size());
        gens.push_back(pick);
        gen_order.push_back(pick_order);
        for (auto& e : expr) e.resize(static_cast<size_t>(s) + 1, 0);
        // extend the span: old_span + k * pick
        std::vector<int> old_elements;
        for (int a = 0; a < n; ++a)
            if (in_span[size_t(a)]) old_elements.push_back(a);
        for (int base : old_elements) {
            int x = base;
            for (Int k = 1; k < pick_order; ++k) {
                x = g.op(x, pick);
                if (!in_span[size_t(x)]) {
                    in_span[size_t(x)] = 1;
                    expr[size_t(x)] = expr[size_t(base)];
                    expr[size_t(x)][size_t(s)] = k;
                }
            }
        }
    }
    const int s = int(gens.size());
    for (auto& e : expr) e.resize(static_cast<size_t>(s), 0);

    // Relation lattice: all tuples in the order box that evaluate to the
    // identity generate the kernel of Z^s -> G.
    Int box = 1;
    for (int o : gen_order) {
        box *= o;
        if (box > 1000000) throw ValidationError("abelian structure recovery box too large");
    }
    std::vector<std::vector<Int>> relations;
    std::vector<Int> tuple(static_cast<size_t>(s), 0);
    for (Int it = 0; it < box; ++it) {
        Int rest = it;
        int value = g.identity();
        for (int i = s - 1; i >= 0; --i) {
            tuple[size_t(i)] = rest % gen_order[size_t(i)];
            rest /= gen_order[size_t(i)];
            for (Int k = 0; k < tuple[size_t(i)]; ++k) value = g.op(value, gens[size_t(i)]);
        }
        if (value == g.identity()) relations.push_back(tuple);
    }
    // plus the generator orders themselves
    for (int i = 0; i < s; ++i) {
        std::vector<Int> r(static_cast<size_t>(s), 0);
        r[size_t(i)] = gen_order[size_t(i)];
        relations.push_back(std::move(r));
    }

    IMat rel(s, int(relations.size()));
    for (size_t c = 0; c < relations.size(); ++c)
        for (int i = 0; i < s; ++i) rel.at(i, int(c)) = static_cast<long>(relations[c][size_t(i)]);
    auto snf = smith_normal_form(rel);

    std::vector<Int> factors;
    std::vector<int> surviving;
    for (int i = 0; i < s; ++i) {
        mpz_class d = snf.d.at(i, i);
        if (d == 0) throw ValidationError("abelian structure recovery failed (infinite quotient)");
        if (d > 1) {
            surviving.push_back(i);
            factors.push_back(d.get_si());
        }
    }
    FiniteAbelianGroup group(factors);

    // coords(x) = (u_inv * expr(x)) mod factors, restricted to surviving rows
    std::vector<Element> coords(static_cast<size_t>(n));
    for (int x = 0; x < n; ++x) {
        Element e = group.zero();
        for (size_t r = 0; r < surviving.size(); ++r) {
            mpz_class acc = 0;
            for (int j = 0; j < s; ++j)
                acc += snf.u_inv.at(surviving[r], j) * static_cast<long>(expr[size_t(x)][size_t(j)]);
            mpz_class mod = static_cast<long>(group.factor(int(r)));
            acc %= mod;
            if (acc < 0) acc += mod;
            e.coords[r] = acc.get_si();
        }
        coords[size_t(x)] = std::move(e);
    }
    return AbelianStructure{std::move(group), std::move(coords)};
}

} // namespace holodual

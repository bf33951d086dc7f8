#include "holodual/hopftowers.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace holodual {

TowerOfGroups::TowerOfGroups(Direction dir, std::vector<FiniteGroup> levels,
                             std::vector<GroupHom> transitions)
    : dir_(dir), levels_(std::move(levels)), transitions_(std::move(transitions)) {
    if (levels_.empty()) throw InvalidTower("a tower needs at least one level");
    if (transitions_.size() + 1 != levels_.size())
        throw InvalidTower("a depth-N tower needs exactly N-1 transitions");
    for (size_t n = 0; n < transitions_.size(); ++n) {
        const GroupHom& t = transitions_[n];
        const FiniteGroup& src = dir_ == Direction::ind ? levels_[n] : levels_[n + 1];
        const FiniteGroup& dst = dir_ == Direction::ind ? levels_[n + 1] : levels_[n];
        if (!(t.source() == src) || !(t.target() == dst))
            throw InvalidTower("transition " + std::to_string(n + 1) + " does not join its levels");
        if (dir_ == Direction::ind && !t.is_injective())
            throw InvalidTower("inductive group transition at level " + std::to_string(n + 1) +
                               " is not injective");
        if (dir_ == Direction::pro && !t.is_surjective())
            throw InvalidTower("projective group transition onto level " + std::to_string(n + 1) +
                               " is not surjective");
    }
    abelian_.resize(levels_.size());
}

const FiniteGroup& TowerOfGroups::level(int n) const {
    if (n < 1 || n > depth()) throw LevelOutOfRange("level " + std::to_string(n));
    return levels_[size_t(n - 1)];
}

const GroupHom& TowerOfGroups::transition(int n) const {
    if (n < 1 || n >= depth()) throw LevelOutOfRange("transition " + std::to_string(n));
    return transitions_[size_t(n - 1)];
}

const std::optional<FiniteAbelianGroup>& TowerOfGroups::abelian_level(int n) const {
    if (n < 1 || n > depth()) throw LevelOutOfRange("level " + std::to_string(n));
    return abelian_[size_t(n - 1)];
}

std::string TowerOfGroups::describe() const {
    std::ostringstream os;
    os << (dir_ == Direction::ind ? "ind" : "pro") << " group tower [";
    for (size_t i = 0; i < levels_.size(); ++i) {
        if (i) os << ", ";
        os << levels_[i].name();
    }
    os << "]";
    return os.str();
}

TowerOfGroups TowerOfGroups::symmetric_tower(int depth) {
    if (depth < 1 || depth > 5) throw BadDepth("symmetric tower supported for depth 1..5");
    std::vector<FiniteGroup> levels;
    for (int n = 1; n <= depth; ++n) levels.push_back(FiniteGroup::symmetric(n));
    std::vector<GroupHom> transitions;
    for (int n = 1; n < depth; ++n) {
        // sigma in S_n extends to S_{n+1} fixing the last point; indices are
        // lexicographic on one-line notation, so recompute via permutations.
        const FiniteGroup& src = levels[size_t(n - 1)];
        const FiniteGroup& dst = levels[size_t(n)];
        std::vector<int> perm(static_cast<size_t>(n));
        std::iota(perm.begin(), perm.end(), 0);
        std::vector<std::vector<int>> src_perms;
        do {
            src_perms.push_back(perm);
        } while (std::next_permutation(perm.begin(), perm.end()));
        std::vector<int> big(static_cast<size_t>(n + 1));
        std::iota(big.begin(), big.end(), 0);
        std::map<std::vector<int>, int> dst_index;
        int idx = 0;
        do {
            dst_index[big] = idx++;
        } while (std::next_permutation(big.begin(), big.end()));
        std::vector<int> map(src_perms.size());
        for (size_t i = 0; i < src_perms.size(); ++i) {
            std::vector<int> ext = src_perms[i];
            ext.push_back(n);
            map[i] = dst_index.at(ext);
        }
        transitions.emplace_back(src, dst, std::move(map));
    }
    return TowerOfGroups(Direction::ind, std::move(levels), std::move(transitions));
}

TowerOfGroups TowerOfGroups::power_pro(const FiniteGroup& g, int depth) {
    if (depth < 1) throw BadDepth("depth must be >= 1");
    std::vector<FiniteGroup> levels;
    levels.push_back(g);
    for (int n = 2; n <= depth; ++n) levels.push_back(FiniteGroup::product(levels.back(), g));
    std::vector<GroupHom> transitions;
    for (int n = 1; n < depth; ++n) {
        // G^{n+1} = G^n x G with pair index x * |G| + last; drop the last slot
        const FiniteGroup& src = levels[size_t(n)];
        const FiniteGroup& dst = levels[size_t(n - 1)];
        std::vector<int> map(static_cast<size_t>(src.order()));
        for (int x = 0; x < src.order(); ++x) map[size_t(x)] = x / g.order();
        transitions.emplace_back(src, dst, std::move(map));
    }
    return TowerOfGroups(Direction::pro, std::move(levels), std::move(transitions));
}

namespace {

constexpr Int kMaterializeLimit = 4096;

std::vector<int> hom_index_map(const Hom& f) {
    const FiniteAbelianGroup& src = f.source();
    const FiniteAbelianGroup& dst = f.target();
    std::vector<int> map(static_cast<size_t>(src.order()));
    for (Int i = 0; i < src.order(); ++i) map[size_t(i)] = int(dst.index_of(f(src.element_at(i))));
    return map;
}

} // namespace

TowerOfGroups TowerOfGroups::from_ind(const IndGroup& g) {
    std::vector<FiniteGroup> levels;
    for (int n = 1; n <= g.depth(); ++n) {
        if (g.level(n).order() > kMaterializeLimit)
            throw ValidationError("tower level too large to materialize as a table group");
        levels.push_back(FiniteGroup::from_abelian(g.level(n)));
    }
    std::vector<GroupHom> transitions;
    for (int n = 1; n < g.depth(); ++n)
        transitions.emplace_back(levels[size_t(n - 1)], levels[size_t(n)],
                                 hom_index_map(g.transition(n)));
    TowerOfGroups t(Direction::ind, std::move(levels), std::move(transitions));
    for (int n = 1; n <= g.depth(); ++n) t.abelian_[size_t(n - 1)] = g.level(n);
    return t;
}

TowerOfGroups TowerOfGroups::from_pro(const ProGroup& g) {
    std::vector<FiniteGroup> levels;
    for (int n = 1; n <= g.depth(); ++n) {
        if (g.level(n).order() > kMaterializeLimit)
            throw ValidationError("tower level too large to materialize as a table group");
        levels.push_back(FiniteGroup::from_abelian(g.level(n)));
    }
    std::vector<GroupHom> transitions;
    for (int n = 1; n < g.depth(); ++n)
        transitions.emplace_back(levels[size_t(n)], levels[size_t(n - 1)],
                                 hom_index_map(g.transition(n)));
    TowerOfGroups t(Direction::pro, std::move(levels), std::move(transitions));
    for (int n = 1; n <= g.depth(); ++n) t.abelian_[size_t(n - 1)] = g.level(n);
    return t;
}

bool Provenance::group_side() const {
    bool base_group = base == Base::ind_group_algebra || base == Base::pro_group_algebra;
    return (dual_depth % 2 == 0) == base_group;
}

std::string Provenance::describe() const {
    std::string b;
    switch (base) {
        case Base::hand_assembled: b = "hand-assembled"; break;
        case Base::ind_group_algebra: b = "group algebras over an ind tower"; break;
        case Base::ind_function_algebra: b = "function algebras over an ind tower"; break;
        case Base::pro_function_algebra: b = "function algebras over a pro tower"; break;
        case Base::pro_group_algebra: b = "group algebras over a pro tower"; break;
    }
    if (dual_depth > 0) b += " (dualized " + std::to_string(dual_depth) + "x)";
    return b;
}

namespace {

void validate_hopf_tower(const std::vector<FDHopfPtr>& levels,
                         const std::vector<HopfMap>& transitions, bool upward) {
    if (levels.empty()) throw InvalidTower("a tower needs at least one level");
    if (transitions.size() + 1 != levels.size())
        throw InvalidTower("a depth-N tower needs exactly N-1 transitions");
    for (size_t n = 0; n < transitions.size(); ++n) {
        const HopfMap& t = transitions[n];
        const FDHopfPtr& src = upward ? levels[n] : levels[n + 1];
        const FDHopfPtr& dst = upward ? levels[n + 1] : levels[n];
        if (!(*t.source == *src) || !(*t.target == *dst))
            throw InvalidTower("hopf transition " + std::to_string(n + 1) +
                               " does not join its levels");
        Report morph = hopf_morphism_report(t);
        if (!morph.passed()) {
            std::string detail;
            for (const auto& rec : morph.records)
                if (!rec.pass) {
                    detail = rec.check;
                    break;
                }
            throw InvalidTower("hopf transition " + std::to_string(n + 1) +
                               " is not a Hopf morphism (" + detail + ")");
        }
        int rank = t.matrix.rank();
        if (upward && rank != t.matrix.cols())
            throw InvalidTower("inductive hopf transition " + std::to_string(n + 1) +
                               " is not injective");
        if (!upward && rank != t.matrix.rows())
            throw InvalidTower("projective hopf transition " + std::to_string(n + 1) +
                               " is not surjective");
    }
}

std::string hopf_tower_description(const char* kind, const std::vector<FDHopfPtr>& levels,
                                   const Provenance& prov) {
    std::ostringstream os;
    os << kind << " hopf tower [";
    for (size_t i = 0; i < levels.size(); ++i) {
        if (i) os << ", ";
        os << levels[i]->name();
    }
    os << "] from " << prov.describe();
    return os.str();
}

} // namespace

IndHopf::IndHopf(std::vector<FDHopfPtr> levels, std::vector<HopfMap> transitions, Provenance prov)
    : levels_(std::move(levels)), transitions_(std::move(transitions)), prov_(prov) {
    validate_hopf_tower(levels_, transitions_, true);
}

const FDHopf& IndHopf::level(int n) const {
    if (n < 1 || n > depth()) throw LevelOutOfRange("level " + std::to_string(n));
    return *levels_[size_t(n - 1)];
}

FDHopfPtr IndHopf::level_ptr(int n) const {
    if (n < 1 || n > depth()) throw LevelOutOfRange("level " + std::to_string(n));
    return levels_[size_t(n - 1)];
}

const HopfMap& IndHopf::transition(int n) const {
    if (n < 1 || n >= depth()) throw LevelOutOfRange("transition " + std::to_string(n));
    return transitions_[size_t(n - 1)];
}

std::string IndHopf::describe() const {
    return hopf_tower_description("ind", levels_, prov_);
}

ProHopf::ProHopf(std::vector<FDHopfPtr> levels, std::vector<HopfMap> transitions, Provenance prov)
    : levels_(std::move(levels)), transitions_(std::move(transitions)), prov_(prov) {
    validate_hopf_tower(levels_, transitions_, false);
}

const FDHopf& ProHopf::level(int n) const {
    if (n < 1 || n > depth()) throw LevelOutOfRange("level " + std::to_string(n));
    return *levels_[size_t(n - 1)];
}

FDHopfPtr ProHopf::level_ptr(int n) const {
    if (n < 1 || n > depth()) throw LevelOutOfRange("level " + std::to_string(n));
    return levels_[size_t(n - 1)];
}

const HopfMap& ProHopf::transition(int n) const {
    if (n < 1 || n >= depth()) throw LevelOutOfRange("transition " + std::to_string(n));
    return transitions_[size_t(n - 1)];
}

std::string ProHopf::describe() const {
    return hopf_tower_description("pro", levels_, prov_);
}

namespace {

// 0/1 matrix of e_g -> e_{map(g)} (covariant, for group algebras).
QMat pushforward_matrix(const GroupHom& f) {
    QMat m(f.target().order(), f.source().order());
    for (int g = 0; g < f.source().order(); ++g) m.at(f(g), g) = 1;
    return m;
}

// 0/1 matrix of delta_h -> sum over f(x) = h of delta_x (contravariant,
// for function algebras).
QMat pullback_matrix(const GroupHom& f) {
    QMat m(f.source().order(), f.target().order());
    for (int g = 0; g < f.source().order(); ++g) m.at(g, f(g)) = 1;
    return m;
}

} // namespace

IndHopf ind_group_algebra(const TowerOfGroups& t) {
    if (t.direction() != TowerOfGroups::Direction::ind)
        throw InvalidTower("ind_group_algebra needs an inductive group tower");
    std::vector<FDHopfPtr> levels;
    for (int n = 1; n <= t.depth(); ++n)
        levels.push_back(std::make_shared<const FDHopf>(group_algebra_hopf(t.level(n))));
    std::vector<HopfMap> transitions;
    for (int n = 1; n < t.depth(); ++n)
        transitions.push_back(HopfMap{levels[size_t(n - 1)], levels[size_t(n)],
                                      pushforward_matrix(t.transition(n))});
    return IndHopf(std::move(levels), std::move(transitions),
                   Provenance{Provenance::Base::ind_group_algebra, 0});
}

ProHopf ind_function_algebra(const TowerOfGroups& t) {
    if (t.direction() != TowerOfGroups::Direction::ind)
        throw InvalidTower("ind_function_algebra needs an inductive group tower");
    std::vector<FDHopfPtr> levels;
    for (int n = 1; n <= t.depth(); ++n)
        levels.push_back(std::make_shared<const FDHopf>(function_algebra_hopf(t.level(n))));
    std::vector<HopfMap> transitions;
    for (int n = 1; n < t.depth(); ++n)
        transitions.push_back(
            HopfMap{levels[size_t(n)], levels[size_t(n - 1)], pullback_matrix(t.transition(n))});
    return ProHopf(std::move(levels), std::move(transitions),
                   Provenance{Provenance::Base::ind_function_algebra, 0});
}

IndHopf pro_function_algebra(const TowerOfGroups& t) {
    if (t.direction() != TowerOfGroups::Direction::pro)
        throw InvalidTower("pro_function_algebra needs a projective group tower");
    std::vector<FDHopfPtr> levels;
    for (int n = 1; n <= t.depth(); ++n)
        levels.push_back(std::make_shared<const FDHopf>(function_algebra_hopf(t.level(n))));
    std::vector<HopfMap> transitions;
    for (int n = 1; n < t.depth(); ++n)
        transitions.push_back(
            HopfMap{levels[size_t(n - 1)], levels[size_t(n)], pullback_matrix(t.transition(n))});
    return IndHopf(std::move(levels), std::move(transitions),
                   Provenance{Provenance::Base::pro_function_algebra, 0});
}

ProHopf pro_group_algebra(const TowerOfGroups& t) {
    if (t.direction() != TowerOfGroups::Direction::pro)
        throw InvalidTower("pro_group_algebra needs a projective group tower");
    std::vector<FDHopfPtr> levels;
    for (int n = 1; n <= t.depth(); ++n)
        levels.push_back(std::make_shared<const FDHopf>(group_algebra_hopf(t.level(n))));
    std::vector<HopfMap> transitions;
    for (int n = 1; n < t.depth(); ++n)
        transitions.push_back(HopfMap{levels[size_t(n)], levels[size_t(n - 1)],
                                      pushforward_matrix(t.transition(n))});
    return ProHopf(std::move(levels), std::move(transitions),
                   Provenance{Provenance::Base::pro_group_algebra, 0});
}

namespace {

Provenance dualized(Provenance p) {
    p.dual_depth += 1;
    return p;
}

} // namespace

ProHopf dual_tower(const IndHopf& h) {
    std::vector<FDHopfPtr> levels;
    for (int n = 1; n <= h.depth(); ++n)
        levels.push_back(std::make_shared<const FDHopf>(dual_hopf(h.level(n))));
    std::vector<HopfMap> transitions;
    for (int n = 1; n < h.depth(); ++n)
        transitions.push_back(
            HopfMap{levels[size_t(n)], levels[size_t(n - 1)], h.transition(n).matrix.transposed()});
    return ProHopf(std::move(levels), std::move(transitions), dualized(h.provenance()));
}

IndHopf dual_tower(const ProHopf& h) {
    std::vector<FDHopfPtr> levels;
    for (int n = 1; n <= h.depth(); ++n)
        levels.push_back(std::make_shared<const FDHopf>(dual_hopf(h.level(n))));
    std::vector<HopfMap> transitions;
    for (int n = 1; n < h.depth(); ++n)
        transitions.push_back(
            HopfMap{levels[size_t(n - 1)], levels[size_t(n)], h.transition(n).matrix.transposed()});
    return IndHopf(std::move(levels), std::move(transitions), dualized(h.provenance()));
}

namespace {

EnvelopeCertificate make_certificate(const Provenance& prov) {
    if (!prov.tagged())
        throw UnknownProvenance(
            "cannot justify a trivial envelope for a hand-assembled tower; "
            "build it through one of the four tower constructions");
    if (prov.group_side())
        return EnvelopeCertificate{
            "convolution side: every level is a finite-dimensional group algebra carrying the "
            "strongest locally convex topology, so each submultiplicative prenorm is already "
            "continuous and the envelope acts as the identity",
            anchor::envelope_identity};
    return EnvelopeCertificate{
        "function side: every level is a finite-dimensional function algebra, complete in all "
        "submultiplicative prenorms; the tower is already an Arens-Michael algebra and the "
        "envelope acts as the identity",
        anchor::envelope_identity};
}

} // namespace

IndHopf arens_michael_envelope(const IndHopf& h, EnvelopeCertificate* certificate) {
    EnvelopeCertificate cert = make_certificate(h.provenance());
    if (certificate) *certificate = cert;
    return h;
}

ProHopf arens_michael_envelope(const ProHopf& h, EnvelopeCertificate* certificate) {
    EnvelopeCertificate cert = make_certificate(h.provenance());
    if (certificate) *certificate = cert;
    return h;
}

ProHopf holomorphic_dual(const IndHopf& h, EnvelopeCertificate* certificate) {
    return arens_michael_envelope(dual_tower(h), certificate);
}

IndHopf holomorphic_dual(const ProHopf& h, EnvelopeCertificate* certificate) {
    return arens_michael_envelope(dual_tower(h), certificate);
}

namespace {

std::string qmat_entry_witness(const QMat& got, const QMat& want) {
    for (int i = 0; i < got.rows(); ++i)
        for (int j = 0; j < got.cols(); ++j)
            if (got.at(i, j) != want.at(i, j)) {
                std::ostringstream os;
                os << "entry (" << i << "," << j << "): " << rational_to_string(got.at(i, j))
                   << " != " << rational_to_string(want.at(i, j));
                return os.str();
            }
    return "";
}

template <class Tower, class Bullet>
Report reflexivity_body(const Tower& h, const Bullet& bullet, const Tower& double_bullet,
                        const EnvelopeCertificate& cert1, const EnvelopeCertificate& cert2,
                        const char* theorem_anchor) {
    Report r;
    r.subject = h.describe();

    for (int n = 1; n <= h.depth(); ++n) {
        Report axioms = check_hopf_axioms(h.level(n));
        std::string axiom_witness;
        for (const auto& rec : axioms.records)
            if (!rec.pass) {
                axiom_witness = rec.check + ": " + rec.witness;
                break;
            }
        r.add("level.hopf-axioms", axioms.passed(), anchor::hopf_axioms, n, axiom_witness);

        HopfMap canonical{h.level_ptr(n), double_bullet.level_ptr(n), QMat::identity(h.level(n).dim())};
        Report morph = hopf_morphism_report(canonical);
        bool iso = morph.passed() && is_hopf_isomorphism(canonical);
        std::string witness;
        for (const auto& rec : morph.records)
            if (!rec.pass) {
                witness = rec.check + ": " + rec.witness;
                break;
            }
        r.add("double-dual.canonical-iso", iso, theorem_anchor, n, witness);
    }
    for (int n = 1; n < h.depth(); ++n) {
        const QMat& original = h.transition(n).matrix;
        const QMat& doubled = double_bullet.transition(n).matrix;
        bool ok = original == doubled;
        r.add("naturality.square", ok, theorem_anchor, n, qmat_entry_witness(doubled, original));
    }
    for (int n = 1; n < bullet.depth(); ++n) {
        Report morph = hopf_morphism_report(bullet.transition(n));
        r.add("dual-transition.hopf-morphism", morph.passed(), anchor::hopf_duality, n,
              "transposed transition fails the morphism laws");
    }

    Diagram d;
    d.nodes = {
        DiagramNode{"H", h.describe()},
        DiagramNode{"H'", "level-wise strong dual of H"},
        DiagramNode{"H*", "envelope of H' (the holomorphic dual)"},
        DiagramNode{"(H*)'", "level-wise strong dual of H*"},
    };
    bool all = r.passed();
    d.edges = {
        DiagramEdge{"H", "H'", "strong dual", all,
                    "levels are finite dimensional; the strong dual transposes the structure "
                    "tensors exactly"},
        DiagramEdge{"H'", "H*", "arens-michael envelope", all, cert1.statement},
        DiagramEdge{"H*", "(H*)'", "strong dual", all,
                    "levels are finite dimensional; the strong dual transposes the structure "
                    "tensors exactly"},
        DiagramEdge{"(H*)'", "H", "arens-michael envelope + canonical evaluation", all,
                    cert2.statement},
    };
    r.diagram = std::move(d);
    return r;
}

} // namespace

Report reflexivity_check(const IndHopf& h) {
    EnvelopeCertificate cert1, cert2;
    ProHopf bullet = holomorphic_dual(h, &cert1);
    IndHopf double_bullet = holomorphic_dual(bullet, &cert2);
    const char* theorem = h.provenance().base == Provenance::Base::pro_function_algebra ||
                                  h.provenance().base == Provenance::Base::pro_group_algebra
                              ? anchor::hopf_reflexivity_profinite
                              : anchor::hopf_reflexivity_locally_finite;
    return reflexivity_body(h, bullet, double_bullet, cert1, cert2, theorem);
}

Report reflexivity_check(const ProHopf& h) {
    EnvelopeCertificate cert1, cert2;
    IndHopf bullet = holomorphic_dual(h, &cert1);
    ProHopf double_bullet = holomorphic_dual(bullet, &cert2);
    const char* theorem = h.provenance().base == Provenance::Base::pro_function_algebra ||
                                  h.provenance().base == Provenance::Base::pro_group_algebra
                              ? anchor::hopf_reflexivity_profinite
                              : anchor::hopf_reflexivity_locally_finite;
    return reflexivity_body(h, bullet, double_bullet, cert1, cert2, theorem);
}

Report abelian_spectrum_consistency(const IndGroup& g) {
    Report r;
    r.subject = "spectrum consistency for " + g.describe();
    TowerOfGroups t = TowerOfGroups::from_ind(g);
    IndHopf algebras = ind_group_algebra(t);
    ProGroup dual = dual_ind(g);

    std::vector<SpectrumResult> spectra;
    for (int n = 1; n <= g.depth(); ++n) {
        SpectrumResult s = spectrum_abelian_group_algebra(g.level(n));
        r.merge(s.verification, n);
        bool count_ok = Int(s.characters.size()) == dual.level(n).order();
        r.add("spectrum.size-matches-dual-level", count_ok, anchor::spectrum_recovery, n,
              "spectrum size differs from the dual level order");
        spectra.push_back(std::move(s));
    }

    // Comparison squares: restricting a level-(n+1) character along the
    // algebra transition gives the character indexed by the dual transition.
    for (int n = 1; n < g.depth(); ++n) {
        const QMat& m = algebras.transition(n).matrix; // C[G_n] -> C[G_{n+1}]
        const Hom& dual_t = dual.transition(n);        // G^_{n+1} -> G^_n
        const FiniteAbelianGroup& upper = dual.level(n + 1);
        bool ok = true;
        std::string witness;
        for (Int c = 0; c < upper.order() && ok; ++c) {
            const auto& chi = spectra[size_t(n)].characters[size_t(c)];
            Int target = dual.level(n).index_of(dual_t(upper.element_at(c)));
            const auto& expected = spectra[size_t(n - 1)].characters[size_t(target)];
            for (Int i = 0; i < g.level(n).order() && ok; ++i) {
                // column i of m has a single 1 at the image index
                int image = -1;
                for (int row = 0; row < m.rows(); ++row)
                    if (m.at(row, int(i)) != 0) image = row;
                if (!(chi[size_t(image)] == expected[size_t(i)])) {
                    ok = false;
                    witness = "character " + std::to_string(c) + " restricted at element " +
                              std::to_string(i);
                }
            }
        }
        r.add("spectrum.comparison-square", ok, anchor::spectrum_recovery, n, witness);
    }
    return r;
}

} // namespace holodual

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "holodual/hopf.hpp"
#include "holodual/towers.hpp"

namespace holodual {

/// Tower of finite (possibly non-abelian) groups with injective (ind) or
/// surjective (pro) transitions, all exhaustively validated.
class TowerOfGroups {
public:
    enum class Direction { ind, pro };

    TowerOfGroups(Direction dir, std::vector<FiniteGroup> levels, std::vector<GroupHom> transitions);

    Direction direction() const { return dir_; }
    int depth() const { return int(levels_.size()); }
    const FiniteGroup& level(int n) const;     // 1-based
    const GroupHom& transition(int n) const;   // ind: n -> n+1; pro: n+1 -> n
    const std::optional<FiniteAbelianGroup>& abelian_level(int n) const;

    std::string describe() const;

    static TowerOfGroups symmetric_tower(int depth); // S_1 < S_2 < ... , depth <= 5
    static TowerOfGroups power_pro(const FiniteGroup& g, int depth); // G^n with truncations
    static TowerOfGroups from_ind(const IndGroup& g);
    static TowerOfGroups from_pro(const ProGroup& g);

private:
    Direction dir_;
    std::vector<FiniteGroup> levels_;
    std::vector<GroupHom> transitions_;
    std::vector<std::optional<FiniteAbelianGroup>> abelian_;
};

/// How a Hopf tower was produced. The Arens-Michael envelope only acts on
/// towers whose provenance it can justify.
struct Provenance {
    enum class Base {
        hand_assembled,
        ind_group_algebra,      // C[G_n] over an ind tower
        ind_function_algebra,   // C^{G_n} over an ind tower (restrictions)
        pro_function_algebra,   // C^{G_n} over a pro tower (inflations)
        pro_group_algebra,      // C[G_n] over a pro tower (pushforwards)
    };
    Base base = Base::hand_assembled;
    int dual_depth = 0; // how many strong duals were applied

    bool tagged() const { return base != Base::hand_assembled; }
    /// True when the current side is a convolution (group-algebra) side.
    bool group_side() const;
    std::string describe() const;
};

/// Inductive tower of finite-dimensional Hopf algebras: injective verified
/// Hopf morphisms upward.
class IndHopf {
public:
    IndHopf(std::vector<FDHopfPtr> levels, std::vector<HopfMap> transitions,
            Provenance prov = {});

    int depth() const { return int(levels_.size()); }
    const FDHopf& level(int n) const;
    FDHopfPtr level_ptr(int n) const;
    const HopfMap& transition(int n) const; // level n -> n+1
    const Provenance& provenance() const { return prov_; }
    std::string describe() const;

private:
    std::vector<FDHopfPtr> levels_;
    std::vector<HopfMap> transitions_;
    Provenance prov_;
};

/// Projective tower: surjective verified Hopf morphisms downward.
class ProHopf {
public:
    ProHopf(std::vector<FDHopfPtr> levels, std::vector<HopfMap> transitions,
            Provenance prov = {});

    int depth() const { return int(levels_.size()); }
    const FDHopf& level(int n) const;
    FDHopfPtr level_ptr(int n) const;
    const HopfMap& transition(int n) const; // level n+1 -> n
    const Provenance& provenance() const { return prov_; }
    std::string describe() const;

private:
    std::vector<FDHopfPtr> levels_;
    std::vector<HopfMap> transitions_;
    Provenance prov_;
};

// The four constructions. Group injections induce C[G_n] -> C[G_{n+1}]
// and restrictions C^{G_{n+1}} -> C^{G_n}; group surjections induce
// inflations C^{G_n} -> C^{G_{n+1}} and pushforwards C[G_{n+1}] -> C[G_n].
IndHopf ind_group_algebra(const TowerOfGroups& t);
ProHopf ind_function_algebra(const TowerOfGroups& t);
IndHopf pro_function_algebra(const TowerOfGroups& t);
ProHopf pro_group_algebra(const TowerOfGroups& t);

/// Level-wise strong dual with transposed transitions.
ProHopf dual_tower(const IndHopf& h);
IndHopf dual_tower(const ProHopf& h);

struct EnvelopeCertificate {
    std::string statement;
    std::string anchor;
};

/// Identity on every provenance-tagged tower, with a certificate recording
/// why the envelope is trivial here. Throws UnknownProvenance otherwise.
IndHopf arens_michael_envelope(const IndHopf& h, EnvelopeCertificate* certificate = nullptr);
ProHopf arens_michael_envelope(const ProHopf& h, EnvelopeCertificate* certificate = nullptr);

/// envelope(dual_tower(h)).
ProHopf holomorphic_dual(const IndHopf& h, EnvelopeCertificate* certificate = nullptr);
IndHopf holomorphic_dual(const ProHopf& h, EnvelopeCertificate* certificate = nullptr);

/// Runs the double-dual comparison level by level and emits the four-corner
/// reflexivity diagram with a certificate on every edge.
Report reflexivity_check(const IndHopf& h);
Report reflexivity_check(const ProHopf& h);

/// Spectra of the group algebras over an abelian ind tower recover the dual
/// tower of groups, with commuting comparison squares.
Report abelian_spectrum_consistency(const IndGroup& g);

} // namespace holodual

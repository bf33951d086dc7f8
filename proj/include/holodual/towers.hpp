#pragma once

#include <string>
#include <vector>

#include "holodual/finab.hpp"
#include "holodual/report.hpp"

namespace holodual {

/// Finite-depth inductive tower of finite abelian groups: levels G_1..G_N
/// with injective transitions G_n -> G_{n+1}. Models a locally finite
/// abelian group as the union of the prefix.
class IndGroup {
public:
    IndGroup(std::vector<FiniteAbelianGroup> levels, std::vector<Hom> transitions);

    int depth() const { return int(levels_.size()); }
    const FiniteAbelianGroup& level(int n) const;      // 1-based
    const Hom& transition(int n) const;                // level n -> n+1, 1 <= n < depth
    Hom inclusion(int from, int to) const;             // composite, from <= to

    IndGroup truncated(int depth) const;
    std::string describe() const;

private:
    std::vector<FiniteAbelianGroup> levels_;
    std::vector<Hom> transitions_;
};

/// Finite-depth projective tower: levels G_1..G_N with surjective
/// transitions G_{n+1} -> G_n. Models a profinite abelian group with
/// countable base, truncated at depth N.
class ProGroup {
public:
    ProGroup(std::vector<FiniteAbelianGroup> levels, std::vector<Hom> transitions);

    int depth() const { return int(levels_.size()); }
    const FiniteAbelianGroup& level(int n) const;
    const Hom& transition(int n) const;                // level n+1 -> n, 1 <= n < depth
    Hom projection(int from, int to) const;            // composite, from >= to

    ProGroup truncated(int depth) const;
    std::string describe() const;

    bool operator==(const ProGroup& rhs) const = default;

private:
    std::vector<FiniteAbelianGroup> levels_;
    std::vector<Hom> transitions_;
};

/// Element of the inductive limit, recorded at a level.
struct IndElement {
    int level = 1;
    Element value;
};

/// Coherent tuple (g_1, ..., g_N) with transition(g_{n+1}) = g_n.
struct ProElement {
    std::vector<Element> coords;
};

IndElement push_to(const IndGroup& g, const IndElement& x, int level);
bool ind_equal(const IndGroup& g, const IndElement& a, const IndElement& b);
ProElement make_pro_element(const ProGroup& g, std::vector<Element> coords); // validates coherence

/// Dual of an inductive tower: character groups with the dual (surjective)
/// transitions; a profinite tower.
ProGroup dual_ind(const IndGroup& g);

/// Dual of a projective tower: character groups with the dual (injective)
/// transitions; a locally finite tower.
IndGroup dual_pro(const ProGroup& g);

/// Level-wise double-duality verdict: evaluation maps are isomorphisms and
/// all naturality squares with transitions commute entrywise.
Report reflexivity_check_ind(const IndGroup& g);
Report reflexivity_check_pro(const ProGroup& g);

// Builders. p must be prime, depth >= 1.
IndGroup pruefer(Int p, int depth);                 // Z/p -> Z/p^2 -> ..., x -> p*x
ProGroup padic(Int p, int depth);                   // ... -> Z/p^2 -> Z/p, reduction
IndGroup direct_sum_tower(Int d, int depth);        // (Z/d)^n with coordinate inclusions
ProGroup product_pro(Int d, int depth);             // (Z/d)^n with truncation projections
IndGroup factorial_ind(int depth);                  // Z/1! -> Z/2! -> ..., x -> (n+1)*x

bool is_prime(Int p);

} // namespace holodual

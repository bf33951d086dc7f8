#pragma once

#include <string>
#include <vector>

#include "holodual/finab.hpp"

namespace holodual {

/// Finite group given by its multiplication table (element indices).
/// Construction verifies closure, associativity, identity, and inverses
/// exhaustively.
class FiniteGroup {
public:
    FiniteGroup(std::vector<std::vector<int>> table, std::string name = "");

    int order() const { return order_; }
    int op(int a, int b) const { return table_[size_t(a) * size_t(order_) + size_t(b)]; }
    int inverse(int a) const { return inverse_[size_t(a)]; }
    int identity() const { return identity_; }
    bool is_abelian() const { return abelian_; }
    const std::string& name() const { return name_; }

    bool operator==(const FiniteGroup& rhs) const {
        return order_ == rhs.order_ && table_ == rhs.table_;
    }

    static FiniteGroup cyclic(int n);
    static FiniteGroup dihedral(int n);  // order 2n
    static FiniteGroup symmetric(int n); // n <= 5
    static FiniteGroup alternating(int n);
    static FiniteGroup quaternion8();
    static FiniteGroup from_abelian(const FiniteAbelianGroup& g); // same enumeration
    static FiniteGroup product(const FiniteGroup& a, const FiniteGroup& b); // pair index a*|B|+b

private:
    int order_ = 1;
    std::vector<int> table_;
    int identity_ = 0;
    std::vector<int> inverse_;
    bool abelian_ = true;
    std::string name_;
};

/// Group homomorphism as an element-index map, exhaustively validated.
class GroupHom {
public:
    GroupHom(FiniteGroup source, FiniteGroup target, std::vector<int> map);

    const FiniteGroup& source() const { return source_; }
    const FiniteGroup& target() const { return target_; }
    int operator()(int a) const { return map_[size_t(a)]; }
    const std::vector<int>& map() const { return map_; }

    bool is_injective() const;
    bool is_surjective() const;

private:
    FiniteGroup source_, target_;
    std::vector<int> map_;
};

/// Invariant factors and coordinates of an abelian multiplication-table
/// group. Throws NonAbelian for non-commutative input.
struct AbelianStructure {
    FiniteAbelianGroup group;
    std::vector<Element> coords; // FiniteGroup element index -> coordinates
};

AbelianStructure abelian_invariants(const FiniteGroup& g);

} // namespace holodual

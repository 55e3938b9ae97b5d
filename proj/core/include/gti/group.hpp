#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "gti/errors.hpp"

namespace gti {

using Elem = int;

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// A finite group on elements 0..n-1 with dense multiplication and inverse
/// tables. The identity is always element 0. Instances are immutable.
class FiniteGroup {
public:
    static constexpr int kDefaultOrderCap = 4096;

    static GroupPtr from_mul_table(std::vector<std::vector<Elem>> mul);
    static GroupPtr trivial();
    static GroupPtr cyclic(int n);

    int order() const { return order_; }
    Elem identity() const { return 0; }
    Elem mul(Elem a, Elem b) const { return mul_[static_cast<size_t>(a) * order_ + b]; }
    Elem inv(Elem a) const { return inv_[a]; }

    Elem power(Elem a, long long m) const;
    /// Adjoint action x |> g = x g x^-1.
    Elem conj(Elem x, Elem g) const { return mul(mul(x, g), inv(x)); }
    int element_order(Elem a) const;

    bool is_cyclic_canonical() const; // mul(a,b) == (a+b) mod n

private:
    FiniteGroup(int order, std::vector<Elem> mul, std::vector<Elem> inv)
        : order_(order), mul_(std::move(mul)), inv_(std::move(inv)) {}

    int order_;
    std::vector<Elem> mul_;
    std::vector<Elem> inv_;
};

/// Closure of permutation generators on {0..degree-1}, numbered breadth-first
/// from the identity. Optionally reports the permutation realizing each
/// element through `element_perms`.
GroupPtr group_from_permutations(int degree, const std::vector<std::vector<int>>& generators,
                                 int order_cap = FiniteGroup::kDefaultOrderCap,
                                 std::vector<std::vector<int>>* element_perms = nullptr);

/// A subgroup given by its sorted element set inside a parent group.
class Subgroup {
public:
    Subgroup() = default;
    Subgroup(GroupPtr parent, std::vector<Elem> elements);

    static Subgroup full(GroupPtr g);
    static Subgroup trivial(GroupPtr g);

    const GroupPtr& parent() const { return parent_; }
    int size() const { return static_cast<int>(elements_.size()); }
    const std::vector<Elem>& elements() const { return elements_; }
    bool contains(Elem x) const { return mask_[x] != 0; }
    /// Position of x in the sorted element list; contract error if absent.
    int local_index(Elem x) const;
    Elem element(int local) const { return elements_[local]; }

private:
    GroupPtr parent_;
    std::vector<Elem> elements_;
    std::vector<char> mask_;
};

struct GroupHom {
    GroupHom() = default;
    GroupHom(GroupPtr source, GroupPtr target, std::vector<Elem> images);

    Elem operator()(Elem x) const { return images[x]; }

    GroupPtr source;
    GroupPtr target;
    std::vector<Elem> images;
};

/// A x B with element index a*|B|+b, plus the four canonical homomorphisms.
struct DirectProduct {
    GroupPtr group;
    GroupPtr left;
    GroupPtr right;
    GroupHom proj_left, proj_right;
    GroupHom inj_left, inj_right;

    Elem pair(Elem a, Elem b) const { return a * right->order() + b; }
    std::pair<Elem, Elem> unpair(Elem x) const {
        int n = right->order();
        return {x / n, x % n};
    }
};

DirectProduct direct_product(GroupPtr a, GroupPtr b, int order_cap = FiniteGroup::kDefaultOrderCap);
Subgroup diagonal_subgroup(const DirectProduct& prod);

Subgroup subgroup_closure(const GroupPtr& g, const std::vector<Elem>& gens);

/// Partition of G into the classes gH, with the minimal element of each
/// class as representative.
struct CosetDecomposition {
    std::vector<Elem> representatives;
    std::vector<Elem> rep_of; // element -> representative of its class
};

CosetDecomposition right_cosets(const GroupPtr& g, const Subgroup& h);

struct DoubleCosetDecomposition {
    std::vector<Elem> representatives;
    std::vector<Elem> rep_of;
};

DoubleCosetDecomposition double_cosets(const GroupPtr& g, const Subgroup& h);

/// Stab_H(gH) = {h in H : hgH = gH} = H n gHg^-1.
Subgroup stabilizer_of_coset(const GroupPtr& g, const Subgroup& h, Elem coset_rep);

/// Elements of the coset gH in increasing order.
std::vector<Elem> coset_elements(const GroupPtr& g, const Subgroup& h, Elem coset_rep);

struct OrbitInfo {
    Elem representative;
    int orbit_size;
    int stabilizer_size; // |S n C_G(r)|
};

/// Orbit representatives of the conjugation action of S on the coset gH.
std::vector<OrbitInfo> adjoint_orbit_representatives(const Subgroup& s, const std::vector<Elem>& coset);

struct ClassDecomposition {
    std::vector<Elem> representatives;
    std::vector<Elem> rep_of;
};

ClassDecomposition conjugacy_classes(const GroupPtr& g);
Subgroup centralizer(const GroupPtr& g, Elem x);

} // namespace gti

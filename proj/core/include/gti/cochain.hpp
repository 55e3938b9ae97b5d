#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <unordered_map>

#include "gti/group.hpp"
#include "gti/unit_scalar.hpp"

namespace gti {

/// A normalized cochain G^n -> roots of unity, represented as a lazily
/// evaluated expression tree. Values are exact UnitScalars; a cochain is
/// never materialized densely unless explicitly requested.
class Cochain {
public:
    using Fn = std::function<UnitScalar(std::span<const Elem>)>;
    using Table = std::unordered_map<uint64_t, UnitScalar>;

    Cochain() = default;

    int arity() const { return arity_; }
    const GroupPtr& group() const { return group_; }
    bool valid() const { return group_ != nullptr; }

    UnitScalar eval(std::span<const Elem> args) const;
    UnitScalar operator()(Elem a) const;
    UnitScalar operator()(Elem a, Elem b) const;
    UnitScalar operator()(Elem a, Elem b, Elem c) const;
    UnitScalar operator()(Elem a, Elem b, Elem c, Elem d) const;

    static Cochain trivial(GroupPtr g, int arity);
    static Cochain from_function(GroupPtr g, int arity, Fn fn);
    static Cochain from_table(GroupPtr g, int arity, Table entries);
    /// Packs up to four element indices (< 65536 each) into a table key.
    static uint64_t pack_key(std::span<const Elem> args);

    /// The standard generator of degree-three cyclic cohomology on Z/N,
    /// raised to the power t. The group must be Z/N in canonical form.
    static Cochain cyclic_kappa(GroupPtr zn, long long t = 1);
    /// The one-cochain j -> e^{2*pi*i*[k][j]/N^2} on Z/N.
    static Cochain cyclic_lambda(GroupPtr zn, long long k);
    static Cochain inflate(Cochain inner, GroupHom p);
    /// omega(x,y,z)/omega(f,g,h) on G x G.
    static Cochain double_cocycle(const Cochain& omega, const DirectProduct& prod);

    Cochain operator*(const Cochain& o) const;
    Cochain inverse() const;
    Cochain pow(long long k) const;
    /// Coboundary d: alternating product of face maps, the first face
    /// dropping the first argument.
    Cochain boundary() const;
    /// Same cochain with a shared evaluation cache.
    Cochain memoized() const;

    /// Dense table of all values on G^arity (guarded by a size cap).
    Table materialize_table() const;

private:
    struct Expr;
    Cochain(int arity, GroupPtr group, std::shared_ptr<const Expr> expr);

    int arity_ = 0;
    GroupPtr group_;
    std::shared_ptr<const Expr> expr_;
};

/// Exhaustive check that the coboundary vanishes identically (arity <= 3).
bool is_cocycle(const Cochain& a);
/// omega(x,y,h) = 1 for all x,y in G and h in H.
bool is_adapted(const Cochain& omega, const Subgroup& h);
/// Cochain evaluates to 1 on all tuples from H^arity.
bool is_trivial_on(const Cochain& a, const Subgroup& h);

/// Solve A x = b over Z/q for a prime power q = p^e. Used internally by
/// solve_coboundary and exposed for building cochains subject to linear
/// exponent conditions. Returns nullopt when the system is inconsistent.
std::optional<std::vector<long long>> solve_mod_prime_power(std::vector<std::vector<long long>> a,
                                                            std::vector<long long> b, long long p,
                                                            long long q);

/// Given a 2-cochain beta on H with d beta = 1 in the solvable case, find a
/// normalized 1-cochain theta on H with d theta = beta. Returns nullopt when
/// beta represents a nontrivial cohomology class.
std::optional<Cochain> solve_coboundary(const Cochain& beta, const Subgroup& h);

} // namespace gti

#pragma once

#include "gti/cochain.hpp"
#include "gti/group.hpp"

namespace gti {

/// The quadruple (G, H, omega, psi): finite group, subgroup, 3-cocycle on G
/// and 2-cochain on H with d psi = omega restricted to H^3.
struct GroupTheoreticalData {
    GroupPtr G;
    Subgroup H;
    Cochain omega; // arity 3 on G
    Cochain psi;   // arity 2, evaluated on H

    static GroupTheoreticalData make(GroupPtr g, Subgroup h, Cochain omega, Cochain psi);
    static GroupTheoreticalData plain(GroupPtr g, Subgroup h); // trivial omega and psi

    /// Exhaustive consistency checks; throws ValidationError naming the
    /// first violated instance.
    void validate() const;
};

/// coc_g(x,y) = omega(x,y,g) omega^-1(x, y|>g, y) omega((xy)|>g, x, y).
UnitScalar coc(const Cochain& omega, Elem g, Elem x, Elem y);

/// For adapted omega, coc_g(x,h) collapses to omega(x,h,g); well defined on
/// the coset gH.
UnitScalar omega_g(const Cochain& omega, const Subgroup& h, Elem g, Elem x, Elem k);

/// Power-correction scalar: pi_0 = 1, pi_{m+1}(x) = omega(x,x^m,x) pi_m(x),
/// with the downward rule for negative m.
UnitScalar pi_m(const Cochain& omega, Elem x, long long m);

/// The 2-cocycle on S = Stab_H(gH) governing the projective representation
/// attached to the double coset HgH.
Cochain beta_g(const GroupTheoreticalData& data, Elem g);

/// Gauge-shift corrections for (omega, psi) -> (omega d eta, psi eta|_{H^2} d theta).
UnitScalar lambda_shift(const Cochain& eta, Elem g, Elem s);
UnitScalar gamma_shift(const Cochain& theta, Elem g, Elem s);

/// pi_m with the eta/theta corrections of the general (non-adapted) formula;
/// pi itself is always taken for the original omega.
UnitScalar tilde_pi(const Cochain& omega, const Cochain& eta, const Cochain& theta, const Subgroup& h,
                    Elem g, Elem s, long long m);

/// The 2-cochains (s,t) -> omega_g(s,t) and (x,y) -> coc_g(x,y), packaged
/// for the projective-character solver.
Cochain omega_g_cochain(const Cochain& omega, Elem g);
Cochain coc_cochain(const Cochain& omega, Elem g);

/// lambda_g(x) = omega^-1(g, x, x^-1); character correction between the
/// conjugation picture and the double-coset picture of a double.
UnitScalar double_lambda(const Cochain& omega, Elem g, Elem x);

/// For an index-two subgroup N: i outside N, 1 inside.
UnitScalar index_two_lambda(const Subgroup& n, Elem x);

} // namespace gti

#pragma once

#include "gti/symbols.hpp"

namespace gti {

/// Output of the adaptation procedure: omega' = omega * d(eta) is adapted
/// and psi * (eta|_{H^2}) * d(theta) = 1 on H^2.
struct AdaptationResult {
    Cochain omega_adapted; // arity 3
    Cochain eta;           // arity 2 on G
    Cochain theta;         // arity 1 on H
    std::vector<Elem> transversal; // right-coset representatives, identity first
};

/// Absorb psi into the cocycle: eta0 = psi^-1 on H^2 (1 elsewhere), so that
/// omega1 = omega * d(eta0) restricts trivially to H^3.
std::pair<Cochain, Cochain> absorb_psi(const GroupTheoreticalData& data);

/// The two-step construction of eta = eta1 * eta2 turning a cocycle with
/// trivial restriction to H^3 into an adapted one. `transversal` must hold
/// one representative per right coset with the identity representing H.
Cochain natale_eta(const Cochain& omega, const Subgroup& h, const std::vector<Elem>& transversal);

/// Full pipeline: absorb psi, then adapt; theta comes out trivial because
/// eta|_{H^2} = psi^-1. With check=true the adaptedness of the result is
/// verified exhaustively.
AdaptationResult adapt(const GroupTheoreticalData& data, bool check = true);

/// Minimal-index coset representatives (identity first).
std::vector<Elem> canonical_transversal(const GroupPtr& g, const Subgroup& h);

} // namespace gti

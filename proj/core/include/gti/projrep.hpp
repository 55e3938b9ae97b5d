#pragma once

#include <complex>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "gti/cochain.hpp"
#include "gti/group.hpp"

namespace gti {

/// Trace function of an irreducible beta-projective representation of S.
/// Values are indexed by the local (sorted) order of S.
struct ProjectiveCharacter {
    Subgroup S;
    Cochain beta; // arity 2, evaluated on S
    std::vector<std::complex<double>> values;

    int degree() const { return static_cast<int>(std::lround(values[S.local_index(S.parent()->identity())].real())); }
    std::complex<double> at(Elem parent_elem) const { return values[S.local_index(parent_elem)]; }
};

/// Unitary matrices with rho(s) rho(t) = beta(s,t) rho(st).
struct MatrixRep {
    Subgroup S;
    Cochain beta;
    int dim = 0;
    std::vector<Eigen::MatrixXcd> mats; // by local index

    const Eigen::MatrixXcd& at(Elem parent_elem) const { return mats[S.local_index(parent_elem)]; }
};

struct Irreducible {
    ProjectiveCharacter chi;
    MatrixRep rep;
};

struct ProjRepOptions {
    std::optional<uint64_t> seed;      // default: canonical hash of (S, beta)
    double eigen_gap = 1e-8;           // eigenvalue clustering tolerance
    int max_reseeds = 32;
};

/// Complete list of irreducible beta-projective characters of S, obtained by
/// eigendecomposing a random self-adjoint element of the commutant of the
/// twisted left-regular representation. Deterministic for a fixed seed;
/// sorted by degree, then lexicographically by rounded character values.
std::vector<Irreducible> irreducible_projective_characters(const Subgroup& s, const Cochain& beta,
                                                           const ProjRepOptions& opts = {});

/// (1/|S|) sum_s chi1(s) conj(chi2(s)).
std::complex<double> character_inner_product(const ProjectiveCharacter& a, const ProjectiveCharacter& b);

/// chi'(s) = chi(s) mu(s); the underlying cocycle becomes beta * d(mu).
ProjectiveCharacter twist_character(const ProjectiveCharacter& chi, const Cochain& mu);
/// Same, for an arbitrary scalar correction.
ProjectiveCharacter twist_character(const ProjectiveCharacter& chi,
                                    const std::function<std::complex<double>(Elem)>& mu, Cochain new_beta);

/// Deterministic hash of the pair (S, beta) used for seeding and caching.
uint64_t canonical_hash(const Subgroup& s, const Cochain& beta);

/// Fold one word into a running hash with full avalanching (plain
/// xor-multiply folding drops high-bit information, e.g. signs).
inline void hash_mix(uint64_t& h, uint64_t v) {
    v += 0x9e3779b97f4a7c15ull;
    v = (v ^ (v >> 30)) * 0xbf58476d1ce4e5b9ull;
    v = (v ^ (v >> 27)) * 0x94d049bb133111ebull;
    v ^= v >> 31;
    h ^= v;
    h *= 1099511628211ull;
}

} // namespace gti

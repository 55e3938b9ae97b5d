#pragma once

#include <complex>
#include <optional>
#include <string>

#include "gti/adaptation.hpp"
#include "gti/projrep.hpp"
#include "gti/symbols.hpp"

namespace gti {

/// Which of the three equivalent summation shapes to evaluate: over the whole
/// coset gH, over H (substituting r = gh), or over adjoint S-orbits on gH
/// weighted by stabilizer sizes.
enum class SumVariant { CosetSum, HSum, OrbitSum };

/// A simple object: a double-coset representative g, the stabilizer
/// S = Stab_H(gH), the 2-cocycle on S the character convention prescribes
/// (omega_g for adapted data, beta_g in general), and an irreducible
/// projective character of that twisted algebra.
struct SimpleObjectLabel {
    GroupTheoreticalData data;
    Elem g = 0;
    Subgroup S;
    Cochain cocycle;
    ProjectiveCharacter chi;
    std::optional<MatrixRep> rep;
};

/// nu_m for adapted omega and trivial psi; chi must be an omega_g-character.
/// `den_lcm`, when given, accumulates the lcm of the denominators of the
/// exact scalar factors (used to bound conductors for exact recognition).
std::complex<double> indicator_adapted(const SimpleObjectLabel& label, long long m,
                                       SumVariant variant = SumVariant::CosetSum, bool check = true,
                                       long long* den_lcm = nullptr);

/// nu_m for arbitrary data via the correction pair (eta, theta):
/// omega * d(eta) adapted and psi * (eta|_{H^2}) * d(theta) = 1.
/// chi must be a beta_g-character for the original (omega, psi).
std::complex<double> indicator_general(const SimpleObjectLabel& label, const Cochain& eta,
                                       const Cochain& theta, long long m,
                                       SumVariant variant = SumVariant::CosetSum, bool check = true,
                                       long long* den_lcm = nullptr);

/// nu_m for omega restricting trivially to H^3 (and trivial psi), with the
/// closed-form correction factor
///   omega(g, g^-1 |> r^-m, g^-1 |> r^m)
///     * omega(g, h, r^-m) omega(r^-m, g, h) omega^-1(g, g^-1 |> r^-m, h)
/// for r = gh; chi must be a beta_g-character of the original data.
std::complex<double> indicator_trivial_restriction(const SimpleObjectLabel& label, long long m,
                                                   bool check = true, long long* den_lcm = nullptr);

/// The simple object realized concretely as a twisted H-module
/// W = sum of blocks V_t over a transversal T of S-cosets in H, the block t
/// sitting in degree tgH; h acts by h.(t (x) v) = c(h,t) (t' (x) rho(s) v)
/// where ht = t's. Construction validates the twisted module law
/// h.(h'.w) = omega_{|w|}(h,h') (hh').w exhaustively.
struct InducedModule {
    SimpleObjectLabel label;
    std::vector<Elem> transversal;          // T, identity first
    std::vector<int> block_of;              // element x -> block of degree xH, -1 outside HgH
    std::vector<std::vector<int>> t_index;  // (local h, block) -> target block
    std::vector<std::vector<Elem>> s_part;  // (local h, block) -> s in S with h t = t' s
    std::vector<std::vector<UnitScalar>> c; // (local h, block) -> scalar c(h,t)
};

InducedModule induce_module(const SimpleObjectLabel& label);

/// nu_m evaluated at the module level: (1/|H|) sum over x in G with
/// x^m in H of pi_{-m}(x) Tr(action of x^{-m} on the block of degree xH).
std::complex<double> indicator_module_sum(const InducedModule& w, long long m,
                                          long long* den_lcm = nullptr);

/// nu_m of the simple of the twisted double of G labelled by (g, chi):
/// (1/|C_G(g)|) sum over x with (gx)^m = x^m in C_G(g) of
///   pi_-m(gx)/pi_-m(x)
///     * omega(g, x, x^-m) omega(x^-m, g, x) omega^-1(g, x^-m, x) chi(x^-m).
/// chi must be a coc_g-projective character of the centralizer of g.
std::complex<double> indicator_double(const GroupPtr& g_group, const Cochain& omega, Elem g,
                                      const ProjectiveCharacter& chi, long long m,
                                      long long* den_lcm = nullptr);

/// Effect on nu_m of twisting omega by the t-th power of the cyclic cocycle
/// inflated along p: G -> Z/N (H inside the kernel of p). When
/// ord(p(g)) | m the indicator is multiplied by the returned root of unity;
/// otherwise both indicators vanish.
struct TwistPrediction {
    bool vanishes = false;
    UnitScalar multiplier;
};

TwistPrediction cyclic_twist_predict(const GroupHom& p, long long t, Elem g, long long m);

/// For an index-two subgroup N of G: compare the double of (G, omega) with
/// the double of (G, omega * inflation of the nontrivial cocycle on G/N),
/// matching simples via chi' = chi * lambda_g. The expected relation is a
/// sign flip exactly when g lies outside N and m = 2 mod 4.
struct IndexTwoReport {
    struct Cell {
        Elem g = 0;
        int chi_index = 0;
        long long m = 0;
        std::complex<double> base, twisted;
        bool flip_expected = false;
        bool ok = false;
    };
    std::vector<Cell> cells;
    bool all_ok = true;
};

IndexTwoReport index_two_twist_check(const GroupPtr& g_group, const Cochain& omega, const Subgroup& n,
                                     long long m_max, const ProjRepOptions& opts = {});

/// One row of an indicator table: a simple object plus its values
/// nu_1 .. nu_{m_max}, each with an exact form when recognized.
struct IndicatorCell {
    std::complex<double> value;
    std::optional<std::string> exact;
};

struct IndicatorRow {
    Elem g = 0;
    int stabilizer_size = 0;
    int degree = 0;
    uint64_t chi_hash = 0;
    ProjectiveCharacter chi;
    std::optional<MatrixRep> rep;
    std::vector<IndicatorCell> cells; // index m-1
    std::string label() const;
};

struct IndicatorTable {
    long long m_max = 0;
    long long conductor = 1; // bound used for exact recognition
    std::vector<IndicatorRow> rows;
};

enum class Pipeline { Auto, Adapted, General, TrivialRestriction, Double };

struct TableOptions {
    long long m_max = 12;
    Pipeline pipeline = Pipeline::Auto;
    ProjRepOptions proj;
    bool keep_reps = false; // retain matrix representations in the rows
};

/// Enumerate the simples of C(G, H, omega, psi) and fill their indicator
/// values for m = 1..m_max. Auto picks Adapted when omega is adapted and psi
/// trivial, otherwise adapts first and runs the general formula. The Double
/// pipeline is served by double_indicator_table instead.
IndicatorTable full_indicator_table(const GroupTheoreticalData& data, const TableOptions& opts = {});

/// Indicator table of the twisted double of (G, omega): one row per
/// (conjugacy class representative g, irreducible coc_g-character of C_G(g)).
IndicatorTable double_indicator_table(const GroupPtr& g_group, const Cochain& omega,
                                      const TableOptions& opts = {});

/// Enumerate the simple-object labels only (shared by tables and the CLI).
std::vector<SimpleObjectLabel> enumerate_simples(const GroupTheoreticalData& data,
                                                 bool general_convention,
                                                 const ProjRepOptions& opts = {}, bool keep_reps = false);

/// Recognize v as (p/q) e^{2 pi i k / conductor} with q <= 64, within tol.
std::optional<std::string> recognize_exact(std::complex<double> v, long long conductor,
                                           double tol = 1e-6);

/// Deterministic hash of a character's rounded values (row identity).
uint64_t character_hash(const ProjectiveCharacter& chi);

std::string table_to_json(const IndicatorTable& table);
std::string table_to_csv(const IndicatorTable& table);

} // namespace gti

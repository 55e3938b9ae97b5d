#include "gti/projrep.hpp"

#include <algorithm>
#include <random>

namespace gti {

namespace {

double unit_double(std::mt19937_64& rng) {
    // deterministic across platforms, unlike uniform_real_distribution
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

long long round6(double v) { return std::llround(v * 1e6); }

} // namespace

uint64_t canonical_hash(const Subgroup& s, const Cochain& beta) {
    uint64_t h = 1469598103934665603ull;
    auto mix = [&h](uint64_t v) { hash_mix(h, v); };
    mix(static_cast<uint64_t>(s.parent()->order()));
    for (Elem x : s.elements()) mix(static_cast<uint64_t>(x) + 0x9e3779b9u);
    for (Elem a : s.elements())
        for (Elem b : s.elements()) {
            UnitScalar v = beta(a, b);
            mix(static_cast<uint64_t>(v.num()));
            mix(static_cast<uint64_t>(v.den()));
        }
    return h;
}

std::complex<double> character_inner_product(const ProjectiveCharacter& a, const ProjectiveCharacter& b) {
    if (a.S.elements() != b.S.elements()) throw ContractError("characters of different groups");
    std::complex<double> acc = 0;
    for (size_t i = 0; i < a.values.size(); ++i) acc += a.values[i] * std::conj(b.values[i]);
    return acc / static_cast<double>(a.values.size());
}

ProjectiveCharacter twist_character(const ProjectiveCharacter& chi, const Cochain& mu) {
    if (mu.arity() != 1) throw ContractError("character twist expects a 1-cochain");
    ProjectiveCharacter out;
    out.S = chi.S;
    out.beta = chi.beta * mu.boundary();
    out.values = chi.values;
    for (int i = 0; i < chi.S.size(); ++i) out.values[i] *= mu(chi.S.element(i)).value();
    return out;
}

ProjectiveCharacter twist_character(const ProjectiveCharacter& chi,
                                    const std::function<std::complex<double>(Elem)>& mu, Cochain new_beta) {
    ProjectiveCharacter out;
    out.S = chi.S;
    out.beta = std::move(new_beta);
    out.values = chi.values;
    for (int i = 0; i < chi.S.size(); ++i) out.values[i] *= mu(chi.S.element(i));
    return out;
}

std::vector<Irreducible> irreducible_projective_characters(const Subgroup& s, const Cochain& beta,
                                                           const ProjRepOptions& opts) {
    const auto& g = s.parent();
    int n = s.size();
    if (n > 256) throw SizeLimitError("twisted group algebra larger than 256");

    // beta values on S x S, by local indices, and the local multiplication
    std::vector<std::vector<std::complex<double>>> bval(n, std::vector<std::complex<double>>(n));
    std::vector<std::vector<int>> lmul(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            bval[a][b] = beta(s.element(a), s.element(b)).value();
            lmul[a][b] = s.local_index(g->mul(s.element(a), s.element(b)));
        }

    uint64_t seed = opts.seed ? *opts.seed : canonical_hash(s, beta);

    for (int attempt = 0; attempt < opts.max_reseeds; ++attempt) {
        std::mt19937_64 rng(seed + static_cast<uint64_t>(attempt));

        // random element of the commutant (span of the twisted right-regular
        // operators), symmetrized to self-adjoint
        Eigen::MatrixXcd C = Eigen::MatrixXcd::Zero(n, n);
        for (int t = 0; t < n; ++t) {
            std::complex<double> c(unit_double(rng) - 0.5, unit_double(rng) - 0.5);
            for (int u = 0; u < n; ++u) C(lmul[u][t], u) += c * bval[u][t];
        }
        Eigen::MatrixXcd Hc = (C + C.adjoint()) / 2.0;

        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(Hc);
        const auto& ev = es.eigenvalues();
        const auto& vec = es.eigenvectors();

        double scale = std::max(1.0, std::abs(ev(n - 1) - ev(0)));
        double gap = opts.eigen_gap * scale;

        // left multiplication by s applied to a column block
        auto lmul_apply = [&](int a, const Eigen::MatrixXcd& B) {
            Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(n, B.cols());
            for (int u = 0; u < n; ++u) out.row(lmul[a][u]) = bval[a][u] * B.row(u);
            return out;
        };

        bool ok = true;
        std::vector<Irreducible> found;
        int id_local = s.local_index(g->identity());

        for (int lo = 0; lo < n && ok;) {
            int hi = lo + 1;
            while (hi < n && ev(hi) - ev(hi - 1) < gap) ++hi;
            int d = hi - lo;
            Eigen::MatrixXcd B = vec.middleCols(lo, d);

            ProjectiveCharacter chi;
            chi.S = s;
            chi.beta = beta;
            chi.values.resize(n);
            for (int a = 0; a < n; ++a) chi.values[a] = (B.adjoint() * lmul_apply(a, B)).trace();

            if (std::abs(character_inner_product(chi, chi) - 1.0) > 1e-6 ||
                std::abs(chi.values[id_local] - std::complex<double>(d, 0)) > 1e-6) {
                ok = false; // accidental eigenvalue collision; reseed
                break;
            }

            bool dup = false;
            for (const auto& irr : found) {
                if (std::abs(character_inner_product(chi, irr.chi)) > 0.5) {
                    dup = true;
                    break;
                }
            }
            if (!dup) {
                MatrixRep rep;
                rep.S = s;
                rep.beta = beta;
                rep.dim = d;
                rep.mats.resize(n);
                for (int a = 0; a < n; ++a) rep.mats[a] = B.adjoint() * lmul_apply(a, B);
                found.push_back({std::move(chi), std::move(rep)});
            }
            lo = hi;
        }

        if (!ok) continue;
        long long sum = 0;
        for (const auto& irr : found) sum += static_cast<long long>(irr.rep.dim) * irr.rep.dim;
        if (sum != n) continue;

        std::sort(found.begin(), found.end(), [](const Irreducible& a, const Irreducible& b) {
            if (a.rep.dim != b.rep.dim) return a.rep.dim < b.rep.dim;
            for (size_t i = 0; i < a.chi.values.size(); ++i) {
                auto ra = std::pair(round6(a.chi.values[i].real()), round6(a.chi.values[i].imag()));
                auto rb = std::pair(round6(b.chi.values[i].real()), round6(b.chi.values[i].imag()));
                if (ra != rb) return ra < rb;
            }
            return false;
        });
        return found;
    }
    throw NumericalDegeneracyError("failed to split the twisted group algebra after reseeding");
}

} // namespace gti

#include "gti/adaptation.hpp"

namespace gti {

std::vector<Elem> canonical_transversal(const GroupPtr& g, const Subgroup& h) {
    return right_cosets(g, h).representatives;
}

std::pair<Cochain, Cochain> absorb_psi(const GroupTheoreticalData& data) {
    GroupPtr G = data.G;
    Subgroup H = data.H;
    Cochain psi = data.psi;
    Cochain eta0 = Cochain::from_function(G, 2, [H, psi](std::span<const Elem> args) {
        if (H.contains(args[0]) && H.contains(args[1])) return psi.eval(args).inverse();
        return UnitScalar::one();
    });
    Cochain omega1 = data.omega * eta0.boundary();
    return {std::move(omega1), std::move(eta0)};
}

namespace {

struct Factorization {
    std::vector<Elem> rep; // x -> coset representative p with x in pH
    std::vector<Elem> rem; // x -> h with x = p h
};

Factorization factorize(const GroupPtr& g, const Subgroup& h, const std::vector<Elem>& transversal) {
    Factorization f;
    f.rep.assign(g->order(), -1);
    f.rem.assign(g->order(), -1);
    for (Elem p : transversal) {
        for (Elem k : h.elements()) {
            Elem x = g->mul(p, k);
            if (f.rep[x] != -1) throw ContractError("transversal representatives overlap");
            f.rep[x] = p;
            f.rem[x] = k;
        }
    }
    for (Elem x = 0; x < g->order(); ++x)
        if (f.rep[x] == -1) throw ContractError("transversal does not cover the group");
    if (f.rep[g->identity()] != g->identity())
        throw ContractError("the identity must represent the coset H");
    return f;
}

} // namespace

Cochain natale_eta(const Cochain& omega, const Subgroup& h, const std::vector<Elem>& transversal) {
    GroupPtr G = omega.group();
    auto fac = std::make_shared<Factorization>(factorize(G, h, transversal));

    // eta1(ph, qh') = omega(p, h, h')
    Cochain eta1 = Cochain::from_function(G, 2, [omega, fac](std::span<const Elem> args) {
        Elem x = args[0], y = args[1];
        return omega(fac->rep[x], fac->rem[x], fac->rem[y]);
    });
    Cochain omega0 = omega * eta1.boundary();

    // eta2(ph, qh') = omega0^-1(ph, q, h') omega0(p, h, q); the inversion is
    // forced: with omega0(x, q, h'a) = omega0(x, qh', a) omega0(x, q, h')
    // from the cocycle identity, d(eta2) contributes omega0^-1(x, y, a) on
    // G x G x H exactly when the first factor is inverted
    Cochain eta2 = Cochain::from_function(G, 2, [omega0, fac](std::span<const Elem> args) {
        Elem x = args[0], y = args[1];
        return omega0(x, fac->rep[y], fac->rem[y]).inverse() * omega0(fac->rep[x], fac->rem[x], fac->rep[y]);
    });
    return eta1 * eta2;
}

AdaptationResult adapt(const GroupTheoreticalData& data, bool check) {
    auto [omega1, eta0] = absorb_psi(data);
    if (check && !is_trivial_on(omega1, data.H))
        throw ValidationError("psi absorption did not trivialize the restriction; d psi != omega on H^3");
    auto transversal = canonical_transversal(data.G, data.H);
    Cochain eta12 = natale_eta(omega1, data.H, transversal);
    Cochain eta = (eta0 * eta12).memoized();

    AdaptationResult res;
    res.omega_adapted = (data.omega * eta.boundary()).memoized();
    res.eta = std::move(eta);
    res.theta = Cochain::trivial(data.G, 1);
    res.transversal = std::move(transversal);
    if (check && !is_adapted(res.omega_adapted, data.H))
        throw ValidationError("adaptation failed to produce an adapted cocycle");
    return res;
}

} // namespace gti

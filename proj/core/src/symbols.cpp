#include "gti/symbols.hpp"

#include <sstream>

namespace gti {

GroupTheoreticalData GroupTheoreticalData::make(GroupPtr g, Subgroup h, Cochain omega, Cochain psi) {
    if (h.parent() != g) throw ContractError("subgroup from a different group");
    if (omega.group() != g || omega.arity() != 3) throw ContractError("omega must be a 3-cochain on G");
    if (psi.group() != g || psi.arity() != 2) throw ContractError("psi must be a 2-cochain evaluated on H");
    GroupTheoreticalData d;
    d.G = std::move(g);
    d.H = std::move(h);
    d.omega = std::move(omega);
    d.psi = std::move(psi);
    return d;
}

GroupTheoreticalData GroupTheoreticalData::plain(GroupPtr g, Subgroup h) {
    Cochain om = Cochain::trivial(g, 3);
    Cochain ps = Cochain::trivial(g, 2);
    return make(std::move(g), std::move(h), std::move(om), std::move(ps));
}

void GroupTheoreticalData::validate() const {
    Cochain dom = omega.boundary();
    int n = G->order();
    for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b)
            for (Elem c = 0; c < n; ++c)
                for (Elem d = 0; d < n; ++d)
                    if (!dom(a, b, c, d).is_one()) {
                        std::ostringstream os;
                        os << "omega is not a 3-cocycle: (d omega)(" << a << "," << b << "," << c << ","
                           << d << ") != 1";
                        throw ValidationError(os.str());
                    }
    Cochain dpsi = psi.boundary();
    for (Elem a : H.elements())
        for (Elem b : H.elements())
            for (Elem c : H.elements())
                if (!(dpsi(a, b, c) == omega(a, b, c))) {
                    std::ostringstream os;
                    os << "d psi != omega on H^3 at (" << a << "," << b << "," << c << ")";
                    throw ValidationError(os.str());
                }
}

UnitScalar coc(const Cochain& omega, Elem g, Elem x, Elem y) {
    const auto& G = omega.group();
    Elem yg = G->conj(y, g);
    Elem xyg = G->conj(G->mul(x, y), g);
    return omega(x, y, g) * omega(x, yg, y).inverse() * omega(xyg, x, y);
}

UnitScalar omega_g(const Cochain& omega, const Subgroup& h, Elem g, Elem x, Elem k) {
    if (!h.contains(k)) throw ContractError("second argument of omega_g must lie in H");
    return omega(x, k, g);
}

UnitScalar pi_m(const Cochain& omega, Elem x, long long m) {
    const auto& G = omega.group();
    UnitScalar acc = UnitScalar::one();
    if (m >= 0) {
        // pi_{r+1}(x) = omega(x, x^r, x) pi_r(x)
        Elem xr = G->identity();
        for (long long r = 0; r < m; ++r) {
            acc *= omega(x, xr, x);
            xr = G->mul(xr, x);
        }
    } else {
        // pi_{r-1}(x) = pi_r(x) omega^-1(x, x^{r-1}, x)
        Elem xi = G->inv(x);
        Elem xr = G->identity();
        for (long long r = 0; r > m; --r) {
            xr = G->mul(xr, xi); // x^{r-1}
            acc *= omega(x, xr, x).inverse();
        }
    }
    return acc;
}

Cochain beta_g(const GroupTheoreticalData& data, Elem g) {
    GroupPtr G = data.G;
    Cochain omega = data.omega, psi = data.psi;
    Elem gi = G->inv(g);
    return Cochain::from_function(G, 2, [G, omega, psi, g, gi](std::span<const Elem> args) {
        Elem s = args[0], t = args[1];
        Elem ti = G->conj(gi, G->inv(t)); // g^-1 |> t^-1
        Elem si = G->conj(gi, G->inv(s)); // g^-1 |> s^-1
        UnitScalar v = psi(s, t);
        v *= psi(ti, si);
        v *= omega(s, G->mul(t, g), ti);
        v *= omega(s, t, g);
        v *= omega(G->mul(G->mul(s, t), g), ti, si).inverse();
        return v;
    });
}

UnitScalar lambda_shift(const Cochain& eta, Elem g, Elem s) {
    const auto& G = eta.group();
    Elem si = G->conj(G->inv(g), G->inv(s));
    return eta(G->mul(s, g), si) * eta(s, g);
}

UnitScalar gamma_shift(const Cochain& theta, Elem g, Elem s) {
    const auto& G = theta.group();
    Elem si = G->conj(G->inv(g), G->inv(s));
    return theta(s) * theta(si);
}

UnitScalar tilde_pi(const Cochain& omega, const Cochain& eta, const Cochain& theta, const Subgroup& h,
                    Elem g, Elem s, long long m) {
    const auto& G = omega.group();
    Elem sm = G->power(s, m);
    Elem smi = G->inv(sm); // s^{-m}
    if (!h.contains(sm)) throw ContractError("power of the summand must lie in H");
    Elem a = G->conj(G->inv(g), smi); // g^-1 |> s^{-m}
    UnitScalar v = pi_m(omega, s, m);
    v *= eta(s, sm);
    v *= eta(sm, s).inverse();
    v *= eta(G->mul(sm, g), a);
    v *= eta(sm, g);
    v *= theta(sm);
    v *= theta(a);
    return v;
}

Cochain omega_g_cochain(const Cochain& omega, Elem g) {
    return Cochain::from_function(omega.group(), 2, [omega, g](std::span<const Elem> args) {
        return omega(args[0], args[1], g);
    });
}

Cochain coc_cochain(const Cochain& omega, Elem g) {
    return Cochain::from_function(omega.group(), 2, [omega, g](std::span<const Elem> args) {
        return coc(omega, g, args[0], args[1]);
    });
}

UnitScalar double_lambda(const Cochain& omega, Elem g, Elem x) {
    const auto& G = omega.group();
    return omega(g, x, G->inv(x)).inverse();
}

UnitScalar index_two_lambda(const Subgroup& n, Elem x) {
    if (2 * n.size() != n.parent()->order()) throw ContractError("subgroup must have index two");
    return n.contains(x) ? UnitScalar::one() : UnitScalar::i();
}

} // namespace gti

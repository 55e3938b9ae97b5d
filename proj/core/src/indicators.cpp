#include "gti/indicators.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <numeric>
#include <sstream>

#include <nlohmann/json.hpp>

namespace gti {

namespace {

void lcm_into(long long* acc, UnitScalar v) {
    if (!acc) return;
    long long d = v.den();
    long long g = std::gcd(*acc, d);
    long long l = *acc / g * d;
    *acc = std::min(l, 1LL << 20);
}

void require_adapted_data(const GroupTheoreticalData& data) {
    if (!is_adapted(data.omega, data.H)) throw ContractError("cocycle is not adapted");
    if (!is_trivial_on(data.psi, data.H)) throw ContractError("psi must be trivial for the adapted formula");
}

/// Common frame of the coset-shaped sums: prefactor 1/|S| over r in gH with
/// r^m in S (or the orbit-weighted equivalent).
template <class Term>
std::complex<double> coset_sum(const SimpleObjectLabel& label, long long m, SumVariant variant,
                               Term term) {
    const auto& G = label.data.G;
    std::complex<double> acc = 0;
    switch (variant) {
    case SumVariant::CosetSum: {
        for (Elem r : coset_elements(G, label.data.H, label.g)) {
            if (!label.S.contains(G->power(r, m))) continue;
            acc += term(r);
        }
        return acc / static_cast<double>(label.S.size());
    }
    case SumVariant::HSum: {
        for (Elem h : label.data.H.elements()) {
            Elem r = G->mul(label.g, h);
            if (!label.S.contains(G->power(r, m))) continue;
            acc += term(r);
        }
        return acc / static_cast<double>(label.S.size());
    }
    case SumVariant::OrbitSum: {
        auto coset = coset_elements(G, label.data.H, label.g);
        for (const OrbitInfo& orbit : adjoint_orbit_representatives(label.S, coset)) {
            Elem r = orbit.representative;
            if (!label.S.contains(G->power(r, m))) continue;
            acc += term(r) / static_cast<double>(orbit.stabilizer_size);
        }
        return acc;
    }
    }
    throw ContractError("unknown sum variant");
}

} // namespace

std::complex<double> indicator_adapted(const SimpleObjectLabel& label, long long m, SumVariant variant,
                                       bool check, long long* den_lcm) {
    if (check) require_adapted_data(label.data);
    const auto& G = label.data.G;
    const Cochain& omega = label.data.omega;
    return coset_sum(label, m, variant, [&](Elem r) {
        UnitScalar pi = pi_m(omega, r, -m);
        lcm_into(den_lcm, pi);
        return pi.value() * label.chi.at(G->power(r, -m));
    });
}

std::complex<double> indicator_general(const SimpleObjectLabel& label, const Cochain& eta,
                                       const Cochain& theta, long long m, SumVariant variant,
                                       bool check, long long* den_lcm) {
    const auto& data = label.data;
    if (check) {
        if (!is_adapted(data.omega * eta.boundary(), data.H))
            throw ContractError("omega * d(eta) is not adapted");
        Cochain dtheta = theta.boundary();
        for (Elem a : data.H.elements())
            for (Elem b : data.H.elements())
                if (!(data.psi(a, b) * eta(a, b) * dtheta(a, b)).is_one())
                    throw ContractError("psi * eta|_{H^2} * d(theta) != 1");
    }
    const auto& G = data.G;
    return coset_sum(label, m, variant, [&](Elem r) {
        UnitScalar pi = tilde_pi(data.omega, eta, theta, data.H, label.g, r, -m);
        lcm_into(den_lcm, pi);
        return pi.value() * label.chi.at(G->power(r, -m));
    });
}

std::complex<double> indicator_trivial_restriction(const SimpleObjectLabel& label, long long m,
                                                   bool check, long long* den_lcm) {
    const auto& data = label.data;
    if (check) {
        if (!is_trivial_on(data.omega, data.H))
            throw ContractError("omega does not restrict trivially to H^3");
        if (!is_trivial_on(data.psi, data.H))
            throw ContractError("psi must be trivial for the trivial-restriction formula");
    }
    const auto& G = data.G;
    Elem g = label.g;
    Elem gi = G->inv(g);
    const Cochain& omega = data.omega;
    return coset_sum(label, m, SumVariant::CosetSum, [&](Elem r) {
        Elem rm = G->power(r, m);
        Elem u = G->inv(rm);       // r^-m
        Elem a = G->conj(gi, u);   // g^-1 |> r^-m
        Elem b = G->conj(gi, rm);  // g^-1 |> r^m
        Elem h = G->mul(gi, r);    // r = g h
        UnitScalar s = pi_m(omega, r, -m) * omega(g, a, b) * omega(g, h, u) * omega(u, g, h) *
                       omega(g, a, h).inverse();
        lcm_into(den_lcm, s);
        return s.value() * label.chi.at(u);
    });
}

InducedModule induce_module(const SimpleObjectLabel& label) {
    const auto& data = label.data;
    require_adapted_data(data);
    if (!label.rep) throw ContractError("induction needs an explicit matrix representation");
    const auto& G = data.G;
    const auto& H = data.H;
    const auto& S = label.S;
    const Cochain& omega = data.omega;
    Elem g = label.g;

    InducedModule w;
    w.label = label;

    // transversal of the cosets tS in H (minimal representatives, identity
    // first); the block of t carries the degree tgH
    std::vector<int> block_of_h(G->order(), -1);
    for (Elem h : H.elements()) {
        Elem mn = h;
        for (Elem s : S.elements()) mn = std::min(mn, G->mul(h, s));
        if (block_of_h[mn] == -1) {
            block_of_h[mn] = static_cast<int>(w.transversal.size());
            w.transversal.push_back(mn);
        }
        block_of_h[h] = block_of_h[mn];
    }

    auto cosets = right_cosets(G, H);
    w.block_of.assign(G->order(), -1);
    for (size_t j = 0; j < w.transversal.size(); ++j) {
        Elem rep = cosets.rep_of[G->mul(w.transversal[j], g)];
        for (Elem x = 0; x < G->order(); ++x)
            if (cosets.rep_of[x] == rep) w.block_of[x] = static_cast<int>(j);
    }

    int nh = H.size(), nb = static_cast<int>(w.transversal.size());
    w.t_index.assign(nh, std::vector<int>(nb));
    w.s_part.assign(nh, std::vector<Elem>(nb));
    w.c.assign(nh, std::vector<UnitScalar>(nb));
    for (int i = 0; i < nh; ++i) {
        Elem h = H.element(i);
        for (int j = 0; j < nb; ++j) {
            Elem t = w.transversal[j];
            Elem ht = G->mul(h, t);
            int j2 = block_of_h[ht];
            Elem t2 = w.transversal[j2];
            Elem s = G->mul(G->inv(t2), ht);
            w.t_index[i][j] = j2;
            w.s_part[i][j] = s;
            // solved from the twisted module law against the basepoint block
            w.c[i][j] = omega(h, t, g) * omega(t2, s, g).inverse();
        }
    }

    // exhaustive postcondition: h.(h'.w) = omega_{tg}(h,h') (hh').w
    for (int i = 0; i < nh; ++i) {
        Elem h = H.element(i);
        for (int i2 = 0; i2 < nh; ++i2) {
            Elem h2 = H.element(i2);
            int i3 = H.local_index(G->mul(h, h2));
            for (int j = 0; j < nb; ++j) {
                int j1 = w.t_index[i2][j];
                Elem s1 = w.s_part[i2][j];
                Elem s2 = w.s_part[i][j1];
                UnitScalar lhs = w.c[i][j1] * w.c[i2][j] * omega(s2, s1, g);
                UnitScalar rhs = omega(h, h2, G->mul(w.transversal[j], g)) * w.c[i3][j];
                if (w.t_index[i][j1] != w.t_index[i3][j] ||
                    G->mul(s2, s1) != w.s_part[i3][j] || !(lhs == rhs))
                    throw ValidationError("induced action violates the twisted module law");
            }
        }
    }
    return w;
}

std::complex<double> indicator_module_sum(const InducedModule& w, long long m, long long* den_lcm) {
    const auto& data = w.label.data;
    const auto& G = data.G;
    const auto& H = data.H;
    std::complex<double> acc = 0;
    for (Elem x = 0; x < G->order(); ++x) {
        Elem xm = G->power(x, m);
        if (!H.contains(xm)) continue;
        int j = w.block_of[x];
        if (j < 0) continue;
        int i = H.local_index(G->inv(xm)); // x^{-m} acts on the block of xH
        if (w.t_index[i][j] != j) continue;
        UnitScalar pi = pi_m(data.omega, x, -m);
        lcm_into(den_lcm, pi * w.c[i][j]);
        acc += pi.value() * w.c[i][j].value() * w.label.chi.at(w.s_part[i][j]);
    }
    return acc / static_cast<double>(H.size());
}

std::complex<double> indicator_double(const GroupPtr& g_group, const Cochain& omega, Elem g,
                                      const ProjectiveCharacter& chi, long long m,
                                      long long* den_lcm) {
    const auto& G = g_group;
    std::complex<double> acc = 0;
    for (Elem x = 0; x < G->order(); ++x) {
        Elem gx = G->mul(g, x);
        Elem xm = G->power(x, m);
        if (G->power(gx, m) != xm || !chi.S.contains(xm)) continue;
        Elem u = G->inv(xm); // x^-m commutes with g, so g^-1 |> x^-m = x^-m
        UnitScalar s = pi_m(omega, gx, -m) * pi_m(omega, x, -m).inverse() * omega(g, x, u) *
                       omega(u, g, x) * omega(g, u, x).inverse();
        lcm_into(den_lcm, s);
        acc += s.value() * chi.at(u);
    }
    return acc / static_cast<double>(chi.S.size());
}

TwistPrediction cyclic_twist_predict(const GroupHom& p, long long t, Elem g, long long m) {
    if (!p.target->is_cyclic_canonical()) throw ContractError("homomorphism target must be Z/N");
    long long n = p.target->order();
    long long k = p(g);
    long long gk = std::gcd(k, n);
    long long e = n / gk; // ord(p(g))
    TwistPrediction res;
    if (m % e != 0) {
        res.vanishes = true;
        return res;
    }
    long long s = m / e;
    res.multiplier = UnitScalar::from_exponent(-s * t * (k * k / gk), n);
    return res;
}

IndexTwoReport index_two_twist_check(const GroupPtr& g_group, const Cochain& omega, const Subgroup& n,
                                     long long m_max, const ProjRepOptions& opts) {
    const auto& G = g_group;
    if (2 * n.size() != G->order()) throw ContractError("subgroup must have index two");
    std::vector<Elem> images(G->order());
    for (Elem x = 0; x < G->order(); ++x) images[x] = n.contains(x) ? 0 : 1;
    GroupHom q(G, FiniteGroup::cyclic(2), std::move(images));
    Cochain omega2 = omega * Cochain::inflate(Cochain::cyclic_kappa(q.target), q);

    IndexTwoReport report;
    for (Elem g : conjugacy_classes(G).representatives) {
        Subgroup c = centralizer(G, g);
        Cochain beta = coc_cochain(omega, g).memoized();
        Cochain beta2 = coc_cochain(omega2, g).memoized();
        bool outside = !n.contains(g);
        auto irrs = irreducible_projective_characters(c, beta, opts);
        for (size_t i = 0; i < irrs.size(); ++i) {
            ProjectiveCharacter chi2 =
                outside ? twist_character(
                              irrs[i].chi,
                              [&](Elem x) { return index_two_lambda(n, x).value(); }, beta2)
                        : twist_character(irrs[i].chi, [](Elem) { return std::complex<double>(1); },
                                          beta2);
            for (long long m = 1; m <= m_max; ++m) {
                IndexTwoReport::Cell cell;
                cell.g = g;
                cell.chi_index = static_cast<int>(i);
                cell.m = m;
                cell.base = indicator_double(G, omega, g, irrs[i].chi, m);
                cell.twisted = indicator_double(G, omega2, g, chi2, m);
                cell.flip_expected = outside && m % 4 == 2;
                std::complex<double> expect = cell.flip_expected ? -cell.base : cell.base;
                cell.ok = std::abs(cell.twisted - expect) < 1e-9;
                report.all_ok = report.all_ok && cell.ok;
                report.cells.push_back(cell);
            }
        }
    }
    return report;
}

uint64_t character_hash(const ProjectiveCharacter& chi) {
    uint64_t h = canonical_hash(chi.S, chi.beta);
    auto mix = [&h](uint64_t v) { hash_mix(h, v); };
    for (auto v : chi.values) {
        mix(static_cast<uint64_t>(std::llround(v.real() * 1e6)));
        mix(static_cast<uint64_t>(std::llround(v.imag() * 1e6)));
    }
    return h;
}

std::vector<SimpleObjectLabel> enumerate_simples(const GroupTheoreticalData& data,
                                                 bool general_convention, const ProjRepOptions& opts,
                                                 bool keep_reps) {
    std::vector<SimpleObjectLabel> out;
    for (Elem g : double_cosets(data.G, data.H).representatives) {
        Subgroup s = stabilizer_of_coset(data.G, data.H, g);
        Cochain beta = general_convention ? beta_g(data, g).memoized()
                                          : omega_g_cochain(data.omega, g).memoized();
        for (auto& irr : irreducible_projective_characters(s, beta, opts)) {
            SimpleObjectLabel label;
            label.data = data;
            label.g = g;
            label.S = s;
            label.cocycle = beta;
            label.chi = std::move(irr.chi);
            if (keep_reps) label.rep = std::move(irr.rep);
            out.push_back(std::move(label));
        }
    }
    return out;
}

std::optional<std::string> recognize_exact(std::complex<double> v, long long conductor, double tol) {
    double r = std::abs(v);
    if (r < 1e-9) return std::string("0");
    long long l = std::clamp<long long>(conductor, 1, 1 << 20);
    double ang = std::arg(v) / (2.0 * std::numbers::pi);
    long long k = std::llround(ang * static_cast<double>(l));
    k %= l;
    if (k < 0) k += l;
    for (long long q = 1; q <= 64; ++q) {
        long long p = std::llround(r * static_cast<double>(q));
        if (p == 0) continue;
        double mag = static_cast<double>(p) / static_cast<double>(q);
        UnitScalar phase = UnitScalar::from_exponent(k, l);
        if (std::abs(v - mag * phase.value()) > tol) continue;
        bool neg = false;
        if (phase.den() == 2) { // phase -1 folded into the sign
            neg = true;
            phase = UnitScalar::one();
        }
        std::string mag_str = q == 1 ? std::to_string(p) : std::to_string(p) + "/" + std::to_string(q);
        std::string out = neg ? "-" : "";
        if (phase.is_one()) {
            out += mag_str;
        } else if (phase.den() == 4) {
            if (p != 1 || q != 1) out += mag_str + "*";
            out += phase.num() == 1 ? "i" : "-i";
        } else {
            if (p != 1 || q != 1) out += mag_str + "*";
            out += "e(" + phase.str() + ")";
        }
        return out;
    }
    return std::nullopt;
}

std::string IndicatorRow::label() const {
    std::ostringstream os;
    os << "g=" << g << ", deg=" << degree << ", chi=" << std::hex << chi_hash;
    return os.str();
}

namespace {

IndicatorRow make_row(const SimpleObjectLabel& label, bool keep_rep) {
    IndicatorRow row;
    row.g = label.g;
    row.stabilizer_size = label.S.size();
    row.degree = label.chi.degree();
    row.chi_hash = character_hash(label.chi);
    row.chi = label.chi;
    if (keep_rep) row.rep = label.rep;
    return row;
}

void finish_table(IndicatorTable& table, long long den_lcm, int group_order) {
    long long l = std::lcm<long long>(std::lcm<long long>(4, group_order), den_lcm);
    table.conductor = std::min(l, 1LL << 20);
    for (auto& row : table.rows)
        for (auto& cell : row.cells) cell.exact = recognize_exact(cell.value, table.conductor);
}

} // namespace

IndicatorTable full_indicator_table(const GroupTheoreticalData& data, const TableOptions& opts) {
    Pipeline pipeline = opts.pipeline;
    if (pipeline == Pipeline::Double)
        throw ContractError("the double pipeline is served by double_indicator_table");
    if (pipeline == Pipeline::Auto)
        pipeline = is_adapted(data.omega, data.H) && is_trivial_on(data.psi, data.H)
                       ? Pipeline::Adapted
                       : Pipeline::General;

    IndicatorTable table;
    table.m_max = opts.m_max;
    long long den_lcm = 1;

    if (pipeline == Pipeline::Adapted) {
        require_adapted_data(data);
        for (const auto& label : enumerate_simples(data, false, opts.proj, opts.keep_reps)) {
            IndicatorRow row = make_row(label, opts.keep_reps);
            for (long long m = 1; m <= opts.m_max; ++m)
                row.cells.push_back({indicator_adapted(label, m, SumVariant::CosetSum, false, &den_lcm),
                                     std::nullopt});
            table.rows.push_back(std::move(row));
        }
    } else if (pipeline == Pipeline::TrivialRestriction) {
        for (const auto& label : enumerate_simples(data, true, opts.proj, opts.keep_reps)) {
            IndicatorRow row = make_row(label, opts.keep_reps);
            for (long long m = 1; m <= opts.m_max; ++m)
                row.cells.push_back(
                    {indicator_trivial_restriction(label, m, m == 1, &den_lcm), std::nullopt});
            table.rows.push_back(std::move(row));
        }
    } else {
        AdaptationResult ad = adapt(data, true);
        for (const auto& label : enumerate_simples(data, true, opts.proj, opts.keep_reps)) {
            IndicatorRow row = make_row(label, opts.keep_reps);
            for (long long m = 1; m <= opts.m_max; ++m)
                row.cells.push_back({indicator_general(label, ad.eta, ad.theta, m,
                                                       SumVariant::CosetSum, false, &den_lcm),
                                     std::nullopt});
            table.rows.push_back(std::move(row));
        }
    }
    finish_table(table, den_lcm, data.G->order());
    return table;
}

IndicatorTable double_indicator_table(const GroupPtr& g_group, const Cochain& omega,
                                      const TableOptions& opts) {
    IndicatorTable table;
    table.m_max = opts.m_max;
    long long den_lcm = 1;
    for (Elem g : conjugacy_classes(g_group).representatives) {
        Subgroup c = centralizer(g_group, g);
        Cochain beta = coc_cochain(omega, g).memoized();
        for (auto& irr : irreducible_projective_characters(c, beta, opts.proj)) {
            IndicatorRow row;
            row.g = g;
            row.stabilizer_size = c.size();
            row.degree = irr.chi.degree();
            row.chi_hash = character_hash(irr.chi);
            row.chi = irr.chi;
            if (opts.keep_reps) row.rep = std::move(irr.rep);
            for (long long m = 1; m <= opts.m_max; ++m)
                row.cells.push_back({indicator_double(g_group, omega, g, irr.chi, m, &den_lcm),
                                     std::nullopt});
            table.rows.push_back(std::move(row));
        }
    }
    finish_table(table, den_lcm, g_group->order());
    return table;
}

namespace {

double clamp_small(double v) { return std::abs(v) < 1e-12 ? 0.0 : v; }

std::string fmt_g(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", clamp_small(v));
    return buf;
}

} // namespace

std::string table_to_json(const IndicatorTable& table) {
    nlohmann::ordered_json doc;
    doc["m_max"] = table.m_max;
    doc["conductor"] = table.conductor;
    doc["rows"] = nlohmann::ordered_json::array();
    for (const auto& row : table.rows) {
        nlohmann::ordered_json r;
        r["label"] = row.label();
        r["g"] = row.g;
        r["stabilizer_size"] = row.stabilizer_size;
        r["degree"] = row.degree;
        nlohmann::ordered_json chi = nlohmann::ordered_json::array();
        for (auto v : row.chi.values)
            chi.push_back({fmt_g(v.real()), fmt_g(v.imag())});
        r["chi"] = std::move(chi);
        nlohmann::ordered_json cells = nlohmann::ordered_json::array();
        for (const auto& cell : row.cells) {
            nlohmann::ordered_json c;
            c["value"] = {fmt_g(cell.value.real()), fmt_g(cell.value.imag())};
            if (cell.exact) c["exact"] = *cell.exact;
            cells.push_back(std::move(c));
        }
        r["indicators"] = std::move(cells);
        doc["rows"].push_back(std::move(r));
    }
    return doc.dump(2) + "\n";
}

std::string table_to_csv(const IndicatorTable& table) {
    std::ostringstream os;
    os << "label";
    for (long long m = 1; m <= table.m_max; ++m) os << ",m=" << m;
    os << "\n";
    for (const auto& row : table.rows) {
        os << '"' << row.label() << '"';
        for (const auto& cell : row.cells) {
            if (cell.exact)
                os << ',' << *cell.exact;
            else
                os << ',' << fmt_g(cell.value.real()) << "+" << fmt_g(cell.value.imag()) << "i";
        }
        os << "\n";
    }
    return os.str();
}

} // namespace gti

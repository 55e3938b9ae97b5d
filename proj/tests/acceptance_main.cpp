#include <complex>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "gti/indicators.hpp"
#include "gti/problem.hpp"

using namespace gti;
using namespace gti::testing;

namespace {

int failures = 0;

void criterion(int n, const std::string& desc, const std::function<bool()>& body) {
    bool ok = false;
    std::string note;
    try {
        ok = body();
    } catch (const std::exception& e) {
        note = e.what();
    }
    std::printf("criterion %2d: %s  %s\n", n, ok ? "PASS" : "FAIL", desc.c_str());
    if (!ok) {
        if (!note.empty()) std::printf("              exception: %s\n", note.c_str());
        ++failures;
    }
    std::fflush(stdout);
}

constexpr long long kMMax = 12;
constexpr double kTol = 1e-9;

bool is_adapted_item(const GroupTheoreticalData& data) {
    return is_adapted(data.omega, data.H) && is_trivial_on(data.psi, data.H);
}

// ---------------------------------------------------------------------------

bool variant_agreement(const std::vector<CorpusItem>& corpus) {
    for (const auto& item : corpus) {
        if (is_adapted_item(item.data)) {
            for (const auto& label : enumerate_simples(item.data, false)) {
                for (long long m = 1; m <= kMMax; ++m) {
                    auto a = indicator_adapted(label, m, SumVariant::CosetSum, false);
                    auto b = indicator_adapted(label, m, SumVariant::HSum, false);
                    auto c = indicator_adapted(label, m, SumVariant::OrbitSum, false);
                    if (std::abs(a - b) > kTol || std::abs(a - c) > kTol) return false;
                }
            }
        } else {
            AdaptationResult ad = adapt(item.data);
            for (const auto& label : enumerate_simples(item.data, true)) {
                for (long long m = 1; m <= kMMax; ++m) {
                    auto a = indicator_general(label, ad.eta, ad.theta, m, SumVariant::CosetSum, false);
                    auto b = indicator_general(label, ad.eta, ad.theta, m, SumVariant::HSum, false);
                    auto c = indicator_general(label, ad.eta, ad.theta, m, SumVariant::OrbitSum, false);
                    if (std::abs(a - b) > kTol || std::abs(a - c) > kTol) return false;
                }
            }
        }
    }
    return true;
}

bool module_oracle(const std::vector<CorpusItem>& corpus) {
    bool seen = false;
    for (const auto& item : corpus) {
        if (!is_adapted_item(item.data)) continue;
        seen = true;
        for (const auto& label : enumerate_simples(item.data, false, {}, true)) {
            InducedModule w = induce_module(label);
            for (long long m = 1; m <= kMMax; ++m) {
                auto lhs = indicator_module_sum(w, m);
                auto rhs = indicator_adapted(label, m, SumVariant::CosetSum, false);
                if (std::abs(lhs - rhs) > kTol) return false;
            }
        }
    }
    return seen;
}

bool gauge_invariance(const std::vector<CorpusItem>& corpus) {
    for (const auto& item : corpus) {
        const auto& data = item.data;
        AdaptationResult ad = adapt(data);
        auto labels = enumerate_simples(data, true);
        for (uint64_t shift = 1; shift <= 5; ++shift) {
            Cochain eta = random_cochain(data.G, 2, 8, 1000 * shift + data.G->order()).memoized();
            Cochain theta = random_theta(data.G, data.H, 8, 2000 * shift + data.H.size());
            GroupTheoreticalData shifted = GroupTheoreticalData::make(
                data.G, data.H, (data.omega * eta.boundary()).memoized(),
                (data.psi * eta * theta.boundary()).memoized());
            AdaptationResult ad2 = adapt(shifted);
            for (const auto& label : labels) {
                Cochain beta2 = beta_g(shifted, label.g).memoized();
                auto mu = [&](Elem s) {
                    return lambda_shift(eta, label.g, s).value() *
                           gamma_shift(theta, label.g, s).value();
                };
                SimpleObjectLabel label2{shifted, label.g, label.S, beta2,
                                         twist_character(label.chi, mu, beta2), std::nullopt};
                for (long long m = 1; m <= kMMax; ++m) {
                    auto base = indicator_general(label, ad.eta, ad.theta, m, SumVariant::CosetSum, false);
                    auto moved =
                        indicator_general(label2, ad2.eta, ad2.theta, m, SumVariant::CosetSum, false);
                    if (std::abs(base - moved) > kTol) return false;
                }
            }
        }
    }
    return true;
}

bool classical_reduction() {
    for (GroupPtr g : {make_s3(), make_d4(), make_q8()}) {
        auto data = GroupTheoreticalData::plain(g, Subgroup::full(g));
        IndicatorTable table = full_indicator_table(data);
        for (const auto& row : table.rows) {
            for (long long m = 1; m <= table.m_max; ++m) {
                // the classical sum (1/|G|) sum_x chi(x^m)
                std::complex<double> oracle = 0;
                for (Elem x = 0; x < g->order(); ++x) oracle += row.chi.at(g->power(x, m));
                oracle /= static_cast<double>(g->order());
                const auto& cell = row.cells[m - 1];
                if (!cell.exact) return false;
                auto expected = recognize_exact(oracle, table.conductor);
                if (!expected || *expected != *cell.exact) return false;
            }
        }
    }
    // pinned values, restated explicitly
    GroupPtr q8 = make_q8();
    IndicatorTable tq = full_indicator_table(GroupTheoreticalData::plain(q8, Subgroup::full(q8)));
    bool q8_ok = false;
    for (const auto& row : tq.rows)
        if (row.degree == 2) q8_ok = row.cells[1].exact.value_or("?") == "-1";
    GroupPtr s3 = make_s3();
    IndicatorTable ts = full_indicator_table(GroupTheoreticalData::plain(s3, Subgroup::full(s3)));
    bool s3_ok = false;
    for (const auto& row : ts.rows)
        if (row.degree == 2) s3_ok = row.cells[1].exact.value_or("?") == "1";
    return q8_ok && s3_ok;
}

std::multiset<std::vector<long long>> rounded_rows(const IndicatorTable& table) {
    std::multiset<std::vector<long long>> out;
    for (const auto& row : table.rows) {
        std::vector<long long> key{row.degree, row.stabilizer_size};
        for (const auto& cell : row.cells) {
            key.push_back(std::llround(cell.value.real() * 1e6));
            key.push_back(std::llround(cell.value.imag() * 1e6));
        }
        out.insert(std::move(key));
    }
    return out;
}

bool double_sanity() {
    GroupPtr z2 = FiniteGroup::cyclic(2);
    Cochain kappa = Cochain::cyclic_kappa(z2);
    IndicatorTable conj = double_indicator_table(z2, kappa);

    DirectProduct prod = direct_product(z2, z2);
    auto doubled = GroupTheoreticalData::make(prod.group, diagonal_subgroup(prod),
                                              Cochain::double_cocycle(kappa, prod).memoized(),
                                              Cochain::trivial(prod.group, 2));
    TableOptions opts;
    opts.pipeline = Pipeline::General;
    IndicatorTable general = full_indicator_table(doubled, opts);
    if (rounded_rows(conj) != rounded_rows(general)) return false;

    int semions = 0;
    for (const auto& row : conj.rows)
        if (row.g != 0 && row.cells[1].exact.value_or("?") == "-1") ++semions;
    return semions == 2;
}

bool cyclic_twist_criterion() {
    for (int n : {4, 8}) {
        GroupPtr zn = FiniteGroup::cyclic(n);
        std::vector<Elem> id(n);
        for (Elem x = 0; x < n; ++x) id[x] = x;
        GroupHom p(zn, zn, std::move(id));
        auto base_data = GroupTheoreticalData::plain(zn, Subgroup::trivial(zn));
        IndicatorTable base = full_indicator_table(base_data);
        for (long long t = 1; t <= 3; ++t) {
            auto shifted_data =
                GroupTheoreticalData::make(zn, Subgroup::trivial(zn), Cochain::cyclic_kappa(zn, t),
                                           Cochain::trivial(zn, 2));
            IndicatorTable shifted = full_indicator_table(shifted_data);
            for (const auto& row : base.rows) {
                const IndicatorRow* srow = nullptr;
                for (const auto& cand : shifted.rows)
                    if (cand.g == row.g) srow = &cand;
                if (!srow) return false;
                for (long long m = 1; m <= base.m_max; ++m) {
                    TwistPrediction pred = cyclic_twist_predict(p, t, row.g, m);
                    auto b = row.cells[m - 1].value;
                    auto s = srow->cells[m - 1].value;
                    if (pred.vanishes) {
                        if (std::abs(b) > kTol || std::abs(s) > kTol) return false;
                        continue;
                    }
                    std::complex<double> expect = pred.multiplier.value() * b;
                    if (std::abs(s - expect) > kTol) return false;
                    auto expect_exact = recognize_exact(expect, shifted.conductor);
                    if (!expect_exact || !srow->cells[m - 1].exact ||
                        *expect_exact != *srow->cells[m - 1].exact)
                        return false;
                }
            }
        }
    }
    return true;
}

struct SweepEntry {
    GroupPtr group;
    Subgroup n;
    std::vector<Cochain> omegas;
};

std::vector<SweepEntry> double_sweep() {
    GroupPtr d4 = make_d4(), q8 = make_q8();
    Subgroup rot = subgroup_closure(d4, {element_of_order(d4, 4)});
    Subgroup qi = subgroup_closure(q8, {element_of_order(q8, 4)});

    GroupHom d4_mod_r2 = quotient_hom(d4, subgroup_closure(d4, {d4->power(element_of_order(d4, 4), 2)}));
    GroupHom q8_mod_z = quotient_hom(q8, subgroup_closure(q8, {element_of_order(q8, 2)}));

    std::vector<SweepEntry> sweep(2);
    sweep[0].group = d4;
    sweep[0].n = rot;
    sweep[0].omegas = {Cochain::trivial(d4, 3), inflate_cyclic(quotient_to_cyclic(d4, rot)),
                       Cochain::inflate(klein_trilinear(d4_mod_r2.target), d4_mod_r2).memoized()};
    sweep[1].group = q8;
    sweep[1].n = qi;
    sweep[1].omegas = {Cochain::trivial(q8, 3), inflate_cyclic(quotient_to_cyclic(q8, qi)),
                       Cochain::inflate(klein_trilinear(q8_mod_z.target), q8_mod_z).memoized()};
    return sweep;
}

bool index_two_criterion(const std::vector<SweepEntry>& sweep) {
    for (const auto& entry : sweep) {
        for (const auto& omega : entry.omegas) {
            if (!is_cocycle(omega)) return false;
            IndexTwoReport report = index_two_twist_check(entry.group, omega, entry.n, 8);
            if (!report.all_ok) return false;
            bool nonvacuous = false;
            for (const auto& cell : report.cells)
                nonvacuous = nonvacuous || (cell.flip_expected && std::abs(cell.base) > 1e-6);
            if (!nonvacuous) return false;
        }
    }
    return true;
}

bool reality_and_conjugation(const std::vector<SweepEntry>& sweep) {
    std::vector<std::pair<GroupPtr, Cochain>> doubles;
    for (int n : {2, 4}) {
        GroupPtr zn = FiniteGroup::cyclic(n);
        doubles.emplace_back(zn, Cochain::cyclic_kappa(zn));
    }
    for (const auto& entry : sweep)
        for (const auto& omega : entry.omegas) doubles.emplace_back(entry.group, omega);

    for (const auto& [g, omega] : doubles) {
        IndicatorTable table = double_indicator_table(g, omega);
        for (const auto& row : table.rows)
            for (const auto& cell : row.cells)
                if (std::abs(cell.value.imag()) > kTol) return false;
        // nu_{-m} = conj(nu_m) on sampled cells
        for (Elem cg : conjugacy_classes(g).representatives) {
            Subgroup c = centralizer(g, cg);
            Cochain beta = coc_cochain(omega, cg).memoized();
            for (const auto& irr : irreducible_projective_characters(c, beta)) {
                for (long long m = 1; m <= 6; ++m) {
                    auto plus = indicator_double(g, omega, cg, irr.chi, m);
                    auto minus = indicator_double(g, omega, cg, irr.chi, -m);
                    if (std::abs(minus - std::conj(plus)) > kTol) return false;
                }
            }
        }
    }
    return true;
}

bool character_suite(const std::vector<CorpusItem>& corpus) {
    std::set<uint64_t> seen;
    auto check_algebra = [&](const Subgroup& s, const Cochain& beta) {
        if (!seen.insert(canonical_hash(s, beta)).second) return true;
        auto irrs = irreducible_projective_characters(s, beta);
        int total = 0;
        for (const auto& irr : irrs) total += irr.chi.degree() * irr.chi.degree();
        if (total != s.size()) return false;
        for (size_t i = 0; i < irrs.size(); ++i)
            for (size_t j = 0; j < irrs.size(); ++j) {
                auto ip = character_inner_product(irrs[i].chi, irrs[j].chi);
                if (std::abs(ip - std::complex<double>(i == j ? 1.0 : 0.0)) > 1e-8) return false;
            }
        return true;
    };

    bool twisted_klein = false;
    for (const auto& item : corpus)
        for (const auto& label : enumerate_simples(item.data, true)) {
            if (!check_algebra(label.S, label.cocycle)) return false;
            // the corpus must exhibit a nontrivially twisted Klein algebra:
            // a four-group of exponent two with a single degree-2 irreducible
            if (label.S.size() == 4 &&
                item.data.G->element_order(label.S.element(1)) == 2 &&
                item.data.G->element_order(label.S.element(2)) == 2 &&
                label.chi.degree() == 2)
                twisted_klein = true;
        }
    return twisted_klein;
}

std::string serialize_corpus(const std::vector<CorpusItem>& corpus) {
    std::string out;
    TableOptions opts;
    opts.proj.seed = 12345;
    for (const auto& item : corpus) {
        out += item.name + "\n";
        out += table_to_json(full_indicator_table(item.data, opts));
    }
    return out;
}

bool determinism(const std::vector<CorpusItem>& corpus) {
    std::string first = serialize_corpus(corpus);
    std::string second = serialize_corpus(corpus);
    return !first.empty() && first == second;
}

} // namespace

int main() {
    std::vector<CorpusItem> corpus = acceptance_corpus();
    std::vector<SweepEntry> sweep = double_sweep();

    criterion(1, "formula-variant agreement across the corpus, m = 1..12",
              [&] { return variant_agreement(corpus); });
    criterion(2, "induced-module sums match the coset formula on adapted data",
              [&] { return module_oracle(corpus); });
    criterion(3, "gauge invariance under five random (eta, theta) shifts",
              [&] { return gauge_invariance(corpus); });
    criterion(4, "classical reduction to (1/|G|) sum chi(x^m) for S3, D4, Q8",
              [] { return classical_reduction(); });
    criterion(5, "twisted double of Z/2: semions agree across both pictures",
              [] { return double_sanity(); });
    criterion(6, "cyclic twist predictions for Z/4 and Z/8, t = 1..3",
              [] { return cyclic_twist_criterion(); });
    criterion(7, "index-two sign flips across the D4/Q8 double sweep, m = 1..8",
              [&] { return index_two_criterion(sweep); });
    criterion(8, "double indicators real; nu_{-m} = conj(nu_m) on samples",
              [&] { return reality_and_conjugation(sweep); });
    criterion(9, "projective-character completeness and orthogonality",
              [&] { return character_suite(corpus); });
    criterion(10, "byte-identical serialized tables across repeated runs",
               [&] { return determinism(corpus); });

    if (failures) std::printf("%d criteria failed\n", failures);
    return failures ? 1 : 0;
}

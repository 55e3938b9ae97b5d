#include "gti/problem.hpp"

#include <cstdio>
#include <sstream>

namespace gti {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

[[noreturn]] void bad_spec(const std::string& msg) { throw SpecParseError(msg); }

std::string get_type(const json& j) {
    if (!j.is_object() || !j.contains("type") || !j["type"].is_string())
        bad_spec("expected an object with a \"type\" field");
    return j["type"].get<std::string>();
}

} // namespace

GroupPtr parse_group(const json& j, std::optional<DirectProduct>* product) {
    std::string type = get_type(j);
    if (type == "cyclic") return FiniteGroup::cyclic(j.at("n").get<int>());
    // (equal product factors are collapsed below so that "diagonal" and the
    // double literal can rely on pointer identity)
    if (type == "permutation") {
        auto gens = j.at("generators").get<std::vector<std::vector<int>>>();
        return group_from_permutations(j.at("degree").get<int>(), gens);
    }
    if (type == "table") return FiniteGroup::from_mul_table(j.at("mul").get<std::vector<std::vector<Elem>>>());
    if (type == "product") {
        GroupPtr a = parse_group(j.at("left"));
        GroupPtr b = parse_group(j.at("right"));
        if (a != b && a->order() == b->order()) {
            bool same = true;
            for (Elem x = 0; same && x < a->order(); ++x)
                for (Elem y = 0; same && y < a->order(); ++y)
                    same = a->mul(x, y) == b->mul(x, y);
            if (same) b = a;
        }
        DirectProduct prod = direct_product(std::move(a), std::move(b));
        GroupPtr g = prod.group;
        if (product) *product = std::move(prod);
        return g;
    }
    bad_spec("unknown group type \"" + type + "\"");
}

Cochain parse_cochain(const json& j, const GroupPtr& g, int arity,
                      const std::optional<DirectProduct>& product) {
    std::string type = get_type(j);
    if (type == "trivial") return Cochain::trivial(g, arity);
    if (type == "cyclic") {
        if (arity != 3) bad_spec("the cyclic cocycle literal has arity 3");
        if (!g->is_cyclic_canonical() || g->order() != j.value("n", g->order()))
            bad_spec("cyclic cocycle literal on a non-matching group");
        return Cochain::cyclic_kappa(g, j.value("t", 1LL));
    }
    if (type == "inflate") {
        const json& hom = j.at("hom");
        const json& inner = j.at("inner");
        GroupPtr target;
        if (hom.contains("target"))
            target = parse_group(hom["target"]);
        else if (inner.is_object() && inner.contains("n"))
            target = FiniteGroup::cyclic(inner["n"].get<int>());
        else
            bad_spec("inflation needs a \"target\" group or a cyclic inner literal");
        GroupHom p(g, target, hom.at("images").get<std::vector<Elem>>());
        return Cochain::inflate(parse_cochain(inner, target, arity), std::move(p));
    }
    if (type == "double") {
        if (!product || product->left != product->right)
            bad_spec("the double literal needs a product group with equal factors");
        return Cochain::double_cocycle(parse_cochain(j.at("inner"), product->left, 3), *product);
    }
    if (type == "table") {
        if (j.value("arity", arity) != arity) bad_spec("table literal arity mismatch");
        Cochain::Table table;
        for (const auto& [key, val] : j.at("exponents").items()) {
            std::vector<Elem> args;
            std::istringstream is(key);
            std::string part;
            while (std::getline(is, part, ',')) args.push_back(std::stoi(part));
            if (static_cast<int>(args.size()) != arity) bad_spec("table key arity mismatch: " + key);
            auto frac = val.get<std::vector<long long>>();
            if (frac.size() != 2) bad_spec("exponent values are [numerator, denominator] pairs");
            table.emplace(Cochain::pack_key(args), UnitScalar::from_exponent(frac[0], frac[1]));
        }
        return Cochain::from_table(g, arity, std::move(table));
    }
    if (type == "product") {
        Cochain acc = Cochain::trivial(g, arity);
        for (const json& f : j.at("factors")) acc = acc * parse_cochain(f, g, arity, product);
        return acc;
    }
    if (type == "coboundary") return parse_cochain(j.at("inner"), g, arity - 1, product).boundary();
    if (type == "power")
        return parse_cochain(j.at("inner"), g, arity, product).pow(j.at("k").get<long long>());
    if (type == "inverse") return parse_cochain(j.at("inner"), g, arity, product).inverse();
    bad_spec("unknown cochain literal type \"" + type + "\"");
}

namespace {

Subgroup parse_subgroup(const json& j, const GroupPtr& g, const std::optional<DirectProduct>& product) {
    if (j.is_string()) {
        std::string s = j.get<std::string>();
        if (s == "full") return Subgroup::full(g);
        if (s == "trivial") return Subgroup::trivial(g);
        if (s == "diagonal") {
            if (!product || product->left != product->right)
                bad_spec("\"diagonal\" needs a product group with equal factors");
            return diagonal_subgroup(*product);
        }
        bad_spec("unknown subgroup keyword \"" + s + "\"");
    }
    return subgroup_closure(g, j.at("generators").get<std::vector<Elem>>());
}

Pipeline parse_pipeline(const std::string& s) {
    if (s == "auto") return Pipeline::Auto;
    if (s == "adapted") return Pipeline::Adapted;
    if (s == "general") return Pipeline::General;
    if (s == "trivial_restriction" || s == "trivialRestriction") return Pipeline::TrivialRestriction;
    if (s == "double") return Pipeline::Double;
    bad_spec("unknown pipeline \"" + s + "\"");
}

} // namespace

ProblemSpec parse_problem(const json& j) {
    try {
        ProblemSpec spec;
        spec.raw = j;
        GroupPtr g = parse_group(j.at("group"), &spec.product);
        Subgroup h = j.contains("subgroup") ? parse_subgroup(j["subgroup"], g, spec.product)
                                            : Subgroup::full(g);
        Cochain omega = j.contains("omega") ? parse_cochain(j["omega"], g, 3, spec.product)
                                            : Cochain::trivial(g, 3);
        Cochain psi = j.contains("psi") ? parse_cochain(j["psi"], g, 2, spec.product)
                                        : Cochain::trivial(g, 2);
        spec.data = GroupTheoreticalData::make(std::move(g), std::move(h), omega.memoized(),
                                               psi.memoized());
        if (j.contains("options")) {
            const json& o = j["options"];
            spec.options.m_max = o.value("m_max", spec.options.m_max);
            if (o.contains("pipeline")) spec.options.pipeline = parse_pipeline(o["pipeline"]);
            if (o.contains("seed")) spec.options.proj.seed = o["seed"].get<uint64_t>();
            spec.options.proj.eigen_gap = o.value("eigen_gap", spec.options.proj.eigen_gap);
        }
        return spec;
    } catch (const json::exception& e) {
        bad_spec(std::string("malformed problem document: ") + e.what());
    }
}

ProblemSpec parse_problem_text(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) bad_spec("invalid JSON");
    return parse_problem(j);
}

std::string cmd_validate(const ProblemSpec& spec) {
    spec.data.validate(); // throws with the first failing tuple
    std::ostringstream os;
    os << "group order: " << spec.data.G->order() << "\n";
    os << "subgroup order: " << spec.data.H.size() << "\n";
    os << "omega: 3-cocycle ok\n";
    os << "psi: d(psi) = omega on H^3 ok\n";
    os << "normalized: ok\n";
    os << "adapted: " << (is_adapted(spec.data.omega, spec.data.H) ? "yes" : "no") << "\n";
    return os.str();
}

namespace {

std::string fmt12(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", std::abs(v) < 1e-12 ? 0.0 : v);
    return buf;
}

ordered_json complex_pair(std::complex<double> v) {
    return ordered_json::array({fmt12(v.real()), fmt12(v.imag())});
}

std::string hex64(uint64_t v) {
    std::ostringstream os;
    os << std::hex << v;
    return os.str();
}

} // namespace

std::string cmd_simples(const ProblemSpec& spec) {
    ordered_json doc;
    doc["simples"] = ordered_json::array();
    for (const auto& label : enumerate_simples(spec.data, true, spec.options.proj)) {
        ordered_json s;
        s["g"] = label.g;
        s["stabilizer_size"] = label.S.size();
        s["degree"] = label.chi.degree();
        s["chi"] = hex64(character_hash(label.chi));
        ordered_json values = ordered_json::array();
        for (auto v : label.chi.values) values.push_back(complex_pair(v));
        s["values"] = std::move(values);
        doc["simples"].push_back(std::move(s));
    }
    return doc.dump(2) + "\n";
}

IndicatorTable cmd_indicators(const ProblemSpec& spec) {
    if (spec.options.pipeline == Pipeline::Double) return cmd_double(spec);
    return full_indicator_table(spec.data, spec.options);
}

IndicatorTable cmd_double(const ProblemSpec& spec) {
    return double_indicator_table(spec.data.G, spec.data.omega, spec.options);
}

namespace {

ordered_json cochain_table_literal(const Cochain& a, int arity) {
    const auto& g = a.group();
    ordered_json exps = ordered_json::object();
    std::vector<Elem> args(arity, 0);
    std::function<void(int)> rec = [&](int pos) {
        if (pos == arity) {
            UnitScalar v = a.eval(args);
            if (v.is_one()) return;
            std::string key;
            for (int i = 0; i < arity; ++i) key += (i ? "," : "") + std::to_string(args[i]);
            exps[key] = {v.num(), v.den()};
            return;
        }
        for (Elem x = 0; x < g->order(); ++x) {
            args[pos] = x;
            rec(pos + 1);
        }
    };
    double count = 1;
    for (int i = 0; i < arity; ++i) count *= g->order();
    if (count > 1e7) throw SizeLimitError("cochain table output would be too large");
    rec(0);
    ordered_json out;
    out["type"] = "table";
    out["arity"] = arity;
    out["exponents"] = std::move(exps);
    return out;
}

} // namespace

std::string cmd_adapt(const ProblemSpec& spec) {
    AdaptationResult res = adapt(spec.data, true);
    ordered_json doc;
    ordered_json eta = cochain_table_literal(res.eta, 2);
    doc["eta"] = eta;
    doc["theta"] = cochain_table_literal(res.theta, 1);
    ordered_json omega_expr;
    omega_expr["type"] = "product";
    omega_expr["factors"] = ordered_json::array();
    omega_expr["factors"].push_back(spec.raw.contains("omega") ? ordered_json(spec.raw["omega"])
                                                               : ordered_json({{"type", "trivial"}}));
    ordered_json db;
    db["type"] = "coboundary";
    db["inner"] = std::move(eta);
    omega_expr["factors"].push_back(std::move(db));
    doc["omega_adapted"] = std::move(omega_expr);
    doc["transversal"] = res.transversal;
    doc["adapted_check"] = is_adapted(res.omega_adapted, spec.data.H);
    return doc.dump(2) + "\n";
}

std::string cmd_predict_twist(const ProblemSpec& spec) {
    const auto& data = spec.data;
    const json& tw = spec.raw.contains("twist") ? spec.raw.at("twist") : json();
    if (!tw.is_object()) bad_spec("predict-twist needs a \"twist\" section");
    long long t = tw.value("t", 1LL);
    GroupPtr zn;
    std::vector<Elem> images;
    try {
        const json& hom = tw.at("hom");
        zn = FiniteGroup::cyclic(hom.at("n").get<int>());
        images = hom.at("images").get<std::vector<Elem>>();
    } catch (const json::exception& e) {
        bad_spec(std::string("malformed twist section: ") + e.what());
    }
    GroupHom p(data.G, zn, std::move(images));
    for (Elem h : data.H.elements())
        if (p(h) != 0) throw ValidationError("H is not contained in the kernel of p");

    Cochain kappa = Cochain::inflate(Cochain::cyclic_kappa(zn, t), p);
    GroupTheoreticalData shifted =
        GroupTheoreticalData::make(data.G, data.H, (data.omega * kappa).memoized(), data.psi);

    AdaptationResult ad = adapt(data, true);
    AdaptationResult ad2 = adapt(shifted, true);

    ordered_json doc;
    doc["rows"] = ordered_json::array();
    bool all_ok = true;
    for (const auto& label : enumerate_simples(data, true, spec.options.proj)) {
        SimpleObjectLabel twisted = label;
        twisted.data = shifted; // beta_g is unchanged: kappa vanishes on H-arguments
        for (long long m = 1; m <= spec.options.m_max; ++m) {
            TwistPrediction pred = cyclic_twist_predict(p, t, label.g, m);
            std::complex<double> base = indicator_general(label, ad.eta, ad.theta, m,
                                                          SumVariant::CosetSum, false);
            std::complex<double> shifted_val = indicator_general(twisted, ad2.eta, ad2.theta, m,
                                                                 SumVariant::CosetSum, false);
            bool ok = pred.vanishes
                          ? std::abs(base) < 1e-9 && std::abs(shifted_val) < 1e-9
                          : std::abs(shifted_val - pred.multiplier.value() * base) < 1e-9;
            all_ok = all_ok && ok;
            ordered_json row;
            row["g"] = label.g;
            row["chi"] = hex64(character_hash(label.chi));
            row["m"] = m;
            row["predicted"] = pred.vanishes ? "both vanish" : "e(" + pred.multiplier.str() + ")";
            row["base"] = complex_pair(base);
            row["twisted"] = complex_pair(shifted_val);
            row["ok"] = ok;
            doc["rows"].push_back(std::move(row));
        }
    }
    doc["all_ok"] = all_ok;
    if (!all_ok) throw ValidationError("twist prediction mismatch:\n" + doc.dump(2));
    return doc.dump(2) + "\n";
}

std::string cmd_index_two(const ProblemSpec& spec) {
    const json& sec = spec.raw.contains("index_two_subgroup") ? spec.raw.at("index_two_subgroup") : json();
    if (!sec.is_object()) bad_spec("index-two needs an \"index_two_subgroup\" section");
    std::vector<Elem> gens;
    try {
        gens = sec.at("generators").get<std::vector<Elem>>();
    } catch (const json::exception& e) {
        bad_spec(std::string("malformed index_two_subgroup section: ") + e.what());
    }
    Subgroup n = subgroup_closure(spec.data.G, gens);
    IndexTwoReport report =
        index_two_twist_check(spec.data.G, spec.data.omega, n, spec.options.m_max, spec.options.proj);
    ordered_json doc;
    doc["rows"] = ordered_json::array();
    for (const auto& cell : report.cells) {
        ordered_json row;
        row["g"] = cell.g;
        row["chi_index"] = cell.chi_index;
        row["m"] = cell.m;
        row["base"] = complex_pair(cell.base);
        row["twisted"] = complex_pair(cell.twisted);
        row["sign_flip_expected"] = cell.flip_expected;
        row["ok"] = cell.ok;
        doc["rows"].push_back(std::move(row));
    }
    doc["all_ok"] = report.all_ok;
    if (!report.all_ok) throw ValidationError("index-two sign pattern mismatch:\n" + doc.dump(2));
    return doc.dump(2) + "\n";
}

} // namespace gti

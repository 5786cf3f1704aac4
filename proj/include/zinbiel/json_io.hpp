#pragma once

#include <string>
#include <variant>

#include <json.hpp>

#include "zinbiel/algebra.hpp"
#include "zinbiel/invariants.hpp"

namespace zinbiel {

using AnyAlgebra =
    std::variant<Algebra<RationalField>, Algebra<PrimeField>, Algebra<QuadExtField>>;

// Scalars serialize as bare integers when integral (and small enough for
// JSON), as "p/q" strings otherwise.
inline nlohmann::json rational_to_json(const Rational& r) {
    if (r.is_integer() && r.num().fits_slong_p())
        return static_cast<long long>(r.num().get_si());
    return r.str();
}

inline Rational rational_from_json(const nlohmann::json& j) {
    if (j.is_number_integer()) return Rational(mpz_class(static_cast<long>(j.get<long long>())));
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    throw usage_error("scalar must be an integer or a \"p/q\" string");
}

template <class F>
nlohmann::json algebra_to_json(const Algebra<F>& a, const nlohmann::json& field_tag) {
    nlohmann::json out;
    out["name"] = a.name();
    out["dim"] = a.dim();
    out["field"] = field_tag;
    nlohmann::json products = nlohmann::json::array();
    for (int i = 1; i <= a.dim(); ++i)
        for (int j = 1; j <= a.dim(); ++j) {
            nlohmann::json coeffs = nlohmann::json::object();
            for (int k = 1; k <= a.dim(); ++k) {
                const auto& c = a.constant(i, j, k);
                if (c.is_zero()) continue;
                if constexpr (std::is_same_v<F, RationalField>) {
                    coeffs[std::to_string(k)] = rational_to_json(c);
                } else if constexpr (std::is_same_v<F, PrimeField>) {
                    coeffs[std::to_string(k)] = c.r;
                } else {
                    coeffs[std::to_string(k)] =
                        c.b == 0 ? nlohmann::json(c.a)
                                 : nlohmann::json(std::to_string(c.a) + "+" + std::to_string(c.b) + "*r");
                }
            }
            if (!coeffs.empty()) products.push_back({{"i", i}, {"j", j}, {"coeffs", coeffs}});
        }
    out["products"] = products;
    return out;
}

inline nlohmann::json algebra_to_json(const Algebra<RationalField>& a) {
    return algebra_to_json(a, nlohmann::json("Q"));
}
inline nlohmann::json algebra_to_json(const Algebra<PrimeField>& a) {
    return algebra_to_json(a, nlohmann::json{{"Fp", a.field().p}});
}
inline nlohmann::json algebra_to_json(const Algebra<QuadExtField>& a) {
    return algebra_to_json(a, nlohmann::json{{"Fp2", a.field().p}});
}

namespace detail {

template <class F>
Algebra<F> load_products(const F& fld, const nlohmann::json& j,
                         typename F::Elem (*scalar)(const F&, const nlohmann::json&)) {
    int dim = j.at("dim").get<int>();
    if (dim < 1) throw usage_error("dim must be a positive integer");
    Algebra<F> a(fld, dim, j.value("name", std::string{}));
    for (const auto& p : j.at("products")) {
        int i = p.at("i").get<int>();
        int jj = p.at("j").get<int>();
        if (i < 1 || i > dim || jj < 1 || jj > dim)
            throw usage_error("product indices out of range");
        for (const auto& [key, val] : p.at("coeffs").items()) {
            int k = std::stoi(key);
            if (k < 1 || k > dim) throw usage_error("coefficient index out of range");
            a.set_constant(i, jj, k, scalar(fld, val));
        }
    }
    a.finalize();
    return a;
}

inline Fp2 parse_fp2_scalar(const QuadExtField& fld, const nlohmann::json& v) {
    if (v.is_number_integer()) return fld.from_int(v.get<long long>());
    std::string s = v.get<std::string>();
    auto plus = s.find('+');
    if (plus == std::string::npos) return fld.from_int(std::stol(s));
    long a = std::stol(s.substr(0, plus));
    long b = std::stol(s.substr(plus + 1, s.find('*') - plus - 1));
    Fp2 unit = fld.sqrt_d();
    Fp2 out = fld.from_int(a) + fld.from_int(b) * unit;
    return out;
}

} // namespace detail

inline AnyAlgebra algebra_from_json(const nlohmann::json& j) {
    const auto& f = j.at("field");
    if (f.is_string() && f.get<std::string>() == "Q") {
        return detail::load_products<RationalField>(
            RationalField{}, j,
            +[](const RationalField&, const nlohmann::json& v) { return rational_from_json(v); });
    }
    if (f.is_object() && f.contains("Fp")) {
        PrimeField fld(f.at("Fp").get<uint32_t>());
        return detail::load_products<PrimeField>(
            fld, j, +[](const PrimeField& fl, const nlohmann::json& v) {
                if (v.is_number_integer()) return fl.from_int(v.get<long long>());
                return fl.from_rational(Rational::parse(v.get<std::string>()));
            });
    }
    if (f.is_object() && f.contains("Fp2")) {
        QuadExtField fld(f.at("Fp2").get<uint32_t>());
        return detail::load_products<QuadExtField>(
            fld, j, +[](const QuadExtField& fl, const nlohmann::json& v) {
                return detail::parse_fp2_scalar(fl, v);
            });
    }
    throw usage_error("field must be \"Q\", {\"Fp\": p} or {\"Fp2\": p}");
}

inline nlohmann::json subspace_to_json(const Subspace<RationalField>& s) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& r : s.basis()) {
        nlohmann::json row = nlohmann::json::array();
        for (const auto& x : r) row.push_back(rational_to_json(x));
        rows.push_back(row);
    }
    return {{"dim", s.dim()}, {"basis", rows}};
}

inline nlohmann::json certificate_to_json(const DimCertificate& c) {
    nlohmann::json j{{"d", c.d},
                     {"mode", c.require_ideal ? "ideal" : "subalgebra"},
                     {"method", cert_method_name(c.method)}};
    if (c.patterns) j["patterns"] = c.patterns;
    if (!c.primes.empty()) j["primes"] = c.primes;
    if (!c.skipped_primes.empty()) j["skipped_primes"] = c.skipped_primes;
    if (!c.note.empty()) j["note"] = c.note;
    return j;
}

inline nlohmann::json mode_result_to_json(const ModeResult& m) {
    nlohmann::json j{{"value", m.value},
                     {"lower_grade", m.lower_grade},
                     {"certified_lower", m.certified_lower},
                     {"certified_upper", m.certified_upper}};
    switch (m.witness.kind) {
        case Witness::Kind::Rational:
            j["witness"] = subspace_to_json(m.witness.rational);
            j["witness_field"] = "Q";
            break;
        case Witness::Kind::QuadExt:
            j["witness"] = m.witness.description;
            j["witness_field"] = "Fp2";
            j["witness_prime"] = m.witness.p;
            break;
        case Witness::Kind::None:
            if (!m.witness.description.empty()) j["witness_note"] = m.witness.description;
            break;
    }
    nlohmann::json certs = nlohmann::json::array();
    for (const auto& c : m.certificates) certs.push_back(certificate_to_json(c));
    j["upper_bound_certificates"] = certs;
    return j;
}

inline nlohmann::json alpha_beta_to_json(const AlphaBetaResult& r) {
    nlohmann::json j{{"algebra", r.algebra},
                     {"dim", r.n},
                     {"alpha", mode_result_to_json(r.alpha)},
                     {"beta", mode_result_to_json(r.beta)},
                     {"fully_certified", r.fully_certified()}};
    if (!r.anomalies.empty()) j["anomalies"] = r.anomalies;
    if (r.maximal_abelian_ideals) {
        const auto& e = *r.maximal_abelian_ideals;
        nlohmann::json ids{{"d", e.d}, {"resolved", e.resolved}};
        nlohmann::json counts = nlohmann::json::object();
        for (auto& [p, c] : e.counts) counts[std::to_string(p)] = c;
        ids["counts"] = counts;
        nlohmann::json list = nlohmann::json::array();
        for (const auto& s : e.exact) list.push_back(subspace_to_json(s));
        ids["ideals"] = list;
        if (!e.note.empty()) ids["note"] = e.note;
        j["maximal_abelian_ideals"] = ids;
    }
    return j;
}

} // namespace zinbiel

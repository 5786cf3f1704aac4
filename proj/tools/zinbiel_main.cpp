#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "zinbiel/catalog.hpp"
#include "zinbiel/expr.hpp"
#include "zinbiel/json_io.hpp"
#include "zinbiel/theorems.hpp"

namespace {

using namespace zinbiel;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitInput = 2;
constexpr int kExitBudget = 3;

std::map<std::string, Rational> parse_params(const std::vector<std::string>& raw) {
    std::map<std::string, Rational> out;
    for (const auto& kv : raw) {
        auto eq = kv.find('=');
        if (eq == std::string::npos) throw usage_error("expected name=value, got '" + kv + "'");
        out[kv.substr(0, eq)] = Rational::parse(kv.substr(eq + 1));
    }
    return out;
}

// Input is either a path to an algebra JSON file or a catalog id.
AnyAlgebra load_input(const std::string& input, const std::map<std::string, Rational>& params) {
    std::ifstream f(input);
    if (f.good()) {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(f);
        } catch (const nlohmann::json::parse_error& e) {
            throw usage_error("JSON parse error in " + input + ": " + e.what());
        }
        return algebra_from_json(j);
    }
    return Catalog::instance().get(input, params);
}

Algebra<RationalField> load_rational(const std::string& input,
                                     const std::map<std::string, Rational>& params) {
    AnyAlgebra any = load_input(input, params);
    if (auto* q = std::get_if<Algebra<RationalField>>(&any)) return std::move(*q);
    throw usage_error("this command needs an algebra over Q");
}

SearchOptions make_options(const std::vector<uint32_t>& primes, const std::string& groebner,
                           int dim) {
    SearchOptions opts;
    if (!primes.empty()) opts.primes = primes;
    if (groebner == "on") opts.use_groebner = true;
    else if (groebner == "off") opts.use_groebner = false;
    else opts.use_groebner = dim <= 5; // default: exact certificates up to dim 5
    if (const char* env = std::getenv("ZINBIEL_BUDGET_SECS"))
        opts.budget.max_seconds = std::atof(env);
    return opts;
}

void require_zinbiel_or_die(const Algebra<RationalField>& a) {
    if (!a.is_zinbiel()) {
        const auto& v = *a.violation();
        std::ostringstream os;
        os << "not a Zinbiel algebra: identity fails at basis triple (" << v.i << "," << v.j << ","
           << v.k << ")";
        throw usage_error(os.str());
    }
}

std::string witness_str(const ModeResult& m) {
    switch (m.witness.kind) {
        case Witness::Kind::Rational: return m.witness.rational.str();
        case Witness::Kind::QuadExt: return m.witness.description;
        case Witness::Kind::None:
            return m.witness.description.empty() ? "(none)" : m.witness.description;
    }
    return "(none)";
}

void print_alpha_beta(const AlphaBetaResult& r) {
    std::cout << r.algebra << " (dim " << r.n << ")\n";
    std::cout << "  alpha = " << r.alpha.value << "  [" << r.alpha.lower_grade
              << (r.alpha.certified_upper ? ", upper certified" : ", upper probabilistic")
              << "]\n    witness: " << witness_str(r.alpha) << "\n";
    std::cout << "  beta  = " << r.beta.value << "  [" << r.beta.lower_grade
              << (r.beta.certified_upper ? ", upper certified" : ", upper probabilistic")
              << "]\n    witness: " << witness_str(r.beta) << "\n";
    for (const auto& m : {&r.alpha, &r.beta})
        for (const auto& c : m->certificates) {
            std::cout << "  no " << (c.require_ideal ? "abelian ideal" : "abelian subalgebra")
                      << " of dim " << c.d << ": " << cert_method_name(c.method);
            if (c.patterns) std::cout << " (" << c.patterns << " patterns)";
            if (!c.primes.empty()) {
                std::cout << " (primes";
                for (auto p : c.primes) std::cout << " " << p;
                std::cout << ")";
            }
            std::cout << "\n";
        }
    for (const auto& s : r.anomalies) std::cout << "  anomaly: " << s << "\n";
    if (r.maximal_abelian_ideals) {
        const auto& e = *r.maximal_abelian_ideals;
        std::cout << "  maximal abelian ideals (dim " << e.d << "): ";
        if (e.resolved) {
            std::cout << e.exact.size() << "\n";
            for (const auto& s : e.exact) std::cout << "    " << s.str() << "\n";
        } else {
            std::cout << "unresolved (" << e.note << ")\n";
        }
        for (auto& [p, c] : e.counts)
            std::cout << "    count over F_" << p << ": " << c << "\n";
    }
}

struct TableRunSummary {
    int entries = 0;
    int mismatches = 0;
    int errors = 0;
    bool budget_downgrade = false;
};

TableRunSummary run_verify_tables(const std::string& scope, const SearchOptions& base,
                                  bool json_out, std::ostream& os) {
    TableRunSummary sum;
    nlohmann::json jentries = nlohmann::json::array();
    if (!json_out)
        os << std::left << std::setw(22) << "algebra" << std::setw(12) << "published"
           << std::setw(12) << "computed" << "status\n";
    for (const auto& entry : Catalog::instance().entries()) {
        bool in_scope = scope == "all" || (scope == "dim<=4" && entry.dim <= 4) ||
                        (scope == "dim5" && entry.dim == 5);
        if (!in_scope) continue;
        for (const Rational& v : entry.samples) {
            ++sum.entries;
            Algebra<RationalField> a = Catalog::instance().make(entry, v);
            const PublishedCase& pub = entry.case_for(v);
            SearchOptions opts = base;
            try {
                AlphaBetaResult r = alpha_beta(a, opts);
                bool match = r.alpha.value == pub.alpha && r.beta.value == pub.beta;
                if (!match) ++sum.mismatches;
                if (!r.fully_certified()) sum.budget_downgrade = true;
                std::string pubs = std::to_string(pub.alpha) + " | " + std::to_string(pub.beta);
                std::string comp = std::to_string(r.alpha.value) + " | " + std::to_string(r.beta.value);
                if (json_out) {
                    nlohmann::json je{{"id", entry.id},
                                      {"published_alpha", pub.alpha},
                                      {"published_beta", pub.beta},
                                      {"computed", alpha_beta_to_json(r)},
                                      {"match", match}};
                    if (entry.parametric()) je["param"] = v.str();
                    jentries.push_back(je);
                } else {
                    os << std::left << std::setw(22) << a.name() << std::setw(12) << pubs
                       << std::setw(12) << comp
                       << (match ? (r.fully_certified() ? "ok" : "ok (probabilistic)")
                                 : "MISMATCH")
                       << "\n";
                }
            } catch (const std::exception& e) {
                ++sum.errors;
                if (!json_out) os << entry.id << ": error: " << e.what() << "\n";
                else jentries.push_back({{"id", entry.id}, {"error", e.what()}});
            }
        }
    }
    if (json_out) {
        nlohmann::json out{{"scope", scope},
                           {"entries", sum.entries},
                           {"mismatches", sum.mismatches},
                           {"errors", sum.errors},
                           {"results", jentries}};
        os << out.dump(2) << "\n";
    } else {
        os << sum.entries << " entries, " << sum.mismatches << " mismatches, " << sum.errors
           << " errors\n";
    }
    return sum;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact invariants of finite-dimensional Zinbiel algebras"};
    app.require_subcommand(1);
    app.fallthrough(); // allow --primes / --groebner after the subcommand

    std::vector<uint32_t> primes;
    std::string groebner = "auto";
    app.add_option("--primes", primes, "finite-field search primes")->delimiter(',');
    app.add_option("--groebner", groebner, "feasibility certificates: on|off|auto")
        ->check(CLI::IsMember({"on", "off", "auto"}));

    // alpha-beta
    auto* cab = app.add_subcommand("alpha-beta", "maximal abelian subalgebra/ideal dimensions");
    std::string ab_input;
    std::vector<std::string> ab_params;
    bool ab_ideals = false, ab_json = false;
    cab->add_option("input", ab_input, "algebra JSON file or catalog id")->required();
    cab->add_option("--param", ab_params, "family parameter, name=value");
    cab->add_flag("--enumerate-ideals", ab_ideals, "list all maximal abelian ideals");
    cab->add_flag("--json", ab_json, "JSON report");

    // verify-tables
    auto* cvt = app.add_subcommand("verify-tables", "recompute the catalog and compare");
    std::string scope = "all";
    bool vt_json = false;
    cvt->add_option("--scope", scope, "dim<=4 | dim5 | all")
        ->check(CLI::IsMember({"dim<=4", "dim5", "all"}));
    cvt->add_flag("--json", vt_json, "JSON report");

    // series / center
    auto* cse = app.add_subcommand("series", "lower central and derived series");
    std::string se_input;
    std::vector<std::string> se_params;
    cse->add_option("input", se_input)->required();
    cse->add_option("--param", se_params, "family parameter, name=value");

    auto* cce = app.add_subcommand("center", "centre of the algebra");
    std::string ce_input;
    std::vector<std::string> ce_params;
    cce->add_option("input", ce_input)->required();
    cce->add_option("--param", ce_params, "family parameter, name=value");

    // normalize
    auto* cno = app.add_subcommand("normalize", "rewrite an expression into left-normed words");
    std::string expr_text;
    cno->add_option("expr", expr_text)->required();

    // check
    auto* cch = app.add_subcommand("check", "run a structure-theorem check over the catalog");
    std::string thm;
    std::string check_scope = "all";
    int filiform_n = 0;
    cch->add_option("theorem", thm, "thm2.1 | thm3.1 | lemma3.1 | filiform")->required();
    cch->add_option("--scope", check_scope, "dim<=4 | dim5 | all")
        ->check(CLI::IsMember({"dim<=4", "dim5", "all"}));
    cch->add_option("--n", filiform_n, "dimension for filiform checks (default 4..8)");

    // catalog
    auto* cca = app.add_subcommand("catalog", "catalog access");
    auto* ccl = cca->add_subcommand("list", "list entry ids");
    auto* ccs = cca->add_subcommand("show", "print one entry");
    auto* cce2 = cca->add_subcommand("export", "write the algebra JSON");
    std::string cat_id, cat_out;
    std::vector<std::string> cat_params;
    ccs->add_option("id", cat_id)->required();
    cce2->add_option("id", cat_id)->required();
    cce2->add_option("-o,--output", cat_out, "output file (default stdout)");
    ccs->add_option("--param", cat_params, "family parameter, name=value");
    cce2->add_option("--param", cat_params, "family parameter, name=value");

    // groebner (debug)
    auto* cgb = app.add_subcommand("groebner", "feasibility of a polynomial system (debug)");
    std::string gb_input;
    cgb->add_option("system", gb_input, "JSON: {\"vars\": [...], \"polys\": [\"...\"]}")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*cab) {
            Algebra<RationalField> a = load_rational(ab_input, parse_params(ab_params));
            require_zinbiel_or_die(a);
            SearchOptions opts = make_options(primes, groebner, a.dim());
            opts.collect_ideals = ab_ideals;
            AlphaBetaResult r = alpha_beta(a, opts);
            if (ab_json) std::cout << alpha_beta_to_json(r).dump(2) << "\n";
            else print_alpha_beta(r);
            return kExitOk;
        }
        if (*cvt) {
            SearchOptions opts = make_options(primes, groebner, 5);
            if (groebner == "auto") opts.use_groebner = true;
            TableRunSummary sum = run_verify_tables(scope, opts, vt_json, std::cout);
            if (sum.errors) return kExitInput;
            if (sum.mismatches) return kExitMismatch;
            if (sum.budget_downgrade) return kExitBudget;
            return kExitOk;
        }
        if (*cse) {
            Algebra<RationalField> a = load_rational(se_input, parse_params(se_params));
            require_zinbiel_or_die(a);
            auto print_series = [&](const SeriesReport<RationalField>& s, const std::string& name) {
                std::cout << name << " dims:";
                for (int d : s.dims()) std::cout << " " << d;
                if (s.index) std::cout << "  (vanishes, index " << *s.index << ")";
                std::cout << "\n";
            };
            print_series(a.lower_central_series(), "lower central");
            print_series(a.derived_series(), "derived");
            std::cout << (a.is_nilpotent() ? "nilpotent" : "not nilpotent") << ", "
                      << (a.is_solvable() ? "solvable" : "not solvable") << "\n";
            return kExitOk;
        }
        if (*cce) {
            Algebra<RationalField> a = load_rational(ce_input, parse_params(ce_params));
            require_zinbiel_or_die(a);
            Subspace<RationalField> c = a.center();
            std::cout << "centre dim " << c.dim() << ": " << c.str() << "\n";
            return kExitOk;
        }
        if (*cno) {
            LinearCombo combo = left_normalize(parse_expr(expr_text));
            std::cout << to_string(combo) << "\n";
            return kExitOk;
        }
        if (*cch) {
            int failures = 0, ran = 0;
            auto run_entry = [&](const CatalogEntry& entry) {
                for (const Rational& v : entry.samples) {
                    Algebra<RationalField> a = Catalog::instance().make(entry, v);
                    SearchOptions opts = make_options(primes, groebner, a.dim());
                    TheoremReport rep;
                    if (thm == "thm2.1") rep = check_codim1_theorem(a, opts);
                    else if (thm == "thm3.1") rep = check_codim2_theorem(a, opts);
                    else if (thm == "lemma3.1") {
                        if (a.dim() > 5) continue;
                        rep = check_maximal_subalgebra_lemma(a);
                    } else throw usage_error("unknown theorem id '" + thm + "'");
                    ++ran;
                    if (rep.hypotheses_satisfied && !rep.conclusion_verified) {
                        ++failures;
                        std::cout << "FAIL " << rep.algebra << ": " << rep.details << "\n";
                    } else if (rep.hypotheses_satisfied) {
                        std::cout << "ok   " << rep.algebra << ": " << rep.details << "\n";
                    }
                }
            };
            if (thm == "filiform") {
                int lo = filiform_n ? filiform_n : 4, hi = filiform_n ? filiform_n : 8;
                for (int n = lo; n <= hi; ++n)
                    for (const auto& rep : check_filiform_props(n, make_options(primes, groebner, n))) {
                        ++ran;
                        if (!rep.conclusion_verified) {
                            ++failures;
                            std::cout << "FAIL " << rep.algebra << ": " << rep.details << "\n";
                        } else {
                            std::cout << "ok   " << rep.algebra << ": " << rep.details << "\n";
                        }
                    }
            } else {
                for (const auto& entry : Catalog::instance().entries()) {
                    bool in_scope = check_scope == "all" || (check_scope == "dim<=4" && entry.dim <= 4) ||
                                    (check_scope == "dim5" && entry.dim == 5);
                    if (in_scope) run_entry(entry);
                }
            }
            std::cout << ran << " checks, " << failures << " failures\n";
            return failures ? kExitMismatch : kExitOk;
        }
        if (*cca) {
            if (*ccl) {
                for (const auto& e : Catalog::instance().entries())
                    std::cout << e.id << (e.parametric() ? "(alpha)" : "") << "  dim " << e.dim
                              << "  [" << e.source << "]\n";
                std::cout << "example-3-1  dim 6\nNF:<n>, F:<n>:<1|2|3>  generators\n";
                return kExitOk;
            }
            std::map<std::string, Rational> ps = parse_params(cat_params);
            const CatalogEntry* entry = Catalog::instance().find(cat_id);
            Rational bound(0);
            if (entry && entry->parametric()) {
                auto it = ps.find(entry->param);
                bound = it == ps.end() ? entry->samples.front() : it->second;
            }
            Algebra<RationalField> a =
                entry ? Catalog::instance().make(*entry, bound) : Catalog::instance().get(cat_id, ps);
            if (*ccs) {
                std::cout << a.name() << "  dim " << a.dim() << "\n";
                if (entry) {
                    const auto& pub = entry->case_for(bound);
                    std::cout << "published: alpha " << pub.alpha << ", beta " << pub.beta << "\n";
                }
                for (int i = 1; i <= a.dim(); ++i)
                    for (int j = 1; j <= a.dim(); ++j) {
                        std::string terms;
                        for (int k = 1; k <= a.dim(); ++k) {
                            const Rational& c = a.constant(i, j, k);
                            if (c.is_zero()) continue;
                            if (!terms.empty()) terms += " + ";
                            terms += (c.is_one() ? "" : c.str() + "*") + std::string("e") +
                                     std::to_string(k);
                        }
                        if (!terms.empty())
                            std::cout << "[e" << i << ",e" << j << "] = " << terms << "\n";
                    }
                return kExitOk;
            }
            nlohmann::json j = algebra_to_json(a);
            if (cat_out.empty()) std::cout << j.dump(2) << "\n";
            else {
                std::ofstream f(cat_out);
                if (!f) throw usage_error("cannot write " + cat_out);
                f << j.dump(2) << "\n";
            }
            return kExitOk;
        }
        if (*cgb) {
            std::ifstream f(gb_input);
            if (!f) throw usage_error("cannot read " + gb_input);
            nlohmann::json j;
            try {
                j = nlohmann::json::parse(f);
            } catch (const nlohmann::json::parse_error& e) {
                throw usage_error(std::string("JSON parse error: ") + e.what());
            }
            std::vector<std::string> vars = j.at("vars").get<std::vector<std::string>>();
            std::vector<Polynomial> polys;
            for (const auto& s : j.at("polys"))
                polys.push_back(parse_polynomial(s.get<std::string>(), vars));
            GroebnerBudget budget;
            if (const char* env = std::getenv("ZINBIEL_BUDGET_SECS"))
                budget.max_seconds = std::atof(env);
            FeasibilityReport rep = solve_feasibility(polys, budget);
            switch (rep.status) {
                case Feasibility::Infeasible:
                    std::cout << "infeasible (no solutions over any field extension)\n";
                    break;
                case Feasibility::Feasible: {
                    std::cout << "feasible";
                    if (rep.point) {
                        std::cout << "; rational point:";
                        for (std::size_t i = 0; i < vars.size(); ++i)
                            std::cout << " " << vars[i] << "=" << (*rep.point)[i].str();
                    } else {
                        std::cout << "; no rational point found";
                    }
                    std::cout << "\n";
                    for (const auto& g : rep.gb.basis) std::cout << "  basis: " << g.str(vars) << "\n";
                    break;
                }
                case Feasibility::Unknown:
                    std::cout << "unknown (budget exhausted)\n";
                    return kExitBudget;
            }
            return kExitOk;
        }
    } catch (const budget_exhausted& e) {
        std::cerr << "budget exhausted: " << e.what() << "\n";
        return kExitBudget;
    } catch (const usage_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMismatch;
    }
    return kExitOk;
}

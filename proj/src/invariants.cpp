#include "zinbiel/invariants.hpp"

#include <algorithm>
#include <set>

namespace zinbiel {

namespace {

// Symbolic coordinate vectors with polynomial entries in the pattern's
// free variables.
using SymVec = std::vector<Polynomial>;

SymVec sym_product(const Algebra<RationalField>& a, const SymVec& x, const SymVec& y, int nv) {
    const int n = a.dim();
    SymVec out(static_cast<std::size_t>(n), Polynomial(nv));
    for (int i = 0; i < n; ++i) {
        if (x[static_cast<std::size_t>(i)].is_zero()) continue;
        for (int j = 0; j < n; ++j) {
            if (y[static_cast<std::size_t>(j)].is_zero()) continue;
            Polynomial xy = x[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(j)];
            for (int k = 0; k < n; ++k) {
                const Rational& c = a.constant(i + 1, j + 1, k + 1);
                if (!c.is_zero())
                    out[static_cast<std::size_t>(k)] = out[static_cast<std::size_t>(k)] + xy.scaled(c);
            }
        }
    }
    return out;
}

void push_unique(std::vector<Polynomial>& sys, Polynomial p) {
    if (p.is_zero()) return;
    p = p.primitive();
    for (const auto& q : sys)
        if (q == p) return;
    sys.push_back(std::move(p));
}

} // namespace

std::vector<Polynomial> pattern_system(const Algebra<RationalField>& a, const EchelonPattern& pat,
                                       bool require_ideal) {
    const int n = a.dim(), d = pat.d;
    const int nv = static_cast<int>(pat.free_pos.size());
    std::vector<SymVec> rows(static_cast<std::size_t>(d),
                             SymVec(static_cast<std::size_t>(n), Polynomial(nv)));
    for (int r = 0; r < d; ++r)
        rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(pat.pivots[static_cast<std::size_t>(r)])] =
            Polynomial::constant(nv, Rational(1));
    for (int t = 0; t < nv; ++t) {
        auto [r, c] = pat.free_pos[static_cast<std::size_t>(t)];
        rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = Polynomial::variable(nv, t);
    }

    std::vector<Polynomial> sys;
    // Abelian: every pairwise product of basis rows vanishes identically.
    for (int r = 0; r < d; ++r)
        for (int s = 0; s < d; ++s) {
            SymVec prod = sym_product(a, rows[static_cast<std::size_t>(r)],
                                      rows[static_cast<std::size_t>(s)], nv);
            for (int k = 0; k < n; ++k) push_unique(sys, prod[static_cast<std::size_t>(k)]);
        }

    if (require_ideal) {
        std::vector<bool> is_piv(static_cast<std::size_t>(n), false);
        for (int p : pat.pivots) is_piv[static_cast<std::size_t>(p)] = true;
        for (int g = 0; g < n; ++g) {
            SymVec unit(static_cast<std::size_t>(n), Polynomial(nv));
            unit[static_cast<std::size_t>(g)] = Polynomial::constant(nv, Rational(1));
            for (int r = 0; r < d; ++r) {
                for (int side = 0; side < 2; ++side) {
                    SymVec w = side == 0
                                   ? sym_product(a, unit, rows[static_cast<std::size_t>(r)], nv)
                                   : sym_product(a, rows[static_cast<std::size_t>(r)], unit, nv);
                    // Membership: after eliminating pivot coordinates the
                    // residual must vanish at every non-pivot column.
                    for (int c = 0; c < n; ++c) {
                        if (is_piv[static_cast<std::size_t>(c)]) continue;
                        Polynomial res = w[static_cast<std::size_t>(c)];
                        for (int t = 0; t < d; ++t)
                            res = res - w[static_cast<std::size_t>(pat.pivots[static_cast<std::size_t>(t)])] *
                                            rows[static_cast<std::size_t>(t)][static_cast<std::size_t>(c)];
                        push_unique(sys, std::move(res));
                    }
                }
            }
        }
    }
    return sys;
}

UpperBoundOutcome certify_upper_bound(const Algebra<RationalField>& a, int d, bool require_ideal,
                                      const GroebnerBudget& budget) {
    a.require_valid();
    UpperBoundOutcome out;
    bool any_unknown = false;
    for (const auto& pat : EchelonPattern::all(a.dim(), d)) {
        auto sys = pattern_system(a, pat, require_ideal);
        ++out.patterns_checked;
        if (sys.empty()) {
            // Unconstrained pattern: the all-zero assignment works.
            out.status = UpperBoundOutcome::Status::Feasible;
            std::vector<Rational> zeros(pat.free_pos.size(), Rational(0));
            out.point_witness = pat.instantiate(RationalField{}, zeros);
            return out;
        }
        FeasibilityReport rep = solve_feasibility(sys, budget);
        if (rep.status == Feasibility::Feasible) {
            out.status = UpperBoundOutcome::Status::Feasible;
            if (rep.point) {
                std::vector<Rational> vals(rep.point->begin(), rep.point->end());
                out.point_witness = pat.instantiate(RationalField{}, vals);
            }
            return out;
        }
        if (rep.status == Feasibility::Unknown) {
            any_unknown = true;
            out.note = rep.note;
        }
    }
    out.status = any_unknown ? UpperBoundOutcome::Status::Unknown
                             : UpperBoundOutcome::Status::InfeasibleAll;
    return out;
}

FpScan fp_abelian_scan(const Algebra<PrimeField>& a, int d, bool require_ideal, uint64_t cap,
                       int max_samples) {
    FpScan s;
    s.p = a.field().p;
    try {
        for_each_subspace<PrimeField>(
            a.field(), a.dim(), d,
            [&](const Subspace<PrimeField>& u) {
                if (a.is_abelian(u) && (!require_ideal || a.is_ideal(u))) {
                    ++s.hits;
                    if (static_cast<int>(s.samples.size()) < max_samples) s.samples.push_back(u);
                }
                return true;
            },
            cap);
        s.ran = true;
    } catch (const budget_exhausted&) {
        s.skipped_cap = true;
    }
    return s;
}

MaxAbelianFp max_abelian_dim_fp(const Algebra<PrimeField>& a, bool require_ideal, uint64_t cap,
                                bool collect_all) {
    a.require_valid();
    for (int d = a.dim(); d >= 1; --d) {
        FpScan s = fp_abelian_scan(a, d, require_ideal, cap, collect_all ? (1 << 30) : 8);
        if (s.skipped_cap)
            throw budget_exhausted("exhaustive scan at dimension " + std::to_string(d) +
                                   " exceeds the configured cap");
        if (s.hits > 0) {
            std::sort(s.samples.begin(), s.samples.end());
            return {d, std::move(s.samples)};
        }
    }
    return {0, {}};
}

std::optional<Subspace<RationalField>> lift_fp_witness(const Algebra<RationalField>& a,
                                                       const Subspace<PrimeField>& w,
                                                       bool require_ideal, int bound,
                                                       uint64_t max_candidates) {
    const uint32_t p = w.field().p;
    const int n = w.ambient(), d = w.dim();
    EchelonPattern pat;
    pat.n = n;
    pat.d = d;
    pat.pivots = w.pivots();
    std::vector<bool> is_piv(static_cast<std::size_t>(n), false);
    for (int c : pat.pivots) is_piv[static_cast<std::size_t>(c)] = true;
    for (int r = 0; r < d; ++r)
        for (int c = pat.pivots[static_cast<std::size_t>(r)] + 1; c < n; ++c)
            if (!is_piv[static_cast<std::size_t>(c)]) pat.free_pos.emplace_back(r, c);

    std::vector<std::vector<Rational>> choices;
    uint64_t total = 1;
    for (auto [r, c] : pat.free_pos) {
        uint32_t residue = w.basis()[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)].r;
        std::vector<Rational> opts;
        for (int z = -bound; z <= bound; ++z) {
            int m = z % static_cast<int>(p);
            if (m < 0) m += static_cast<int>(p);
            if (static_cast<uint32_t>(m) == residue) opts.push_back(Rational(z));
        }
        if (opts.empty()) return std::nullopt;
        total *= opts.size();
        if (total > max_candidates) return std::nullopt;
        choices.push_back(std::move(opts));
    }
    std::vector<std::size_t> odo(choices.size(), 0);
    RationalField q{};
    while (true) {
        std::vector<Rational> vals;
        vals.reserve(choices.size());
        for (std::size_t i = 0; i < choices.size(); ++i) vals.push_back(choices[i][odo[i]]);
        Subspace<RationalField> cand = pat.instantiate(q, vals);
        if (a.is_abelian(cand) && (!require_ideal || a.is_ideal(cand))) return cand;
        std::size_t i = 0;
        while (i < odo.size() && ++odo[i] == choices[i].size()) odo[i++] = 0;
        if (i == odo.size()) break;
        if (odo.empty()) break;
    }
    return std::nullopt;
}

namespace {

std::optional<Subspace<RationalField>> coordinate_witness(const Algebra<RationalField>& a, int d,
                                                          bool require_ideal) {
    const int n = a.dim();
    if (d > n) return std::nullopt;
    std::vector<int> idx(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) idx[static_cast<std::size_t>(i)] = i;
    while (true) {
        Mat<RationalField> rows;
        for (int i : idx) rows.push_back(unit_vec(a.field(), n, i));
        Subspace<RationalField> u = a.span_of(std::move(rows));
        if (a.is_abelian(u) && (!require_ideal || a.is_ideal(u))) return u;
        int i = d - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - d + i) --i;
        if (i < 0) break;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < d; ++j)
            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
    return std::nullopt;
}

Witness quad_ext_witness_search(const Algebra<RationalField>& a, int d, bool require_ideal,
                                const SearchOptions& opts) {
    Witness w;
    for (uint32_t p : opts.quad_ext_primes) {
        std::optional<Algebra<QuadExtField>> ext;
        try {
            ext = extend_mod_p2(a, p);
        } catch (const usage_error&) {
            continue;
        }
        std::optional<Subspace<QuadExtField>> hit;
        try {
            for_each_subspace<QuadExtField>(
                ext->field(), a.dim(), d,
                [&](const Subspace<QuadExtField>& u) {
                    if (ext->is_abelian(u) && (!require_ideal || ext->is_ideal(u))) {
                        hit = u;
                        return false;
                    }
                    return true;
                },
                opts.enum_cap);
        } catch (const budget_exhausted&) {
            continue;
        }
        if (hit) {
            w.kind = Witness::Kind::QuadExt;
            w.p = p;
            w.description = "over " + ext->field().name() + ": " + hit->str();
            return w;
        }
    }
    return w;
}

struct PrimeCtx {
    uint32_t p;
    std::optional<Algebra<PrimeField>> alg; // nullopt: bad prime (denominators)
};

ModeResult solve_mode(const Algebra<RationalField>& a, const std::vector<PrimeCtx>& pcs,
                      bool require_ideal, int start, const SearchOptions& opts,
                      std::vector<std::string>& anomalies, bool upstream_certified) {
    ModeResult m;
    const std::string mode = require_ideal ? "ideal" : "subalgebra";
    for (int d = start; d >= 1; --d) {
        DimCertificate cert;
        cert.d = d;
        cert.require_ideal = require_ideal;

        std::optional<Subspace<RationalField>> w = coordinate_witness(a, d, require_ideal);

        std::vector<FpScan> scans;
        for (const auto& pc : pcs) {
            if (!pc.alg) {
                FpScan s;
                s.p = pc.p;
                s.bad_prime = true;
                scans.push_back(std::move(s));
                continue;
            }
            scans.push_back(fp_abelian_scan(*pc.alg, d, require_ideal, opts.enum_cap,
                                            opts.max_fp_samples));
        }
        for (const auto& s : scans) {
            if (s.bad_prime) cert.skipped_primes.push_back(s.p);
            if (s.skipped_cap) cert.skipped_primes.push_back(s.p);
        }

        if (!w) {
            // Lift small-entry F_p witnesses, largest prime first (fewest
            // integer candidates per residue).
            for (auto it = scans.rbegin(); it != scans.rend() && !w; ++it) {
                if (!it->ran || it->hits == 0) continue;
                for (int bound : opts.lift_bounds) {
                    for (const auto& sample : it->samples) {
                        w = lift_fp_witness(a, sample, require_ideal, bound,
                                            opts.max_lift_candidates);
                        if (w) break;
                    }
                    if (w) break;
                }
            }
        }

        if (w) {
            // A rational witness must reduce to an F_p witness at every
            // good prime; a clean scan with zero hits signals a bug.
            for (const auto& s : scans)
                if (s.ran && s.hits == 0)
                    throw error("F_" + std::to_string(s.p) + " scan found no dim-" +
                                std::to_string(d) + " " + mode +
                                " witness although one exists over Q (" + a.name() + ")");
            m.value = d;
            m.witness.kind = Witness::Kind::Rational;
            m.witness.rational = *w;
            m.lower_grade = "rational-witness";
            m.certified_lower = true;
            break;
        }

        if (opts.use_groebner) {
            UpperBoundOutcome ub = certify_upper_bound(a, d, require_ideal, opts.budget);
            if (ub.status == UpperBoundOutcome::Status::InfeasibleAll) {
                cert.method = CertMethod::GroebnerInfeasible;
                cert.patterns = ub.patterns_checked;
                for (const auto& s : scans)
                    if (s.ran && s.hits > 0)
                        anomalies.push_back("dim " + std::to_string(d) + " (" + mode + "): F_" +
                                            std::to_string(s.p) + " has " + std::to_string(s.hits) +
                                            " witnesses although none exist over C"
                                            " (parameter collision mod p)");
                m.certificates.push_back(std::move(cert));
                continue;
            }
            if (ub.status == UpperBoundOutcome::Status::Feasible) {
                m.value = d;
                if (ub.point_witness) {
                    if (!a.is_abelian(*ub.point_witness) ||
                        (require_ideal && !a.is_ideal(*ub.point_witness)))
                        throw error("rational point from feasibility solve failed re-verification");
                    m.witness.kind = Witness::Kind::Rational;
                    m.witness.rational = *ub.point_witness;
                    m.lower_grade = "rational-witness";
                } else {
                    m.witness = quad_ext_witness_search(a, d, require_ideal, opts);
                    m.lower_grade = "groebner-feasible";
                }
                m.certified_lower = true;
                break;
            }
            cert.note = "groebner budget exhausted; " + ub.note;
        }

        // Probabilistic path: no certificate over C available. A rational
        // witness would reduce to a witness at every clean prime, so a
        // single empty clean scan rules out witnesses over Q; hits at
        // other primes are then reduction artifacts, recorded as
        // anomalies. Only when every clean scan finds hits (and none
        // lift) is the dimension reported, with explicitly uncertified
        // grade.
        bool any_hits = false, any_clean_empty = false;
        int clean = 0;
        for (const auto& s : scans) {
            if (s.ran) {
                ++clean;
                if (s.hits > 0) any_hits = true;
                else {
                    any_clean_empty = true;
                    cert.primes.push_back(s.p);
                }
            }
        }
        if (clean > 0 && any_clean_empty) {
            cert.method = CertMethod::ExhaustiveFp;
            for (const auto& s : scans)
                if (s.ran && s.hits > 0)
                    anomalies.push_back("dim " + std::to_string(d) + " (" + mode + "): " +
                                        std::to_string(s.hits) + " unliftable F_" +
                                        std::to_string(s.p) +
                                        " witnesses while other primes see none");
            m.certificates.push_back(std::move(cert));
            continue;
        }
        if (any_hits) {
            m.value = d;
            m.lower_grade = "fp-evidence";
            m.certified_lower = false;
            for (const auto& s : scans)
                if (s.ran && s.hits > 0 && !s.samples.empty()) {
                    m.witness.kind = Witness::Kind::None;
                    m.witness.description =
                        "mod " + std::to_string(s.p) + ": " + s.samples.front().str();
                    break;
                }
            break;
        }
        cert.method = CertMethod::Unknown;
        m.certificates.push_back(std::move(cert));
    }
    if (m.value == 0) {
        // The zero subspace is an abelian ideal; dimension 0 needs no witness.
        m.lower_grade = "rational-witness";
        m.certified_lower = true;
        m.witness.kind = Witness::Kind::Rational;
        m.witness.rational = a.zero_subspace();
    }
    m.certified_upper = upstream_certified;
    for (const auto& c : m.certificates)
        if (c.method != CertMethod::GroebnerInfeasible) m.certified_upper = false;
    return m;
}

} // namespace

std::optional<Subspace<RationalField>> certify_lower_bound(const Algebra<RationalField>& a, int d,
                                                           bool require_ideal,
                                                           const SearchOptions& opts) {
    a.require_valid();
    if (d == 0) return a.zero_subspace();
    if (auto w = coordinate_witness(a, d, require_ideal)) return w;
    // F_p witnesses with small-integer lifts, largest prime first.
    std::vector<uint32_t> primes = opts.primes;
    std::sort(primes.rbegin(), primes.rend());
    for (uint32_t p : primes) {
        std::optional<Algebra<PrimeField>> ap;
        try {
            ap = reduce_mod_p(a, p);
        } catch (const usage_error&) {
            continue;
        }
        FpScan scan = fp_abelian_scan(*ap, d, require_ideal, opts.enum_cap, opts.max_fp_samples);
        if (!scan.ran) continue;
        for (int bound : opts.lift_bounds)
            for (const auto& sample : scan.samples)
                if (auto w = lift_fp_witness(a, sample, require_ideal, bound,
                                             opts.max_lift_candidates))
                    return w;
    }
    if (opts.use_groebner) {
        UpperBoundOutcome ub = certify_upper_bound(a, d, require_ideal, opts.budget);
        if (ub.point_witness && a.is_abelian(*ub.point_witness) &&
            (!require_ideal || a.is_ideal(*ub.point_witness)))
            return ub.point_witness;
    }
    return std::nullopt;
}

template <class F>
std::vector<Subspace<F>> ideals_of_dim(const Algebra<F>& a, int d) {
    a.require_valid();
    const int n = a.dim();
    std::vector<Subspace<F>> out;
    if (d < 0 || d > n) return out;
    if (d == 0) {
        out.push_back(a.zero_subspace());
        return out;
    }
    if (d == n) {
        out.push_back(a.full_subspace());
        return out;
    }
    if (a.field().size() == 0) throw usage_error("ideal recursion needs a finite field");
    Subspace<F> cen = a.center();
    const int c = cen.dim();
    // Every nonzero ideal of a nilpotent algebra contains a central line;
    // rational Zinbiel algebras and their reductions are always nilpotent.
    if (c == 0)
        throw usage_error("ideal enumeration requires a nonzero centre (nilpotent input)");
    std::set<Subspace<F>> found;
    const uint64_t q = a.field().size();
    // Canonical line representatives inside the centre: leading
    // coefficient 1, zeros before it.
    for (int lead = 0; lead < c; ++lead) {
        const int tail = c - 1 - lead;
        uint64_t combos = 1;
        for (int t = 0; t < tail; ++t) combos *= q;
        for (uint64_t code = 0; code < combos; ++code) {
            Vec<F> v = zero_vec(a.field(), n);
            add_scaled(v, a.field().one(), cen.basis()[static_cast<std::size_t>(lead)]);
            uint64_t rest = code;
            for (int t = 0; t < tail; ++t) {
                auto coeff = a.field().element_at(rest % q);
                rest /= q;
                add_scaled(v, coeff, cen.basis()[static_cast<std::size_t>(lead + 1 + t)]);
            }
            Subspace<F> line = a.span_of({v});
            auto quo = a.quotient(line);
            for (const auto& j : ideals_of_dim(quo.algebra, d - 1)) {
                Mat<F> lifted = line.basis();
                for (const auto& row : j.basis()) lifted.push_back(quo.lift(row));
                Subspace<F> ideal = a.span_of(std::move(lifted));
                if (ideal.dim() != d) continue;
                if (!a.is_ideal(ideal)) continue;
                found.insert(std::move(ideal));
            }
        }
    }
    out.assign(found.begin(), found.end());
    return out;
}

template std::vector<Subspace<PrimeField>> ideals_of_dim(const Algebra<PrimeField>&, int);
template std::vector<Subspace<RationalField>> ideals_of_dim(const Algebra<RationalField>&, int);

std::vector<Subspace<PrimeField>> abelian_ideals_of_dim_fp(const Algebra<PrimeField>& a, int d) {
    std::vector<Subspace<PrimeField>> out;
    for (auto& i : ideals_of_dim(a, d))
        if (a.is_abelian(i)) out.push_back(std::move(i));
    return out;
}

IdealEnumeration enumerate_maximal_abelian_ideals(const Algebra<RationalField>& a, int d,
                                                  const SearchOptions& opts) {
    a.require_valid();
    IdealEnumeration res;
    res.d = d;
    std::vector<std::pair<uint32_t, std::vector<Subspace<PrimeField>>>> lists;
    for (uint32_t p : opts.primes) {
        try {
            Algebra<PrimeField> ap = reduce_mod_p(a, p);
            lists.emplace_back(p, abelian_ideals_of_dim_fp(ap, d));
        } catch (const usage_error&) {
            res.note += "p=" + std::to_string(p) + " skipped (bad prime); ";
        }
    }
    if (lists.empty()) {
        res.note += "no usable primes";
        return res;
    }
    bool agree = true;
    for (auto& [p, l] : lists) {
        res.counts[p] = l.size();
        if (l.size() != lists.front().second.size()) agree = false;
    }
    // Lift the largest prime's list.
    auto& source = lists.back();
    std::set<Subspace<RationalField>> lifted;
    for (const auto& w : source.second) {
        std::optional<Subspace<RationalField>> l;
        for (int bound : opts.lift_bounds) {
            l = lift_fp_witness(a, w, true, bound, opts.max_lift_candidates);
            if (l) break;
        }
        if (l) lifted.insert(*l);
    }
    if (agree && lifted.size() == source.second.size()) {
        res.resolved = true;
        res.exact.assign(lifted.begin(), lifted.end());
    } else {
        res.note += agree ? "counts agree but some witnesses did not lift with small entries"
                          : "witness counts disagree across primes";
        for (auto& [p, l] : lists) {
            auto& bucket = res.per_prime[p];
            for (auto& w : l) bucket.push_back(w.str());
        }
        for (auto& w : lifted) res.exact.push_back(w);
    }
    return res;
}

AlphaBetaResult alpha_beta(const Algebra<RationalField>& a, const SearchOptions& opts) {
    a.require_valid();
    AlphaBetaResult res;
    res.algebra = a.name();
    res.n = a.dim();

    std::vector<PrimeCtx> pcs;
    for (uint32_t p : opts.primes) {
        PrimeCtx ctx;
        ctx.p = p;
        try {
            ctx.alg = reduce_mod_p(a, p);
        } catch (const usage_error&) {
            ctx.alg = std::nullopt;
        }
        pcs.push_back(std::move(ctx));
    }

    res.alpha = solve_mode(a, pcs, false, res.n, opts, res.anomalies, true);
    // No abelian subalgebra of dimension d also rules out abelian ideals of
    // dimension d, so the beta scan starts at alpha and inherits its
    // upper-bound grade.
    res.beta = solve_mode(a, pcs, true, res.alpha.value, opts, res.anomalies,
                          res.alpha.certified_upper);
    if (res.beta.value > res.alpha.value)
        throw error("internal: beta exceeds alpha for " + a.name());
    if (opts.collect_ideals)
        res.maximal_abelian_ideals = enumerate_maximal_abelian_ideals(a, res.beta.value, opts);
    return res;
}

} // namespace zinbiel

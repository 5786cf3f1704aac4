#pragma once

#include <chrono>
#include <optional>
#include <set>
#include <vector>

#include "zinbiel/polynomial.hpp"

namespace zinbiel {

struct GroebnerBudget {
    uint64_t max_pairs = 50000;
    double max_seconds = 60.0;
};

/// Normal form of f modulo G: no term of the result is divisible by any
/// leading monomial of G.
inline Polynomial gb_reduce(Polynomial f, const std::vector<Polynomial>& g) {
    Polynomial rem(f.nvars());
    while (!f.is_zero()) {
        bool hit = false;
        for (const auto& gi : g) {
            if (gi.is_zero()) continue;
            if (gi.lm().divides(f.lm())) {
                f = f - gi.times_term(f.lm() / gi.lm(), f.lc() / gi.lc());
                hit = true;
                break;
            }
        }
        if (!hit) {
            Polynomial head = Polynomial::constant(f.nvars(), f.lc()).times_term(f.lm(), Rational(1));
            rem = rem + head;
            f = f - head;
        }
    }
    return rem;
}

inline Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
    Monomial l = Monomial::lcm(f.lm(), g.lm());
    return f.times_term(l / f.lm(), f.lc().inv()) - g.times_term(l / g.lm(), g.lc().inv());
}

struct GroebnerResult {
    std::vector<Polynomial> basis; // reduced basis, descending leading monomials
    bool completed = false;        // false: budget ran out, basis is partial
    bool closure_verified = false; // all S-polynomials reduce to zero
    uint64_t pairs_processed = 0;

    bool is_unit_ideal() const {
        for (const auto& g : basis)
            if (!g.is_zero() && g.is_constant()) return true;
        return false;
    }
};

/// Buchberger's algorithm with degrevlex, normal pair selection (minimal
/// lcm degree) and the coprime-lead / chain pair eliminations. Content is
/// stripped after every reduction. Deterministic for identical input.
inline GroebnerResult buchberger(std::vector<Polynomial> input, const GroebnerBudget& budget = {},
                                 bool verify_closure = true) {
    GroebnerResult res;
    if (input.empty()) throw usage_error("empty generating set");
    const int nvars = input[0].nvars();
    auto deadline = std::chrono::steady_clock::now() +
                    std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                        std::chrono::duration<double>(budget.max_seconds));

    std::vector<Polynomial> g;
    for (auto& f : input)
        if (!f.is_zero()) g.push_back(f.primitive());
    if (g.empty()) g.push_back(Polynomial(nvars)); // zero ideal

    struct Pair {
        std::size_t i, j;
        Monomial l;
        int deg;
    };
    auto pair_before = [](const Pair& a, const Pair& b) {
        if (a.deg != b.deg) return a.deg < b.deg;
        int c = degrevlex_cmp(a.l, b.l);
        if (c != 0) return c < 0;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    };

    std::vector<Pair> queue;
    auto push_pairs = [&](std::size_t jnew) {
        for (std::size_t i = 0; i < jnew; ++i) {
            if (g[i].is_zero()) continue;
            Monomial l = Monomial::lcm(g[i].lm(), g[jnew].lm());
            queue.push_back({i, jnew, l, l.degree()});
        }
    };
    for (std::size_t j = 1; j < g.size(); ++j) push_pairs(j);

    std::set<std::pair<std::size_t, std::size_t>> done;
    while (!queue.empty()) {
        if (res.pairs_processed >= budget.max_pairs || std::chrono::steady_clock::now() > deadline) {
            res.basis = g;
            res.completed = false;
            return res;
        }
        auto it = std::min_element(queue.begin(), queue.end(), pair_before);
        Pair pr = *it;
        queue.erase(it);
        ++res.pairs_processed;
        done.insert({pr.i, pr.j});

        if (g[pr.i].is_zero() || g[pr.j].is_zero()) continue;
        // First criterion: coprime leading monomials.
        if (g[pr.i].lm().coprime(g[pr.j].lm())) continue;
        // Chain criterion: some g[k] divides the lcm and both (i,k), (j,k)
        // are already handled.
        bool skip = false;
        for (std::size_t k = 0; k < g.size() && !skip; ++k) {
            if (k == pr.i || k == pr.j || g[k].is_zero()) continue;
            if (!g[k].lm().divides(pr.l)) continue;
            auto key = [&](std::size_t a, std::size_t b) {
                return std::make_pair(std::min(a, b), std::max(a, b));
            };
            if (done.count(key(pr.i, k)) && done.count(key(pr.j, k))) skip = true;
        }
        if (skip) continue;

        Polynomial s = gb_reduce(s_polynomial(g[pr.i], g[pr.j]), g);
        if (s.is_zero()) continue;
        g.push_back(s.primitive());
        push_pairs(g.size() - 1);
    }

    // Minimalize: drop generators whose lead is divisible by another lead.
    std::vector<Polynomial> minimal;
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (g[i].is_zero()) continue;
        bool redundant = false;
        for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
            if (i == j || g[j].is_zero()) continue;
            if (g[j].lm().divides(g[i].lm()) && g[j].lm() != g[i].lm()) redundant = true;
            if (g[j].lm() == g[i].lm() && j < i) redundant = true;
        }
        if (!redundant) minimal.push_back(g[i]);
    }
    // Fully reduce each element against the others.
    std::vector<Polynomial> reduced;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Polynomial> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        Polynomial r = others.empty() ? minimal[i] : gb_reduce(minimal[i], others);
        if (!r.is_zero()) reduced.push_back(r.primitive());
    }
    std::sort(reduced.begin(), reduced.end(), [](const Polynomial& a, const Polynomial& b) {
        return degrevlex_cmp(a.lm(), b.lm()) > 0;
    });
    res.basis = std::move(reduced);
    res.completed = true;

    if (verify_closure) {
        res.closure_verified = true;
        for (std::size_t i = 0; i < res.basis.size() && res.closure_verified; ++i)
            for (std::size_t j = i + 1; j < res.basis.size(); ++j) {
                if (!gb_reduce(s_polynomial(res.basis[i], res.basis[j]), res.basis).is_zero()) {
                    res.closure_verified = false;
                    break;
                }
            }
        if (!res.closure_verified) throw error("emitted basis failed the S-polynomial closure check");
    }
    return res;
}

enum class Feasibility { Infeasible, Feasible, Unknown };

struct FeasibilityReport {
    Feasibility status = Feasibility::Unknown;
    std::optional<std::vector<Rational>> point; // full assignment when found
    GroebnerResult gb;
    uint64_t pairs_processed = 0;
    std::string note;
};

namespace detail {

// Rational roots of a univariate (in `var`) polynomial via the usual
// divisor candidates; divisor enumeration is capped, so the list may be
// incomplete for huge coefficients (absence is never used as a proof).
inline std::vector<Rational> rational_roots(const Polynomial& f, int var) {
    std::vector<Rational> roots;
    Polynomial p = f.primitive();
    int deg = p.degree_in(var);
    std::vector<Rational> coeff(static_cast<std::size_t>(deg) + 1, Rational(0));
    for (const auto& [m, c] : p.terms()) coeff[m.e[static_cast<std::size_t>(var)]] = c;
    // Strip powers of x (root zero).
    int low = 0;
    while (low <= deg && coeff[static_cast<std::size_t>(low)].is_zero()) ++low;
    if (low > 0) roots.push_back(Rational(0));
    if (low > deg) return roots;

    mpz_class a0 = coeff[static_cast<std::size_t>(low)].num();
    mpz_class an = coeff[static_cast<std::size_t>(deg)].num();
    auto divisors = [](mpz_class v) {
        std::vector<mpz_class> out;
        v = abs(v);
        if (v == 0) return out;
        for (mpz_class d = 1; d * d <= v && d < 100000; ++d) {
            if (v % d == 0) {
                out.push_back(d);
                out.push_back(v / d);
            }
        }
        return out;
    };
    auto eval1 = [&](const Rational& x) {
        Rational acc(0), pw(1);
        for (int k = 0; k <= deg; ++k) {
            acc += coeff[static_cast<std::size_t>(k)] * pw;
            pw = pw * x;
        }
        return acc;
    };
    for (const auto& pnum : divisors(a0))
        for (const auto& qden : divisors(an)) {
            for (int s = -1; s <= 1; s += 2) {
                Rational cand(s * pnum, qden);
                if (eval1(cand).is_zero() &&
                    std::find(roots.begin(), roots.end(), cand) == roots.end())
                    roots.push_back(cand);
            }
        }
    std::sort(roots.begin(), roots.end());
    return roots;
}

// Back-substitution over univariate members of the basis; returns a full
// assignment satisfying `polys` if the search succeeds.
inline bool back_substitute(std::vector<Polynomial> polys, std::vector<std::optional<Rational>>& assign,
                            int depth) {
    if (depth > 64) return false;
    const int nv = static_cast<int>(assign.size());
    // Drop zeros; fail on nonzero constants.
    std::vector<Polynomial> live;
    for (auto& p : polys) {
        if (p.is_zero()) continue;
        if (p.is_constant()) return false;
        live.push_back(std::move(p));
    }
    if (live.empty()) {
        for (auto& a : assign)
            if (!a) a = Rational(0);
        return true;
    }
    // Find a univariate member.
    int var = -1;
    std::size_t which = live.size();
    for (std::size_t i = 0; i < live.size(); ++i) {
        int seen = -1;
        bool multi = false;
        for (int v = 0; v < nv; ++v)
            if (live[i].uses_var(v)) {
                if (seen >= 0) { multi = true; break; }
                seen = v;
            }
        if (!multi && seen >= 0) {
            if (which == live.size() || live[i].degree() < live[which].degree()) {
                which = i;
                var = seen;
            }
        }
    }
    if (var < 0) return false; // no triangular entry point
    for (const Rational& r : rational_roots(live[which], var)) {
        std::vector<Polynomial> next;
        next.reserve(live.size());
        for (const auto& p : live)
            next.push_back(p.substituted(var, Polynomial::constant(p.nvars(), r)));
        auto saved = assign[static_cast<std::size_t>(var)];
        assign[static_cast<std::size_t>(var)] = r;
        if (back_substitute(next, assign, depth + 1)) return true;
        assign[static_cast<std::size_t>(var)] = saved;
    }
    return false;
}

} // namespace detail

/// Decide whether a polynomial system has a common zero over any
/// algebraically closed extension. "Infeasible" means the reduced basis
/// is {1}; "Feasible" reports a rational point when back-substitution
/// finds one. Linear equations with constant coefficient are eliminated
/// first, which shrinks most inputs drastically.
inline FeasibilityReport solve_feasibility(std::vector<Polynomial> system, const GroebnerBudget& budget = {}) {
    FeasibilityReport rep;
    if (system.empty()) throw usage_error("empty system");
    const int nv = system[0].nvars();

    // (var, expression) stack in elimination order.
    std::vector<std::pair<int, Polynomial>> eliminated;
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < system.size(); ++i) {
            const Polynomial& f = system[i];
            if (f.is_zero()) continue;
            if (f.is_constant()) {
                rep.status = Feasibility::Infeasible;
                rep.note = "constant contradiction";
                return rep;
            }
            // Look for c*x_v + rest with rest free of x_v.
            for (const auto& [m, c] : f.terms()) {
                if (m.degree() != 1) continue;
                int v = -1;
                for (int t = 0; t < nv; ++t)
                    if (m.e[static_cast<std::size_t>(t)] == 1) { v = t; break; }
                Polynomial rest = f - Polynomial::constant(nv, c).times_term(m, Rational(1));
                if (rest.uses_var(v)) continue;
                Polynomial expr = rest.scaled(-c.inv()); // x_v = expr
                eliminated.emplace_back(v, expr);
                std::vector<Polynomial> next;
                for (std::size_t j = 0; j < system.size(); ++j) {
                    if (j == i) continue;
                    next.push_back(system[j].substituted(v, expr));
                }
                system = std::move(next);
                changed = true;
                break;
            }
            if (changed) break;
        }
    }

    auto reconstruct = [&](std::vector<Rational>& point) {
        for (auto it = eliminated.rbegin(); it != eliminated.rend(); ++it)
            point[static_cast<std::size_t>(it->first)] = it->second.eval(point);
    };

    std::vector<Polynomial> live;
    for (auto& f : system)
        if (!f.is_zero()) live.push_back(f);
    if (live.empty()) {
        rep.status = Feasibility::Feasible;
        std::vector<Rational> point(static_cast<std::size_t>(nv), Rational(0));
        reconstruct(point);
        rep.point = std::move(point);
        return rep;
    }

    rep.gb = buchberger(live, budget);
    rep.pairs_processed = rep.gb.pairs_processed;
    if (!rep.gb.completed) {
        rep.status = Feasibility::Unknown;
        rep.note = "budget exhausted";
        return rep;
    }
    if (rep.gb.is_unit_ideal()) {
        rep.status = Feasibility::Infeasible;
        return rep;
    }
    rep.status = Feasibility::Feasible;
    std::vector<std::optional<Rational>> assign(static_cast<std::size_t>(nv));
    if (detail::back_substitute(rep.gb.basis, assign, 0)) {
        std::vector<Rational> point;
        point.reserve(assign.size());
        for (auto& a : assign) point.push_back(*a);
        reconstruct(point);
        // Guard: the point must satisfy the original live system.
        bool ok = true;
        for (const auto& f : live)
            if (!f.eval(point).is_zero()) { ok = false; break; }
        if (ok) rep.point = std::move(point);
    }
    return rep;
}

} // namespace zinbiel

#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "zinbiel/rational.hpp"

namespace zinbiel {

/// Monomial as an exponent vector over a fixed variable count.
struct Monomial {
    std::vector<uint16_t> e;

    explicit Monomial(int nvars = 0) : e(static_cast<std::size_t>(nvars), 0) {}

    int nvars() const { return static_cast<int>(e.size()); }
    int degree() const {
        int d = 0;
        for (auto x : e) d += x;
        return d;
    }
    bool is_one() const { return degree() == 0; }

    static Monomial var(int nvars, int i, int pow = 1) {
        Monomial m(nvars);
        m.e[static_cast<std::size_t>(i)] = static_cast<uint16_t>(pow);
        return m;
    }

    bool divides(const Monomial& o) const {
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > o.e[i]) return false;
        return true;
    }
    Monomial operator*(const Monomial& o) const {
        Monomial m = *this;
        for (std::size_t i = 0; i < e.size(); ++i) m.e[i] = static_cast<uint16_t>(m.e[i] + o.e[i]);
        return m;
    }
    // Exact quotient; caller guarantees divisibility.
    Monomial operator/(const Monomial& o) const {
        Monomial m = *this;
        for (std::size_t i = 0; i < e.size(); ++i) m.e[i] = static_cast<uint16_t>(m.e[i] - o.e[i]);
        return m;
    }
    static Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial m = a;
        for (std::size_t i = 0; i < m.e.size(); ++i) m.e[i] = std::max(m.e[i], b.e[i]);
        return m;
    }
    bool coprime(const Monomial& o) const {
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] && o.e[i]) return false;
        return true;
    }

    bool operator==(const Monomial& o) const { return e == o.e; }
    bool operator!=(const Monomial& o) const { return e != o.e; }
};

/// Degrevlex: higher total degree wins; ties broken by the reverse
/// lexicographic rule (last differing exponent smaller wins).
inline int degrevlex_cmp(const Monomial& a, const Monomial& b) {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t i = a.e.size(); i-- > 0;) {
        if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? -1 : 1;
    }
    return 0;
}

inline bool degrevlex_less(const Monomial& a, const Monomial& b) { return degrevlex_cmp(a, b) < 0; }

/// Polynomial over Q with terms kept strictly descending in degrevlex;
/// no zero coefficients; canonical form is unique.
class Polynomial {
public:
    using Term = std::pair<Monomial, Rational>;

    Polynomial() = default;
    explicit Polynomial(int nvars) : nvars_(nvars) {}

    static Polynomial constant(int nvars, const Rational& c) {
        Polynomial p(nvars);
        if (!c.is_zero()) p.terms_.emplace_back(Monomial(nvars), c);
        return p;
    }
    static Polynomial variable(int nvars, int i) {
        Polynomial p(nvars);
        p.terms_.emplace_back(Monomial::var(nvars, i), Rational(1));
        return p;
    }
    static Polynomial from_terms(int nvars, std::vector<Term> soup) {
        Polynomial p(nvars);
        std::sort(soup.begin(), soup.end(),
                  [](const Term& a, const Term& b) { return degrevlex_cmp(a.first, b.first) > 0; });
        for (auto& t : soup) {
            if (!p.terms_.empty() && p.terms_.back().first == t.first)
                p.terms_.back().second += t.second;
            else
                p.terms_.push_back(std::move(t));
            if (p.terms_.back().second.is_zero()) p.terms_.pop_back();
        }
        return p;
    }

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || terms_[0].first.is_one(); }
    const std::vector<Term>& terms() const { return terms_; }
    const Monomial& lm() const { return terms_.front().first; }
    const Rational& lc() const { return terms_.front().second; }
    int degree() const { return terms_.empty() ? -1 : terms_[0].first.degree(); }

    int degree_in(int var) const {
        int d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, int(m.e[static_cast<std::size_t>(var)]));
        return d;
    }

    bool uses_var(int var) const { return degree_in(var) > 0; }

    Polynomial operator+(const Polynomial& o) const { return merged(o, false); }
    Polynomial operator-(const Polynomial& o) const { return merged(o, true); }

    Polynomial scaled(const Rational& c) const {
        Polynomial p(nvars_);
        if (c.is_zero()) return p;
        p.terms_ = terms_;
        for (auto& t : p.terms_) t.second = t.second * c;
        return p;
    }

    Polynomial times_term(const Monomial& m, const Rational& c) const {
        Polynomial p(nvars_);
        if (c.is_zero()) return p;
        p.terms_.reserve(terms_.size());
        for (const auto& [mm, cc] : terms_) p.terms_.emplace_back(mm * m, cc * c);
        return p;
    }

    Polynomial operator*(const Polynomial& o) const {
        std::vector<Term> soup;
        soup.reserve(terms_.size() * o.terms_.size());
        for (const auto& [ma, ca] : terms_)
            for (const auto& [mb, cb] : o.terms_) soup.emplace_back(ma * mb, ca * cb);
        return from_terms(nvars_, std::move(soup));
    }

    /// Substitute variable `var` by polynomial `q` (used by the linear
    /// elimination preprocessing).
    Polynomial substituted(int var, const Polynomial& q) const {
        Polynomial out(nvars_);
        for (const auto& [m, c] : terms_) {
            int k = m.e[static_cast<std::size_t>(var)];
            Monomial rest = m;
            rest.e[static_cast<std::size_t>(var)] = 0;
            Polynomial piece = Polynomial::constant(nvars_, c).times_term(rest, Rational(1));
            for (int t = 0; t < k; ++t) piece = piece * q;
            out = out + piece;
        }
        return out;
    }

    Rational eval(const std::vector<Rational>& point) const {
        Rational acc(0);
        for (const auto& [m, c] : terms_) {
            Rational t = c;
            for (std::size_t i = 0; i < m.e.size(); ++i)
                for (int k = 0; k < m.e[i]; ++k) t = t * point[i];
            acc += t;
        }
        return acc;
    }

    /// Integer-primitive scalar multiple with positive leading coefficient;
    /// applied after every reduction to control coefficient growth.
    Polynomial primitive() const {
        if (terms_.empty()) return *this;
        mpz_class den_lcm = 1, num_gcd = 0;
        for (const auto& [m, c] : terms_) {
            mpz_class d = c.den();
            mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
        }
        for (const auto& [m, c] : terms_) {
            mpz_class n = c.num() * (den_lcm / c.den());
            mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
        }
        Rational scale(den_lcm, num_gcd);
        if (lc().sign() < 0) scale = -scale;
        return scaled(scale);
    }

    Polynomial monic() const { return terms_.empty() ? *this : scaled(lc().inv()); }

    bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }
    bool operator!=(const Polynomial& o) const { return terms_ != o.terms_; }

    std::string str(const std::vector<std::string>& vars = {}) const {
        if (terms_.empty()) return "0";
        std::string out;
        for (std::size_t t = 0; t < terms_.size(); ++t) {
            const auto& [m, c] = terms_[t];
            if (t) out += c.sign() < 0 ? " - " : " + ";
            else if (c.sign() < 0) out += "-";
            Rational a = abs(c);
            bool printed = false;
            if (!a.is_one() || m.is_one()) {
                out += a.str();
                printed = true;
            }
            for (std::size_t i = 0; i < m.e.size(); ++i) {
                if (!m.e[i]) continue;
                if (printed) out += "*";
                out += i < vars.size() ? vars[i] : "x" + std::to_string(i);
                if (m.e[i] > 1) out += "^" + std::to_string(int(m.e[i]));
                printed = true;
            }
        }
        return out;
    }

private:
    Polynomial merged(const Polynomial& o, bool negate) const {
        Polynomial p(nvars_);
        std::size_t i = 0, j = 0;
        while (i < terms_.size() || j < o.terms_.size()) {
            int cmp;
            if (i == terms_.size()) cmp = -1;
            else if (j == o.terms_.size()) cmp = 1;
            else cmp = degrevlex_cmp(terms_[i].first, o.terms_[j].first);
            if (cmp > 0) {
                p.terms_.push_back(terms_[i++]);
            } else if (cmp < 0) {
                auto t = o.terms_[j++];
                if (negate) t.second = -t.second;
                p.terms_.push_back(std::move(t));
            } else {
                Rational c = negate ? terms_[i].second - o.terms_[j].second
                                    : terms_[i].second + o.terms_[j].second;
                if (!c.is_zero()) p.terms_.emplace_back(terms_[i].first, std::move(c));
                ++i, ++j;
            }
        }
        return p;
    }

    int nvars_ = 0;
    std::vector<Term> terms_;
};

/// Parse "2*x^2 - 1/2*x*y + 3" over the given variable names.
inline Polynomial parse_polynomial(const std::string& text, const std::vector<std::string>& vars) {
    std::map<std::string, int> index;
    for (std::size_t i = 0; i < vars.size(); ++i) index[vars[i]] = static_cast<int>(i);
    int nv = static_cast<int>(vars.size());
    std::vector<Polynomial::Term> soup;
    std::size_t pos = 0;
    auto skip = [&] { while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos; };
    skip();
    bool first = true;
    while (pos < text.size()) {
        int sign = 1;
        skip();
        if (text[pos] == '+' || text[pos] == '-') {
            if (text[pos] == '-') sign = -1;
            ++pos;
        } else if (!first) {
            throw parse_error(pos, "expected '+' or '-'");
        }
        first = false;
        Rational coeff(sign);
        Monomial mono(nv);
        bool any = false;
        while (true) {
            skip();
            if (pos >= text.size()) break;
            char c = text[pos];
            if (c == '*') { ++pos; continue; }
            if (std::isdigit(static_cast<unsigned char>(c))) {
                std::size_t start = pos;
                while (pos < text.size() &&
                       (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '/'))
                    ++pos;
                coeff = coeff * Rational::parse(text.substr(start, pos - start));
                any = true;
                continue;
            }
            if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                std::size_t start = pos;
                while (pos < text.size() &&
                       (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
                    ++pos;
                std::string name = text.substr(start, pos - start);
                auto it = index.find(name);
                if (it == index.end()) throw parse_error(start, "unknown variable '" + name + "'");
                int power = 1;
                skip();
                if (pos < text.size() && text[pos] == '^') {
                    ++pos;
                    skip();
                    std::size_t ps = pos;
                    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
                    if (ps == pos) throw parse_error(pos, "expected exponent");
                    power = std::stoi(text.substr(ps, pos - ps));
                }
                mono.e[static_cast<std::size_t>(it->second)] =
                    static_cast<uint16_t>(mono.e[static_cast<std::size_t>(it->second)] + power);
                any = true;
                continue;
            }
            break;
        }
        if (!any) throw parse_error(pos, "expected term");
        soup.emplace_back(std::move(mono), std::move(coeff));
        skip();
    }
    return Polynomial::from_terms(nv, std::move(soup));
}

} // namespace zinbiel

#pragma once

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "zinbiel/algebra.hpp"

namespace zinbiel {

/// Bracketed nonassociative word over named generators.
struct ExprNode;
using Expr = std::shared_ptr<const ExprNode>;

struct ExprNode {
    std::string gen; // nonempty => leaf
    Expr left, right;

    bool is_generator() const { return !gen.empty(); }
};

inline Expr make_generator(std::string name) {
    auto n = std::make_shared<ExprNode>();
    n->gen = std::move(name);
    return n;
}

inline Expr make_bracket(Expr l, Expr r) {
    auto n = std::make_shared<ExprNode>();
    n->left = std::move(l);
    n->right = std::move(r);
    return n;
}

inline std::string to_string(const Expr& e) {
    if (e->is_generator()) return e->gen;
    return "[" + to_string(e->left) + "," + to_string(e->right) + "]";
}

/// Grammar: expr := name | "[" expr "," expr "]"; names are identifiers;
/// whitespace-insensitive. Errors carry the byte offset.
class ExprParser {
public:
    static Expr parse(const std::string& text) {
        ExprParser p(text);
        Expr e = p.expr();
        p.skip_ws();
        if (p.pos_ != text.size()) throw parse_error(p.pos_, "trailing input");
        return e;
    }

private:
    explicit ExprParser(const std::string& t) : text_(t) {}

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    char peek() {
        skip_ws();
        if (pos_ >= text_.size()) throw parse_error(pos_, "unexpected end of input");
        return text_[pos_];
    }

    void expect(char c) {
        if (peek() != c) throw parse_error(pos_, std::string("expected '") + c + "'");
        ++pos_;
    }

    Expr expr() {
        char c = peek();
        if (c == '[') {
            ++pos_;
            Expr l = expr();
            expect(',');
            Expr r = expr();
            expect(']');
            return make_bracket(std::move(l), std::move(r));
        }
        return name();
    }

    Expr name() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') ++pos_;
            else break;
        }
        if (pos_ == start) throw parse_error(pos_, "expected generator name");
        return make_generator(text_.substr(start, pos_ - start));
    }

    const std::string& text_;
    std::size_t pos_ = 0;
};

inline Expr parse_expr(const std::string& text) { return ExprParser::parse(text); }

/// [g_1,[g_2,[...[g_{m-1},g_m]...]]], stored as the generator sequence.
using LeftNormedWord = std::vector<std::string>;

struct ComboTerm {
    Rational coeff;
    LeftNormedWord word;
};

/// Linear combination of left-normed words, sorted lexicographically by
/// generator sequence with coefficients combined and zeros dropped.
using LinearCombo = std::vector<ComboTerm>;

namespace detail {

inline void combo_insert(std::vector<std::pair<LeftNormedWord, Rational>>& acc,
                         LeftNormedWord w, Rational c) {
    for (auto& [word, coeff] : acc)
        if (word == w) { coeff += c; return; }
    acc.emplace_back(std::move(w), std::move(c));
}

// [u, v] for left-normed u, v. A single-generator u gives a left-normed
// word directly; otherwise [[a,t],v] = [a,[t,v]] + [a,[v,t]], the
// rewrite step from the defining identity, applied recursively.
inline std::vector<std::pair<LeftNormedWord, Rational>> combine(const LeftNormedWord& u,
                                                                const LeftNormedWord& v) {
    std::vector<std::pair<LeftNormedWord, Rational>> out;
    if (u.size() == 1) {
        LeftNormedWord w;
        w.reserve(1 + v.size());
        w.push_back(u[0]);
        w.insert(w.end(), v.begin(), v.end());
        out.emplace_back(std::move(w), Rational(1));
        return out;
    }
    LeftNormedWord tail(u.begin() + 1, u.end());
    for (int side = 0; side < 2; ++side) {
        auto inner = side == 0 ? combine(tail, v) : combine(v, tail);
        for (auto& [w, c] : inner) {
            LeftNormedWord full;
            full.reserve(1 + w.size());
            full.push_back(u[0]);
            full.insert(full.end(), w.begin(), w.end());
            combo_insert(out, std::move(full), c);
        }
    }
    return out;
}

inline std::vector<std::pair<LeftNormedWord, Rational>> normalize_rec(const Expr& e) {
    std::vector<std::pair<LeftNormedWord, Rational>> out;
    if (e->is_generator()) {
        out.emplace_back(LeftNormedWord{e->gen}, Rational(1));
        return out;
    }
    auto lhs = normalize_rec(e->left);
    auto rhs = normalize_rec(e->right);
    for (const auto& [wl, cl] : lhs)
        for (const auto& [wr, cr] : rhs)
            for (auto& [w, c] : combine(wl, wr)) combo_insert(out, std::move(w), cl * cr * c);
    return out;
}

} // namespace detail

/// Rewrite an arbitrary bracketed expression into a combination of
/// left-normed words over the same generator multiset.
inline LinearCombo left_normalize(const Expr& e) {
    auto raw = detail::normalize_rec(e);
    LinearCombo combo;
    for (auto& [w, c] : raw)
        if (!c.is_zero()) combo.push_back({c, std::move(w)});
    std::sort(combo.begin(), combo.end(),
              [](const ComboTerm& a, const ComboTerm& b) { return a.word < b.word; });
    return combo;
}

inline std::string to_string(const LinearCombo& combo) {
    if (combo.empty()) return "0";
    std::string out;
    for (std::size_t t = 0; t < combo.size(); ++t) {
        if (t) out += " + ";
        out += combo[t].coeff.str() + "*";
        const auto& w = combo[t].word;
        if (w.size() == 1) { out += w[0]; continue; }
        for (std::size_t i = 0; i + 1 < w.size(); ++i) out += "[" + w[i] + ",";
        out += w.back();
        out.append(w.size() - 1, ']');
    }
    return out;
}

/// All Catalan(m-1) bracketings of the ordered word g_1...g_m, in a fixed
/// deterministic order (ascending split position, left subtree first).
inline std::vector<Expr> enumerate_bracketings(int m, const std::string& stem = "g") {
    if (m < 1 || m > 7) throw usage_error("bracketing enumeration supports 1..7 letters");
    std::vector<std::string> names;
    for (int i = 1; i <= m; ++i) names.push_back(stem + std::to_string(i));
    // rec(lo, len) = all bracketings of names[lo..lo+len)
    std::function<std::vector<Expr>(int, int)> rec = [&](int lo, int len) {
        std::vector<Expr> out;
        if (len == 1) {
            out.push_back(make_generator(names[static_cast<std::size_t>(lo)]));
            return out;
        }
        for (int split = 1; split < len; ++split)
            for (const auto& l : rec(lo, split))
                for (const auto& r : rec(lo + split, len - split)) out.push_back(make_bracket(l, r));
        return out;
    };
    return rec(0, m);
}

template <class F>
using ExprEnv = std::map<std::string, Vec<F>>;

/// Evaluate with the bracket interpreted as the algebra product.
template <class F>
Vec<F> evaluate(const Expr& e, const Algebra<F>& a, const ExprEnv<F>& env) {
    if (e->is_generator()) {
        auto it = env.find(e->gen);
        if (it == env.end()) throw usage_error("unbound generator '" + e->gen + "'");
        return it->second;
    }
    return a.product(evaluate(e->left, a, env), evaluate(e->right, a, env));
}

template <class F>
Vec<F> evaluate(const LinearCombo& combo, const Algebra<F>& a, const ExprEnv<F>& env) {
    Vec<F> acc = zero_vec(a.field(), a.dim());
    for (const auto& term : combo) {
        Vec<F> v;
        auto it = term.word.rbegin();
        auto lookup = [&](const std::string& g) {
            auto f = env.find(g);
            if (f == env.end()) throw usage_error("unbound generator '" + g + "'");
            return f->second;
        };
        v = lookup(*it);
        for (++it; it != term.word.rend(); ++it) v = a.product(lookup(*it), v);
        add_scaled(acc, a.field().from_rational(term.coeff), v);
    }
    return acc;
}

} // namespace zinbiel

#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "zinbiel/algebra.hpp"

namespace zinbiel {

struct ProductTerm {
    int i, j, k; // 1-based: [e_i, e_j] gains c * e_k
    Rational c;
};

/// Single-relation predicate on a parameter value.
struct ParamPredicate {
    enum class Kind { Always, Eq, Neq };
    Kind kind = Kind::Always;
    Rational value;

    static ParamPredicate always() { return {}; }
    static ParamPredicate eq(Rational v) { return {Kind::Eq, std::move(v)}; }
    static ParamPredicate neq(Rational v) { return {Kind::Neq, std::move(v)}; }

    bool eval(const Rational& x) const {
        switch (kind) {
            case Kind::Always: return true;
            case Kind::Eq: return x == value;
            case Kind::Neq: return x != value;
        }
        return false;
    }

    /// True when the predicate keeps its truth value after reduction mod p.
    /// A parameter that collides with the excluded value mod p makes the
    /// reduced algebra fall into a different classification case, so such
    /// primes give no usable evidence.
    bool stable_mod_p(const Rational& x, uint32_t p) const {
        if (kind == Kind::Always) return true;
        PrimeField fp(p);
        bool exact = eval(x);
        bool reduced;
        try {
            reduced = (fp.from_rational(x) == fp.from_rational(value));
        } catch (const usage_error&) {
            return false;
        }
        if (kind == Kind::Eq) return exact == reduced;
        return exact == !reduced;
    }

    std::string str(const std::string& name) const {
        switch (kind) {
            case Kind::Always: return "";
            case Kind::Eq: return name + "=" + value.str();
            case Kind::Neq: return name + "!=" + value.str();
        }
        return "";
    }
};

struct PublishedCase {
    ParamPredicate pred;
    int alpha = -1;
    int beta = -1;
};

struct CatalogEntry {
    std::string id;
    int dim = 0;
    std::string param; // empty for non-parametric entries
    ParamPredicate domain = ParamPredicate::always();
    std::function<std::vector<ProductTerm>(const Rational&)> products;
    std::vector<PublishedCase> published;
    std::vector<Rational> samples; // {0} placeholder for non-parametric entries
    std::string source;
    int caption_center_dim = 0; // 0 = the source table states no annihilator dimension

    bool parametric() const { return !param.empty(); }

    const PublishedCase& case_for(const Rational& x) const {
        for (const auto& c : published)
            if (c.pred.eval(x)) return c;
        throw usage_error("no published case of " + id + " covers " + param + "=" + x.str());
    }
};

class Catalog {
public:
    static const Catalog& instance();

    const std::vector<CatalogEntry>& entries() const { return entries_; }
    const CatalogEntry* find(const std::string& id) const;

    Algebra<RationalField> make(const CatalogEntry& entry, const Rational& value) const;
    /// Accepts catalog ids ("Z4_8"), "example-3-1", "NF:n" and "F:n:v".
    Algebra<RationalField> get(const std::string& id, const std::map<std::string, Rational>& params = {}) const;

private:
    Catalog();
    std::vector<CatalogEntry> entries_;
};

/// The six-dimensional algebra with a 4-dimensional abelian subalgebra but
/// no 4-dimensional abelian ideal.
Algebra<RationalField> example_3_1();

/// Null-filiform algebra NF_n: [e_i,e_j] = binom(i+j-1, j) e_{i+j} for
/// 2 <= i+j <= n.
Algebra<RationalField> null_filiform(int n);

/// Filiform algebras F_n^1, F_n^2, F_n^3: the binomial products truncated
/// at i+j <= n-1; variant 2 adds [e_n,e_1]=e_{n-1}, variant 3 adds
/// [e_n,e_n]=e_{n-1}.
Algebra<RationalField> filiform(int n, int variant);

Algebra<RationalField> algebra_from_terms(int dim, const std::string& name,
                                          const std::vector<ProductTerm>& terms);

} // namespace zinbiel

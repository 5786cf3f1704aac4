#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "zinbiel/linalg.hpp"

namespace zinbiel {

/// First basis triple violating [[ei,ej],ek] = [ei,[ej,ek]] + [ei,[ek,ej]],
/// with both sides. Indices are 1-based.
template <class F>
struct IdentityViolation {
    int i, j, k;
    Vec<F> lhs, rhs;
};

template <class F>
struct SeriesReport;

/// Finite-dimensional algebra given by structure constants c[i][j][k],
/// meaning [e_i, e_j] = sum_k c_ijk e_k. Construction runs the defining
/// identity check; algebras failing it stay inspectable but refuse
/// invariant computations.
template <class F>
class Algebra {
public:
    using Elem = typename F::Elem;

    Algebra() : n_(0) {}

    // Dimension 0 is allowed so that quotients by the full ideal are honest
    // zero algebras.
    Algebra(F fld, int dim, std::string name = "")
        : fld_(std::move(fld)), n_(dim), name_(std::move(name)),
          c_(static_cast<std::size_t>(dim) * dim * dim, fld_.zero()) {
        if (dim < 0) throw usage_error("algebra dimension must be nonnegative");
    }

    const F& field() const { return fld_; }
    int dim() const { return n_; }
    const std::string& name() const { return name_; }
    void set_name(std::string s) { name_ = std::move(s); }
    const std::map<std::string, Rational>& params() const { return params_; }
    void set_param(const std::string& k, const Rational& v) { params_[k] = v; }

    // 1-based indices, matching the e_1..e_n conventions of the catalog.
    void set_constant(int i, int j, int k, const Elem& v) {
        if (finalized_) throw usage_error("algebra already finalized");
        at(i - 1, j - 1, k - 1) = v;
    }
    const Elem& constant(int i, int j, int k) const { return at(i - 1, j - 1, k - 1); }

    /// Runs the identity check and freezes the tensor.
    void finalize() {
        violation_ = find_violation();
        finalized_ = true;
    }
    bool finalized() const { return finalized_; }
    bool is_zinbiel() const { return finalized_ && !violation_.has_value(); }
    const std::optional<IdentityViolation<F>>& violation() const { return violation_; }

    void require_valid() const {
        if (!finalized_) throw usage_error("algebra not finalized");
        if (violation_)
            throw usage_error("algebra '" + name_ + "' violates the defining identity at basis triple (" +
                              std::to_string(violation_->i) + "," + std::to_string(violation_->j) + "," +
                              std::to_string(violation_->k) + ")");
    }

    /// [e_i, e_j] as a coordinate vector (0-based arguments).
    Vec<F> basis_product(int i, int j) const {
        Vec<F> v(static_cast<std::size_t>(n_), fld_.zero());
        for (int k = 0; k < n_; ++k) v[static_cast<std::size_t>(k)] = at(i, j, k);
        return v;
    }

    /// Bilinear product of two coordinate vectors.
    Vec<F> product(const Vec<F>& x, const Vec<F>& y) const {
        if (static_cast<int>(x.size()) != n_ || static_cast<int>(y.size()) != n_)
            throw usage_error("vector dimension mismatch");
        Vec<F> out(static_cast<std::size_t>(n_), fld_.zero());
        for (int i = 0; i < n_; ++i) {
            if (x[static_cast<std::size_t>(i)].is_zero()) continue;
            for (int j = 0; j < n_; ++j) {
                if (y[static_cast<std::size_t>(j)].is_zero()) continue;
                auto xy = x[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(j)];
                for (int k = 0; k < n_; ++k) {
                    const auto& c = at(i, j, k);
                    if (!c.is_zero())
                        out[static_cast<std::size_t>(k)] = out[static_cast<std::size_t>(k)] + xy * c;
                }
            }
        }
        return out;
    }

    Subspace<F> zero_subspace() const { return Subspace<F>(fld_, n_); }

    Subspace<F> full_subspace() const {
        Mat<F> rows;
        for (int i = 0; i < n_; ++i) rows.push_back(unit_vec(fld_, n_, i));
        return Subspace<F>::span(fld_, n_, std::move(rows));
    }

    Subspace<F> span_of(Mat<F> vectors) const { return Subspace<F>::span(fld_, n_, std::move(vectors)); }

    /// Span of all pairwise products of basis vectors of U and V, in RREF.
    Subspace<F> subspace_product(const Subspace<F>& u, const Subspace<F>& v) const {
        Mat<F> prods;
        for (const auto& a : u.basis())
            for (const auto& b : v.basis()) prods.push_back(product(a, b));
        return span_of(std::move(prods));
    }

    bool is_subalgebra(const Subspace<F>& u) const {
        for (const auto& a : u.basis())
            for (const auto& b : u.basis())
                if (!u.contains(product(a, b))) return false;
        return true;
    }

    bool is_abelian(const Subspace<F>& u) const {
        for (const auto& a : u.basis())
            for (const auto& b : u.basis())
                if (!is_zero_vec<F>(product(a, b))) return false;
        return true;
    }

    bool is_abelian() const { return is_abelian(full_subspace()); }

    bool is_ideal(const Subspace<F>& u) const {
        for (int i = 0; i < n_; ++i) {
            Vec<F> e = unit_vec(fld_, n_, i);
            for (const auto& a : u.basis()) {
                if (!u.contains(product(e, a))) return false;
                if (!u.contains(product(a, e))) return false;
            }
        }
        return true;
    }

    /// Centre = { x : [x,y] = [y,x] = 0 for all y }, via an exact linear solve.
    Subspace<F> center() const {
        require_valid();
        Mat<F> sys;
        for (int j = 0; j < n_; ++j)
            for (int k = 0; k < n_; ++k) {
                Vec<F> left(static_cast<std::size_t>(n_), fld_.zero());
                Vec<F> right(static_cast<std::size_t>(n_), fld_.zero());
                for (int i = 0; i < n_; ++i) {
                    left[static_cast<std::size_t>(i)] = at(i, j, k);
                    right[static_cast<std::size_t>(i)] = at(j, i, k);
                }
                if (!is_zero_vec<F>(left)) sys.push_back(std::move(left));
                if (!is_zero_vec<F>(right)) sys.push_back(std::move(right));
            }
        return span_of(nullspace(fld_, std::move(sys), n_));
    }

    SeriesReport<F> lower_central_series() const;
    SeriesReport<F> derived_series() const;

    bool is_nilpotent() const { return lower_central_series().vanishes(); }
    bool is_solvable() const { return derived_series().vanishes(); }

    /// Quotient by a two-sided ideal. The complement basis is the set of
    /// standard coordinates outside the ideal's pivot set, in increasing
    /// order; proj/lift are the corresponding coordinate maps.
    struct Quotient {
        Algebra<F> algebra;
        std::vector<int> complement; // 0-based ambient coordinates
        Subspace<F> ideal;

        Vec<F> project(const Vec<F>& v) const {
            Vec<F> res = ideal.reduce(v);
            Vec<F> out;
            out.reserve(complement.size());
            for (int c : complement) out.push_back(res[static_cast<std::size_t>(c)]);
            return out;
        }
        Vec<F> lift(const Vec<F>& w) const {
            Vec<F> out(static_cast<std::size_t>(ideal.ambient()), algebra.field().zero());
            for (std::size_t t = 0; t < complement.size(); ++t)
                out[static_cast<std::size_t>(complement[t])] = w[t];
            return out;
        }
    };

    Quotient quotient(const Subspace<F>& ideal) const {
        require_valid();
        if (!is_ideal(ideal)) throw usage_error("quotient requires a two-sided ideal");
        std::vector<bool> is_piv(static_cast<std::size_t>(n_), false);
        for (int p : ideal.pivots()) is_piv[static_cast<std::size_t>(p)] = true;
        Quotient q;
        q.ideal = ideal;
        for (int c = 0; c < n_; ++c)
            if (!is_piv[static_cast<std::size_t>(c)]) q.complement.push_back(c);
        int m = static_cast<int>(q.complement.size());
        Algebra<F> quot(fld_, m, name_.empty() ? "quotient" : name_ + "/ideal");
        for (int s = 0; s < m; ++s)
            for (int t = 0; t < m; ++t) {
                Vec<F> prod = basis_product(q.complement[static_cast<std::size_t>(s)],
                                            q.complement[static_cast<std::size_t>(t)]);
                Vec<F> res = ideal.reduce(prod);
                for (int k = 0; k < m; ++k)
                    quot.at(s, t, k) = res[static_cast<std::size_t>(q.complement[static_cast<std::size_t>(k)])];
            }
        quot.finalize();
        q.algebra = std::move(quot);
        return q;
    }

    /// Chain of ideals 0 = Z_0 < Z_1 < ... < Z_n = Z with dim Z_i = i,
    /// built by repeatedly extending along a central line of the current
    /// quotient. Nilpotency guarantees each quotient has nonzero centre.
    /// Non-nilpotent input is refused.
    std::optional<std::vector<Subspace<F>>> supersolvable_flag() const {
        require_valid();
        if (!is_nilpotent())
            throw usage_error("flag construction is not supported for non-nilpotent algebras");
        std::vector<Subspace<F>> flag;
        flag.push_back(zero_subspace());
        while (flag.back().dim() < n_) {
            Quotient q = quotient(flag.back());
            Subspace<F> cen = q.algebra.center();
            if (cen.dim() == 0) return std::nullopt;
            Vec<F> z = q.lift(cen.basis()[0]);
            Subspace<F> next = flag.back().sum_vector(z);
            if (next.dim() != flag.back().dim() + 1 || !is_ideal(next)) return std::nullopt;
            flag.push_back(std::move(next));
        }
        return flag;
    }

    bool is_supersolvable() const { return supersolvable_flag().has_value(); }

    Elem& at(int i, int j, int k) {
        return c_[(static_cast<std::size_t>(i) * n_ + j) * n_ + k];
    }
    const Elem& at(int i, int j, int k) const {
        return c_[(static_cast<std::size_t>(i) * n_ + j) * n_ + k];
    }

private:
    std::optional<IdentityViolation<F>> find_violation() const {
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) {
                Vec<F> eij = basis_product(i, j);
                for (int k = 0; k < n_; ++k) {
                    Vec<F> ek = unit_vec(fld_, n_, k);
                    Vec<F> lhs = product(eij, ek);
                    Vec<F> jk = basis_product(j, k);
                    Vec<F> kj = basis_product(k, j);
                    Vec<F> inner = jk;
                    for (int t = 0; t < n_; ++t)
                        inner[static_cast<std::size_t>(t)] =
                            inner[static_cast<std::size_t>(t)] + kj[static_cast<std::size_t>(t)];
                    Vec<F> rhs = product(unit_vec(fld_, n_, i), inner);
                    if (lhs != rhs) return IdentityViolation<F>{i + 1, j + 1, k + 1, lhs, rhs};
                }
            }
        return std::nullopt;
    }

    F fld_{};
    int n_;
    std::string name_;
    std::map<std::string, Rational> params_;
    std::vector<Elem> c_;
    bool finalized_ = false;
    std::optional<IdentityViolation<F>> violation_;
};

/// Descending series with a repeated final term witnessing stabilization.
template <class F>
struct SeriesReport {
    enum class Kind { LowerCentral, Derived };
    Kind kind;
    std::vector<Subspace<F>> terms;
    bool stabilized = true;
    std::optional<int> index; // least m with term_m = 0, when the series vanishes

    bool vanishes() const { return !terms.empty() && terms.back().dim() == 0; }

    std::vector<int> dims() const {
        std::vector<int> d;
        for (const auto& t : terms) d.push_back(t.dim());
        return d;
    }
};

template <class F>
static SeriesReport<F> run_series(const Algebra<F>& a, typename SeriesReport<F>::Kind kind) {
    a.require_valid();
    SeriesReport<F> rep;
    rep.kind = kind;
    Subspace<F> whole = a.full_subspace();
    rep.terms.push_back(whole);
    while (true) {
        const Subspace<F>& prev = rep.terms.back();
        Subspace<F> next = (kind == SeriesReport<F>::Kind::LowerCentral)
                               ? a.subspace_product(whole, prev)
                               : a.subspace_product(prev, prev);
        if (next.dim() == prev.dim()) {
            rep.terms.push_back(next); // repeated term witnesses stabilization
            break;
        }
        rep.terms.push_back(next);
        if (next.dim() == 0) {
            rep.terms.push_back(next);
            break;
        }
    }
    if (rep.vanishes()) rep.index = static_cast<int>(rep.terms.size()) - 1;
    return rep;
}

template <class F>
SeriesReport<F> Algebra<F>::lower_central_series() const {
    return run_series(*this, SeriesReport<F>::Kind::LowerCentral);
}

template <class F>
SeriesReport<F> Algebra<F>::derived_series() const {
    return run_series(*this, SeriesReport<F>::Kind::Derived);
}

/// Reduce a rational algebra mod p. Throws usage_error if any structure
/// constant has denominator divisible by p.
inline Algebra<PrimeField> reduce_mod_p(const Algebra<RationalField>& a, uint32_t p) {
    PrimeField fp(p);
    Algebra<PrimeField> out(fp, a.dim(), a.name() + " mod " + std::to_string(p));
    for (int i = 1; i <= a.dim(); ++i)
        for (int j = 1; j <= a.dim(); ++j)
            for (int k = 1; k <= a.dim(); ++k) {
                const Rational& c = a.constant(i, j, k);
                if (!c.is_zero()) out.set_constant(i, j, k, fp.from_rational(c));
            }
    out.finalize();
    return out;
}

inline Algebra<QuadExtField> extend_mod_p2(const Algebra<RationalField>& a, uint32_t p) {
    QuadExtField fq(p);
    Algebra<QuadExtField> out(fq, a.dim(), a.name() + " mod " + std::to_string(p) + "^2");
    for (int i = 1; i <= a.dim(); ++i)
        for (int j = 1; j <= a.dim(); ++j)
            for (int k = 1; k <= a.dim(); ++k) {
                const Rational& c = a.constant(i, j, k);
                if (!c.is_zero()) out.set_constant(i, j, k, fq.from_rational(c));
            }
    out.finalize();
    return out;
}

} // namespace zinbiel

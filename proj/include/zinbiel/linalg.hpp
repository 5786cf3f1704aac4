#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "zinbiel/errors.hpp"
#include "zinbiel/fields.hpp"

namespace zinbiel {

template <class F>
using Vec = std::vector<typename F::Elem>;

template <class F>
using Mat = std::vector<Vec<F>>;

template <class F>
Vec<F> zero_vec(const F& fld, int n) {
    return Vec<F>(static_cast<std::size_t>(n), fld.zero());
}

template <class F>
Vec<F> unit_vec(const F& fld, int n, int i) {
    Vec<F> v = zero_vec(fld, n);
    v[static_cast<std::size_t>(i)] = fld.one();
    return v;
}

template <class F>
bool is_zero_vec(const Vec<F>& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

template <class E>
void add_scaled(std::vector<E>& dst, const E& c, const std::vector<E>& src) {
    for (std::size_t i = 0; i < dst.size(); ++i) dst[i] = dst[i] + c * src[i];
}

/// In-place reduction to reduced row-echelon form. Returns pivot columns.
template <class F>
std::vector<int> rref_in_place(const F& fld, Mat<F>& m) {
    (void)fld;
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    const int cols = static_cast<int>(m[0].size());
    std::size_t row = 0;
    for (int col = 0; col < cols && row < m.size(); ++col) {
        std::size_t sel = row;
        while (sel < m.size() && m[sel][col].is_zero()) ++sel;
        if (sel == m.size()) continue;
        std::swap(m[row], m[sel]);
        auto lead = m[row][col].inv();
        for (auto& x : m[row]) x = x * lead;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || m[r][col].is_zero()) continue;
            auto c = m[r][col];
            for (int j = 0; j < cols; ++j) m[r][j] = m[r][j] - c * m[row][j];
        }
        pivots.push_back(col);
        ++row;
    }
    m.resize(row); // drop zero rows
    return pivots;
}

/// Canonical representative of a linear subspace: an RREF basis matrix.
template <class F>
class Subspace {
public:
    Subspace() : ambient_(0) {}
    Subspace(const F& fld, int ambient) : fld_(fld), ambient_(ambient) {}

    static Subspace span(const F& fld, int ambient, Mat<F> vectors) {
        Subspace s(fld, ambient);
        s.rows_ = std::move(vectors);
        s.pivots_ = rref_in_place(fld, s.rows_);
        return s;
    }

    // Rows already in RREF with the given pivot columns; no re-reduction.
    static Subspace from_rref(const F& fld, int ambient, Mat<F> rows, std::vector<int> pivots) {
        Subspace s(fld, ambient);
        s.rows_ = std::move(rows);
        s.pivots_ = std::move(pivots);
        return s;
    }

    const F& field() const { return fld_; }
    int ambient() const { return ambient_; }
    int dim() const { return static_cast<int>(rows_.size()); }
    const Mat<F>& basis() const { return rows_; }
    const std::vector<int>& pivots() const { return pivots_; }

    /// Residual of v after eliminating all pivot coordinates; zero iff
    /// v lies in the subspace.
    Vec<F> reduce(Vec<F> v) const {
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            auto c = v[static_cast<std::size_t>(pivots_[i])];
            if (!c.is_zero()) add_scaled(v, -c, rows_[i]);
        }
        return v;
    }

    bool contains(const Vec<F>& v) const { return is_zero_vec<F>(reduce(v)); }

    bool contains(const Subspace& other) const {
        for (const auto& r : other.rows_)
            if (!contains(r)) return false;
        return true;
    }

    Subspace sum(const Subspace& other) const {
        Mat<F> all = rows_;
        all.insert(all.end(), other.rows_.begin(), other.rows_.end());
        return span(fld_, ambient_, std::move(all));
    }

    Subspace sum_vector(const Vec<F>& v) const {
        Mat<F> all = rows_;
        all.push_back(v);
        return span(fld_, ambient_, std::move(all));
    }

    bool operator==(const Subspace& o) const {
        return ambient_ == o.ambient_ && pivots_ == o.pivots_ && rows_ == o.rows_;
    }
    bool operator!=(const Subspace& o) const { return !(*this == o); }

    // RREF-lexicographic order; total on subspaces of one ambient space.
    bool operator<(const Subspace& o) const {
        if (dim() != o.dim()) return dim() < o.dim();
        if (pivots_ != o.pivots_) return pivots_ < o.pivots_;
        for (std::size_t i = 0; i < rows_.size(); ++i)
            for (std::size_t j = 0; j < rows_[i].size(); ++j) {
                if (rows_[i][j] != o.rows_[i][j]) return elem_less(rows_[i][j], o.rows_[i][j]);
            }
        return false;
    }

    std::string str() const {
        std::string out = "{";
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            out += i ? "; " : "";
            out += "(";
            for (std::size_t j = 0; j < rows_[i].size(); ++j) {
                if (j) out += ",";
                out += elem_str(rows_[i][j]);
            }
            out += ")";
        }
        return out + "}";
    }

private:
    F fld_{};
    int ambient_;
    Mat<F> rows_;
    std::vector<int> pivots_;
};

/// RREF basis of the right nullspace of m (solutions of m x = 0).
template <class F>
Mat<F> nullspace(const F& fld, Mat<F> m, int cols) {
    std::vector<int> pivots = rref_in_place(fld, m);
    std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
    for (int p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;
    Mat<F> basis;
    for (int free = 0; free < cols; ++free) {
        if (is_pivot[static_cast<std::size_t>(free)]) continue;
        Vec<F> v = zero_vec(fld, cols);
        v[static_cast<std::size_t>(free)] = fld.one();
        for (std::size_t r = 0; r < m.size(); ++r)
            v[static_cast<std::size_t>(pivots[r])] = -m[r][static_cast<std::size_t>(free)];
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace zinbiel

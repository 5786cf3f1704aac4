#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "zinbiel/linalg.hpp"

namespace zinbiel {

/// Number of d-dimensional subspaces of F_q^n (Gaussian binomial), by the
/// product formula (q^n-1)...(q^{n-d+1}-1) / ((q^d-1)...(q-1)).
inline mpz_class gaussian_binomial(int n, int d, uint64_t q) {
    if (d < 0 || d > n) return 0;
    mpz_class num = 1, den = 1, qz(static_cast<unsigned long>(q));
    for (int i = 0; i < d; ++i) {
        mpz_class qn, qd;
        mpz_pow_ui(qn.get_mpz_t(), qz.get_mpz_t(), static_cast<unsigned long>(n - i));
        mpz_pow_ui(qd.get_mpz_t(), qz.get_mpz_t(), static_cast<unsigned long>(d - i));
        num *= qn - 1;
        den *= qd - 1;
    }
    return num / den;
}

/// Choice of pivot columns for a d-dimensional RREF basis in n columns,
/// together with the free entry positions (row, col). Every subspace has
/// exactly one pattern, so patterns x free-entry assignments enumerate
/// the Grassmannian without repetition.
struct EchelonPattern {
    int n = 0, d = 0;
    std::vector<int> pivots;                   // 0-based, strictly increasing
    std::vector<std::pair<int, int>> free_pos; // (row, col), col not a pivot, col > pivots[row]

    static std::vector<EchelonPattern> all(int n, int d) {
        std::vector<EchelonPattern> out;
        if (d < 0 || d > n) return out;
        std::vector<int> idx(static_cast<std::size_t>(d));
        for (int i = 0; i < d; ++i) idx[static_cast<std::size_t>(i)] = i;
        while (true) {
            EchelonPattern p;
            p.n = n;
            p.d = d;
            p.pivots = idx;
            std::vector<bool> is_piv(static_cast<std::size_t>(n), false);
            for (int c : idx) is_piv[static_cast<std::size_t>(c)] = true;
            for (int r = 0; r < d; ++r)
                for (int c = idx[static_cast<std::size_t>(r)] + 1; c < n; ++c)
                    if (!is_piv[static_cast<std::size_t>(c)]) p.free_pos.emplace_back(r, c);
            out.push_back(std::move(p));
            // next combination
            int i = d - 1;
            while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - d + i) --i;
            if (i < 0) break;
            ++idx[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < d; ++j)
                idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
        }
        return out;
    }

    template <class F>
    Subspace<F> instantiate(const F& fld, const std::vector<typename F::Elem>& values) const {
        Mat<F> rows(static_cast<std::size_t>(d), zero_vec(fld, n));
        for (int r = 0; r < d; ++r) rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(pivots[static_cast<std::size_t>(r)])] = fld.one();
        for (std::size_t t = 0; t < free_pos.size(); ++t)
            rows[static_cast<std::size_t>(free_pos[t].first)][static_cast<std::size_t>(free_pos[t].second)] = values[t];
        return Subspace<F>::from_rref(fld, n, std::move(rows), pivots);
    }
};

inline constexpr uint64_t kDefaultSubspaceCap = 10'000'000;

/// Visit every d-dimensional subspace of F^n exactly once (echelon
/// patterns x free-entry assignments). Refuses counts above the cap.
/// The callback may return false to stop early; returns false on early stop.
template <class F>
bool for_each_subspace(const F& fld, int n, int d, const std::function<bool(const Subspace<F>&)>& fn,
                       uint64_t cap = kDefaultSubspaceCap) {
    mpz_class total = gaussian_binomial(n, d, fld.size());
    if (total > mpz_class(static_cast<unsigned long>(cap)))
        throw budget_exhausted("subspace enumeration (" + fld.name() + "^" + std::to_string(n) + ", dim " +
                               std::to_string(d) + ") has " + total.get_str() +
                               " subspaces, above the cap of " + std::to_string(cap));
    if (d == 0) return fn(Subspace<F>(fld, n));
    const uint64_t q = fld.size();
    for (const auto& pat : EchelonPattern::all(n, d)) {
        const std::size_t nfree = pat.free_pos.size();
        std::vector<uint64_t> odo(nfree, 0);
        std::vector<typename F::Elem> vals(nfree, fld.zero());
        while (true) {
            for (std::size_t i = 0; i < nfree; ++i) vals[i] = fld.element_at(odo[i]);
            if (!fn(pat.instantiate(fld, vals))) return false;
            std::size_t i = 0;
            while (i < nfree && ++odo[i] == q) odo[i++] = 0;
            if (i == nfree) break;
            if (nfree == 0) break;
        }
    }
    return true;
}

} // namespace zinbiel

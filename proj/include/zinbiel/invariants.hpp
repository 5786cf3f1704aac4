#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "zinbiel/algebra.hpp"
#include "zinbiel/buchberger.hpp"
#include "zinbiel/patterns.hpp"

namespace zinbiel {

struct SearchOptions {
    std::vector<uint32_t> primes{2, 3, 5, 7};
    bool use_groebner = true;
    GroebnerBudget budget{};
    uint64_t enum_cap = kDefaultSubspaceCap;
    std::vector<uint32_t> quad_ext_primes{3, 5};
    std::vector<int> lift_bounds{2, 5};
    uint64_t max_lift_candidates = 200000;
    int max_fp_samples = 64;
    bool collect_ideals = false;
};

enum class CertMethod { None, GroebnerInfeasible, ExhaustiveFp, Unknown };

inline const char* cert_method_name(CertMethod m) {
    switch (m) {
        case CertMethod::None: return "none";
        case CertMethod::GroebnerInfeasible: return "groebner-infeasible";
        case CertMethod::ExhaustiveFp: return "exhaustive-Fp";
        case CertMethod::Unknown: return "unknown";
    }
    return "?";
}

/// Upper-bound record for one dimension: why no abelian (ideal) subspace
/// of this dimension exists. Groebner grade rules out solutions over any
/// extension field; exhaustive F_p evidence is probabilistic.
struct DimCertificate {
    int d = 0;
    bool require_ideal = false;
    CertMethod method = CertMethod::None;
    int patterns = 0;
    std::vector<uint32_t> primes;
    std::vector<uint32_t> skipped_primes;
    std::string note;
};

struct Witness {
    enum class Kind { None, Rational, QuadExt } kind = Kind::None;
    Subspace<RationalField> rational;
    std::string description; // printable form for quad-ext witnesses
    uint32_t p = 0;          // quad-ext base prime

    bool found() const { return kind != Kind::None; }
};

/// Result of one maximality search (subalgebra mode or ideal mode).
struct ModeResult {
    int value = 0;
    Witness witness;
    std::string lower_grade; // "rational-witness" | "groebner-feasible" | "fp-evidence" | "none"
    bool certified_lower = false;
    bool certified_upper = false;
    std::vector<DimCertificate> certificates; // for each dimension above value
};

/// Per-prime exhaustive evidence at one dimension.
struct FpScan {
    uint32_t p = 0;
    bool ran = false;
    bool skipped_cap = false;
    bool bad_prime = false;
    uint64_t hits = 0;
    std::vector<Subspace<PrimeField>> samples;
};

struct IdealEnumeration {
    int d = -1;
    std::map<uint32_t, uint64_t> counts;
    bool resolved = false;
    std::vector<Subspace<RationalField>> exact;
    std::map<uint32_t, std::vector<std::string>> per_prime;
    std::string note;
};

struct AlphaBetaResult {
    std::string algebra;
    int n = 0;
    ModeResult alpha, beta;
    std::vector<std::string> anomalies; // F_p hits at dimensions ruled out over C
    std::optional<IdealEnumeration> maximal_abelian_ideals;

    bool fully_certified() const {
        return alpha.certified_lower && alpha.certified_upper && beta.certified_lower &&
               beta.certified_upper;
    }
};

/// Polynomial conditions, in the pattern's free entries, for the spanned
/// subspace being abelian (and an ideal when requested).
std::vector<Polynomial> pattern_system(const Algebra<RationalField>& a, const EchelonPattern& pat,
                                       bool require_ideal);

struct UpperBoundOutcome {
    enum class Status { InfeasibleAll, Feasible, Unknown } status = Status::Unknown;
    int patterns_checked = 0;
    std::optional<Subspace<RationalField>> point_witness;
    std::string note;
};

/// Decide over C whether an abelian (ideal) subspace of dimension d
/// exists, by per-pattern feasibility certificates.
UpperBoundOutcome certify_upper_bound(const Algebra<RationalField>& a, int d, bool require_ideal,
                                      const GroebnerBudget& budget);

/// Exact witness search over Q: coordinate subspaces, lifts of F_p
/// witnesses with small integer entries, then rational points of the
/// pattern systems. Absence of a witness proves nothing.
std::optional<Subspace<RationalField>> certify_lower_bound(const Algebra<RationalField>& a, int d,
                                                           bool require_ideal,
                                                           const SearchOptions& opts = {});

/// Exhaustive F_p evidence at one dimension.
FpScan fp_abelian_scan(const Algebra<PrimeField>& a, int d, bool require_ideal, uint64_t cap,
                       int max_samples);

struct MaxAbelianFp {
    int dim = 0;
    std::vector<Subspace<PrimeField>> witnesses; // all of maximal dimension, sorted
};

/// Exact maximum over F_p by a descending-dimension exhaustive scan.
MaxAbelianFp max_abelian_dim_fp(const Algebra<PrimeField>& a, bool require_ideal,
                                uint64_t cap = kDefaultSubspaceCap, bool collect_all = true);

/// All d-dimensional two-sided ideals, by recursion over central lines
/// (every nonzero ideal of a nilpotent algebra contains one). Exact and
/// cheap even where the Grassmannian is far too large to scan.
template <class F>
std::vector<Subspace<F>> ideals_of_dim(const Algebra<F>& a, int d);

std::vector<Subspace<PrimeField>> abelian_ideals_of_dim_fp(const Algebra<PrimeField>& a, int d);

/// Lists all abelian ideals of dimension d over each good prime, lifts
/// them to Q and reports the exact list when all primes agree.
IdealEnumeration enumerate_maximal_abelian_ideals(const Algebra<RationalField>& a, int d,
                                                  const SearchOptions& opts = {});

/// Full invariant computation with certificates.
AlphaBetaResult alpha_beta(const Algebra<RationalField>& a, const SearchOptions& opts = {});

/// Bounded small-integer lift of an F_p subspace to Q, verified abelian
/// (and ideal when requested) before being returned.
std::optional<Subspace<RationalField>> lift_fp_witness(const Algebra<RationalField>& a,
                                                       const Subspace<PrimeField>& w,
                                                       bool require_ideal, int bound,
                                                       uint64_t max_candidates = 200000);

} // namespace zinbiel

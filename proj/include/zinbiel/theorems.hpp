#pragma once

#include <string>
#include <vector>

#include "zinbiel/invariants.hpp"

namespace zinbiel {

struct TheoremReport {
    std::string theorem;
    std::string algebra;
    bool hypotheses_satisfied = false;
    bool conclusion_verified = false; // meaningful only when hypotheses hold
    std::string details;
};

/// "thm2.1": an abelian subalgebra of codimension one is an ideal; hence
/// alpha = n-1 forces beta = n-1. Verified by checking every maximal
/// abelian subalgebra over each good prime, plus the rational witness.
TheoremReport check_codim1_theorem(const Algebra<RationalField>& a, const SearchOptions& opts = {});

/// "thm3.1": a supersolvable algebra with alpha = n-2 has beta in
/// {n-2, n-3}.
TheoremReport check_codim2_theorem(const Algebra<RationalField>& a, const SearchOptions& opts = {});

/// "lemma3.1": in a supersolvable algebra every maximal subalgebra has
/// codimension one; verified by an exhaustive subalgebra-lattice scan
/// over small prime fields. Restricted to dim <= 5 for cost.
TheoremReport check_maximal_subalgebra_lemma(const Algebra<RationalField>& a,
                                             const std::vector<uint32_t>& primes = {2, 3});

/// Filiform family checks for NF_n and F_n^1..F_n^3: alpha = beta, the
/// stated ideal achieves beta, and the maximal abelian ideal is unique.
/// The report records the computed value next to both readings of the
/// dimension formulas.
std::vector<TheoremReport> check_filiform_props(int n, const SearchOptions& opts = {});

} // namespace zinbiel

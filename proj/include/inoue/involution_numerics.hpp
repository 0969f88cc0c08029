#pragma once

// Numerology of an involution sigma on a minimal regular surface S of general
// type with p_g = q = 0, and the assembly of the Bloch verdict for Inoue
// surfaces.
//
// Notation: R is the divisorial fixed curve, k the number of isolated fixed
// points, t the trace of sigma on H^2(S), T = S/sigma and T^ the resolution of
// its k nodes. The identities used throughout are
//
//   k = K_S.R + 4,   t = 2 - R^2,   rho(S) + t = 2 rho(T^) - 2k,
//   k = K_S^2 + 6 chi(O_T^) - 2 chi(O_S) - 2 h^0(2K_T^ + delta^),
//
// where h^0(2K_T^ + delta^) is the sigma-anti-invariant part of H^0(2K_S).
// Kodaira dimensions are never computed: "kappa(T) = 2" is the hypothesis
// that drives the case scan, and "kappa(T) <= 1" is concluded by exclusion.

#include <algorithm>
#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "inoue/error.hpp"
#include "inoue/group_algebra.hpp"

namespace inoue {

/// Upper bound on m (k = 5 + 2m) in the case scan; reaching it is an error.
inline constexpr long kMaxScanSteps = 50;

struct InvolutionProfile {
    long K2_S = 0;
    long chi_S = 1;
    long R_sq = 0;
    long KR = 0;
    long t = 0;
    long k = 0;
    long rho_S = 0;
    long rho_That = 0;
    long chi_That = 1;
    /// h^0(2K_T^ + delta^), when the fixed-point formula yields a nonnegative integer.
    std::optional<long> h0_anti;

    bool consistent() const {
        return t == 2 - R_sq && k == KR + 4 && rho_S + t == 2 * rho_That - 2 * k;
    }
};

/// k = K^2 + 6 chi(O_T^) - 2 chi(O_S) - 2 h0_anti. Throws if the result is negative.
inline long fixed_point_count(long K2, long chi_That, long chi_S, long h0_anti) {
    if (h0_anti < 0) throw DomainError("fixed_point_count: negative h0 of the anti-invariant part");
    const long k = K2 + 6 * chi_That - 2 * chi_S - 2 * h0_anti;
    if (k < 0) {
        throw DomainError("fixed_point_count: infeasible input, k = " + std::to_string(k) +
                          " < 0 (the number of isolated fixed points is nonnegative)");
    }
    return k;
}

/// Fills t, k and rho(T^) from R^2, K.R and rho(S).
inline InvolutionProfile profile_from_R(long K2, long chi_S, long R_sq, long KR, long rho_S, long chi_That = 1) {
    InvolutionProfile p;
    p.K2_S = K2;
    p.chi_S = chi_S;
    p.R_sq = R_sq;
    p.KR = KR;
    p.rho_S = rho_S;
    p.chi_That = chi_That;
    p.t = 2 - R_sq;
    p.k = KR + 4;
    if (p.k < 0) throw DomainError("profile_from_R: K.R + 4 is negative");
    const long twice = rho_S + p.t + 2 * p.k;
    if (twice % 2 != 0) {
        throw DomainError("profile_from_R: rho(S) + t + 2k = " + std::to_string(twice) +
                          " is odd, so rho(T^) is not an integer");
    }
    p.rho_That = twice / 2;
    const long twice_h0 = K2 + 6 * chi_That - 2 * chi_S - p.k;
    if (twice_h0 >= 0 && twice_h0 % 2 == 0) p.h0_anti = twice_h0 / 2;
    return p;
}

enum class MinimalityRule {
    ForcedMinimal,  ///< k = rho(T^) - 2: T^ is minimal, so K_T^^2 >= 1
    DropAtMostTwo,  ///< k = rho(T^) - 3: at most two blow-ups, so K_T^^2 >= -1
    Excluded,
};

inline const char* to_string(MinimalityRule r) {
    switch (r) {
        case MinimalityRule::ForcedMinimal: return "forced-minimal";
        case MinimalityRule::DropAtMostTwo: return "drop-at-most-2";
        case MinimalityRule::Excluded: return "excluded";
    }
    return "?";
}

struct CaseRecord {
    long t = 0;
    long m = 0;
    long k = 0;
    long rho_That = 0;
    long K2_That = 0;
    MinimalityRule minimality_rule = MinimalityRule::Excluded;
    bool admissible = false;
    std::string note;
};

struct CaseScan {
    long K2_S = 0;
    long rho_S = 0;
    std::vector<long> admissible;  ///< sorted, no repeats
    std::vector<CaseRecord> trace;
};

namespace detail {

inline bool is_perfect_square(long n) {
    if (n < 0) return false;
    long r = 0;
    while (r * r < n) ++r;
    return r * r == n;
}

}  // namespace detail

/// Isolated fixed-point counts k compatible with kappa(S/sigma) = 2 for an
/// involution on a minimal surface of general type with p_g = q = 0 and
/// K_S^2 = K2_S (so e(S) = 12 - K2_S and rho(S) = e(S) - 2).
///
/// For each trace t in {-1, 1, 3}: R^2 = 2 - t is odd, hence K.R = 2m + 1 with
/// m >= 0 and k = 5 + 2m. rho(T^) = (rho(S) + t)/2 + k and, with
/// p_g(T^) = q(T^) = 0, e(T^) = rho(T^) + 2 and K_T^^2 = 12 - e(T^). The k
/// nodal curves on T^ bound k <= rho(T^) - 2, with equality forcing T^ minimal
/// (K^2 >= 1); when k = rho(T^) - 3 the minimal model is reached after at most
/// two blow-downs (K^2 >= -1). m increases until the bound fails.
inline CaseScan admissible_isolated_counts(long K2_S) {
    if (K2_S < 1 || K2_S > 9) throw DomainError("admissible_isolated_counts: K_S^2 must lie in 1..9");
    CaseScan scan;
    scan.K2_S = K2_S;
    scan.rho_S = 10 - K2_S;
    const long rho_S = scan.rho_S;

    for (const long t : {-1L, 1L, 3L}) {
        const long R_sq = 2 - t;
        CaseRecord base_rec;
        base_rec.t = t;
        base_rec.k = 5;
        base_rec.rho_That = (rho_S + t) % 2 == 0 ? (rho_S + t) / 2 + 5 : 0;
        base_rec.K2_That = base_rec.rho_That != 0 ? 10 - base_rec.rho_That : 0;

        // K_S is sigma-invariant, so the +1 eigenspace on H^2 is nonzero: 2 - rho_S <= t <= rho_S.
        if (t > rho_S || t < 2 - rho_S || (rho_S + t) % 2 != 0) {
            base_rec.note = "trace " + std::to_string(t) + " is not realizable on H^2 of rank " +
                            std::to_string(rho_S) + " with K_S invariant";
            scan.trace.push_back(base_rec);
            continue;
        }
        if (t == 2 - rho_S && !detail::is_perfect_square(K2_S * R_sq)) {
            base_rec.note = "invariant part of H^2 is one-dimensional, so K_S is numerically a rational multiple "
                            "rR of R; then K_S^2 = r^2 R^2 with R^2 = " + std::to_string(R_sq) +
                            ", impossible since K_S^2 * R^2 = " + std::to_string(K2_S * R_sq) + " is not a square";
            scan.trace.push_back(base_rec);
            continue;
        }

        const long excess = (rho_S + t) / 2;  // rho(T^) - k
        long bound = 0;
        MinimalityRule rule = MinimalityRule::Excluded;
        if (excess < 2) {
            base_rec.note = "k nodal curves need k <= rho(T^) - 2, but rho(T^) = k + " + std::to_string(excess);
            scan.trace.push_back(base_rec);
            continue;
        } else if (excess == 2) {
            rule = MinimalityRule::ForcedMinimal;
            bound = 1;
        } else if (excess == 3) {
            rule = MinimalityRule::DropAtMostTwo;
            bound = -1;
        } else {
            throw DomainError("admissible_isolated_counts: no minimality bound is available when rho(T^) = k + " +
                              std::to_string(excess) + " (K_S^2 = " + std::to_string(K2_S) + ", t = " +
                              std::to_string(t) + ")");
        }

        bool stopped = false;
        for (long m = 0; m <= kMaxScanSteps; ++m) {
            const auto profile = profile_from_R(K2_S, 1, R_sq, 2 * m + 1, rho_S);
            CaseRecord rec;
            rec.t = t;
            rec.m = m;
            rec.k = profile.k;
            rec.rho_That = profile.rho_That;
            rec.K2_That = 12 - (profile.rho_That + 2);
            rec.minimality_rule = rule;
            rec.admissible = rec.K2_That >= bound;
            rec.note = "rho(T^) = k + " + std::to_string(excess) + ", K_T^^2 = " + std::to_string(10 - excess) +
                       " - k, need K_T^^2 >= " + std::to_string(bound);
            scan.trace.push_back(rec);
            if (!rec.admissible) {
                stopped = true;
                break;
            }
            scan.admissible.push_back(rec.k);
        }
        if (!stopped) throw DomainError("admissible_isolated_counts: scan reached the m cap without terminating");
    }
    std::sort(scan.admissible.begin(), scan.admissible.end());
    scan.admissible.erase(std::unique(scan.admissible.begin(), scan.admissible.end()), scan.admissible.end());
    return scan;
}

struct VerdictStep {
    std::string rule;
    std::string statement;
    bool holds = false;
};

struct BlochVerdict {
    bool established = false;
    std::array<long, 3> anti_invariant_dims{};
    std::array<std::optional<long>, 3> k_values;
    std::vector<long> admissible;
    bool membership = false;
    std::vector<VerdictStep> trace;
    std::string failing_step;  ///< empty when established
};

/// The three involutions of (Z/2)^2 = {0, 1, 2, 3} (XOR labeling), gamma_3 = gamma_1 gamma_2.
inline std::vector<SubgroupSpec> involution_subgroups_of_klein_group() { return {{{0, 1}}, {{0, 2}}, {{0, 3}}}; }

/// Combines the fixed-point counts from the anti-invariant bicanonical
/// dimensions with the case scan and the group-algebra criterion.
inline BlochVerdict inoue_bloch_verdict(const std::array<long, 3>& anti_dims, long K2_S = 7, long chi_S = 1,
                                        long chi_That = 1) {
    BlochVerdict v;
    v.anti_invariant_dims = anti_dims;
    auto step = [&](std::string rule, std::string statement, bool holds) {
        v.trace.push_back({rule, statement, holds});
        if (!holds && v.failing_step.empty()) v.failing_step = rule + ": " + statement;
    };

    const auto klein = elementary_abelian_2group(2);
    const SubgroupSpec trivial{{0}};
    const auto involutions = involution_subgroups_of_klein_group();
    const auto membership = enough_automorphisms_check(klein, trivial, involutions);
    v.membership = membership.membership;
    step("group algebra ideal membership",
         "1 = z({e}) lies in the two-sided ideal of Q[(Z/2)^2] generated by 1+g1, 1+g2, 1+g3 (ideal dimension " +
             std::to_string(membership.ideal_dimension) + " of 4)",
         membership.membership);

    for (std::size_t i = 0; i < 3; ++i) {
        const std::string name = "k" + std::to_string(i + 1);
        try {
            const long k = fixed_point_count(K2_S, chi_That, chi_S, anti_dims[i]);
            v.k_values[i] = k;
            step("fixed-point formula",
                 name + " = " + std::to_string(K2_S) + " + 6*" + std::to_string(chi_That) + " - 2*" +
                     std::to_string(chi_S) + " - 2*" + std::to_string(anti_dims[i]) + " = " + std::to_string(k),
                 true);
        } catch (const DomainError& e) {
            step("fixed-point formula", name + ": " + e.what(), false);
        }
    }

    CaseScan scan;
    bool scan_ok = false;
    try {
        scan = admissible_isolated_counts(K2_S);
        v.admissible = scan.admissible;
        std::string set = "{";
        for (std::size_t j = 0; j < scan.admissible.size(); ++j) set += (j ? "," : "") + std::to_string(scan.admissible[j]);
        set += "}";
        step("quotient case scan",
             "an involution with kappa(S/sigma) = 2 on a surface with K^2 = " + std::to_string(K2_S) +
                 ", p_g = q = 0 has k in " + set,
             true);
        scan_ok = true;
    } catch (const DomainError& e) {
        step("quotient case scan", e.what(), false);
    }

    std::vector<bool> quotient_flags(3, false);
    for (std::size_t i = 0; i < 3; ++i) {
        if (!v.k_values[i] || !scan_ok) continue;
        const long k = *v.k_values[i];
        const bool outside =
            std::find(scan.admissible.begin(), scan.admissible.end(), k) == scan.admissible.end();
        const std::string name = "S/g" + std::to_string(i + 1);
        step("kodaira dimension exclusion",
             outside ? "k" + std::to_string(i + 1) + " = " + std::to_string(k) +
                           " is not admissible, hence kappa(" + name + ") <= 1"
                     : "k" + std::to_string(i + 1) + " = " + std::to_string(k) +
                           " is admissible, kappa(" + name + ") = 2 cannot be ruled out",
             outside);
        if (outside) {
            step("bloch-kas-lieberman", "kappa(" + name + ") <= 1, so T(" + name + ") = 0", true);
            quotient_flags[i] = true;
        }
    }

    const auto criterion = enough_automorphisms_check(klein, trivial, involutions, quotient_flags);
    step("criterion for (Z/2)^2-actions",
         criterion.satisfied ? "z({e}) in the ideal and T(S/g_i) = 0 for i = 1,2,3, hence T(S) = 0"
                             : "hypotheses incomplete, T(S) = 0 not concluded",
         criterion.satisfied);
    v.established = criterion.satisfied && v.failing_step.empty();
    return v;
}

}  // namespace inoue

#pragma once

// Invariants of a bidouble ((Z/2)^2) cover X -> Y branched on D1 + D2 + D3.
//
// The cover is determined by the branch classes D_i (D_i is the branch
// divisor of the involution gamma_i) and the character sheaves L_i, subject
// to D_j + D_k = 2 L_i for {i,j,k} = {1,2,3}. The standard formulas of
// abelian-cover theory (Pardini; the Inoue example is worked out by
// Mendes Lopes and Pardini) are:
//
//   chi(O_X) = 4 chi(O_Y) + 1/2 sum L_i (L_i + K_Y)
//   K_X^2    = (2K_Y + sum D_i)^2                      (K_X = pi^*(K_Y + D/2))
//   p_g(X)   = p_g(Y) + sum h^0(K_Y + L_i)
//   H^0(2K_X) = H^0(M) + sum_i H^0(M - L_i),  M = 2K_Y + sum D_i,
//
// the last summand being the chi_i-isotypical part, where chi_i is the
// nontrivial character with chi_i(gamma_i) = 1.

#include <array>
#include <cstddef>
#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "inoue/error.hpp"
#include "inoue/linear_systems.hpp"
#include "inoue/picard_lattice.hpp"
#include "inoue/quadrilateral.hpp"
#include "inoue/text_io.hpp"

namespace inoue {

/// Number of (-2)-curves among the Inoue branch components.
inline constexpr long kInoueNodalBranchCurves = 4;

struct BranchData {
    std::array<DivisorClass, 3> D{};
    std::array<DivisorClass, 3> L{};

    friend bool operator==(const BranchData&, const BranchData&) = default;

    DivisorClass total_branch() const { return D[0] + D[1] + D[2]; }
    /// M = 2K_Y + D1 + D2 + D3; the bicanonical class of the cover is its pullback.
    DivisorClass bicanonical_base() const { return 2 * canonical_class() + total_branch(); }
    bool is_zero() const {
        for (std::size_t i = 0; i < 3; ++i) {
            if (!D[i].is_zero() || !L[i].is_zero()) return false;
        }
        return true;
    }
};

/// D1 = Delta1 + f2 + S1 + S2, D2 = Delta2 + f3, D3 = Delta3 + 2 f1 + S3 + S4,
/// L1 = -K + f1 - E4, L2 = -2K - E5 - E6, L3 = -K + L - E1 - E2 - E3.
inline BranchData inoue_branch_data(const PointConfiguration& cfg = standard_points()) {
    const auto c = named_classes(cfg);
    BranchData b;
    b.D[0] = c["Delta1"] + c["f2"] + c["S1"] + c["S2"];
    b.D[1] = c["Delta2"] + c["f3"];
    b.D[2] = c["Delta3"] + 2 * c["f1"] + c["S3"] + c["S4"];
    b.L[0] = c["-K"] + c["f1"] - c["E4"];
    b.L[1] = 2 * c["-K"] - c["E5"] - c["E6"];
    b.L[2] = c["-K"] + line_class() - c["E1"] - c["E2"] - c["E3"];
    return b;
}

/// The relation D_j + D_k = 2 L_i for character index i (0-based).
inline bool cover_relation_holds(const BranchData& b, std::size_t i) {
    const std::size_t j = (i + 1) % 3, k = (i + 2) % 3;
    return b.D[j] + b.D[k] == 2 * b.L[i];
}

inline bool cover_relations_hold(const BranchData& b) {
    return cover_relation_holds(b, 0) && cover_relation_holds(b, 1) && cover_relation_holds(b, 2);
}

struct BranchCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct BranchReport {
    std::vector<BranchCheck> checks;
    bool degenerate = false;  ///< empty branch locus

    bool all_passed() const {
        for (const auto& c : checks) {
            if (!c.passed) return false;
        }
        return true;
    }
    const BranchCheck& check(const std::string& name) const {
        for (const auto& c : checks) {
            if (c.name == name) return c;
        }
        throw DomainError("no such branch check: " + name);
    }
};

/// Checks the three cover relations and, for each side curve S_h, that it is
/// either a branch component disjoint from the other components (D.S_h = -2)
/// or disjoint from the whole branch locus (D.S_h = 0).
inline BranchReport validate_branch_data(const BranchData& b, const PointConfiguration& cfg = standard_points()) {
    BranchReport r;
    for (std::size_t i = 0; i < 3; ++i) {
        const std::size_t j = (i + 1) % 3, k = (i + 2) % 3;
        const auto lhs = b.D[j] + b.D[k];
        const auto rhs = 2 * b.L[i];
        r.checks.push_back({"D" + std::to_string(j + 1) + "+D" + std::to_string(k + 1) + "=2L" + std::to_string(i + 1),
                            lhs == rhs, to_string(lhs) + " vs " + to_string(rhs)});
    }
    const auto classes = named_classes(cfg);
    const auto total = b.total_branch();
    for (int h = 1; h <= 4; ++h) {
        const auto name = "S" + std::to_string(h);
        const long n = intersect(total, classes[name]);
        r.checks.push_back({name + " isolated in branch locus", n == -2 || n == 0, "D." + name + " = " + std::to_string(n)});
    }
    r.degenerate = b.total_branch().is_zero();
    return r;
}

namespace detail {

inline void require_cover_relations(const BranchData& b, const char* op) {
    if (!cover_relations_hold(b)) throw DomainError(std::string(op) + ": cover relations D_j + D_k = 2L_i do not hold");
}

}  // namespace detail

inline long cover_chi(const BranchData& b) {
    detail::require_cover_relations(b, "cover_chi");
    const auto K = canonical_class();
    long twice = 0;
    for (const auto& l : b.L) twice += intersect(l, l + K);
    if (twice % 2 != 0) throw DomainError("cover_chi: sum L_i(L_i + K) is odd; inconsistent branch data");
    return 4 * 1 + twice / 2;
}

inline long cover_K2(const BranchData& b) {
    detail::require_cover_relations(b, "cover_K2");
    const auto M = b.bicanonical_base();
    return intersect(M, M);
}

/// Each nodal branch curve carries two disjoint (-1)-curves upstairs; contracting
/// them raises K^2 by 2 per curve.
inline long minimal_K2(const BranchData& b, long nodal_branch_curves = kInoueNodalBranchCurves) {
    if (nodal_branch_curves < 0) throw DomainError("minimal_K2: negative number of nodal branch curves");
    return cover_K2(b) + 2 * nodal_branch_curves;
}

/// (invariant, chi_1, chi_2, chi_3) dimensions of H^0(2K) of the cover.
using CharacterDims = std::array<long, 4>;

inline CharacterDims bicanonical_character_dims(const BranchData& b, const PointConfiguration& cfg = standard_points()) {
    detail::require_cover_relations(b, "bicanonical_character_dims");
    const auto M = b.bicanonical_base();
    return {h0(M, cfg), h0(M - b.L[0], cfg), h0(M - b.L[1], cfg), h0(M - b.L[2], cfg)};
}

/// Anti-invariant part for gamma_i: the chi_j and chi_k components, {i,j,k} = {1,2,3}.
inline std::array<long, 3> anti_invariant_dims(const CharacterDims& dims) {
    return {dims[2] + dims[3], dims[1] + dims[3], dims[1] + dims[2]};
}

/// Invariant part for gamma_i: the G-invariant and chi_i components.
inline std::array<long, 3> invariant_dims(const CharacterDims& dims) {
    return {dims[0] + dims[1], dims[0] + dims[2], dims[0] + dims[3]};
}

struct GenusIrregularity {
    long p_g = 0;
    long q = 0;
};

inline GenusIrregularity geometric_genus_and_irregularity(const BranchData& b,
                                                          const PointConfiguration& cfg = standard_points()) {
    const auto K = canonical_class();
    GenusIrregularity out;
    out.p_g = h0(K, cfg);
    for (const auto& l : b.L) out.p_g += h0(K + l, cfg);
    out.q = 1 + out.p_g - cover_chi(b);
    if (out.q < 0) {
        throw DomainError("geometric_genus_and_irregularity: q = " + std::to_string(out.q) +
                          " is negative; branch data is inconsistent or degenerate");
    }
    return out;
}

struct CoverInvariants {
    long K2_cover = 0;
    long chi_cover = 0;
    long p_g = 0;
    long q = 0;
    long nodal_branch_curves = 0;
    long K2_minimal = 0;
    CharacterDims bicanonical_dims{};
};

inline CoverInvariants compute_cover_invariants(const BranchData& b, const PointConfiguration& cfg = standard_points(),
                                                long nodal_branch_curves = kInoueNodalBranchCurves) {
    CoverInvariants ci;
    ci.K2_cover = cover_K2(b);
    ci.chi_cover = cover_chi(b);
    const auto pq = geometric_genus_and_irregularity(b, cfg);
    ci.p_g = pq.p_g;
    ci.q = pq.q;
    ci.nodal_branch_curves = nodal_branch_curves;
    ci.K2_minimal = minimal_K2(b, nodal_branch_curves);
    ci.bicanonical_dims = bicanonical_character_dims(b, cfg);
    return ci;
}

struct BranchFile {
    BranchData data;
    long nodal_branch_curves = kInoueNodalBranchCurves;
};

/// Reads "key = a,m1,...,m6" lines for keys D1 D2 D3 L1 L2 L3, plus an optional
/// "n2 = <count>" line (default 4). Blank lines and '#' comments are ignored.
inline BranchFile parse_branch(std::istream& in, const std::string& source = "") {
    static const std::array<std::string, 6> kKeys{"D1", "D2", "D3", "L1", "L2", "L3"};
    BranchFile out;
    std::array<bool, 6> seen{};
    bool seen_n2 = false;
    std::string raw;
    std::size_t lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        const auto line = detail::strip_comment(raw);
        if (detail::trim(line).empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) throw ParseError(source, lineno, 1, "expected 'key = value'");
        const auto key = detail::trim(line.substr(0, eq));
        const auto value = line.substr(eq + 1);
        const std::size_t key_col = static_cast<std::size_t>(key.data() - line.data()) + 1;
        if (key == "n2") {
            if (seen_n2) throw ParseError(source, lineno, key_col, "duplicate key 'n2'");
            seen_n2 = true;
            const auto tokens = detail::split_ws(value);
            long v = -1;
            const std::size_t col = tokens.empty() ? eq + 2 : eq + 1 + tokens[0].column;
            if (tokens.size() != 1) throw ParseError(source, lineno, col, "n2 expects one nonnegative integer");
            const auto t = tokens[0].text;
            const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
            if (ec != std::errc() || ptr != t.data() + t.size() || v < 0) {
                throw ParseError(source, lineno, col, "n2 expects one nonnegative integer");
            }
            out.nodal_branch_curves = v;
            continue;
        }
        std::size_t idx = kKeys.size();
        for (std::size_t i = 0; i < kKeys.size(); ++i) {
            if (key == kKeys[i]) idx = i;
        }
        if (idx == kKeys.size()) throw ParseError(source, lineno, key_col, "unknown key '" + std::string(key) + "'");
        if (seen[idx]) throw ParseError(source, lineno, key_col, "duplicate key '" + std::string(key) + "'");
        seen[idx] = true;
        const auto cls = parse_class(value, source, lineno, eq + 1);
        if (idx < 3) {
            out.data.D[idx] = cls;
        } else {
            out.data.L[idx - 3] = cls;
        }
    }
    for (std::size_t i = 0; i < kKeys.size(); ++i) {
        if (!seen[i]) throw ParseError(source, 0, 0, "missing key '" + kKeys[i] + "'");
    }
    return out;
}

inline BranchFile parse_branch_string(const std::string& text) {
    std::istringstream in(text);
    return parse_branch(in);
}

inline BranchFile load_branch_file(const std::string& path) {
    auto in = detail::open_or_throw(path);
    return parse_branch(in, path);
}

}  // namespace inoue

#pragma once

// Exact integer/rational scalars and the elimination kernels built on them.
//
// Two independent rank routines live here:
//   * rank_fraction_free: Bareiss elimination over big integers after each
//     row is scaled to clear denominators (used for interpolation problems);
//   * EchelonBasis: incremental reduced row echelon form over the rationals
//     (used for spans in the group algebra, and as a cross-check).

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "inoue/error.hpp"

namespace inoue {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using RationalVector = std::vector<Rational>;
using RationalMatrix = std::vector<RationalVector>;

inline std::string to_string(const Rational& q) {
    if (denominator(q) == 1) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

/// Parses "p" or "p/q" (optional sign, decimal digits). Returns nullopt on malformed text.
inline std::optional<Rational> try_parse_rational(std::string_view text) {
    auto digits = [](std::string_view s) {
        return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
    };
    auto parse_int = [&](std::string_view s, bool allow_sign) -> std::optional<Integer> {
        bool negative = false;
        if (allow_sign && !s.empty() && (s.front() == '-' || s.front() == '+')) {
            negative = s.front() == '-';
            s.remove_prefix(1);
        }
        if (!digits(s)) return std::nullopt;
        const Integer v{std::string(s)};
        return negative ? Integer(-v) : v;
    };
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        auto n = parse_int(text, true);
        if (!n) return std::nullopt;
        return Rational(*n);
    }
    auto n = parse_int(text.substr(0, slash), true);
    auto d = parse_int(text.substr(slash + 1), false);
    if (!n || !d || *d == 0) return std::nullopt;
    return Rational(*n, *d);
}

inline Integer lcm_of_denominators(const RationalVector& row) {
    Integer l = 1;
    for (const auto& q : row) l = boost::multiprecision::lcm(l, Integer(denominator(q)));
    return l;
}

/// Exact rank by Bareiss fraction-free elimination. Each row is first scaled by
/// the lcm of its denominators, which does not change the rank.
inline std::size_t rank_fraction_free(const RationalMatrix& m) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size();
    const std::size_t cols = m.front().size();
    std::vector<std::vector<Integer>> a(rows, std::vector<Integer>(cols));
    for (std::size_t i = 0; i < rows; ++i) {
        const Integer scale = lcm_of_denominators(m[i]);
        for (std::size_t j = 0; j < cols; ++j) {
            a[i][j] = numerator(m[i][j]) * (scale / denominator(m[i][j]));
        }
    }

    Integer prev_pivot = 1;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && a[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(a[pivot], a[rank]);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            for (std::size_t j = col + 1; j < cols; ++j) {
                a[i][j] = (a[i][j] * a[rank][col] - a[i][col] * a[rank][j]) / prev_pivot;
            }
            a[i][col] = 0;
        }
        prev_pivot = a[rank][col];
        ++rank;
    }
    return rank;
}

/// A reduced row echelon basis of a subspace of Q^n, grown one vector at a time.
class EchelonBasis {
public:
    explicit EchelonBasis(std::size_t ambient_dim) : dim_(ambient_dim) {}

    std::size_t ambient_dim() const noexcept { return dim_; }
    std::size_t rank() const noexcept { return rows_.size(); }
    bool full() const noexcept { return rows_.size() == dim_; }
    const RationalMatrix& rows() const noexcept { return rows_; }
    const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

    /// Reduces v modulo the current span; the result is zero iff v is in the span.
    RationalVector reduce(RationalVector v) const {
        check_size(v);
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const Rational c = v[pivots_[r]];
            if (c == 0) continue;
            for (std::size_t j = 0; j < dim_; ++j) {
                if (rows_[r][j] != 0) v[j] -= c * rows_[r][j];
            }
        }
        return v;
    }

    bool contains(const RationalVector& v) const {
        const auto r = reduce(v);
        return std::all_of(r.begin(), r.end(), [](const Rational& q) { return q == 0; });
    }

    /// Adds v to the span. Returns true if the rank grew.
    bool insert(RationalVector v) {
        v = reduce(std::move(v));
        std::size_t p = 0;
        while (p < dim_ && v[p] == 0) ++p;
        if (p == dim_) return false;
        const Rational lead = v[p];
        for (auto& x : v) x /= lead;
        // keep the basis fully reduced: clear column p in the existing rows
        for (auto& row : rows_) {
            const Rational c = row[p];
            if (c == 0) continue;
            for (std::size_t j = 0; j < dim_; ++j) {
                if (v[j] != 0) row[j] -= c * v[j];
            }
        }
        const auto at = std::lower_bound(pivots_.begin(), pivots_.end(), p);
        const auto idx = static_cast<std::ptrdiff_t>(at - pivots_.begin());
        pivots_.insert(at, p);
        rows_.insert(rows_.begin() + idx, std::move(v));
        return true;
    }

private:
    void check_size(const RationalVector& v) const {
        if (v.size() != dim_) throw DomainError("vector length does not match ambient dimension");
    }

    std::size_t dim_;
    RationalMatrix rows_;
    std::vector<std::size_t> pivots_;
};

/// Exact rank by rational Gauss-Jordan elimination.
inline std::size_t rank_rational(const RationalMatrix& m) {
    if (m.empty()) return 0;
    EchelonBasis basis(m.front().size());
    for (const auto& row : m) {
        basis.insert(row);
        if (basis.full()) break;
    }
    return basis.rank();
}

}  // namespace inoue

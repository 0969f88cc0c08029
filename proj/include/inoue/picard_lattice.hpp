#pragma once

// Picard lattice of Y, the blow-up of P^2 at six points.
//
// Basis (L, E1..E6) with intersection form diag(1, -1, ..., -1). A class is
// stored as (a; m1..m6) and denotes a*L - sum(mi*Ei): the m-vector holds the
// *subtracted* multiplicities, so the diagonal L - E1 - E3 is (1; 1,0,1,0,0,0)
// and Ei itself is (0; 0,..,-1,..,0).

#include <array>
#include <charconv>
#include <compare>
#include <cstddef>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "inoue/error.hpp"

namespace inoue {

inline constexpr std::size_t kBlownUpPoints = 6;

struct DivisorClass {
    long a = 0;
    std::array<long, kBlownUpPoints> m{};

    friend constexpr bool operator==(const DivisorClass&, const DivisorClass&) = default;

    constexpr DivisorClass& operator+=(const DivisorClass& o) {
        a += o.a;
        for (std::size_t i = 0; i < kBlownUpPoints; ++i) m[i] += o.m[i];
        return *this;
    }
    constexpr DivisorClass& operator-=(const DivisorClass& o) {
        a -= o.a;
        for (std::size_t i = 0; i < kBlownUpPoints; ++i) m[i] -= o.m[i];
        return *this;
    }
    friend constexpr DivisorClass operator+(DivisorClass x, const DivisorClass& y) { return x += y; }
    friend constexpr DivisorClass operator-(DivisorClass x, const DivisorClass& y) { return x -= y; }
    friend constexpr DivisorClass operator*(long s, DivisorClass x) {
        x.a *= s;
        for (auto& v : x.m) v *= s;
        return x;
    }
    friend constexpr DivisorClass operator-(DivisorClass x) { return -1 * x; }

    constexpr bool is_zero() const { return *this == DivisorClass{}; }
};

/// The pullback L of a line.
constexpr DivisorClass line_class() { return DivisorClass{1, {}}; }

/// The exceptional curve E_i, i in 1..6.
constexpr DivisorClass exceptional(std::size_t i) {
    if (i < 1 || i > kBlownUpPoints) throw DomainError("exceptional curve index out of range 1..6");
    DivisorClass e;
    e.m[i - 1] = -1;
    return e;
}

constexpr long intersect(const DivisorClass& x, const DivisorClass& y) {
    long s = x.a * y.a;
    for (std::size_t i = 0; i < kBlownUpPoints; ++i) s -= x.m[i] * y.m[i];
    return s;
}

/// K_Y = -3L + sum Ei.
constexpr DivisorClass canonical_class() { return DivisorClass{-3, {-1, -1, -1, -1, -1, -1}}; }

/// p_a(d) = 1 + (d^2 + d.K)/2. Odd d^2 + d.K cannot occur for lattice classes.
constexpr long arithmetic_genus(const DivisorClass& d) {
    const long twice = intersect(d, d) + intersect(d, canonical_class());
    if (twice % 2 != 0) throw DomainError("adjunction parity violated: d^2 + d.K is odd");
    return 1 + twice / 2;
}

inline std::string to_string(const DivisorClass& d) {
    std::string s = "(" + std::to_string(d.a) + ";";
    for (std::size_t i = 0; i < kBlownUpPoints; ++i) {
        s += std::to_string(d.m[i]);
        s += (i + 1 < kBlownUpPoints) ? "," : ")";
    }
    return s;
}

inline std::ostream& operator<<(std::ostream& os, const DivisorClass& d) { return os << to_string(d); }

/// Parses "a,m1,m2,m3,m4,m5,m6" (whitespace around tokens tolerated).
/// Columns in errors are 1-based offsets into text.
inline DivisorClass parse_class(std::string_view text, const std::string& source = "", std::size_t line = 0,
                                std::size_t column_offset = 0) {
    struct Field {
        std::string_view text;
        std::size_t column;
    };
    std::vector<Field> fields;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= text.size(); ++i) {
        if (i == text.size() || text[i] == ',') {
            std::size_t b = start, e = i;
            while (b < e && (text[b] == ' ' || text[b] == '\t')) ++b;
            while (e > b && (text[e - 1] == ' ' || text[e - 1] == '\t' || text[e - 1] == '\r')) --e;
            fields.push_back({text.substr(b, e - b), column_offset + b + 1});
            start = i + 1;
        }
    }
    if (fields.size() != kBlownUpPoints + 1) {
        throw ParseError(source, line, column_offset + 1,
                         "expected 7 comma-separated integers a,m1,...,m6, found " + std::to_string(fields.size()));
    }
    DivisorClass d;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        long v = 0;
        const auto* first = fields[i].text.data();
        const auto* last = first + fields[i].text.size();
        if (!fields[i].text.empty() && *first == '+') ++first;
        const auto [ptr, ec] = std::from_chars(first, last, v);
        if (fields[i].text.empty() || ec != std::errc() || ptr != last) {
            throw ParseError(source, line, fields[i].column, "not an integer: '" + std::string(fields[i].text) + "'");
        }
        if (i == 0) {
            d.a = v;
        } else {
            d.m[i - 1] = v;
        }
    }
    return d;
}

}  // namespace inoue

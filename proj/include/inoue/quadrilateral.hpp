#pragma once

// Coordinate model of the complete quadrilateral with vertices P1..P6 and the
// named curve classes on its blow-up Y.
//
// Labeling: P5 = line(P1,P2) ∩ line(P3,P4) and P6 = line(P1,P4) ∩ line(P2,P3).
// The four sides are S1 = P1P2, S2 = P2P3, S3 = P3P4, S4 = P4P1 and the three
// diagonals are P1P3, P2P4, P5P6. Multiplicities in the side and diagonal
// classes are read off from coordinate incidence, so the lattice table and
// the coordinates check each other.
//
// The conic classes f_i = -K_Y - Delta_i are exact lattice identities. That a
// general member of |f_i| is smooth (needed for actual disjointness of curves,
// not for intersection numbers) is assumed and not modeled.

#include <array>
#include <cstddef>
#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "inoue/error.hpp"
#include "inoue/exact.hpp"
#include "inoue/picard_lattice.hpp"
#include "inoue/text_io.hpp"

namespace inoue {

using ProjectivePoint = std::array<Rational, 3>;

struct PointConfiguration {
    std::array<ProjectivePoint, kBlownUpPoints> points;

    /// Point P_label, label in 1..6.
    const ProjectivePoint& P(std::size_t label) const { return points.at(label - 1); }
};

inline bool is_zero(const ProjectivePoint& p) { return p[0] == 0 && p[1] == 0 && p[2] == 0; }

inline ProjectivePoint cross(const ProjectivePoint& u, const ProjectivePoint& v) {
    return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
}

inline Rational dot(const ProjectivePoint& u, const ProjectivePoint& v) {
    return u[0] * v[0] + u[1] * v[1] + u[2] * v[2];
}

/// Scales so that the first nonzero coordinate is 1.
inline ProjectivePoint normalized(ProjectivePoint p) {
    for (const auto& c : p) {
        if (c != 0) {
            const Rational lead = c;
            for (auto& x : p) x /= lead;
            return p;
        }
    }
    throw DomainError("the zero triple is not a projective point");
}

inline bool same_point(const ProjectivePoint& p, const ProjectivePoint& q) {
    return is_zero(cross(p, q));
}

/// Line through two distinct points, as a coefficient triple.
inline ProjectivePoint line_through(const ProjectivePoint& p, const ProjectivePoint& q) {
    auto l = cross(p, q);
    if (is_zero(l)) throw DomainError("line_through: points coincide");
    return l;
}

inline bool on_line(const ProjectivePoint& line, const ProjectivePoint& p) { return dot(line, p) == 0; }

inline bool collinear(const ProjectivePoint& p, const ProjectivePoint& q, const ProjectivePoint& r) {
    if (is_zero(p) || is_zero(q) || is_zero(r)) throw DomainError("collinear: zero triple is not a point");
    return dot(cross(p, q), r) == 0;
}

inline PointConfiguration standard_points() {
    PointConfiguration cfg;
    cfg.points[0] = {1, 0, 0};
    cfg.points[1] = {0, 1, 0};
    cfg.points[2] = {0, 0, 1};
    cfg.points[3] = {1, 1, 1};
    cfg.points[4] = normalized(cross(line_through(cfg.P(1), cfg.P(2)), line_through(cfg.P(3), cfg.P(4))));
    cfg.points[5] = normalized(cross(line_through(cfg.P(1), cfg.P(4)), line_through(cfg.P(2), cfg.P(3))));
    return cfg;
}

/// One message per violated configuration invariant; empty means valid.
inline std::vector<std::string> validate_configuration(const PointConfiguration& cfg) {
    std::vector<std::string> out;
    for (std::size_t i = 1; i <= kBlownUpPoints; ++i) {
        if (is_zero(cfg.P(i))) out.push_back("P" + std::to_string(i) + " is the zero triple");
    }
    if (!out.empty()) return out;

    static constexpr std::array<std::array<std::size_t, 3>, 4> kTriples{{{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}}};
    bool general = true;
    for (const auto& t : kTriples) {
        if (collinear(cfg.P(t[0]), cfg.P(t[1]), cfg.P(t[2]))) {
            general = false;
            out.push_back("P1..P4 not in general position: P" + std::to_string(t[0]) + ",P" +
                          std::to_string(t[1]) + ",P" + std::to_string(t[2]) + " are collinear");
        }
    }
    if (!general) return out;

    if (!collinear(cfg.P(1), cfg.P(2), cfg.P(5))) out.push_back("P5 does not lie on line(P1,P2)");
    if (!collinear(cfg.P(3), cfg.P(4), cfg.P(5))) out.push_back("P5 does not lie on line(P3,P4)");
    if (!collinear(cfg.P(1), cfg.P(4), cfg.P(6))) out.push_back("P6 does not lie on line(P1,P4)");
    if (!collinear(cfg.P(2), cfg.P(3), cfg.P(6))) out.push_back("P6 does not lie on line(P2,P3)");
    return out;
}

inline void require_valid(const PointConfiguration& cfg) {
    const auto violations = validate_configuration(cfg);
    if (violations.empty()) return;
    std::string msg = "invalid point configuration:";
    for (const auto& v : violations) msg += "\n  " + v;
    throw DomainError(msg);
}

/// Applies a 3x3 matrix to every point (column-vector convention).
inline PointConfiguration transformed(const PointConfiguration& cfg, const std::array<ProjectivePoint, 3>& A) {
    PointConfiguration out;
    for (std::size_t i = 0; i < kBlownUpPoints; ++i) {
        for (std::size_t r = 0; r < 3; ++r) out.points[i][r] = dot(A[r], cfg.points[i]);
    }
    return out;
}

/// Strict transform of the line through P_i and P_j: L minus every vertex on it.
inline DivisorClass strict_transform_of_line(const PointConfiguration& cfg, std::size_t i, std::size_t j) {
    const auto line = line_through(cfg.P(i), cfg.P(j));
    DivisorClass d = line_class();
    for (std::size_t k = 1; k <= kBlownUpPoints; ++k) {
        if (on_line(line, cfg.P(k))) d.m[k - 1] = 1;
    }
    return d;
}

class NamedClassTable {
public:
    using Entry = std::pair<std::string, DivisorClass>;

    void add(std::string name, DivisorClass d) { entries_.emplace_back(std::move(name), d); }

    const DivisorClass& at(std::string_view name) const {
        for (const auto& [n, d] : entries_) {
            if (n == name) return d;
        }
        throw DomainError("unknown curve name: " + std::string(name));
    }
    const DivisorClass& operator[](std::string_view name) const { return at(name); }

    const std::vector<Entry>& entries() const noexcept { return entries_; }

private:
    std::vector<Entry> entries_;
};

/// E1..E6, S1..S4, Delta1..Delta3, f1..f3, K, -K.
inline NamedClassTable named_classes(const PointConfiguration& cfg = standard_points()) {
    require_valid(cfg);
    NamedClassTable t;
    for (std::size_t i = 1; i <= kBlownUpPoints; ++i) t.add("E" + std::to_string(i), exceptional(i));

    static constexpr std::array<std::pair<std::size_t, std::size_t>, 4> kSides{{{1, 2}, {2, 3}, {3, 4}, {4, 1}}};
    for (std::size_t s = 0; s < kSides.size(); ++s) {
        t.add("S" + std::to_string(s + 1), strict_transform_of_line(cfg, kSides[s].first, kSides[s].second));
    }

    static constexpr std::array<std::pair<std::size_t, std::size_t>, 3> kDiagonals{{{1, 3}, {2, 4}, {5, 6}}};
    const DivisorClass anticanonical = -canonical_class();
    std::array<DivisorClass, 3> diagonals{};
    for (std::size_t i = 0; i < kDiagonals.size(); ++i) {
        diagonals[i] = strict_transform_of_line(cfg, kDiagonals[i].first, kDiagonals[i].second);
        t.add("Delta" + std::to_string(i + 1), diagonals[i]);
    }
    for (std::size_t i = 0; i < diagonals.size(); ++i) {
        t.add("f" + std::to_string(i + 1), anticanonical - diagonals[i]);
    }
    t.add("K", canonical_class());
    t.add("-K", anticanonical);
    return t;
}

struct IntersectionCheck {
    std::string relation;
    long expected = 0;
    long actual = 0;
    bool passed() const { return expected == actual; }
};

struct IntersectionReport {
    std::vector<std::string> names;
    std::vector<std::vector<long>> table;  ///< symmetric, indexed like names
    std::vector<IntersectionCheck> checks;

    bool all_passed() const {
        for (const auto& c : checks) {
            if (!c.passed()) return false;
        }
        return true;
    }
    long entry(std::string_view a, std::string_view b) const {
        std::size_t i = index(a), j = index(b);
        return table[i][j];
    }

private:
    std::size_t index(std::string_view n) const {
        for (std::size_t i = 0; i < names.size(); ++i) {
            if (names[i] == n) return i;
        }
        throw DomainError("curve not in report: " + std::string(n));
    }
};

/// Pairwise intersection numbers among the S, Delta, f and E classes, together
/// with the expected relations between sides, diagonals and conic classes.
inline IntersectionReport configuration_report(const PointConfiguration& cfg = standard_points()) {
    const auto classes = named_classes(cfg);
    IntersectionReport r;
    std::vector<DivisorClass> ds;
    for (const auto& [name, d] : classes.entries()) {
        if (name == "K" || name == "-K") continue;
        r.names.push_back(name);
        ds.push_back(d);
    }
    r.table.assign(ds.size(), std::vector<long>(ds.size()));
    for (std::size_t i = 0; i < ds.size(); ++i) {
        for (std::size_t j = 0; j < ds.size(); ++j) r.table[i][j] = intersect(ds[i], ds[j]);
    }

    auto check = [&](std::string a, std::string b, long expected) {
        r.checks.push_back({a + "." + b, expected, r.entry(a, b)});
    };
    const auto S = [](int i) { return "S" + std::to_string(i); };
    const auto D = [](int i) { return "Delta" + std::to_string(i); };
    const auto f = [](int i) { return "f" + std::to_string(i); };

    for (int h = 1; h <= 4; ++h) {
        check(S(h), S(h), -2);
        for (int j = h + 1; j <= 4; ++j) check(S(h), S(j), 0);
        for (int i = 1; i <= 3; ++i) check(S(h), D(i), 0);
        for (int i = 1; i <= 3; ++i) check(S(h), f(i), 0);
    }
    for (int i = 1; i <= 3; ++i) {
        for (int j = 1; j <= 3; ++j) check(D(i), f(j), i == j ? 2 : 0);
    }
    for (int i = 1; i <= 3; ++i) {
        check(f(i), f(i), 0);
        for (int j = i + 1; j <= 3; ++j) check(f(i), f(j), 2);
    }
    return r;
}

/// Reads six points, one per line, three rationals ("p" or "p/q") each.
/// Blank lines and '#' comments are ignored. The result is not validated.
inline PointConfiguration parse_points(std::istream& in, const std::string& source = "") {
    PointConfiguration cfg;
    std::size_t count = 0;
    std::string raw;
    std::size_t lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        const auto line = detail::strip_comment(raw);
        const auto tokens = detail::split_ws(line);
        if (tokens.empty()) continue;
        if (count == kBlownUpPoints) throw ParseError(source, lineno, tokens[0].column, "more than six points");
        if (tokens.size() != 3) {
            throw ParseError(source, lineno, tokens.size() > 3 ? tokens[3].column : 0,
                             "expected three coordinates, found " + std::to_string(tokens.size()));
        }
        for (std::size_t c = 0; c < 3; ++c) {
            auto q = try_parse_rational(tokens[c].text);
            if (!q) throw ParseError(source, lineno, tokens[c].column, "not a rational number: '" + std::string(tokens[c].text) + "'");
            cfg.points[count][c] = *q;
        }
        ++count;
    }
    if (count != kBlownUpPoints) {
        throw ParseError(source, lineno, 0, "expected six points, found " + std::to_string(count));
    }
    return cfg;
}

inline PointConfiguration parse_points_string(const std::string& text) {
    std::istringstream in(text);
    return parse_points(in);
}

inline PointConfiguration load_points_file(const std::string& path) {
    auto in = detail::open_or_throw(path);
    return parse_points(in, path);
}

}  // namespace inoue

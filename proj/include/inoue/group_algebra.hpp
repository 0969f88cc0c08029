#pragma once

// Rational group algebra Q[G] of a finite group given by its multiplication
// table, subgroup sums z(H), and the "enough automorphisms" membership test:
// is z(H) in the two-sided ideal generated by z(H_1), ..., z(H_r)?
//
// Rational coefficients are enough. Membership of a rational element in the
// C-span of rational vectors is decided by a linear system with rational
// data, which is solvable over C iff it is solvable over Q.
//
// The second hypothesis of the criterion (T(S/H_i) = 0 for i = 1..r) is not
// computable here and enters only as caller-supplied flags.

#include <algorithm>
#include <charconv>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "inoue/error.hpp"
#include "inoue/exact.hpp"
#include "inoue/text_io.hpp"

namespace inoue {

/// Span computations enumerate |G|^2 translates per generator.
inline constexpr std::size_t kMaxAlgebraOrder = 256;

class FiniteGroup {
public:
    using Element = std::size_t;
    using Table = std::vector<std::vector<Element>>;

    /// Validates the table: square, entries in range, 0 is the identity, every
    /// row and column is a permutation, and the product is associative (all
    /// triples for order <= 64, a fixed pseudo-random sample above).
    explicit FiniteGroup(Table table) : table_(std::move(table)) {
        const std::size_t n = table_.size();
        if (n == 0) throw DomainError("group table is empty");
        for (const auto& row : table_) {
            if (row.size() != n) throw DomainError("group table is not square");
            for (const auto e : row) {
                if (e >= n) throw DomainError("group table entry out of range");
            }
        }
        for (Element g = 0; g < n; ++g) {
            if (table_[0][g] != g || table_[g][0] != g) throw DomainError("element 0 is not the identity");
        }
        for (Element g = 0; g < n; ++g) {
            std::vector<bool> row_seen(n), col_seen(n);
            for (Element h = 0; h < n; ++h) {
                row_seen[table_[g][h]] = true;
                col_seen[table_[h][g]] = true;
            }
            if (std::find(row_seen.begin(), row_seen.end(), false) != row_seen.end() ||
                std::find(col_seen.begin(), col_seen.end(), false) != col_seen.end()) {
                throw DomainError("group table is not a Latin square (missing inverses)");
            }
        }
        if (!associative_on_checked_triples()) throw DomainError("group table is not associative");
        inverse_.resize(n);
        for (Element g = 0; g < n; ++g) {
            for (Element h = 0; h < n; ++h) {
                if (table_[g][h] == 0) inverse_[g] = h;
            }
        }
    }

    std::size_t order() const noexcept { return table_.size(); }
    Element mul(Element a, Element b) const { return table_[a][b]; }
    Element inv(Element a) const { return inverse_[a]; }
    const Table& table() const noexcept { return table_; }

    bool is_abelian() const {
        for (Element a = 0; a < order(); ++a) {
            for (Element b = a + 1; b < order(); ++b) {
                if (mul(a, b) != mul(b, a)) return false;
            }
        }
        return true;
    }

    bool associative_on_checked_triples() const {
        const std::size_t n = table_.size();
        auto ok = [&](Element a, Element b, Element c) { return table_[table_[a][b]][c] == table_[a][table_[b][c]]; };
        if (n <= 64) {
            for (Element a = 0; a < n; ++a) {
                for (Element b = 0; b < n; ++b) {
                    for (Element c = 0; c < n; ++c) {
                        if (!ok(a, b, c)) return false;
                    }
                }
            }
            return true;
        }
        std::mt19937_64 rng(0x5eed);
        std::uniform_int_distribution<std::size_t> pick(0, n - 1);
        for (int t = 0; t < 50000; ++t) {
            if (!ok(pick(rng), pick(rng), pick(rng))) return false;
        }
        return true;
    }

    friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) { return a.table_ == b.table_; }

private:
    Table table_;
    std::vector<Element> inverse_;
};

// -- named constructors ------------------------------------------------------

inline FiniteGroup cyclic_group(std::size_t n) {
    if (n == 0) throw DomainError("cyclic_group: order must be positive");
    FiniteGroup::Table t(n, std::vector<std::size_t>(n));
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) t[a][b] = (a + b) % n;
    }
    return FiniteGroup(std::move(t));
}

/// (Z/2)^k with element i encoding the bit vector of i; product is XOR.
inline FiniteGroup elementary_abelian_2group(std::size_t k) {
    if (k > 8) throw DomainError("elementary_abelian_2group: rank above 8 exceeds the supported order");
    const std::size_t n = std::size_t{1} << k;
    FiniteGroup::Table t(n, std::vector<std::size_t>(n));
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) t[a][b] = a ^ b;
    }
    return FiniteGroup(std::move(t));
}

/// G x H with (g, h) labeled g * |H| + h.
inline FiniteGroup direct_product(const FiniteGroup& G, const FiniteGroup& H) {
    const std::size_t m = H.order();
    const std::size_t n = G.order() * m;
    FiniteGroup::Table t(n, std::vector<std::size_t>(n));
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) t[a][b] = G.mul(a / m, b / m) * m + H.mul(a % m, b % m);
    }
    return FiniteGroup(std::move(t));
}

/// Dihedral group of order 2n; r^i s^e is labeled i + n*e.
inline FiniteGroup dihedral_group(std::size_t n) {
    if (n == 0) throw DomainError("dihedral_group: n must be positive");
    const std::size_t N = 2 * n;
    FiniteGroup::Table t(N, std::vector<std::size_t>(N));
    for (std::size_t x = 0; x < N; ++x) {
        for (std::size_t y = 0; y < N; ++y) {
            const std::size_t i = x % n, a = x / n, j = y % n, b = y / n;
            const std::size_t rot = a == 0 ? (i + j) % n : (i + n - j) % n;
            t[x][y] = rot + n * ((a + b) % 2);
        }
    }
    return FiniteGroup(std::move(t));
}

/// Dicyclic group of order 4n: <a, x | a^(2n), x^2 = a^n, x a x^-1 = a^-1>;
/// a^i x^e is labeled i + 2n*e. dicyclic_group(2) is the quaternion group.
inline FiniteGroup dicyclic_group(std::size_t n) {
    if (n == 0) throw DomainError("dicyclic_group: n must be positive");
    const std::size_t m = 2 * n, N = 4 * n;
    FiniteGroup::Table t(N, std::vector<std::size_t>(N));
    for (std::size_t p = 0; p < N; ++p) {
        for (std::size_t q = 0; q < N; ++q) {
            const std::size_t i = p % m, e = p / m, j = q % m, f = q / m;
            if (e == 0) {
                t[p][q] = (i + j) % m + m * f;
            } else if (f == 0) {
                t[p][q] = (i + m - j) % m + m;
            } else {
                t[p][q] = (i + m - j + n) % m;
            }
        }
    }
    return FiniteGroup(std::move(t));
}

/// Permutation group generated by the given permutations of {0..d-1}.
/// Elements are labeled in breadth-first order from the identity.
inline FiniteGroup permutation_group(const std::vector<std::vector<std::size_t>>& generators) {
    if (generators.empty()) return cyclic_group(1);
    const std::size_t d = generators.front().size();
    for (const auto& g : generators) {
        std::vector<std::size_t> sorted = g;
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t i = 0; i < sorted.size(); ++i) {
            if (g.size() != d || sorted[i] != i) throw DomainError("permutation_group: generator is not a permutation");
        }
    }
    using Perm = std::vector<std::size_t>;
    auto compose = [](const Perm& p, const Perm& q) {  // (p*q)(i) = p(q(i))
        Perm r(p.size());
        for (std::size_t i = 0; i < p.size(); ++i) r[i] = p[q[i]];
        return r;
    };
    Perm id(d);
    for (std::size_t i = 0; i < d; ++i) id[i] = i;
    std::vector<Perm> elems{id};
    std::map<Perm, std::size_t> index{{id, 0}};
    for (std::size_t k = 0; k < elems.size(); ++k) {
        for (const auto& g : generators) {
            auto p = compose(elems[k], g);
            if (index.emplace(p, elems.size()).second) {
                elems.push_back(std::move(p));
                if (elems.size() > kMaxAlgebraOrder) throw DomainError("permutation_group: group too large");
            }
        }
    }
    FiniteGroup::Table t(elems.size(), std::vector<std::size_t>(elems.size()));
    for (std::size_t a = 0; a < elems.size(); ++a) {
        for (std::size_t b = 0; b < elems.size(); ++b) t[a][b] = index.at(compose(elems[a], elems[b]));
    }
    return FiniteGroup(std::move(t));
}

// -- subgroups ---------------------------------------------------------------

struct SubgroupSpec {
    std::vector<std::size_t> members;

    friend bool operator==(const SubgroupSpec&, const SubgroupSpec&) = default;
    std::size_t size() const { return members.size(); }
};

/// Throws DomainError unless H is a subgroup of G (identity, closure, no repeats).
inline void validate_subgroup(const FiniteGroup& G, const SubgroupSpec& H) {
    std::vector<bool> in(G.order());
    for (const auto h : H.members) {
        if (h >= G.order()) throw DomainError("subgroup member " + std::to_string(h) + " is not a group element");
        if (in[h]) throw DomainError("subgroup member " + std::to_string(h) + " listed twice");
        in[h] = true;
    }
    if (H.members.empty() || !in[0]) throw DomainError("subgroup does not contain the identity");
    for (const auto a : H.members) {
        for (const auto b : H.members) {
            if (!in[G.mul(a, b)]) throw DomainError("member list is not closed under the group operation");
        }
    }
}

/// Subgroup generated by the given elements, members sorted.
inline SubgroupSpec generated_subgroup(const FiniteGroup& G, const std::vector<std::size_t>& gens) {
    std::vector<bool> in(G.order());
    std::vector<std::size_t> members{0};
    in[0] = true;
    for (std::size_t k = 0; k < members.size(); ++k) {
        for (const auto g : gens) {
            const auto p = G.mul(members[k], g);
            if (!in[p]) {
                in[p] = true;
                members.push_back(p);
            }
        }
    }
    std::sort(members.begin(), members.end());
    return {members};
}

/// Every subgroup of G, found by repeatedly adjoining one element to known subgroups.
inline std::vector<SubgroupSpec> all_subgroups(const FiniteGroup& G) {
    std::set<std::vector<std::size_t>> seen;
    std::vector<SubgroupSpec> out;
    out.push_back({{0}});
    seen.insert({0});
    for (std::size_t k = 0; k < out.size(); ++k) {
        for (std::size_t g = 0; g < G.order(); ++g) {
            auto gens = out[k].members;
            gens.push_back(g);
            auto H = generated_subgroup(G, gens);
            if (seen.insert(H.members).second) out.push_back(std::move(H));
        }
    }
    return out;
}

// -- the algebra -------------------------------------------------------------

struct GroupAlgebraElement {
    RationalVector coeffs;

    friend bool operator==(const GroupAlgebraElement&, const GroupAlgebraElement&) = default;

    GroupAlgebraElement& operator+=(const GroupAlgebraElement& o) {
        same_size(o);
        for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] += o.coeffs[i];
        return *this;
    }
    GroupAlgebraElement& operator-=(const GroupAlgebraElement& o) {
        same_size(o);
        for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] -= o.coeffs[i];
        return *this;
    }
    friend GroupAlgebraElement operator+(GroupAlgebraElement x, const GroupAlgebraElement& y) { return x += y; }
    friend GroupAlgebraElement operator-(GroupAlgebraElement x, const GroupAlgebraElement& y) { return x -= y; }
    friend GroupAlgebraElement operator*(const Rational& s, GroupAlgebraElement x) {
        for (auto& c : x.coeffs) c *= s;
        return x;
    }

    bool is_zero() const {
        return std::all_of(coeffs.begin(), coeffs.end(), [](const Rational& q) { return q == 0; });
    }

private:
    void same_size(const GroupAlgebraElement& o) const {
        if (o.coeffs.size() != coeffs.size()) throw DomainError("group algebra elements over different groups");
    }
};

inline GroupAlgebraElement zero_element(const FiniteGroup& G) { return {RationalVector(G.order())}; }

/// The basis element [g].
inline GroupAlgebraElement unit_element(const FiniteGroup& G, std::size_t g) {
    auto x = zero_element(G);
    x.coeffs.at(g) = 1;
    return x;
}

inline GroupAlgebraElement one(const FiniteGroup& G) { return unit_element(G, 0); }

inline GroupAlgebraElement multiply(const FiniteGroup& G, const GroupAlgebraElement& x, const GroupAlgebraElement& y) {
    if (x.coeffs.size() != G.order() || y.coeffs.size() != G.order()) {
        throw DomainError("multiply: element does not belong to this group algebra");
    }
    auto out = zero_element(G);
    for (std::size_t a = 0; a < G.order(); ++a) {
        if (x.coeffs[a] == 0) continue;
        for (std::size_t b = 0; b < G.order(); ++b) {
            if (y.coeffs[b] != 0) out.coeffs[G.mul(a, b)] += x.coeffs[a] * y.coeffs[b];
        }
    }
    return out;
}

/// z(H) = sum of the elements of H.
inline GroupAlgebraElement z_of(const SubgroupSpec& H, const FiniteGroup& G) {
    validate_subgroup(G, H);
    auto x = zero_element(G);
    for (const auto h : H.members) x.coeffs[h] = 1;
    return x;
}

/// Echelon basis of span{ a*x*b : x in gens, a, b in G }, the two-sided ideal
/// generated by gens (group elements suffice as multipliers by bilinearity).
inline EchelonBasis two_sided_ideal_span(const std::vector<GroupAlgebraElement>& gens, const FiniteGroup& G) {
    const std::size_t n = G.order();
    if (n > kMaxAlgebraOrder) throw DomainError("two_sided_ideal_span: group order above supported limit 256");
    EchelonBasis span(n);
    for (const auto& x : gens) {
        if (x.coeffs.size() != n) throw DomainError("ideal generator does not belong to this group algebra");
        for (std::size_t a = 0; a < n && !span.full(); ++a) {
            for (std::size_t b = 0; b < n && !span.full(); ++b) {
                // a*x*b has coefficient x_h at a*h*b
                RationalVector v(n);
                for (std::size_t h = 0; h < n; ++h) {
                    if (x.coeffs[h] != 0) v[G.mul(G.mul(a, h), b)] += x.coeffs[h];
                }
                span.insert(std::move(v));
            }
        }
    }
    return span;
}

inline std::vector<GroupAlgebraElement> two_sided_ideal_basis(const std::vector<GroupAlgebraElement>& gens,
                                                              const FiniteGroup& G) {
    const auto span = two_sided_ideal_span(gens, G);
    std::vector<GroupAlgebraElement> out;
    for (const auto& row : span.rows()) out.push_back({row});
    return out;
}

/// Left ideal span{ a*x : x in gens, a in G }; used to compare against the
/// two-sided span for abelian groups.
inline EchelonBasis left_ideal_span(const std::vector<GroupAlgebraElement>& gens, const FiniteGroup& G) {
    EchelonBasis span(G.order());
    for (const auto& x : gens) {
        for (std::size_t a = 0; a < G.order(); ++a) span.insert(multiply(G, unit_element(G, a), x).coeffs);
    }
    return span;
}

inline bool ideal_contains(const GroupAlgebraElement& x, const std::vector<GroupAlgebraElement>& gens,
                           const FiniteGroup& G) {
    if (x.coeffs.size() != G.order()) throw DomainError("ideal_contains: element does not belong to this group algebra");
    return two_sided_ideal_span(gens, G).contains(x.coeffs);
}

struct CriterionVerdict {
    bool membership = false;           ///< z(H) in the ideal generated by the z(H_i)
    std::size_t ideal_dimension = 0;
    std::vector<bool> quotient_flags;  ///< caller's T(S/H_i) = 0 hypotheses
    bool satisfied = false;            ///< membership and every flag set: T(S/H) = 0
};

/// Condition (1) is computed; condition (2) is taken from quotient_flags
/// (one per H_i, all true when empty). The criterion concludes only when both hold.
inline CriterionVerdict enough_automorphisms_check(const FiniteGroup& G, const SubgroupSpec& H,
                                                   const std::vector<SubgroupSpec>& Hs,
                                                   std::vector<bool> quotient_flags = {}) {
    if (quotient_flags.empty()) quotient_flags.assign(Hs.size(), true);
    if (quotient_flags.size() != Hs.size()) {
        throw DomainError("enough_automorphisms_check: need one quotient flag per subgroup H_i");
    }
    std::vector<GroupAlgebraElement> gens;
    for (const auto& Hi : Hs) gens.push_back(z_of(Hi, G));
    const auto target = z_of(H, G);
    const auto span = two_sided_ideal_span(gens, G);

    CriterionVerdict v;
    v.membership = span.contains(target.coeffs);
    v.ideal_dimension = span.rank();
    v.quotient_flags = std::move(quotient_flags);
    v.satisfied = v.membership && std::all_of(v.quotient_flags.begin(), v.quotient_flags.end(), [](bool b) { return b; });
    return v;
}

// -- group files -------------------------------------------------------------

struct GroupFile {
    FiniteGroup group;
    std::vector<std::pair<std::string, SubgroupSpec>> subgroups;  ///< file order
};

/// Format: first line the order n; the next n lines the rows of the
/// multiplication table (row a, column b holds a*b; 0 is the identity);
/// then zero or more subgroup lines "name: i j k ...". Blank lines and '#'
/// comments are ignored.
inline GroupFile parse_group(std::istream& in, const std::string& source = "") {
    std::string raw;
    std::size_t lineno = 0;
    std::size_t n = 0;
    FiniteGroup::Table table;
    std::vector<std::pair<std::string, SubgroupSpec>> subgroups;

    auto parse_index = [&](const detail::Token& t, std::size_t bound, const char* what) {
        std::size_t v = 0;
        const auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
        if (ec != std::errc() || ptr != t.text.data() + t.text.size()) {
            throw ParseError(source, lineno, t.column, std::string("expected ") + what + ", found '" + std::string(t.text) + "'");
        }
        if (bound != 0 && v >= bound) {
            throw ParseError(source, lineno, t.column, "element index " + std::to_string(v) + " out of range");
        }
        return v;
    };

    while (std::getline(in, raw)) {
        ++lineno;
        const auto line = detail::strip_comment(raw);
        const auto tokens = detail::split_ws(line);
        if (tokens.empty()) continue;
        if (n == 0) {
            if (tokens.size() != 1) throw ParseError(source, lineno, tokens[1].column, "first line must hold only the group order");
            n = parse_index(tokens[0], 0, "group order");
            if (n == 0) throw ParseError(source, lineno, tokens[0].column, "group order must be positive");
            if (n > kMaxAlgebraOrder) throw ParseError(source, lineno, tokens[0].column, "group order above supported limit 256");
            continue;
        }
        if (table.size() < n) {
            if (tokens.size() != n) {
                throw ParseError(source, lineno, tokens.size() > n ? tokens[n].column : 0,
                                 "table row needs " + std::to_string(n) + " entries, found " + std::to_string(tokens.size()));
            }
            std::vector<std::size_t> row;
            for (const auto& t : tokens) row.push_back(parse_index(t, n, "element index"));
            table.push_back(std::move(row));
            continue;
        }
        const auto colon = line.find(':');
        if (colon == std::string_view::npos) throw ParseError(source, lineno, tokens[0].column, "expected subgroup line 'name: i j ...'");
        const auto name = detail::trim(line.substr(0, colon));
        if (name.empty() || detail::split_ws(name).size() != 1) {
            throw ParseError(source, lineno, tokens[0].column, "subgroup name must be a single word");
        }
        for (const auto& [existing, _] : subgroups) {
            if (existing == name) throw ParseError(source, lineno, tokens[0].column, "duplicate subgroup '" + std::string(name) + "'");
        }
        SubgroupSpec H;
        for (auto t : detail::split_ws(line.substr(colon + 1))) {
            t.column += colon + 1;
            H.members.push_back(parse_index(t, n, "element index"));
        }
        subgroups.emplace_back(std::string(name), std::move(H));
    }
    if (n == 0) throw ParseError(source, lineno, 0, "missing group order");
    if (table.size() < n) throw ParseError(source, lineno, 0, "multiplication table has fewer than " + std::to_string(n) + " rows");

    GroupFile out{FiniteGroup(std::move(table)), {}};
    for (auto& [name, H] : subgroups) {
        try {
            validate_subgroup(out.group, H);
        } catch (const DomainError& e) {
            throw DomainError("subgroup '" + name + "': " + e.what());
        }
    }
    out.subgroups = std::move(subgroups);
    return out;
}

inline GroupFile parse_group_string(const std::string& text) {
    std::istringstream in(text);
    return parse_group(in);
}

inline GroupFile load_group_file(const std::string& path) {
    auto in = detail::open_or_throw(path);
    return parse_group(in, path);
}

inline std::string format_group(const FiniteGroup& G,
                                const std::vector<std::pair<std::string, SubgroupSpec>>& subgroups = {}) {
    std::ostringstream os;
    os << G.order() << "\n";
    for (const auto& row : G.table()) {
        for (std::size_t j = 0; j < row.size(); ++j) os << (j ? " " : "") << row[j];
        os << "\n";
    }
    for (const auto& [name, H] : subgroups) {
        os << name << ":";
        for (const auto h : H.members) os << " " << h;
        os << "\n";
    }
    return os.str();
}

}  // namespace inoue

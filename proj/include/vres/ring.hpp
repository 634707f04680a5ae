#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "vres/errors.hpp"
#include "vres/field.hpp"

namespace vres {

inline constexpr int kMaxVars = 16;

struct Mono {
    std::array<std::uint8_t, kMaxVars> e{};
    std::uint16_t deg = 0;

    bool operator==(const Mono& o) const { return e == o.e; }
    bool isOne() const { return deg == 0; }
    bool divides(const Mono& o) const {
        for (int i = 0; i < kMaxVars; ++i)
            if (e[i] > o.e[i]) return false;
        return true;
    }
    Mono operator*(const Mono& o) const {
        Mono r;
        for (int i = 0; i < kMaxVars; ++i) {
            unsigned s = unsigned(e[i]) + o.e[i];
            if (s > 255) throw DomainError("exponent overflow");
            r.e[i] = static_cast<std::uint8_t>(s);
        }
        r.deg = static_cast<std::uint16_t>(deg + o.deg);
        return r;
    }
    // this / o, requires o | this
    Mono operator/(const Mono& o) const {
        Mono r;
        for (int i = 0; i < kMaxVars; ++i) r.e[i] = static_cast<std::uint8_t>(e[i] - o.e[i]);
        r.deg = static_cast<std::uint16_t>(deg - o.deg);
        return r;
    }
    Mono lcm(const Mono& o) const {
        Mono r;
        for (int i = 0; i < kMaxVars; ++i) {
            r.e[i] = std::max(e[i], o.e[i]);
            r.deg = static_cast<std::uint16_t>(r.deg + r.e[i]);
        }
        return r;
    }
    Mono gcd(const Mono& o) const {
        Mono r;
        for (int i = 0; i < kMaxVars; ++i) {
            r.e[i] = std::min(e[i], o.e[i]);
            r.deg = static_cast<std::uint16_t>(r.deg + r.e[i]);
        }
        return r;
    }
    unsigned support() const {
        unsigned s = 0;
        for (int i = 0; i < kMaxVars; ++i)
            if (e[i]) s |= 1u << i;
        return s;
    }
    bool squarefree() const {
        for (auto x : e)
            if (x > 1) return false;
        return true;
    }
    static Mono var(int i) {
        Mono m;
        m.e[i] = 1;
        m.deg = 1;
        return m;
    }
    static Mono fromSupport(unsigned s) {
        Mono m;
        for (int i = 0; i < kMaxVars; ++i)
            if (s >> i & 1) {
                m.e[i] = 1;
                ++m.deg;
            }
        return m;
    }
};

struct MonoHash {
    std::size_t operator()(const Mono& m) const {
        std::size_t h = 1469598103934665603ull;
        for (auto x : m.e) h = (h ^ x) * 1099511628211ull;
        return h;
    }
};

// Graded reverse lexicographic comparison: >0 when a > b.
inline int grevlexCmp(const Mono& a, const Mono& b) {
    if (a.deg != b.deg) return a.deg > b.deg ? 1 : -1;
    for (int i = kMaxVars - 1; i >= 0; --i)
        if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
    return 0;
}

struct Term {
    Mono m;
    coef c;
};

// Terms sorted by decreasing grevlex, no zero coefficients.
struct Poly {
    std::vector<Term> t;

    bool isZero() const { return t.empty(); }
    bool operator==(const Poly& o) const {
        if (t.size() != o.t.size()) return false;
        for (std::size_t i = 0; i < t.size(); ++i)
            if (!(t[i].m == o.t[i].m) || t[i].c != o.t[i].c) return false;
        return true;
    }
    static Poly constant(coef c) {
        Poly p;
        if (c) p.t.push_back({Mono{}, c});
        return p;
    }
    static Poly monomial(const Mono& m, coef c = 1) {
        Poly p;
        if (c) p.t.push_back({m, c});
        return p;
    }
    bool isConstant() const { return t.empty() || (t.size() == 1 && t[0].m.isOne()); }
    coef constantValue() const { return (t.size() == 1 && t[0].m.isOne()) ? t[0].c : 0; }
    bool isMonomialTerm() const { return t.size() == 1; }
};

Poly add(const Poly& a, const Poly& b, const Field& F);
Poly sub(const Poly& a, const Poly& b, const Field& F);
Poly scale(const Poly& a, coef c, const Field& F);
Poly mulTerm(const Poly& a, const Mono& m, coef c, const Field& F);
Poly mul(const Poly& a, const Poly& b, const Field& F);
Poly neg(const Poly& a, const Field& F);

using Deg = std::vector<int>;

Deg degAdd(const Deg& a, const Deg& b);
Deg degSub(const Deg& a, const Deg& b);
Deg degNeg(const Deg& a);
inline int degTotal(const Deg& d) {
    int s = 0;
    for (int x : d) s += x;
    return s;
}

// Polynomial ring graded by Z^r, each variable of unit-vector degree.
struct Ring {
    Field F;
    int nvars = 0;
    int r = 0;
    std::vector<int> varCoord;          // deg(x_v) = e_{varCoord[v]}
    std::vector<int> blocks;            // block sizes of the underlying product
    std::vector<std::string> names;
    std::vector<Mono> irrelevant;       // generators of B
    std::vector<std::vector<int>> irrelevantFactors;  // B = product of ideals of these variable sets

    static Ring product(const std::vector<int>& blocks, coef p = kDefaultChar);
    // same variables and B, graded by Z^N with deg(x_v) = e_v
    static Ring fine(const Ring& base);

    Deg degOf(const Mono& m) const;
    Deg zero() const { return Deg(r, 0); }
    bool isFine() const { return r == nvars; }
    int varIndex(const std::string& name) const;  // -1 when unknown
};

// Monomials of multidegree d.
std::vector<Mono> monomialsOfDegree(const Ring& R, const Deg& d);

bool isHomogeneous(const Ring& R, const Poly& f);
Deg polyDeg(const Ring& R, const Poly& f);  // degree of the leading term

Poly parsePoly(const Ring& R, const std::string& text);
std::string formatPoly(const Ring& R, const Poly& f);

// Map between graded free modules: rows are target twists, cols source twists,
// entries row-major with deg(entry(u,v)) = cols[v] - rows[u].
struct GradedMatrix {
    std::vector<Deg> rows, cols;
    std::vector<Poly> e;

    GradedMatrix() = default;
    GradedMatrix(std::vector<Deg> r, std::vector<Deg> c)
        : rows(std::move(r)), cols(std::move(c)), e(rows.size() * cols.size()) {}

    int nrows() const { return static_cast<int>(rows.size()); }
    int ncols() const { return static_cast<int>(cols.size()); }
    Poly& at(int u, int v) { return e[std::size_t(u) * cols.size() + v]; }
    const Poly& at(int u, int v) const { return e[std::size_t(u) * cols.size() + v]; }
    bool isZero() const;
    bool operator==(const GradedMatrix& o) const { return rows == o.rows && cols == o.cols && e == o.e; }
};

GradedMatrix matMul(const Ring& R, const GradedMatrix& a, const GradedMatrix& b);
GradedMatrix transposeDual(const GradedMatrix& a);  // transpose with negated twists
GradedMatrix identityMatrix(const std::vector<Deg>& twists);
GradedMatrix selectColumns(const GradedMatrix& a, const std::vector<int>& cols);
GradedMatrix concatColumns(const GradedMatrix& a, const GradedMatrix& b);
GradedMatrix blockDiagonal(const GradedMatrix& a, const GradedMatrix& b);
GradedMatrix scaleMatrix(const Ring& R, const GradedMatrix& a, coef c);

// Checks deg(entry(u,v)) = cols[v] - rows[u] for all nonzero entries; reports the first failure.
bool isHomogeneousMatrix(const Ring& R, const GradedMatrix& a, std::string* why = nullptr);

}  // namespace vres

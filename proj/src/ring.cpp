#include "vres/ring.hpp"

#include <algorithm>
#include <cctype>

namespace vres {

namespace {

Poly combine(const Poly& a, const Poly& b, coef fb, const Field& F) {
    // a + fb * b
    Poly out;
    out.t.reserve(a.t.size() + b.t.size());
    std::size_t i = 0, j = 0;
    while (i < a.t.size() || j < b.t.size()) {
        int c;
        if (i == a.t.size()) c = -1;
        else if (j == b.t.size()) c = 1;
        else c = grevlexCmp(a.t[i].m, b.t[j].m);
        if (c > 0) {
            out.t.push_back(a.t[i++]);
        } else if (c < 0) {
            coef v = F.mul(fb, b.t[j].c);
            if (v) out.t.push_back({b.t[j].m, v});
            ++j;
        } else {
            coef v = F.add(a.t[i].c, F.mul(fb, b.t[j].c));
            if (v) out.t.push_back({a.t[i].m, v});
            ++i;
            ++j;
        }
    }
    return out;
}

}  // namespace

Poly add(const Poly& a, const Poly& b, const Field& F) { return combine(a, b, 1, F); }
Poly sub(const Poly& a, const Poly& b, const Field& F) { return combine(a, b, F.neg(1), F); }

Poly scale(const Poly& a, coef c, const Field& F) {
    Poly out;
    if (c == 0) return out;
    out.t.reserve(a.t.size());
    for (auto& t : a.t) out.t.push_back({t.m, F.mul(t.c, c)});
    return out;
}

Poly neg(const Poly& a, const Field& F) { return scale(a, F.neg(1), F); }

Poly mulTerm(const Poly& a, const Mono& m, coef c, const Field& F) {
    Poly out;
    if (c == 0) return out;
    out.t.reserve(a.t.size());
    for (auto& t : a.t) out.t.push_back({t.m * m, F.mul(t.c, c)});
    return out;
}

Poly mul(const Poly& a, const Poly& b, const Field& F) {
    Poly out;
    for (auto& t : b.t) out = add(out, mulTerm(a, t.m, t.c, F), F);
    return out;
}

Deg degAdd(const Deg& a, const Deg& b) {
    Deg r(a);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}
Deg degSub(const Deg& a, const Deg& b) {
    Deg r(a);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}
Deg degNeg(const Deg& a) {
    Deg r(a);
    for (auto& x : r) x = -x;
    return r;
}

Ring Ring::product(const std::vector<int>& blocks, coef p) {
    Ring R;
    R.F = Field(p);
    R.blocks = blocks;
    R.r = static_cast<int>(blocks.size());
    for (int c = 0; c < R.r; ++c) {
        if (blocks[c] < 1) throw InputError("block sizes must be positive");
        std::vector<int> vars;
        for (int j = 0; j < blocks[c]; ++j) {
            vars.push_back(R.nvars);
            R.varCoord.push_back(c);
            R.names.push_back(R.r == 1 ? "x" + std::to_string(j)
                                       : "x_" + std::to_string(c + 1) + "_" + std::to_string(j));
            ++R.nvars;
        }
        R.irrelevantFactors.push_back(vars);
    }
    if (R.nvars > kMaxVars) throw InputError("at most " + std::to_string(kMaxVars) + " variables are supported");
    std::vector<Mono> gens{Mono{}};
    for (auto& vars : R.irrelevantFactors) {
        std::vector<Mono> next;
        for (auto& g : gens)
            for (int v : vars) next.push_back(g * Mono::var(v));
        gens.swap(next);
    }
    R.irrelevant = gens;
    return R;
}

Ring Ring::fine(const Ring& base) {
    Ring R = base;
    R.r = base.nvars;
    for (int v = 0; v < R.nvars; ++v) R.varCoord[v] = v;
    return R;
}

Deg Ring::degOf(const Mono& m) const {
    Deg d(r, 0);
    for (int v = 0; v < nvars; ++v) d[varCoord[v]] += m.e[v];
    return d;
}

int Ring::varIndex(const std::string& name) const {
    for (int v = 0; v < nvars; ++v)
        if (names[v] == name) return v;
    if (r == 1 && name.rfind("x_1_", 0) == 0) {
        std::string rest = name.substr(4);
        if (!rest.empty() && std::all_of(rest.begin(), rest.end(), ::isdigit)) {
            int j = std::stoi(rest);
            if (j < nvars) return j;
        }
    }
    return -1;
}

std::vector<Mono> monomialsOfDegree(const Ring& R, const Deg& d) {
    for (int x : d)
        if (x < 0) return {};
    std::vector<Mono> out{Mono{}};
    for (int c = 0; c < R.r; ++c) {
        std::vector<int> vars;
        for (int v = 0; v < R.nvars; ++v)
            if (R.varCoord[v] == c) vars.push_back(v);
        if (vars.empty()) {
            if (d[c] != 0) return {};
            continue;
        }
        std::vector<Mono> part;
        std::function<void(std::size_t, int, Mono)> rec = [&](std::size_t k, int left, Mono m) {
            if (k + 1 == vars.size()) {
                m.e[vars[k]] = static_cast<std::uint8_t>(left);
                m.deg = static_cast<std::uint16_t>(m.deg + left);
                part.push_back(m);
                return;
            }
            for (int a = left; a >= 0; --a) {
                Mono n = m;
                n.e[vars[k]] = static_cast<std::uint8_t>(a);
                n.deg = static_cast<std::uint16_t>(n.deg + a);
                rec(k + 1, left - a, n);
            }
        };
        rec(0, d[c], Mono{});
        std::vector<Mono> next;
        for (auto& a : out)
            for (auto& b : part) next.push_back(a * b);
        out.swap(next);
    }
    return out;
}

bool isHomogeneous(const Ring& R, const Poly& f) {
    if (f.t.empty()) return true;
    Deg d = R.degOf(f.t[0].m);
    for (auto& t : f.t)
        if (R.degOf(t.m) != d) return false;
    return true;
}

Deg polyDeg(const Ring& R, const Poly& f) {
    if (f.t.empty()) throw DomainError("degree of the zero polynomial");
    return R.degOf(f.t[0].m);
}

namespace {

struct Parser {
    const Ring& R;
    const std::string& s;
    std::size_t pos = 0;

    void ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    [[noreturn]] void fail(const std::string& msg) {
        throw InputError("cannot parse polynomial '" + s + "' at position " + std::to_string(pos) + ": " + msg);
    }
    Poly expr() {
        ws();
        Poly acc;
        bool first = true;
        while (true) {
            ws();
            bool negate = false;
            if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
                negate = s[pos] == '-';
                ++pos;
            } else if (!first) {
                break;
            }
            Poly t = term();
            acc = negate ? sub(acc, t, R.F) : add(acc, t, R.F);
            first = false;
        }
        return acc;
    }
    Poly term() {
        Poly p = factor();
        while (true) {
            ws();
            if (pos < s.size() && s[pos] == '*') {
                ++pos;
                p = mul(p, factor(), R.F);
            } else {
                return p;
            }
        }
    }
    Poly factor() {
        Poly base = primary();
        ws();
        if (pos < s.size() && s[pos] == '^') {
            ++pos;
            ws();
            if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos]))) fail("expected exponent");
            long e = 0;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
                e = e * 10 + (s[pos++] - '0');
                if (e > 255) fail("exponent too large");
            }
            Poly r = Poly::constant(1);
            for (long i = 0; i < e; ++i) r = mul(r, base, R.F);
            return r;
        }
        return base;
    }
    Poly primary() {
        ws();
        if (pos >= s.size()) fail("unexpected end of input");
        char c = s[pos];
        if (c == '(') {
            ++pos;
            Poly p = expr();
            ws();
            if (pos >= s.size() || s[pos] != ')') fail("expected ')'");
            ++pos;
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            long long v = 0;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
                v = (v * 10 + (s[pos++] - '0')) % R.F.p;
            return Poly::constant(R.F.fromInt(v));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos;
            while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_')) ++pos;
            std::string name = s.substr(start, pos - start);
            int v = R.varIndex(name);
            if (v < 0) {
                pos = start;
                fail("unknown variable '" + name + "'");
            }
            return Poly::monomial(Mono::var(v));
        }
        fail(std::string("unexpected character '") + c + "'");
    }
};

}  // namespace

Poly parsePoly(const Ring& R, const std::string& text) {
    Parser p{R, text};
    Poly f = p.expr();
    p.ws();
    if (p.pos != text.size()) p.fail("trailing input");
    return f;
}

std::string formatPoly(const Ring& R, const Poly& f) {
    if (f.t.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto& t : f.t) {
        long long c = R.F.toSigned(t.c);
        bool negative = c < 0;
        long long a = negative ? -c : c;
        if (first) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        std::string mono;
        for (int v = 0; v < R.nvars; ++v) {
            if (!t.m.e[v]) continue;
            if (!mono.empty()) mono += "*";
            mono += R.names[v];
            if (t.m.e[v] > 1) mono += "^" + std::to_string(t.m.e[v]);
        }
        if (mono.empty()) out += std::to_string(a);
        else if (a == 1) out += mono;
        else out += std::to_string(a) + "*" + mono;
        first = false;
    }
    return out;
}

bool GradedMatrix::isZero() const {
    for (auto& p : e)
        if (!p.isZero()) return false;
    return true;
}

GradedMatrix matMul(const Ring& R, const GradedMatrix& a, const GradedMatrix& b) {
    if (a.cols != b.rows) throw InputError("matrix product with mismatched twists");
    GradedMatrix c(a.rows, b.cols);
    for (int u = 0; u < a.nrows(); ++u)
        for (int k = 0; k < a.ncols(); ++k) {
            const Poly& x = a.at(u, k);
            if (x.isZero()) continue;
            for (int v = 0; v < b.ncols(); ++v) {
                const Poly& y = b.at(k, v);
                if (y.isZero()) continue;
                c.at(u, v) = add(c.at(u, v), mul(x, y, R.F), R.F);
            }
        }
    return c;
}

GradedMatrix transposeDual(const GradedMatrix& a) {
    std::vector<Deg> rows, cols;
    for (auto& d : a.cols) rows.push_back(degNeg(d));
    for (auto& d : a.rows) cols.push_back(degNeg(d));
    GradedMatrix t(rows, cols);
    for (int u = 0; u < a.nrows(); ++u)
        for (int v = 0; v < a.ncols(); ++v) t.at(v, u) = a.at(u, v);
    return t;
}

GradedMatrix identityMatrix(const std::vector<Deg>& twists) {
    GradedMatrix m(twists, twists);
    for (int i = 0; i < m.nrows(); ++i) m.at(i, i) = Poly::constant(1);
    return m;
}

GradedMatrix selectColumns(const GradedMatrix& a, const std::vector<int>& cols) {
    std::vector<Deg> ct;
    for (int v : cols) ct.push_back(a.cols[v]);
    GradedMatrix m(a.rows, ct);
    for (int u = 0; u < a.nrows(); ++u)
        for (std::size_t k = 0; k < cols.size(); ++k) m.at(u, static_cast<int>(k)) = a.at(u, cols[k]);
    return m;
}

GradedMatrix concatColumns(const GradedMatrix& a, const GradedMatrix& b) {
    if (a.rows != b.rows) throw InputError("column concatenation with mismatched row twists");
    std::vector<Deg> ct = a.cols;
    ct.insert(ct.end(), b.cols.begin(), b.cols.end());
    GradedMatrix m(a.rows, ct);
    for (int u = 0; u < a.nrows(); ++u) {
        for (int v = 0; v < a.ncols(); ++v) m.at(u, v) = a.at(u, v);
        for (int v = 0; v < b.ncols(); ++v) m.at(u, a.ncols() + v) = b.at(u, v);
    }
    return m;
}

GradedMatrix blockDiagonal(const GradedMatrix& a, const GradedMatrix& b) {
    std::vector<Deg> rt = a.rows, ct = a.cols;
    rt.insert(rt.end(), b.rows.begin(), b.rows.end());
    ct.insert(ct.end(), b.cols.begin(), b.cols.end());
    GradedMatrix m(rt, ct);
    for (int u = 0; u < a.nrows(); ++u)
        for (int v = 0; v < a.ncols(); ++v) m.at(u, v) = a.at(u, v);
    for (int u = 0; u < b.nrows(); ++u)
        for (int v = 0; v < b.ncols(); ++v) m.at(a.nrows() + u, a.ncols() + v) = b.at(u, v);
    return m;
}

GradedMatrix scaleMatrix(const Ring& R, const GradedMatrix& a, coef c) {
    GradedMatrix m = a;
    for (auto& p : m.e) p = scale(p, c, R.F);
    return m;
}

bool isHomogeneousMatrix(const Ring& R, const GradedMatrix& a, std::string* why) {
    for (int u = 0; u < a.nrows(); ++u)
        for (int v = 0; v < a.ncols(); ++v) {
            const Poly& p = a.at(u, v);
            if (p.isZero()) continue;
            Deg want = degSub(a.cols[v], a.rows[u]);
            for (auto& t : p.t)
                if (R.degOf(t.m) != want) {
                    if (why) *why = "entry (" + std::to_string(u) + "," + std::to_string(v) + ") = " + formatPoly(R, p);
                    return false;
                }
        }
    return true;
}

}  // namespace vres

#include "vres/algebra.hpp"

#include <algorithm>

namespace vres {

ModOrder defaultOrder(const std::vector<Deg>& twists) {
    ModOrder o;
    for (auto& t : twists) {
        o.level.push_back(0);
        o.weight.push_back(degTotal(t));
    }
    return o;
}

Vec columnVec(const GradedMatrix& a, int v, int compOffset) {
    Vec out;
    for (int u = 0; u < a.nrows(); ++u)
        for (auto& t : a.at(u, v).t) out.push_back({t.m, u + compOffset, t.c});
    return out;
}

namespace {

ModOrder elimOrder(const std::vector<Deg>& top, const std::vector<Deg>& bottom) {
    ModOrder o;
    for (auto& t : top) {
        o.level.push_back(1);
        o.weight.push_back(degTotal(t));
    }
    for (auto& t : bottom) {
        o.level.push_back(0);
        o.weight.push_back(degTotal(t));
    }
    return o;
}

// Columns from vectors living in components [off, off + rows.size()).
GradedMatrix fromVecs(const Ring& R, const std::vector<Deg>& rows, const std::vector<Vec>& vs, int off) {
    std::vector<Deg> cols;
    for (auto& v : vs) cols.push_back(degAdd(R.degOf(v[0].m), rows[v[0].comp - off]));
    GradedMatrix m(rows, cols);
    for (std::size_t k = 0; k < vs.size(); ++k) {
        for (auto& t : vs[k]) {
            Poly& p = m.at(t.comp - off, static_cast<int>(k));
            p.t.push_back({t.m, t.c});
        }
    }
    for (auto& p : m.e)
        std::sort(p.t.begin(), p.t.end(), [](const Term& x, const Term& y) { return grevlexCmp(x.m, y.m) > 0; });
    return m;
}

std::vector<Vec> zeroTop(const GroebnerBasis& gb, int top) {
    std::vector<Vec> out;
    for (auto& g : gb.elems)
        if (g[0].comp >= top) out.push_back(g);
    return out;
}

// Monomial submodule: per component minimal monomial generators.
std::vector<std::vector<Mono>> monomialParts(const GradedMatrix& a) {
    std::vector<std::vector<Mono>> parts(a.nrows());
    for (int v = 0; v < a.ncols(); ++v)
        for (int u = 0; u < a.nrows(); ++u)
            if (!a.at(u, v).isZero()) parts[u].push_back(a.at(u, v).t[0].m);
    for (auto& p : parts) p = minimalizeMonomials(p);
    return parts;
}

GradedMatrix fromMonomialParts(const Ring& R, const std::vector<Deg>& rows, const std::vector<std::vector<Mono>>& parts) {
    std::vector<Vec> vs;
    for (std::size_t u = 0; u < parts.size(); ++u)
        for (auto& m : parts[u]) vs.push_back({{m, static_cast<int>(u), 1}});
    return fromVecs(R, rows, vs, 0);
}

}  // namespace

GroebnerBasis gbOf(const Ring& R, const GradedMatrix& a) {
    std::vector<Vec> gens;
    for (int v = 0; v < a.ncols(); ++v) gens.push_back(columnVec(a, v));
    return groebner(R.F, defaultOrder(a.rows), gens);
}

bool isMonomialMatrix(const GradedMatrix& a) {
    for (int v = 0; v < a.ncols(); ++v) {
        int nz = 0;
        for (int u = 0; u < a.nrows(); ++u) {
            const Poly& p = a.at(u, v);
            if (p.isZero()) continue;
            if (p.t.size() != 1) return false;
            ++nz;
        }
        if (nz > 1) return false;
    }
    return true;
}

bool contained(const Ring& R, const GradedMatrix& a, const GroebnerBasis& gb) {
    for (int v = 0; v < a.ncols(); ++v)
        if (!normalForm(R.F, gb, columnVec(a, v)).empty()) return false;
    return true;
}

bool contained(const Ring& R, const GradedMatrix& a, const GradedMatrix& b) {
    if (a.rows != b.rows) throw InputError("submodules of different free modules");
    if (a.ncols() == 0) return true;
    return contained(R, a, gbOf(R, b));
}

bool sameSubmodule(const Ring& R, const GradedMatrix& a, const GradedMatrix& b) {
    return contained(R, a, b) && contained(R, b, a);
}

GradedMatrix mingens(const Ring& R, const GradedMatrix& a) {
    std::vector<Vec> gens;
    for (int v = 0; v < a.ncols(); ++v) gens.push_back(columnVec(a, v));
    GBOptions opts;
    opts.markMinimal = true;
    opts.reduceTails = false;
    auto gb = groebner(R.F, defaultOrder(a.rows), gens, opts);
    return selectColumns(a, gb.minimalInputs);
}

GradedMatrix syz(const Ring& R, const GradedMatrix& a, bool minimal) {
    const int m = a.nrows();
    if (a.ncols() == 0) return GradedMatrix(a.cols, {});
    std::vector<Vec> gens;
    for (int v = 0; v < a.ncols(); ++v) {
        Vec g = columnVec(a, v);
        g.push_back({Mono{}, m + v, 1});
        gens.push_back(std::move(g));
    }
    auto gb = groebner(R.F, elimOrder(a.rows, a.cols), gens);
    auto z = zeroTop(gb, m);
    GradedMatrix out = fromVecs(R, a.cols, z, m);
    return minimal ? mingens(R, out) : out;
}

GradedMatrix liftThrough(const Ring& R, const GradedMatrix& a, const GradedMatrix& b) {
    if (a.rows != b.rows) throw InputError("lift with mismatched targets");
    const int m = a.nrows();
    GradedMatrix x(a.cols, b.cols);
    if (b.ncols() == 0) return x;
    std::vector<Vec> gens;
    for (int v = 0; v < a.ncols(); ++v) {
        Vec g = columnVec(a, v);
        g.push_back({Mono{}, m + v, 1});
        gens.push_back(std::move(g));
    }
    ModOrder o = elimOrder(a.rows, a.cols);
    auto gb = groebner(R.F, o, gens, {false, false});
    for (int col = 0; col < b.ncols(); ++col) {
        Vec v = columnVec(b, col);
        sortVec(v, o);
        while (!v.empty() && v[0].comp < m) {
            const Vec* red = nullptr;
            for (auto& g : gb.elems)
                if (g[0].comp == v[0].comp && g[0].m.divides(v[0].m)) {
                    red = &g;
                    break;
                }
            if (!red) throw DomainError("column " + std::to_string(col) + " is not in the image");
            v = vecAxpy(v, *red, v[0].m / (*red)[0].m, R.F.neg(v[0].c), o, R.F);
        }
        for (auto& t : v) {
            Poly& p = x.at(t.comp - m, col);
            p = sub(p, Poly::monomial(t.m, t.c), R.F);
        }
    }
    return x;
}

GradedMatrix quotient(const Ring& R, const GradedMatrix& n, const Poly& f) {
    if (f.isZero()) throw DomainError("quotient by the zero polynomial");
    if (f.isConstant()) return n;
    if (isMonomialMatrix(n) && f.isMonomialTerm()) {
        auto parts = monomialParts(n);
        for (auto& p : parts) {
            for (auto& mono : p) mono = mono / mono.gcd(f.t[0].m);
            p = minimalizeMonomials(p);
        }
        return fromMonomialParts(R, n.rows, parts);
    }
    const int m = n.nrows();
    Deg df = polyDeg(R, f);
    std::vector<Deg> bottom;
    for (auto& t : n.rows) bottom.push_back(degAdd(t, df));
    std::vector<Vec> gens;
    for (int k = 0; k < m; ++k) {
        Vec g;
        for (auto& t : f.t) g.push_back({t.m, k, t.c});
        g.push_back({Mono{}, m + k, 1});
        gens.push_back(std::move(g));
    }
    for (int v = 0; v < n.ncols(); ++v) gens.push_back(columnVec(n, v));
    auto gb = groebner(R.F, elimOrder(n.rows, bottom), gens);
    auto z = zeroTop(gb, m);
    return mingens(R, fromVecs(R, n.rows, z, m));
}

GradedMatrix intersect(const Ring& R, const GradedMatrix& a, const GradedMatrix& b) {
    if (a.rows != b.rows) throw InputError("intersection of submodules of different free modules");
    if (isMonomialMatrix(a) && isMonomialMatrix(b)) {
        auto pa = monomialParts(a), pb = monomialParts(b);
        std::vector<std::vector<Mono>> parts(a.nrows());
        for (int u = 0; u < a.nrows(); ++u) {
            for (auto& x : pa[u])
                for (auto& y : pb[u]) parts[u].push_back(x.lcm(y));
            parts[u] = minimalizeMonomials(parts[u]);
        }
        return fromMonomialParts(R, a.rows, parts);
    }
    const int m = a.nrows();
    std::vector<Vec> gens;
    for (int v = 0; v < a.ncols(); ++v) {
        Vec g = columnVec(a, v);
        Vec h = columnVec(a, v, m);
        g.insert(g.end(), h.begin(), h.end());
        gens.push_back(std::move(g));
    }
    for (int v = 0; v < b.ncols(); ++v) gens.push_back(columnVec(b, v));
    auto gb = groebner(R.F, elimOrder(a.rows, a.rows), gens);
    return mingens(R, fromVecs(R, a.rows, zeroTop(gb, m), m));
}

GradedMatrix quotientIdeal(const Ring& R, const GradedMatrix& n, const std::vector<Poly>& j) {
    std::optional<GradedMatrix> acc;
    for (auto& f : j) {
        if (f.isZero()) continue;
        GradedMatrix q = quotient(R, n, f);
        acc = acc ? intersect(R, *acc, q) : q;
    }
    if (!acc) return identityMatrix(n.rows);
    return *acc;
}

namespace {

GradedMatrix quotientInfinity(const Ring& R, GradedMatrix n, const Poly& f) {
    while (true) {
        GradedMatrix q = quotient(R, n, f);
        if (contained(R, q, n)) return n;
        n = q;
    }
}

}  // namespace

GradedMatrix saturate(const Ring& R, const GradedMatrix& n) {
    GradedMatrix cur = n;
    if (!R.irrelevantFactors.empty()) {
        for (auto& vars : R.irrelevantFactors) {
            std::optional<GradedMatrix> acc;
            for (int x : vars) {
                GradedMatrix q = quotientInfinity(R, cur, Poly::monomial(Mono::var(x)));
                acc = acc ? intersect(R, *acc, q) : q;
            }
            cur = *acc;
        }
    } else {
        std::optional<GradedMatrix> acc;
        for (auto& b : R.irrelevant) {
            GradedMatrix q = quotientInfinity(R, cur, Poly::monomial(b));
            acc = acc ? intersect(R, *acc, q) : q;
        }
        if (acc) cur = *acc;
    }
    return mingens(R, cur);
}

bool isIrrelevantQuotient(const Ring& R, const GradedMatrix& n) {
    if (n.nrows() == 0) return true;
    return contained(R, identityMatrix(n.rows), saturate(R, n));
}

GradedMatrix idealMatrix(const Ring& R, const std::vector<Poly>& gens) {
    std::vector<Deg> cols;
    std::vector<Poly> nz;
    for (auto& g : gens) {
        if (g.isZero()) continue;
        if (!isHomogeneous(R, g)) throw InputError("generator " + formatPoly(R, g) + " is not homogeneous");
        cols.push_back(polyDeg(R, g));
        nz.push_back(g);
    }
    GradedMatrix m({R.zero()}, cols);
    for (std::size_t k = 0; k < nz.size(); ++k) m.at(0, static_cast<int>(k)) = nz[k];
    return m;
}

std::vector<Poly> idealGens(const GradedMatrix& a) {
    std::vector<Poly> out;
    for (int v = 0; v < a.ncols(); ++v)
        if (!a.at(0, v).isZero()) out.push_back(a.at(0, v));
    return out;
}

GradedMatrix annihilator(const Ring& R, const GradedMatrix& n) {
    const int m = n.nrows();
    if (m == 1) {
        std::vector<Poly> gens;
        for (int v = 0; v < n.ncols(); ++v) gens.push_back(n.at(0, v));
        return mingens(R, idealMatrix(R, gens));
    }
    std::optional<GradedMatrix> acc;
    for (int k = 0; k < m; ++k) {
        std::vector<Vec> gens;
        gens.push_back({{Mono{}, k, 1}, {Mono{}, m, 1}});
        for (int v = 0; v < n.ncols(); ++v) gens.push_back(columnVec(n, v));
        auto gb = groebner(R.F, elimOrder(n.rows, {n.rows[k]}), gens);
        std::vector<Poly> polys;
        for (auto& g : zeroTop(gb, m)) {
            Poly p;
            for (auto& t : g) p.t.push_back({t.m, t.c});
            polys.push_back(p);
        }
        GradedMatrix ik = idealMatrix(R, polys);
        acc = acc ? intersect(R, *acc, ik) : ik;
    }
    if (!acc) return idealMatrix(R, {Poly::constant(1)});
    return mingens(R, *acc);
}

namespace {

int minHittingSet(const std::vector<unsigned>& sup, unsigned chosen, int size, int best) {
    if (size >= best) return best;
    for (unsigned s : sup) {
        if (s & chosen) continue;
        for (unsigned rest = s; rest; rest &= rest - 1) {
            unsigned bit = rest & -rest;
            best = std::min(best, minHittingSet(sup, chosen | bit, size + 1, best));
        }
        return best;
    }
    return size;
}

}  // namespace

int monomialDim(int nvars, const std::vector<unsigned>& supports) {
    for (unsigned s : supports)
        if (s == 0) return -1;  // unit ideal
    return nvars - minHittingSet(supports, 0, 0, nvars + 1);
}

int krullDim(const Ring& R, const GradedMatrix& n) {
    const int m = n.nrows();
    if (m == 0) return -1;
    auto gb = gbOf(R, n);
    std::vector<std::vector<unsigned>> sup(m);
    for (auto& g : gb.elems) sup[g[0].comp].push_back(g[0].m.support());
    int d = -1;
    for (int k = 0; k < m; ++k) d = std::max(d, monomialDim(R.nvars, sup[k]));
    return d;
}

long hilbertFunction(const Ring& R, const GroebnerBasis& gb, const std::vector<Deg>& twists, const Deg& a) {
    long total = 0;
    for (std::size_t k = 0; k < twists.size(); ++k) {
        std::vector<Mono> lts;
        for (auto& g : gb.elems)
            if (g[0].comp == static_cast<int>(k)) lts.push_back(g[0].m);
        for (auto& mono : monomialsOfDegree(R, degSub(a, twists[k]))) {
            bool standard = true;
            for (auto& l : lts)
                if (l.divides(mono)) {
                    standard = false;
                    break;
                }
            if (standard) ++total;
        }
    }
    return total;
}

long hilbertFunction(const Ring& R, const GradedMatrix& n, const Deg& a) {
    return hilbertFunction(R, gbOf(R, n), n.rows, a);
}

std::vector<Mono> minimalizeMonomials(std::vector<Mono> gens) {
    std::sort(gens.begin(), gens.end(), [](const Mono& a, const Mono& b) { return grevlexCmp(a, b) < 0; });
    std::vector<Mono> out;
    for (auto& g : gens) {
        bool redundant = false;
        for (auto& o : out)
            if (o.divides(g)) {
                redundant = true;
                break;
            }
        if (!redundant) out.push_back(g);
    }
    return out;
}

namespace {

void decompose(std::vector<Mono> gens, std::vector<Mono>& out) {
    gens = minimalizeMonomials(std::move(gens));
    for (auto& g : gens) {
        if (g.isOne()) return;  // unit ideal contributes nothing
        unsigned s = g.support();
        if (__builtin_popcount(s) < 2) continue;
        int v = __builtin_ctz(s);
        Mono power;
        power.e[v] = g.e[v];
        power.deg = g.e[v];
        std::vector<Mono> left = gens, right = gens;
        left.push_back(power);
        right.push_back(g / power);
        decompose(left, out);
        decompose(right, out);
        return;
    }
    Mono comp;
    for (auto& g : gens) comp = comp * g;
    out.push_back(comp);
}

// q ⊆ p for irreducible ideals stored as pure-power exponent vectors
bool irreducibleContained(const Mono& q, const Mono& p) {
    for (int v = 0; v < kMaxVars; ++v) {
        if (!q.e[v]) continue;
        if (!p.e[v] || p.e[v] > q.e[v]) return false;
    }
    return true;
}

}  // namespace

std::vector<Mono> irreducibleDecomposition(const std::vector<Mono>& gens) {
    std::vector<Mono> comps;
    decompose(gens, comps);
    std::sort(comps.begin(), comps.end(), [](const Mono& a, const Mono& b) { return grevlexCmp(a, b) < 0; });
    comps.erase(std::unique(comps.begin(), comps.end()), comps.end());
    std::vector<Mono> out;
    for (std::size_t i = 0; i < comps.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < comps.size() && !redundant; ++j)
            if (i != j && irreducibleContained(comps[j], comps[i])) redundant = true;
        if (!redundant) out.push_back(comps[i]);
    }
    return out;
}

}  // namespace vres

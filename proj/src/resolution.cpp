#include "vres/resolution.hpp"

#include <algorithm>
#include <random>

#include "vres/linalg.hpp"

namespace vres {

Presentation Presentation::cyclic(const Ring& R, const std::vector<Poly>& ideal) {
    return Presentation{{R.zero()}, idealMatrix(R, ideal)};
}

Presentation Presentation::free(const std::vector<Deg>& twists) { return Presentation{twists, GradedMatrix(twists, {})}; }

int ChainComplex::length() const {
    for (int i = static_cast<int>(mods.size()) - 1; i >= 0; --i)
        if (!mods[i].empty()) return i;
    return -1;
}

std::vector<int> ChainComplex::ranks() const {
    std::vector<int> r;
    for (int i = 0; i <= length(); ++i) r.push_back(static_cast<int>(mods[i].size()));
    return r;
}

void ChainComplex::trim() {
    int l = length();
    mods.resize(std::max(l + 1, 1));
    d.resize(mods.size() - 1);
}

ChainComplex makeComplex(const std::vector<Deg>& f0, const std::vector<GradedMatrix>& diffs) {
    ChainComplex c;
    c.mods.push_back(f0);
    for (auto& m : diffs) {
        if (m.rows != c.mods.back()) throw InputError("differential does not match the previous module");
        c.mods.push_back(m.cols);
        c.d.push_back(m);
    }
    c.trim();
    return c;
}

CochainComplex homDual(const ChainComplex& c) {
    CochainComplex out;
    for (auto& m : c.mods) {
        std::vector<Deg> t;
        for (auto& d : m) t.push_back(degNeg(d));
        out.mods.push_back(t);
    }
    for (auto& m : c.d) out.delta.push_back(transposeDual(m));
    return out;
}

ChainComplex homDual(const CochainComplex& c) {
    ChainComplex out;
    for (auto& m : c.mods) {
        std::vector<Deg> t;
        for (auto& d : m) t.push_back(degNeg(d));
        out.mods.push_back(t);
    }
    for (auto& m : c.delta) out.d.push_back(transposeDual(m));
    return out;
}

bool squaresToZero(const Ring& R, const ChainComplex& c, std::string* why) {
    for (std::size_t k = 0; k + 1 < c.d.size(); ++k) {
        if (c.d[k].ncols() == 0 || c.d[k + 1].ncols() == 0) continue;
        if (!matMul(R, c.d[k], c.d[k + 1]).isZero()) {
            if (why) *why = "d_" + std::to_string(k + 1) + " d_" + std::to_string(k + 2) + " != 0";
            return false;
        }
    }
    return true;
}

bool isHomogeneousComplex(const Ring& R, const ChainComplex& c, std::string* why) {
    for (std::size_t k = 0; k < c.d.size(); ++k) {
        if (c.d[k].rows != c.mods[k] || c.d[k].cols != c.mods[k + 1]) {
            if (why) *why = "twists of d_" + std::to_string(k + 1) + " do not match the modules";
            return false;
        }
        if (!isHomogeneousMatrix(R, c.d[k], why)) return false;
    }
    return true;
}

namespace {

GradedMatrix dropRow(const GradedMatrix& a, int u) {
    std::vector<Deg> rows = a.rows;
    rows.erase(rows.begin() + u);
    GradedMatrix m(rows, a.cols);
    for (int w = 0, nw = 0; w < a.nrows(); ++w) {
        if (w == u) continue;
        for (int v = 0; v < a.ncols(); ++v) m.at(nw, v) = a.at(w, v);
        ++nw;
    }
    return m;
}

GradedMatrix dropCol(const GradedMatrix& a, int v) {
    std::vector<int> keep;
    for (int y = 0; y < a.ncols(); ++y)
        if (y != v) keep.push_back(y);
    return selectColumns(a, keep);
}

// Gaussian step on a unit entry c = a(u,v): a'(w,y) = a(w,y) - a(w,v) c^{-1} a(u,y).
GradedMatrix eliminate(const Ring& R, const GradedMatrix& a, int u, int v) {
    const Field& F = R.F;
    coef cinv = F.inv(a.at(u, v).constantValue());
    std::vector<Deg> rows = a.rows, cols = a.cols;
    rows.erase(rows.begin() + u);
    cols.erase(cols.begin() + v);
    GradedMatrix m(rows, cols);
    for (int w = 0, nw = 0; w < a.nrows(); ++w) {
        if (w == u) continue;
        const Poly& wv = a.at(w, v);
        for (int y = 0, ny = 0; y < a.ncols(); ++y) {
            if (y == v) continue;
            Poly e = a.at(w, y);
            if (!wv.isZero() && !a.at(u, y).isZero())
                e = sub(e, scale(mul(wv, a.at(u, y), F), cinv, F), F);
            m.at(nw, ny) = std::move(e);
            ++ny;
        }
        ++nw;
    }
    return m;
}

}  // namespace

Minimized minimizeComplex(const Ring& R, const ChainComplex& c, const MinimizeOptions& opts) {
    const Field& F = R.F;
    Minimized out;
    out.c = c;
    ChainComplex& x = out.c;
    if (opts.trackF0) out.p = identityMatrix(c.mods.empty() ? std::vector<Deg>{} : c.mods[0]);
    std::mt19937_64 rng(opts.seed.value_or(0));
    while (true) {
        struct Pos {
            int k, u, v;
        };
        std::vector<Pos> units;
        for (int k = 0; k < static_cast<int>(x.d.size()); ++k) {
            const auto& m = x.d[k];
            for (int u = 0; u < m.nrows(); ++u)
                for (int v = 0; v < m.ncols(); ++v)
                    if (m.at(u, v).constantValue()) {
                        units.push_back({k, u, v});
                        if (!opts.seed) goto found;
                    }
        }
    found:
        if (units.empty()) break;
        Pos p = units[opts.seed ? rng() % units.size() : 0];
        const GradedMatrix a = x.d[p.k];
        if (p.k == 0 && opts.trackF0) {
            coef cinv = F.inv(a.at(p.u, p.v).constantValue());
            GradedMatrix np = out.p;
            for (int w = 0; w < np.nrows(); ++w) {
                if (w == p.u || a.at(w, p.v).isZero()) continue;
                Poly f = scale(a.at(w, p.v), cinv, F);
                for (int y = 0; y < np.ncols(); ++y)
                    if (!out.p.at(p.u, y).isZero()) np.at(w, y) = sub(np.at(w, y), mul(f, out.p.at(p.u, y), F), F);
            }
            out.p = dropRow(np, p.u);
        }
        x.d[p.k] = eliminate(R, a, p.u, p.v);
        if (p.k + 1 < static_cast<int>(x.d.size())) x.d[p.k + 1] = dropRow(x.d[p.k + 1], p.v);
        if (p.k >= 1) x.d[p.k - 1] = dropCol(x.d[p.k - 1], p.u);
        x.mods[p.k].erase(x.mods[p.k].begin() + p.u);
        x.mods[p.k + 1].erase(x.mods[p.k + 1].begin() + p.v);
    }
    x.trim();
    return out;
}

Presentation minimalPresentation(const Ring& R, const Presentation& m) {
    GradedMatrix rel = mingens(R, m.rel);
    ChainComplex c;
    c.mods = {m.gens, rel.cols};
    c.d = {rel};
    Minimized mc = minimizeComplex(R, c);
    if (mc.c.mods.size() < 2) return Presentation::free(mc.c.mods[0]);
    return Presentation{mc.c.mods[0], mingens(R, mc.c.d[0])};
}

ChainComplex freeResolution(const Ring& R, const Presentation& m, const ResolutionOptions& opts) {
    if (!opts.forceGeneral && opts.minimal && isSquarefreeMonomialIdeal(m)) {
        std::vector<Mono> gens;
        for (int v = 0; v < m.rel.ncols(); ++v)
            if (!m.rel.at(0, v).isZero()) gens.push_back(m.rel.at(0, v).t[0].m);
        return squarefreeResolution(R, gens);
    }
    Presentation p = opts.minimal ? minimalPresentation(R, m) : m;
    std::vector<GradedMatrix> diffs;
    if (p.rel.ncols() > 0) {
        diffs.push_back(p.rel);
        while (true) {
            GradedMatrix s = syz(R, diffs.back(), opts.minimal);
            if (s.ncols() == 0) break;
            diffs.push_back(std::move(s));
            if (static_cast<int>(diffs.size()) > R.nvars + 1)
                throw ContradictionError("resolution longer than the number of variables");
        }
    }
    ChainComplex c = makeComplex(p.gens, diffs);
    if (opts.minimal) c = minimizeComplex(R, c).c;
    return c;
}

BettiTable bettiTable(const Ring& R, const ChainComplex& c) {
    (void)R;
    BettiTable t;
    for (int i = 0; i <= c.length(); ++i)
        for (auto& d : c.mods[i]) t.add(i, d, 1);
    return t;
}

Presentation subquotient(const Ring& R, const GradedMatrix& k, const GradedMatrix& l) {
    GradedMatrix km = mingens(R, k);
    if (km.ncols() == 0) return Presentation::free({});
    GradedMatrix both = concatColumns(km, l);
    GradedMatrix s = syz(R, both, true);
    GradedMatrix rel(km.cols, s.cols);
    for (int u = 0; u < km.ncols(); ++u)
        for (int v = 0; v < s.ncols(); ++v) rel.at(u, v) = s.at(u, v);
    return minimalPresentation(R, Presentation{km.cols, rel});
}

bool isIrrelevantModule(const Ring& R, const Presentation& m) {
    if (m.rank() == 0) return true;
    return isIrrelevantQuotient(R, m.rel);
}

ModuleResult extModule(const Ring& R, const ChainComplex& f, int i) {
    ModuleResult res;
    const int len = f.length();
    if (i < 0 || i > len || f.mods[i].empty()) {
        res.zero = res.irrelevant = true;
        res.module = Presentation::free({});
        return res;
    }
    std::vector<Deg> dualTw;
    for (auto& d : f.mods[i]) dualTw.push_back(degNeg(d));
    GradedMatrix k = (i < len && f.d[i].ncols() > 0) ? syz(R, transposeDual(f.d[i]), true) : identityMatrix(dualTw);
    GradedMatrix l = (i > 0) ? transposeDual(f.d[i - 1]) : GradedMatrix(dualTw, {});
    res.module = subquotient(R, k, l);
    res.zero = res.module.rank() == 0;
    res.irrelevant = isIrrelevantModule(R, res.module);
    return res;
}

namespace {

std::vector<Deg> tensorTwists(const std::vector<Deg>& a, const std::vector<Deg>& b) {
    std::vector<Deg> out;
    for (auto& x : a)
        for (auto& y : b) out.push_back(degAdd(x, y));
    return out;
}

// (phi ⊗ 1_G) : A ⊗ G -> B ⊗ G
GradedMatrix tensorLeft(const GradedMatrix& phi, const std::vector<Deg>& g) {
    GradedMatrix m(tensorTwists(phi.rows, g), tensorTwists(phi.cols, g));
    const int n = static_cast<int>(g.size());
    for (int u = 0; u < phi.nrows(); ++u)
        for (int v = 0; v < phi.ncols(); ++v)
            if (!phi.at(u, v).isZero())
                for (int s = 0; s < n; ++s) m.at(u * n + s, v * n + s) = phi.at(u, v);
    return m;
}

// (1_F ⊗ b) : F ⊗ G1 -> F ⊗ G0
GradedMatrix tensorRight(const std::vector<Deg>& f, const GradedMatrix& b) {
    GradedMatrix m(tensorTwists(f, b.rows), tensorTwists(f, b.cols));
    const int r = b.nrows(), c = b.ncols();
    for (std::size_t a = 0; a < f.size(); ++a)
        for (int s = 0; s < r; ++s)
            for (int t = 0; t < c; ++t)
                if (!b.at(s, t).isZero()) m.at(static_cast<int>(a) * r + s, static_cast<int>(a) * c + t) = b.at(s, t);
    return m;
}

}  // namespace

ModuleResult torModule(const Ring& R, const ChainComplex& f, const Presentation& n, int i) {
    ModuleResult res;
    const int len = f.length();
    if (i < 0 || i > len || f.mods[i].empty() || n.rank() == 0) {
        res.zero = res.irrelevant = true;
        res.module = Presentation::free({});
        return res;
    }
    const auto& g0 = n.gens;
    std::vector<Deg> top = tensorTwists(f.mods[i], g0);
    GradedMatrix k;
    if (i == 0) {
        k = identityMatrix(top);
    } else {
        GradedMatrix both = concatColumns(tensorLeft(f.d[i - 1], g0), tensorRight(f.mods[i - 1], n.rel));
        GradedMatrix s = syz(R, both, true);
        k = GradedMatrix(top, s.cols);
        for (int u = 0; u < static_cast<int>(top.size()); ++u)
            for (int v = 0; v < s.ncols(); ++v) k.at(u, v) = s.at(u, v);
    }
    GradedMatrix l = tensorRight(f.mods[i], n.rel);
    if (i < len && f.d[i].ncols() > 0) l = concatColumns(tensorLeft(f.d[i], g0), l);
    res.module = subquotient(R, k, l);
    res.zero = res.module.rank() == 0;
    res.irrelevant = isIrrelevantModule(R, res.module);
    return res;
}

ChainComplex directSum(const std::vector<ChainComplex>& cs) {
    ChainComplex out;
    int len = -1;
    std::size_t r = 0;
    for (auto& c : cs) {
        len = std::max(len, c.length());
        for (auto& m : c.mods)
            for (auto& d : m) {
                if (r == 0) r = d.size();
                if (d.size() != r) throw InputError("direct sum of complexes over different gradings");
            }
    }
    if (len < 0) {
        out.mods.push_back({});
        return out;
    }
    auto modAt = [](const ChainComplex& c, int k) {
        return k < static_cast<int>(c.mods.size()) ? c.mods[k] : std::vector<Deg>{};
    };
    for (int k = 0; k <= len; ++k) {
        std::vector<Deg> m;
        for (auto& c : cs) {
            auto mk = modAt(c, k);
            m.insert(m.end(), mk.begin(), mk.end());
        }
        out.mods.push_back(m);
    }
    for (int k = 0; k < len; ++k) {
        GradedMatrix acc;
        bool first = true;
        for (auto& c : cs) {
            GradedMatrix dk = k < static_cast<int>(c.d.size()) ? c.d[k] : GradedMatrix(modAt(c, k), modAt(c, k + 1));
            acc = first ? dk : blockDiagonal(acc, dk);
            first = false;
        }
        out.d.push_back(acc);
    }
    out.trim();
    return out;
}

std::vector<GradedMatrix> liftComparison(const Ring& R, const ChainComplex& f, const ChainComplex& res,
                                         const GradedMatrix& p) {
    const int t = f.length();
    std::vector<GradedMatrix> alpha(t + 1);
    alpha[t] = p;
    auto resMod = [&](int k) { return k <= res.length() ? res.mods[k] : std::vector<Deg>{}; };
    for (int j = t - 1; j >= 0; --j) {
        GradedMatrix rhs = matMul(R, alpha[j + 1], transposeDual(f.d[j]));
        int k = t - j;  // target res_k, through d^{res}_k : res_k -> res_{k-1}
        GradedMatrix dk = (k - 1 < static_cast<int>(res.d.size())) ? res.d[k - 1] : GradedMatrix(resMod(k - 1), resMod(k));
        try {
            alpha[j] = liftThrough(R, dk, rhs);
        } catch (const DomainError&) {
            throw ContradictionError("comparison map does not lift at position " + std::to_string(j));
        }
    }
    return alpha;
}

ConeResult mappingConeShorten(const Ring& R, const ChainComplex& f, std::optional<std::uint64_t> seed) {
    ConeResult out;
    const int t = f.length();
    out.t = t;
    if (t < 1) throw PreconditionError("mapping cone needs a complex of length at least 1");
    std::vector<Deg> ft;
    for (auto& d : f.mods[t]) ft.push_back(degNeg(d));
    GradedMatrix phiT = transposeDual(f.d[t - 1]);  // F_{t-1}^* -> F_t^*
    if (!isIrrelevantQuotient(R, phiT))
        throw ObstructionError("Ext^" + std::to_string(t) + " is not irrelevant", t);
    // resolution of coker(phi_t^*) starting from F_t^*, minimized while tracking F_t^* -> res_0
    std::vector<GradedMatrix> diffs{phiT};
    while (true) {
        GradedMatrix s = syz(R, diffs.back(), true);
        if (s.ncols() == 0) break;
        diffs.push_back(std::move(s));
        if (static_cast<int>(diffs.size()) > R.nvars + 2) throw ContradictionError("resolution does not terminate");
    }
    MinimizeOptions mo;
    mo.trackF0 = true;
    Minimized mres = minimizeComplex(R, makeComplex(ft, diffs), mo);
    const ChainComplex& res = mres.c;
    out.extResolution = res;
    if (res.length() > t + 1)
        throw PreconditionError("resolution of Ext^" + std::to_string(t) + " has length " +
                                std::to_string(res.length()) + " > " + std::to_string(t + 1));
    std::vector<GradedMatrix> alphaStar = liftComparison(R, f, res, mres.p);

    auto negate = [](const std::vector<Deg>& v) {
        std::vector<Deg> o;
        for (auto& d : v) o.push_back(degNeg(d));
        return o;
    };
    auto fMod = [&](int i) { return (i >= 0 && i <= t) ? f.mods[i] : std::vector<Deg>{}; };
    auto gMod = [&](int j) {  // G_j = res_{t-j}^*
        int k = t - j;
        return (j >= -1 && k >= 0 && k <= res.length()) ? negate(res.mods[k]) : std::vector<Deg>{};
    };
    auto concat = [](std::vector<Deg> a, const std::vector<Deg>& b) {
        a.insert(a.end(), b.begin(), b.end());
        return a;
    };
    std::vector<Deg> c0 = concat(fMod(0), gMod(-1));
    std::vector<GradedMatrix> cd;
    for (int i = 1; i <= t + 1; ++i) {
        std::vector<Deg> fr = fMod(i - 1), gr = gMod(i - 2), fc = fMod(i), gc = gMod(i - 1);
        GradedMatrix m(concat(fr, gr), concat(fc, gc));
        const int nfr = static_cast<int>(fr.size()), nfc = static_cast<int>(fc.size());
        if (i <= t)
            for (int u = 0; u < nfr; ++u)
                for (int v = 0; v < nfc; ++v) m.at(u, v) = f.d[i - 1].at(u, v);
        if (!gc.empty() && !fr.empty()) {
            GradedMatrix a = transposeDual(alphaStar[i - 1]);  // G_{i-1} -> F_{i-1}
            coef sign = ((i - 1) % 2) ? R.F.neg(1) : coef(1);
            for (int u = 0; u < a.nrows(); ++u)
                for (int v = 0; v < a.ncols(); ++v) m.at(u, nfc + v) = scale(a.at(u, v), sign, R.F);
        }
        if (!gc.empty() && !gr.empty()) {
            GradedMatrix psi = transposeDual(res.d[t - i + 1]);  // res_{t-i+1}^* -> res_{t-i+2}^*
            for (int u = 0; u < psi.nrows(); ++u)
                for (int v = 0; v < psi.ncols(); ++v) m.at(nfr + u, nfc + v) = psi.at(u, v);
        }
        cd.push_back(std::move(m));
    }
    out.cone = makeComplex(c0, cd);
    MinimizeOptions mo2;
    mo2.seed = seed;
    out.minimized = minimizeComplex(R, out.cone, mo2).c;
    return out;
}

Presentation quotientByElement(const Ring& R, const Presentation& m, const Poly& f) {
    if (f.isZero()) return m;
    Deg df = polyDeg(R, f);
    std::vector<Deg> cols;
    for (auto& g : m.gens) cols.push_back(degAdd(g, df));
    GradedMatrix fm(m.gens, cols);
    for (int k = 0; k < m.rank(); ++k) fm.at(k, k) = f;
    return Presentation{m.gens, concatColumns(m.rel, fm)};
}

VregResult isVirtuallyRegular(const Ring& R, const Presentation& m, const Poly& f) {
    if (f.isZero()) throw DomainError("virtual regularity of the zero polynomial");
    if (!isHomogeneous(R, f)) throw InputError("element is not homogeneous");
    VregResult out;
    GradedMatrix ann = quotient(R, m.rel, f);
    out.annNonzero = !contained(R, ann, m.rel);
    out.annIrrelevant = !out.annNonzero || contained(R, ann, saturate(R, m.rel));
    out.dimM = krullDim(R, m.rel);
    out.dimQuotient = krullDim(R, quotientByElement(R, m, f).rel);
    out.dimDrops = out.dimM >= 0 && out.dimQuotient == out.dimM - 1;
    ChainComplex res = freeResolution(R, m);
    out.torIrrelevant = torModule(R, res, Presentation::cyclic(R, {f}), 1).irrelevant;
    if (out.torIrrelevant != out.annIrrelevant)
        throw ContradictionError("Tor_1(M, S/f) and Ann_M f disagree on irrelevance");
    out.regular = out.annIrrelevant && out.dimDrops;
    if (!out.annIrrelevant) out.reason = "annihilator is not irrelevant";
    else if (!out.dimDrops)
        out.reason = "dimension does not drop by one (" + std::to_string(out.dimM) + " -> " +
                     std::to_string(out.dimQuotient) + ")";
    else out.reason = out.annNonzero ? "annihilator irrelevant but nonzero" : "regular element";
    return out;
}

ChainComplex quotientTotalComplex(const Ring& R, const ChainComplex& f, const Poly& g) {
    if (g.isZero()) throw DomainError("total complex with the zero polynomial");
    const Deg dg = polyDeg(R, g);
    const int len = f.length();
    auto fMod = [&](int i) { return (i >= 0 && i <= len) ? f.mods[i] : std::vector<Deg>{}; };
    auto shifted = [&](int i) {
        std::vector<Deg> o;
        for (auto& d : fMod(i)) o.push_back(degAdd(d, dg));
        return o;
    };
    auto concat = [](std::vector<Deg> a, const std::vector<Deg>& b) {
        a.insert(a.end(), b.begin(), b.end());
        return a;
    };
    std::vector<GradedMatrix> diffs;
    for (int k = 1; k <= len + 1; ++k) {
        std::vector<Deg> rt = fMod(k - 1), rb = shifted(k - 2), ct = fMod(k), cb = shifted(k - 1);
        GradedMatrix m(concat(rt, rb), concat(ct, cb));
        const int nrt = static_cast<int>(rt.size()), nct = static_cast<int>(ct.size());
        if (k <= len)
            for (int u = 0; u < nrt; ++u)
                for (int v = 0; v < nct; ++v) m.at(u, v) = f.d[k - 1].at(u, v);
        Poly sg = (k - 1) % 2 ? neg(g, R.F) : g;
        for (int u = 0; u < static_cast<int>(cb.size()); ++u) m.at(u, nct + u) = sg;
        if (k >= 2)
            for (int u = 0; u < static_cast<int>(rb.size()); ++u)
                for (int v = 0; v < static_cast<int>(cb.size()); ++v) m.at(nrt + u, nct + v) = f.d[k - 2].at(u, v);
        diffs.push_back(std::move(m));
    }
    return makeComplex(fMod(0), diffs);
}

}  // namespace vres

namespace vres {

namespace {

// Squarefree fine degree of every basis element, when the complex is a
// monomial complex with F_0 = S^k in degree 0. Empty optional otherwise.
std::optional<std::vector<std::vector<unsigned>>> fineMasks(const Ring& R, const ChainComplex& c) {
    if (R.nvars > 20) return std::nullopt;
    std::vector<std::vector<unsigned>> masks(c.mods.size());
    for (auto& d : c.mods[0])
        for (int x : d)
            if (x != 0) return std::nullopt;
    masks[0].assign(c.mods[0].size(), 0u);
    for (std::size_t k = 0; k < c.d.size(); ++k) {
        const auto& a = c.d[k];
        masks[k + 1].assign(a.ncols(), 0u);
        for (int v = 0; v < a.ncols(); ++v) {
            std::optional<unsigned> mv;
            for (int u = 0; u < a.nrows(); ++u) {
                const Poly& e = a.at(u, v);
                if (e.isZero()) continue;
                if (!e.isMonomialTerm() || !e.t[0].m.squarefree()) return std::nullopt;
                unsigned s = e.t[0].m.support();
                if (s & masks[k][u]) return std::nullopt;
                unsigned m = s | masks[k][u];
                if (mv && *mv != m) return std::nullopt;
                mv = m;
            }
            if (!mv) return std::nullopt;
            masks[k + 1][v] = *mv;
        }
    }
    return masks;
}

// Scalar matrix of d_k restricted to the basis elements with fine degree inside u.
DenseMat strand(const GradedMatrix& a, const std::vector<unsigned>& rowMask, const std::vector<unsigned>& colMask,
                unsigned u, const Field& F) {
    std::vector<int> rs, cs;
    for (int i = 0; i < a.nrows(); ++i)
        if ((rowMask[i] & ~u) == 0) rs.push_back(i);
    for (int j = 0; j < a.ncols(); ++j)
        if ((colMask[j] & ~u) == 0) cs.push_back(j);
    DenseMat m(rs.size(), std::vector<coef>(cs.size(), 0));
    for (std::size_t i = 0; i < rs.size(); ++i)
        for (std::size_t j = 0; j < cs.size(); ++j) {
            const Poly& e = a.at(rs[i], cs[j]);
            if (!e.isZero()) m[i][j] = F.fromInt(e.t[0].c);
        }
    return m;
}

int countInside(const std::vector<unsigned>& masks, unsigned u) {
    int n = 0;
    for (unsigned m : masks)
        if ((m & ~u) == 0) ++n;
    return n;
}

std::vector<unsigned> relevantSupports(const Ring& R) {
    const unsigned all = (1u << R.nvars) - 1;
    std::vector<unsigned> out;
    for (unsigned u = 1; u <= all; ++u) {
        bool relevant = true;
        for (auto& b : R.irrelevantFactors) {
            bool hit = false;
            for (int x : b) hit = hit || (u >> x & 1);
            relevant = relevant && hit;
        }
        if (relevant) out.push_back(u);
    }
    return out;
}

// Compare dim H_0(F)_a with dim (S/I)_a for squarefree I over all relevant supports.
bool fineH0Agrees(const Ring& R, const ChainComplex& c, const std::vector<std::vector<unsigned>>& masks,
                  const Presentation& m) {
    std::vector<unsigned> gens;
    for (int v = 0; v < m.rel.ncols(); ++v)
        if (!m.rel.at(0, v).isZero()) gens.push_back(m.rel.at(0, v).t[0].m.support());
    for (unsigned u : relevantSupports(R)) {
        int want = 1;
        for (unsigned g : gens)
            if ((g & ~u) == 0) want = 0;
        int have = countInside(masks[0], u);
        if (!c.d.empty()) have -= denseRank(strand(c.d[0], masks[0], masks[1], u, R.F), R.F);
        if (have != want) return false;
    }
    return true;
}

bool fineHigherIrrelevant(const Ring& R, const ChainComplex& c, const std::vector<std::vector<unsigned>>& masks,
                          std::vector<int>& failing) {
    const int len = c.length();
    const auto supports = relevantSupports(R);
    bool ok = true;
    for (int i = 1; i <= len; ++i) {
        for (unsigned u : supports) {
            int n = countInside(masks[i], u);
            if (n == 0) continue;
            int rkOut = denseRank(strand(c.d[i - 1], masks[i - 1], masks[i], u, R.F), R.F);
            int rkIn = i < len ? denseRank(strand(c.d[i], masks[i], masks[i + 1], u, R.F), R.F) : 0;
            if (n - rkOut - rkIn != 0) {
                failing.push_back(i);
                ok = false;
                break;
            }
        }
    }
    return ok;
}

bool gradedHigherIrrelevant(const Ring& R, const ChainComplex& c, std::vector<int>& failing) {
    const int len = c.length();
    bool ok = true;
    for (int i = 1; i <= len; ++i) {
        GradedMatrix k = c.d[i - 1].ncols() ? syz(R, c.d[i - 1], false) : identityMatrix(c.mods[i]);
        if (k.ncols() == 0) continue;
        GradedMatrix l = i < len ? c.d[i] : GradedMatrix(c.mods[i], {});
        if (l.ncols() && contained(R, k, l)) continue;
        if (!contained(R, k, saturate(R, l))) {
            failing.push_back(i);
            ok = false;
        }
    }
    return ok;
}

int maxTwist(const ChainComplex& c) {
    int m = 0;
    for (auto& mod : c.mods)
        for (auto& d : mod)
            for (int x : d) m = std::max(m, std::abs(x));
    return m;
}

int maxEntryDegree(const Ring& R, const GradedMatrix& a) {
    int m = 0;
    for (auto& e : a.e)
        if (!e.isZero()) m = std::max(m, degTotal(polyDeg(R, e)));
    return m;
}

void boxPoints(int r, int lo, int hi, Deg& cur, std::vector<Deg>& out) {
    if (static_cast<int>(cur.size()) == r) {
        out.push_back(cur);
        return;
    }
    for (int v = lo; v <= hi; ++v) {
        cur.push_back(v);
        boxPoints(r, lo, hi, cur, out);
        cur.pop_back();
    }
}

}  // namespace

VirtualCheck isVirtualResolution(const Ring& R, const ChainComplex& c, const Presentation& m) {
    VirtualCheck out;
    std::string why;
    out.complexOk = isHomogeneousComplex(R, c, &why) && squaresToZero(R, c, &why);
    if (!out.complexOk) return out;
    if (c.mods.empty()) {  // the zero complex
        out.method = "graded";
        out.higherIrrelevant = true;
        out.h0Grade = "exact";
        out.h0Match = m.rank() == 0 || isIrrelevantQuotient(R, m.rel);
        if (!out.h0Match) out.failingDegrees.push_back(0);
        return out;
    }
    auto masks = fineMasks(R, c);
    if (masks) {
        out.method = "fine";
        out.higherIrrelevant = fineHigherIrrelevant(R, c, *masks, out.failingDegrees);
    } else {
        out.method = "graded";
        out.higherIrrelevant = gradedHigherIrrelevant(R, c, out.failingDegrees);
    }
    GradedMatrix h0 = c.d.empty() ? GradedMatrix(c.mods[0], {}) : c.d[0];
    if (c.mods[0].empty() || m.rank() == 0) {
        out.h0Grade = "exact";
        bool a = c.mods[0].empty() || isIrrelevantQuotient(R, h0);
        bool b = m.rank() == 0 || isIrrelevantQuotient(R, m.rel);
        out.h0Match = a && b;
        if (!out.h0Match) out.failingDegrees.push_back(0);
        return out;
    }
    if (c.mods[0].size() == 1 && m.rank() == 1 && c.mods[0][0] == m.gens[0]) {
        out.h0Grade = "exact";
        out.h0Match = sameSubmodule(R, saturate(R, h0), saturate(R, m.rel));
    } else if (masks && isSquarefreeMonomialIdeal(m) && c.mods[0].size() > 0) {
        out.h0Grade = "fine-hilbert";
        out.h0Match = sameSubmodule(R, saturate(R, annihilator(R, h0)), saturate(R, annihilator(R, m.rel)));
        if (out.h0Match) out.h0Match = fineH0Agrees(R, c, *masks, m);
    } else {
        out.h0Grade = "hilbert-box";
        out.h0Match = sameSubmodule(R, saturate(R, annihilator(R, h0)), saturate(R, annihilator(R, m.rel)));
        if (out.h0Match) {
            int maxGen = 0;
            for (auto& g : m.gens)
                for (int x : g) maxGen = std::max(maxGen, std::abs(x));
            maxGen = std::max(maxGen, maxEntryDegree(R, m.rel));
            const int d0 = std::max(1, 2 * maxTwist(c) + maxGen);
            std::vector<Deg> pts;
            Deg cur;
            boxPoints(R.r, d0, d0 + 2, cur, pts);
            auto gbH = gbOf(R, h0);
            auto gbM = gbOf(R, m.rel);
            for (auto& a : pts) {
                if (hilbertFunction(R, gbH, h0.rows, a) != hilbertFunction(R, gbM, m.rel.rows, a)) {
                    out.h0Match = false;
                    break;
                }
            }
        }
    }
    if (!out.h0Match) out.failingDegrees.push_back(0);
    return out;
}

}  // namespace vres

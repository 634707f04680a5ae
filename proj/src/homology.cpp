#include "vres/homology.hpp"

#include <algorithm>
#include <unordered_map>

#include "vres/linalg.hpp"

namespace vres {

namespace {

// rank of the boundary map from `hi` faces to `lo` faces, skipping faces
// absent from `lo` (relative chains)
std::size_t boundaryRank(const std::vector<Face>& hi, const std::vector<Face>& lo, const Field& F) {
    if (hi.empty() || lo.empty()) return 0;
    std::unordered_map<Face, int> idx;
    for (std::size_t i = 0; i < lo.size(); ++i) idx.emplace(lo[i], static_cast<int>(i));
    SparseMat m;
    m.ncols = static_cast<int>(lo.size());
    for (Face f : hi) {
        SparseRow row;
        int sign = 0;
        for (Face t = f; t; t &= t - 1, ++sign) {
            auto it = idx.find(f & ~(t & -t));
            if (it == idx.end()) continue;
            row.emplace_back(it->second, (sign % 2) ? F.neg(1) : coef(1));
        }
        std::sort(row.begin(), row.end());
        m.rows.push_back(std::move(row));
    }
    return rank(m, F);
}

}  // namespace

ChainRanks boundaryRanks(const ColoredComplex& d, const Field& F) {
    ChainRanks cr;
    auto byDim = d.facesByDim();
    for (auto& v : byDim) cr.faces.push_back(v.size());
    cr.ranks.assign(byDim.size() + 1, 0);
    for (std::size_t k = 1; k < byDim.size(); ++k) cr.ranks[k] = boundaryRank(byDim[k], byDim[k - 1], F);
    return cr;
}

HomologyProfile reducedHomology(const ColoredComplex& d, const Field& F) {
    HomologyProfile h;
    h.p = F.p;
    if (d.isVoid()) {
        h.voidComplex = true;
        return h;
    }
    ChainRanks cr = boundaryRanks(d, F);
    for (std::size_t k = 0; k < cr.faces.size(); ++k) h.dims.push_back(cr.faces[k] - cr.ranks[k] - cr.ranks[k + 1]);
    return h;
}

std::size_t relativeHomology(const ColoredComplex& d, const ColoredComplex& g, int i, const Field& F) {
    if (!g.subcomplexOf(d)) throw DomainError("relative homology needs a subcomplex");
    auto chains = [&](int dim) {
        std::vector<Face> out;
        if (dim < -1) return out;
        for (Face f : d.faces())
            if (popcount(f) == dim + 1 && !g.contains(f)) out.push_back(f);
        return out;
    };
    auto ci = chains(i);
    if (ci.empty()) return 0;
    auto below = chains(i - 1);
    auto above = chains(i + 1);
    std::size_t rk = boundaryRank(ci, below, F);
    std::size_t rkUp = boundaryRank(above, ci, F);
    return ci.size() - rk - rkUp;
}

ReisnerResult reisnerIsCM(const ColoredComplex& d, const Field& F) {
    ReisnerResult res;
    for (Face sigma : d.faces()) {
        ColoredComplex l = link(d, sigma);
        int top = l.dim();
        HomologyProfile h = reducedHomology(l, F);
        for (int i = -1; i < top; ++i) {
            if (h.at(i) != 0) {
                res.cm = false;
                res.witness = std::make_pair(sigma, i);
                return res;
            }
        }
    }
    return res;
}

std::vector<std::size_t> BettiTable::totals() const {
    std::vector<std::size_t> t;
    for (auto& [key, n] : entries) {
        if (static_cast<int>(t.size()) <= key.first) t.resize(key.first + 1, 0);
        t[key.first] += n;
    }
    return t;
}

std::vector<int> coarsen(const Setup& s, Face u) {
    std::vector<int> deg(s.r(), 0);
    for (int c = 0; c < s.r(); ++c) deg[c] = popcount(u & s.blockMask(c));
    return deg;
}

std::vector<int> fineDegree(const Setup& s, Face u) {
    std::vector<int> deg(s.nverts(), 0);
    for (int v : faceVertices(u)) deg[v] = 1;
    return deg;
}

BettiTable hochsterBetti(const ColoredComplex& d, const Field& F, bool fine) {
    BettiTable t;
    if (d.isVoid()) return t;
    const Setup& s = d.setup();
    const Face u = s.universe();
    for (Face w = u;; w = (w - 1) & u) {
        HomologyProfile h = reducedHomology(d.restrict(w), F);
        int n = popcount(w);
        for (int i = 0; i <= n; ++i) {
            std::size_t b = h.at(n - i - 1);
            if (b) t.add(i, fine ? fineDegree(s, w) : coarsen(s, w), b);
        }
        if (w == 0) break;
    }
    return t;
}

}  // namespace vres

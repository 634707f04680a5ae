#include "vres/complex.hpp"

#include <algorithm>
#include <numeric>

namespace vres {

Setup::Setup(std::vector<int> b) : blocks(std::move(b)) {
    if (blocks.empty()) throw InputError("at least one block is required");
    int total = 0;
    for (int n : blocks) {
        if (n < 1) throw InputError("block sizes must be positive");
        total += n;
    }
    if (total > 64) throw InputError("at most 64 vertices are supported");
    if (blocks.size() > 31) throw InputError("at most 31 blocks are supported");
}

int Setup::nverts() const { return std::accumulate(blocks.begin(), blocks.end(), 0); }

int Setup::offset(int color) const {
    int o = 0;
    for (int c = 0; c < color; ++c) o += blocks[c];
    return o;
}

int Setup::colorOf(int v) const {
    for (int c = 0; c < r(); ++c) {
        if (v < blocks[c]) return c;
        v -= blocks[c];
    }
    throw InputError("vertex index out of range");
}

int Setup::vertex(int color, int j) const {
    if (color < 0 || color >= r()) throw InputError("color " + std::to_string(color + 1) + " out of range");
    if (j < 0 || j >= blocks[color])
        throw InputError("vertex index " + std::to_string(j) + " out of range for color " + std::to_string(color + 1));
    return offset(color) + j;
}

Face Setup::blockMask(int color) const {
    int o = offset(color);
    int n = blocks[color];
    Face m = (n == 64) ? ~Face(0) : ((Face(1) << n) - 1);
    return m << o;
}

Face Setup::colorsMask(unsigned colors) const {
    Face m = 0;
    for (int c = 0; c < r(); ++c)
        if (colors >> c & 1) m |= blockMask(c);
    return m;
}

Face Setup::universe() const { return colorsMask(allColors()); }

std::string Setup::vertexName(int v) const {
    int c = colorOf(v);
    return "x_" + std::to_string(c + 1) + "_" + std::to_string(v - offset(c));
}

unsigned faceColors(const Setup& s, Face f) {
    unsigned col = 0;
    for (int c = 0; c < s.r(); ++c)
        if (f & s.blockMask(c)) col |= 1u << c;
    return col;
}

bool isRelevant(const Setup& s, Face f, unsigned colors) { return (faceColors(s, f) & colors) == colors; }

bool lexLess(Face a, Face b) {
    Face d = a ^ b;
    if (!d) return false;
    Face low = d & -d;
    if (a & low) {
        // a has the smaller next vertex unless b ends here
        Face above = ~((low << 1) - 1);
        if (low == (Face(1) << 63)) above = 0;
        return (b & above) != 0;
    }
    Face above = ~((low << 1) - 1);
    if (low == (Face(1) << 63)) above = 0;
    return (a & above) == 0;
}

bool sizeLexLess(Face a, Face b) {
    int pa = popcount(a), pb = popcount(b);
    if (pa != pb) return pa < pb;
    return lexLess(a, b);
}

std::vector<int> faceVertices(Face f) {
    std::vector<int> v;
    while (f) {
        v.push_back(__builtin_ctzll(f));
        f &= f - 1;
    }
    return v;
}

std::string faceString(const Setup& s, Face f) {
    std::string out = "{";
    bool first = true;
    for (int v : faceVertices(f)) {
        if (!first) out += ",";
        out += s.vertexName(v);
        first = false;
    }
    return out + "}";
}

std::vector<Face> normalizeFacets(std::vector<Face> facets) {
    std::sort(facets.begin(), facets.end());
    facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
    std::stable_sort(facets.begin(), facets.end(), [](Face a, Face b) { return popcount(a) > popcount(b); });
    std::vector<Face> kept;
    for (Face f : facets) {
        bool sub = false;
        for (Face k : kept)
            if ((f & k) == f) {
                sub = true;
                break;
            }
        if (!sub) kept.push_back(f);
    }
    std::sort(kept.begin(), kept.end(), lexLess);
    return kept;
}

ColoredComplex::ColoredComplex(Setup s, std::vector<Face> facets) : setup_(std::move(s)) {
    Face u = setup_.universe();
    for (Face f : facets)
        if (f & ~u) throw InputError("facet uses a vertex outside the declared blocks");
    facets_ = normalizeFacets(std::move(facets));
}

bool ColoredComplex::contains(Face f) const {
    for (Face g : facets_)
        if ((f & g) == f) return true;
    return false;
}

int ColoredComplex::dim() const {
    int d = -2;
    for (Face f : facets_) d = std::max(d, popcount(f) - 1);
    return d;
}

bool ColoredComplex::isPure() const {
    for (Face f : facets_)
        if (popcount(f) != popcount(facets_.front())) return false;
    return true;
}

Face ColoredComplex::vertexSet() const {
    Face v = 0;
    for (Face f : facets_) v |= f;
    return v;
}

std::vector<Face> ColoredComplex::faces() const {
    std::vector<Face> out;
    for (Face f : facets_) {
        for (Face s = f;; s = (s - 1) & f) {
            out.push_back(s);
            if (s == 0) break;
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    std::sort(out.begin(), out.end(), sizeLexLess);
    return out;
}

std::vector<std::vector<Face>> ColoredComplex::facesByDim() const {
    std::vector<std::vector<Face>> out(std::max(0, dim() + 2));
    for (Face f : faces()) out[popcount(f)].push_back(f);
    return out;
}

ColoredComplex ColoredComplex::restrict(Face w) const {
    std::vector<Face> fs;
    for (Face f : facets_) fs.push_back(f & w);
    return ColoredComplex(setup_, fs);
}

ColoredComplex ColoredComplex::unite(const ColoredComplex& o) const {
    if (!(setup_ == o.setup_)) throw InputError("complexes live on different vertex sets");
    std::vector<Face> fs = facets_;
    fs.insert(fs.end(), o.facets_.begin(), o.facets_.end());
    return ColoredComplex(setup_, fs);
}

bool ColoredComplex::subcomplexOf(const ColoredComplex& o) const {
    for (Face f : facets_)
        if (!o.contains(f)) return false;
    return true;
}

std::vector<Face> stanleyReisner(const ColoredComplex& d) {
    if (d.isVoid()) return {Face(0)};
    std::vector<Face> gens;
    const Face u = d.setup().universe();
    for (Face f : d.faces()) {
        for (Face rest = u & ~f; rest; rest &= rest - 1) {
            Face n = f | (rest & -rest);
            if (d.contains(n)) continue;
            bool minimal = true;
            for (Face m = n; m; m &= m - 1)
                if (!d.contains(n & ~(m & -m))) {
                    minimal = false;
                    break;
                }
            if (minimal) gens.push_back(n);
        }
    }
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::sort(gens.begin(), gens.end(), lexLess);
    return gens;
}

ColoredComplex link(const ColoredComplex& d, Face sigma) {
    if (!d.contains(sigma)) throw DomainError("face " + faceString(d.setup(), sigma) + " is not in the complex");
    std::vector<Face> fs;
    for (Face f : d.facets())
        if ((f & sigma) == sigma) fs.push_back(f & ~sigma);
    return ColoredComplex(d.setup(), fs);
}

static void kSubsets(const std::vector<int>& verts, int k, std::size_t start, Face cur, std::vector<Face>& out) {
    if (k == 0) {
        out.push_back(cur);
        return;
    }
    for (std::size_t i = start; i + k <= verts.size(); ++i)
        kSubsets(verts, k - 1, i + 1, cur | (Face(1) << verts[i]), out);
}

ColoredComplex buildBr(const Setup& s, int dimBound, unsigned colors) {
    std::vector<Face> fs{Face(0)};
    if (dimBound >= 0) {
        for (unsigned c = (colors - 1) & colors; c; c = (c - 1) & colors) {
            auto verts = faceVertices(s.colorsMask(c));
            int k = std::min<int>(dimBound + 1, static_cast<int>(verts.size()));
            kSubsets(verts, k, 0, 0, fs);
        }
    }
    return ColoredComplex(s, fs);
}

ColoredComplex augmentWithBr(const ColoredComplex& d, int dimBound) {
    return d.unite(buildBr(d.setup(), dimBound));
}

ColoredComplex join(Face tau, const ColoredComplex& omega) {
    std::vector<Face> fs;
    for (Face f : omega.facets()) {
        if (f & tau) throw DomainError("join of overlapping faces");
        fs.push_back(f | tau);
    }
    return ColoredComplex(omega.setup(), fs);
}

Components relevantComponents(const ColoredComplex& d) {
    Components out;
    const Setup& s = d.setup();
    std::vector<Face> rel;
    for (Face f : d.facets()) (isRelevant(s, f) ? rel : out.irrelevantFacets).push_back(f);
    if (rel.empty()) {
        out.irrelevant = true;
        return out;
    }
    std::vector<int> parent(rel.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t i = 0; i < rel.size(); ++i)
        for (std::size_t j = i + 1; j < rel.size(); ++j)
            if (isRelevant(s, rel[i] & rel[j])) parent[find(i)] = find(j);
    std::vector<int> rootOrder;
    std::vector<std::vector<Face>> groups;
    for (std::size_t i = 0; i < rel.size(); ++i) {
        int r = find(i);
        auto it = std::find(rootOrder.begin(), rootOrder.end(), r);
        if (it == rootOrder.end()) {
            rootOrder.push_back(r);
            groups.push_back({rel[i]});
        } else {
            groups[it - rootOrder.begin()].push_back(rel[i]);
        }
    }
    for (auto& g : groups) out.components.emplace_back(s, g);
    return out;
}

FaceSplit exteriorInteriorSplit(const ColoredComplex& d, Face sigma, int dimBound) {
    if (sigma == 0) throw DomainError("exterior/interior split needs a nonempty face");
    ColoredComplex l = link(d, sigma);
    FaceSplit out;
    for (Face g : l.faces()) {
        Face u = g | sigma;
        bool ext = !isRelevant(d.setup(), u) && popcount(u) <= dimBound + 1;
        (ext ? out.exterior : out.interior).push_back(g);
    }
    return out;
}

std::vector<TwoFaceEntry> twofaceProfile(const ColoredComplex& d, Face sigma) {
    const Setup& s = d.setup();
    const int r = s.r();
    if (d.isVoid() || !d.isPure() || d.dim() != r) throw DomainError("twoface profile needs a pure r-dimensional complex");
    for (Face f : d.facets())
        if (!isRelevant(s, f)) throw DomainError("twoface profile needs a relevant complex");
    if (sigma == 0) throw DomainError("twoface profile needs a nonempty face");
    ColoredComplex l = link(d, sigma);
    std::vector<TwoFaceEntry> out;
    for (Face tau : l.facets()) {
        TwoFaceEntry e;
        e.facet = tau;
        for (Face t = tau; t; t &= t - 1) {
            Face u = (tau & ~(t & -t)) | sigma;
            if (isRelevant(s, u) || popcount(u) > r + 1) ++e.count;
        }
        Face full = tau | sigma;
        for (int c = 0; c < r; ++c) {
            Face b = s.blockMask(c);
            if (popcount(full & b) < 2) continue;
            int inSigma = popcount(sigma & b);
            e.kind = inSigma >= 2 ? "sigma-repeats" : inSigma == 1 ? "shared" : "tau-repeats";
        }
        out.push_back(e);
    }
    return out;
}

std::optional<JoinDecomposition> joinDecomposition(const ColoredComplex& d) {
    if (d.isVoid() || d.dim() < 0) return std::nullopt;
    const Setup& s = d.setup();
    Face common = ~Face(0);
    Face all = 0;
    for (Face f : d.facets()) {
        common &= f;
        all |= f;
    }
    Face tau = 0;
    for (int c = 0; c < s.r(); ++c) {
        Face b = s.blockMask(c);
        if ((all & b) && (all & b & ~common) == 0) tau |= all & b;
    }
    if (tau == 0) return std::nullopt;
    if (tau == all) {
        // a single simplex: split off all but one color class, lex least choice
        unsigned cols = faceColors(s, tau);
        if (popcount(cols) < 2) return JoinDecomposition{tau, ColoredComplex::emptyFace(s)};
        std::optional<Face> best;
        for (int c = 0; c < s.r(); ++c) {
            if (!(cols >> c & 1)) continue;
            Face cand = tau & ~s.blockMask(c);
            if (!best || lexLess(cand, *best)) best = cand;
        }
        tau = *best;
    }
    std::vector<Face> fs;
    for (Face f : d.facets()) fs.push_back(f & ~tau);
    return JoinDecomposition{tau, ColoredComplex(s, fs)};
}

}  // namespace vres

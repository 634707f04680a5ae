#pragma once

#include <vector>

#include "vres/ring.hpp"

namespace vres {

struct VTerm {
    Mono m;
    int comp;
    coef c;
};
// Module element, terms in decreasing module order.
using Vec = std::vector<VTerm>;

// Term order on a free module: component level first (elimination blocks),
// then weighted total degree, grevlex, and lower component index larger.
struct ModOrder {
    std::vector<int> level;
    std::vector<int> weight;

    int ncomps() const { return static_cast<int>(level.size()); }
    int cmp(const Mono& a, int ca, const Mono& b, int cb) const {
        if (level[ca] != level[cb]) return level[ca] > level[cb] ? 1 : -1;
        int ta = a.deg + weight[ca], tb = b.deg + weight[cb];
        if (ta != tb) return ta > tb ? 1 : -1;
        int g = grevlexCmp(a, b);
        if (g) return g;
        if (ca != cb) return ca < cb ? 1 : -1;
        return 0;
    }
    int totalDeg(const VTerm& t) const { return t.m.deg + weight[t.comp]; }
};

void sortVec(Vec& v, const ModOrder& o);
// a + c * q * b
Vec vecAxpy(const Vec& a, const Vec& b, const Mono& q, coef c, const ModOrder& o, const Field& F);
void makeMonic(Vec& v, const Field& F);

struct GBOptions {
    bool markMinimal = false;
    bool reduceTails = true;
};

struct GroebnerBasis {
    ModOrder order;
    std::vector<Vec> elems;          // monic, leading terms pairwise non-divisible
    std::vector<int> minimalInputs;  // indices of inputs kept as minimal generators
};

GroebnerBasis groebner(const Field& F, const ModOrder& o, const std::vector<Vec>& gens, const GBOptions& opts = {});

Vec normalForm(const Field& F, const GroebnerBasis& G, Vec v, bool full = true);

}  // namespace vres

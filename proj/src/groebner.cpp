#include "vres/groebner.hpp"

#include <algorithm>
#include <limits>

namespace vres {

void sortVec(Vec& v, const ModOrder& o) {
    std::sort(v.begin(), v.end(), [&](const VTerm& a, const VTerm& b) { return o.cmp(a.m, a.comp, b.m, b.comp) > 0; });
}

Vec vecAxpy(const Vec& a, const Vec& b, const Mono& q, coef c, const ModOrder& o, const Field& F) {
    Vec out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        int s;
        Mono bm;
        if (j < b.size()) bm = b[j].m * q;
        if (i == a.size()) s = -1;
        else if (j == b.size()) s = 1;
        else s = o.cmp(a[i].m, a[i].comp, bm, b[j].comp);
        if (s > 0) {
            out.push_back(a[i++]);
        } else if (s < 0) {
            coef v = F.mul(c, b[j].c);
            if (v) out.push_back({bm, b[j].comp, v});
            ++j;
        } else {
            coef v = F.add(a[i].c, F.mul(c, b[j].c));
            if (v) out.push_back({a[i].m, a[i].comp, v});
            ++i;
            ++j;
        }
    }
    return out;
}

void makeMonic(Vec& v, const Field& F) {
    if (v.empty() || v[0].c == 1) return;
    coef inv = F.inv(v[0].c);
    for (auto& t : v) t.c = F.mul(t.c, inv);
}

namespace {

struct Pair {
    int i, j;
    Mono lcm;
    int deg;
};

class Engine {
public:
    Engine(const Field& F, const ModOrder& o) : F_(F), o_(o), byComp_(o.ncomps()) {}

    int findReducer(const VTerm& t) const {
        for (int k : byComp_[t.comp])
            if (G_[k][0].m.divides(t.m)) return k;
        return -1;
    }

    Vec topReduce(Vec v) const {
        while (!v.empty()) {
            int k = findReducer(v[0]);
            if (k < 0) break;
            const Vec& g = G_[k];
            v = vecAxpy(v, g, v[0].m / g[0].m, F_.neg(v[0].c), o_, F_);
        }
        return v;
    }

    Vec fullReduce(Vec v, int skip = -1) const {
        Vec out;
        while (!v.empty()) {
            int k = -1;
            for (int idx : byComp_[v[0].comp])
                if (idx != skip && G_[idx][0].m.divides(v[0].m)) {
                    k = idx;
                    break;
                }
            if (k < 0) {
                out.push_back(v[0]);
                v.erase(v.begin());
                continue;
            }
            const Vec& g = G_[k];
            v = vecAxpy(v, g, v[0].m / g[0].m, F_.neg(v[0].c), o_, F_);
        }
        return out;
    }

    void add(Vec h) {
        makeMonic(h, F_);
        const int k = static_cast<int>(G_.size());
        const VTerm lt = h[0];
        const bool rankOne = o_.ncomps() == 1;
        // new pairs with Gebauer-Moller pruning
        std::vector<Pair> fresh;
        std::vector<bool> coprime;
        for (int i : byComp_[lt.comp]) {
            Mono l = G_[i][0].m.lcm(lt.m);
            fresh.push_back({i, k, l, l.deg + o_.weight[lt.comp]});
            coprime.push_back(rankOne && G_[i][0].m.gcd(lt.m).isOne());
        }
        std::vector<bool> keep(fresh.size(), true);
        for (std::size_t a = 0; a < fresh.size(); ++a)
            for (std::size_t b = 0; b < fresh.size(); ++b)
                if (a != b && fresh[b].lcm.divides(fresh[a].lcm) && !(fresh[b].lcm == fresh[a].lcm)) {
                    keep[a] = false;
                    break;
                }
        std::vector<Pair> chosen;
        std::vector<bool> done(fresh.size(), false);
        for (std::size_t a = 0; a < fresh.size(); ++a) {
            if (!keep[a] || done[a]) continue;
            bool anyCoprime = false;
            for (std::size_t b = a; b < fresh.size(); ++b)
                if (keep[b] && fresh[b].lcm == fresh[a].lcm) {
                    done[b] = true;
                    anyCoprime = anyCoprime || coprime[b];
                }
            if (!anyCoprime) chosen.push_back(fresh[a]);
        }
        // old pairs made redundant by the new leading term
        std::vector<Pair> kept;
        for (auto& p : pairs_) {
            if (G_[p.i][0].comp == lt.comp && lt.m.divides(p.lcm)) {
                Mono li = G_[p.i][0].m.lcm(lt.m), lj = G_[p.j][0].m.lcm(lt.m);
                if (!(li == p.lcm) && !(lj == p.lcm)) continue;
            }
            kept.push_back(p);
        }
        kept.insert(kept.end(), chosen.begin(), chosen.end());
        pairs_.swap(kept);
        byComp_[lt.comp].push_back(k);
        G_.push_back(std::move(h));
    }

    int minPairDeg() const {
        int d = std::numeric_limits<int>::max();
        for (auto& p : pairs_) d = std::min(d, p.deg);
        return d;
    }

    std::vector<Pair> takePairs(int d) {
        std::vector<Pair> out, rest;
        for (auto& p : pairs_) (p.deg == d ? out : rest).push_back(p);
        pairs_.swap(rest);
        std::sort(out.begin(), out.end(), [&](const Pair& a, const Pair& b) {
            int c = grevlexCmp(a.lcm, b.lcm);
            if (c) return c < 0;
            return std::make_pair(a.i, a.j) < std::make_pair(b.i, b.j);
        });
        return out;
    }

    Vec spoly(const Pair& p) const {
        const Vec& a = G_[p.i];
        const Vec& b = G_[p.j];
        Vec s = vecAxpy(Vec{}, a, p.lcm / a[0].m, 1, o_, F_);
        return vecAxpy(s, b, p.lcm / b[0].m, F_.neg(1), o_, F_);
    }

    std::vector<Vec>& basis() { return G_; }
    bool hasPairs() const { return !pairs_.empty(); }

private:
    const Field& F_;
    const ModOrder& o_;
    std::vector<Vec> G_;
    std::vector<std::vector<int>> byComp_;
    std::vector<Pair> pairs_;
};

}  // namespace

GroebnerBasis groebner(const Field& F, const ModOrder& o, const std::vector<Vec>& gens, const GBOptions& opts) {
    GroebnerBasis out;
    out.order = o;
    std::vector<std::pair<int, int>> inputs;  // (degree, index)
    std::vector<Vec> sorted(gens.size());
    for (std::size_t i = 0; i < gens.size(); ++i) {
        sorted[i] = gens[i];
        sortVec(sorted[i], o);
        if (!sorted[i].empty()) inputs.emplace_back(o.totalDeg(sorted[i][0]), static_cast<int>(i));
    }
    std::stable_sort(inputs.begin(), inputs.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    Engine eng(F, o);
    std::size_t next = 0;
    while (eng.hasPairs() || next < inputs.size()) {
        int d = eng.minPairDeg();
        if (next < inputs.size()) d = std::min(d, inputs[next].first);
        for (auto& p : eng.takePairs(d)) {
            Vec r = eng.topReduce(eng.spoly(p));
            if (!r.empty()) eng.add(std::move(r));
        }
        while (next < inputs.size() && inputs[next].first == d) {
            int idx = inputs[next++].second;
            Vec r = eng.topReduce(sorted[idx]);
            if (!r.empty()) {
                eng.add(std::move(r));
                if (opts.markMinimal) out.minimalInputs.push_back(idx);
            }
        }
    }
    std::sort(out.minimalInputs.begin(), out.minimalInputs.end());
    auto& G = eng.basis();
    if (opts.reduceTails) {
        for (std::size_t k = 0; k < G.size(); ++k) {
            Vec tail(G[k].begin() + 1, G[k].end());
            Vec red = eng.fullReduce(tail, static_cast<int>(k));
            red.insert(red.begin(), G[k][0]);
            G[k] = std::move(red);
        }
    }
    out.elems = std::move(G);
    return out;
}

Vec normalForm(const Field& F, const GroebnerBasis& G, Vec v, bool full) {
    sortVec(v, G.order);
    Vec out;
    while (!v.empty()) {
        const Vec* red = nullptr;
        for (auto& g : G.elems)
            if (g[0].comp == v[0].comp && g[0].m.divides(v[0].m)) {
                red = &g;
                break;
            }
        if (!red) {
            if (!full) {
                out.insert(out.end(), v.begin(), v.end());
                return out;
            }
            out.push_back(v[0]);
            v.erase(v.begin());
            continue;
        }
        v = vecAxpy(v, *red, v[0].m / (*red)[0].m, F.neg(v[0].c), G.order, F);
    }
    return out;
}

}  // namespace vres

#include <algorithm>

#include "vres/linalg.hpp"
#include "vres/resolution.hpp"

namespace vres {

bool isSquarefreeMonomialIdeal(const Presentation& m) {
    if (m.gens.size() != 1) return false;
    for (int x : m.gens[0])
        if (x != 0) return false;
    for (int v = 0; v < m.rel.ncols(); ++v) {
        const Poly& p = m.rel.at(0, v);
        if (p.isZero()) continue;
        if (p.t.size() != 1 || !p.t[0].m.squarefree()) return false;
    }
    return true;
}

namespace {

struct Gen {
    unsigned mask;
    std::vector<std::pair<int, coef>> col;  // (index in previous level, coefficient)
};

}  // namespace

ChainComplex squarefreeResolution(const Ring& R, const std::vector<Mono>& gensIn) {
    const Field& F = R.F;
    const int n = R.nvars;
    auto gens = minimalizeMonomials(gensIn);
    for (auto& g : gens)
        if (!g.squarefree()) throw InputError("squarefree resolution needs squarefree generators");
    std::vector<std::vector<Gen>> levels;
    levels.push_back({Gen{0u, {}}});
    if (!gens.empty() && gens[0].isOne()) {
        // S/⟨1⟩ = 0
        ChainComplex c;
        c.mods.push_back({});
        return c;
    }
    std::vector<Gen> first;
    for (auto& g : gens) first.push_back({g.support(), {{0, 1}}});
    std::stable_sort(first.begin(), first.end(), [](const Gen& a, const Gen& b) {
        return __builtin_popcount(a.mask) < __builtin_popcount(b.mask);
    });
    if (!first.empty()) levels.push_back(first);

    std::vector<unsigned> order(1u << n);
    for (unsigned u = 0; u < order.size(); ++u) order[u] = u;
    std::stable_sort(order.begin(), order.end(),
                     [](unsigned a, unsigned b) { return __builtin_popcount(a) < __builtin_popcount(b); });

    while (levels.size() >= 2 && !levels.back().empty()) {
        const auto& prev = levels.back();
        const auto& prev2 = levels[levels.size() - 2];
        std::vector<Gen> next;
        for (unsigned u : order) {
            std::vector<int> cols;
            unsigned uni = 0;
            for (std::size_t j = 0; j < prev.size(); ++j)
                if ((prev[j].mask & ~u) == 0) {
                    cols.push_back(static_cast<int>(j));
                    uni |= prev[j].mask;
                }
            if (uni != u || cols.size() < 2) continue;
            std::vector<int> rowIdx(prev2.size(), -1);
            int nrows = 0;
            for (std::size_t i = 0; i < prev2.size(); ++i)
                if ((prev2[i].mask & ~u) == 0) rowIdx[i] = nrows++;
            DenseMat a(nrows, DenseRow(cols.size(), 0));
            for (std::size_t c = 0; c < cols.size(); ++c)
                for (auto& [row, val] : prev[cols[c]].col) a[rowIdx[row]][c] = val;
            auto ker = kernelBasis(a, static_cast<int>(cols.size()), F);
            if (ker.empty()) continue;
            std::vector<int> colPos(prev.size(), -1);
            for (std::size_t c = 0; c < cols.size(); ++c) colPos[cols[c]] = static_cast<int>(c);
            std::vector<DenseRow> existing;
            for (auto& g : next) {
                if ((g.mask & ~u) != 0) continue;
                DenseRow v(cols.size(), 0);
                for (auto& [j, val] : g.col) v[colPos[j]] = val;
                existing.push_back(std::move(v));
            }
            for (int p : extendBasis(existing, ker, static_cast<int>(cols.size()), F)) {
                Gen g{u, {}};
                for (std::size_t c = 0; c < cols.size(); ++c)
                    if (ker[p][c]) g.col.emplace_back(cols[c], ker[p][c]);
                next.push_back(std::move(g));
            }
        }
        levels.push_back(std::move(next));
    }
    while (!levels.empty() && levels.back().empty()) levels.pop_back();

    auto twist = [&](unsigned mask) { return R.degOf(Mono::fromSupport(mask)); };
    std::vector<Deg> f0{twist(0)};
    std::vector<GradedMatrix> diffs;
    for (std::size_t k = 1; k < levels.size(); ++k) {
        std::vector<Deg> rows, cols;
        for (auto& g : levels[k - 1]) rows.push_back(twist(g.mask));
        for (auto& g : levels[k]) cols.push_back(twist(g.mask));
        GradedMatrix m(rows, cols);
        for (std::size_t v = 0; v < levels[k].size(); ++v)
            for (auto& [u, val] : levels[k][v].col)
                m.at(u, static_cast<int>(v)) =
                    Poly::monomial(Mono::fromSupport(levels[k][v].mask & ~levels[k - 1][u].mask), val);
        diffs.push_back(std::move(m));
    }
    return makeComplex(f0, diffs);
}

}  // namespace vres

#include "vres/linalg.hpp"

#include <algorithm>
#include <limits>

namespace vres {

bool isPrime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<int> rowEchelon(DenseMat& m, const Field& F, bool reduced) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    const int ncols = static_cast<int>(m[0].size());
    std::size_t row = 0;
    for (int c = 0; c < ncols && row < m.size(); ++c) {
        std::size_t piv = row;
        while (piv < m.size() && m[piv][c] == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[piv], m[row]);
        coef inv = F.inv(m[row][c]);
        for (int k = c; k < ncols; ++k) m[row][k] = F.mul(m[row][k], inv);
        for (std::size_t i = reduced ? 0 : row + 1; i < m.size(); ++i) {
            if (i == row || m[i][c] == 0) continue;
            coef f = m[i][c];
            for (int k = c; k < ncols; ++k)
                if (m[row][k]) m[i][k] = F.sub(m[i][k], F.mul(f, m[row][k]));
        }
        pivots.push_back(c);
        ++row;
    }
    return pivots;
}

std::size_t denseRank(DenseMat m, const Field& F) { return rowEchelon(m, F).size(); }

static void axpyRow(SparseRow& dst, const SparseRow& src, coef f, const Field& F) {
    // dst -= f * src
    SparseRow out;
    out.reserve(dst.size() + src.size());
    std::size_t i = 0, j = 0;
    while (i < dst.size() || j < src.size()) {
        if (j == src.size() || (i < dst.size() && dst[i].first < src[j].first)) {
            out.push_back(dst[i++]);
        } else if (i == dst.size() || src[j].first < dst[i].first) {
            out.emplace_back(src[j].first, F.neg(F.mul(f, src[j].second)));
            ++j;
        } else {
            coef v = F.sub(dst[i].second, F.mul(f, src[j].second));
            if (v) out.emplace_back(dst[i].first, v);
            ++i;
            ++j;
        }
    }
    dst.swap(out);
}

std::size_t sparseRank(SparseMat m, const Field& F) {
    std::vector<SparseRow> rows;
    for (auto& r : m.rows)
        if (!r.empty()) rows.push_back(std::move(r));
    std::size_t rk = 0;
    std::vector<int> colCount(m.ncols);
    while (!rows.empty()) {
        std::fill(colCount.begin(), colCount.end(), 0);
        for (auto& r : rows)
            for (auto& [c, v] : r) ++colCount[c];
        // Markowitz-style pivot: minimise (rowlen-1)*(colcount-1)
        long best = std::numeric_limits<long>::max();
        std::size_t br = 0;
        int bc = -1;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            long rl = static_cast<long>(rows[i].size()) - 1;
            for (auto& [c, v] : rows[i]) {
                long cost = rl * (colCount[c] - 1);
                if (cost < best) {
                    best = cost;
                    br = i;
                    bc = c;
                }
            }
            if (best == 0) break;
        }
        SparseRow piv = std::move(rows[br]);
        rows[br] = std::move(rows.back());
        rows.pop_back();
        coef pv = 0;
        for (auto& [c, v] : piv)
            if (c == bc) pv = v;
        coef pinv = F.inv(pv);
        std::vector<SparseRow> next;
        next.reserve(rows.size());
        for (auto& r : rows) {
            auto it = std::lower_bound(r.begin(), r.end(), std::make_pair(bc, coef(0)));
            if (it != r.end() && it->first == bc) axpyRow(r, piv, F.mul(it->second, pinv), F);
            if (!r.empty()) next.push_back(std::move(r));
        }
        rows.swap(next);
        ++rk;
    }
    return rk;
}

std::size_t rank(const SparseMat& m, const Field& F) {
    if (m.ncols >= kSparseThreshold) return sparseRank(m, F);
    DenseMat d(m.rows.size(), DenseRow(m.ncols, 0));
    for (std::size_t i = 0; i < m.rows.size(); ++i)
        for (auto& [c, v] : m.rows[i]) d[i][c] = v;
    return denseRank(std::move(d), F);
}

std::vector<DenseRow> kernelBasis(DenseMat m, int ncols, const Field& F) {
    std::vector<DenseRow> basis;
    if (m.empty()) {
        for (int c = 0; c < ncols; ++c) {
            DenseRow v(ncols, 0);
            v[c] = 1;
            basis.push_back(v);
        }
        return basis;
    }
    auto piv = rowEchelon(m, F, true);
    std::vector<int> pivRow(ncols, -1);
    for (std::size_t i = 0; i < piv.size(); ++i) pivRow[piv[i]] = static_cast<int>(i);
    for (int c = 0; c < ncols; ++c) {
        if (pivRow[c] >= 0) continue;
        DenseRow v(ncols, 0);
        v[c] = 1;
        for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = F.neg(m[i][c]);
        basis.push_back(v);
    }
    return basis;
}

std::vector<int> extendBasis(const std::vector<DenseRow>& base, const std::vector<DenseRow>& extra, int dim,
                             const Field& F) {
    // incremental echelon form keyed by pivot column
    std::vector<DenseRow> ech;
    std::vector<int> pivCol;
    auto reduceVec = [&](DenseRow v) {
        for (std::size_t i = 0; i < ech.size(); ++i) {
            coef f = v[pivCol[i]];
            if (!f) continue;
            for (int k = 0; k < dim; ++k)
                if (ech[i][k]) v[k] = F.sub(v[k], F.mul(f, ech[i][k]));
        }
        return v;
    };
    auto insert = [&](DenseRow v) {
        int c = 0;
        while (c < dim && v[c] == 0) ++c;
        if (c == dim) return false;
        coef inv = F.inv(v[c]);
        for (auto& x : v) x = F.mul(x, inv);
        ech.push_back(std::move(v));
        pivCol.push_back(c);
        return true;
    };
    for (auto& b : base) insert(reduceVec(b));
    std::vector<int> picked;
    for (std::size_t j = 0; j < extra.size(); ++j)
        if (insert(reduceVec(extra[j]))) picked.push_back(static_cast<int>(j));
    return picked;
}

}  // namespace vres

#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "vres/complex.hpp"
#include "vres/field.hpp"

namespace vres {

struct HomologyProfile {
    // dims[k] = dim H~_{k-1}, k = 0 .. dim+1
    std::vector<std::size_t> dims;
    coef p = kDefaultChar;
    bool voidComplex = false;

    std::size_t at(int i) const {
        std::size_t k = static_cast<std::size_t>(i + 1);
        return (i >= -1 && k < dims.size()) ? dims[k] : 0;
    }
};

HomologyProfile reducedHomology(const ColoredComplex& d, const Field& F = Field());

// dim H_i(Δ, Γ; k) using augmented chains on both sides.
std::size_t relativeHomology(const ColoredComplex& d, const ColoredComplex& g, int i, const Field& F = Field());

// Ranks of all boundary maps of the augmented chain complex; f-vector by dimension.
struct ChainRanks {
    std::vector<std::size_t> faces;  // faces[k] = number of (k-1)-faces
    std::vector<std::size_t> ranks;  // ranks[k] = rank of ∂ from (k-1)-faces to (k-2)-faces
};
ChainRanks boundaryRanks(const ColoredComplex& d, const Field& F);

struct ReisnerResult {
    bool cm = true;
    std::optional<std::pair<Face, int>> witness;
};
ReisnerResult reisnerIsCM(const ColoredComplex& d, const Field& F = Field());

// Multigraded Betti numbers of S/I_Δ indexed by (i, degree vector).
struct BettiTable {
    std::map<std::pair<int, std::vector<int>>, std::size_t> entries;

    std::vector<std::size_t> totals() const;
    bool operator==(const BettiTable& o) const { return entries == o.entries; }
    void add(int i, const std::vector<int>& deg, std::size_t n) {
        if (n) entries[{i, deg}] += n;
    }
};

// Fine (squarefree Z^N) table when fine is set, otherwise coarsened to Z^r.
BettiTable hochsterBetti(const ColoredComplex& d, const Field& F = Field(), bool fine = false);

std::vector<int> coarsen(const Setup& s, Face u);
std::vector<int> fineDegree(const Setup& s, Face u);

}  // namespace vres

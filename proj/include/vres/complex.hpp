#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vres/errors.hpp"

namespace vres {

// A face is a bitmask over the block-major vertex order.
using Face = std::uint64_t;

inline int popcount(Face f) { return __builtin_popcountll(f); }

// Vertex universe of P^{n_1} x ... x P^{n_r}: block i has blocks[i] vertices.
struct Setup {
    std::vector<int> blocks;

    Setup() = default;
    explicit Setup(std::vector<int> b);

    int r() const { return static_cast<int>(blocks.size()); }
    int nverts() const;
    int offset(int color) const;            // 0-based color
    int colorOf(int v) const;
    int vertex(int color, int j) const;     // throws InputError when out of bounds
    Face blockMask(int color) const;
    Face colorsMask(unsigned colors) const;  // union of the blocks in `colors`
    Face universe() const;
    unsigned allColors() const { return (1u << r()) - 1; }
    std::string vertexName(int v) const;    // "x_i_j", 1-based color
    bool operator==(const Setup&) const = default;
};

// Set of colors (bit c for 0-based color c) used by a face.
unsigned faceColors(const Setup& s, Face f);
bool isRelevant(const Setup& s, Face f, unsigned colors);
inline bool isRelevant(const Setup& s, Face f) { return isRelevant(s, f, s.allColors()); }

// Lexicographic order on sorted vertex lists.
bool lexLess(Face a, Face b);
// (size, lex) order used for face enumeration.
bool sizeLexLess(Face a, Face b);

std::vector<int> faceVertices(Face f);
std::string faceString(const Setup& s, Face f);

class ColoredComplex {
public:
    ColoredComplex() = default;
    // Facets are normalized to an antichain. An empty list gives the void complex.
    ColoredComplex(Setup s, std::vector<Face> facets);

    static ColoredComplex voidComplex(const Setup& s) { return ColoredComplex(s, {}); }
    static ColoredComplex emptyFace(const Setup& s) { return ColoredComplex(s, {Face(0)}); }
    static ColoredComplex simplex(const Setup& s, Face f) { return ColoredComplex(s, {f}); }

    const Setup& setup() const { return setup_; }
    const std::vector<Face>& facets() const { return facets_; }

    bool isVoid() const { return facets_.empty(); }
    bool contains(Face f) const;
    int dim() const;  // -1 for {∅}; -2 for the void complex
    bool isPure() const;
    Face vertexSet() const;

    // All faces in (size, lex) order.
    std::vector<Face> faces() const;
    // faces grouped by dimension: result[d+1] holds faces of dimension d
    std::vector<std::vector<Face>> facesByDim() const;

    ColoredComplex restrict(Face w) const;  // induced subcomplex
    ColoredComplex unite(const ColoredComplex& o) const;
    bool subcomplexOf(const ColoredComplex& o) const;
    bool operator==(const ColoredComplex& o) const { return setup_ == o.setup_ && facets_ == o.facets_; }

private:
    Setup setup_;
    std::vector<Face> facets_;
};

std::vector<Face> normalizeFacets(std::vector<Face> facets);

// Stanley-Reisner generators (minimal nonfaces), sorted lexicographically.
// The void complex yields the single generator 0 (the unit ideal).
std::vector<Face> stanleyReisner(const ColoredComplex& d);

ColoredComplex link(const ColoredComplex& d, Face sigma);

// All irrelevant faces with at most dimBound+1 vertices, relevance taken with
// respect to the colors in `colors` and vertices restricted to those blocks.
ColoredComplex buildBr(const Setup& s, int dimBound, unsigned colors);
inline ColoredComplex buildBr(const Setup& s, int dimBound) { return buildBr(s, dimBound, s.allColors()); }
ColoredComplex augmentWithBr(const ColoredComplex& d, int dimBound);

ColoredComplex join(Face tau, const ColoredComplex& omega);

struct Components {
    std::vector<ColoredComplex> components;
    std::vector<Face> irrelevantFacets;
    bool irrelevant = false;  // no relevant face at all
};
Components relevantComponents(const ColoredComplex& d);

struct FaceSplit {
    std::vector<Face> exterior;
    std::vector<Face> interior;
};
FaceSplit exteriorInteriorSplit(const ColoredComplex& d, Face sigma, int dimBound);

struct TwoFaceEntry {
    Face facet = 0;  // facet of the link
    int count = 0;
    std::string kind;  // "sigma-repeats", "shared", "tau-repeats"
};
std::vector<TwoFaceEntry> twofaceProfile(const ColoredComplex& d, Face sigma);

struct JoinDecomposition {
    Face tau = 0;
    ColoredComplex omega;
};
std::optional<JoinDecomposition> joinDecomposition(const ColoredComplex& d);

}  // namespace vres

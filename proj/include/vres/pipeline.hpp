#pragma once

#include <string>
#include <vector>

#include "vres/complex.hpp"
#include "vres/resolution.hpp"

namespace vres {

// How one relevant-connected component was made Cohen-Macaulay.
struct ComponentCertificate {
    std::string branch;  // "join-recursion" or "Δ∪B_r"
    ColoredComplex delta;
    ColoredComplex deltaPrime;
    Face tau = 0;                 // join branch only
    std::vector<std::string> trace;
    bool reisner = false;
    std::vector<Face> ideal;      // SR generators of deltaPrime
    ChainComplex resolution;
};

struct PipelineReport {
    ColoredComplex input;
    std::string branch;  // "join-recursion", "Δ∪B_r", "component-split", "irrelevant"
    std::vector<Face> droppedFacets;
    std::vector<ComponentCertificate> components;
    bool reisner = false;
    int codim = 0;
    int pdim = 0;
    ChainComplex certificate;
    VirtualCheck check;
    bool success = false;
    double millis = 0;
};

Ring ringFor(const Setup& s, coef p = kDefaultChar);
std::vector<Poly> idealPolys(const std::vector<Face>& gens);
Presentation stanleyReisnerModule(const Ring& R, const ColoredComplex& d);

// Certifies S/I_Δ as virtually Cohen-Macaulay for an r-dimensional Δ whose
// relevant facets all have dimension r.
PipelineReport vcmCertifySR(const ColoredComplex& d, coef p = kDefaultChar);

}  // namespace vres

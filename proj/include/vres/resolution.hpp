#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vres/algebra.hpp"
#include "vres/complex.hpp"
#include "vres/homology.hpp"

namespace vres {

// M = coker(rel), rel : ⊕ S(-cols) -> ⊕ S(-gens).
struct Presentation {
    std::vector<Deg> gens;
    GradedMatrix rel;

    static Presentation cyclic(const Ring& R, const std::vector<Poly>& ideal);  // S/I
    static Presentation free(const std::vector<Deg>& twists);
    int rank() const { return static_cast<int>(gens.size()); }
};

// F_0 <- F_1 <- ... ; d[k] is the differential F_{k+1} -> F_k.
struct ChainComplex {
    std::vector<std::vector<Deg>> mods;
    std::vector<GradedMatrix> d;

    int length() const;  // largest i with F_i != 0, -1 for the zero complex
    std::vector<int> ranks() const;
    const GradedMatrix* diff(int i) const {  // ∂_i, nullptr if absent
        return (i >= 1 && i <= static_cast<int>(d.size())) ? &d[i - 1] : nullptr;
    }
    void trim();
    bool operator==(const ChainComplex& o) const { return mods == o.mods && d == o.d; }
};

ChainComplex makeComplex(const std::vector<Deg>& f0, const std::vector<GradedMatrix>& diffs);

// Cochain complex F_0^* -> F_1^* -> ..., delta[k] : F_k^* -> F_{k+1}^*.
struct CochainComplex {
    std::vector<std::vector<Deg>> mods;
    std::vector<GradedMatrix> delta;
};
CochainComplex homDual(const ChainComplex& c);
ChainComplex homDual(const CochainComplex& c);

bool squaresToZero(const Ring& R, const ChainComplex& c, std::string* why = nullptr);
bool isHomogeneousComplex(const Ring& R, const ChainComplex& c, std::string* why = nullptr);

struct MinimizeOptions {
    std::optional<std::uint64_t> seed;  // random elimination order when set
    bool trackF0 = false;
};
struct Minimized {
    ChainComplex c;
    GradedMatrix p;  // original F_0 -> new F_0, when tracked
};
Minimized minimizeComplex(const Ring& R, const ChainComplex& c, const MinimizeOptions& opts = {});
Presentation minimalPresentation(const Ring& R, const Presentation& m);

bool isSquarefreeMonomialIdeal(const Presentation& m);
// Minimal resolution of S/I for squarefree monomial I through degreewise linear algebra.
ChainComplex squarefreeResolution(const Ring& R, const std::vector<Mono>& gens);

struct ResolutionOptions {
    bool minimal = true;
    bool forceGeneral = false;
};
ChainComplex freeResolution(const Ring& R, const Presentation& m, const ResolutionOptions& opts = {});

BettiTable bettiTable(const Ring& R, const ChainComplex& c);

// Subquotient K/L of a free module, K and L given by generators (L ⊆ K).
Presentation subquotient(const Ring& R, const GradedMatrix& k, const GradedMatrix& l);

struct ModuleResult {
    Presentation module;
    bool irrelevant = false;
    bool zero = false;
};
// Ext^i(M, S) from a free (or virtual) resolution of M.
ModuleResult extModule(const Ring& R, const ChainComplex& f, int i);
// H_i(F ⊗ N) for a resolution F of M.
ModuleResult torModule(const Ring& R, const ChainComplex& f, const Presentation& n, int i);
bool isIrrelevantModule(const Ring& R, const Presentation& m);

struct VirtualCheck {
    bool complexOk = false;
    bool higherIrrelevant = false;
    bool h0Match = false;
    std::string h0Grade;      // "exact", "hilbert-box", "fine-hilbert"
    std::string method;       // "graded" or "fine"
    std::vector<int> failingDegrees;
    bool ok() const { return complexOk && higherIrrelevant && h0Match; }
};
VirtualCheck isVirtualResolution(const Ring& R, const ChainComplex& c, const Presentation& m);

ChainComplex directSum(const std::vector<ChainComplex>& cs);

// Comparison maps α_j^* : F_j^* -> G_j^* given the resolution `res` of coker(φ_t^*)
// and the map p : F_t^* -> res_0.
std::vector<GradedMatrix> liftComparison(const Ring& R, const ChainComplex& f, const ChainComplex& res,
                                         const GradedMatrix& p);

struct ConeResult {
    int t = 0;
    ChainComplex extResolution;  // resolution of Ext^t, homological indexing
    ChainComplex cone;           // before minimization
    ChainComplex minimized;
};
ConeResult mappingConeShorten(const Ring& R, const ChainComplex& f, std::optional<std::uint64_t> seed = {});

struct VregResult {
    bool regular = false;   // virtually regular
    bool annIrrelevant = false;
    bool annNonzero = false;
    bool dimDrops = false;
    int dimM = -1, dimQuotient = -1;
    bool torIrrelevant = false;
    std::string reason;
};
VregResult isVirtuallyRegular(const Ring& R, const Presentation& m, const Poly& f);
Presentation quotientByElement(const Ring& R, const Presentation& m, const Poly& f);
ChainComplex quotientTotalComplex(const Ring& R, const ChainComplex& f, const Poly& g);

struct ExtEntry {
    int i = 0;
    bool zero = false;
    bool irrelevant = false;
};

struct Classification {
    int codim = 0;
    int dim = 0;
    int pdim = 0;
    bool acm = false;
    std::optional<bool> vcm;
    bool gcmConsistent = false;
    std::optional<bool> virtuallyUnmixed;
    int vdimLower = 0;
    int vdimUpper = 0;
    std::string cls;  // aCM, vCM, not-vCM, unknown
    std::vector<ExtEntry> extProfile;
    int obstructionIndex = -1;
    std::vector<std::string> steps;
    std::string reason;
    ChainComplex best;
    VirtualCheck bestCheck;
};
Classification classify(const Ring& R, const Presentation& m, int budget = 8);

}  // namespace vres

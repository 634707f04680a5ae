#include <algorithm>

#include "vres/algebra.hpp"
#include "vres/resolution.hpp"

namespace vres {

namespace {

std::optional<std::vector<Mono>> monomialIdealGens(const Presentation& m) {
    if (m.rank() != 1 || !isMonomialMatrix(m.rel)) return std::nullopt;
    std::vector<Mono> gens;
    for (int v = 0; v < m.rel.ncols(); ++v)
        if (!m.rel.at(0, v).isZero()) gens.push_back(m.rel.at(0, v).t[0].m);
    return gens;
}

// Unmixedness of a monomial ideal: every irreducible component has the same height.
bool monomialUnmixed(const std::vector<Mono>& gens) {
    auto comps = irreducibleDecomposition(gens);
    std::optional<int> h;
    for (auto& c : comps) {
        int s = __builtin_popcount(c.support());
        if (h && *h != s) return false;
        h = s;
    }
    return true;
}

}  // namespace

Classification classify(const Ring& R, const Presentation& m, int budget) {
    if (m.rank() == 0) throw DomainError("classify needs a nonzero module");
    if (isIrrelevantModule(R, m)) throw PreconditionError("module is irrelevant");
    Classification out;
    out.dim = krullDim(R, m.rel);
    out.codim = R.nvars - out.dim;
    ChainComplex f = freeResolution(R, m);
    out.pdim = f.length();
    out.acm = out.pdim == out.codim;
    out.steps.push_back("minimal free resolution of length " + std::to_string(out.pdim));

    int obs = -1;
    for (int i = 0; i <= out.pdim; ++i) {
        ModuleResult e = extModule(R, f, i);
        out.extProfile.push_back({i, e.zero, e.irrelevant});
        if (!e.irrelevant) obs = i;
    }
    out.obstructionIndex = obs;
    out.gcmConsistent = true;
    for (auto& e : out.extProfile)
        if (e.i > out.codim && !e.irrelevant) out.gcmConsistent = false;
    int lb = std::max(out.codim, obs);
    int ub = out.pdim;
    if (obs > out.codim) out.steps.push_back("Ext^" + std::to_string(obs) + " is not irrelevant");

    if (lb == 0 && R.r == 1) {
        for (auto& e : out.extProfile)
            if (e.i >= 1 && e.i <= R.nvars - 2 && !e.zero) {
                lb = 1;
                out.steps.push_back("Ext^" + std::to_string(e.i) +
                                    " is nonzero, so the sheaf is not a sum of line bundles");
                break;
            }
    }

    if (auto gens = monomialIdealGens(m)) {
        GradedMatrix sat = saturate(R, m.rel);
        auto sg = monomialIdealGens(Presentation{m.gens, sat});
        if (sg) {
            out.virtuallyUnmixed = monomialUnmixed(*sg);
            if (!*out.virtuallyUnmixed) {
                lb = std::max(lb, out.codim + 1);
                out.steps.push_back("saturated annihilator is mixed");
            }
        }
    }

    out.best = f;
    ChainComplex cur = f;
    int iter = 0;
    while (lb < ub && iter < budget) {
        ++iter;
        try {
            ConeResult cr = mappingConeShorten(R, cur);
            if (cr.minimized.length() >= cur.length()) {
                out.steps.push_back("mapping cone did not shorten the complex");
                break;
            }
            cur = cr.minimized;
            ub = cur.length();
            out.best = cur;
            out.steps.push_back("mapping cone: length " + std::to_string(ub));
        } catch (const ObstructionError& e) {
            lb = std::max(lb, e.index);
            out.steps.push_back(std::string("obstruction: ") + e.what());
            break;
        } catch (const PreconditionError& e) {
            out.steps.push_back(std::string("mapping cone unavailable: ") + e.what());
            break;
        }
    }
    out.bestCheck = isVirtualResolution(R, out.best, m);
    if (!out.bestCheck.ok()) throw ContradictionError("shortened complex is not a virtual resolution");
    out.vdimLower = lb;
    out.vdimUpper = ub;

    if (out.acm) {
        out.cls = "aCM";
        out.vcm = true;
        out.reason = "pdim equals codim";
    } else if (lb == ub && ub == out.codim) {
        out.cls = "vCM";
        out.vcm = true;
        out.reason = "virtual resolution of length codim found";
    } else if (lb > out.codim) {
        out.cls = "not-vCM";
        out.vcm = false;
        out.reason = "virtual dimension is at least " + std::to_string(lb) + " > codim " + std::to_string(out.codim);
    } else {
        out.cls = "unknown";
        out.reason = iter >= budget ? "iteration budget exhausted" : "no further shortening available";
    }
    return out;
}

}  // namespace vres

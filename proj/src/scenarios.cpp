#include "vres/scenarios.hpp"

#include <fstream>
#include <sstream>

#include "vres/algebra.hpp"

#ifndef VRES_GOLDEN_DIR
#define VRES_GOLDEN_DIR "tests/golden"
#endif

namespace vres {

namespace {

std::vector<Poly> polys(const Ring& R, const std::vector<std::string>& ss) {
    std::vector<Poly> out;
    for (auto& s : ss) out.push_back(parsePoly(R, s));
    return out;
}

json idealJson(const Ring& R, const GradedMatrix& a) {
    json o = json::array();
    for (auto& p : idealGens(a)) o.push_back(formatPoly(R, p));
    return o;
}

json extProfileJson(const Ring& R, const ChainComplex& f) {
    json o = json::array();
    for (int i = 0; i <= f.length(); ++i) {
        ModuleResult e = extModule(R, f, i);
        o.push_back(json{{"i", i}, {"zero", e.zero}, {"irrelevant", e.irrelevant}, {"rank", e.module.rank()}});
    }
    return o;
}

json vregJson(const VregResult& v) {
    return json{{"regular", v.regular},         {"ann_irrelevant", v.annIrrelevant}, {"ann_nonzero", v.annNonzero},
                {"dim_drops", v.dimDrops},      {"dim", v.dimM},                     {"dim_quotient", v.dimQuotient},
                {"tor_irrelevant", v.torIrrelevant}, {"reason", v.reason}};
}

json ex2_8() {
    Setup s({4});
    ColoredComplex d(s, {0b0011, 0b1100});
    Ring R = ringFor(s);
    PipelineReport rep = vcmCertifySR(d);
    return json{{"sr_ideal", idealJson(R, stanleyReisnerModule(R, d).rel)}, {"pipeline", pipelineToJson(R, rep)}};
}

ColoredComplex cylinder() {
    Setup s({3, 3});
    auto x = [&](int j) { return Face(1) << s.vertex(0, j); };
    auto y = [&](int j) { return Face(1) << s.vertex(1, j); };
    return ColoredComplex(s, {x(0) | y(1) | x(1), y(1) | y(0) | x(0), x(0) | y(0) | x(2), y(2) | y(0) | x(2),
                              x(1) | x(2) | y(2), x(1) | y(1) | y(2)});
}

json ex2_9() {
    ColoredComplex d = cylinder();
    const Setup& s = d.setup();
    Ring R = ringFor(s);
    ReisnerResult rc = reisnerIsCM(d, R.F);
    ColoredComplex dp = augmentWithBr(d, 2);
    ReisnerResult rp = reisnerIsCM(dp, R.F);
    json w = nullptr;
    if (rc.witness) w = json{{"face", faceString(s, rc.witness->first)}, {"degree", rc.witness->second}};
    Presentation m = stanleyReisnerModule(R, d);
    PipelineReport rep = vcmCertifySR(d);
    GradedMatrix sat = saturate(R, m.rel);
    GradedMatrix j = stanleyReisnerModule(R, dp).rel;
    return json{{"sr_ideal", idealJson(R, m.rel)},
                {"saturation_equals_sat_augmented", sameSubmodule(R, sat, saturate(R, j))},
                {"reisner_cylinder", rc.cm},
                {"reisner_witness", w},
                {"saturation", idealJson(R, sat)},
                {"reisner_augmented", rp.cm},
                {"augmented_sr_ideal", idealJson(R, stanleyReisnerModule(R, dp).rel)},
                {"pipeline", pipelineToJson(R, rep)}};
}

json ex3_2() {
    Ring R = Ring::product({4});
    Presentation m = Presentation::cyclic(R, polys(R, {"x0*x2", "x0*x3", "x1*x2", "x1*x3"}));
    ChainComplex f = freeResolution(R, m);
    ConeResult cr = mappingConeShorten(R, f);
    VirtualCheck vc = isVirtualResolution(R, cr.minimized, m);
    Classification cl = classify(R, m);
    return json{{"resolution", chainToJson(R, f)},
                {"ext", extProfileJson(R, f)},
                {"cone", coneToJson(R, cr)},
                {"cone_check", virtualCheckToJson(vc)},
                {"classification", classificationToJson(R, cl)}};
}

json ex3_3() {
    Ring R = Ring::product({2, 3});
    R.names = {"x0", "x1", "y0", "y1", "y2"};
    const std::vector<std::vector<std::string>> d1 = {
        {"0", "-x1*y0-x1*y1", "x0*y0^2", "y1^2*y2", "-x1*y1^2-x0*y2^2", "y0*y2^2+y1*y2^2", "x0*y2",
         "y0^3+y0^2*y1", "0"},
        {"-x1", "-x0", "0", "y0^2", "0", "-y1^2", "0", "-y2^2", "0"},
        {"0", "0", "-x1", "0", "-x0", "y0+y1", "0", "0", "-y2"},
        {"x0", "0", "0", "y2^2", "0", "0", "-x1", "-y1^2", "y0^2"}};
    const std::vector<std::vector<std::string>> d2 = {
        {"-y1^2", "0", "y0^2", "-y2^2", "0"}, {"y2^2", "0", "0", "y0^2", "-y1^2"}, {"y0+y1", "-y2", "0", "0", "0"},
        {"0", "0", "x1", "x0", "0"},          {"0", "0", "y2", "0", "y0+y1"},      {"x1", "0", "0", "0", "x0"},
        {"0", "y0^2", "y2^2", "-y1^2", "0"},  {"-x0", "0", "0", "x1", "0"},        {"0", "x1", "-x0", "0", "0"}};
    const std::vector<Deg> f0Listed = {{0, 0}, {0, 1}, {0, 1}, {0, 2}, {0, 2}};
    const std::vector<Deg> f1 = {{1, 1}, {1, 1}, {1, 2}, {0, 3}, {1, 2}, {0, 3}, {1, 1}, {0, 3}, {0, 3}};
    const std::vector<Deg> f2(5, Deg{1, 3});
    GradedMatrix a2(f1, f2);
    for (int u = 0; u < 9; ++u)
        for (int v = 0; v < 5; ++v) a2.at(u, v) = parsePoly(R, d2[u][v]);
    // rows of the first matrix follow from its entries and the listed column twists
    std::vector<Deg> rows;
    bool rowsConsistent = true;
    std::vector<std::vector<Poly>> e1(4);
    for (int u = 0; u < 4; ++u) {
        std::optional<Deg> rd;
        for (int v = 0; v < 9; ++v) {
            Poly p = parsePoly(R, d1[u][v]);
            if (!p.isZero()) {
                if (!isHomogeneous(R, p)) rowsConsistent = false;
                Deg d = degSub(f1[v], polyDeg(R, p));
                if (rd && *rd != d) rowsConsistent = false;
                rd = d;
            }
            e1[u].push_back(p);
        }
        rows.push_back(rd.value_or(R.zero()));
    }
    GradedMatrix a1(rows, f1);
    for (int u = 0; u < 4; ++u)
        for (int v = 0; v < 9; ++v) a1.at(u, v) = e1[u][v];
    std::string why1, why2;
    bool h1 = rowsConsistent && isHomogeneousMatrix(R, a1, &why1);
    bool h2 = isHomogeneousMatrix(R, a2, &why2);
    bool zero = matMul(R, a1, a2).isZero();
    json listed = json::array(), inferred = json::array();
    for (auto& d : f0Listed) listed.push_back(twistToJson(d));
    for (auto& d : rows) inferred.push_back(twistToJson(d));
    return json{{"d1_shape", {a1.nrows(), a1.ncols()}},
                {"d2_shape", {a2.nrows(), a2.ncols()}},
                {"d1_d2_zero", zero},
                {"d1_homogeneous", h1},
                {"d2_homogeneous", h2},
                {"f0_listed", listed},
                {"f0_inferred", inferred},
                {"f0_discrepancy", f0Listed.size() != rows.size()},
                {"characteristic", R.F.p}};
}

json ex3_5() {
    Ring R = Ring::product({6});
    GradedMatrix j = intersect(R, idealMatrix(R, polys(R, {"x0", "x1", "x2"})), idealMatrix(R, polys(R, {"x3", "x4", "x5"})));
    Presentation m{{R.zero()}, mingens(R, j)};
    Classification cl = classify(R, m);
    json seq = json::array();
    Presentation cur = m;
    for (auto f : {"x2 - x5", "x1 - x4", "x0 - x3"}) {
        Poly p = parsePoly(R, f);
        VregResult v = isVirtuallyRegular(R, cur, p);
        json e = vregJson(v);
        e["element"] = f;
        seq.push_back(e);
        cur = quotientByElement(R, cur, p);
    }
    return json{{"ideal", idealJson(R, m.rel)},
                {"classification", classificationToJson(R, cl)},
                {"sequence", seq},
                {"final_quotient_irrelevant", isIrrelevantModule(R, cur)}};
}

json ex3_7() {
    Ring R = Ring::product({3});
    Presentation m = Presentation::cyclic(R, polys(R, {"x0^2", "x0*x1"}));
    Classification cl = classify(R, m);
    Poly x2 = parsePoly(R, "x2");
    VregResult v = isVirtuallyRegular(R, m, x2);
    Presentation q = quotientByElement(R, m, x2);
    json seq = json::array();
    Presentation cur = m;
    bool all = true;
    for (auto f : {"x0", "x1", "x2"}) {
        Poly p = parsePoly(R, f);
        VregResult e = isVirtuallyRegular(R, cur, p);
        json o = vregJson(e);
        o["element"] = f;
        seq.push_back(o);
        if (!e.regular) {
            all = false;
            break;
        }
        cur = quotientByElement(R, cur, p);
    }
    return json{{"classification", classificationToJson(R, cl)},
                {"x2", vregJson(v)},
                {"quotient_saturation", idealJson(R, saturate(R, q.rel))},
                {"sequence_x0_x1_x2", seq},
                {"sequence_x0_x1_x2_regular", all}};
}

json ex4_4() {
    Ring R = Ring::product({5});
    GradedMatrix j = intersect(R, idealMatrix(R, polys(R, {"x0", "x1"})), idealMatrix(R, polys(R, {"x2", "x3"})));
    Presentation m{{R.zero()}, mingens(R, j)};
    ChainComplex f = freeResolution(R, m);
    ModuleResult e3 = extModule(R, f, 3);
    GradedMatrix target = idealMatrix(R, polys(R, {"x0", "x1", "x2", "x3"}));
    bool sameSat = e3.module.rank() == 1 && sameSubmodule(R, saturate(R, idealMatrix(R, idealGens(e3.module.rel))), saturate(R, target));
    json cone;
    try {
        mappingConeShorten(R, f);
        cone = json{{"obstruction", false}};
    } catch (const ObstructionError& err) {
        cone = json{{"obstruction", true}, {"index", err.index}, {"message", err.what()}};
    }
    Classification cl = classify(R, m);
    return json{{"resolution_ranks", ranksToJson(f)},
                {"ext3", presentationToJson(R, e3.module)},
                {"ext3_irrelevant", e3.irrelevant},
                {"ext3_saturation_matches", sameSat},
                {"cone", cone},
                {"classification", classificationToJson(R, cl)}};
}

Presentation tangentModule(const Ring& R) {
    std::vector<Deg> gens(R.nvars, R.zero());
    GradedMatrix col(gens, {Deg{1}});
    for (int i = 0; i < R.nvars; ++i) col.at(i, 0) = Poly::monomial(Mono::var(i));
    return Presentation{gens, col};
}

json ex5_3() {
    json o = json::object();
    for (int d : {2, 3}) {
        Ring R = Ring::product({d + 1});
        Classification cl = classify(R, tangentModule(R));
        o["P" + std::to_string(d)] = classificationToJson(R, cl);
    }
    return o;
}

json lemma2_2() {
    json o = json::array();
    for (std::vector<int> b : {std::vector<int>{2, 2}, {2, 3}, {3, 3}, {2, 2, 2}, {2, 2, 3}}) {
        Setup s(b);
        int r = s.r();
        ColoredComplex br = buildBr(s, r);
        HomologyProfile h = reducedHomology(br);
        int links = 0;
        bool linksOk = true;
        for (Face f : br.faces()) {
            if (f == 0) continue;
            ++links;
            HomologyProfile hl = reducedHomology(link(br, f));
            for (int i = -1; i < r - 1 - (popcount(f) - 1); ++i)
                if (hl.at(i) != 0) linksOk = false;
        }
        o.push_back(json{{"blocks", b}, {"homology", homologyToJson(h)}, {"links_checked", links},
                         {"links_vanish", linksOk}});
    }
    return o;
}

}  // namespace

const std::vector<std::string>& exampleNames() {
    static const std::vector<std::string> names = {"ex2_8", "ex2_9", "ex3_2", "ex3_3_matrices", "ex3_5",
                                                   "ex3_7", "ex4_4", "ex5_3", "lemma2_2_profiles"};
    return names;
}

json runExample(const std::string& name) {
    if (name == "ex2_8") return ex2_8();
    if (name == "ex2_9") return ex2_9();
    if (name == "ex3_2") return ex3_2();
    if (name == "ex3_3_matrices") return ex3_3();
    if (name == "ex3_5") return ex3_5();
    if (name == "ex3_7") return ex3_7();
    if (name == "ex4_4") return ex4_4();
    if (name == "ex5_3") return ex5_3();
    if (name == "lemma2_2_profiles") return lemma2_2();
    throw InputError("unknown example " + name);
}

std::string goldenPath(const std::string& name) { return std::string(VRES_GOLDEN_DIR) + "/" + name + ".json"; }

namespace {

std::vector<std::string> splitLines(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string line;
    while (std::getline(in, line)) out.push_back(line);
    return out;
}

// Line diff via LCS, printed in unified style without hunk merging.
std::string unifiedDiff(const std::vector<std::string>& a, const std::vector<std::string>& b, const std::string& name) {
    const std::size_t n = a.size(), m = b.size();
    std::vector<std::vector<int>> l(n + 1, std::vector<int>(m + 1, 0));
    for (std::size_t i = n; i-- > 0;)
        for (std::size_t j = m; j-- > 0;) l[i][j] = a[i] == b[j] ? l[i + 1][j + 1] + 1 : std::max(l[i + 1][j], l[i][j + 1]);
    std::ostringstream out;
    out << "--- " << name << " (golden)\n+++ " << name << " (actual)\n";
    std::size_t i = 0, j = 0;
    while (i < n || j < m) {
        if (i < n && j < m && a[i] == b[j]) {
            ++i;
            ++j;
        } else if (j < m && (i == n || l[i][j + 1] >= l[i + 1][j])) {
            out << "@@ +" << j + 1 << " @@\n+" << b[j] << "\n";
            ++j;
        } else {
            out << "@@ -" << i + 1 << " @@\n-" << a[i] << "\n";
            ++i;
        }
    }
    return out.str();
}

}  // namespace

GoldenDiff compareGolden(const std::string& name, const std::string& actual) {
    GoldenDiff g;
    std::ifstream in(goldenPath(name));
    std::string expected;
    if (in) {
        std::ostringstream ss;
        ss << in.rdbuf();
        expected = ss.str();
    }
    g.same = in && expected == actual;
    if (!g.same) g.diff = unifiedDiff(splitLines(expected), splitLines(actual), name);
    return g;
}

}  // namespace vres

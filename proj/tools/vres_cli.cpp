// vres: command-line workbench for virtual resolutions over products of projective spaces.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "vres/algebra.hpp"
#include "vres/homology.hpp"
#include "vres/io.hpp"
#include "vres/linalg.hpp"
#include "vres/pipeline.hpp"
#include "vres/scenarios.hpp"

using namespace vres;

namespace {

enum Exit { kOk = 0, kDiff = 1, kNegative = 2, kPrecondition = 3, kContradiction = 4 };

struct Globals {
    long long charp = kDefaultChar;
    std::string in;
    bool json = false;
    int budget = 8;
};

json readInput(const std::string& path) {
    std::string text;
    if (path.empty() || path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        text = ss.str();
    } else {
        std::ifstream f(path);
        if (!f) throw InputError("cannot open " + path);
        std::ostringstream ss;
        ss << f.rdbuf();
        text = ss.str();
    }
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("invalid JSON: ") + e.what());
    }
}

coef characteristic(const Globals& g) {
    if (g.charp < 2 || g.charp > 2147483647 || !isPrime(static_cast<coef>(g.charp)))
        throw InputError("--char must be a prime below 2^31");
    return static_cast<coef>(g.charp);
}

Ring ringOf(const json& j, const Globals& g) {
    if (!j.contains("blocks")) throw InputError("input needs \"blocks\"");
    return Ring::product(setupFromJson(j["blocks"]).blocks, characteristic(g));
}

Face parseFace(const Setup& s, const std::string& text) {
    json arr = json::array();
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ','))
        if (!tok.empty()) arr.push_back(tok);
    json c{{"blocks", s.blocks}, {"facets", json::array({arr})}};
    ColoredComplex d = complexFromJson(c);
    return d.facets().empty() ? 0 : d.facets()[0];
}

void emit(const Globals& g, const json& j, const std::string& text) {
    if (g.json) std::cout << canonical(j);
    else std::cout << text;
}

std::string ranksLine(const Ring& R, const ChainComplex& c) {
    std::string out;
    for (int i = 0; i <= c.length(); ++i) {
        if (i) out += " <- ";
        std::map<Deg, int> count;
        for (auto& d : c.mods[i]) count[d]++;
        bool first = true;
        for (auto& [d, n] : count) {
            if (!first) out += "+";
            first = false;
            out += "S(";
            for (int k = 0; k < R.r; ++k) out += (k ? "," : "") + std::to_string(-d[k]);
            out += ")";
            if (n > 1) out += "^" + std::to_string(n);
        }
        if (count.empty()) out += "0";
    }
    return out + "\n";
}

ChainComplex complexOrResolution(const Ring& R, const json& j) {
    if (j.contains("complex")) return chainFromJson(R, j["complex"]);
    return freeResolution(R, presentationFromJson(R, j));
}

int cmdSrideal(const Globals& g) {
    json in = readInput(g.in);
    ColoredComplex d = complexFromJson(in);
    Ring R = Ring::product(d.setup().blocks, characteristic(g));
    json gens = json::array();
    std::string text;
    for (auto& p : idealPolys(stanleyReisner(d))) {
        gens.push_back(formatPoly(R, p));
        text += formatPoly(R, p) + "\n";
    }
    emit(g, json{{"ideal", gens}}, text);
    return kOk;
}

int cmdReisner(const Globals& g) {
    ColoredComplex d = complexFromJson(readInput(g.in));
    Field F(characteristic(g));
    ReisnerResult r = reisnerIsCM(d, F);
    json w = nullptr;
    std::string text = r.cm ? "Cohen-Macaulay\n" : "not Cohen-Macaulay\n";
    if (r.witness) {
        w = json{{"face", faceString(d.setup(), r.witness->first)}, {"degree", r.witness->second}};
        text += "witness: H~_" + std::to_string(r.witness->second) + "(link of " +
                faceString(d.setup(), r.witness->first) + ") != 0\n";
    }
    emit(g, json{{"cm", r.cm}, {"witness", w}, {"characteristic", F.p}}, text);
    return r.cm ? kOk : kNegative;
}

int cmdBetti(const Globals& g, bool fine, bool engine) {
    json in = readInput(g.in);
    ColoredComplex d = complexFromJson(in);
    Field F(characteristic(g));
    BettiTable t;
    if (engine) {
        Ring R = Ring::product(d.setup().blocks, F.p);
        if (fine) R = Ring::fine(R);
        t = bettiTable(R, freeResolution(R, stanleyReisnerModule(R, d)));
    } else {
        t = hochsterBetti(d, F, fine);
    }
    std::string text;
    for (auto& [k, n] : t.entries) {
        text += "beta_" + std::to_string(k.first) + ",(";
        for (std::size_t i = 0; i < k.second.size(); ++i) text += (i ? "," : "") + std::to_string(k.second[i]);
        text += ") = " + std::to_string(n) + "\n";
    }
    emit(g, bettiToJson(t), text);
    return kOk;
}

int cmdLink(const Globals& g, const std::string& face) {
    ColoredComplex d = complexFromJson(readInput(g.in));
    Face f = parseFace(d.setup(), face);
    ColoredComplex l = link(d, f);
    HomologyProfile h = reducedHomology(l, Field(characteristic(g)));
    std::string text;
    for (Face x : l.facets()) text += faceString(d.setup(), x) + "\n";
    text += "reduced homology from degree -1:";
    for (auto v : h.dims) text += " " + std::to_string(v);
    emit(g, json{{"link", complexToJson(l)}, {"homology", homologyToJson(h)}}, text + "\n");
    return kOk;
}

int cmdBr(const Globals& g, const std::string& blocks, int dimBound) {
    Setup s;
    if (!blocks.empty()) {
        json b = json::array();
        std::stringstream ss(blocks);
        std::string tok;
        while (std::getline(ss, tok, ',')) b.push_back(std::stoi(tok));
        s = setupFromJson(b);
    } else {
        s = setupFromJson(readInput(g.in).at("blocks"));
    }
    int k = dimBound >= 0 ? dimBound : s.r();
    ColoredComplex br = buildBr(s, k);
    HomologyProfile h = reducedHomology(br, Field(characteristic(g)));
    std::string text = std::to_string(br.facets().size()) + " facets\nreduced homology from degree -1:";
    for (auto v : h.dims) text += " " + std::to_string(v);
    emit(g, json{{"complex", complexToJson(br)}, {"homology", homologyToJson(h)}}, text + "\n");
    return kOk;
}

int cmdVcm(const Globals& g) {
    ColoredComplex d = complexFromJson(readInput(g.in));
    coef p = characteristic(g);
    Ring R = Ring::product(d.setup().blocks, p);
    PipelineReport rep = vcmCertifySR(d, p);
    std::string text = "branch: " + rep.branch + "\n";
    if (rep.success) {
        text += "certificate: " + ranksLine(R, rep.certificate);
        text += "codim " + std::to_string(rep.codim) + ", pdim " + std::to_string(rep.pdim) + "\n";
    } else {
        text += "S/I is irrelevant\n";
    }
    std::cerr << "time: " << rep.millis << " ms\n";
    emit(g, pipelineToJson(R, rep), text);
    return rep.success ? kOk : kNegative;
}

int cmdRes(const Globals& g, bool nonminimal) {
    json in = readInput(g.in);
    Ring R = ringOf(in, g);
    ResolutionOptions o;
    o.minimal = !nonminimal;
    ChainComplex c = freeResolution(R, presentationFromJson(R, in), o);
    emit(g, chainToJson(R, c), ranksLine(R, c));
    return kOk;
}

int cmdMinimize(const Globals& g, std::optional<std::uint64_t> seed) {
    json in = readInput(g.in);
    Ring R = ringOf(in, g);
    ChainComplex c = chainFromJson(R, in.at("complex"));
    MinimizeOptions o;
    o.seed = seed;
    ChainComplex m = minimizeComplex(R, c, o).c;
    emit(g, chainToJson(R, m), ranksLine(R, m));
    return kOk;
}

int cmdMapcone(const Globals& g, std::optional<std::uint64_t> seed) {
    json in = readInput(g.in);
    Ring R = ringOf(in, g);
    ConeResult cr = mappingConeShorten(R, complexOrResolution(R, in), seed);
    json out = coneToJson(R, cr);
    std::string text = ranksLine(R, cr.minimized);
    if (in.contains("ideal") || in.contains("module")) {
        VirtualCheck v = isVirtualResolution(R, cr.minimized, presentationFromJson(R, in));
        out["check"] = virtualCheckToJson(v);
        text += std::string("virtual resolution: ") + (v.ok() ? "yes" : "no") + "\n";
        if (!v.ok()) throw ContradictionError("minimized cone is not a virtual resolution");
    }
    emit(g, out, text);
    return kOk;
}

int cmdExt(const Globals& g, int index) {
    json in = readInput(g.in);
    Ring R = ringOf(in, g);
    ChainComplex f = complexOrResolution(R, in);
    json arr = json::array();
    std::string text;
    for (int i = 0; i <= f.length(); ++i) {
        if (index >= 0 && i != index) continue;
        ModuleResult e = extModule(R, f, i);
        arr.push_back(json{{"i", i}, {"zero", e.zero}, {"irrelevant", e.irrelevant},
                           {"module", presentationToJson(R, e.module)}});
        text += "Ext^" + std::to_string(i) + ": " + (e.zero ? "0" : e.irrelevant ? "irrelevant" : "not irrelevant") +
                " (" + std::to_string(e.module.rank()) + " generators)\n";
    }
    emit(g, arr, text);
    return kOk;
}

int cmdTor(const Globals& g, int index, const std::string& with) {
    json in = readInput(g.in);
    Ring R = ringOf(in, g);
    ChainComplex f = complexOrResolution(R, in);
    Presentation n;
    if (!with.empty()) {
        std::vector<Poly> gens;
        std::stringstream ss(with);
        std::string tok;
        while (std::getline(ss, tok, ',')) gens.push_back(parsePoly(R, tok));
        n = Presentation::cyclic(R, gens);
    } else if (in.contains("other")) {
        n = presentationFromJson(R, in["other"]);
    } else {
        throw InputError("tor needs --with or an \"other\" module");
    }
    json arr = json::array();
    std::string text;
    for (int i = 0; i <= f.length(); ++i) {
        if (index >= 0 && i != index) continue;
        ModuleResult t = torModule(R, f, n, i);
        arr.push_back(json{{"i", i}, {"zero", t.zero}, {"irrelevant", t.irrelevant},
                           {"module", presentationToJson(R, t.module)}});
        text += "Tor_" + std::to_string(i) + ": " + (t.zero ? "0" : t.irrelevant ? "irrelevant" : "not irrelevant") + "\n";
    }
    emit(g, arr, text);
    return kOk;
}

int cmdVreg(const Globals& g, const std::vector<std::string>& elements) {
    json in = readInput(g.in);
    Ring R = ringOf(in, g);
    Presentation cur = presentationFromJson(R, in);
    json arr = json::array();
    std::string text;
    bool all = true;
    for (auto& s : elements) {
        Poly f = parsePoly(R, s);
        VregResult v = isVirtuallyRegular(R, cur, f);
        arr.push_back(json{{"element", s}, {"regular", v.regular}, {"ann_irrelevant", v.annIrrelevant},
                           {"ann_nonzero", v.annNonzero}, {"dim_drops", v.dimDrops}, {"reason", v.reason}});
        text += s + ": " + (v.regular ? "virtually regular" : "not virtually regular") + " (" + v.reason + ")\n";
        if (!v.regular) {
            all = false;
            break;
        }
        cur = quotientByElement(R, cur, f);
    }
    emit(g, json{{"sequence", arr}, {"regular", all}}, text);
    return all ? kOk : kNegative;
}

int cmdQuotient(const Globals& g, const std::string& element) {
    json in = readInput(g.in);
    Ring R = ringOf(in, g);
    Presentation m = presentationFromJson(R, in);
    Poly f = parsePoly(R, element);
    ChainComplex f0 = in.contains("complex") ? chainFromJson(R, in["complex"]) : freeResolution(R, m);
    ChainComplex tot = quotientTotalComplex(R, f0, f);
    Presentation q = quotientByElement(R, m, f);
    json out{{"quotient", presentationToJson(R, minimalPresentation(R, q))},
             {"total_complex", chainToJson(R, tot)},
             {"irrelevant", isIrrelevantModule(R, q)}};
    emit(g, out, ranksLine(R, tot));
    return kOk;
}

int cmdClassify(const Globals& g) {
    json in = readInput(g.in);
    Ring R = ringOf(in, g);
    Classification c = classify(R, presentationFromJson(R, in), g.budget);
    std::string text = "class: " + c.cls + "\ncodim " + std::to_string(c.codim) + ", pdim " +
                       std::to_string(c.pdim) + ", vdim in [" + std::to_string(c.vdimLower) + "," +
                       std::to_string(c.vdimUpper) + "]\n";
    for (auto& s : c.steps) text += "  " + s + "\n";
    emit(g, classificationToJson(R, c), text);
    return c.vcm.value_or(true) ? kOk : kNegative;
}

int cmdIrrelevant(const Globals& g) {
    json in = readInput(g.in);
    Ring R = ringOf(in, g);
    Presentation m = presentationFromJson(R, in);
    bool irr = isIrrelevantModule(R, m);
    json out{{"irrelevant", irr}, {"saturation", matrixToJson(R, saturate(R, m.rel))}};
    emit(g, out, irr ? "irrelevant\n" : "not irrelevant\n");
    return irr ? kOk : kNegative;
}

int cmdRunExample(const std::string& name, bool update, bool all) {
    std::vector<std::string> names = all ? exampleNames() : std::vector<std::string>{name};
    int rc = kOk;
    for (auto& n : names) {
        std::string actual = canonical(runExample(n));
        if (update) {
            std::ofstream(goldenPath(n)) << actual;
            std::cout << n << ": updated\n";
            continue;
        }
        GoldenDiff d = compareGolden(n, actual);
        if (d.same) {
            std::cout << n << ": ok\n";
        } else {
            std::cout << d.diff;
            rc = kDiff;
        }
    }
    return rc;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"virtual resolutions over products of projective spaces"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_option("--char", g.charp, "field characteristic (prime)");
    app.add_option("--in", g.in, "input JSON file, '-' for stdin");
    app.add_flag("--json", g.json, "canonical JSON output");
    app.add_option("--budget", g.budget, "mapping-cone iteration budget")->check(CLI::NonNegativeNumber);

    int code = kOk;
    std::string face, blocks, element, with, example;
    std::vector<std::string> elements;
    int dimBound = -1, index = -1;
    bool fine = false, engine = false, nonminimal = false, update = false, all = false;
    std::uint64_t seed = 0;

    app.add_subcommand("srideal", "Stanley-Reisner ideal of a complex")->callback([&] { code = cmdSrideal(g); });
    app.add_subcommand("reisner", "Reisner's criterion")->callback([&] { code = cmdReisner(g); });
    auto* betti = app.add_subcommand("betti", "multigraded Betti numbers via Hochster's formula");
    betti->add_flag("--fine", fine, "fine Z^N grading");
    betti->add_flag("--engine", engine, "compute from a free resolution instead");
    betti->callback([&] { code = cmdBetti(g, fine, engine); });
    auto* lk = app.add_subcommand("link", "link of a face");
    lk->add_option("--face", face, "comma separated vertices, e.g. x_1_0,x_2_1")->required();
    lk->callback([&] { code = cmdLink(g, face); });
    auto* br = app.add_subcommand("br", "complex of irrelevant faces of bounded dimension");
    br->add_option("--blocks", blocks, "block sizes, e.g. 3,3");
    br->add_option("--dim", dimBound, "dimension bound (default r)");
    br->callback([&] { code = cmdBr(g, blocks, dimBound); });
    app.add_subcommand("vcm", "certify S/I_Δ virtually Cohen-Macaulay")->callback([&] { code = cmdVcm(g); });
    auto* res = app.add_subcommand("res", "free resolution of a module");
    res->add_flag("--nonminimal", nonminimal, "skip minimization");
    res->callback([&] { code = cmdRes(g, nonminimal); });
    auto* mini = app.add_subcommand("minimize", "minimize a complex of free modules");
    auto* seedOpt = mini->add_option("--seed", seed, "randomize the elimination order");
    mini->callback([&] { code = cmdMinimize(g, seedOpt->count() ? std::optional<std::uint64_t>(seed) : std::nullopt); });
    auto* cone = app.add_subcommand("mapcone", "shorten a resolution by one mapping cone");
    auto* coneSeed = cone->add_option("--seed", seed, "randomize the minimization order");
    cone->callback([&] { code = cmdMapcone(g, coneSeed->count() ? std::optional<std::uint64_t>(seed) : std::nullopt); });
    auto* ext = app.add_subcommand("ext", "Ext^i(M, S)");
    ext->add_option("--index", index, "only this i");
    ext->callback([&] { code = cmdExt(g, index); });
    auto* tor = app.add_subcommand("tor", "Tor_i(M, N)");
    tor->add_option("--index", index, "only this i");
    tor->add_option("--with", with, "N = S/(comma separated generators)");
    tor->callback([&] { code = cmdTor(g, index, with); });
    auto* vreg = app.add_subcommand("vreg", "virtual regularity of a sequence");
    vreg->add_option("--element,elements", elements, "elements in order")->required();
    vreg->callback([&] { code = cmdVreg(g, elements); });
    auto* quo = app.add_subcommand("quotient", "M/fM and the total complex of F -f-> F");
    quo->add_option("--element", element, "the element f")->required();
    quo->callback([&] { code = cmdQuotient(g, element); });
    app.add_subcommand("classify", "aCM / vCM classification")->callback([&] { code = cmdClassify(g); });
    app.add_subcommand("irrelevant", "is the module irrelevant")->callback([&] { code = cmdIrrelevant(g); });
    auto* run = app.add_subcommand("run-example", "run a scripted example against its golden file");
    run->add_option("name", example, "example name")->check(CLI::IsMember(exampleNames()));
    run->add_flag("--update", update, "rewrite the golden file");
    run->add_flag("--all", all, "run every example");
    run->callback([&] {
        if (example.empty() && !all) throw CLI::ValidationError("run-example", "name or --all required");
        code = cmdRunExample(example, update, all);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kPrecondition;
    } catch (const ObstructionError& e) {
        std::cerr << "obstruction: " << e.what() << "\n";
        if (g.json) std::cout << canonical(json{{"obstruction", e.what()}, {"index", e.index}});
        return kNegative;
    } catch (const ContradictionError& e) {
        std::cerr << "internal contradiction: " << e.what() << "\n";
        return kContradiction;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kPrecondition;
    }
    return code;
}

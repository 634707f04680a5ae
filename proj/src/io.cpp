#include "vres/io.hpp"

#include <regex>

namespace vres {

json twistToJson(const Deg& d) {
    json a = json::array();
    for (int x : d) a.push_back(-x);
    return a;
}

Deg twistFromJson(const json& j) {
    Deg d;
    if (j.is_number_integer()) return {-j.get<int>()};
    if (!j.is_array()) throw InputError("twist must be an integer array");
    for (auto& x : j) {
        if (!x.is_number_integer()) throw InputError("twist entries must be integers");
        d.push_back(-x.get<int>());
    }
    return d;
}

json setupToJson(const Setup& s) { return json(s.blocks); }

Setup setupFromJson(const json& j) {
    if (!j.is_array() || j.empty()) throw InputError("\"blocks\" must be a nonempty integer array");
    std::vector<int> b;
    for (auto& x : j) {
        if (!x.is_number_integer() || x.get<int>() < 1) throw InputError("block sizes must be positive integers");
        b.push_back(x.get<int>());
    }
    Setup s(b);
    if (s.nverts() > 64) throw InputError("at most 64 vertices");
    return s;
}

namespace {

int parseVertex(const Setup& s, const json& v) {
    if (v.is_array() && v.size() == 2 && v[0].is_number_integer() && v[1].is_number_integer())
        return s.vertex(v[0].get<int>() - 1, v[1].get<int>());
    if (v.is_string()) {
        static const std::regex re("x_?(\\d+)_(\\d+)");
        std::smatch m;
        std::string t = v.get<std::string>();
        if (std::regex_match(t, m, re)) return s.vertex(std::stoi(m[1]) - 1, std::stoi(m[2]));
        if (s.r() == 1) {
            static const std::regex re1("x(\\d+)");
            if (std::regex_match(t, m, re1)) return s.vertex(0, std::stoi(m[1]));
        }
    }
    throw InputError("bad vertex " + v.dump());
}

json vertexJson(const Setup& s, int v) {
    int c = s.colorOf(v);
    return json::array({c + 1, v - s.offset(c)});
}

}  // namespace

json facesToJson(const Setup& s, const std::vector<Face>& faces) {
    json a = json::array();
    for (Face f : faces) {
        json face = json::array();
        for (int v : faceVertices(f)) face.push_back(vertexJson(s, v));
        a.push_back(face);
    }
    return a;
}

json complexToJson(const ColoredComplex& d) {
    return json{{"blocks", setupToJson(d.setup())}, {"facets", facesToJson(d.setup(), d.facets())}};
}

ColoredComplex complexFromJson(const json& j) {
    if (!j.is_object() || !j.contains("blocks") || !j.contains("facets"))
        throw InputError("complex needs \"blocks\" and \"facets\"");
    Setup s = setupFromJson(j["blocks"]);
    std::vector<Face> facets;
    if (!j["facets"].is_array()) throw InputError("\"facets\" must be an array");
    for (auto& f : j["facets"]) {
        if (!f.is_array()) throw InputError("facet must be an array of vertices");
        Face m = 0;
        for (auto& v : f) m |= Face(1) << parseVertex(s, v);
        facets.push_back(m);
    }
    return ColoredComplex(s, facets);
}

json matrixToJson(const Ring& R, const GradedMatrix& a) {
    json rows = json::array(), cols = json::array(), e = json::array();
    for (auto& d : a.rows) rows.push_back(twistToJson(d));
    for (auto& d : a.cols) cols.push_back(twistToJson(d));
    for (int u = 0; u < a.nrows(); ++u) {
        json row = json::array();
        for (int v = 0; v < a.ncols(); ++v) row.push_back(formatPoly(R, a.at(u, v)));
        e.push_back(row);
    }
    return json{{"rows", rows}, {"cols", cols}, {"entries", e}};
}

GradedMatrix matrixFromJson(const Ring& R, const json& j) {
    if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("entries"))
        throw InputError("matrix needs \"rows\", \"cols\" and \"entries\"");
    std::vector<Deg> rows, cols;
    for (auto& t : j["rows"]) rows.push_back(twistFromJson(t));
    for (auto& t : j["cols"]) cols.push_back(twistFromJson(t));
    for (auto* ts : {&rows, &cols})
        for (auto& d : *ts)
            if (static_cast<int>(d.size()) != R.r) throw InputError("twist has the wrong length");
    GradedMatrix a(rows, cols);
    const json& e = j["entries"];
    if (!e.is_array() || e.size() != rows.size()) throw InputError("entries do not match the row count");
    for (int u = 0; u < a.nrows(); ++u) {
        if (!e[u].is_array() || e[u].size() != cols.size()) throw InputError("entries do not match the column count");
        for (int v = 0; v < a.ncols(); ++v) {
            if (!e[u][v].is_string()) throw InputError("matrix entries must be strings");
            a.at(u, v) = parsePoly(R, e[u][v].get<std::string>());
        }
    }
    std::string why;
    if (!isHomogeneousMatrix(R, a, &why)) throw InputError(why);
    return a;
}

json chainToJson(const Ring& R, const ChainComplex& c) {
    json tw = json::array(), ds = json::array();
    for (auto& m : c.mods) {
        json t = json::array();
        for (auto& d : m) t.push_back(twistToJson(d));
        tw.push_back(t);
    }
    for (auto& d : c.d) ds.push_back(matrixToJson(R, d));
    return json{{"twists", tw}, {"differentials", ds}};
}

ChainComplex chainFromJson(const Ring& R, const json& j) {
    if (!j.is_object() || !j.contains("twists")) throw InputError("complex needs \"twists\"");
    std::vector<std::vector<Deg>> mods;
    for (auto& m : j["twists"]) {
        std::vector<Deg> t;
        for (auto& d : m) t.push_back(twistFromJson(d));
        mods.push_back(t);
    }
    if (mods.empty()) throw InputError("complex needs at least F_0");
    std::vector<GradedMatrix> ds;
    if (j.contains("differentials"))
        for (auto& d : j["differentials"]) ds.push_back(matrixFromJson(R, d));
    if (ds.size() + 1 != mods.size()) throw InputError("need one differential per consecutive pair of modules");
    for (std::size_t k = 0; k < ds.size(); ++k)
        if (ds[k].rows != mods[k] || ds[k].cols != mods[k + 1])
            throw InputError("twists of differential " + std::to_string(k + 1) + " do not match");
    ChainComplex c;
    c.mods = mods;
    c.d = ds;
    return c;
}

Presentation presentationFromJson(const Ring& R, const json& j) {
    if (j.contains("ideal")) {
        std::vector<Poly> gens;
        for (auto& g : j["ideal"]) {
            if (!g.is_string()) throw InputError("ideal generators must be strings");
            gens.push_back(parsePoly(R, g.get<std::string>()));
        }
        return Presentation::cyclic(R, gens);
    }
    // {"module": {...}}, or the bare form written by presentationToJson
    if (j.contains("module") || j.contains("relations")) {
        const json& m = j.contains("module") ? j["module"] : j;
        GradedMatrix rel = matrixFromJson(R, m.at("relations"));
        std::vector<Deg> gens;
        if (m.contains("gens"))
            for (auto& d : m["gens"]) gens.push_back(twistFromJson(d));
        else gens = rel.rows;
        if (gens != rel.rows) throw InputError("generator twists do not match the relation rows");
        return Presentation{gens, rel};
    }
    throw InputError("module input needs \"ideal\" or \"module\"");
}

json presentationToJson(const Ring& R, const Presentation& m) {
    json g = json::array();
    for (auto& d : m.gens) g.push_back(twistToJson(d));
    return json{{"gens", g}, {"relations", matrixToJson(R, m.rel)}};
}

json bettiToJson(const BettiTable& t) {
    json o = json::object();
    for (auto& [k, n] : t.entries) {
        std::string key = std::to_string(k.first);
        for (int x : k.second) key += "," + std::to_string(x);
        o[key] = n;
    }
    return o;
}

json homologyToJson(const HomologyProfile& h) {
    json a = json::array();
    for (auto d : h.dims) a.push_back(d);
    return a;
}

json ranksToJson(const ChainComplex& c) { return json(c.ranks()); }

json virtualCheckToJson(const VirtualCheck& v) {
    return json{{"complex_ok", v.complexOk},         {"higher_homology_irrelevant", v.higherIrrelevant},
                {"h0_match", v.h0Match},             {"h0_grade", v.h0Grade},
                {"method", v.method},                {"failing_degrees", v.failingDegrees},
                {"is_virtual_resolution", v.ok()}};
}

json coneToJson(const Ring& R, const ConeResult& c) {
    return json{{"t", c.t},
                {"ext_resolution_ranks", ranksToJson(c.extResolution)},
                {"cone_ranks", ranksToJson(c.cone)},
                {"minimized_ranks", ranksToJson(c.minimized)},
                {"minimized", chainToJson(R, c.minimized)}};
}

json classificationToJson(const Ring& R, const Classification& c) {
    json ext = json::array();
    for (auto& e : c.extProfile) ext.push_back(json{{"i", e.i}, {"zero", e.zero}, {"irrelevant", e.irrelevant}});
    json o{{"codim", c.codim},
           {"dim", c.dim},
           {"pdim", c.pdim},
           {"acm", c.acm},
           {"gcm_consistent", c.gcmConsistent},
           {"vdim_lower", c.vdimLower},
           {"vdim_upper", c.vdimUpper},
           {"class", c.cls},
           {"ext_profile", ext},
           {"obstruction_index", c.obstructionIndex},
           {"steps", c.steps},
           {"reason", c.reason},
           {"characteristic", R.F.p},
           {"certificate", chainToJson(R, c.best)},
           {"certificate_check", virtualCheckToJson(c.bestCheck)}};
    o["vcm"] = c.vcm ? json(*c.vcm) : json(nullptr);
    o["virtually_unmixed"] = c.virtuallyUnmixed ? json(*c.virtuallyUnmixed) : json(nullptr);
    return o;
}

json pipelineToJson(const Ring& R, const PipelineReport& r) {
    const Setup& s = r.input.setup();
    json comps = json::array();
    for (auto& c : r.components) {
        json ideal = json::array();
        for (auto& p : idealPolys(c.ideal)) ideal.push_back(formatPoly(R, p));
        comps.push_back(json{{"branch", c.branch},
                             {"delta", facesToJson(s, c.delta.facets())},
                             {"delta_prime", facesToJson(s, c.deltaPrime.facets())},
                             {"tau", facesToJson(s, c.tau ? std::vector<Face>{c.tau} : std::vector<Face>{})},
                             {"trace", c.trace},
                             {"reisner", c.reisner},
                             {"ideal", ideal},
                             {"resolution_ranks", ranksToJson(c.resolution)}});
    }
    return json{{"input", complexToJson(r.input)},
                {"branch", r.branch},
                {"dropped_facets", facesToJson(s, r.droppedFacets)},
                {"components", comps},
                {"reisner", r.reisner},
                {"codim", r.codim},
                {"pdim", r.pdim},
                {"characteristic", R.F.p},
                {"success", r.success},
                {"certificate", chainToJson(R, r.certificate)},
                {"certificate_check", virtualCheckToJson(r.check)}};
}

namespace {

bool hasObject(const json& j) {
    if (j.is_object()) return true;
    if (j.is_array())
        for (auto& x : j)
            if (hasObject(x)) return true;
    return false;
}

// Objects are expanded one key per line; arrays without objects stay on one line.
void write(const json& j, int indent, std::string& out) {
    const std::string pad(indent, ' '), inner(indent + 2, ' ');
    if (!hasObject(j)) {
        out += j.dump();
        return;
    }
    if (j.is_array()) {
        out += "[\n";
        for (std::size_t k = 0; k < j.size(); ++k) {
            out += inner;
            write(j[k], indent + 2, out);
            out += k + 1 < j.size() ? ",\n" : "\n";
        }
        out += pad + "]";
        return;
    }
    if (j.empty()) {
        out += "{}";
        return;
    }
    out += "{\n";
    std::size_t k = 0;
    for (auto it = j.begin(); it != j.end(); ++it, ++k) {
        out += inner + json(it.key()).dump() + ": ";
        write(it.value(), indent + 2, out);
        out += k + 1 < j.size() ? ",\n" : "\n";
    }
    out += pad + "}";
}

}  // namespace

std::string canonical(const json& j) {
    std::string out;
    write(j, 0, out);
    return out + "\n";
}

}  // namespace vres

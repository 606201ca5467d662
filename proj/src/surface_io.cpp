#include "scc/surface_io.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace scc {

namespace {

const char* kPalette[] = {"red", "blue", "darkgreen", "orange", "purple", "brown", "magenta", "cyan"};

std::string vid(const CurveSystem& s, int v) { return s.vertex_name(v); }
std::string eid(const CurveSystem& s, int e) { return s.edge_name(e); }
std::string rid(const CurveSystem& s, int r) { return s.region_name(r); }

std::string dart_str(const CurveSystem& s, int d) { return eid(s, dart_edge(d)) + (dart_is_head(d) ? ":h" : ":t"); }
std::string side_str(const CurveSystem& s, int x) { return eid(s, side_edge(x)) + (side_is_right(x) ? ":R" : ":L"); }

const json& field(const json& j, const char* key, const std::string& where) {
    if (!j.is_object() || !j.contains(key)) throw Error(where + ": missing field '" + key + "'");
    return j.at(key);
}

const json& array_field(const json& j, const char* key, const std::string& where) {
    const json& a = field(j, key, where);
    if (!a.is_array()) throw Error(where + ": field '" + key + "' must be an array");
    return a;
}

std::string str_field(const json& j, const char* key, const std::string& where) {
    const json& a = field(j, key, where);
    if (a.is_string()) return a.get<std::string>();
    if (a.is_number_integer()) return std::to_string(a.get<long>());
    throw Error(where + ": field '" + key + "' must be a string");
}

int int_field(const json& j, const char* key, const std::string& where) {
    const json& a = field(j, key, where);
    if (!a.is_number_integer()) throw Error(where + ": field '" + key + "' must be an integer");
    return a.get<int>();
}

using IdMap = std::map<std::string, int>;

int lookup(const IdMap& ids, const std::string& id, const std::string& what, const std::string& where) {
    auto it = ids.find(id);
    if (it == ids.end()) throw Error(where + ": unknown " + what + " '" + id + "'");
    return it->second;
}

// "<edge>:<tag>" with tag in {a, b} -> 2e or 2e+1
int parse_end(const json& j, const IdMap& edges, char lo, char hi, const std::string& where) {
    if (!j.is_string()) throw Error(where + ": expected a string like 'e0:" + lo + "'");
    std::string t = j.get<std::string>();
    auto colon = t.rfind(':');
    if (colon == std::string::npos || colon + 2 != t.size() || (t.back() != lo && t.back() != hi))
        throw Error(where + ": malformed '" + t + "', expected '<edge>:" + lo + "' or '<edge>:" + hi + "'");
    int e = lookup(edges, t.substr(0, colon), "edge", where);
    return 2 * e + (t.back() == hi ? 1 : 0);
}

}  // namespace

json system_to_json(const CurveSystem& s) {
    json j;
    j["vertices"] = json::array();
    for (int v = 0; v < s.num_vertices(); ++v) {
        json rot = json::array();
        for (int d : s.vertices[v].rot) rot.push_back(dart_str(s, d));
        j["vertices"].push_back({{"id", vid(s, v)}, {"rot", rot}});
    }
    j["edges"] = json::array();
    for (int e = 0; e < s.num_edges(); ++e)
        j["edges"].push_back({{"id", eid(s, e)},
                              {"curve", s.names[s.edges[e].curve]},
                              {"tail", vid(s, s.edges[e].tail)},
                              {"head", vid(s, s.edges[e].head)}});
    j["curves"] = json::array();
    for (int c = 0; c < s.num_curves(); ++c) {
        json es = json::array();
        for (int e : s.curves[c]) es.push_back(eid(s, e));
        j["curves"].push_back({{"name", s.names[c]}, {"edges", es}});
    }
    j["regions"] = json::array();
    for (int r = 0; r < s.num_regions(); ++r) {
        json ws = json::array();
        for (int w : s.regions[r].walks) {
            json wj = json::array();
            for (int x : s.walks[w]) wj.push_back(side_str(s, x));
            ws.push_back(wj);
        }
        j["regions"].push_back({{"id", rid(s, r)}, {"genus", s.regions[r].genus}, {"walks", ws}});
    }
    return j;
}

CurveSystem system_from_json(const json& j) {
    if (!j.is_object()) throw Error("system: expected an object");
    const json& jv = array_field(j, "vertices", "system");
    const json& je = array_field(j, "edges", "system");
    const json& jc = array_field(j, "curves", "system");
    const json& jr = array_field(j, "regions", "system");

    CurveSystem s;
    IdMap vids, eids, cids, rids;
    auto collect = [](const json& arr, const char* key, const char* what, IdMap& ids, std::vector<std::string>& out) {
        for (size_t i = 0; i < arr.size(); ++i) {
            std::string where = std::string(what) + "[" + std::to_string(i) + "]";
            std::string id = str_field(arr[i], key, where);
            if (!ids.emplace(id, static_cast<int>(i)).second) throw Error(where + ": duplicate id '" + id + "'");
            out.push_back(id);
        }
    };
    collect(jv, "id", "vertices", vids, s.vertex_ids);
    collect(je, "id", "edges", eids, s.edge_ids);
    collect(jc, "name", "curves", cids, s.names);
    collect(jr, "id", "regions", rids, s.region_ids);

    for (size_t i = 0; i < je.size(); ++i) {
        std::string where = "edge " + s.edge_ids[i];
        Edge ed;
        ed.curve = lookup(cids, str_field(je[i], "curve", where), "curve", where);
        ed.tail = lookup(vids, str_field(je[i], "tail", where), "vertex", where);
        ed.head = lookup(vids, str_field(je[i], "head", where), "vertex", where);
        s.edges.push_back(ed);
    }
    for (size_t i = 0; i < jv.size(); ++i) {
        std::string where = "vertex " + s.vertex_ids[i];
        Vertex v;
        for (const auto& d : array_field(jv[i], "rot", where)) v.rot.push_back(parse_end(d, eids, 't', 'h', where));
        s.vertices.push_back(std::move(v));
    }
    for (size_t i = 0; i < jc.size(); ++i) {
        std::string where = "curve " + s.names[i];
        std::vector<int> seq;
        for (const auto& e : array_field(jc[i], "edges", where)) {
            if (!e.is_string()) throw Error(where + ": edge ids must be strings");
            seq.push_back(lookup(eids, e.get<std::string>(), "edge", where));
        }
        s.curves.push_back(std::move(seq));
    }
    for (size_t i = 0; i < jr.size(); ++i) {
        std::string where = "region " + s.region_ids[i];
        Region reg;
        reg.genus = int_field(jr[i], "genus", where);
        for (const auto& w : array_field(jr[i], "walks", where)) {
            if (!w.is_array()) throw Error(where + ": each walk must be an array of sides");
            std::vector<int> walk;
            for (const auto& x : w) walk.push_back(parse_end(x, eids, 'L', 'R', where));
            reg.walks.push_back(static_cast<int>(s.walks.size()));
            s.walks.push_back(std::move(walk));
        }
        s.regions.push_back(std::move(reg));
    }
    // index() trusts its input; guard the ranges it dereferences
    const int D = 2 * s.num_edges();
    for (const auto& v : s.vertices)
        for (int d : v.rot)
            if (d >= D) throw Error("dart out of range");
    s.index();
    validate(s);
    return s;
}

json verdict_to_json(const Verdict& v) {
    json j{{"conclusion", conclusion_name(v.conclusion)},
           {"criterion", v.criterion},
           {"lemma", v.lemma},
           {"detail", v.detail}};
    if (v.modulus != 0) {
        j["residue"] = v.residue;
        j["modulus"] = v.modulus;
    }
    return j;
}

namespace {

Conclusion parse_conclusion(const std::string& name) {
    for (Conclusion c : {Conclusion::Inconclusive, Conclusion::ContainsCommutator, Conclusion::NormalGenerator,
                         Conclusion::PreimageOfPlusMinusI, Conclusion::CentralOrderTwo,
                         Conclusion::AbelianizationDetermined, Conclusion::TrivialGroup})
        if (conclusion_name(c) == name) return c;
    throw Error("verdict: unknown conclusion '" + name + "'");
}

Verdict verdict_from_json(const json& j) {
    Verdict v;
    v.conclusion = parse_conclusion(str_field(j, "conclusion", "verdict"));
    v.criterion = j.value("criterion", "");
    v.lemma = j.value("lemma", "");
    v.detail = j.value("detail", "");
    v.residue = j.value("residue", 0);
    v.modulus = j.value("modulus", 0);
    return v;
}

json curve_roles(const CurveSystem& s, const std::map<std::string, int>& m) {
    json j = json::object();
    for (const auto& [role, c] : m) j[role] = s.names.at(c);
    return j;
}

std::map<std::string, int> roles_from(const CurveSystem& s, const json& j, const std::string& where) {
    if (!j.is_object()) throw Error(where + ": expected an object of role -> curve name");
    std::map<std::string, int> out;
    for (auto it = j.begin(); it != j.end(); ++it) {
        if (!it.value().is_string()) throw Error(where + ": role '" + it.key() + "' must name a curve");
        int c = s.curve_index(it.value().get<std::string>());
        if (c < 0) throw Error(where + ": role '" + it.key() + "' names unknown curve '" + it.value().get<std::string>() + "'");
        out[it.key()] = c;
    }
    return out;
}

}  // namespace

json certificate_to_json(const Certificate& cert) {
    json c{{"criterion", cert.criterion},
           {"genus", cert.genus},
           {"roles", curve_roles(cert.sys, cert.roles)},
           {"witnesses", curve_roles(cert.sys, cert.witnesses)},
           {"system", system_to_json(cert.sys)}};
    if (cert.verdict.positive()) c["verdict"] = verdict_to_json(cert.verdict);
    return json{{"certificate", c}};
}

Certificate certificate_from_json(const json& j) {
    const json& c = j.is_object() && j.contains("certificate") ? j.at("certificate") : j;
    Certificate cert;
    cert.criterion = str_field(c, "criterion", "certificate");
    cert.genus = int_field(c, "genus", "certificate");
    cert.sys = system_from_json(field(c, "system", "certificate"));
    cert.roles = roles_from(cert.sys, field(c, "roles", "certificate"), "certificate.roles");
    cert.witnesses = c.contains("witnesses") ? roles_from(cert.sys, c.at("witnesses"), "certificate.witnesses")
                                             : std::map<std::string, int>{};
    if (c.contains("verdict")) cert.verdict = verdict_from_json(c.at("verdict"));
    return cert;
}

json catalog_to_json(const Catalog& cat) {
    json j;
    j["policy"] = {{"allow_reflection", cat.policy.allow_reflection}, {"ordered_labels", cat.policy.ordered_labels}};
    j["entries"] = json::array();
    for (const auto& e : cat.entries) {
        const CurveSystem& s = e.sys;
        json wit = json::array();
        for (const auto& rc : e.annotation.witness_curves) {
            json wl = json::array();
            for (int w : rc.walks_left) wl.push_back(side_str(s, s.walks[w].front()));
            wit.push_back({{"region", rid(s, rc.region)},
                           {"handle", rc.handle},
                           {"walks_left", wl},
                           {"genus_left", rc.genus_left}});
        }
        json handles = json::array();
        for (auto [a, b] : e.handles) handles.push_back({a, b});
        j["entries"].push_back({{"type", type_name(e.type)},
                                {"index", e.index},
                                {"template", e.template_number},
                                {"figure", e.figure},
                                {"handles", handles},
                                {"system", system_to_json(s)},
                                {"annotation",
                                 {{"criterion", e.annotation.criterion},
                                  {"detail", e.annotation.detail},
                                  {"witnesses", wit}}}});
    }
    return j;
}

Catalog catalog_from_json(const json& j) {
    Catalog cat;
    if (j.contains("policy")) {
        cat.policy.allow_reflection = j.at("policy").value("allow_reflection", true);
        cat.policy.ordered_labels = j.at("policy").value("ordered_labels", true);
    }
    const json& arr = array_field(j, "entries", "catalog");
    for (size_t i = 0; i < arr.size(); ++i) {
        std::string where = "catalog.entries[" + std::to_string(i) + "]";
        const json& je = arr[i];
        TripleCatalogEntry e;
        e.type = parse_type(str_field(je, "type", where));
        e.index = int_field(je, "index", where);
        e.template_number = je.value("template", 0);
        e.figure = je.value("figure", "");
        for (const auto& h : je.value("handles", json::array())) e.handles.push_back({h.at(0), h.at(1)});
        e.sys = system_from_json(field(je, "system", where));
        const CurveSystem& s = e.sys;
        IdMap rids, eids;
        for (int r = 0; r < s.num_regions(); ++r) rids[rid(s, r)] = r;
        for (int x = 0; x < s.num_edges(); ++x) eids[eid(s, x)] = x;
        if (je.contains("annotation")) {
            const json& ja = je.at("annotation");
            e.annotation.criterion = ja.value("criterion", "");
            e.annotation.detail = ja.value("detail", "");
            for (const auto& jw : ja.value("witnesses", json::array())) {
                RegionCurve rc;
                rc.region = lookup(rids, str_field(jw, "region", where), "region", where);
                rc.handle = jw.value("handle", false);
                rc.genus_left = jw.value("genus_left", 0);
                for (const auto& x : jw.value("walks_left", json::array()))
                    rc.walks_left.push_back(s.side_walk[parse_end(x, eids, 'L', 'R', where)]);
                e.annotation.witness_curves.push_back(std::move(rc));
            }
        }
        cat.entries.push_back(std::move(e));
    }
    return cat;
}

std::string to_dot(const CurveSystem& s) {
    std::ostringstream out;
    out << "graph curves {\n  node [shape=point];\n";
    for (int v = 0; v < s.num_vertices(); ++v)
        out << "  \"" << vid(s, v) << "\"" << (s.degree(v) == 2 ? " [shape=circle, width=0.08]" : "") << ";\n";
    for (int e = 0; e < s.num_edges(); ++e) {
        int c = s.edges[e].curve;
        out << "  \"" << vid(s, s.edges[e].tail) << "\" -- \"" << vid(s, s.edges[e].head) << "\" [color="
            << kPalette[c % 8] << ", label=\"" << s.names[c] << "\"];\n";
    }
    out << "}\n";
    return out.str();
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& ex) {
        throw Error(path + ": " + ex.what());
    }
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write '" + path + "'");
    out << text;
}

}  // namespace scc

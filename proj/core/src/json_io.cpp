#include "matchseq/json_io.hpp"

#include <fstream>
#include <stdexcept>

namespace matchseq {

json hypergraph_to_json(const Hypergraph& h) {
    json j;
    j["parts"] = h.parts();
    json edges = json::array();
    for (const Edge& e : h.edges()) {
        json verts = json::array();
        for (const Vertex& v : e.vertices) verts.push_back(json::array({v.part, v.index}));
        edges.push_back(json{{"id", e.id}, {"vertices", verts}});
    }
    j["edges"] = std::move(edges);
    return j;
}

Hypergraph hypergraph_from_json(const json& j) {
    if (!j.contains("parts") || !j.contains("edges")) throw std::invalid_argument("hypergraph json needs parts and edges");
    std::vector<int> parts = j.at("parts").get<std::vector<int>>();
    std::vector<Edge> edges;
    for (const json& ej : j.at("edges")) {
        Edge e;
        e.id = ej.at("id").get<EdgeId>();
        for (const json& vj : ej.at("vertices"))
            e.vertices.push_back(Vertex{vj.at(0).get<int>(), vj.at(1).get<int>()});
        edges.push_back(std::move(e));
    }
    return Hypergraph(std::move(parts), std::move(edges));
}

json ordering_to_json(const Ordering& l) { return json{{"labels", l.sequence()}}; }

Ordering ordering_from_json(const json& j) {
    if (!j.contains("labels")) throw std::invalid_argument("ordering json needs labels");
    return Ordering(j.at("labels").get<std::vector<EdgeId>>());
}

json certified_to_json(const CertifiedOrdering& c) {
    json j = ordering_to_json(c.ordering);
    j["s"] = c.s;
    j["r"] = c.r;
    j["cyclic"] = c.cyclic;
    return j;
}

CertifiedOrdering certified_from_json(const json& j) {
    CertifiedOrdering c;
    c.ordering = ordering_from_json(j);
    c.s = j.at("s").get<long long>();
    c.r = j.at("r").get<long long>();
    c.cyclic = j.at("cyclic").get<bool>();
    return c;
}

json value_result_to_json(const ValueResult& v, const Ordering* witness) {
    json j;
    if (v.known)
        j["ms"] = v.ms;
    else
        j["ms"] = "unknown";
    j["witness"] = witness ? ordering_to_json(*witness) : json(nullptr);
    j["nodes"] = v.nodes;
    return j;
}

json family_to_json(const MatchingFamily& fam) {
    json cells = json::array();
    for (const OrderedMatching& m : fam.cells) cells.push_back(m.edges);
    return json{{"dims", json::array({fam.dim_i, fam.dim_j})}, {"matchings", std::move(cells)}};
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    json j;
    in >> j;
    return j;
}

void save_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << j.dump(2) << "\n";
}

}  // namespace matchseq

#include "tourlab/json_io.hpp"

#include <fstream>

namespace tourlab {

using nlohmann::json;

json instance_to_json(const Instance& inst) {
    json points = json::array();
    for (const Point& p : inst.points) {
        if (rat_is_integer(p.x) && rat_is_integer(p.y)) {
            points.push_back({rat_num_i64(p.x), rat_num_i64(p.y)});
        } else {
            points.push_back({rat_num_i64(p.x), rat_den_i64(p.x), rat_num_i64(p.y), rat_den_i64(p.y)});
        }
    }
    return json{{"id", inst.id}, {"points", points}};
}

Instance instance_from_json(const json& j) {
    Instance inst;
    inst.id = j.value("id", "unnamed");
    for (const json& p : j.at("points")) {
        if (!p.is_array() || (p.size() != 2 && p.size() != 4)) {
            throw std::invalid_argument("point must be [x, y] or [x_num, x_den, y_num, y_den]");
        }
        if (p.size() == 2) {
            inst.points.emplace_back(p[0].get<long long>(), p[1].get<long long>());
        } else {
            if (p[1].get<long long>() == 0 || p[3].get<long long>() == 0) {
                throw std::invalid_argument("point denominator is zero");
            }
            inst.points.emplace_back(Point(rat(p[0].get<long long>(), p[1].get<long long>()),
                                           rat(p[2].get<long long>(), p[3].get<long long>())));
        }
    }
    validate_instance(inst);
    return inst;
}

json tour_to_json(const Tour& t) { return json(t.order); }

Tour tour_from_json(const json& j) {
    Tour t;
    const json& arr = j.is_array() ? j : j.at("order");
    for (const json& v : arr) t.order.push_back(v.get<int>());
    return t;
}

json subdivided_to_json(const SubdividedPair& sp) {
    json j = instance_to_json(sp.v_prime);
    j["t"] = tour_to_json(sp.t_prime);
    j["s"] = tour_to_json(sp.s_prime);
    j["original_n"] = sp.original_n;
    j["crossings"] = sp.crossing_count;
    return j;
}

namespace {

json edges_to_json(const std::vector<DirectedEdge>& edges) {
    json arr = json::array();
    for (const DirectedEdge& e : edges) arr.push_back({e.tail, e.head});
    return arr;
}

}  // namespace

json partition_to_json(const EdgePartition& part) {
    json j;
    j["interior"] = edges_to_json(part.interior);
    j["exterior"] = edges_to_json(part.exterior);
    j["on_tour"] = edges_to_json(part.on_tour);
    j["interior_forward"] = edges_to_json(part.interior_forward);
    j["interior_backward"] = edges_to_json(part.interior_backward);
    j["exterior_forward"] = edges_to_json(part.exterior_forward);
    j["exterior_backward"] = edges_to_json(part.exterior_backward);
    if (part.interior_anchor) {
        j["interior_anchor"] = {part.interior_anchor->tail, part.interior_anchor->head};
        j["interior_path"] = part.interior_path;
    }
    if (part.exterior_anchor) {
        j["exterior_anchor"] = {part.exterior_anchor->tail, part.exterior_anchor->head};
        j["exterior_path"] = part.exterior_path;
    }
    return j;
}

json arborescence_to_json(const Arborescence& a) {
    json edges = json::array();
    for (const auto& e : a.edges) {
        edges.push_back({{"from", e.from}, {"to", e.to}, {"c", e.c}, {"w", e.w}});
    }
    return json{{"root", a.root}, {"edges", edges}};
}

Arborescence arborescence_from_json(const json& j) {
    std::vector<Arborescence::Edge> edges;
    int max_id = j.at("root").get<int>();
    for (const json& e : j.at("edges")) {
        Arborescence::Edge edge;
        edge.from = e.at("from").get<int>();
        edge.to = e.at("to").get<int>();
        edge.c = e.at("c").get<double>();
        edge.w = e.at("w").get<double>();
        max_id = std::max({max_id, edge.from, edge.to});
        edges.push_back(edge);
    }
    return make_arborescence(j.at("root").get<int>(), max_id + 1, std::move(edges));
}

json load_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    json j;
    in >> j;
    return j;
}

void write_text_file(const std::filesystem::path& path, const std::string& content) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << content;
}

}  // namespace tourlab

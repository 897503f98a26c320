#include "plumbcalc/graph_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace plumbcalc {

using nlohmann::json;

json to_json(const PlumbingGraph& g) {
  json vertices = json::array();
  for (const auto& v : g.vertices()) vertices.push_back({{"id", v.id}, {"weight", v.weight}});
  json edges = json::array();
  for (const auto& [a, b] : g.edges()) edges.push_back(json::array({g.id(a), g.id(b)}));
  json arrows = json::array();
  for (const auto& ar : g.arrows()) arrows.push_back({{"at", g.id(ar.at)}, {"label", ar.label}});
  return json{{"format", kGraphFormat}, {"vertices", vertices}, {"edges", edges}, {"arrows", arrows}};
}

namespace {

[[noreturn]] void bad(const std::string& msg) { throw std::invalid_argument("graph json: " + msg); }

const json& member(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) bad(std::string("missing key '") + key + "'");
  return *it;
}

}  // namespace

PlumbingGraph graph_from_json(const json& j) {
  if (!j.is_object()) bad("top level is not an object");
  const json& fmt = member(j, "format");
  if (!fmt.is_string() || fmt.get<std::string>() != kGraphFormat)
    bad(std::string("format must be '") + kGraphFormat + "'");
  PlumbingGraph g;
  const json& vertices = member(j, "vertices");
  if (!vertices.is_array()) bad("vertices is not an array");
  for (const auto& v : vertices) {
    if (!v.is_object()) bad("vertex is not an object");
    const json& id = member(v, "id");
    const json& w = member(v, "weight");
    if (!id.is_string()) bad("vertex id is not a string");
    if (!w.is_number_integer()) bad("weight of '" + id.get<std::string>() + "' is not an integer");
    if (v.contains("genus") && v["genus"] != 0) bad("genus must be 0");
    if (g.find(id.get<std::string>())) bad("duplicate vertex id '" + id.get<std::string>() + "'");
    g.add_vertex(id.get<std::string>(), w.get<std::int64_t>());
  }
  if (j.contains("edges")) {
    const json& edges = j["edges"];
    if (!edges.is_array()) bad("edges is not an array");
    for (const auto& e : edges) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
        bad("edge must be a pair of ids");
      auto a = g.find(e[0].get<std::string>());
      auto b = g.find(e[1].get<std::string>());
      if (!a || !b) bad("edge references an unknown vertex");
      if (*a == *b) bad("self-loop at '" + e[0].get<std::string>() + "'");
      g.add_edge(*a, *b);
    }
  }
  if (j.contains("arrows")) {
    const json& arrows = j["arrows"];
    if (!arrows.is_array()) bad("arrows is not an array");
    for (const auto& ar : arrows) {
      if (!ar.is_object()) bad("arrow is not an object");
      const json& at = member(ar, "at");
      const json& label = member(ar, "label");
      if (!at.is_string() || !label.is_string()) bad("arrow fields must be strings");
      auto v = g.find(at.get<std::string>());
      if (!v) bad("arrow at unknown vertex '" + at.get<std::string>() + "'");
      g.add_arrow(*v, label.get<std::string>());
    }
  }
  return g;
}

std::string dump_json(const json& j) { return j.dump(2) + "\n"; }

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string to_dot(const PlumbingGraph& g) {
  std::ostringstream os;
  os << "graph plumbing {\n";
  for (const auto& v : g.vertices())
    os << "  " << quoted(v.id) << " [label=" << quoted(v.id + "\\n" + std::to_string(v.weight))
       << "];\n";
  for (const auto& [a, b] : g.edges()) os << "  " << quoted(g.id(a)) << " -- " << quoted(g.id(b)) << ";\n";
  for (std::size_t k = 0; k < g.arrows().size(); ++k) {
    const auto& ar = g.arrows()[k];
    const std::string tip = "arrow" + std::to_string(k);
    os << "  " << quoted(tip) << " [shape=point];\n";
    os << "  " << quoted(g.id(ar.at)) << " -- " << quoted(tip) << " [dir=forward, label="
       << quoted(ar.label) << "];\n";
  }
  os << "}\n";
  return os.str();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write '" + path + "'");
  out << text;
}

PlumbingGraph read_graph_file(const std::string& path) {
  json j;
  try {
    j = json::parse(read_text_file(path));
  } catch (const json::parse_error& e) {
    throw std::invalid_argument("malformed json in '" + path + "': " + e.what());
  }
  return graph_from_json(j);
}

}  // namespace plumbcalc

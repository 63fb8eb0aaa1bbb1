#include "cutcx/json_io.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace cutcx {

using nlohmann::json;

namespace {

json parse_or_throw(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw std::invalid_argument("malformed JSON: " + text);
  return j;
}

SpaceSpec space_from_json(const json& j) {
  if (j.contains("space")) return space_from_json(j.at("space"));
  std::string type = j.at("type").get<std::string>();
  if (type == "finite") return SpaceSpec::finite(j.at("n").get<int>());
  if (type == "cantor") return SpaceSpec::cantor();
  if (type == "convergent") return SpaceSpec::convergent();
  if (type == "union")
    return SpaceSpec::union_of(space_from_json(j.at("left")), space_from_json(j.at("right")));
  if (type == "subspace") {
    SpaceSpec base = space_from_json(j.at("base"));
    std::vector<std::string> raw = j.at("window").get<std::vector<std::string>>();
    return SpaceSpec::subspace(base, canonicalize(base, raw));
  }
  throw std::invalid_argument("unknown space type: " + type);
}

json space_to_json_obj(const SpaceSpec& spec) {
  json j;
  switch (spec.kind()) {
    case SpaceSpec::Kind::Finite:
      j["type"] = "finite";
      j["n"] = spec.finite_size();
      break;
    case SpaceSpec::Kind::Cantor:
      j["type"] = "cantor";
      break;
    case SpaceSpec::Kind::Convergent:
      j["type"] = "convergent";
      break;
    case SpaceSpec::Kind::Union:
      j["type"] = "union";
      j["left"] = space_to_json_obj(spec.left());
      j["right"] = space_to_json_obj(spec.right());
      break;
    case SpaceSpec::Kind::Subspace:
      j["type"] = "subspace";
      j["base"] = space_to_json_obj(spec.base());
      j["window"] = spec.window().antichain();
      break;
  }
  return j;
}

}  // namespace

SpaceSpec parse_space(const std::string& text) { return space_from_json(parse_or_throw(text)); }

std::string space_to_json(const SpaceSpec& spec) { return space_to_json_obj(spec).dump(); }

ClopenSet parse_clopen(const SpaceSpec& spec, const std::string& text) {
  json j = parse_or_throw(text);
  return canonicalize(spec, j.get<std::vector<std::string>>());
}

std::string clopen_to_json(const ClopenSet& u) { return json(u.antichain()).dump(); }

std::vector<ClopenSet> parse_sides(const SpaceSpec& spec, const std::string& text) {
  json j = parse_or_throw(text);
  std::vector<ClopenSet> out;
  for (const auto& arr : j) out.push_back(canonicalize(spec, arr.get<std::vector<std::string>>()));
  return out;
}

std::vector<int> parse_int_array(const std::string& text) {
  return parse_or_throw(text).get<std::vector<int>>();
}

StoneSpaceSystem parse_system(const std::string& text) {
  json j = parse_or_throw(text);
  int n = j.at("n").get<int>();
  std::vector<std::uint64_t> nested;
  for (const auto& level : j.at("nested")) {
    std::uint64_t mask = 0;
    for (int p : level.get<std::vector<int>>()) {
      if (p < 0 || p >= n) throw std::invalid_argument("system point out of range");
      mask |= std::uint64_t(1) << p;
    }
    nested.push_back(mask);
  }
  return make_system(n, std::move(nested));
}

std::string graph_to_json(const CutGraph& g) {
  json j;
  j["vertices"] = json::array();
  for (int v = 0; v < g.size(); ++v) j["vertices"].push_back(g.vertex(v).label());
  json edges = json::array();
  for (int i = 0; i < g.size(); ++i)
    for (int k = i + 1; k < g.size(); ++k)
      if (g.edge(i, k)) edges.push_back(json::array({i, k}));
  j["edges"] = std::move(edges);
  return j.dump();
}

std::string graph_to_dot(const CutGraph& g) {
  std::ostringstream out;
  out << "graph cuts {\n";
  for (int v = 0; v < g.size(); ++v)
    out << "  " << v << " [label=\"" << g.vertex(v).label() << "\"];\n";
  for (int i = 0; i < g.size(); ++i)
    for (int k = i + 1; k < g.size(); ++k)
      if (g.edge(i, k)) out << "  " << i << " -- " << k << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace cutcx

//
// Copyright 2026 The lipfilter Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#include "lipfilter/function_io.hpp"

#include <fstream>
#include <sstream>
#include <unordered_map>
#include <utility>
#include <vector>

#include "json.hpp"
#include "lipfilter/errors.hpp"

namespace lipfilter {
namespace {

using nlohmann::json;

// Dense tables are used up to this many vertices.
constexpr std::uint64_t kDenseLimit = std::uint64_t{1} << 22;

json ParseJson(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(e.byte, "invalid JSON");
  }
}

[[noreturn]] void Malformed(const std::string& what) {
  throw Error(ErrorCode::kParseError, "malformed input: " + what);
}

std::int64_t GetInt(const json& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end() || !it->is_number_integer()) {
    Malformed(std::string("\"") + key + "\" must be an integer");
  }
  return it->get<std::int64_t>();
}

Value ValueFromJson(const json& v) {
  if (v.is_string()) return ParseValue(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
  Malformed("values must be strings or integers");
}

Rational RationalFromJson(const json& v, const char* what) {
  Value parsed = ValueFromJson(v);
  if (!parsed) Malformed(std::string(what) + " cannot be ?");
  return *parsed;
}

std::shared_ptr<const Graph> GraphFromObject(const json& obj) {
  if (!obj.is_object()) Malformed("domain must be an object");
  std::string kind = "explicit";
  if (auto it = obj.find("kind"); it != obj.end()) {
    if (!it->is_string()) Malformed("\"kind\" must be a string");
    kind = it->get<std::string>();
  }
  if (kind == "hypergrid") {
    return std::make_shared<Graph>(Graph::Hypergrid(
        static_cast<int>(GetInt(obj, "n")), static_cast<int>(GetInt(obj, "d"))));
  }
  if (kind == "hypercube") {
    return std::make_shared<Graph>(
        Graph::Hypercube(static_cast<int>(GetInt(obj, "d"))));
  }
  if (kind != "explicit") Malformed("unknown domain kind \"" + kind + "\"");
  const std::int64_t n = GetInt(obj, "vertices");
  if (n <= 0) Malformed("\"vertices\" must be positive");
  std::vector<std::pair<std::uint64_t, std::uint64_t>> edges;
  auto it = obj.find("edges");
  if (it == obj.end() || !it->is_array()) Malformed("\"edges\" must be a list");
  for (const json& e : *it) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned() ||
        !e[1].is_number_unsigned()) {
      Malformed("each edge must be a pair of vertex ids");
    }
    edges.emplace_back(e[0].get<std::uint64_t>(), e[1].get<std::uint64_t>());
  }
  return std::make_shared<Graph>(
      Graph::Explicit(static_cast<std::uint64_t>(n), edges));
}

}  // namespace

std::shared_ptr<const Graph> GraphFromJson(std::string_view text) {
  return GraphFromObject(ParseJson(text));
}

std::string GraphToJson(const Graph& g) {
  json obj;
  switch (g.kind()) {
    case GraphKind::kHypergrid:
      obj = {{"kind", "hypergrid"}, {"n", g.side()}, {"d", g.dimension()}};
      break;
    case GraphKind::kHypercube:
      obj = {{"kind", "hypercube"}, {"d", g.dimension()}};
      break;
    case GraphKind::kExplicit: {
      json edges = json::array();
      for (std::uint64_t u = 0; u < g.vertex_count(); ++u) {
        for (Vertex v : g.Neighbors(Vertex{u})) {
          if (v.id > u) edges.push_back({u, v.id});
        }
      }
      obj = {{"kind", "explicit"},
             {"vertices", g.vertex_count()},
             {"edges", std::move(edges)}};
      break;
    }
  }
  return obj.dump();
}

OraclePtr FunctionFromJson(std::string_view text) {
  const json doc = ParseJson(text);
  if (!doc.is_object()) Malformed("function table must be an object");
  auto domain = doc.find("domain");
  if (domain == doc.end()) Malformed("missing \"domain\"");
  std::shared_ptr<const Graph> graph = GraphFromObject(*domain);

  auto r_it = doc.find("r");
  if (r_it == doc.end()) Malformed("missing \"r\"");
  const Rational r = RationalFromJson(*r_it, "\"r\"");
  if (r.sign() < 0) Malformed("\"r\" must be nonnegative");
  Rational lo;
  if (auto it = doc.find("lo"); it != doc.end()) {
    lo = RationalFromJson(*it, "\"lo\"");
  }
  const Rational hi = lo + r;

  std::optional<Value> default_value;
  if (auto it = doc.find("default"); it != doc.end()) {
    default_value = ValueFromJson(*it);
  }
  std::unordered_map<std::uint64_t, Value> listed;
  if (auto it = doc.find("values"); it != doc.end()) {
    if (!it->is_object()) Malformed("\"values\" must be an object");
    for (const auto& [name, v] : it->items()) {
      const Vertex x = graph->ParseCanonicalName(name);
      listed[x.id] = ValueFromJson(v);
    }
  }

  const bool fits = graph->vertex_count_fits();
  if (!default_value && (!fits || listed.size() != graph->vertex_count())) {
    Malformed("\"default\" is required unless every vertex is listed");
  }
  if (fits && graph->vertex_count() <= kDenseLimit) {
    ValueTable table(graph->vertex_count(),
                     default_value ? *default_value : Value());
    for (auto& [id, v] : listed) table[id] = std::move(v);
    return std::make_shared<DenseTableOracle>(std::move(graph), lo, hi,
                                              std::move(table));
  }
  return std::make_shared<SparseTableOracle>(std::move(graph), lo, hi,
                                             std::move(listed), *default_value);
}

std::string FunctionToJson(const Graph& g, const Rational& lo,
                           const Rational& hi, const ValueTable& values) {
  json doc;
  doc["domain"] = json::parse(GraphToJson(g));
  doc["r"] = (hi - lo).ToString();
  if (lo.sign() != 0) doc["lo"] = lo.ToString();
  json vals = json::object();
  for (std::uint64_t i = 0; i < values.size(); ++i) {
    vals[g.CanonicalName(Vertex{i})] = ValueToString(values[i]);
  }
  doc["values"] = std::move(vals);
  return doc.dump();
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace lipfilter

#include "residuum/curve_document.hpp"

#include <json.hpp>

#include "residuum/errors.hpp"
#include "residuum/expr_parse.hpp"

namespace residuum {

namespace {

using nlohmann::json;

Rational parse_coord(const json& v, const std::string& where) {
  if (v.is_number_integer()) return Rational(v.get<long long>());
  if (v.is_string()) {
    std::string s = v.get<std::string>();
    if (s == "inf" || s == "Inf" || s == "infinity") {
      throw ParseError(where + ": node coordinates must be finite rationals");
    }
    return Rational::parse(s);
  }
  throw ParseError(where + ": expected a rational written as a string \"p/q\"");
}

const json& require(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(where + ": missing required key '" + key + "'");
  return *it;
}

} // namespace

CurveDocument CurveDocument::parse(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("top level must be a JSON object");

  CurveDocument out;
  out.raw_text = json_text;
  out.format_version = doc.value("format_version", "1");
  if (out.format_version != "1") {
    throw ParseError("unsupported format_version '" + out.format_version + "'");
  }

  DualGraph::Builder builder;
  // nodes[component][edge] = coordinate(s)
  std::map<std::string, json> node_overrides;
  for (const json& c : require(doc, "components", "document")) {
    std::string id = require(c, "id", "component").get<std::string>();
    int genus = c.value("genus", 0);
    builder.add_component(id, genus);
    if (c.contains("nodes")) {
      if (!c["nodes"].is_object()) throw ParseError("component '" + id + "': nodes must be an object");
      node_overrides[id] = c["nodes"];
    }
  }

  for (const json& e : require(doc, "edges", "document")) {
    std::string id = require(e, "id", "edge").get<std::string>();
    const json& ends = require(e, "ends", "edge '" + id + "'");
    if (!ends.is_array() || ends.size() != 2) {
      throw ParseError("edge '" + id + "': ends must list exactly two components");
    }
    std::string plus = ends[0].get<std::string>();
    std::string minus = ends[1].get<std::string>();
    long long length = e.value("length", 1);

    auto coord_for = [&](const std::string& comp, bool plus_end,
                         bool is_loop) -> std::optional<Rational> {
      auto it = node_overrides.find(comp);
      if (it == node_overrides.end()) return std::nullopt;
      auto jt = it->second.find(id);
      if (jt == it->second.end()) return std::nullopt;
      const json& v = *jt;
      std::string where = "component '" + comp + "', edge '" + id + "'";
      if (is_loop) {
        if (!v.is_array() || v.size() != 2) {
          throw ParseError(where + ": a loop edge needs a two-element coordinate array");
        }
        return parse_coord(v[plus_end ? 0 : 1], where);
      }
      return parse_coord(v, where);
    };

    bool is_loop = plus == minus;
    auto cp = coord_for(plus, true, is_loop);
    auto cm = coord_for(minus, false, is_loop);
    builder.add_edge(id, plus, minus, cp, cm, length);
  }

  out.graph = builder.build();

  if (doc.contains("singularities")) {
    for (const json& s : doc["singularities"]) {
      SingularitySpec spec;
      spec.id = require(s, "id", "singularity").get<std::string>();
      spec.type = require(s, "type", "singularity '" + spec.id + "'").get<std::string>();
      if (spec.type == "custom") {
        const json& branches = require(s, "branches", "singularity '" + spec.id + "'");
        for (const json& b : branches) {
          spec.branches.emplace_back(require(b, "x", "branch").get<std::string>(),
                                     require(b, "y", "branch").get<std::string>());
        }
        if (spec.branches.empty()) {
          throw ParseError("singularity '" + spec.id + "': custom type needs branches");
        }
      } else if (spec.type != "node" && spec.type != "cusp" && spec.type != "tacnode") {
        throw ParseError("singularity '" + spec.id + "': unknown type '" + spec.type +
                         "' (node|cusp|tacnode|custom)");
      }
      out.singularities.push_back(std::move(spec));
    }
  }

  if (doc.contains("differentials")) {
    for (const json& d : doc["differentials"]) {
      DifferentialSpec spec;
      spec.k = d.value("k", 1);
      if (spec.k < 1) throw ParseError("differential: k must be >= 1");
      bool has_pieces = d.contains("pieces");
      bool has_params = d.contains("edge_params");
      if (has_pieces == has_params) {
        throw ParseError("differential: exactly one of 'pieces' or 'edge_params' required");
      }
      if (has_pieces) {
        for (const auto& [comp, text] : d["pieces"].items()) {
          out.graph.component(comp);
          spec.pieces[comp] = text.get<std::string>();
        }
      } else {
        for (const auto& [eid, text] : d["edge_params"].items()) {
          out.graph.edge(eid);
          spec.edge_params[eid] = text.get<std::string>();
        }
      }
      out.differentials.push_back(std::move(spec));
    }
  }
  return out;
}

const CurveDocument::DifferentialSpec& CurveDocument::select_differential(
    std::optional<int> k) const {
  if (differentials.empty()) {
    throw MissingDifferential("the document declares no differentials");
  }
  if (!k.has_value()) {
    if (differentials.size() == 1) return differentials.front();
    throw MissingDifferential("several differentials declared; select one with --k");
  }
  for (const auto& d : differentials) {
    if (d.k == *k) return d;
  }
  throw MissingDifferential("no differential with k = " + std::to_string(*k) +
                            " in the document");
}

const CurveDocument::SingularitySpec* CurveDocument::find_singularity(
    const std::string& id) const {
  for (const auto& s : singularities) {
    if (s.id == id) return &s;
  }
  return nullptr;
}

BranchSystem resolve_branch_system(const CurveDocument* doc, const std::string& name,
                                   long long truncation) {
  if (name == "node") return BranchSystem::node(truncation);
  if (name == "cusp") return BranchSystem::cusp(truncation);
  if (name == "tacnode") return BranchSystem::tacnode(truncation);
  if (doc) {
    const auto* spec = doc->find_singularity(name);
    if (spec) {
      if (spec->type != "custom") return resolve_branch_system(nullptr, spec->type, truncation);
      std::vector<BranchSystem::Branch> branches;
      for (const auto& [xt, yt] : spec->branches) {
        LaurentSeries x = series_expand(parse_rational_function(xt, "t"), Rational(0), truncation);
        LaurentSeries y = series_expand(parse_rational_function(yt, "t"), Rational(0), truncation);
        branches.push_back({x, y});
      }
      return BranchSystem(std::move(branches), truncation);
    }
  }
  throw InvalidInput("unknown singularity '" + name +
                     "' (catalog: node, cusp, tacnode; or an id from the document)");
}

std::vector<LaurentSeries> parse_branch_differential(const std::string& text, size_t branches,
                                                     long long truncation) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : text) {
    if (c == ';') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  if (parts.size() != branches) {
    throw InvalidInput("differential lists " + std::to_string(parts.size()) +
                       " branch expressions but the singularity has " +
                       std::to_string(branches) + " branches");
  }
  std::vector<LaurentSeries> out;
  for (const auto& p : parts) {
    out.push_back(series_expand(parse_rational_function(p, "t"), Rational(0), truncation));
  }
  return out;
}

} // namespace residuum

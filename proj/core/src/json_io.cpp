#include "aniso/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace aniso {

double round_sig12(double x) {
  if (!std::isfinite(x)) throw Error("non-finite value in JSON output");
  if (x == 0.0) return 0.0;  // drop the sign of negative zero
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return std::strtod(buf, nullptr);
}

namespace {

Json num(double x) { return Json(round_sig12(x)); }

Json vec_to_json(const VecD& v) {
  Json a = Json::array();
  for (double c : v) a.push_back(num(c));
  return a;
}

Json vec2_to_json(Vec2 v) { return Json::array({num(v.x), num(v.y)}); }

[[noreturn]] void fail_field(const std::string& field,
                             const std::string& what) {
  throw ParseError("field '" + field + "': " + what);
}

double get_number(const Json& j, const std::string& field) {
  if (!j.is_number()) fail_field(field, "expected a number");
  return j.get<double>();
}

std::vector<double> get_number_array(const Json& j, const std::string& field) {
  if (!j.is_array()) fail_field(field, "expected an array of numbers");
  std::vector<double> out;
  for (const auto& e : j) out.push_back(get_number(e, field));
  return out;
}

const Json& get_member(const Json& j, const std::string& field) {
  if (!j.is_object()) fail_field(field, "expected an enclosing object");
  auto it = j.find(field);
  if (it == j.end()) fail_field(field, "missing");
  return *it;
}

}  // namespace

Json body_to_json(const ConvexBody& K) {
  Json j = Json::object();
  if (K.kind() == BodyKind::Ellipse) {
    j["kind"] = "ellipse";
    j["a"] = num(K.semi_axis_a());
    j["b"] = num(K.semi_axis_b());
    return j;
  }
  j["kind"] = "polytope";
  Json verts = Json::array();
  if (K.dim() == 2)
    for (Vec2 v : K.vertices()) verts.push_back(vec2_to_json(v));
  else
    for (const VecD& v : K.vertices_d()) verts.push_back(vec_to_json(v));
  j["vertices"] = std::move(verts);
  if (!K.origin_inside()) j["require_origin_inside"] = false;
  return j;
}

ConvexBody body_from_json(const Json& j) {
  const auto& kind = get_member(j, "kind");
  if (!kind.is_string()) fail_field("kind", "expected a string");
  const std::string k = kind.get<std::string>();
  if (k == "ellipse") {
    return ConvexBody::ellipse(get_number(get_member(j, "a"), "a"),
                               get_number(get_member(j, "b"), "b"));
  }
  if (k != "polytope") fail_field("kind", "expected 'polytope' or 'ellipse'");
  const auto& verts = get_member(j, "vertices");
  if (!verts.is_array() || verts.empty())
    fail_field("vertices", "expected a nonempty array");
  PolytopeOptions opts;
  if (j.contains("require_origin_inside")) {
    const auto& f = j.at("require_origin_inside");
    if (!f.is_boolean()) fail_field("require_origin_inside", "expected bool");
    opts.require_origin_inside = f.get<bool>();
  }
  std::vector<VecD> rows;
  for (const auto& e : verts) rows.push_back(get_number_array(e, "vertices"));
  const size_t d = rows[0].size();
  for (const auto& r : rows)
    if (r.size() != d) fail_field("vertices", "inconsistent dimensions");
  if (d < 2) fail_field("vertices", "points need at least 2 coordinates");
  try {
    if (d == 2) {
      std::vector<Vec2> pts;
      for (const auto& r : rows) pts.push_back({r[0], r[1]});
      return ConvexBody::polytope(std::move(pts), opts);
    }
    return ConvexBody::polytope_d(std::move(rows), opts);
  } catch (const Error& e) {
    throw ParseError(std::string("field 'vertices': ") + e.what());
  }
}

Json profile_to_json(const SbvProfile& f) {
  Json j = Json::object();
  Json n = Json::array(), l = Json::array(), r = Json::array(),
       s = Json::array();
  for (double x : f.nodes()) n.push_back(num(x));
  for (double x : f.values_left()) l.push_back(num(x));
  for (double x : f.values_right()) r.push_back(num(x));
  for (double x : f.slopes()) s.push_back(num(x));
  j["nodes"] = std::move(n);
  j["values_left"] = std::move(l);
  j["values_right"] = std::move(r);
  j["slopes"] = std::move(s);
  return j;
}

SbvProfile profile_from_json(const Json& j) {
  auto nodes = get_number_array(get_member(j, "nodes"), "nodes");
  auto vl = get_number_array(get_member(j, "values_left"), "values_left");
  auto vr = get_number_array(get_member(j, "values_right"), "values_right");
  if (vl.size() != nodes.size() || vr.size() != nodes.size())
    fail_field("values_left", "length differs from 'nodes'");
  SbvProfile f;
  try {
    f = SbvProfile::from_limits(nodes, vl, vr);
  } catch (const Error& e) {
    throw ParseError(std::string("field 'nodes': ") + e.what());
  }
  if (j.contains("slopes")) {
    auto given = get_number_array(j.at("slopes"), "slopes");
    if (nodes.size() >= 1 && given.size() + 1 != nodes.size())
      fail_field("slopes", "length must be nodes minus one");
    // Validate against the slopes implied by the raw node/value arrays
    // (rounding to 12 significant digits perturbs them slightly).
    for (size_t i = 0; i + 1 < nodes.size(); ++i) {
      const double dx = nodes[i + 1] - nodes[i];
      if (dx <= kMergeTol) continue;
      const double derived = (vl[i + 1] - vr[i]) / dx;
      if (std::fabs(given[i] - derived) >
          1e-6 * (1.0 + std::fabs(derived)))
        fail_field("slopes", "inconsistent with node values at index " +
                                 std::to_string(i));
    }
  }
  return f;
}

Json measure_to_json(const DiscreteVectorMeasure& mu) {
  Json j = Json::object();
  Json atoms = Json::array(), densities = Json::array();
  for (const auto& a : mu.atoms) {
    Json e = Json::object();
    e["location"] = num(a.location);
    e["vector"] = vec_to_json(a.vector);
    atoms.push_back(std::move(e));
  }
  for (const auto& d : mu.densities) {
    Json e = Json::object();
    e["interval"] = Json::array({num(d.a), num(d.b)});
    e["vector"] = vec_to_json(d.vector);
    densities.push_back(std::move(e));
  }
  j["atoms"] = std::move(atoms);
  j["densities"] = std::move(densities);
  return j;
}

DiscreteVectorMeasure measure_from_json(const Json& j) {
  DiscreteVectorMeasure mu;
  if (j.contains("atoms")) {
    const auto& atoms = j.at("atoms");
    if (!atoms.is_array()) fail_field("atoms", "expected an array");
    for (const auto& e : atoms) {
      DiscreteVectorMeasure::Atom a;
      a.location = get_number(get_member(e, "location"), "location");
      a.vector = get_number_array(get_member(e, "vector"), "vector");
      mu.atoms.push_back(std::move(a));
    }
  }
  if (j.contains("densities")) {
    const auto& ds = j.at("densities");
    if (!ds.is_array()) fail_field("densities", "expected an array");
    for (const auto& e : ds) {
      DiscreteVectorMeasure::Density d;
      auto iv = get_number_array(get_member(e, "interval"), "interval");
      if (iv.size() != 2 || !(iv[0] < iv[1]))
        fail_field("interval", "expected [a, b] with a < b");
      d.a = iv[0];
      d.b = iv[1];
      d.vector = get_number_array(get_member(e, "vector"), "vector");
      mu.densities.push_back(std::move(d));
    }
  }
  for (size_t i = 0; i < mu.atoms.size(); ++i)
    for (size_t k = i + 1; k < mu.atoms.size(); ++k)
      if (std::fabs(mu.atoms[i].location - mu.atoms[k].location) <= kMergeTol)
        fail_field("atoms", "duplicate atom locations");
  for (size_t i = 0; i < mu.densities.size(); ++i)
    for (size_t k = i + 1; k < mu.densities.size(); ++k) {
      const auto& p = mu.densities[i];
      const auto& q = mu.densities[k];
      if (std::min(p.b, q.b) - std::max(p.a, q.a) > kMergeTol)
        fail_field("densities", "overlapping intervals");
    }
  (void)mu.dim();
  return mu;
}

Json polygons_to_json(const PolygonSet& E) {
  Json loops = Json::array();
  for (const auto& loop : E.loops) {
    Json l = Json::array();
    for (Vec2 p : loop) l.push_back(vec2_to_json(p));
    loops.push_back(std::move(l));
  }
  Json j = Json::object();
  j["loops"] = std::move(loops);
  return j;
}

PolygonSet polygons_from_json(const Json& j) {
  PolygonSet E;
  const auto& loops = get_member(j, "loops");
  if (!loops.is_array()) fail_field("loops", "expected an array");
  for (const auto& l : loops) {
    if (!l.is_array() || l.size() < 3)
      fail_field("loops", "each loop needs at least 3 points");
    std::vector<Vec2> loop;
    for (const auto& e : l) {
      auto p = get_number_array(e, "loops");
      if (p.size() != 2) fail_field("loops", "points must be [x, y]");
      loop.push_back({p[0], p[1]});
    }
    E.loops.push_back(std::move(loop));
  }
  return E;
}

Json breakdown_to_json(const PerimeterBreakdown& p) {
  Json j = Json::object();
  j["ac_part"] = num(p.ac_part);
  j["jump_v_minus"] = num(p.jump_v_minus);
  j["jump_v_plus"] = num(p.jump_v_plus);
  j["jump_b_only"] = num(p.jump_b_only);
  j["boundary_zero_part"] = num(p.boundary_zero_part);
  j["total"] = num(p.total);
  return j;
}

Json report_to_json(const RigidityReport& r) {
  Json j = Json::object();
  j["condition_sections_ok"] = r.condition_sections_ok;
  j["condition_cone_ok"] = r.condition_cone_ok;
  Json cf = Json::array();
  for (const auto& iv : r.cone_failures)
    cf.push_back(Json::array({num(iv.a), num(iv.b)}));
  j["cone_failures"] = std::move(cf);
  j["condition_jump_ok"] = r.condition_jump_ok;
  Json jf = Json::array();
  for (double x : r.jump_failures) jf.push_back(num(x));
  j["jump_failures"] = std::move(jf);
  j["cantor_condition"] = r.cantor_condition;
  j["r1_ok"] = r.r1_ok;
  j["r2_ok"] = r.r2_ok;
  Json fn = Json::array();
  for (Vec2 n : r.failing_normals) fn.push_back(vec2_to_json(n));
  j["failing_normals"] = std::move(fn);
  j["gap"] = num(r.gap);
  j["verdict"] = r.verdict;
  if (r.witness) {
    Json w = Json::object();
    w["v"] = profile_to_json(r.witness->v);
    w["b"] = profile_to_json(r.witness->b);
    j["witness"] = std::move(w);
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  const std::string text = ss.str();
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    // Translate the byte offset into a line/column diagnostic.
    size_t line = 1, col = 1;
    for (size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    std::string reason = e.what();
    // The library message embeds its own location prefix; keep the reason.
    if (auto pos = reason.find("syntax error"); pos != std::string::npos)
      reason = reason.substr(pos);
    throw ParseError(path + ":" + std::to_string(line) + ":" +
                     std::to_string(col) + ": " + reason);
  }
}

void save_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path + "'");
  out << dump_json(j);
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace aniso

#include "lskew/json_io.hpp"

#include "lskew/errors.hpp"

#include <fstream>

namespace lskew {

namespace {

Json vec_array(const double* data, int n) {
  Json a = Json::array();
  for (int i = 0; i < n; ++i) a.push_back(data[i]);
  return a;
}

Vec3 parse_vec3(const Json& j, const char* what) {
  if (!j.is_array() || j.size() != 3)
    throw Error(ErrorKind::Parse, std::string(what) + " must be an array of 3 numbers");
  return Vec3(j[0].get<double>(), j[1].get<double>(), j[2].get<double>());
}

const Json& require(const Json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) throw Error(ErrorKind::Parse, std::string("missing field \"") + key + "\"");
  return *it;
}

}  // namespace

Json to_json(const FourVector& v) { return vec_array(v.c.data(), 4); }

Json to_json(const Vec3& v) { return vec_array(v.data(), 3); }

Json to_json(const SkewField& f) {
  return Json{{"E", to_json(Vec3(f.E()))}, {"B", to_json(Vec3(f.B()))}};
}

Json matrix_json(const Mat4& m) {
  Json rows = Json::array();
  for (int i = 0; i < 4; ++i) {
    Json row = Json::array();
    for (int j = 0; j < 4; ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const EnergyMomentum& t) {
  return Json{{"matrix", matrix_json(t.matrix())}, {"lambda_T", t.lambda()}};
}

Json to_json(const EigenData& e) {
  return Json{{"lambda_F", e.lambda_F},
              {"lambda_Fstar", e.lambda_Fstar},
              {"lambda_cF", Json::array({e.lambda_cF.real(), e.lambda_cF.imag()})},
              {"lambda_T", e.lambda_T}};
}

Json to_json(const WindingReport& r) {
  return Json{{"winding", r.winding},
              {"parity", to_string(r.parity)},
              {"min_abs_psi", r.min_abs_psi},
              {"samples_used", r.samples_used},
              {"refined", r.refined}};
}

Json to_json(const BatteryReport& r) {
  Json identities = Json::array();
  for (const IdentityResult& id : r.identities)
    identities.push_back(Json{{"name", id.name},
                              {"max_residual", id.max_residual},
                              {"tolerance", id.tolerance},
                              {"pass", id.pass}});
  return Json{{"seed", r.seed}, {"cases", r.cases}, {"identities", std::move(identities)},
              {"all_pass", r.all_pass}};
}

FourVector four_vector_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 4)
    throw Error(ErrorKind::Parse, "four-vector must be an array of 4 numbers [t, x, y, z]");
  return FourVector(j[0].get<double>(), j[1].get<double>(), j[2].get<double>(),
                    j[3].get<double>());
}

Vec3 vec3_from_json(const Json& j) { return parse_vec3(j, "vector"); }

SkewField skew_field_from_json(const Json& j) {
  return SkewField(parse_vec3(require(j, "E"), "E"), parse_vec3(require(j, "B"), "B"));
}

FieldConfig config_from_json(const Json& j) {
  const std::string type = require(j, "type").get<std::string>();
  if (type == "point_charge") {
    PointCharge c;
    c.charge = require(j, "charge").get<double>();
    c.position = parse_vec3(require(j, "position"), "position");
    return FieldConfig{c};
  }
  if (type == "uniform") {
    UniformField u;
    u.E = parse_vec3(require(j, "E"), "E");
    u.B = parse_vec3(require(j, "B"), "B");
    return FieldConfig{u};
  }
  if (type == "plane_wave_null") {
    PlaneWaveNull p;
    p.amplitude = require(j, "amplitude").get<double>();
    p.axis = parse_vec3(require(j, "axis"), "axis");
    p.phase = j.value("phase", 0.0);
    return FieldConfig{p};
  }
  if (type == "superposition") {
    Superposition s;
    for (const Json& term : require(j, "terms")) s.terms.push_back(config_from_json(term));
    return FieldConfig{std::move(s)};
  }
  throw Error(ErrorKind::Parse, "unknown config type \"" + type + "\"");
}

LoopSpec loop_from_json(const Json& j) {
  LoopSpec loop;
  loop.samples = j.value("samples", 720);
  const std::string kind = require(j, "kind").get<std::string>();
  if (kind == "circle") {
    Circle c;
    c.center = parse_vec3(require(j, "center"), "center");
    c.normal = parse_vec3(require(j, "normal"), "normal");
    c.radius = require(j, "radius").get<double>();
    loop.shape = c;
  } else if (kind == "polyline") {
    Polyline p;
    for (const Json& pt : require(j, "points")) p.points.push_back(parse_vec3(pt, "point"));
    loop.shape = std::move(p);
  } else {
    throw Error(ErrorKind::Parse, "unknown loop kind \"" + kind + "\"");
  }
  validate(loop);
  return loop;
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::NotFound, "cannot open \"" + path + "\"");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorKind::Parse, std::string("invalid JSON in \"") + path + "\": " + e.what());
  }
}

}  // namespace lskew

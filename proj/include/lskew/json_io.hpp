#pragma once

#include "lskew/battery.hpp"
#include "lskew/eigenstructure.hpp"
#include "lskew/energy_momentum.hpp"
#include "lskew/field_topology.hpp"
#include "lskew/minkowski.hpp"
#include "lskew/skew_field.hpp"

#include <json.hpp>

#include <string>

namespace lskew {

using Json = nlohmann::json;

// Wire formats:
//   FourVector            [t, x, y, z]
//   Vec3                  [x, y, z]
//   SkewField             {"E": [..], "B": [..]}
//   EnergyMomentum        {"matrix": [[..] x4], "lambda_T": x}   (row-major rows)
//   EigenData             {"lambda_F": x, "lambda_Fstar": x, "lambda_cF": [re, im], "lambda_T": x}
//   FieldConfig           {"type": "point_charge" | "uniform" | "plane_wave_null" | "superposition", ...}
//   LoopSpec              {"kind": "circle" | "polyline", ..., "samples": n}
//   WindingReport         {"winding": n, "parity": "even"|"odd", "min_abs_psi": x,
//                          "samples_used": n, "refined": bool}

Json to_json(const FourVector& v);
Json to_json(const Vec3& v);
Json to_json(const SkewField& f);
Json matrix_json(const Mat4& m);  // row-major nested arrays
Json to_json(const EnergyMomentum& t);
Json to_json(const EigenData& e);
Json to_json(const WindingReport& r);
Json to_json(const BatteryReport& r);

FourVector four_vector_from_json(const Json& j);
Vec3 vec3_from_json(const Json& j);
SkewField skew_field_from_json(const Json& j);
FieldConfig config_from_json(const Json& j);
LoopSpec loop_from_json(const Json& j);

/// Parse a JSON document from a file. Throws NotFound / Parse.
Json load_json_file(const std::string& path);

}  // namespace lskew

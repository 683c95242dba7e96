#pragma once

// JSON schemas for the file formats: nilpotent modules, twisted complexes,
// graded curves, matrices and charges.

#include "twistcat/curves.hpp"
#include "twistcat/lattice.hpp"
#include "twistcat/preproj.hpp"
#include "twistcat/twisted.hpp"

#include <json.hpp>

namespace twistcat {

using nlohmann::json;

json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Field& f, const json& j, size_t rows, size_t cols);

// {"n":..., "dims":[...], "a":[matrix...], "b":[matrix...], "field":"F2"|"Fp:p"|"Q"}
json module_to_json(const NilpotentModule& m);
NilpotentModule module_from_json(const json& j);

// {"n":..., "field":..., "terms":[{"vertex":i,"shift":k}],
//  "diff":[{"from":s,"to":t,"coeffs":[{"kind":"x","index":i,"scalar":...}]}]}
json complex_to_json(const TwistedComplex& x);
TwistedComplex complex_from_json(const json& j);

// {"surface":"disk"|"cylinder", "n":..., "endpoints":[p,q], "sides":["R","L"],
//  "crossings":[{"cut":..., "rank":..., "side":..., "lift":...}], "grading":k}
json curve_to_json(const GradedCurve& c);
GradedCurve curve_from_json(const json& j);

json charge_to_json(const CentralCharge& z);
CentralCharge charge_from_json(const json& j);
// "re+im i" exact rational pairs separated by commas: "-1,-2/3 ..." parsed as
// alternating re and im entries per coordinate: "re0:im0,re1:im1,..."
CentralCharge charge_from_string(const std::string& s, int n);

json lattice_to_json(const LatticeVector& v);

}  // namespace twistcat

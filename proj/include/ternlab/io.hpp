// Copyright 2026 The ternlab Authors
// SPDX-License-Identifier: Apache-2.0

// JSON interchange. Complex numbers are [re, im] pairs; matrices are arrays
// of rows.
//
// Instance file:
//   {"name": "...", "blocks": [{"sign": 1, "rows": r, "cols": c,
//                               "basis": [matrix, ...]}, ...]}
// or
//   {"name": "...", "structure_constants": {"dim": d, "c": c[i][j][k][l]}}
//
// Ideal file (coordinate vectors in the instance's basis):
//   {"generators": [vector, ...]}   or   {"basis": [vector, ...]}

#pragma once

#include <string>

#include <json.hpp>

#include "ternlab/ternary.hpp"

namespace ternlab {

using Json = nlohmann::json;

Json complex_to_json(cplx z);
cplx complex_from_json(const Json& j);
Json vector_to_json(const CVector& v);
CVector vector_from_json(const Json& j);
Json matrix_to_json(const CMatrix& m);
CMatrix matrix_from_json(const Json& j, Eigen::Index rows, Eigen::Index cols);

Json instance_to_json(const TernarySpace& m);
/// Throws InvalidInput with a diagnostic on malformed input.
TernarySpace instance_from_json(const Json& j);

TernarySpace read_instance_file(const std::string& path);
void write_instance_file(const std::string& path, const TernarySpace& m);

struct IdealSpec {
  CMatrix columns;      // coordinate columns
  bool is_basis = false;  // "basis" rather than "generators"
};

IdealSpec ideal_from_json(const Json& j, Eigen::Index dim);
IdealSpec read_ideal_file(const std::string& path, Eigen::Index dim);

}  // namespace ternlab

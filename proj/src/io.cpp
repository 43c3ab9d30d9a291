// Copyright 2026 The ternlab Authors
// SPDX-License-Identifier: Apache-2.0

#include "ternlab/io.hpp"

#include <fstream>
#include <sstream>

#include "ternlab/errors.hpp"

namespace ternlab {

namespace {

[[noreturn]] void bad(const std::string& what) { throw InvalidInput("instance file: " + what); }

const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) bad(where + ": missing \"" + key + "\"");
  return j.at(key);
}

Eigen::Index count_field(const Json& j, const char* key, const std::string& where) {
  const Json& v = field(j, key, where);
  if (!v.is_number_integer() || v.get<long long>() < 0) bad(where + ": \"" + key + "\" must be a non-negative integer");
  return static_cast<Eigen::Index>(v.get<long long>());
}

}  // namespace

Json complex_to_json(cplx z) { return Json::array({z.real(), z.imag()}); }

cplx complex_from_json(const Json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    bad("complex entries must be [re, im] pairs");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

Json vector_to_json(const CVector& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(complex_to_json(v(i)));
  return out;
}

CVector vector_from_json(const Json& j) {
  if (!j.is_array()) bad("expected an array of complex entries");
  CVector v(static_cast<Eigen::Index>(j.size()));
  for (size_t i = 0; i < j.size(); ++i) v(static_cast<Eigen::Index>(i)) = complex_from_json(j[i]);
  return v;
}

Json matrix_to_json(const CMatrix& m) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(complex_to_json(m(i, k)));
    out.push_back(row);
  }
  return out;
}

CMatrix matrix_from_json(const Json& j, Eigen::Index rows, Eigen::Index cols) {
  if (!j.is_array() || static_cast<Eigen::Index>(j.size()) != rows) {
    bad("matrix must have " + std::to_string(rows) + " rows");
  }
  CMatrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const Json& row = j[static_cast<size_t>(i)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols) {
      bad("matrix row " + std::to_string(i) + " must have " + std::to_string(cols) + " entries");
    }
    for (Eigen::Index k = 0; k < cols; ++k) m(i, k) = complex_from_json(row[static_cast<size_t>(k)]);
  }
  return m;
}

Json instance_to_json(const TernarySpace& m) {
  Json out;
  out["name"] = m.name();
  if (m.has_blocks()) {
    Json blocks = Json::array();
    for (const auto& bl : m.blocks()) {
      Json b;
      b["sign"] = bl.sign();
      b["rows"] = bl.rows();
      b["cols"] = bl.cols();
      Json basis = Json::array();
      for (const auto& x : bl.basis()) basis.push_back(matrix_to_json(x));
      b["basis"] = basis;
      blocks.push_back(b);
    }
    out["blocks"] = blocks;
  } else {
    const StructureConstants& c = m.structure();
    const Eigen::Index d = c.dim();
    Json t = Json::array();
    for (Eigen::Index i = 0; i < d; ++i) {
      Json ti = Json::array();
      for (Eigen::Index j = 0; j < d; ++j) {
        Json tj = Json::array();
        for (Eigen::Index k = 0; k < d; ++k) {
          Json tk = Json::array();
          for (Eigen::Index l = 0; l < d; ++l) tk.push_back(complex_to_json(c(i, j, k, l)));
          tj.push_back(tk);
        }
        ti.push_back(tj);
      }
      t.push_back(ti);
    }
    out["structure_constants"] = {{"dim", d}, {"c", t}};
  }
  return out;
}

TernarySpace instance_from_json(const Json& j) {
  if (!j.is_object()) bad("top level must be an object");
  const std::string name = j.contains("name") && j["name"].is_string() ? j["name"].get<std::string>() : "";
  const bool has_blocks = j.contains("blocks");
  const bool has_structure = j.contains("structure_constants");
  if (has_blocks == has_structure) bad("exactly one of \"blocks\" and \"structure_constants\" is required");
  if (has_blocks) {
    const Json& blocks = j["blocks"];
    if (!blocks.is_array() || blocks.empty()) bad("\"blocks\" must be a non-empty array");
    std::vector<SignedBlock> out;
    for (size_t b = 0; b < blocks.size(); ++b) {
      const std::string where = "block " + std::to_string(b);
      const Json& jb = blocks[b];
      const Json& sign = field(jb, "sign", where);
      if (!sign.is_number_integer() || (sign.get<int>() != 1 && sign.get<int>() != -1)) {
        bad(where + ": \"sign\" must be 1 or -1");
      }
      const Eigen::Index rows = count_field(jb, "rows", where);
      const Eigen::Index cols = count_field(jb, "cols", where);
      const Json& basis = field(jb, "basis", where);
      if (!basis.is_array()) bad(where + ": \"basis\" must be an array of matrices");
      std::vector<CMatrix> mats;
      for (const auto& x : basis) mats.push_back(matrix_from_json(x, rows, cols));
      try {
        out.emplace_back(sign.get<int>(), std::move(mats));
      } catch (const InvalidInput& e) {
        bad(where + ": " + e.what());
      }
    }
    return TernarySpace::from_blocks(std::move(out), name);
  }
  const Json& sc = j["structure_constants"];
  const Eigen::Index d = count_field(sc, "dim", "structure_constants");
  const Json& t = field(sc, "c", "structure_constants");
  StructureConstants c(d);
  auto check_len = [d](const Json& a, const std::string& where) {
    if (!a.is_array() || static_cast<Eigen::Index>(a.size()) != d) bad(where + " must have length " + std::to_string(d));
  };
  check_len(t, "c");
  for (Eigen::Index i = 0; i < d; ++i) {
    const Json& ti = t[static_cast<size_t>(i)];
    check_len(ti, "c[" + std::to_string(i) + "]");
    for (Eigen::Index k1 = 0; k1 < d; ++k1) {
      const Json& tj = ti[static_cast<size_t>(k1)];
      check_len(tj, "c[i][j]");
      for (Eigen::Index k2 = 0; k2 < d; ++k2) {
        const Json& tk = tj[static_cast<size_t>(k2)];
        check_len(tk, "c[i][j][k]");
        for (Eigen::Index l = 0; l < d; ++l) c(i, k1, k2, l) = complex_from_json(tk[static_cast<size_t>(l)]);
      }
    }
  }
  for (const cplx& v : c.data()) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) bad("structure constants must be finite");
  }
  return TernarySpace::from_structure(std::move(c), name);
}

TernarySpace read_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open instance file '" + path + "'");
  Json j;
  try {
    in >> j;
  } catch (const Json::parse_error& e) {
    throw InvalidInput("instance file '" + path + "': " + e.what());
  }
  return instance_from_json(j);
}

void write_instance_file(const std::string& path, const TernarySpace& m) {
  std::ofstream out(path);
  if (!out) throw InvalidInput("cannot write '" + path + "'");
  out << instance_to_json(m).dump(2) << '\n';
}

IdealSpec ideal_from_json(const Json& j, Eigen::Index dim) {
  if (!j.is_object()) throw InvalidInput("ideal file: top level must be an object");
  const bool gens = j.contains("generators");
  const bool basis = j.contains("basis");
  if (gens == basis) throw InvalidInput("ideal file: exactly one of \"generators\" and \"basis\" is required");
  const Json& list = gens ? j["generators"] : j["basis"];
  if (!list.is_array()) throw InvalidInput("ideal file: expected an array of coordinate vectors");
  IdealSpec spec;
  spec.is_basis = basis;
  spec.columns.resize(dim, static_cast<Eigen::Index>(list.size()));
  for (size_t k = 0; k < list.size(); ++k) {
    const CVector v = vector_from_json(list[k]);
    if (v.size() != dim) {
      throw InvalidInput("ideal file: vector " + std::to_string(k) + " has length " +
                         std::to_string(v.size()) + ", expected " + std::to_string(dim));
    }
    spec.columns.col(static_cast<Eigen::Index>(k)) = v;
  }
  return spec;
}

IdealSpec read_ideal_file(const std::string& path, Eigen::Index dim) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open ideal file '" + path + "'");
  Json j;
  try {
    in >> j;
  } catch (const Json::parse_error& e) {
    throw InvalidInput("ideal file '" + path + "': " + e.what());
  }
  return ideal_from_json(j, dim);
}

}  // namespace ternlab

// Copyright 2026 The ternlab Authors
// SPDX-License-Identifier: Apache-2.0

// ternlab: command-line front end.
//
// Exit codes: 0 success, 1 a checked property failed, 2 input error.

#include <cmath>
#include <cstdlib>
#include <iostream>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "ternlab/embedding.hpp"
#include "ternlab/errors.hpp"
#include "ternlab/ideals.hpp"
#include "ternlab/instances.hpp"
#include "ternlab/io.hpp"
#include "ternlab/radical.hpp"
#include "ternlab/ternary.hpp"
#include "ternlab/wedderburn.hpp"

using namespace ternlab;

namespace {

struct Options {
  std::uint64_t seed = 0;
  std::size_t samples = 500;
  std::string format = "text";
  double tol = 1e-8;
  std::string file;
  std::string ideal;
  std::string demo;
  bool dump = false;
  long target_dim = 0;
};

struct Outcome {
  Json report;
  int code = 0;
};

Json basis_json(const CMatrix& q) {
  Json out = Json::array();
  for (Eigen::Index k = 0; k < q.cols(); ++k) out.push_back(vector_to_json(q.col(k)));
  return out;
}

std::string presentation(const TernarySpace& m) { return m.has_blocks() ? "blocks" : "structure"; }

Json header(const std::string& command, const TernarySpace& m) {
  return Json{{"command", command}, {"instance", m.name()}, {"dim", m.dim()},
              {"presentation", presentation(m)}};
}

Outcome run_verify(const TernarySpace& m, const Options& o) {
  const AxiomReport r = check_axioms(m, o.samples, o.seed, o.tol);
  Json j = header("verify", m);
  j["samples"] = r.samples;
  j["norm_checked"] = r.norm_checked;
  j["tolerance"] = r.tolerance;
  j["residuals"] = {{"associativity_middle", r.associativity_middle},
                    {"associativity_right", r.associativity_right},
                    {"conjugate_linearity", r.conjugate_linearity},
                    {"norm_submultiplicative", r.norm_submultiplicative},
                    {"norm_cube", r.norm_cube}};
  j["failing"] = r.failing;
  j["pass"] = r.pass;
  return {j, r.pass ? 0 : 1};
}

Outcome run_decompose(const TernarySpace& m, const Options& o) {
  const ZettlDecomposition z = zettl_decompose(m, o.seed, o.tol);
  Json j = header("decompose", m);
  j["dim_plus"] = z.plus.dim();
  j["dim_minus"] = z.minus.dim();
  j["plus_basis"] = basis_json(z.plus_coords);
  j["minus_basis"] = basis_json(z.minus_coords);
  return {j, 0};
}

Outcome run_embed(const TernarySpace& m, const Options& o) {
  const StandardEmbedding e = build_embedding(m);
  const AssocAlgebra& a = e.algebra();
  Rng rng = make_rng(o.seed, 0x656d6264);
  const EmbeddingElement one = identity_of(e);
  double unit_res = 0.0, star_res = 0.0, hom_res = 0.0;
  for (Eigen::Index i = 0; i < e.dim(); ++i) {
    const EmbeddingElement b = e.basis_element(i);
    unit_res = std::max(unit_res, (emb_mul(e, one, b) - b).coords.norm());
    unit_res = std::max(unit_res, (emb_mul(e, b, one) - b).coords.norm());
  }
  const std::size_t pairs = std::min<std::size_t>(o.samples, 200);
  for (std::size_t s = 0; s < pairs; ++s) {
    const EmbeddingElement x(random_cvector(e.dim(), rng)), y(random_cvector(e.dim(), rng));
    const EmbeddingElement xy = emb_mul(e, x, y);
    const double scale = x.coords.norm() * y.coords.norm();
    star_res = std::max(star_res, (emb_star(e, xy) - emb_mul(e, emb_star(e, y), emb_star(e, x))).coords.norm() / scale);
    const CMatrix lhs = pi_represent(e, xy).matrix;
    const CMatrix rhs = pi_represent(e, x).matrix * pi_represent(e, y).matrix;
    hom_res = std::max(hom_res, (lhs - rhs).norm() / scale);
  }
  const double margin = pi_injectivity_margin(e);
  const double assoc = a.associativity_residual();
  Json j = header("embed", m);
  j["embedding_dim"] = e.dim();
  Json corners = Json::array();
  for (const auto& idx : e.corners().indices) corners.push_back(idx.size());
  j["corner_dims"] = corners;
  Json rules = Json::array();
  for (const auto& b : e.blocks()) rules.push_back(b.rule == ProductRule::Linking ? "linking" : "anti");
  j["product_rules"] = rules;
  j["associativity_residual"] = assoc;
  j["unit_residual"] = unit_res;
  j["involution_residual"] = star_res;
  j["pi_homomorphism_residual"] = hom_res;
  j["pi_injectivity_margin"] = margin;
  const auto w = cstar_identity_witness(e, o.seed);
  if (w) {
    j["cstar_witness"] = {{"gap", w->gap}, {"norm_star_product", w->norm_star_product},
                          {"norm_squared", w->norm_squared}, {"element", vector_to_json(w->element.coords)}};
  } else {
    j["cstar_witness"] = nullptr;
  }
  const bool pass = assoc <= 1e-9 && unit_res <= 1e-9 && star_res <= 1e-9 && hom_res <= 1e-9 && margin > 1e-9;
  j["pass"] = pass;
  return {j, pass ? 0 : 1};
}

Outcome run_radical(const TernarySpace& m, const Options& o) {
  const TernaryRadicalReport r = ternary_radical(m, o.seed, 50, o.tol);
  Json j = header("radical", m);
  j["radical_dim"] = r.dim();
  j["semisimple"] = r.dim() == 0;
  j["radical_basis"] = basis_json(r.basis);
  j["envelope_radical_dim"] = r.envelope_radical.dim();
  j["corner_dims"] = r.corner_dims;
  j["radical_is_ideal"] = r.is_ideal;
  j["audits"] = r.audits;
  j["audit_failures"] = r.audit_failures;
  j["borderline"] = r.borderline;
  return {j, r.dim() == 0 ? 0 : 1};
}

Outcome run_quotient(const TernarySpace& m, const Options& o) {
  const IdealSpec spec = read_ideal_file(o.ideal, m.dim());
  const TernaryIdeal ideal =
      spec.is_basis ? make_ideal(m, spec.columns, o.tol) : generated_ideal(m, spec.columns);
  const Quotient q = quotient(m, ideal, o.tol);
  Json j = header("quotient", m);
  j["ideal_dim"] = ideal.dim();
  j["quotient_dim"] = q.space.dim();
  j["well_defined_residual"] = q.well_defined_residual;
  j["ideal_basis"] = basis_json(ideal.basis);
  j["quotient_instance"] = instance_to_json(q.space);
  bool pass = true;
  if (m.has_blocks() && q.space.dim() > 0) {
    // norm identity on sampled cosets with the quotient norm
    Rng rng = make_rng(o.seed, 0x71756f);
    double worst = 0.0, worst_gap = 0.0;
    const std::size_t n = std::min<std::size_t>(o.samples, 20);
    for (std::size_t s = 0; s < n; ++s) {
      TernaryElement f = random_element(m, rng);
      const QuotientNormReport nf = quotient_norm(m, ideal, f, o.seed + s);
      if (nf.upper <= 0.0) continue;
      f = (1.0 / nf.upper) * f;
      const QuotientNormReport n3 = quotient_norm(m, ideal, triple(m, f, f, f), o.seed + s);
      worst = std::max(worst, std::abs(n3.upper - 1.0));
      worst_gap = std::max(worst_gap, n3.gap());
    }
    j["norm_identity_deviation"] = worst;
    j["quotient_norm_gap"] = worst_gap;
    pass = worst <= 1e-5;
  }
  try {
    const ZettlDecomposition zq = zettl_decompose(q.space, o.seed, o.tol);
    j["quotient_dim_plus"] = zq.plus.dim();
    j["quotient_dim_minus"] = zq.minus.dim();
  } catch (const DecompositionInconclusive& e) {
    j["quotient_dim_plus"] = nullptr;
    j["quotient_dim_minus"] = nullptr;
    j["zettl_error"] = e.what();
    pass = false;
  }
  j["pass"] = pass;
  return {j, pass ? 0 : 1};
}

Outcome run_wedderburn(const TernarySpace& m, const Options& o) {
  AssocAlgebra a;
  std::optional<StandardEmbedding> e;
  if (m.has_blocks()) {
    e = build_embedding(m);
    a = e->algebra();
  } else {
    a = standard_envelope(m).algebra;
  }
  Eigen::Index n = o.target_dim;
  if (n <= 0) {
    n = static_cast<Eigen::Index>(std::llround(std::sqrt(static_cast<double>(a.dim()))));
    if (n * n != a.dim()) {
      throw InvalidInput("embedding dimension " + std::to_string(a.dim()) +
                         " is not a square; pass --target-dim");
    }
  }
  Json j = header("wedderburn", m);
  j["algebra_dim"] = a.dim();
  j["target_dim"] = n;
  try {
    const WedderburnSolution s = solve_wedderburn(a, n, o.seed);
    j["residual"] = s.residual;
    j["unit_residual"] = s.unit_residual;
    j["condition"] = s.condition;
    j["restarts"] = s.restarts;
    j["iterations"] = s.iterations;
    Json phi = Json::array();
    for (Eigen::Index k = 0; k < s.phi.cols(); ++k) phi.push_back(vector_to_json(s.phi.col(k)));
    j["phi"] = phi;
    if (a.has_involution()) {
      const StarObstruction so = star_obstruction(s.phi, a, matrix_algebra(n), o.seed);
      j["star_deviation"] = so.deviation;
      j["star_witness"] = vector_to_json(so.witness);
    }
    if (a.dim() == 4) {
      try {
        j["m2_system_residual"] = m2_system_residual(s.phi, epsilon_table(a));
      } catch (const InvalidInput&) {
        j["m2_system_residual"] = nullptr;
      }
    }
    j["pass"] = s.residual <= o.tol;
    return {j, s.residual <= o.tol ? 0 : 1};
  } catch (const SolverBudgetExceeded& ex) {
    j["error"] = ex.what();
    j["pass"] = false;
    return {j, 1};
  } catch (const PreconditionFailed& ex) {
    j["error"] = ex.what();
    j["pass"] = false;
    return {j, 1};
  }
}

/// The table of the anti-linking algebra of the scalars, row x column.
const char* const kM2AntiTable[4][4] = {
    {"-E11", "-E12", "0", "0"},
    {"0", "0", "E11", "-E12"},
    {"-E21", "E22", "0", "0"},
    {"0", "0", "-E21", "-E22"},
};
const char* const kM2Names[4] = {"E11", "E12", "E21", "E22"};

std::string cell_text(const CVector& v) {
  std::string out;
  for (Eigen::Index k = 0; k < 4; ++k) {
    const cplx c = v(k);
    if (c == cplx(0.0)) continue;
    if (c == cplx(1.0)) {
      out += out.empty() ? "" : "+";
    } else if (c == cplx(-1.0)) {
      out += "-";
    } else {
      std::ostringstream s;
      s << (out.empty() ? "" : "+") << "(" << c.real() << (c.imag() >= 0 ? "+" : "") << c.imag() << "i)";
      out += s.str();
    }
    out += kM2Names[k];
  }
  return out.empty() ? "0" : out;
}

Outcome run_demo(const Options& o) {
  const TernarySpace m = demo_space(o.demo);
  if (o.dump) return {instance_to_json(m), 0};
  if (o.demo == "m2-anti") {
    const StandardEmbedding e = build_embedding(m);
    Json j{{"command", "demo"}, {"demo", o.demo}};
    Json rows = Json::array();
    int mismatches = 0;
    for (int r = 0; r < 4; ++r) {
      Json row = Json::array();
      for (int c = 0; c < 4; ++c) {
        const std::string got = cell_text(emb_mul(e, e.basis_element(r), e.basis_element(c)).coords);
        const bool ok = got == kM2AntiTable[r][c];
        mismatches += ok ? 0 : 1;
        row.push_back({{"row", kM2Names[r]}, {"col", kM2Names[c]}, {"product", got},
                       {"expected", kM2AntiTable[r][c]}, {"match", ok}});
      }
      rows.push_back(row);
    }
    j["table"] = rows;
    j["unit"] = cell_text(identity_of(e).coords);
    j["mismatches"] = mismatches;
    j["pass"] = mismatches == 0;
    return {j, mismatches == 0 ? 0 : 1};
  }
  Options sub = o;
  const Outcome v = run_verify(m, sub);
  const Outcome d = run_decompose(m, sub);
  const Outcome r = run_radical(m, sub);
  Json j{{"command", "demo"}, {"demo", o.demo}, {"dim", m.dim()}};
  j["axioms_pass"] = v.report["pass"];
  j["dim_plus"] = d.report["dim_plus"];
  j["dim_minus"] = d.report["dim_minus"];
  j["radical_dim"] = r.report["radical_dim"];
  j["semisimple"] = r.report["semisimple"];
  const int code = std::max({v.code, d.code, r.code});
  j["pass"] = code == 0;
  return {j, code};
}

void print_text(const Json& j) {
  if (j.contains("table")) {
    std::cout << "product table (row . column):\n";
    std::cout << "        ";
    for (const char* n : kM2Names) std::cout << std::left << std::setw(8) << n;
    std::cout << '\n';
    for (const auto& row : j["table"]) {
      std::cout << std::left << std::setw(8) << row[0]["row"].get<std::string>();
      for (const auto& cell : row) {
        std::string s = cell["product"].get<std::string>();
        if (!cell["match"].get<bool>()) s += "!";
        std::cout << std::left << std::setw(8) << s;
      }
      std::cout << '\n';
    }
  }
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (it.key() == "table") continue;
    const Json& v = it.value();
    if (v.is_array() && !v.empty() && v[0].is_array() && it.key() != "corner_dims") {
      std::cout << it.key() << ": [" << v.size() << " entries]\n";
    } else if (v.is_object() && it.key() == "quotient_instance") {
      std::cout << it.key() << ": <instance, use --format json>\n";
    } else if (v.is_string()) {
      std::cout << it.key() << ": " << v.get<std::string>() << '\n';
    } else {
      std::cout << it.key() << ": " << v.dump() << '\n';
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ternlab: finite-dimensional C*-ternary rings and their standard embeddings"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  if (const char* env = std::getenv("TERNLAB_SEED")) {
    try {
      o.seed = std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "error: TERNLAB_SEED must be an unsigned integer\n";
      return 2;
    }
  }
  app.add_option("--seed", o.seed, "random seed (default: $TERNLAB_SEED or 0)");
  app.add_option("--samples", o.samples, "sample count for randomized checks")->check(CLI::PositiveNumber);
  app.add_option("--format", o.format, "report format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--tol", o.tol, "tolerance")->check(CLI::PositiveNumber);

  auto add_file = [&o](CLI::App* sub) {
    sub->add_option("file", o.file, "instance file (JSON)")->required()->check(CLI::ExistingFile);
  };
  CLI::App* verify = app.add_subcommand("verify", "sampled axiom check");
  add_file(verify);
  CLI::App* decompose = app.add_subcommand("decompose", "Zettl decomposition M = M+ (+) M-");
  add_file(decompose);
  CLI::App* embed = app.add_subcommand("embed", "standard embedding and its checks");
  add_file(embed);
  CLI::App* radical = app.add_subcommand("radical", "ternary radical via the embedding");
  add_file(radical);
  CLI::App* quot = app.add_subcommand("quotient", "quotient by an ideal");
  add_file(quot);
  quot->add_option("--ideal", o.ideal, "ideal file (JSON)")->required()->check(CLI::ExistingFile);
  CLI::App* wedd = app.add_subcommand("wedderburn", "isomorphism of the embedding onto M_n(C)");
  add_file(wedd);
  wedd->add_option("--target-dim", o.target_dim, "matrix size n")->check(CLI::PositiveNumber);
  CLI::App* demo = app.add_subcommand("demo", "bundled demo instances");
  demo->add_option("name", o.demo, "demo name")->required()->check(CLI::IsMember(demo_names()));
  demo->add_flag("--dump", o.dump, "print the instance file and exit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  Outcome out;
  try {
    if (*demo) {
      out = run_demo(o);
    } else {
      const TernarySpace m = read_instance_file(o.file);
      if (*verify) out = run_verify(m, o);
      if (*decompose) out = run_decompose(m, o);
      if (*embed) out = run_embed(m, o);
      if (*radical) out = run_radical(m, o);
      if (*quot) out = run_quotient(m, o);
      if (*wedd) out = run_wedderburn(m, o);
    }
  } catch (const NormUnavailable& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const ShapeError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const NotAnIdeal& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const DecompositionInconclusive& e) {
    std::cerr << "inconclusive: " << e.what() << '\n';
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  if (o.format == "json" || (o.dump && *demo)) {
    std::cout << out.report.dump(2) << '\n';
  } else {
    print_text(out.report);
  }
  return out.code;
}

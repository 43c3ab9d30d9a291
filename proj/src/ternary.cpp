// Copyright 2026 The ternlab Authors
// SPDX-License-Identifier: Apache-2.0

#include "ternlab/ternary.hpp"

#include <algorithm>
#include <cmath>

#include "ternlab/errors.hpp"

namespace ternlab {

// ---------------------------------------------------------------------------
// SignedBlock

SignedBlock::SignedBlock(int sign, std::vector<CMatrix> basis, double tol)
    : sign_(sign), basis_(std::move(basis)) {
  if (sign_ != 1 && sign_ != -1) throw InvalidInput("SignedBlock: sign must be +1 or -1");
  if (basis_.empty()) throw InvalidInput("SignedBlock: empty basis");
  rows_ = basis_.front().rows();
  cols_ = basis_.front().cols();
  if (rows_ == 0 || cols_ == 0) throw InvalidInput("SignedBlock: zero-sized basis matrices");
  basis_mat_.resize(rows_ * cols_, dim());
  for (Eigen::Index k = 0; k < dim(); ++k) {
    const CMatrix& b = basis_[static_cast<size_t>(k)];
    if (b.rows() != rows_ || b.cols() != cols_) {
      throw InvalidInput("SignedBlock: basis matrices differ in shape");
    }
    if (!all_finite(b)) throw InvalidInput("SignedBlock: non-finite basis entry");
    basis_mat_.col(k) = vec(b);
  }
  Eigen::JacobiSVD<CMatrix> svd(basis_mat_);
  const auto& s = svd.singularValues();
  if (dim() > rows_ * cols_ || s(s.size() - 1) <= tol * s(0)) {
    throw InvalidInput("SignedBlock: basis is not linearly independent");
  }
  pinv_ = basis_mat_.completeOrthogonalDecomposition().pseudoInverse();

  for (const auto& x : basis_) {
    for (const auto& y : basis_) {
      const CMatrix xy = x * y.adjoint();
      for (const auto& z : basis_) {
        const CMatrix p = xy * z;
        const double scale = std::max(1.0, op_norm(x) * op_norm(y) * op_norm(z));
        if (span_residual(p) > tol * scale) {
          throw InvalidInput("SignedBlock: span is not closed under x y* z");
        }
      }
    }
  }
}

CMatrix SignedBlock::to_matrix(const CVector& coords) const {
  if (coords.size() != dim()) throw ShapeError("SignedBlock::to_matrix: length mismatch");
  return unvec(basis_mat_ * coords, rows_, cols_);
}

CVector SignedBlock::to_coords(const CMatrix& m) const {
  if (m.rows() != rows_ || m.cols() != cols_) throw ShapeError("SignedBlock::to_coords: shape");
  return pinv_ * vec(m);
}

double SignedBlock::span_residual(const CMatrix& m) const {
  return (vec(m) - basis_mat_ * to_coords(m)).norm();
}

SignedBlock SignedBlock::with_sign(int sign) const {
  SignedBlock out = *this;
  if (sign != 1 && sign != -1) throw InvalidInput("SignedBlock: sign must be +1 or -1");
  out.sign_ = sign;
  return out;
}

bool SignedBlock::operator==(const SignedBlock& other) const {
  if (sign_ != other.sign_ || rows_ != other.rows_ || cols_ != other.cols_ ||
      basis_.size() != other.basis_.size()) {
    return false;
  }
  for (size_t k = 0; k < basis_.size(); ++k) {
    if (basis_[k] != other.basis_[k]) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// StructureConstants

StructureConstants::StructureConstants(Eigen::Index dim)
    : dim_(dim), c_(static_cast<size_t>(dim * dim * dim * dim), cplx(0.0)) {}

StructureConstants::StructureConstants(Eigen::Index dim, std::vector<cplx> c)
    : dim_(dim), c_(std::move(c)) {
  if (c_.size() != static_cast<size_t>(dim * dim * dim * dim)) {
    throw InvalidInput("StructureConstants: tensor must have dim^4 entries");
  }
  for (const auto& v : c_) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw InvalidInput("StructureConstants: non-finite entry");
    }
  }
}

// ---------------------------------------------------------------------------
// TernarySpace

TernarySpace TernarySpace::from_blocks(std::vector<SignedBlock> blocks, std::string name) {
  TernarySpace m;
  m.offsets_.clear();
  Eigen::Index off = 0;
  for (const auto& b : blocks) {
    m.offsets_.push_back(off);
    off += b.dim();
  }
  m.dim_ = off;
  m.rep_ = std::move(blocks);
  m.name_ = std::move(name);
  return m;
}

TernarySpace TernarySpace::from_structure(StructureConstants c, std::string name) {
  TernarySpace m;
  m.dim_ = c.dim();
  m.rep_ = std::move(c);
  m.name_ = std::move(name);
  return m;
}

const std::vector<SignedBlock>& TernarySpace::blocks() const {
  if (!has_blocks()) throw NormUnavailable("space is given by structure constants only");
  return std::get<std::vector<SignedBlock>>(rep_);
}

const StructureConstants& TernarySpace::structure() const {
  if (has_blocks()) throw InvalidInput("space is given by blocks; use structure_constants_of");
  return std::get<StructureConstants>(rep_);
}

void TernarySpace::check_element(const TernaryElement& x) const {
  if (x.size() != dim_) throw ShapeError("element does not belong to this ternary space");
}

CMatrix TernarySpace::block_matrix(const TernaryElement& x, size_t b) const {
  check_element(x);
  const auto& bl = blocks().at(b);
  return bl.to_matrix(x.coords.segment(offsets_[b], bl.dim()));
}

TernaryElement TernarySpace::from_block_matrices(const std::vector<CMatrix>& mats) const {
  const auto& bls = blocks();
  if (mats.size() != bls.size()) throw ShapeError("from_block_matrices: block count mismatch");
  CVector c(dim_);
  for (size_t b = 0; b < bls.size(); ++b) {
    c.segment(offsets_[b], bls[b].dim()) = bls[b].to_coords(mats[b]);
  }
  return TernaryElement(c);
}

double TernarySpace::norm(const TernaryElement& x) const {
  check_element(x);
  if (!has_blocks()) throw NormUnavailable("norm requires the block presentation");
  double n = 0.0;
  for (size_t b = 0; b < blocks().size(); ++b) n = std::max(n, op_norm(block_matrix(x, b)));
  return n;
}

TernaryElement TernarySpace::basis_element(Eigen::Index i) const {
  CVector e = CVector::Zero(dim_);
  e(i) = 1.0;
  return TernaryElement(e);
}

bool TernarySpace::operator==(const TernarySpace& other) const {
  if (dim_ != other.dim_ || has_blocks() != other.has_blocks()) return false;
  if (has_blocks()) return blocks() == other.blocks();
  return structure() == other.structure();
}

TernaryElement triple(const TernarySpace& m, const TernaryElement& x, const TernaryElement& y,
                      const TernaryElement& z) {
  m.check_element(x);
  m.check_element(y);
  m.check_element(z);
  const Eigen::Index d = m.dim();
  CVector out = CVector::Zero(d);
  if (m.has_blocks()) {
    const auto& bls = m.blocks();
    for (size_t b = 0; b < bls.size(); ++b) {
      const Eigen::Index off = m.offsets_[b];
      const Eigen::Index n = bls[b].dim();
      const CMatrix xb = bls[b].to_matrix(x.coords.segment(off, n));
      const CMatrix yb = bls[b].to_matrix(y.coords.segment(off, n));
      const CMatrix zb = bls[b].to_matrix(z.coords.segment(off, n));
      const CMatrix p = static_cast<double>(bls[b].sign()) * (xb * yb.adjoint() * zb);
      out.segment(off, n) = bls[b].to_coords(p);
    }
    return TernaryElement(out);
  }
  const auto& c = m.structure();
  for (Eigen::Index i = 0; i < d; ++i) {
    if (x.coords(i) == cplx(0.0)) continue;
    for (Eigen::Index j = 0; j < d; ++j) {
      const cplx a = x.coords(i) * std::conj(y.coords(j));
      if (a == cplx(0.0)) continue;
      for (Eigen::Index k = 0; k < d; ++k) {
        const cplx w = a * z.coords(k);
        if (w == cplx(0.0)) continue;
        for (Eigen::Index l = 0; l < d; ++l) out(l) += w * c(i, j, k, l);
      }
    }
  }
  return TernaryElement(out);
}

CMatrix left_operator(const TernarySpace& m, const TernaryElement& x, const TernaryElement& y) {
  CMatrix op(m.dim(), m.dim());
  for (Eigen::Index j = 0; j < m.dim(); ++j) op.col(j) = triple(m, x, y, m.basis_element(j)).coords;
  return op;
}

CMatrix right_operator(const TernarySpace& m, const TernaryElement& u, const TernaryElement& v) {
  CMatrix op(m.dim(), m.dim());
  for (Eigen::Index j = 0; j < m.dim(); ++j) op.col(j) = triple(m, m.basis_element(j), u, v).coords;
  return op;
}

TernaryElement random_element(const TernarySpace& m, Rng& rng) {
  return TernaryElement(random_cvector(m.dim(), rng));
}

// ---------------------------------------------------------------------------
// Closure

TernarySpace ternary_closure(const std::vector<CMatrix>& generators, int sign) {
  if (generators.empty()) throw InvalidInput("ternary_closure: no generators");
  if (sign != 1 && sign != -1) throw InvalidInput("ternary_closure: sign must be +1 or -1");
  const Eigen::Index rows = generators.front().rows();
  const Eigen::Index cols = generators.front().cols();
  double scale = 0.0;
  for (const auto& g : generators) {
    if (g.rows() != rows || g.cols() != cols) {
      throw InvalidInput("ternary_closure: generators differ in shape");
    }
    if (!all_finite(g)) throw InvalidInput("ternary_closure: non-finite generator");
    scale = std::max(scale, g.norm());
  }
  constexpr double kTol = 1e-10;
  CMatrix q(rows * cols, 0);
  for (const auto& g : generators) extend_orthonormal(q, vec(g), kTol, scale);
  if (q.cols() == 0) throw InvalidInput("ternary_closure: generators span the zero space");

  constexpr int kMaxRounds = 64;
  Eigen::Index known = 0;  // triples with all indices < known were already tried
  int round = 0;
  for (; round < kMaxRounds; ++round) {
    const Eigen::Index n = q.cols();
    std::vector<CMatrix> mats;
    for (Eigen::Index k = 0; k < n; ++k) mats.push_back(unvec(q.col(k), rows, cols));
    bool grew = false;
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index j = 0; j < n; ++j) {
        const CMatrix xy = mats[static_cast<size_t>(i)] * mats[static_cast<size_t>(j)].adjoint();
        for (Eigen::Index k = 0; k < n; ++k) {
          if (i < known && j < known && k < known) continue;
          if (q.cols() == rows * cols) break;
          grew |= extend_orthonormal(q, vec(xy * mats[static_cast<size_t>(k)]), kTol, 1.0);
        }
      }
    }
    known = n;
    if (!grew) break;
  }
  if (round == kMaxRounds) throw ClosureDidNotStabilize("ternary_closure: 64 rounds exceeded");

  std::vector<CMatrix> basis;
  for (Eigen::Index k = 0; k < q.cols(); ++k) basis.push_back(unvec(q.col(k), rows, cols));
  return TernarySpace::from_blocks({SignedBlock(sign, std::move(basis))});
}

// ---------------------------------------------------------------------------
// Axioms

namespace {

double element_size(const TernarySpace& m, const TernaryElement& x) {
  return m.has_blocks() ? m.norm(x) : x.coords.norm();
}

TernaryElement normalized(const TernarySpace& m, TernaryElement x) {
  const double n = element_size(m, x);
  if (n > 0.0) x.coords /= n;
  return x;
}

}  // namespace

AxiomReport check_axioms(const TernarySpace& m, std::size_t samples, std::uint64_t seed,
                         double tol) {
  AxiomReport rep;
  rep.samples = samples;
  rep.tolerance = tol;
  rep.norm_checked = m.has_blocks();
  Rng rng = make_rng(seed, 0x61786d);
  if (m.dim() > 0) {
    for (std::size_t s = 0; s < samples; ++s) {
      const TernaryElement x = normalized(m, random_element(m, rng));
      const TernaryElement y = normalized(m, random_element(m, rng));
      const TernaryElement z = normalized(m, random_element(m, rng));
      const TernaryElement u = normalized(m, random_element(m, rng));
      const TernaryElement v = normalized(m, random_element(m, rng));
      const TernaryElement lhs = triple(m, triple(m, x, y, z), u, v);
      const TernaryElement mid = triple(m, x, triple(m, u, z, y), v);
      const TernaryElement right = triple(m, x, y, triple(m, z, u, v));
      rep.associativity_middle = std::max(rep.associativity_middle, element_size(m, lhs - mid));
      rep.associativity_right = std::max(rep.associativity_right, element_size(m, lhs - right));

      const cplx lambda = random_cplx(rng);
      const TernaryElement xyz = triple(m, x, y, z);
      const TernaryElement scaled = triple(m, x, lambda * y, z);
      const double cl = element_size(m, scaled - std::conj(lambda) * xyz) / std::abs(lambda);
      rep.conjugate_linearity = std::max(rep.conjugate_linearity, cl);

      if (rep.norm_checked) {
        rep.norm_submultiplicative =
            std::max(rep.norm_submultiplicative, m.norm(xyz) - 1.0);
        rep.norm_cube = std::max(rep.norm_cube, std::abs(m.norm(triple(m, x, x, x)) - 1.0));
      }
    }
  }
  auto check = [&](double value, const char* name) {
    if (!(value <= tol)) rep.failing.emplace_back(name);
  };
  check(rep.associativity_middle, "associativity_middle");
  check(rep.associativity_right, "associativity_right");
  check(rep.conjugate_linearity, "conjugate_linearity");
  if (rep.norm_checked) {
    check(rep.norm_submultiplicative, "norm_submultiplicative");
    check(rep.norm_cube, "norm_cube");
  }
  rep.pass = rep.failing.empty();
  return rep;
}

// ---------------------------------------------------------------------------
// Cube roots

TernaryElement cube_root(const TernarySpace& m, const TernaryElement& a) {
  if (!m.has_blocks()) throw NormUnavailable("cube_root requires the block presentation");
  std::vector<CMatrix> roots;
  for (size_t b = 0; b < m.blocks().size(); ++b) {
    const CMatrix ab = m.block_matrix(a, b);
    Eigen::JacobiSVD<CMatrix> svd(ab, Eigen::ComputeThinU | Eigen::ComputeThinV);
    RVector s = svd.singularValues();
    for (Eigen::Index k = 0; k < s.size(); ++k) s(k) = std::cbrt(s(k));
    CMatrix root = svd.matrixU() * s.cast<cplx>().asDiagonal() * svd.matrixV().adjoint();
    if (m.blocks()[b].sign() < 0) root = -root;
    roots.push_back(root);
  }
  return m.from_block_matrices(roots);
}

// ---------------------------------------------------------------------------
// Zettl decomposition

TernarySpace restrict_to_subspace(const TernarySpace& m, const CMatrix& basis_coords, double tol) {
  if (basis_coords.rows() != m.dim()) throw ShapeError("restrict_to_subspace: row count");
  const Eigen::Index n = basis_coords.cols();
  StructureConstants c(n);
  if (n == 0) return TernarySpace::from_structure(c);
  const auto qr = basis_coords.completeOrthogonalDecomposition();
  std::vector<TernaryElement> el;
  for (Eigen::Index k = 0; k < n; ++k) el.emplace_back(CVector(basis_coords.col(k)));
  double scale = 1.0;
  for (const auto& e : el) scale = std::max(scale, e.coords.norm());
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      for (Eigen::Index k = 0; k < n; ++k) {
        const CVector t = triple(m, el[i], el[j], el[k]).coords;
        const CVector coords = qr.solve(t);
        if ((basis_coords * coords - t).norm() > tol * scale * scale * scale) {
          throw InvalidInput("restrict_to_subspace: subspace is not closed under the triple product");
        }
        for (Eigen::Index l = 0; l < n; ++l) c(i, j, k, l) = coords(l);
      }
    }
  }
  return TernarySpace::from_structure(std::move(c));
}

namespace {

CMatrix selection(Eigen::Index total, const std::vector<std::pair<Eigen::Index, Eigen::Index>>& ranges) {
  Eigen::Index n = 0;
  for (const auto& r : ranges) n += r.second;
  CMatrix s = CMatrix::Zero(total, n);
  Eigen::Index col = 0;
  for (const auto& [off, len] : ranges) {
    for (Eigen::Index k = 0; k < len; ++k) s(off + k, col++) = 1.0;
  }
  return s;
}

/// Newton iteration for the matrix sign function.
CMatrix matrix_sign(const CMatrix& s) {
  CMatrix x = s;
  for (int it = 0; it < 100; ++it) {
    const CMatrix next = 0.5 * (x + x.partialPivLu().inverse());
    const double delta = (next - x).norm();
    x = next;
    if (delta <= 1e-14 * x.norm()) break;
  }
  return x;
}

CMatrix range_basis(const CMatrix& p, Eigen::Index rank) {
  if (rank == 0) return CMatrix(p.rows(), 0);
  Eigen::JacobiSVD<CMatrix> svd(p, Eigen::ComputeThinU);
  return svd.matrixU().leftCols(rank);
}

}  // namespace

ZettlDecomposition zettl_decompose(const TernarySpace& m, std::uint64_t seed, double tol) {
  ZettlDecomposition out;
  const Eigen::Index d = m.dim();
  if (m.has_blocks()) {
    std::vector<SignedBlock> plus, minus;
    std::vector<std::pair<Eigen::Index, Eigen::Index>> plus_ranges, minus_ranges;
    for (size_t b = 0; b < m.blocks().size(); ++b) {
      const auto& bl = m.blocks()[b];
      if (bl.sign() > 0) {
        plus.push_back(bl);
        plus_ranges.emplace_back(m.block_offset(b), bl.dim());
      } else {
        minus.push_back(bl);
        minus_ranges.emplace_back(m.block_offset(b), bl.dim());
      }
    }
    out.plus = TernarySpace::from_blocks(std::move(plus));
    out.minus = TernarySpace::from_blocks(std::move(minus));
    out.plus_coords = selection(d, plus_ranges);
    out.minus_coords = selection(d, minus_ranges);
    return out;
  }

  if (d == 0) {
    out.plus_coords = CMatrix(0, 0);
    out.minus_coords = CMatrix(0, 0);
    return out;
  }

  Rng rng = make_rng(seed, 0x7a6574);
  const Eigen::Index budget = 8 * d;
  CMatrix s = CMatrix::Zero(d, d);
  for (Eigen::Index k = 0; k < budget; ++k) {
    CVector f = random_cvector(d, rng);
    f /= f.norm();
    const TernaryElement fe(f);
    s += right_operator(m, fe, fe);
  }
  Eigen::ComplexEigenSolver<CMatrix> es(s, false);
  const CVector ev = es.eigenvalues();
  const double top = ev.cwiseAbs().maxCoeff();
  if (top == 0.0) throw DecompositionInconclusive("zettl_decompose: r(f, f) vanished on all samples");
  Eigen::Index npos = 0;
  for (Eigen::Index i = 0; i < d; ++i) {
    if (std::abs(ev(i).imag()) > tol * top) {
      throw DecompositionInconclusive("zettl_decompose: sampled r(f, f) has non-real spectrum");
    }
    if (std::abs(ev(i).real()) <= tol * top) {
      throw DecompositionInconclusive("zettl_decompose: kernel left unresolved by the sample budget");
    }
    if (ev(i).real() > 0.0) ++npos;
  }
  const CMatrix sign = matrix_sign(s / top);
  const CMatrix id = CMatrix::Identity(d, d);
  out.plus_coords = range_basis(0.5 * (id + sign), npos);
  out.minus_coords = range_basis(0.5 * (id - sign), d - npos);
  out.plus = restrict_to_subspace(m, out.plus_coords);
  out.minus = restrict_to_subspace(m, out.minus_coords);
  return out;
}

TernarySpace opposite(const TernarySpace& m) {
  if (m.has_blocks()) {
    std::vector<SignedBlock> flipped;
    for (const auto& b : m.blocks()) flipped.push_back(b.with_sign(-b.sign()));
    return TernarySpace::from_blocks(std::move(flipped), m.name());
  }
  const auto& c = m.structure();
  std::vector<cplx> neg = c.data();
  for (auto& v : neg) v = -v;
  return TernarySpace::from_structure(StructureConstants(c.dim(), std::move(neg)), m.name());
}

StructureConstants structure_constants_of(const TernarySpace& m) {
  if (!m.has_blocks()) return m.structure();
  StructureConstants c(m.dim());
  const auto& bls = m.blocks();
  for (size_t b = 0; b < bls.size(); ++b) {
    const auto& bl = bls[b];
    const Eigen::Index off = m.block_offset(b);
    for (Eigen::Index i = 0; i < bl.dim(); ++i) {
      for (Eigen::Index j = 0; j < bl.dim(); ++j) {
        const CMatrix xy = bl.basis()[static_cast<size_t>(i)] *
                           bl.basis()[static_cast<size_t>(j)].adjoint();
        for (Eigen::Index k = 0; k < bl.dim(); ++k) {
          const CMatrix p = static_cast<double>(bl.sign()) * (xy * bl.basis()[static_cast<size_t>(k)]);
          const CVector coords = bl.to_coords(p);
          for (Eigen::Index l = 0; l < bl.dim(); ++l) c(off + i, off + j, off + k, off + l) = coords(l);
        }
      }
    }
  }
  return c;
}

// ---------------------------------------------------------------------------
// JB*-triple box operator

SpectrumReport jbstar_box_check(const TernarySpace& m, const TernaryElement& a, double tol) {
  const Eigen::Index d = m.dim();
  RMatrix op(2 * d, 2 * d);
  for (Eigen::Index k = 0; k < d; ++k) {
    for (int part = 0; part < 2; ++part) {
      CVector e = CVector::Zero(d);
      e(k) = part == 0 ? cplx(1.0, 0.0) : cplx(0.0, 1.0);
      const TernaryElement x(e);
      const CVector t = 0.5 * (triple(m, a, a, x).coords + triple(m, a, x, a).coords);
      op.block(0, part * d + k, d, 1) = t.real();
      op.block(d, part * d + k, d, 1) = t.imag();
    }
  }
  SpectrumReport rep;
  if (d == 0) {
    rep.pass = true;
    return rep;
  }
  Eigen::EigenSolver<RMatrix> es(op, false);
  const Eigen::VectorXcd ev = es.eigenvalues();
  rep.eigenvalues = ev.real();
  std::sort(rep.eigenvalues.data(), rep.eigenvalues.data() + rep.eigenvalues.size());
  rep.max_imag = ev.imag().cwiseAbs().maxCoeff();
  const double scale = std::max(1.0, ev.cwiseAbs().maxCoeff());
  rep.pass = rep.eigenvalues(0) >= -tol * scale;
  return rep;
}

}  // namespace ternlab

#include "arrlik/matrix.hpp"

#include <algorithm>

namespace arrlik {

PolyMatrix::PolyMatrix(Ring ring, std::size_t rows, std::size_t cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols),
      a_(rows * cols, Polynomial::zero(ring_)) {}

PolyMatrix::PolyMatrix(Ring ring, std::size_t rows, std::size_t cols,
                       std::vector<Polynomial> entries)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), a_(std::move(entries)) {
  if (a_.size() != rows_ * cols_) throw std::invalid_argument("matrix shape mismatch");
  for (const auto& p : a_)
    if (p.ring() != ring_) throw std::invalid_argument("matrix entry ring mismatch");
}

void PolyMatrix::set(std::size_t r, std::size_t c, Polynomial p) {
  if (p.ring() != ring_) throw std::invalid_argument("matrix entry ring mismatch");
  a_[r * cols_ + c] = std::move(p);
}

ModuleVector PolyMatrix::column(std::size_t c, const TermOrder& order) const {
  std::vector<Polynomial> comps;
  comps.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) comps.push_back(at(r, c).resorted(order));
  return ModuleVector(ring_, order, std::move(comps));
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
  PolyMatrix out(ring_, rows_, o.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < o.cols_; ++c) {
      Polynomial acc = Polynomial::zero(ring_);
      for (std::size_t k = 0; k < cols_; ++k) acc = acc + at(r, k) * o.at(k, c);
      out.set(r, c, std::move(acc));
    }
  return out;
}

bool PolyMatrix::is_zero() const {
  for (const auto& p : a_)
    if (!p.is_zero()) return false;
  return true;
}

PolyMatrix PolyMatrix::from_columns(Ring ring, std::size_t rows,
                                    const std::vector<ModuleVector>& cols) {
  PolyMatrix out(ring, rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].rank() != rows) throw std::invalid_argument("column rank mismatch");
    for (std::size_t r = 0; r < rows; ++r) out.set(r, c, cols[c][r]);
  }
  return out;
}

std::string PolyMatrix::to_string() const {
  std::string out;
  for (std::size_t r = 0; r < rows_; ++r) {
    out += "[ ";
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) out += ", ";
      out += at(r, c).to_string();
    }
    out += " ]\n";
  }
  return out;
}

PolyMatrix kernel(const PolyMatrix& Q, const GBLimits& limits, GBStats* stats) {
  const Ring& ring = Q.ring();
  const std::size_t m = Q.rows(), c = Q.cols();
  TermOrder order = default_order(ring);

  // Augment column j of Q with the j-th unit tracking vector: an element
  // of R^m (+) R^c. Block 0 = the image side, block 1 = tracking; GB
  // elements with zero image part carry syzygies in their tracking part.
  std::vector<ModuleVector> cols;
  cols.reserve(c);
  for (std::size_t j = 0; j < c; ++j) {
    std::vector<Polynomial> comps(m + c, Polynomial::zero(ring, order));
    for (std::size_t r = 0; r < m; ++r) comps[r] = Q.at(r, j).resorted(order);
    comps[m + j] = Polynomial::constant(ring, 1, order);
    cols.emplace_back(ring, order, std::move(comps));
  }

  ModuleOrder mo = ModuleOrder::tot(order);
  mo.block.assign(m + c, 1);
  for (std::size_t r = 0; r < m; ++r) mo.block[r] = 0;

  // Degree shifts making homogeneous input shift-graded: row r of the
  // image block gets -deg(column head)... shifts are only a heuristic for
  // sugar, so a simple choice works: use zero for tracking positions and
  // zero for image positions unless all columns are homogeneous.
  std::vector<ModuleVector> gb = module_gb(cols, mo, limits, stats);

  std::vector<ModuleVector> syz;
  ModuleOrder track = ModuleOrder::tot(order);
  for (const auto& v : gb) {
    bool image_zero = true;
    for (std::size_t r = 0; r < m; ++r)
      if (!v[r].is_zero()) {
        image_zero = false;
        break;
      }
    if (!image_zero) continue;
    std::vector<Polynomial> comps(v.components().begin() + m, v.components().end());
    syz.emplace_back(ring, order, std::move(comps));
  }

  // Canonical basis: inclusion-minimal generating subset, sorted by
  // degree then entries.
  syz = minimal_module_generators(std::move(syz), track, limits);
  std::sort(syz.begin(), syz.end(), [](const ModuleVector& a, const ModuleVector& b) {
    return compare_canonical(a, b) < 0;
  });

  PolyMatrix K = PolyMatrix::from_columns(ring, c, syz);
  if (!(Q * K).is_zero()) throw InternalError("kernel verification failed: Q*K != 0");
  return K;
}

std::pair<PolyMatrix, PolyMatrix> split_kernel(const PolyMatrix& K, std::size_t m,
                                               std::size_t n) {
  if (K.rows() != m + n) throw std::invalid_argument("split_kernel: row count mismatch");
  PolyMatrix A(K.ring(), m, K.cols());
  PolyMatrix B(K.ring(), n, K.cols());
  for (std::size_t c = 0; c < K.cols(); ++c) {
    for (std::size_t r = 0; r < m; ++r) A.set(r, c, K.at(r, c));
    for (std::size_t r = 0; r < n; ++r) B.set(r, c, K.at(m + r, c));
  }
  return {std::move(A), std::move(B)};
}

}  // namespace arrlik

#pragma once

#include <utility>
#include <vector>

#include "arrlik/module_gb.hpp"

namespace arrlik {

// Dense rectangular matrix of polynomials over one ring.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(Ring ring, std::size_t rows, std::size_t cols);
  PolyMatrix(Ring ring, std::size_t rows, std::size_t cols, std::vector<Polynomial> entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Ring& ring() const { return ring_; }
  const Polynomial& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, Polynomial p);

  ModuleVector column(std::size_t c, const TermOrder& order) const;
  PolyMatrix operator*(const PolyMatrix& o) const;
  bool is_zero() const;

  static PolyMatrix from_columns(Ring ring, std::size_t rows,
                                 const std::vector<ModuleVector>& cols);

  std::string to_string() const;

 private:
  Ring ring_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Polynomial> a_;
};

// Generators of {v : Q v = 0}, returned as the columns of the result.
// Computed by tracking unit vectors through a module Groebner basis whose
// leading block is the image side; the output is the canonical reduced
// basis of the syzygy module, pruned to an inclusion-minimal generating
// set and sorted deterministically. Verifies Q * K = 0 exactly.
PolyMatrix kernel(const PolyMatrix& Q, const GBLimits& limits = {}, GBStats* stats = nullptr);

// Top m rows and bottom n rows as two matrices.
std::pair<PolyMatrix, PolyMatrix> split_kernel(const PolyMatrix& K, std::size_t m, std::size_t n);

}  // namespace arrlik

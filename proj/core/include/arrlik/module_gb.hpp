#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "arrlik/polynomial.hpp"

namespace arrlik {

struct GBLimits {
  long max_pairs = 1'000'000;  // S-pairs processed before giving up
  int max_degree = 250;        // total degree of any monomial touched
};

struct GBStats {
  long pairs_processed = 0;
  long pairs_discarded = 0;
  long reductions_to_zero = 0;
  int max_degree_seen = 0;
  long basis_elements = 0;
};

// Raised when a computation exceeds its configured budget. Never a wrong
// answer: callers either enlarge the budget or report "inconclusive".
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& msg, GBStats stats)
      : std::runtime_error(msg), stats(stats) {}
  GBStats stats;
};

// A violated internal invariant (non-exact division, Q*K != 0, lost
// homogeneity). Indicates a bug, not bad input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Element of a free module R^k, stored as one polynomial per position.
// All components share one ring and one term order.
class ModuleVector {
 public:
  ModuleVector() = default;
  ModuleVector(Ring ring, TermOrder order, std::vector<Polynomial> comps);
  static ModuleVector zero(Ring ring, TermOrder order, std::size_t rank);

  std::size_t rank() const { return comps_.size(); }
  const Ring& ring() const { return ring_; }
  const TermOrder& order() const { return order_; }
  const Polynomial& operator[](std::size_t i) const { return comps_[i]; }
  const std::vector<Polynomial>& components() const { return comps_; }
  bool is_zero() const;

  ModuleVector operator+(const ModuleVector& o) const;
  ModuleVector operator-(const ModuleVector& o) const;
  ModuleVector times_term(const Rational& c, const Monomial& m) const;
  ModuleVector operator*(const Rational& c) const;

  bool operator==(const ModuleVector& o) const;

  // Max total degree over components; -1 for the zero vector.
  int total_degree() const;
  // Content-normalized across all components, positive leading coefficient.
  ModuleVector normalized(const struct ModuleOrder& mo) const;

  std::string to_string() const;  // "(x - y, 0, 1)"

 private:
  Ring ring_;
  TermOrder order_ = TermOrder::grevlex();
  std::vector<Polynomial> comps_;
};

// Order on module terms (position, monomial). Positions are grouped in
// blocks; a lower block id dominates everything in higher blocks (used to
// eliminate the leading block when extracting syzygies). Within a block:
// term-over-position (ties broken by smaller position) or position-over-term.
struct ModuleOrder {
  TermOrder base = TermOrder::grevlex();
  std::vector<int> block;  // per position; empty = all in block 0
  bool top = true;         // term-over-position if true

  static ModuleOrder tot(TermOrder base) { return {std::move(base), {}, true}; }
  static ModuleOrder pot(TermOrder base) { return {std::move(base), {}, false}; }

  int block_of(std::size_t pos) const { return block.empty() ? 0 : block[pos]; }
  // -1/0/+1 comparing module terms (m1 at pos1) vs (m2 at pos2).
  int compare(std::size_t pos1, const Monomial& m1, std::size_t pos2, const Monomial& m2) const;
};

struct ModuleTerm {
  std::size_t pos = 0;
  Monomial mono;
  Rational coeff;
};

// Leading term of a nonzero vector under mo.
ModuleTerm module_leading_term(const ModuleVector& v, const ModuleOrder& mo);

// Normal form of v against G: no surviving term is divisible (same
// position, dividing monomial) by any leading term of G.
ModuleVector module_reduce(const ModuleVector& v, const std::vector<ModuleVector>& G,
                           const ModuleOrder& mo, const GBLimits& limits = {},
                           GBStats* stats = nullptr);

// Reduced Groebner basis of the submodule generated by gens. Buchberger
// with the Gebauer-Moeller pair criteria and sugar selection. The product
// criterion is applied only for rank-1 inputs (it is not valid for
// modules). Deterministic: the reduced basis is unique for the order and
// gets a canonical sort.
std::vector<ModuleVector> module_gb(const std::vector<ModuleVector>& gens,
                                    const ModuleOrder& mo, const GBLimits& limits = {},
                                    GBStats* stats = nullptr);

// Same, with per-position degree shifts (deg of e_i := shifts[i]); feeds
// the sugar strategy and the homogeneity check for shifted-graded input.
std::vector<ModuleVector> module_gb_shifted(const std::vector<ModuleVector>& gens,
                                            const ModuleOrder& mo, const std::vector<int>& shifts,
                                            const GBLimits& limits = {}, GBStats* stats = nullptr);

bool module_member(const ModuleVector& v, const std::vector<ModuleVector>& gb,
                   const ModuleOrder& mo, const GBLimits& limits = {});

// Inclusion-minimal generating subset, selected greedily by ascending
// degree. For homogeneous inputs this has the minimal number of
// generators (graded Nakayama).
std::vector<ModuleVector> minimal_module_generators(std::vector<ModuleVector> vecs,
                                                    const ModuleOrder& mo,
                                                    const GBLimits& limits = {});

int compare_canonical(const ModuleVector& a, const ModuleVector& b);

}  // namespace arrlik

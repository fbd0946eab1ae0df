#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "arrlik/monomial.hpp"
#include "arrlik/ring.hpp"

namespace arrlik {

// Global monomial orders. All four kinds are total, multiplicative and
// have 1 as the unique minimum.
//
//   grevlex           total degree, ties by reverse lexicographic
//   lex               pure lexicographic in ring variable order
//   bigraded_grevlex  total x-degree, then total degree, then grevlex;
//                     the default on R[s] so leading terms respect the
//                     bigrading
//   block             grevlex on a masked set of variables first, then
//                     grevlex on the rest; the masked variables are
//                     eliminated by any basis computed under it
class TermOrder {
 public:
  enum class Kind : std::uint8_t { Grevlex, Lex, BigradedGrevlex, Block };

  static TermOrder grevlex() { return TermOrder(Kind::Grevlex); }
  static TermOrder lex() { return TermOrder(Kind::Lex); }
  static TermOrder bigraded_grevlex(std::size_t n_x);
  static TermOrder block(std::vector<std::uint8_t> elim_mask);

  Kind kind() const { return kind_; }
  std::size_t n_x() const { return n_x_; }
  const std::vector<std::uint8_t>& elim_mask() const { return mask_; }

  // -1, 0, +1 for a < b, a == b, a > b.
  int compare(const Monomial& a, const Monomial& b) const;

  friend bool operator==(const TermOrder&, const TermOrder&) = default;
  std::string to_string() const;

 private:
  explicit TermOrder(Kind k) : kind_(k) {}
  Kind kind_;
  std::size_t n_x_ = 0;
  std::vector<std::uint8_t> mask_;
};

// grevlex on x-only rings, bigraded_grevlex when s-variables are present.
TermOrder default_order(const Ring& ring);

}  // namespace arrlik

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "arrlik/ring.hpp"

namespace arrlik {

// Exponent vector. Length always equals the ring size; entries are
// checked against kMaxExponent so products cannot overflow silently.
class Monomial {
 public:
  using Exp = std::int32_t;
  static constexpr Exp kMaxExponent = 1 << 20;

  Monomial() = default;
  explicit Monomial(std::size_t nvars) : e_(nvars, 0), deg_(0) {}
  explicit Monomial(std::vector<Exp> exps);

  static Monomial one(std::size_t nvars) { return Monomial(nvars); }
  static Monomial variable(std::size_t nvars, std::size_t i, Exp k = 1);

  std::size_t nvars() const { return e_.size(); }
  Exp operator[](std::size_t i) const { return e_[i]; }
  Exp deg() const { return deg_; }
  // Sum of exponents over positions [lo, hi).
  Exp deg_range(std::size_t lo, std::size_t hi) const;
  bool is_one() const { return deg_ == 0; }

  Monomial operator*(const Monomial& o) const;
  bool divides(const Monomial& o) const;  // this | o
  Monomial div(const Monomial& o) const;  // this / o, exact
  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend Monomial gcd(const Monomial& a, const Monomial& b);
  friend bool coprime(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return a.e_ != b.e_; }

  Bidegree bidegree(const RingContext& ring) const;
  std::string to_string(const RingContext& ring) const;  // "x^2*y", "1"

 private:
  std::vector<Exp> e_;
  Exp deg_ = 0;
};

}  // namespace arrlik

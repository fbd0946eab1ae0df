#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "arrlik/monomial.hpp"
#include "arrlik/rational.hpp"
#include "arrlik/ring.hpp"
#include "arrlik/term_order.hpp"

namespace arrlik {

struct Term {
  Monomial mono;
  Rational coeff;
};

// Sparse multivariate polynomial with exact rational coefficients.
// Terms are kept strictly descending under the active order, so the
// leading term is terms().front(). Polynomials are immutable values;
// all operations return new objects.
class Polynomial {
 public:
  Polynomial() = default;  // invalid placeholder; use the factories

  static Polynomial zero(Ring ring);
  static Polynomial zero(Ring ring, TermOrder order);
  static Polynomial constant(Ring ring, Rational c);
  static Polynomial constant(Ring ring, Rational c, TermOrder order);
  static Polynomial variable(Ring ring, std::size_t i, Monomial::Exp k = 1);
  static Polynomial variable(Ring ring, std::size_t i, Monomial::Exp k, TermOrder order);
  // Sorts, merges equal monomials, drops zeros.
  static Polynomial from_terms(Ring ring, TermOrder order, std::vector<Term> terms);

  const Ring& ring() const { return ring_; }
  const TermOrder& order() const { return order_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t nterms() const { return terms_.size(); }
  std::span<const Term> terms() const { return terms_; }

  const Term& leading_term() const { return terms_.front(); }
  const Monomial& leading_monomial() const { return terms_.front().mono; }
  const Rational& leading_coeff() const { return terms_.front().coeff; }

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(const Rational& c) const;
  // c * m * this
  Polynomial times_term(const Rational& c, const Monomial& m) const;

  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  // Same polynomial, terms re-sorted under a different order.
  Polynomial resorted(const TermOrder& order) const;

  // -1 for the zero polynomial.
  int total_degree() const;
  // Set iff every term has the same bidegree.
  std::optional<Bidegree> bidegree() const;
  bool is_homogeneous() const;

  Polynomial partial_derivative(std::size_t var) const;

  // Content-normalized: integer coefficients, gcd 1, positive leading
  // coefficient. The zero polynomial is returned unchanged.
  Polynomial normalized() const;

  std::string to_string() const;

 private:
  Polynomial(Ring ring, TermOrder order, std::vector<Term> terms)
      : ring_(std::move(ring)), order_(std::move(order)), terms_(std::move(terms)) {}

  Ring ring_;
  TermOrder order_ = TermOrder::grevlex();
  std::vector<Term> terms_;
};

// Deterministic total order on polynomials over one ring (degree, then
// leading terms under the default order, then coefficients). Used to make
// generator lists reproducible.
int compare_canonical(const Polynomial& a, const Polynomial& b);

// Substitutes images[i] for variable i; images live in the target ring.
Polynomial substitute(const Polynomial& f, const Ring& target,
                      const std::vector<Polynomial>& images);

// Maps f into a ring that contains all of f's variables by name.
Polynomial map_to_ring(const Polynomial& f, const Ring& target);
Polynomial map_to_ring(const Polynomial& f, const Ring& target, const TermOrder& order);

}  // namespace arrlik

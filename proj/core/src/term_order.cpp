#include "arrlik/term_order.hpp"

#include <stdexcept>

namespace arrlik {

namespace {

// grevlex: higher degree wins; equal degree, the last nonzero entry of
// a - b negative means a > b.
int grevlex_cmp(const Monomial& a, const Monomial& b) {
  if (a.deg() != b.deg()) return a.deg() < b.deg() ? -1 : 1;
  for (std::size_t i = a.nvars(); i-- > 0;) {
    Monomial::Exp d = a[i] - b[i];
    if (d != 0) return d < 0 ? 1 : -1;
  }
  return 0;
}

int lex_cmp(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.nvars(); ++i) {
    Monomial::Exp d = a[i] - b[i];
    if (d != 0) return d > 0 ? 1 : -1;
  }
  return 0;
}

// grevlex restricted to the positions selected by mask (take ? 1 : 0).
int masked_grevlex_cmp(const Monomial& a, const Monomial& b,
                       const std::vector<std::uint8_t>& mask, std::uint8_t take) {
  Monomial::Exp da = 0, db = 0;
  for (std::size_t i = 0; i < a.nvars(); ++i) {
    if (mask[i] == take) {
      da += a[i];
      db += b[i];
    }
  }
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = a.nvars(); i-- > 0;) {
    if (mask[i] != take) continue;
    Monomial::Exp d = a[i] - b[i];
    if (d != 0) return d < 0 ? 1 : -1;
  }
  return 0;
}

}  // namespace

TermOrder TermOrder::bigraded_grevlex(std::size_t n_x) {
  TermOrder t(Kind::BigradedGrevlex);
  t.n_x_ = n_x;
  return t;
}

TermOrder TermOrder::block(std::vector<std::uint8_t> elim_mask) {
  TermOrder t(Kind::Block);
  t.mask_ = std::move(elim_mask);
  return t;
}

int TermOrder::compare(const Monomial& a, const Monomial& b) const {
  if (a.nvars() != b.nvars()) throw std::invalid_argument("monomial length mismatch");
  switch (kind_) {
    case Kind::Grevlex:
      return grevlex_cmp(a, b);
    case Kind::Lex:
      return lex_cmp(a, b);
    case Kind::BigradedGrevlex: {
      Monomial::Exp ax = a.deg_range(0, n_x_), bx = b.deg_range(0, n_x_);
      if (ax != bx) return ax < bx ? -1 : 1;
      return grevlex_cmp(a, b);
    }
    case Kind::Block: {
      if (mask_.size() != a.nvars()) throw std::invalid_argument("block mask length mismatch");
      int c = masked_grevlex_cmp(a, b, mask_, 1);
      if (c != 0) return c;
      return masked_grevlex_cmp(a, b, mask_, 0);
    }
  }
  return 0;
}

std::string TermOrder::to_string() const {
  switch (kind_) {
    case Kind::Grevlex: return "grevlex";
    case Kind::Lex: return "lex";
    case Kind::BigradedGrevlex: return "bigraded-grevlex";
    case Kind::Block: return "block";
  }
  return "?";
}

TermOrder default_order(const Ring& ring) {
  if (ring->n_s() > 0) return TermOrder::bigraded_grevlex(ring->n_x());
  return TermOrder::grevlex();
}

}  // namespace arrlik

#include "arrlik/polynomial.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace arrlik {

namespace {

void require_same_ring(const Polynomial& a, const Polynomial& b) {
  if (a.ring() != b.ring()) throw std::invalid_argument("ring mismatch");
}

// Sorts descending, merges equal monomials, drops zero coefficients.
std::vector<Term> canonicalize(const TermOrder& order, std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
    return order.compare(a.mono, b.mono) > 0;
  });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff += t.coeff;
      if (sign(out.back().coeff) == 0) out.pop_back();
    } else if (sign(t.coeff) != 0) {
      out.push_back(std::move(t));
    }
  }
  return out;
}

}  // namespace

Polynomial Polynomial::zero(Ring ring) {
  TermOrder o = default_order(ring);
  return zero(std::move(ring), o);
}

Polynomial Polynomial::zero(Ring ring, TermOrder order) {
  return Polynomial(std::move(ring), std::move(order), {});
}

Polynomial Polynomial::constant(Ring ring, Rational c) {
  TermOrder o = default_order(ring);
  return constant(std::move(ring), std::move(c), o);
}

Polynomial Polynomial::constant(Ring ring, Rational c, TermOrder order) {
  c.canonicalize();
  std::vector<Term> t;
  if (sign(c) != 0) t.push_back({Monomial::one(ring->size()), std::move(c)});
  return Polynomial(std::move(ring), std::move(order), std::move(t));
}

Polynomial Polynomial::variable(Ring ring, std::size_t i, Monomial::Exp k) {
  TermOrder o = default_order(ring);
  return variable(std::move(ring), i, k, o);
}

Polynomial Polynomial::variable(Ring ring, std::size_t i, Monomial::Exp k, TermOrder order) {
  if (i >= ring->size()) throw std::invalid_argument("variable index out of range");
  if (k == 0) return constant(std::move(ring), 1, std::move(order));
  std::vector<Term> t{{Monomial::variable(ring->size(), i, k), Rational(1)}};
  return Polynomial(std::move(ring), std::move(order), std::move(t));
}

Polynomial Polynomial::from_terms(Ring ring, TermOrder order, std::vector<Term> terms) {
  for (auto& t : terms) {
    if (t.mono.nvars() != ring->size())
      throw std::invalid_argument("term length does not match ring");
    t.coeff.canonicalize();
  }
  auto ts = canonicalize(order, std::move(terms));
  return Polynomial(std::move(ring), std::move(order), std::move(ts));
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  require_same_ring(*this, o);
  const Polynomial& rhs = (o.order_ == order_) ? o : o.resorted(order_);
  std::vector<Term> out;
  out.reserve(terms_.size() + rhs.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < rhs.terms_.size()) {
    int c = order_.compare(terms_[i].mono, rhs.terms_[j].mono);
    if (c > 0) {
      out.push_back(terms_[i++]);
    } else if (c < 0) {
      out.push_back(rhs.terms_[j++]);
    } else {
      Rational s = terms_[i].coeff + rhs.terms_[j].coeff;
      if (sign(s) != 0) out.push_back({terms_[i].mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < terms_.size(); ++i) out.push_back(terms_[i]);
  for (; j < rhs.terms_.size(); ++j) out.push_back(rhs.terms_[j]);
  return Polynomial(ring_, order_, std::move(out));
}

Polynomial Polynomial::operator-() const {
  std::vector<Term> out = terms_;
  for (auto& t : out) t.coeff = -t.coeff;
  return Polynomial(ring_, order_, std::move(out));
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  require_same_ring(*this, o);
  if (is_zero() || o.is_zero()) return zero(ring_, order_);
  std::vector<Term> prods;
  prods.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_)
    for (const auto& b : o.terms_) {
      Rational c = a.coeff * b.coeff;
      prods.push_back({a.mono * b.mono, std::move(c)});
    }
  return Polynomial(ring_, order_, canonicalize(order_, std::move(prods)));
}

Polynomial Polynomial::operator*(const Rational& c) const {
  if (sign(c) == 0) return zero(ring_, order_);
  std::vector<Term> out = terms_;
  for (auto& t : out) {
    t.coeff *= c;
  }
  return Polynomial(ring_, order_, std::move(out));
}

Polynomial Polynomial::times_term(const Rational& c, const Monomial& m) const {
  if (sign(c) == 0) return zero(ring_, order_);
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Rational cc = t.coeff * c;
    out.push_back({t.mono * m, std::move(cc)});
  }
  // Multiplication by a monomial preserves relative order.
  return Polynomial(ring_, order_, std::move(out));
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (ring_ != o.ring_) return false;
  const Polynomial& rhs = (o.order_ == order_) ? o : o.resorted(order_);
  if (terms_.size() != rhs.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].mono != rhs.terms_[i].mono || terms_[i].coeff != rhs.terms_[i].coeff)
      return false;
  return true;
}

Polynomial Polynomial::resorted(const TermOrder& order) const {
  if (order == order_) return *this;
  std::vector<Term> ts = terms_;
  std::sort(ts.begin(), ts.end(), [&](const Term& a, const Term& b) {
    return order.compare(a.mono, b.mono) > 0;
  });
  return Polynomial(ring_, order, std::move(ts));
}

int Polynomial::total_degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.mono.deg()));
  return d;
}

std::optional<Bidegree> Polynomial::bidegree() const {
  if (is_zero()) return Bidegree{0, 0};
  Bidegree d = terms_.front().mono.bidegree(*ring_);
  for (const auto& t : terms_)
    if (!(t.mono.bidegree(*ring_) == d)) return std::nullopt;
  return d;
}

bool Polynomial::is_homogeneous() const {
  if (is_zero()) return true;
  auto d = terms_.front().mono.deg();
  for (const auto& t : terms_)
    if (t.mono.deg() != d) return false;
  return true;
}

Polynomial Polynomial::partial_derivative(std::size_t var) const {
  if (var >= ring_->size()) throw std::invalid_argument("unknown variable");
  std::vector<Term> out;
  for (const auto& t : terms_) {
    Monomial::Exp e = t.mono[var];
    if (e == 0) continue;
    std::vector<Monomial::Exp> exps(ring_->size());
    for (std::size_t i = 0; i < ring_->size(); ++i) exps[i] = t.mono[i];
    exps[var] -= 1;
    Rational c = t.coeff * e;
    out.push_back({Monomial(std::move(exps)), std::move(c)});
  }
  return from_terms(ring_, order_, std::move(out));
}

Polynomial Polynomial::normalized() const {
  if (is_zero()) return *this;
  Integer den(1), num(0);
  for (const auto& t : terms_) {
    den = lcm(den, denominator(t.coeff));
    num = gcd(num, numerator(t.coeff));
  }
  Rational scale(den, num);
  scale.canonicalize();
  if (sign(leading_coeff()) < 0) scale = -scale;
  if (scale == 1) return *this;
  return *this * scale;
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  const Polynomial p = resorted(default_order(ring_));
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    Rational c = t.coeff;
    bool neg = sign(c) < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) out += "-";
      first = false;
    } else {
      out += neg ? " - " : " + ";
    }
    std::string cs = arrlik::to_string(c);
    if (t.mono.is_one()) {
      out += cs;
    } else if (c == 1) {
      out += t.mono.to_string(*p.ring());
    } else {
      out += cs + "*" + t.mono.to_string(*p.ring());
    }
  }
  return out;
}

int compare_canonical(const Polynomial& a, const Polynomial& b) {
  if (a.ring() != b.ring()) throw std::invalid_argument("ring mismatch");
  int da = a.total_degree(), db = b.total_degree();
  if (da != db) return da < db ? -1 : 1;
  TermOrder ord = default_order(a.ring());
  const Polynomial pa = a.resorted(ord), pb = b.resorted(ord);
  auto ta = pa.terms(), tb = pb.terms();
  for (std::size_t i = 0; i < std::min(ta.size(), tb.size()); ++i) {
    int c = ord.compare(ta[i].mono, tb[i].mono);
    if (c != 0) return c;
    if (ta[i].coeff != tb[i].coeff) return ta[i].coeff < tb[i].coeff ? -1 : 1;
  }
  if (ta.size() != tb.size()) return ta.size() < tb.size() ? -1 : 1;
  return 0;
}

Polynomial substitute(const Polynomial& f, const Ring& target,
                      const std::vector<Polynomial>& images) {
  if (images.size() != f.ring()->size())
    throw std::invalid_argument("substitute: one image per variable required");
  TermOrder ord = default_order(target);
  Polynomial acc = Polynomial::zero(target, ord);
  for (const auto& t : f.terms()) {
    Polynomial part = Polynomial::constant(target, t.coeff, ord);
    for (std::size_t i = 0; i < images.size(); ++i) {
      for (Monomial::Exp k = 0; k < t.mono[i]; ++k) part = part * images[i];
    }
    acc = acc + part;
  }
  return acc;
}

Polynomial map_to_ring(const Polynomial& f, const Ring& target) {
  return map_to_ring(f, target, default_order(target));
}

Polynomial map_to_ring(const Polynomial& f, const Ring& target, const TermOrder& order) {
  if (f.ring() == target) return f.resorted(order);
  std::vector<std::size_t> where(f.ring()->size());
  for (std::size_t i = 0; i < f.ring()->size(); ++i) {
    auto j = target->find(f.ring()->name(i));
    if (!j) throw std::invalid_argument("map_to_ring: variable " + f.ring()->name(i) +
                                        " missing in target ring");
    where[i] = *j;
  }
  std::vector<Term> out;
  out.reserve(f.nterms());
  for (const auto& t : f.terms()) {
    std::vector<Monomial::Exp> exps(target->size(), 0);
    for (std::size_t i = 0; i < f.ring()->size(); ++i) exps[where[i]] = t.mono[i];
    out.push_back({Monomial(std::move(exps)), t.coeff});
  }
  return Polynomial::from_terms(target, order, std::move(out));
}

}  // namespace arrlik

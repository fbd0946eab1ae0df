#include "arrlik/monomial.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace arrlik {

namespace {
void check_exponent(Monomial::Exp e) {
  if (e < 0) throw std::invalid_argument("negative exponent");
  if (e > Monomial::kMaxExponent) throw std::overflow_error("exponent overflow");
}
}  // namespace

Monomial::Monomial(std::vector<Exp> exps) : e_(std::move(exps)) {
  long long d = 0;
  for (Exp e : e_) {
    check_exponent(e);
    d += e;
  }
  if (d > kMaxExponent) throw std::overflow_error("degree overflow");
  deg_ = static_cast<Exp>(d);
}

Monomial Monomial::variable(std::size_t nvars, std::size_t i, Exp k) {
  check_exponent(k);
  Monomial m(nvars);
  m.e_[i] = k;
  m.deg_ = k;
  return m;
}

Monomial::Exp Monomial::deg_range(std::size_t lo, std::size_t hi) const {
  Exp d = 0;
  for (std::size_t i = lo; i < hi; ++i) d += e_[i];
  return d;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r(nvars());
  long long d = 0;
  for (std::size_t i = 0; i < nvars(); ++i) {
    r.e_[i] = e_[i] + o.e_[i];
    check_exponent(r.e_[i]);
    d += r.e_[i];
  }
  if (d > kMaxExponent) throw std::overflow_error("degree overflow");
  r.deg_ = static_cast<Exp>(d);
  return r;
}

bool Monomial::divides(const Monomial& o) const {
  if (deg_ > o.deg_) return false;
  for (std::size_t i = 0; i < nvars(); ++i)
    if (e_[i] > o.e_[i]) return false;
  return true;
}

Monomial Monomial::div(const Monomial& o) const {
  Monomial r(nvars());
  for (std::size_t i = 0; i < nvars(); ++i) {
    r.e_[i] = e_[i] - o.e_[i];
    if (r.e_[i] < 0) throw std::invalid_argument("non-exact monomial division");
  }
  r.deg_ = deg_ - o.deg_;
  return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r(a.nvars());
  Monomial::Exp d = 0;
  for (std::size_t i = 0; i < a.nvars(); ++i) {
    r.e_[i] = std::max(a.e_[i], b.e_[i]);
    d += r.e_[i];
  }
  r.deg_ = d;
  return r;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  Monomial r(a.nvars());
  Monomial::Exp d = 0;
  for (std::size_t i = 0; i < a.nvars(); ++i) {
    r.e_[i] = std::min(a.e_[i], b.e_[i]);
    d += r.e_[i];
  }
  r.deg_ = d;
  return r;
}

bool coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.nvars(); ++i)
    if (a.e_[i] > 0 && b.e_[i] > 0) return false;
  return true;
}

Bidegree Monomial::bidegree(const RingContext& ring) const {
  Bidegree d;
  for (std::size_t i = 0; i < nvars(); ++i) {
    if (e_[i] == 0) continue;
    switch (ring.kind(i)) {
      case VarKind::X: d.dx += e_[i]; break;
      case VarKind::S: d.ds += e_[i]; break;
      case VarKind::Aux: break;
    }
  }
  return d;
}

std::string Monomial::to_string(const RingContext& ring) const {
  if (is_one()) return "1";
  std::string out;
  for (std::size_t i = 0; i < nvars(); ++i) {
    if (e_[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += ring.name(i);
    if (e_[i] > 1) out += "^" + std::to_string(e_[i]);
  }
  return out;
}

}  // namespace arrlik

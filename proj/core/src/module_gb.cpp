#include "arrlik/module_gb.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <tuple>

namespace arrlik {

ModuleVector::ModuleVector(Ring ring, TermOrder order, std::vector<Polynomial> comps)
    : ring_(std::move(ring)), order_(std::move(order)), comps_(std::move(comps)) {
  for (auto& c : comps_) {
    if (c.ring() != ring_) throw std::invalid_argument("module component ring mismatch");
    if (!(c.order() == order_)) c = c.resorted(order_);
  }
}

ModuleVector ModuleVector::zero(Ring ring, TermOrder order, std::size_t rank) {
  std::vector<Polynomial> comps(rank, Polynomial::zero(ring, order));
  return ModuleVector(std::move(ring), std::move(order), std::move(comps));
}

bool ModuleVector::is_zero() const {
  for (const auto& c : comps_)
    if (!c.is_zero()) return false;
  return true;
}

ModuleVector ModuleVector::operator+(const ModuleVector& o) const {
  if (rank() != o.rank()) throw std::invalid_argument("module rank mismatch");
  std::vector<Polynomial> out;
  out.reserve(rank());
  for (std::size_t i = 0; i < rank(); ++i) out.push_back(comps_[i] + o.comps_[i]);
  return ModuleVector(ring_, order_, std::move(out));
}

ModuleVector ModuleVector::operator-(const ModuleVector& o) const {
  if (rank() != o.rank()) throw std::invalid_argument("module rank mismatch");
  std::vector<Polynomial> out;
  out.reserve(rank());
  for (std::size_t i = 0; i < rank(); ++i) out.push_back(comps_[i] - o.comps_[i]);
  return ModuleVector(ring_, order_, std::move(out));
}

ModuleVector ModuleVector::times_term(const Rational& c, const Monomial& m) const {
  std::vector<Polynomial> out;
  out.reserve(rank());
  for (const auto& p : comps_) out.push_back(p.times_term(c, m));
  return ModuleVector(ring_, order_, std::move(out));
}

ModuleVector ModuleVector::operator*(const Rational& c) const {
  std::vector<Polynomial> out;
  out.reserve(rank());
  for (const auto& p : comps_) out.push_back(p * c);
  return ModuleVector(ring_, order_, std::move(out));
}

bool ModuleVector::operator==(const ModuleVector& o) const {
  if (rank() != o.rank()) return false;
  for (std::size_t i = 0; i < rank(); ++i)
    if (comps_[i] != o.comps_[i]) return false;
  return true;
}

int ModuleVector::total_degree() const {
  int d = -1;
  for (const auto& c : comps_) d = std::max(d, c.total_degree());
  return d;
}

ModuleVector ModuleVector::normalized(const ModuleOrder& mo) const {
  if (is_zero()) return *this;
  Integer den(1), num(0);
  for (const auto& p : comps_)
    for (const auto& t : p.terms()) {
      den = lcm(den, denominator(t.coeff));
      num = gcd(num, numerator(t.coeff));
    }
  Rational scale(den, num);
  scale.canonicalize();
  if (sign(module_leading_term(*this, mo).coeff) < 0) scale = -scale;
  if (scale == 1) return *this;
  return *this * scale;
}

std::string ModuleVector::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < rank(); ++i) {
    if (i) out += ", ";
    out += comps_[i].to_string();
  }
  return out + ")";
}

int ModuleOrder::compare(std::size_t pos1, const Monomial& m1, std::size_t pos2,
                         const Monomial& m2) const {
  int b1 = block_of(pos1), b2 = block_of(pos2);
  if (b1 != b2) return b1 < b2 ? 1 : -1;  // earlier block dominates
  if (top) {
    int c = base.compare(m1, m2);
    if (c != 0) return c;
    if (pos1 != pos2) return pos1 < pos2 ? 1 : -1;
    return 0;
  }
  if (pos1 != pos2) return pos1 < pos2 ? 1 : -1;
  return base.compare(m1, m2);
}

ModuleTerm module_leading_term(const ModuleVector& v, const ModuleOrder& mo) {
  const Monomial* best_m = nullptr;
  std::size_t best_pos = 0;
  for (std::size_t i = 0; i < v.rank(); ++i) {
    if (v[i].is_zero()) continue;
    const Monomial& m = v[i].leading_monomial();
    if (!best_m || mo.compare(i, m, best_pos, *best_m) < 0) {
      best_m = &m;
      best_pos = i;
    }
  }
  if (!best_m) throw std::invalid_argument("leading term of zero vector");
  return {best_pos, *best_m, v[best_pos].leading_coeff()};
}

namespace {

struct Entry {
  ModuleVector v;
  ModuleTerm lt;
  int sugar = 0;
};

Entry make_entry(ModuleVector v, const ModuleOrder& mo, const std::vector<int>& shifts) {
  Entry e{std::move(v), {}, 0};
  e.lt = module_leading_term(e.v, mo);
  int s = -1;
  for (std::size_t i = 0; i < e.v.rank(); ++i) {
    if (e.v[i].is_zero()) continue;
    int shift = shifts.empty() ? 0 : shifts[i];
    s = std::max(s, e.v[i].total_degree() + shift);
  }
  e.sugar = s;
  return e;
}

void check_degree(int deg, const GBLimits& limits, GBStats& stats) {
  stats.max_degree_seen = std::max(stats.max_degree_seen, deg);
  if (deg > limits.max_degree)
    throw BudgetExceeded("degree budget exceeded (" + std::to_string(deg) + " > " +
                             std::to_string(limits.max_degree) + ")",
                         stats);
}

// One top-reduction pass: cancel the leading term of v while possible.
// Returns the (possibly zero) remainder whose leading term divides no
// basis leading term; lower-order terms are not touched.
ModuleVector top_reduce(ModuleVector v, const std::vector<Entry>& basis, const ModuleOrder& mo,
                        const GBLimits& limits, GBStats& stats, int* sugar) {
  while (!v.is_zero()) {
    ModuleTerm lt = module_leading_term(v, mo);
    check_degree(lt.mono.deg(), limits, stats);
    bool hit = false;
    for (const auto& g : basis) {
      if (g.lt.pos != lt.pos || !g.lt.mono.divides(lt.mono)) continue;
      Monomial q = lt.mono.div(g.lt.mono);
      Rational c = lt.coeff / g.lt.coeff;
      v = v - g.v.times_term(c, q);
      if (sugar) *sugar = std::max(*sugar, g.sugar + static_cast<int>(q.deg()));
      hit = true;
      break;
    }
    if (!hit) break;
  }
  return v;
}

// Full normal form: iterate top reduction over the tail as well.
ModuleVector full_reduce(const ModuleVector& v, const std::vector<Entry>& basis,
                         const ModuleOrder& mo, const GBLimits& limits, GBStats& stats) {
  ModuleVector rest = v;
  ModuleVector result = ModuleVector::zero(v.ring(), v.order(), v.rank());
  while (!rest.is_zero()) {
    rest = top_reduce(std::move(rest), basis, mo, limits, stats, nullptr);
    if (rest.is_zero()) break;
    // Move the irreducible leading term into the result.
    ModuleTerm lt = module_leading_term(rest, mo);
    std::vector<Polynomial> unit(rest.rank(), Polynomial::zero(v.ring(), v.order()));
    unit[lt.pos] = Polynomial::from_terms(v.ring(), v.order(), {{lt.mono, lt.coeff}});
    ModuleVector head(v.ring(), v.order(), std::move(unit));
    result = result + head;
    rest = rest - head;
  }
  return result;
}

struct Pair {
  std::size_t i, j;
  Monomial lcm_m;
  std::size_t pos;
  int sugar;
};

struct PairKey {
  int sugar;
  Monomial::Exp deg;
  std::size_t i, j;
  bool operator<(const PairKey& o) const {
    return std::tie(sugar, deg, j, i) < std::tie(o.sugar, o.deg, o.j, o.i);
  }
};

class PairSet {
 public:
  void insert(Pair p) {
    PairKey k{p.sugar, p.lcm_m.deg(), p.i, p.j};
    q_.emplace(k, std::move(p));
  }
  bool empty() const { return q_.empty(); }
  std::size_t size() const { return q_.size(); }
  Pair pop() {
    auto it = q_.begin();
    Pair p = std::move(it->second);
    q_.erase(it);
    return p;
  }
  template <class Fn>
  void erase_if(Fn fn) {
    for (auto it = q_.begin(); it != q_.end();) {
      if (fn(it->second))
        it = q_.erase(it);
      else
        ++it;
    }
  }

 private:
  std::multimap<PairKey, Pair> q_;
};

int pair_sugar(const Entry& a, const Entry& b, const Monomial& l) {
  int sa = a.sugar + static_cast<int>(l.deg() - a.lt.mono.deg());
  int sb = b.sugar + static_cast<int>(l.deg() - b.lt.mono.deg());
  return std::max(sa, sb);
}

// Gebauer-Moeller update: add element t to the basis, maintaining the
// pair set. The product (coprime) criterion is only used in rank one.
void update_pairs(PairSet& pairs, std::vector<Entry>& basis, std::size_t t, bool rank_one,
                  GBStats& stats) {
  const Entry& gt = basis[t];
  struct Cand {
    std::size_t i;
    Monomial l;
    bool coprime_lt;
  };
  std::vector<Cand> cands;
  for (std::size_t i = 0; i < t; ++i) {
    if (basis[i].lt.pos != gt.lt.pos) continue;
    Monomial l = lcm(basis[i].lt.mono, gt.lt.mono);
    bool cp = rank_one && coprime(basis[i].lt.mono, gt.lt.mono);
    cands.push_back({i, std::move(l), cp});
  }

  // Criterion M: drop candidates whose lcm is a strict multiple of
  // another candidate's lcm.
  std::vector<bool> keep(cands.size(), true);
  for (std::size_t a = 0; a < cands.size(); ++a) {
    if (!keep[a]) continue;
    for (std::size_t b = 0; b < cands.size(); ++b) {
      if (a == b || !keep[a]) continue;
      if (!keep[b]) continue;
      if (cands[b].l.divides(cands[a].l) && cands[b].l != cands[a].l) keep[a] = false;
    }
  }
  // Criterion F: among equal lcms keep one, preferring a coprime pair
  // (which criterion B then deletes).
  for (std::size_t a = 0; a < cands.size(); ++a) {
    if (!keep[a]) continue;
    for (std::size_t b = a + 1; b < cands.size(); ++b) {
      if (!keep[b] || cands[a].l != cands[b].l) continue;
      if (cands[b].coprime_lt)
        keep[a] = false;
      else
        keep[b] = false;
    }
  }
  // Criterion B (product): coprime leading monomials reduce to zero.
  for (std::size_t a = 0; a < cands.size(); ++a) {
    if (keep[a] && cands[a].coprime_lt) {
      keep[a] = false;
      ++stats.pairs_discarded;
    }
  }

  // Prune old pairs made redundant by the newcomer (chain criterion).
  pairs.erase_if([&](const Pair& p) {
    if (p.pos != gt.lt.pos) return false;
    if (!gt.lt.mono.divides(p.lcm_m)) return false;
    Monomial li = lcm(basis[p.i].lt.mono, gt.lt.mono);
    Monomial lj = lcm(basis[p.j].lt.mono, gt.lt.mono);
    if (li == p.lcm_m || lj == p.lcm_m) return false;
    ++stats.pairs_discarded;
    return true;
  });

  for (std::size_t a = 0; a < cands.size(); ++a) {
    if (!keep[a]) {
      continue;
    }
    Pair p{cands[a].i, t, cands[a].l, gt.lt.pos,
           pair_sugar(basis[cands[a].i], gt, cands[a].l)};
    pairs.insert(std::move(p));
  }
}

ModuleVector s_vector(const Entry& a, const Entry& b, const Monomial& l) {
  Monomial qa = l.div(a.lt.mono);
  Monomial qb = l.div(b.lt.mono);
  Rational ca = Rational(1) / a.lt.coeff;
  Rational cb = Rational(1) / b.lt.coeff;
  return a.v.times_term(ca, qa) - b.v.times_term(cb, qb);
}

// Shift-aware homogeneity: every component degree + its shift equal.
bool is_shift_homogeneous(const ModuleVector& v, const std::vector<int>& shifts) {
  int d = std::numeric_limits<int>::min();
  for (std::size_t i = 0; i < v.rank(); ++i) {
    const auto& p = v[i];
    if (p.is_zero()) continue;
    if (!p.is_homogeneous()) return false;
    int di = p.total_degree() + (shifts.empty() ? 0 : shifts[i]);
    if (d == std::numeric_limits<int>::min())
      d = di;
    else if (d != di)
      return false;
  }
  return true;
}

std::vector<Entry> buchberger(const std::vector<ModuleVector>& gens, const ModuleOrder& mo,
                              const GBLimits& limits, GBStats& stats,
                              const std::vector<int>& shifts) {
  std::vector<ModuleVector> input;
  for (const auto& g : gens)
    if (!g.is_zero()) input.push_back(g.normalized(mo));
  std::sort(input.begin(), input.end(),
            [&](const ModuleVector& a, const ModuleVector& b) {
              return compare_canonical(a, b) < 0;
            });

  bool homogeneous = true;
  for (const auto& g : input)
    if (!is_shift_homogeneous(g, shifts)) {
      homogeneous = false;
      break;
    }

  std::vector<Entry> basis;
  PairSet pairs;
  bool rank_one = !input.empty() && input.front().rank() == 1;
  for (auto& g : input) {
    basis.push_back(make_entry(std::move(g), mo, shifts));
    update_pairs(pairs, basis, basis.size() - 1, rank_one, stats);
  }

  while (!pairs.empty()) {
    Pair p = pairs.pop();
    if (++stats.pairs_processed > limits.max_pairs)
      throw BudgetExceeded("pair budget exceeded", stats);
    check_degree(p.lcm_m.deg(), limits, stats);
    ModuleVector s = s_vector(basis[p.i], basis[p.j], p.lcm_m);
    int sugar = p.sugar;
    ModuleVector h = top_reduce(std::move(s), basis, mo, limits, stats, &sugar);
    if (h.is_zero()) {
      ++stats.reductions_to_zero;
      continue;
    }
    h = h.normalized(mo);
    if (homogeneous && !is_shift_homogeneous(h, shifts))
      throw InternalError("homogeneity lost during module reduction");
    Entry e = make_entry(std::move(h), mo, shifts);
    e.sugar = std::max(e.sugar, sugar);
    basis.push_back(std::move(e));
    update_pairs(pairs, basis, basis.size() - 1, rank_one, stats);
  }
  stats.basis_elements = static_cast<long>(basis.size());
  return basis;
}

std::vector<ModuleVector> interreduce(std::vector<Entry> basis, const ModuleOrder& mo,
                                      const GBLimits& limits, GBStats& stats) {
  // Minimalize: drop elements whose leading term is divisible by another's.
  std::vector<bool> keep(basis.size(), true);
  for (std::size_t a = 0; a < basis.size(); ++a) {
    for (std::size_t b = 0; b < basis.size() && keep[a]; ++b) {
      if (a == b || !keep[b]) continue;
      if (basis[b].lt.pos == basis[a].lt.pos && basis[b].lt.mono.divides(basis[a].lt.mono)) {
        if (basis[b].lt.mono == basis[a].lt.mono && b > a) continue;  // keep the earlier one
        keep[a] = false;
      }
    }
  }
  std::vector<Entry> kept;
  for (std::size_t a = 0; a < basis.size(); ++a)
    if (keep[a]) kept.push_back(std::move(basis[a]));

  // Tail-reduce every element against the others.
  std::vector<ModuleVector> out;
  for (std::size_t a = 0; a < kept.size(); ++a) {
    std::vector<Entry> others;
    for (std::size_t b = 0; b < kept.size(); ++b)
      if (b != a) others.push_back(kept[b]);
    ModuleVector r = full_reduce(kept[a].v, others, mo, limits, stats);
    if (!r.is_zero()) out.push_back(r.normalized(mo));
  }
  std::sort(out.begin(), out.end(), [&](const ModuleVector& x, const ModuleVector& y) {
    return compare_canonical(x, y) < 0;
  });
  return out;
}

}  // namespace

ModuleVector module_reduce(const ModuleVector& v, const std::vector<ModuleVector>& G,
                           const ModuleOrder& mo, const GBLimits& limits, GBStats* stats) {
  GBStats local;
  GBStats& st = stats ? *stats : local;
  std::vector<Entry> basis;
  basis.reserve(G.size());
  for (const auto& g : G)
    if (!g.is_zero()) basis.push_back(make_entry(g, mo, {}));
  return full_reduce(v, basis, mo, limits, st);
}

std::vector<ModuleVector> module_gb(const std::vector<ModuleVector>& gens, const ModuleOrder& mo,
                                    const GBLimits& limits, GBStats* stats) {
  return module_gb_shifted(gens, mo, {}, limits, stats);
}

std::vector<ModuleVector> module_gb_shifted(const std::vector<ModuleVector>& gens,
                                            const ModuleOrder& mo, const std::vector<int>& shifts,
                                            const GBLimits& limits, GBStats* stats) {
  GBStats local;
  GBStats& st = stats ? *stats : local;
  if (gens.empty()) return {};
  auto basis = buchberger(gens, mo, limits, st, shifts);
  return interreduce(std::move(basis), mo, limits, st);
}

bool module_member(const ModuleVector& v, const std::vector<ModuleVector>& gb,
                   const ModuleOrder& mo, const GBLimits& limits) {
  return module_reduce(v, gb, mo, limits).is_zero();
}

std::vector<ModuleVector> minimal_module_generators(std::vector<ModuleVector> vecs,
                                                    const ModuleOrder& mo,
                                                    const GBLimits& limits) {
  std::vector<ModuleVector> nonzero;
  for (auto& v : vecs)
    if (!v.is_zero()) nonzero.push_back(v.normalized(mo));
  std::sort(nonzero.begin(), nonzero.end(), [&](const ModuleVector& a, const ModuleVector& b) {
    return compare_canonical(a, b) < 0;
  });
  std::vector<ModuleVector> kept;
  for (const auto& v : nonzero) {
    if (!kept.empty()) {
      auto gb = module_gb(kept, mo, limits);
      if (module_member(v, gb, mo, limits)) continue;
    }
    kept.push_back(v);
  }
  return kept;
}

int compare_canonical(const ModuleVector& a, const ModuleVector& b) {
  if (a.rank() != b.rank()) throw std::invalid_argument("module rank mismatch");
  int da = a.total_degree(), db = b.total_degree();
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = 0; i < a.rank(); ++i) {
    int c = compare_canonical(a[i], b[i]);
    if (c != 0) return c;
  }
  return 0;
}

}  // namespace arrlik

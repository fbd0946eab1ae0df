#include "arrlik/groebner.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace arrlik {

namespace {

ModuleVector wrap(const Polynomial& f, const TermOrder& order) {
  return ModuleVector(f.ring(), order, {f.resorted(order)});
}

std::vector<ModuleVector> wrap_all(std::span<const Polynomial> fs, const TermOrder& order,
                                   const Ring& ring) {
  std::vector<ModuleVector> out;
  out.reserve(fs.size());
  for (const auto& f : fs) {
    if (f.ring() != ring) throw std::invalid_argument("ring mismatch");
    out.push_back(wrap(f, order));
  }
  return out;
}

Polynomial unwrap(const ModuleVector& v) { return v[0]; }

}  // namespace

Polynomial reduce(const Polynomial& f, std::span<const Polynomial> G, const TermOrder& order,
                  const GBLimits& limits) {
  ModuleOrder mo = ModuleOrder::tot(order);
  std::vector<ModuleVector> gens = wrap_all(G, order, f.ring());
  return unwrap(module_reduce(wrap(f, order), gens, mo, limits));
}

const std::vector<Polynomial>& groebner_basis(const Ideal& I, const TermOrder& order,
                                              const GBLimits& limits, GBStats* stats) {
  if (const auto* hit = I.cached_basis(order)) return *hit;
  ModuleOrder mo = ModuleOrder::tot(order);
  std::vector<ModuleVector> gens =
      wrap_all(std::span<const Polynomial>(I.generators()), order, I.ring());
  std::vector<Polynomial> basis;
  for (const auto& v : module_gb(gens, mo, limits, stats)) basis.push_back(unwrap(v));
  I.cache_basis(order, std::move(basis));
  return *I.cached_basis(order);
}

bool ideal_member(const Polynomial& f, const Ideal& I, const GBLimits& limits) {
  if (f.ring() != I.ring()) throw std::invalid_argument("ring mismatch");
  if (f.is_zero()) return true;
  TermOrder order = default_order(I.ring());
  const auto& gb = groebner_basis(I, order, limits);
  return reduce(f, gb, order, limits).is_zero();
}

bool ideal_contains(const Ideal& I, const Ideal& J, const GBLimits& limits) {
  for (const auto& g : J.generators())
    if (!ideal_member(g, I, limits)) return false;
  return true;
}

bool ideal_equal(const Ideal& I, const Ideal& J, const GBLimits& limits) {
  if (I.ring() != J.ring()) throw std::invalid_argument("ring mismatch");
  TermOrder order = default_order(I.ring());
  const auto& gi = groebner_basis(I, order, limits);
  const auto& gj = groebner_basis(J, order, limits);
  if (gi.size() != gj.size()) return false;
  for (std::size_t k = 0; k < gi.size(); ++k)
    if (gi[k] != gj[k]) return false;
  return true;
}

Ideal eliminate(const Ideal& I, const std::vector<std::size_t>& vars, const GBLimits& limits) {
  const Ring& ring = I.ring();
  std::vector<std::uint8_t> mask(ring->size(), 0);
  for (auto v : vars) {
    if (v >= ring->size()) throw std::invalid_argument("eliminate: variable out of range");
    mask[v] = 1;
  }
  TermOrder order = TermOrder::block(mask);
  ModuleOrder mo = ModuleOrder::tot(order);
  std::vector<ModuleVector> gens =
      wrap_all(std::span<const Polynomial>(I.generators()), order, ring);
  std::vector<Polynomial> kept;
  for (const auto& v : module_gb(gens, mo, limits)) {
    Polynomial g = unwrap(v);
    bool in_subring = true;
    for (const auto& t : g.terms()) {
      for (auto var : vars)
        if (t.mono[var] != 0) {
          in_subring = false;
          break;
        }
      if (!in_subring) break;
    }
    if (in_subring) kept.push_back(g.resorted(default_order(ring)));
  }
  return Ideal(ring, std::move(kept));
}

Ideal quotient(const Ideal& I, const Polynomial& f, const GBLimits& limits) {
  if (f.ring() != I.ring()) throw std::invalid_argument("ring mismatch");
  if (f.is_zero()) throw std::invalid_argument("quotient by zero");
  if (I.is_zero()) return I;
  // I : f is the f-coordinate of the syzygies of [f | gens(I)].
  const Ring& ring = I.ring();
  TermOrder order = default_order(ring);
  ModuleOrder mo = ModuleOrder::tot(order);
  std::size_t k = I.generators().size();
  std::vector<ModuleVector> cols;
  auto make_col = [&](const Polynomial& head, std::size_t tracked) {
    std::vector<Polynomial> comps(1 + (1 + k), Polynomial::zero(ring, order));
    comps[0] = head.resorted(order);
    comps[1 + tracked] = Polynomial::constant(ring, 1, order);
    return ModuleVector(ring, order, std::move(comps));
  };
  // Position 0 carries the actual combination; it lives in block 0 so any
  // element with leading term in the tracking block has combination zero.
  cols.push_back(make_col(f, 0));
  for (std::size_t i = 0; i < k; ++i) cols.push_back(make_col(I.generators()[i], 1 + i));
  ModuleOrder elim = mo;
  elim.block.assign(2 + k, 1);
  elim.block[0] = 0;
  std::vector<Polynomial> out;
  for (const auto& v : module_gb(cols, elim, limits)) {
    if (!v[0].is_zero()) continue;  // not a syzygy
    if (!v[1].is_zero()) out.push_back(v[1].resorted(default_order(ring)));
  }
  return Ideal(ring, std::move(out));
}

Ideal saturate(const Ideal& I, const Polynomial& f, const GBLimits& limits) {
  if (f.ring() != I.ring()) throw std::invalid_argument("ring mismatch");
  if (f.is_zero()) throw std::invalid_argument("saturation by zero");
  if (I.is_zero()) return I;
  const Ring& ring = I.ring();
  Ring ext = extend_with_aux(ring, "@t");
  std::size_t t_idx = ext->size() - 1;
  std::vector<std::uint8_t> mask(ext->size(), 0);
  mask[t_idx] = 1;
  TermOrder order = TermOrder::block(mask);

  std::vector<Polynomial> gens;
  for (const auto& g : I.generators()) gens.push_back(map_to_ring(g, ext, order));
  Polynomial one = Polynomial::constant(ext, 1, order);
  Polynomial tf = map_to_ring(f, ext, order) * Polynomial::variable(ext, t_idx, 1, order);
  gens.push_back(one - tf);

  Ideal extended(ext, std::move(gens));
  Ideal elim = eliminate(extended, {t_idx}, limits);

  std::vector<Polynomial> out;
  for (const auto& g : elim.generators()) out.push_back(map_to_ring(g, ring));
  return Ideal(ring, std::move(out));
}

int max_independent_set(const std::vector<std::vector<std::uint8_t>>& supports,
                        std::size_t nvars) {
  // Branch on the variables of some support not yet excluded; classic
  // dimension-of-monomial-ideal recursion with memoization on the
  // excluded set.
  std::map<std::vector<std::uint8_t>, int> memo;
  std::vector<std::uint8_t> excluded(nvars, 0);

  auto rec = [&](auto&& self, std::vector<std::uint8_t>& excl) -> int {
    auto it = memo.find(excl);
    if (it != memo.end()) return it->second;
    const std::vector<std::uint8_t>* pivot = nullptr;
    for (const auto& s : supports) {
      bool alive = true;
      for (std::size_t i = 0; i < nvars; ++i)
        if (s[i] && excl[i]) {
          alive = false;
          break;
        }
      if (alive) {
        pivot = &s;
        break;
      }
    }
    int best;
    if (!pivot) {
      best = 0;
      for (std::size_t i = 0; i < nvars; ++i)
        if (!excl[i]) ++best;
    } else {
      best = 0;
      for (std::size_t i = 0; i < nvars; ++i) {
        if (!(*pivot)[i]) continue;
        excl[i] = 1;
        best = std::max(best, self(self, excl));
        excl[i] = 0;
      }
    }
    memo.emplace(excl, best);
    return best;
  };
  return rec(rec, excluded);
}

int codim(const Ideal& I, const GBLimits& limits) {
  const Ring& ring = I.ring();
  if (I.is_zero()) return 0;
  TermOrder order = default_order(ring);
  const auto& gb = groebner_basis(I, order, limits);
  std::vector<std::vector<std::uint8_t>> supports;
  for (const auto& g : gb) {
    const Monomial& lm = g.resorted(order).leading_monomial();
    if (lm.is_one()) throw std::invalid_argument("codim of the unit ideal");
    std::vector<std::uint8_t> s(ring->size(), 0);
    for (std::size_t i = 0; i < ring->size(); ++i) s[i] = lm[i] > 0;
    supports.push_back(std::move(s));
  }
  int dim = max_independent_set(supports, ring->size());
  return static_cast<int>(ring->size()) - dim;
}

std::optional<Polynomial> divide_exact(const Polynomial& g, const Polynomial& f) {
  if (f.ring() != g.ring()) throw std::invalid_argument("ring mismatch");
  if (f.is_zero()) throw std::invalid_argument("division by zero");
  const TermOrder& order = f.order();
  Polynomial r = g.resorted(order);
  Polynomial q = Polynomial::zero(g.ring(), order);
  const Monomial& fm = f.resorted(order).leading_monomial();
  Polynomial fs = f.resorted(order);
  while (!r.is_zero()) {
    const Monomial& rm = r.leading_monomial();
    if (!fm.divides(rm)) return std::nullopt;
    Rational c = r.leading_coeff() / fs.leading_coeff();
    Monomial m = rm.div(fm);
    Polynomial piece = Polynomial::from_terms(g.ring(), order, {{m, c}});
    q = q + piece;
    r = r - fs.times_term(c, m);
  }
  return q;
}

std::vector<Polynomial> minimal_generators(const Ideal& I, const GBLimits& limits) {
  std::vector<Polynomial> gens = I.generators();
  std::sort(gens.begin(), gens.end(), [](const Polynomial& a, const Polynomial& b) {
    return compare_canonical(a, b) < 0;
  });
  std::vector<Polynomial> kept;
  for (const auto& g : gens) {
    if (!kept.empty() && ideal_member(g, Ideal(I.ring(), kept), limits)) continue;
    kept.push_back(g);
  }
  return kept;
}

}  // namespace arrlik

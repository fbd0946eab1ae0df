#include "arrlik/ideal.hpp"

#include <stdexcept>

namespace arrlik {

Ideal::Ideal(Ring ring, std::vector<Polynomial> gens) : ring_(std::move(ring)) {
  gens_.reserve(gens.size());
  for (auto& g : gens) {
    if (g.ring() != ring_) throw std::invalid_argument("generator ring mismatch");
    if (g.is_zero()) continue;
    gens_.push_back(g.normalized());
  }
}

Ideal Ideal::with_extra(std::vector<Polynomial> more) const {
  std::vector<Polynomial> gens = gens_;
  for (auto& g : more) gens.push_back(std::move(g));
  return Ideal(ring_, std::move(gens));
}

const std::vector<Polynomial>* Ideal::cached_basis(const TermOrder& order) const {
  if (cache_ && cache_->first == order) return &cache_->second;
  return nullptr;
}

void Ideal::cache_basis(TermOrder order, std::vector<Polynomial> basis) const {
  cache_.emplace(std::move(order), std::move(basis));
}

}  // namespace arrlik

#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "arrlik/polynomial.hpp"

namespace arrlik {

// An ideal given by generators, with a one-slot cache for a reduced
// Groebner basis. Once a basis is cached the value is immutable and may
// be shared across threads; filling the cache itself is not synchronized.
class Ideal {
 public:
  Ideal() = default;
  Ideal(Ring ring, std::vector<Polynomial> gens);

  const Ring& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }

  Ideal with_extra(std::vector<Polynomial> more) const;

  const std::vector<Polynomial>* cached_basis(const TermOrder& order) const;
  void cache_basis(TermOrder order, std::vector<Polynomial> basis) const;

 private:
  Ring ring_;
  std::vector<Polynomial> gens_;
  mutable std::optional<std::pair<TermOrder, std::vector<Polynomial>>> cache_;
};

}  // namespace arrlik

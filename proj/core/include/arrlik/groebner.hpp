#pragma once

#include <optional>
#include <span>
#include <vector>

#include "arrlik/ideal.hpp"
#include "arrlik/module_gb.hpp"

namespace arrlik {

// Normal form of f against G under the given order: no term of the result
// is divisible by any leading monomial of G, and f - result lies in <G>.
Polynomial reduce(const Polynomial& f, std::span<const Polynomial> G, const TermOrder& order,
                  const GBLimits& limits = {});

// Unique reduced Groebner basis (generators content-normalized with
// positive leading coefficients). Cached inside the ideal per order.
const std::vector<Polynomial>& groebner_basis(const Ideal& I, const TermOrder& order,
                                              const GBLimits& limits = {},
                                              GBStats* stats = nullptr);

bool ideal_member(const Polynomial& f, const Ideal& I, const GBLimits& limits = {});

// J subseteq I (every generator of J reduces to zero against I).
bool ideal_contains(const Ideal& I, const Ideal& J, const GBLimits& limits = {});

bool ideal_equal(const Ideal& I, const Ideal& J, const GBLimits& limits = {});

// Generators of I ∩ k[vars complement]; the result lives in the same ring
// but involves none of the eliminated variables.
Ideal eliminate(const Ideal& I, const std::vector<std::size_t>& vars,
                const GBLimits& limits = {});

// Ideal quotient I : f, computed from the syzygies of [f | gens(I)].
Ideal quotient(const Ideal& I, const Polynomial& f, const GBLimits& limits = {});

// Saturation I : f^infty, by eliminating t from I + <1 - t*f>.
Ideal saturate(const Ideal& I, const Polynomial& f, const GBLimits& limits = {});

// Codimension of V(I) in the ambient affine space, read off the initial
// ideal: (#vars) - (largest variable subset meeting no initial support).
int codim(const Ideal& I, const GBLimits& limits = {});

// Exact quotient g / f, or nullopt when f does not divide g.
std::optional<Polynomial> divide_exact(const Polynomial& g, const Polynomial& f);

// Inclusion-minimal generating subset of the given generators, greedily by
// ascending degree; for homogeneous ideals this realizes the minimal
// number of generators.
std::vector<Polynomial> minimal_generators(const Ideal& I, const GBLimits& limits = {});

// Largest subset of variables (as a count) whose monomials avoid every
// support in `supports`; helper shared with the Hilbert code.
int max_independent_set(const std::vector<std::vector<std::uint8_t>>& supports,
                        std::size_t nvars);

}  // namespace arrlik

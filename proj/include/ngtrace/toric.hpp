#pragma once

// Defining ideal of a monomial curve: the kernel of X_i -> t^{a_i}.
//
// Computed as the elimination ideal (X_i - t^{a_i}) cap k[X] with deg t = 1.
// The ideal is homogeneous, and the order compares weighted degree first and
// then the power of t, so every basis element whose leading term is t-free
// is t-free altogether; those elements form a Groebner basis of the kernel.

#include <numeric>
#include <string>
#include <vector>

#include "ngtrace/groebner.hpp"
#include "ngtrace/polynomial.hpp"
#include "ngtrace/semigroup.hpp"

namespace ngtrace {

struct ToricLimits {
  std::size_t max_variables = 6;
  Int max_generator = 200;
};

/// Ring X1..Xn with deg Xi = weights[i-1] and the default (graded revlex)
/// order.
inline RingPtr curve_ring(const std::vector<Int>& weights) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < weights.size(); ++i) names.push_back("X" + std::to_string(i + 1));
  return std::make_shared<const Ring>(names, weights);
}

/// Groebner basis of the kernel of X_i -> t^{weights[i-1]} over `target`,
/// a ring whose variables are exactly X1..Xn with these weights.
inline GroebnerBasis toric_ideal(const RingPtr& target, const ToricLimits& limits = {},
                                 GroebnerOptions options = {}) {
  const auto& weights = target->weights();
  std::size_t n = weights.size();
  if (n > limits.max_variables)
    throw ResourceLimit("toric ideal limited to " + std::to_string(limits.max_variables) +
                        " variables");
  for (Int a : weights)
    if (a > limits.max_generator)
      throw ResourceLimit("generator " + std::to_string(a) + " exceeds toric cap " +
                          std::to_string(limits.max_generator));
  if (options.max_degree < 0)
    options.max_degree = 10 * std::accumulate(weights.begin(), weights.end(), Int{1});

  std::vector<std::string> names{"t"};
  std::vector<Int> big_weights{1};
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back(target->names()[i]);
    big_weights.push_back(weights[i]);
  }
  auto big = std::make_shared<const Ring>(names, big_weights, 1);
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < n; ++i)
    gens.push_back(Polynomial::variable(big, i + 1) -
                   Polynomial::variable(big, 0, static_cast<std::int32_t>(weights[i])));
  auto gb = buchberger(big, gens, options);

  std::vector<Polynomial> kept;
  for (const auto& g : gb.elements()) {
    if (g.lead_monomial().exp[0] != 0) continue;
    std::vector<Term> moved;
    for (const auto& t : g.terms()) {
      if (t.mono.exp[0] != 0) throw std::logic_error("elimination left t in a t-free element");
      Term s = t;
      for (std::size_t i = 0; i < n; ++i) s.mono.exp[i] = t.mono.exp[i + 1];
      for (std::size_t i = n; i < kMaxVars; ++i) s.mono.exp[i] = 0;
      s.mono.degree = target->degree_of(s.mono);
      moved.push_back(s);
    }
    Polynomial p(target, std::move(moved));
    if (!p.is_homogeneous()) throw std::logic_error("toric generator is not homogeneous");
    kept.push_back(std::move(p));
  }
  // the t-free part of a reduced basis is already reduced; reorder for the target
  std::sort(kept.begin(), kept.end(), [&](const Polynomial& a, const Polynomial& b) {
    return target->compare(a.lead_monomial(), b.lead_monomial()) > 0;
  });
  return GroebnerBasis(target, std::move(kept));
}

inline GroebnerBasis toric_ideal(const NumericalSemigroup& h, const ToricLimits& limits = {}) {
  return toric_ideal(curve_ring(h.generators()), limits);
}

}  // namespace ngtrace

#pragma once

// Left kernel of a matrix over a quotient ring S/a, by a module Groebner
// basis. Rows f with f.N in a^s are the vectors g in S^r for which
// (f.N, f) lies in the submodule spanned by the (N_j, e_j) and a * e_k.
// Under a position-over-term order with the image components first, basis
// elements leading in the second block have vanishing image part and
// generate the kernel.

#include <string>
#include <vector>

#include "ngtrace/groebner.hpp"
#include "ngtrace/higher_dim.hpp"
#include "ngtrace/relative_ideal.hpp"
#include "ngtrace/toric.hpp"

namespace ngtrace {

struct KernelLimits {
  std::size_t max_rows = 4;
  std::size_t max_variables = 6;
};

/// Generators of {f in S^r : f.N = 0 in (S/a)^s}.
inline std::vector<PolyRow> kernel_over_quotient(const RingPtr& ring, const PolyMatrix& N,
                                                 const std::vector<Polynomial>& ideal,
                                                 const GroebnerOptions& options = {},
                                                 const KernelLimits& limits = {}) {
  std::size_t r = N.size();
  if (r == 0) throw InvalidInput("the matrix needs at least one row");
  std::size_t s = N[0].size();
  for (const auto& row : N)
    if (row.size() != s) throw InvalidInput("ragged matrix");
  if (r > limits.max_rows)
    throw ResourceLimit("kernel computation limited to " + std::to_string(limits.max_rows) + " rows");
  if (ring->size() > limits.max_variables)
    throw ResourceLimit("kernel computation limited to " + std::to_string(limits.max_variables) +
                        " variables");

  auto mod = ring->with_order(0, true);
  auto lift = [&](const Polynomial& p, std::int32_t comp) {
    std::vector<Term> terms;
    for (const auto& t : p.terms()) {
      Term u = t;
      u.mono.comp = comp;
      terms.push_back(u);
    }
    return Polynomial(mod, std::move(terms));
  };
  std::vector<Polynomial> gens;
  for (std::size_t j = 0; j < r; ++j) {
    Polynomial g = lift(Polynomial::constant(ring, 1), static_cast<std::int32_t>(s + j));
    for (std::size_t k = 0; k < s; ++k)
      if (!N[j][k].is_zero()) g += lift(N[j][k], static_cast<std::int32_t>(k));
    gens.push_back(g);
  }
  for (const auto& a : ideal)
    for (std::size_t k = 0; k < s; ++k) gens.push_back(lift(a, static_cast<std::int32_t>(k)));
  auto gb = buchberger(mod, gens, options);

  auto ideal_gb = buchberger(ring, ideal, options);
  std::vector<PolyRow> out;
  for (const auto& g : gb.elements()) {
    if (static_cast<std::size_t>(g.lead_monomial().comp) < s) continue;
    PolyRow f;
    for (std::size_t j = 0; j < r; ++j) f.push_back(g.component(static_cast<std::int32_t>(s + j), ring));
    for (std::size_t k = 0; k < s; ++k) {
      Polynomial prod(ring);
      for (std::size_t j = 0; j < r; ++j)
        if (!N[j][k].is_zero()) prod += f[j] * N[j][k];
      if (!ideal_gb.reduce(prod).is_zero())
        throw std::logic_error("kernel row does not annihilate the matrix");
    }
    out.push_back(std::move(f));
  }
  return out;
}

/// tr(K) of a determinantal instance from the kernel of its presentation
/// matrix over k[X]/I_H: the ideal of all row entries, read as degrees of
/// t (every homogeneous element of k[H] is a scalar multiple of t^d).
inline RelativeIdeal trace_canonical_syzygy(const DeterminantalInstance& inst,
                                            const GroebnerOptions& options = {},
                                            const KernelLimits& limits = {}) {
  HigherDimInstance hd(inst, {}, {});
  auto ring = hd.ring();
  auto mats = build_matrices(hd);
  auto toric = toric_ideal(ring, {}, options);
  auto rows = kernel_over_quotient(ring, mats.M, toric.elements(), options, limits);
  std::vector<Int> degrees;
  for (const auto& f : rows)
    for (const auto& e : f) {
      auto nf = toric.reduce(e);
      if (nf.is_zero()) continue;
      if (!nf.is_homogeneous()) throw std::logic_error("kernel entry is not homogeneous");
      degrees.push_back(nf.lead_monomial().degree);
    }
  if (degrees.empty()) throw std::logic_error("kernel has no nonzero entries");
  return RelativeIdeal::from_generators(inst.semigroup_ptr(), degrees);
}

}  // namespace ngtrace

#pragma once

// Buchberger's algorithm with the Gebauer-Moeller pair criteria, normal
// selection strategy, and full reduction to a reduced basis. Works for
// ideals and, with a position-over-term ring, for submodules of free
// modules.

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "ngtrace/error.hpp"
#include "ngtrace/polynomial.hpp"

namespace ngtrace {

struct GroebnerOptions {
  std::size_t max_basis_size = 5000;
  /// Largest admissible leading degree; negative means 10 * sum of weights.
  Int max_degree = -1;
  /// Re-check that every S-polynomial of the final basis reduces to zero.
  bool check_closure = true;
};

/// Remainder of p under multivariate division by `divisors` (full
/// reduction). Divisors must be monic.
inline Polynomial normal_form(const Polynomial& p, const std::vector<Polynomial>& divisors) {
  Polynomial rest = p;
  Polynomial remainder(p.ring());
  while (!rest.is_zero()) {
    const Polynomial* hit = nullptr;
    for (const auto& g : divisors)
      if (!g.is_zero() && divides(g.lead_monomial(), rest.lead_monomial())) {
        hit = &g;
        break;
      }
    if (hit) {
      Term lead = rest.pop_lead();
      Polynomial tail(hit->ring());
      tail.add_scaled(1, Monomial{}, *hit);
      tail.pop_lead();
      rest.add_scaled(-lead.coeff / hit->lead_coeff(), quotient(lead.mono, hit->lead_monomial()),
                      tail);
    } else {
      remainder.append_lower(rest.pop_lead());
    }
  }
  return remainder;
}

inline Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  const auto& ring = *f.ring();
  Monomial l = ring.lcm(f.lead_monomial(), g.lead_monomial());
  Polynomial out(f.ring());
  out.add_scaled(1 / f.lead_coeff(), quotient(l, f.lead_monomial()), f);
  out.add_scaled(-1 / g.lead_coeff(), quotient(l, g.lead_monomial()), g);
  return out;
}

/// A reduced Groebner basis together with the ring and order it refers to.
class GroebnerBasis {
public:
  GroebnerBasis(RingPtr ring, std::vector<Polynomial> basis)
      : ring_(std::move(ring)), basis_(std::move(basis)) {}

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& elements() const { return basis_; }
  std::size_t size() const { return basis_.size(); }

  Polynomial reduce(const Polynomial& p) const { return normal_form(p, basis_); }
  bool contains(const Polynomial& p) const { return reduce(p).is_zero(); }

  /// Every S-polynomial of a pair with equal leading components reduces to
  /// zero. For ideals (not modules) coprime pairs are skipped.
  bool is_closed() const {
    for (std::size_t i = 0; i < basis_.size(); ++i)
      for (std::size_t j = i + 1; j < basis_.size(); ++j) {
        const auto& a = basis_[i].lead_monomial();
        const auto& b = basis_[j].lead_monomial();
        if (a.comp != b.comp) continue;
        if (!ring_->position_over_term() && coprime(a, b)) continue;
        if (!reduce(s_polynomial(basis_[i], basis_[j])).is_zero()) return false;
      }
    return true;
  }

private:
  RingPtr ring_;
  std::vector<Polynomial> basis_;
};

namespace detail {

struct Pair {
  std::size_t i, j;
  Monomial lcm;
  std::size_t serial;
};

}  // namespace detail

/// Reduced Groebner basis of the ideal (or module) generated by `gens`.
/// Deterministic for a fixed order and input sequence.
inline GroebnerBasis buchberger(RingPtr ring, const std::vector<Polynomial>& gens,
                                const GroebnerOptions& options = {}) {
  const bool module_mode = ring->position_over_term();
  Int degree_cap = options.max_degree;
  if (degree_cap < 0)
    degree_cap = 10 * std::accumulate(ring->weights().begin(), ring->weights().end(), Int{0});

  std::vector<Polynomial> polys;   // every basis element ever added
  std::vector<bool> active;
  std::vector<detail::Pair> pairs;
  std::size_t serial = 0;

  auto active_list = [&] {
    std::vector<Polynomial> out;
    for (std::size_t k = 0; k < polys.size(); ++k)
      if (active[k]) out.push_back(polys[k]);
    return out;
  };

  // Gebauer-Moeller update with the new element h = polys.back().
  auto update = [&](std::size_t h) {
    const Monomial& lh = polys[h].lead_monomial();
    std::vector<detail::Pair> fresh;
    for (std::size_t g = 0; g < h; ++g)
      if (active[g] && polys[g].lead_monomial().comp == lh.comp)
        fresh.push_back({g, h, ring->lcm(polys[g].lead_monomial(), lh), 0});

    auto is_product = [&](const detail::Pair& p) {
      return !module_mode && coprime(polys[p.i].lead_monomial(), lh);
    };
    // chain criterion among the new pairs; equal lcms keep one representative
    std::vector<detail::Pair> kept;
    for (std::size_t a = 0; a < fresh.size(); ++a) {
      bool dominated = false;
      if (!is_product(fresh[a])) {
        for (std::size_t b = a + 1; b < fresh.size() && !dominated; ++b)
          dominated = divides(fresh[b].lcm, fresh[a].lcm);
        for (std::size_t b = 0; b < kept.size() && !dominated; ++b)
          dominated = divides(kept[b].lcm, fresh[a].lcm);
      }
      if (!dominated) kept.push_back(fresh[a]);
    }
    // product criterion
    std::vector<detail::Pair> survivors;
    for (auto& p : kept) {
      if (is_product(p)) continue;
      p.serial = serial++;
      survivors.push_back(p);
    }
    // old pairs made redundant by h
    std::vector<detail::Pair> remaining;
    for (auto& p : pairs) {
      bool drop = divides(lh, p.lcm) &&
                  !(ring->lcm(polys[p.i].lead_monomial(), lh) == p.lcm) &&
                  !(ring->lcm(polys[p.j].lead_monomial(), lh) == p.lcm);
      if (!drop) remaining.push_back(p);
    }
    pairs = std::move(remaining);
    pairs.insert(pairs.end(), survivors.begin(), survivors.end());
    for (std::size_t g = 0; g < h; ++g)
      if (active[g] && divides(lh, polys[g].lead_monomial())) active[g] = false;
  };

  auto insert = [&](Polynomial p) {
    p = p.monic();
    if (p.lead_monomial().degree > degree_cap)
      throw ResourceLimit("Groebner basis degree " + std::to_string(p.lead_monomial().degree) +
                          " exceeds cap " + std::to_string(degree_cap));
    polys.push_back(std::move(p));
    active.push_back(true);
    if (polys.size() > options.max_basis_size)
      throw ResourceLimit("Groebner basis exceeds " + std::to_string(options.max_basis_size) +
                          " elements");
    update(polys.size() - 1);
  };

  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    Polynomial r = normal_form(g.rebased(ring), active_list());
    if (!r.is_zero()) insert(std::move(r));
  }

  while (!pairs.empty()) {
    auto best = std::min_element(pairs.begin(), pairs.end(), [&](const auto& a, const auto& b) {
      if (a.lcm.degree != b.lcm.degree) return a.lcm.degree < b.lcm.degree;
      int c = ring->compare(a.lcm, b.lcm);
      if (c != 0) return c < 0;
      return a.serial < b.serial;
    });
    detail::Pair pair = *best;
    pairs.erase(best);
    Polynomial s = s_polynomial(polys[pair.i], polys[pair.j]);
    Polynomial r = normal_form(s, active_list());
    if (!r.is_zero()) insert(std::move(r));
  }

  // reduce tails and sort by leading monomial, largest first
  std::vector<Polynomial> basis = active_list();
  for (std::size_t k = 0; k < basis.size(); ++k) {
    std::vector<Polynomial> others;
    for (std::size_t o = 0; o < basis.size(); ++o)
      if (o != k) others.push_back(basis[o]);
    Polynomial tail = basis[k];
    Term lead = tail.lead();
    tail.add_scaled(-lead.coeff, Monomial{}, Polynomial::monomial(ring, lead.mono));
    Polynomial reduced = normal_form(tail, others);
    reduced.add_scaled(lead.coeff, Monomial{}, Polynomial::monomial(ring, lead.mono));
    basis[k] = reduced.monic();
  }
  std::sort(basis.begin(), basis.end(), [&](const Polynomial& a, const Polynomial& b) {
    return ring->compare(a.lead_monomial(), b.lead_monomial()) > 0;
  });
  GroebnerBasis out(ring, std::move(basis));
  if (options.check_closure && !out.is_closed())
    throw std::logic_error("Groebner basis failed the S-polynomial closure check");
  return out;
}

/// p lies in the ideal generated by gens.
inline bool ideal_membership(const Polynomial& p, const std::vector<Polynomial>& gens,
                             const GroebnerOptions& options = {}) {
  if (p.is_zero()) return true;
  if (gens.empty()) return false;
  return buchberger(p.ring(), gens, options).contains(p);
}

}  // namespace ngtrace

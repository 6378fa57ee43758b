#pragma once

// Numerical semigroups whose defining ideal is the ideal of 2-minors of a
// cyclic 2 x n matrix
//
//   | X_2^{m_2}  X_3^{m_3}  ...  X_n^{m_n}          X_1^{m_1} |
//   | X_1^{l_1}  X_2^{l_2}  ...  X_{n-1}^{l_{n-1}}  X_n^{l_n} |
//
// where X_i has degree a_i, the i-th entry of the cyclic order. Indices are
// 0-based in code: column i holds X_{i+1 mod n}^{m[i+1 mod n]} over
// X_i^{l[i]}.

#include <algorithm>
#include <functional>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "ngtrace/error.hpp"
#include "ngtrace/groebner.hpp"
#include "ngtrace/polynomial.hpp"
#include "ngtrace/semigroup.hpp"
#include "ngtrace/toric.hpp"

namespace ngtrace {

struct DeterminantalOptions {
  ToricLimits toric;
  GroebnerOptions groebner;
};

/// A dihedral relabeling of (order, m, l): reverse first (if requested),
/// then rotate left by `shift`.
struct Symmetry {
  std::size_t shift = 0;
  bool reversed = false;

  std::string label() const {
    if (!reversed) return shift == 0 ? "identity" : "shift " + std::to_string(shift);
    return shift == 0 ? "reversal" : "reversal+shift " + std::to_string(shift);
  }
  friend bool operator==(const Symmetry&, const Symmetry&) = default;
};

/// The exponent data of form (*) without any validation.
struct MatrixForm {
  std::vector<Int> order, m, ell;

  std::size_t n() const { return order.size(); }

  /// Image under a symmetry. Reversal sends variable k to n-1-k and swaps
  /// the rows, so m'[k] = l[n-1-k] and l'[k] = m[n-1-k].
  MatrixForm apply(const Symmetry& s) const {
    std::size_t len = n();
    MatrixForm r = *this;
    if (s.reversed)
      for (std::size_t k = 0; k < len; ++k) {
        r.order[k] = order[len - 1 - k];
        r.m[k] = ell[len - 1 - k];
        r.ell[k] = m[len - 1 - k];
      }
    MatrixForm out = r;
    for (std::size_t k = 0; k < len; ++k) {
      out.order[k] = r.order[(k + s.shift) % len];
      out.m[k] = r.m[(k + s.shift) % len];
      out.ell[k] = r.ell[(k + s.shift) % len];
    }
    return out;
  }

  /// m[i+1] a[i+1] - l[i] a[i] for column i.
  Int column_gap(std::size_t i) const {
    std::size_t j = (i + 1) % n();
    return m[j] * order[j] - ell[i] * order[i];
  }

  bool case_a() const {
    return std::all_of(m.begin(), m.end(), [](Int v) { return v == 1; });
  }
  bool case_b() const {
    for (std::size_t i = 1; i < n(); ++i)
      if (m[i] != 1) return false;
    for (std::size_t i = 0; i + 2 < n(); ++i)
      if (ell[i] != 1) return false;
    return true;
  }

  friend bool operator==(const MatrixForm&, const MatrixForm&) = default;
};

/// Every dihedral symmetry in scan order: rotations, then reversal followed
/// by rotations.
inline std::vector<Symmetry> dihedral_symmetries(std::size_t n) {
  std::vector<Symmetry> out;
  for (bool rev : {false, true})
    for (std::size_t s = 0; s < n; ++s) out.push_back({s, rev});
  return out;
}

class DeterminantalInstance;
DeterminantalInstance build(std::shared_ptr<const NumericalSemigroup> h, std::vector<Int> order,
                            std::vector<Int> m, std::vector<Int> ell,
                            const DeterminantalOptions& options);

class DeterminantalInstance {
public:
  const NumericalSemigroup& semigroup() const { return *h_; }
  const std::shared_ptr<const NumericalSemigroup>& semigroup_ptr() const { return h_; }
  const MatrixForm& form() const { return form_; }
  const std::vector<Int>& order() const { return form_.order; }
  const std::vector<Int>& m() const { return form_.m; }
  const std::vector<Int>& ell() const { return form_.ell; }
  Int c() const { return c_; }
  std::size_t n() const { return form_.n(); }

  /// X1..Xn with deg Xi = order[i-1].
  RingPtr ring() const { return curve_ring(form_.order); }

  PolyMatrix matrix(const RingPtr& ring) const {
    PolyMatrix d(2);
    for (std::size_t i = 0; i < n(); ++i) {
      std::size_t j = (i + 1) % n();
      d[0].push_back(Polynomial::variable(ring, j, static_cast<std::int32_t>(form_.m[j])));
      d[1].push_back(Polynomial::variable(ring, i, static_cast<std::int32_t>(form_.ell[i])));
    }
    return d;
  }
  PolyMatrix matrix() const { return matrix(ring()); }

  /// The same ring presented after a dihedral relabeling; the ideal of
  /// minors is unchanged, so no revalidation happens.
  DeterminantalInstance transformed(const Symmetry& s) const {
    DeterminantalInstance out = *this;
    out.form_ = form_.apply(s);
    out.c_ = out.form_.column_gap(0);
    return out;
  }

  friend bool operator==(const DeterminantalInstance& a, const DeterminantalInstance& b) {
    return *a.h_ == *b.h_ && a.form_ == b.form_;
  }

private:
  DeterminantalInstance(std::shared_ptr<const NumericalSemigroup> h, MatrixForm form, Int c)
      : h_(std::move(h)), form_(std::move(form)), c_(c) {}

  friend DeterminantalInstance build(std::shared_ptr<const NumericalSemigroup>, std::vector<Int>,
                                     std::vector<Int>, std::vector<Int>,
                                     const DeterminantalOptions&);
  friend DeterminantalInstance unchecked_instance(std::shared_ptr<const NumericalSemigroup>,
                                                  MatrixForm);

  std::shared_ptr<const NumericalSemigroup> h_;
  MatrixForm form_;
  Int c_;
};

/// Checks shapes and the constancy of the column gap; returns c.
inline Int check_form(const NumericalSemigroup& h, const MatrixForm& f) {
  std::size_t n = f.n();
  if (n < 3) throw InvalidInput("the matrix form needs n >= 3 generators");
  if (f.m.size() != n || f.ell.size() != n)
    throw InvalidInput("order, m and ell must have the same length");
  for (std::size_t i = 0; i < n; ++i)
    if (f.m[i] <= 0 || f.ell[i] <= 0) throw InvalidInput("exponents must be positive");
  std::vector<Int> sorted = f.order;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != h.generators())
    throw InvalidInput("order must list the minimal generators of H exactly once");
  Int c = f.column_gap(0);
  for (std::size_t i = 1; i < n; ++i)
    if (f.column_gap(i) != c)
      throw InhomogeneousMatrix(static_cast<int>(i + 1), c, f.column_gap(i));
  return c;
}

inline DeterminantalInstance unchecked_instance(std::shared_ptr<const NumericalSemigroup> h,
                                                MatrixForm form) {
  Int c = check_form(*h, form);
  return DeterminantalInstance(std::move(h), std::move(form), c);
}

struct Validation {
  bool valid = false;
  /// A generator of the defining ideal outside the ideal of minors, or a
  /// minor that is not a homogeneous binomial.
  std::string witness;
  explicit operator bool() const { return valid; }
};

/// I_H = I_2(D): every minor is a homogeneous binomial (so lies in I_H) and
/// every Groebner generator of I_H reduces to 0 modulo the minors.
inline Validation validate_defining_ideal(const DeterminantalInstance& inst,
                                          const DeterminantalOptions& options = {}) {
  auto ring = inst.ring();
  auto minors = two_minors(inst.matrix(ring));
  for (const auto& p : minors)
    if (p.size() != 2 || !p.is_homogeneous()) return {false, p.to_string()};
  auto minors_gb = buchberger(ring, minors, options.groebner);
  auto toric = toric_ideal(ring, options.toric, options.groebner);
  for (const auto& g : toric.elements())
    if (!minors_gb.contains(g)) return {false, g.to_string()};
  return {true, {}};
}

inline DeterminantalInstance build(std::shared_ptr<const NumericalSemigroup> h,
                                   std::vector<Int> order, std::vector<Int> m,
                                   std::vector<Int> ell, const DeterminantalOptions& options = {}) {
  auto inst = unchecked_instance(std::move(h), {std::move(order), std::move(m), std::move(ell)});
  auto v = validate_defining_ideal(inst, options);
  if (!v) throw IdealMismatch(v.witness);
  return inst;
}

inline DeterminantalInstance build(const NumericalSemigroup& h, std::vector<Int> order,
                                   std::vector<Int> m, std::vector<Int> ell,
                                   const DeterminantalOptions& options = {}) {
  return build(std::make_shared<const NumericalSemigroup>(h), std::move(order), std::move(m),
               std::move(ell), options);
}

namespace detail {

inline Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw ResourceLimit("integer overflow in degree formula");
  return r;
}
inline Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw ResourceLimit("integer overflow in degree formula");
  return r;
}

}  // namespace detail

/// d_i = sum_{j=1..n} (m_{[i+1]} ... m_{[i+j-1]}) (l_{[i+j]} ... l_{[i+n-1]}),
/// the degrees forced by the form up to scaling.
inline std::vector<Int> ray_degrees(const std::vector<Int>& m, const std::vector<Int>& ell) {
  std::size_t n = m.size();
  if (ell.size() != n || n == 0) throw InvalidInput("m and ell must have the same positive length");
  for (std::size_t i = 0; i < n; ++i)
    if (m[i] <= 0 || ell[i] <= 0) throw InvalidInput("exponents must be positive");
  std::vector<Int> d(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 1; j <= n; ++j) {
      Int term = 1;
      for (std::size_t k = 1; k < j; ++k) term = detail::checked_mul(term, m[(i + k) % n]);
      for (std::size_t k = j; k < n; ++k) term = detail::checked_mul(term, ell[(i + k) % n]);
      d[i] = detail::checked_add(d[i], term);
    }
  return d;
}

/// Instances with the given exponents and every generator at most `bound`.
/// The gap equations have the one-dimensional solution ray spanned by the
/// ray degrees (when prod m != prod l); gcd 1 leaves its primitive
/// vector as the only candidate.
inline std::vector<DeterminantalInstance> search_instances(const std::vector<Int>& m,
                                                           const std::vector<Int>& ell, Int bound,
                                                           const DeterminantalOptions& options = {}) {
  if (m.size() < 3 || m.size() != ell.size())
    throw InvalidInput("search needs n >= 3 and matching m, ell lengths");
  if (bound <= 0 || bound > 500) throw InvalidInput("bound must lie in [1, 500]");
  auto d = ray_degrees(m, ell);
  Int g = 0;
  for (Int v : d) g = std::gcd(g, v);
  std::vector<Int> a;
  for (Int v : d) a.push_back(v / g);
  std::vector<DeterminantalInstance> out;
  Int prod_m = 1, prod_l = 1;
  for (std::size_t i = 0; i < m.size(); ++i) {
    prod_m = detail::checked_mul(prod_m, m[i]);
    prod_l = detail::checked_mul(prod_l, ell[i]);
  }
  if (prod_m == prod_l) return out;  // c = 0: the minors vanish on no curve
  if (*std::max_element(a.begin(), a.end()) > bound) return out;
  std::shared_ptr<const NumericalSemigroup> h;
  try {
    h = std::make_shared<const NumericalSemigroup>(a);
  } catch (const NonMinimalGenerators&) {
    return out;
  }
  auto inst = unchecked_instance(h, {a, m, ell});
  DeterminantalOptions opts = options;
  opts.toric.max_generator = std::max(opts.toric.max_generator, bound);
  if (validate_defining_ideal(inst, opts)) out.push_back(std::move(inst));
  return out;
}

enum class TheoremCase { None, A, B };

inline const char* to_string(TheoremCase c) {
  switch (c) {
    case TheoremCase::A: return "CaseA";
    case TheoremCase::B: return "CaseB";
    default: return "None";
  }
}

struct NearlyGorensteinClass {
  bool is_ng = false;
  TheoremCase which = TheoremCase::None;
  Symmetry symmetry;
  /// Set when the hit came from the full permutation scan instead.
  std::optional<MatrixForm> other_form;
};

/// All forms (*) of H with exponents at most `exponent_cap`, over every
/// ordering of the generators (n <= 5 only).
inline std::vector<MatrixForm> all_forms(const std::shared_ptr<const NumericalSemigroup>& h,
                                         Int exponent_cap,
                                         const DeterminantalOptions& options = {}) {
  std::size_t n = h->embedding_dimension();
  if (n < 3 || n > 5) throw ResourceLimit("full permutation scan needs 3 <= n <= 5");
  std::vector<MatrixForm> out;
  std::vector<Int> order = h->generators();
  do {
    // m[i+1] a[i+1] - l[i] a[i] = c: fix c by (m[1], l[0]), then each later
    // column determines its exponents by divisibility.
    for (Int m1 = 1; m1 <= exponent_cap; ++m1)
      for (Int l0 = 1; l0 <= exponent_cap; ++l0) {
        Int c = m1 * order[1] - l0 * order[0];
        if (c == 0) continue;
        // enumerate the remaining exponents column by column
        std::vector<Int> m(n, 0), ell(n, 0);
        m[1] = m1;
        ell[0] = l0;
        std::function<void(std::size_t)> rec = [&](std::size_t i) {
          if (i == n) {
            MatrixForm f{order, m, ell};
            for (std::size_t k = 0; k < n; ++k)
              if (f.column_gap(k) != c) return;
            auto inst = unchecked_instance(h, f);
            if (validate_defining_ideal(inst, options)) out.push_back(f);
            return;
          }
          std::size_t j = (i + 1) % n;
          for (Int li = 1; li <= exponent_cap; ++li) {
            Int rhs = c + li * order[i];
            if (rhs <= 0 || rhs % order[j] != 0) continue;
            Int mj = rhs / order[j];
            if (mj > exponent_cap) continue;
            ell[i] = li;
            Int saved = m[j];
            m[j] = mj;
            rec(i + 1);
            m[j] = saved;
          }
        };
        rec(1);
      }
  } while (std::next_permutation(order.begin(), order.end()));
  return out;
}

/// Nearly Gorenstein by the classification theorem: some dihedral image of
/// the form has all m = 1 (case A) or m_2..m_n = l_1..l_{n-2} = 1 (case B).
/// Symmetries are scanned in dihedral_symmetries order, A before B for each.
/// With `full_permutation` the forms of every generator ordering (n <= 5,
/// exponents <= cap) are tried afterwards.
inline NearlyGorensteinClass classify_nearly_gorenstein(const DeterminantalInstance& inst,
                                                        bool full_permutation = false,
                                                        Int exponent_cap = 4) {
  for (const auto& s : dihedral_symmetries(inst.n())) {
    MatrixForm f = inst.form().apply(s);
    if (f.case_a()) return {true, TheoremCase::A, s, std::nullopt};
    if (f.case_b()) return {true, TheoremCase::B, s, std::nullopt};
  }
  if (full_permutation)
    for (const auto& f : all_forms(inst.semigroup_ptr(), exponent_cap)) {
      if (f.case_a()) return {true, TheoremCase::A, {}, f};
      if (f.case_b()) return {true, TheoremCase::B, {}, f};
    }
  return {};
}

/// Almost Gorenstein: some dihedral image has all m = 1, i.e. all m = 1 or
/// all l = 1.
inline bool classify_almost_gorenstein(const DeterminantalInstance& inst) {
  for (const auto& s : dihedral_symmetries(inst.n()))
    if (inst.form().apply(s).case_a()) return true;
  return false;
}

/// Some n-1 cyclically consecutive entries of the order form an arithmetic
/// progression (in either direction, which the reversal covers).
inline bool arithmetic_progression_check(const DeterminantalInstance& inst) {
  std::size_t n = inst.n();
  const auto& a = inst.order();
  for (std::size_t start = 0; start < n; ++start) {
    Int step = a[(start + 1) % n] - a[start];
    bool ok = true;
    for (std::size_t k = 1; k + 2 < n && ok; ++k)
      ok = a[(start + k + 1) % n] - a[(start + k) % n] == step;
    if (ok) return true;
  }
  return false;
}

}  // namespace ngtrace

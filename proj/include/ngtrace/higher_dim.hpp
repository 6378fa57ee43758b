#pragma once

// Deformations R^I_J of a determinantal semigroup ring: Y_i is added to the
// top entry X_i^{m_i} for i in I and Z_j to the bottom entry X_j^{l_j} for
// j in J. Index sets are 1-based, matching the matrix labels.

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ngtrace/determinantal.hpp"
#include "ngtrace/groebner.hpp"

namespace ngtrace {

enum class BaseCase { AllOnes, TailCase, Other };

inline const char* to_string(BaseCase b) {
  switch (b) {
    case BaseCase::AllOnes: return "AllOnes";
    case BaseCase::TailCase: return "TailCase";
    default: return "Other";
  }
}

/// AllOnes: every m_i = 1. TailCase: m_1 >= 2, m_2 = ... = m_n = 1,
/// l_1 = ... = l_{n-2} = 1 and, for n >= 4, l_{n-1} >= 2 or l_n >= 2.
inline BaseCase base_case_of(const MatrixForm& f) {
  std::size_t n = f.n();
  if (f.case_a()) return BaseCase::AllOnes;
  if (f.m[0] >= 2 && f.case_b() && (n == 3 || f.ell[n - 2] >= 2 || f.ell[n - 1] >= 2))
    return BaseCase::TailCase;
  return BaseCase::Other;
}

class HigherDimInstance {
public:
  HigherDimInstance(DeterminantalInstance base, std::set<std::size_t> i_set,
                    std::set<std::size_t> j_set)
      : base_(std::move(base)), I_(std::move(i_set)), J_(std::move(j_set)) {
    for (std::size_t r : I_)
      if (r < 1 || r > base_.n()) throw InvalidInput("I must be a subset of 1..n");
    for (std::size_t r : J_)
      if (r < 1 || r > base_.n()) throw InvalidInput("J must be a subset of 1..n");
    std::vector<std::string> names;
    std::vector<Int> weights;
    const auto& f = base_.form();
    for (std::size_t r = 0; r < n(); ++r) {
      names.push_back("X" + std::to_string(r + 1));
      weights.push_back(f.order[r]);
    }
    for (std::size_t r : I_) {
      names.push_back("Y" + std::to_string(r));
      weights.push_back(f.m[r - 1] * f.order[r - 1]);
    }
    for (std::size_t r : J_) {
      names.push_back("Z" + std::to_string(r));
      weights.push_back(f.ell[r - 1] * f.order[r - 1]);
    }
    ring_ = std::make_shared<const Ring>(names, weights);
  }

  const DeterminantalInstance& base() const { return base_; }
  const std::set<std::size_t>& I() const { return I_; }
  const std::set<std::size_t>& J() const { return J_; }
  std::size_t n() const { return base_.n(); }
  std::size_t p() const { return I_.size(); }
  std::size_t q() const { return J_.size(); }
  BaseCase base_case() const { return base_case_of(base_.form()); }
  const RingPtr& ring() const { return ring_; }

  /// x_r^e for 1-based r.
  Polynomial x(std::size_t r, Int e = 1) const {
    return Polynomial::variable(ring_, r - 1, static_cast<std::int32_t>(e));
  }
  Polynomial y(std::size_t r) const {
    if (!I_.count(r)) throw InvalidInput("Y" + std::to_string(r) + " is not a variable here");
    return Polynomial::variable(ring_, static_cast<std::size_t>(ring_->index_of("Y" + std::to_string(r))));
  }
  Polynomial z(std::size_t r) const {
    if (!J_.count(r)) throw InvalidInput("Z" + std::to_string(r) + " is not a variable here");
    return Polynomial::variable(ring_, static_cast<std::size_t>(ring_->index_of("Z" + std::to_string(r))));
  }
  Polynomial V(std::size_t r) const {
    Polynomial v = x(r, base_.m()[r - 1]);
    if (I_.count(r)) v += y(r);
    return v;
  }
  Polynomial U(std::size_t r) const {
    Polynomial u = x(r, base_.ell()[r - 1]);
    if (J_.count(r)) u += z(r);
    return u;
  }

  friend bool operator==(const HigherDimInstance& a, const HigherDimInstance& b) {
    return a.base_ == b.base_ && a.I_ == b.I_ && a.J_ == b.J_;
  }

private:
  DeterminantalInstance base_;
  std::set<std::size_t> I_, J_;
  RingPtr ring_;
};

inline std::size_t dimension(const HigherDimInstance& hd) { return hd.p() + hd.q() + 1; }

struct HigherDimMatrices {
  PolyMatrix D;  // 2 x n
  PolyMatrix M;  // (n-1) x n(n-2)
};

inline HigherDimMatrices build_matrices(const HigherDimInstance& hd) {
  std::size_t n = hd.n();
  auto wrap = [n](std::size_t r) { return (r - 1) % n + 1; };
  HigherDimMatrices out;
  out.D.assign(2, {});
  for (std::size_t i = 1; i <= n; ++i) {
    out.D[0].push_back(hd.V(wrap(i + 1)));
    out.D[1].push_back(hd.U(i));
  }
  Polynomial zero(hd.ring());
  out.M.assign(n - 1, std::vector<Polynomial>(n * (n - 2), zero));
  for (std::size_t j = 1; j + 2 <= n; ++j)
    for (std::size_t i = 1; i <= n; ++i) {
      std::size_t col = (j - 1) * n + i - 1;
      out.M[j - 1][col] = hd.V(wrap(i + 1));
      out.M[j][col] = -hd.U(i);
    }
  return out;
}

struct HigherDimClass {
  bool is_ng = false;
  /// Statement label and clause, e.g. "newnonAGcase(2b)".
  std::string rule;
  /// Rotation that moves the case to the normalized indices of the proof
  /// (i = 1, or (i, j) = (1, 3)).
  std::size_t shift = 0;
};

namespace detail {

inline HigherDimClass classify_given_order(const HigherDimInstance& hd) {
  std::size_t n = hd.n();
  const auto& ell = hd.base().ell();
  auto L = [&](std::size_t r) { return ell[(r - 1) % n]; };  // l_{[r]}, r >= 1
  std::size_t p = hd.p(), q = hd.q();
  std::vector<std::size_t> I(hd.I().begin(), hd.I().end()), J(hd.J().begin(), hd.J().end());
  BaseCase bc = hd.base_case();

  if (p == 0 && q == 0) {
    auto cls = classify_nearly_gorenstein(hd.base());
    std::string tag = "main";
    if (cls.is_ng) tag += cls.which == TheoremCase::A ? "(a)" : "(b)";
    return {cls.is_ng, tag, 0};
  }
  if (bc == BaseCase::Other)
    throw UnsupportedBaseCase("base exponents fit neither the all-ones nor the tail hypothesis");

  bool disjoint = std::none_of(I.begin(), I.end(), [&](std::size_t r) { return hd.J().count(r); });
  bool ell_one_on_I = std::all_of(I.begin(), I.end(), [&](std::size_t r) { return L(r) == 1; });
  if (n == 3) {
    if (bc == BaseCase::AllOnes) return {disjoint && ell_one_on_I, "n3AGL", 0};
    return {disjoint && !hd.J().count(1) && ell_one_on_I, "n3nonAGL", 0};
  }

  if (bc == BaseCase::AllOnes) {
    const std::string t = "newAGcase";
    if (p + q >= 3) return {false, t + "(3)", 0};
    if (p == 1 && q == 0) {
      std::size_t i = I[0];
      bool ok = true;
      for (std::size_t k = 0; k + 3 <= n; ++k) ok = ok && L(i + k) == 1;
      return {ok, t + "(1a)", i - 1};
    }
    if (p == 0 && q == 1) {
      std::size_t i = J[0];
      bool ok = true;
      for (std::size_t k = 1; k + 3 <= n; ++k) ok = ok && L(i + k) == 1;
      return {ok, t + "(1b)", i - 1};
    }
    if (p == 0 && q == 2) {
      std::size_t i = J[0], j = J[1];
      bool pair = (i == 1 && j == 3) || (i == 2 && j == 4);
      bool ok = n == 4 && pair && L(i + 1) == 1 && L(j + 1) == 1;
      return {ok, t + "(2a)", ok ? i - 1 : 0};
    }
    if (p == 1 && q == 1) {
      std::size_t i = I[0], j = J[0];
      bool pair = n == 4 && (j + 4 - i) % 4 == 2;
      bool ok = pair && L(i) == 1 && L(i + 1) == 1 && L(j + 1) == 1;
      return {ok, t + "(2b)", ok ? i - 1 : 0};
    }
    return {false, t + "(2c)", 0};
  }

  const std::string t = "newnonAGcase";
  if (p + q >= 3) return {false, t + "(3)", 0};
  if (p == 1 && q == 0) {
    std::size_t i = I[0];
    return {i == 1 || (i == n && L(n) == 1), t + "(1a)", 0};
  }
  if (p == 0 && q == 1) {
    std::size_t i = J[0];
    return {i == n || (i == n - 1 && L(n) == 1), t + "(1b)", 0};
  }
  if (p == 1 && q == 1) {
    bool ok = n == 4 && I[0] == 1 && J[0] == 3 && L(4) == 1;
    return {ok, t + "(2b)", 0};
  }
  return {false, t + "(2a)", 0};
}

}  // namespace detail

/// The same deformation presented after a dihedral relabeling. Reversal
/// swaps the rows, so the Y-positions and Z-positions trade places.
inline HigherDimInstance transformed(const HigherDimInstance& hd, const Symmetry& s) {
  std::size_t n = hd.n();
  auto image = [&](std::size_t old) {  // 1-based old label -> 1-based new label
    std::size_t k = s.reversed ? n - old : old - 1;
    return (k + n - s.shift % n) % n + 1;
  };
  std::set<std::size_t> I2, J2;
  for (std::size_t r : hd.I()) (s.reversed ? J2 : I2).insert(image(r));
  for (std::size_t r : hd.J()) (s.reversed ? I2 : J2).insert(image(r));
  return HigherDimInstance(hd.base().transformed(s), I2, J2);
}

struct HigherDimClassification {
  HigherDimClass result;
  /// Set only when the dihedral scan had to move away from the given order.
  std::optional<Symmetry> symmetry;
};

/// Nearly Gorenstein by the classification results, applied in the given
/// order. With `dihedral_scan`, an unsupported base case is retried on the
/// dihedral images of the instance.
inline HigherDimClassification classify(const HigherDimInstance& hd, bool dihedral_scan = false) {
  try {
    return {detail::classify_given_order(hd), std::nullopt};
  } catch (const UnsupportedBaseCase&) {
    if (!dihedral_scan) throw;
    for (const auto& s : dihedral_symmetries(hd.n())) {
      auto t = transformed(hd, s);
      if (t.base_case() == BaseCase::Other) continue;
      return {detail::classify_given_order(t), s};
    }
    throw;
  }
}

using PolyRow = std::vector<Polynomial>;

/// The explicit kernel rows from the proofs, as polynomial vectors over the
/// ring of hd. Rows are written for the normalized indices and relabeled
/// back through the rotation recorded by classify.
inline std::vector<PolyRow> witness_rows(const HigherDimInstance& hd) {
  auto cls = detail::classify_given_order(hd);
  if (!cls.is_ng) throw NotApplicable("the deformation is not nearly Gorenstein");
  std::size_t n = hd.n();
  std::size_t s = cls.shift;
  auto lab = [&](std::size_t k) { return (k - 1 + s) % n + 1; };  // normalized -> given
  const auto& f = hd.base().form();
  auto L = [&](std::size_t k) { return f.ell[lab(k) - 1]; };
  auto Mx = [&](std::size_t k) { return f.m[lab(k) - 1]; };
  auto x = [&](std::size_t k, Int e = 1) { return hd.x(lab(k), e); };
  auto y = [&](std::size_t k) { return hd.y(lab(k)); };
  auto z = [&](std::size_t k) { return hd.z(lab(k)); };

  // (x_1, ..., x_{n-1})
  auto row1 = [&] {
    PolyRow r;
    for (std::size_t k = 1; k < n; ++k) r.push_back(x(k));
    return r;
  };
  // (x_2 x_{n-1}^{l-1}, ..., x_{n-2} x_{n-1}^{l-1}, x_{n-1}^{l}, x_n)
  auto row2 = [&] {
    PolyRow r;
    Polynomial t = x(n - 1, L(n - 1) - 1);
    for (std::size_t k = 2; k + 2 <= n; ++k) r.push_back(x(k) * t);
    r.push_back(x(n - 1, L(n - 1)));
    r.push_back(x(n));
    return r;
  };
  // (x_3 x_{n-1}^{l-1} x_n^{l'-1}, ..., x_{n-1}^{l} x_n^{l'-1}, x_n^{l'}, last)
  auto row3 = [&](Polynomial last) {
    PolyRow r;
    Polynomial t = x(n - 1, L(n - 1) - 1) * x(n, L(n) - 1);
    for (std::size_t k = 3; k + 2 <= n; ++k) r.push_back(x(k) * t);
    r.push_back(x(n - 1, L(n - 1)) * x(n, L(n) - 1));
    r.push_back(x(n, L(n)));
    r.push_back(std::move(last));
    return r;
  };
  // (first, x_1^{m_1}, x_1^{m_1-1} x_2, ..., x_1^{m_1-1} x_{upto})
  auto tail_row = [&](std::vector<Polynomial> head, std::size_t upto) {
    PolyRow r = std::move(head);
    r.push_back(x(1, Mx(1)));
    for (std::size_t k = 2; k <= upto; ++k) r.push_back(x(1, Mx(1) - 1) * x(k));
    return r;
  };

  const std::string& rule = cls.rule;
  if (hd.p() == 0 && hd.q() == 0) {
    if (!f.case_b())
      throw NoTabulatedWitness("no explicit rows for " + rule + " outside case (b) in the given order");
    return {row1(), row2()};
  }
  if (rule == "newAGcase(1a)") return {row1(), row2(), row3(x(1) + y(1))};
  if (rule == "newAGcase(1b)") {
    PolyRow r = row1();
    r[0] = x(1, L(1)) + z(1);
    return {r, row2(), row3(x(1))};
  }
  if (rule == "newAGcase(2a)")
    return {{x(1, L(1)) + z(1), x(2), x(3)}, {x(3, L(3)) + z(3), x(4), x(1)}};
  if (rule == "newAGcase(2b)")
    return {{x(1), x(2), x(3)}, {x(3, L(3)) + z(3), x(4), x(1) + y(1)}};
  if (rule == "newnonAGcase(1a)") {
    if (hd.I().count(1)) return {row1(), row2(), row3(x(1, Mx(1)) + y(1))};
    PolyRow r2 = row2();
    r2.back() += y(n);
    return {row1(), r2, tail_row({x(n)}, n - 2)};
  }
  if (rule == "newnonAGcase(1b)") {
    if (hd.J().count(n)) return {row1(), row2(), tail_row({x(n, L(n)) + z(n)}, n - 2)};
    return {row1(), tail_row({x(n - 1, L(n - 1)) + z(n - 1), x(n)}, n - 3)};
  }
  if (rule == "newnonAGcase(2b)")
    return {{x(1), x(2), x(3)}, {x(3, L(3)) + z(3), x(4), x(1, Mx(1)) + y(1)}};
  throw NoTabulatedWitness("no tabulated kernel rows for " + rule);
}

struct WitnessReport {
  std::vector<PolyRow> rows;
  std::size_t products_reduced = 0;
  std::string rule;
};

/// Every entry of f.M reduces to 0 modulo I_2(D^I_J) for each row f, and
/// the row entries together with I_2(D^I_J) contain every variable.
inline WitnessReport verify_rows(const HigherDimInstance& hd, std::vector<PolyRow> rows,
                                 const GroebnerOptions& options = {}) {
  auto mats = build_matrices(hd);
  auto minors = two_minors(mats.D);
  auto gb = buchberger(hd.ring(), minors, options);
  WitnessReport report;
  std::size_t n = hd.n();
  for (const auto& row : rows) {
    if (row.size() != n - 1) throw InvalidInput("kernel rows need n - 1 entries");
    for (std::size_t col = 0; col < n * (n - 2); ++col) {
      Polynomial prod(hd.ring());
      for (std::size_t j = 0; j + 1 < n; ++j)
        if (!mats.M[j][col].is_zero()) prod += row[j] * mats.M[j][col];
      auto nf = gb.reduce(prod);
      ++report.products_reduced;
      if (!nf.is_zero())
        throw WitnessFailed("column " + std::to_string(col + 1) + " of f.M does not vanish",
                            nf.to_string());
    }
  }
  std::vector<Polynomial> gens = minors;
  for (const auto& row : rows) gens.insert(gens.end(), row.begin(), row.end());
  auto entries_gb = buchberger(hd.ring(), gens, options);
  for (std::size_t v = 0; v < hd.ring()->size(); ++v) {
    auto var = Polynomial::variable(hd.ring(), v);
    auto nf = entries_gb.reduce(var);
    if (!nf.is_zero())
      throw WitnessFailed("variable " + hd.ring()->names()[v] + " is not in the trace ideal",
                          nf.to_string());
  }
  report.rows = std::move(rows);
  return report;
}

inline WitnessReport verify_witness(const HigherDimInstance& hd, const GroebnerOptions& options = {}) {
  auto report = verify_rows(hd, witness_rows(hd), options);
  report.rule = detail::classify_given_order(hd).rule;
  return report;
}

struct TraceN3 {
  std::vector<Polynomial> generators;  // entries of N, i.e. all V_r and U_r
  bool is_ng = false;
  std::vector<std::string> missing;    // variables outside the trace
};

/// For n = 3 the canonical trace is the ideal of entries of N.
inline TraceN3 trace_n3(const HigherDimInstance& hd, const GroebnerOptions& options = {}) {
  if (hd.n() != 3) throw NotApplicable("trace_n3 needs n = 3");
  TraceN3 out;
  for (std::size_t r = 1; r <= 3; ++r) {
    out.generators.push_back(hd.V(r));
    out.generators.push_back(hd.U(r));
  }
  std::vector<Polynomial> gens = two_minors(build_matrices(hd).D);
  gens.insert(gens.end(), out.generators.begin(), out.generators.end());
  auto gb = buchberger(hd.ring(), gens, options);
  for (std::size_t v = 0; v < hd.ring()->size(); ++v)
    if (!gb.contains(Polynomial::variable(hd.ring(), v)))
      out.missing.push_back(hd.ring()->names()[v]);
  out.is_ng = out.missing.empty();
  return out;
}

}  // namespace ngtrace

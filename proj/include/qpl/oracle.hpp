#pragma once

// Numeric oracle: quasideterminants, quasi-Plücker and flag coordinates of
// concrete matrices over Q or over the rational quaternions, and exact
// residuals of presentation relations evaluated on them.

#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "qpl/presentations.hpp"

namespace qpl {

/// |M|_{pq} = ((M^-1)_{qp})^-1, 0-based positions. Throws Undefined.
template <class T>
T quasideterminant(const Matrix<T>& m, std::size_t p, std::size_t q) {
  if (m.rows() != m.cols()) throw ShapeMismatch("quasideterminant: matrix not square");
  if (p >= m.rows() || q >= m.cols()) throw OutOfRange("quasideterminant: position outside matrix");
  Matrix<T> inv;
  try {
    inv = invert(m);
  } catch (const SingularMatrix&) {
    throw Undefined("quasideterminant of a singular matrix");
  }
  if (is_zero(inv(q, p))) throw Undefined("quasideterminant: inverse entry is zero");
  return inverse(inv(q, p));
}

/// First `rows` rows of A restricted to 1-based columns `cols`, in order.
template <class T>
Matrix<T> column_block(const Matrix<T>& a, std::size_t rows, const std::vector<int>& cols) {
  if (rows > a.rows()) throw ShapeMismatch("matrix has too few rows");
  std::vector<std::size_t> r(rows), c;
  for (std::size_t t = 0; t < rows; ++t) r[t] = t;
  for (int x : cols) {
    if (x < 1 || static_cast<std::size_t>(x) > a.cols()) throw ShapeMismatch("column index outside matrix");
    c.push_back(static_cast<std::size_t>(x - 1));
  }
  return a.submatrix(r, c);
}

/// Quasiminor p^(s)_{i|I}: quasideterminant at (s, first column) of the
/// columns (i, I) over the first |I|+1 rows.
template <class T>
T quasi_minor(const Matrix<T>& a, int i, const IndexSet& sup, std::size_t s) {
  std::vector<int> cols{i};
  cols.insert(cols.end(), sup.begin(), sup.end());
  return quasideterminant(column_block(a, sup.size() + 1, cols), s, 0);
}

/// q_ij^I for one choice of row s. Zero when j is in I.
template <class T>
T quasi_plucker(const Matrix<T>& a, int i, int j, const IndexSet& sup, std::size_t s) {
  if (set_contains(sup, i)) throw Undefined("quasi-Plücker coordinate with i in I");
  if (set_contains(sup, j)) return T();
  if (i == j) return T(1);
  return inverse(quasi_minor(a, i, sup, s)) * quasi_minor(a, j, sup, s);
}

/// q_ij^I evaluated at every row s where it is defined; throws
/// OracleMismatch when two rows disagree and Undefined when none works.
template <class T>
T quasi_plucker(const Matrix<T>& a, int i, int j, const IndexSet& sup) {
  std::optional<T> value;
  for (std::size_t s = 0; s <= sup.size(); ++s) {
    T v;
    try {
      v = quasi_plucker(a, i, j, sup, s);
    } catch (const Undefined&) {
      continue;
    } catch (const SingularMatrix&) {
      continue;
    }
    if (value && !(*value == v)) throw OracleMismatch("quasi-Plücker value depends on the row choice");
    value = v;
  }
  if (!value) throw Undefined("quasi-Plücker coordinate undefined for every row choice");
  return *value;
}

/// f_{i,I}: quasideterminant at (last row, first column) of the columns
/// (i, I) over the first |I|+1 rows.
template <class T>
T flag_coordinate(const Matrix<T>& a, int i, const IndexSet& sup) {
  if (set_contains(sup, i)) throw Undefined("flag coordinate with i in I");
  std::vector<int> cols{i};
  cols.insert(cols.end(), sup.begin(), sup.end());
  return quasideterminant(column_block(a, sup.size() + 1, cols), sup.size(), 0);
}

/// Value of one generator of a q or f family presentation.
template <class T>
T evaluate_label(const Matrix<T>& a, const GeneratorLabel& g) {
  switch (g.family) {
    case Family::q:
      return quasi_plucker(a, g.i, g.j, g.sup);
    case Family::f: {
      const T v = flag_coordinate(a, g.i, g.sup);
      if (!g.inverted) return v;
      if (is_zero(v)) throw Undefined("inverse of a zero flag coordinate");
      return inverse(v);
    }
    default:
      throw InvalidParams("dual generators have no matrix evaluation");
  }
}

/// Rows a matrix needs so every generator of P can be evaluated.
std::size_t required_rows(const Presentation& p);

struct RelationResidual {
  std::size_t index = 0;
  std::string source;
  std::string status;  // "zero", "nonzero" or "skipped"
  std::string residual;
};

struct NumericReport {
  std::size_t trials = 0;
  std::size_t checked = 0;
  std::size_t zero = 0;
  std::size_t nonzero = 0;
  std::size_t skipped = 0;
  std::size_t retries = 0;
  std::vector<RelationResidual> failures;  // nonzero residuals only
  std::vector<RelationResidual> entries;   // every evaluation when requested

  bool passed() const { return nonzero == 0 && checked > 0; }
  void merge(const NumericReport& o);
};

template <class T>
std::string residual_text(const T& v) {
  return to_string(v);
}

/// Substitutes the coordinates of A into every relation of P.
template <class T>
NumericReport verify_presentation_numerically(const Presentation& p, const Matrix<T>& a,
                                              bool keep_entries = false) {
  if (a.rows() < required_rows(p) || a.cols() < static_cast<std::size_t>(p.n))
    throw ShapeMismatch("matrix " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                        " too small for " + p.name);
  NumericReport rep;
  rep.trials = 1;
  std::vector<std::optional<T>> values(p.alphabet.size());
  std::vector<bool> undefined(p.alphabet.size(), false);
  for (GenId g = 0; g < p.alphabet.size(); ++g) {
    try {
      values[g] = evaluate_label(a, p.alphabet.label(g));
    } catch (const Undefined&) {
      undefined[g] = true;
    }
  }
  for (std::size_t r = 0; r < p.relations.size(); ++r) {
    RelationResidual e;
    e.index = r;
    e.source = p.relations[r].source;
    T total;
    bool skip = false;
    for (const auto& [w, c] : p.relations[r].poly.terms()) {
      T prod(c);
      for (GenId x : w) {
        if (undefined[x]) {
          skip = true;
          break;
        }
        prod *= *values[x];
      }
      if (skip) break;
      total += prod;
    }
    if (skip) {
      ++rep.skipped;
      e.status = "skipped";
    } else {
      ++rep.checked;
      e.residual = residual_text(total);
      if (is_zero(total)) {
        ++rep.zero;
        e.status = "zero";
      } else {
        ++rep.nonzero;
        e.status = "nonzero";
        rep.failures.push_back(e);
      }
    }
    if (keep_entries) rep.entries.push_back(std::move(e));
  }
  return rep;
}

Rational random_rational_entry(std::mt19937_64& rng, int bound);

template <class T>
Matrix<T> random_matrix(std::size_t rows, std::size_t cols, std::mt19937_64& rng, int bound = 5);

template <>
inline RationalMatrix random_matrix<Rational>(std::size_t rows, std::size_t cols, std::mt19937_64& rng, int bound) {
  RationalMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = random_rational_entry(rng, bound);
  return m;
}

template <>
inline QuaternionMatrix random_matrix<Quaternion>(std::size_t rows, std::size_t cols, std::mt19937_64& rng,
                                                  int bound) {
  QuaternionMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      m(r, c) = Quaternion(random_rational_entry(rng, bound), random_rational_entry(rng, bound),
                           random_rational_entry(rng, bound), random_rational_entry(rng, bound));
  return m;
}

/// True when every generator of P is defined on A.
template <class T>
bool all_generators_defined(const Presentation& p, const Matrix<T>& a) {
  for (const auto& g : p.alphabet.labels()) {
    try {
      (void)evaluate_label(a, g);
    } catch (const Undefined&) {
      return false;
    }
  }
  return true;
}

/// Seeded random trials; a matrix on which some generator is undefined is
/// redrawn up to `max_retries` times before being used anyway.
template <class T>
NumericReport verify_random(const Presentation& p, std::size_t trials, std::uint64_t seed, int bound = 5,
                            std::size_t max_retries = 50) {
  std::mt19937_64 rng(seed);
  NumericReport total;
  const std::size_t rows = required_rows(p);
  for (std::size_t t = 0; t < trials; ++t) {
    Matrix<T> a = random_matrix<T>(rows, static_cast<std::size_t>(p.n), rng, bound);
    for (std::size_t attempt = 0; attempt < max_retries && !all_generators_defined(p, a); ++attempt) {
      a = random_matrix<T>(rows, static_cast<std::size_t>(p.n), rng, bound);
      ++total.retries;
    }
    total.merge(verify_presentation_numerically(p, a));
  }
  return total;
}

/// det of the columns `cols` (1-based, in the given order) of a k x n matrix.
Rational classical_plucker(const RationalMatrix& a, const std::vector<int>& cols);

/// sum_t (-1)^t p_{I j_t} p_{J \ j_t} for |I| = k-1, |J| = k+1.
Rational classical_plucker_residual(const RationalMatrix& a, const std::vector<int>& I, const std::vector<int>& J);

/// Every classical relation for all (I, J) on one matrix; returns how many
/// were nonzero.
std::size_t verify_classical(const RationalMatrix& a);

/// sum_{j in L} q_ij^M q_ji^{L \ j}, the left side of the inverse-sum
/// relation.
template <class T>
T plucker_sum(const Matrix<T>& a, int i, const IndexSet& M, const IndexSet& L) {
  T total;
  for (int j : L) {
    if (j == i) continue;
    total += quasi_plucker(a, i, j, M) * quasi_plucker(a, j, i, set_minus(L, {j}));
  }
  return total;
}

}  // namespace qpl

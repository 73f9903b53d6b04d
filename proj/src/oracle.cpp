#include "qpl/oracle.hpp"

namespace qpl {

std::size_t required_rows(const Presentation& p) {
  std::size_t rows = 1;
  for (const auto& g : p.alphabet.labels()) rows = std::max(rows, g.sup.size() + 1);
  return rows;
}

void NumericReport::merge(const NumericReport& o) {
  trials += o.trials;
  checked += o.checked;
  zero += o.zero;
  nonzero += o.nonzero;
  skipped += o.skipped;
  retries += o.retries;
  failures.insert(failures.end(), o.failures.begin(), o.failures.end());
  entries.insert(entries.end(), o.entries.begin(), o.entries.end());
}

Rational random_rational_entry(std::mt19937_64& rng, int bound) {
  std::uniform_int_distribution<int> dist(-bound, bound);
  return Rational(dist(rng));
}

Rational classical_plucker(const RationalMatrix& a, const std::vector<int>& cols) {
  if (cols.size() != a.rows()) throw ShapeMismatch("classical Plücker coordinate needs k columns");
  return determinant(column_block(a, a.rows(), cols));
}

Rational classical_plucker_residual(const RationalMatrix& a, const std::vector<int>& I, const std::vector<int>& J) {
  const std::size_t k = a.rows();
  if (I.size() + 1 != k || J.size() != k + 1) throw ShapeMismatch("classical relation needs |I| = k-1, |J| = k+1");
  Rational total = 0;
  for (std::size_t t = 0; t < J.size(); ++t) {
    std::vector<int> left = I;
    left.push_back(J[t]);
    std::vector<int> right;
    for (std::size_t u = 0; u < J.size(); ++u)
      if (u != t) right.push_back(J[u]);
    const Rational term = classical_plucker(a, left) * classical_plucker(a, right);
    if (t % 2) total -= term;
    else total += term;
  }
  return total;
}

std::size_t verify_classical(const RationalMatrix& a) {
  const std::size_t k = a.rows();
  const IndexSet all = range_set(static_cast<int>(a.cols()));
  std::size_t bad = 0;
  for (const auto& I : subsets(all, k - 1))
    for (const auto& J : subsets(all, k + 1))
      if (sgn(classical_plucker_residual(a, I, J)) != 0) ++bad;
  return bad;
}

}  // namespace qpl

#include "qpl/hilbert.hpp"

#include <algorithm>

namespace qpl {

SeriesCoeffs RationalForm::expand(std::size_t D) const {
  if (denominator.empty() || abs(denominator[0]) != 1)
    throw InvalidParams("denominator must have constant term +1 or -1");
  SeriesCoeffs out(D + 1, Integer(0));
  for (std::size_t m = 0; m <= D; ++m) {
    Integer acc = m < numerator.size() ? numerator[m] : Integer(0);
    for (std::size_t d = 1; d < denominator.size() && d <= m; ++d) acc -= denominator[d] * out[m - d];
    out[m] = acc * denominator[0];
  }
  return out;
}

SeriesCoeffs dims_by_enumeration(const RewriteSystem& s, std::size_t D) {
  SeriesCoeffs out;
  for (std::size_t d = 0; d <= D; ++d) out.push_back(count_normal_words(s, d));
  return out;
}

SeriesCoeffs dims_by_transfer_matrix(const RewriteSystem& s, std::size_t D) {
  if (s.max_lead_degree() > 2) throw NotQuadratic("transfer matrix needs leads of degree at most 2");
  if (D > s.certified_degree)
    throw NotConfluent("system certified only up to degree " + std::to_string(s.certified_degree));
  SeriesCoeffs out{s.unit_in_ideal() ? Integer(0) : Integer(1)};
  if (D == 0 || s.unit_in_ideal()) {
    out.resize(D + 1, Integer(0));
    return out;
  }
  const auto gens = s.order().sorted_generators();
  const std::size_t n = gens.size();
  std::vector<bool> letter(n);
  for (std::size_t a = 0; a < n; ++a) letter[a] = s.find(Word{gens[a]}) == nullptr;
  std::vector<std::vector<int>> T(n, std::vector<int>(n, 0));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      T[a][b] = letter[a] && letter[b] && s.find(Word{gens[a], gens[b]}) == nullptr;
  std::vector<Integer> v(n);
  for (std::size_t a = 0; a < n; ++a) v[a] = letter[a] ? 1 : 0;
  for (std::size_t d = 1; d <= D; ++d) {
    Integer total = 0;
    for (const auto& x : v) total += x;
    out.push_back(total);
    std::vector<Integer> next(n, Integer(0));
    for (std::size_t a = 0; a < n; ++a) {
      if (v[a] == 0) continue;
      for (std::size_t b = 0; b < n; ++b)
        if (T[a][b]) next[b] += v[a];
    }
    v = std::move(next);
  }
  return out;
}

RationalForm koszul_form(const SeriesCoeffs& dual_dims) {
  RationalForm f;
  f.denominator.clear();
  for (std::size_t d = 0; d < dual_dims.size(); ++d) f.denominator.push_back(d % 2 ? Integer(-dual_dims[d]) : dual_dims[d]);
  return f;
}

SeriesCoeffs series_reciprocal(const SeriesCoeffs& dual_dims, std::size_t D) {
  if (dual_dims.empty() || dual_dims[0] != 1) throw InvalidParams("series_reciprocal needs a_0 = 1");
  SeriesCoeffs b(D + 1, Integer(0));
  b[0] = 1;
  for (std::size_t m = 1; m <= D; ++m)
    for (std::size_t d = 1; d <= m && d < dual_dims.size(); ++d) {
      if (d % 2) b[m] += dual_dims[d] * b[m - d];
      else b[m] -= dual_dims[d] * b[m - d];
    }
  return b;
}

namespace {

Integer binomial(int n, int k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Integer pow2(int e) {
  Integer r = 1;
  r <<= static_cast<mp_bitcnt_t>(e);
  return r;
}

}  // namespace

Integer closed_form_B2_coefficient(int n, int l) {
  if (n < 3 || l < 1 || l > n - 1)
    throw OutOfRange("closed form needs n >= 3 and 1 <= l <= n-1, got n=" + std::to_string(n) + ", l=" +
                     std::to_string(l));
  Integer inner = l - 1;
  for (int i = 0; i <= n - l - 2; ++i) inner += (i + l) * pow2(i);
  return binomial(n, l - 1) * inner;
}

Integer closed_form_B2_top(int n) {
  if (n < 3) throw OutOfRange("closed form needs n >= 3");
  Integer s = 0;
  for (int i = 0; i <= n - 3; ++i) s += (i + 1) * pow2(i);
  return s;
}

Integer closed_form_B2_h1(int n) {
  if (n < 3) throw OutOfRange("closed form needs n >= 3");
  return Integer(n) * (n - 1) * (n - 2) / 2;
}

std::size_t top_degree(const SeriesCoeffs& a) {
  std::size_t top = 0;
  for (std::size_t d = 0; d < a.size(); ++d)
    if (a[d] != 0) top = d;
  return top;
}

RecursionReport recursion_check(const SeriesCoeffs& dims, const RationalForm& form) {
  RecursionReport rep;
  for (std::size_t m = 0; m < dims.size(); ++m) {
    Integer acc = 0;
    for (std::size_t d = 0; d < form.denominator.size() && d <= m; ++d) acc += form.denominator[d] * dims[m - d];
    const Integer want = m < form.numerator.size() ? form.numerator[m] : Integer(0);
    if (acc != want) {
      rep.ok = false;
      rep.first_failure = m;
      rep.message = "coefficient " + std::to_string(m) + " violates the recursion (residual " +
                    Integer(acc - want).get_str() + ")";
      return rep;
    }
  }
  return rep;
}

std::vector<std::string> to_strings(const SeriesCoeffs& a) {
  std::vector<std::string> out;
  for (const auto& x : a) out.push_back(x.get_str());
  return out;
}

}  // namespace qpl

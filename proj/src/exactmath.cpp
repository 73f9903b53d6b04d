#include "qpl/exactmath.hpp"

#include <sstream>

namespace qpl {

std::string to_string(const Rational& r) { return r.get_str(); }

Rational parse_rational(const std::string& text) {
  Rational r;
  if (text.empty() || r.set_str(text, 10) != 0) throw ParseError("bad rational: '" + text + "'");
  if (r.get_den() == 0) throw ParseError("zero denominator: '" + text + "'");
  r.canonicalize();
  return r;
}

Quaternion Quaternion::inverse() const {
  const Rational n = norm();
  if (sgn(n) == 0) throw SingularMatrix("inverse of zero quaternion");
  return {a_ / n, -b_ / n, -c_ / n, -d_ / n};
}

Quaternion operator+(const Quaternion& p, const Quaternion& q) {
  return {p.a_ + q.a_, p.b_ + q.b_, p.c_ + q.c_, p.d_ + q.d_};
}

Quaternion operator-(const Quaternion& p, const Quaternion& q) {
  return {p.a_ - q.a_, p.b_ - q.b_, p.c_ - q.c_, p.d_ - q.d_};
}

Quaternion operator-(const Quaternion& p) { return {-p.a_, -p.b_, -p.c_, -p.d_}; }

// Hamilton product: ij = k, jk = i, ki = j.
Quaternion operator*(const Quaternion& p, const Quaternion& q) {
  return {p.a_ * q.a_ - p.b_ * q.b_ - p.c_ * q.c_ - p.d_ * q.d_,
          p.a_ * q.b_ + p.b_ * q.a_ + p.c_ * q.d_ - p.d_ * q.c_,
          p.a_ * q.c_ - p.b_ * q.d_ + p.c_ * q.a_ + p.d_ * q.b_,
          p.a_ * q.d_ + p.b_ * q.c_ - p.c_ * q.b_ + p.d_ * q.a_};
}

bool operator==(const Quaternion& p, const Quaternion& q) {
  return p.a_ == q.a_ && p.b_ == q.b_ && p.c_ == q.c_ && p.d_ == q.d_;
}

std::string to_string(const Quaternion& q) {
  std::ostringstream os;
  os << '(' << to_string(q.re()) << ',' << to_string(q.i()) << ',' << to_string(q.j()) << ','
     << to_string(q.k()) << ')';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Quaternion& q) { return os << to_string(q); }

RrefResult rref(RationalMatrix m) {
  RrefResult out;
  std::size_t row = 0;
  for (std::size_t c = 0; c < m.cols() && row < m.rows(); ++c) {
    std::size_t p = row;
    while (p < m.rows() && sgn(m(p, c)) == 0) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(p, row);
    const Rational scale = 1 / m(row, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(row, j) *= scale;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || sgn(m(r, c)) == 0) continue;
      const Rational f = m(r, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(r, j) -= f * m(row, j);
    }
    out.pivots.push_back(c);
    ++row;
  }
  out.rank = row;
  out.reduced = std::move(m);
  return out;
}

std::vector<std::vector<Rational>> kernel_basis(const RationalMatrix& m) {
  const RrefResult r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : r.pivots) is_pivot[p] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(m.cols(), Rational(0));
    v[free] = 1;
    for (std::size_t i = 0; i < r.pivots.size(); ++i) v[r.pivots[i]] = -r.reduced(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

Rational determinant(RationalMatrix m) {
  if (m.rows() != m.cols()) throw ShapeMismatch("determinant: matrix not square");
  const std::size_t n = m.rows();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(m(p, c)) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      m.swap_rows(p, c);
      det = -det;
    }
    det *= m(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (sgn(m(r, c)) == 0) continue;
      const Rational f = m(r, c) / m(c, c);
      for (std::size_t j = c; j < n; ++j) m(r, j) -= f * m(c, j);
    }
  }
  return det;
}

namespace {

void axpy(SparseRow& row, const Rational& f, const SparseRow& pivot_row) {
  for (const auto& [col, v] : pivot_row) {
    auto [it, fresh] = row.try_emplace(col, 0);
    it->second -= f * v;
    if (sgn(it->second) == 0) row.erase(it);
  }
}

}  // namespace

SparseRow SparseEchelon::reduce(SparseRow row) const {
  SparseRow rest;
  while (!row.empty()) {
    auto lead = row.begin();
    auto pivot = rows_.find(lead->first);
    if (pivot == rows_.end()) {
      rest.insert(*lead);
      row.erase(lead);
      continue;
    }
    const Rational f = lead->second;
    axpy(row, f, pivot->second);
  }
  return rest;
}

bool SparseEchelon::insert(SparseRow row) {
  SparseRow rest = reduce(std::move(row));
  if (rest.empty()) return false;
  const Rational scale = 1 / rest.begin()->second;
  for (auto& [col, v] : rest) v *= scale;
  const std::size_t pivot = rest.begin()->first;
  rows_.emplace(pivot, std::move(rest));
  return true;
}

void SparseEchelon::make_reduced() {
  // Walk pivots from the largest column down so each row is cleared of
  // later pivots that are already fully reduced.
  for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
    SparseRow& row = it->second;
    bool changed = true;
    while (changed) {
      changed = false;
      for (auto e = std::next(row.begin()); e != row.end(); ++e) {
        auto pivot = rows_.find(e->first);
        if (pivot == rows_.end()) continue;
        const Rational f = e->second;
        axpy(row, f, pivot->second);
        changed = true;
        break;
      }
    }
  }
}

std::vector<SparseRow> sparse_kernel(const std::vector<SparseRow>& rows, std::size_t cols) {
  SparseEchelon ech;
  for (const auto& r : rows) ech.insert(r);
  ech.make_reduced();
  std::vector<std::vector<std::pair<std::size_t, Rational>>> column_entries(cols);
  for (const auto& [pivot, row] : ech.rows())
    for (const auto& [col, v] : row)
      if (col != pivot) column_entries[col].emplace_back(pivot, v);
  std::vector<SparseRow> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (ech.rows().count(free)) continue;
    SparseRow v;
    v.emplace(free, 1);
    for (const auto& [pivot, coeff] : column_entries[free]) v.emplace(pivot, -coeff);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace qpl

#include "qpl/quaddual.hpp"

#include <algorithm>
#include <numeric>

namespace qpl {

namespace {

std::size_t column(const Word& w, std::size_t n) { return static_cast<std::size_t>(w[0]) * n + w[1]; }

Word column_word(std::size_t c, std::size_t n) {
  return {static_cast<GenId>(c / n), static_cast<GenId>(c % n)};
}

SparseRow to_row(const FreePoly& p, std::size_t n) {
  SparseRow row;
  for (const auto& [w, c] : p.terms())
    if (w.size() == 2) row.emplace(column(w, n), c);
  return row;
}

FreePoly to_poly(const SparseRow& row, std::size_t n) {
  FreePoly p;
  for (const auto& [c, v] : row) p.add(column_word(c, n), v);
  return p;
}

std::size_t rank_of(const std::vector<SparseRow>& rows) {
  SparseEchelon e;
  for (const auto& r : rows) e.insert(r);
  return e.rank();
}

std::optional<SparseRow> outside_span(const std::vector<SparseRow>& base, const std::vector<SparseRow>& probe) {
  SparseEchelon e;
  for (const auto& r : base) e.insert(r);
  for (const auto& r : probe)
    if (!e.reduce(r).empty()) return r;
  return std::nullopt;
}

DualMatchReport compare_rows(const std::vector<SparseRow>& a, const std::vector<SparseRow>& b, std::size_t n,
                             const Alphabet& alphabet) {
  DualMatchReport rep;
  rep.rank_computed = rank_of(a);
  rep.rank_expected = rank_of(b);
  std::vector<SparseRow> both = a;
  both.insert(both.end(), b.begin(), b.end());
  rep.rank_union = rank_of(both);
  rep.equal = rep.rank_computed == rep.rank_union && rep.rank_expected == rep.rank_union;
  if (!rep.equal) {
    if (auto w = outside_span(a, b)) {
      rep.witness = to_poly(*w, n);
      rep.witness_side = "expected";
    } else if (auto w2 = outside_span(b, a)) {
      rep.witness = to_poly(*w2, n);
      rep.witness_side = "computed";
    }
    if (rep.witness) rep.witness_text = to_string(*rep.witness, alphabet);
  }
  return rep;
}

}  // namespace

QuadraticData quadratic_data(const Presentation& p) {
  QuadraticData d;
  d.num_generators = p.alphabet.size();
  for (const auto& r : p.relations) {
    SparseRow row = to_row(r.degree2(), d.num_generators);
    if (!row.empty()) d.rows.push_back(std::move(row));
  }
  return d;
}

std::size_t degree2_rank(const Presentation& p) { return rank_of(quadratic_data(p).rows); }

Presentation quadratic_dual(const Presentation& p) {
  const QuadraticData data = quadratic_data(p);
  const std::size_t n = data.num_generators;
  const MonomialOrder order = p.monomial_order();

  // Position 0 is the largest word so echelon pivots are leading words.
  std::vector<std::size_t> cols(n * n);
  std::iota(cols.begin(), cols.end(), 0);
  std::sort(cols.begin(), cols.end(), [&](std::size_t x, std::size_t y) {
    return order.compare(column_word(x, n), column_word(y, n)) > 0;
  });
  std::vector<std::size_t> pos(n * n);
  for (std::size_t t = 0; t < cols.size(); ++t) pos[cols[t]] = t;

  auto permute = [&](const SparseRow& row) {
    SparseRow out;
    for (const auto& [c, v] : row) out.emplace(pos[c], v);
    return out;
  };
  std::vector<SparseRow> rows;
  rows.reserve(data.rows.size());
  for (const auto& r : data.rows) rows.push_back(permute(r));

  SparseEchelon dual;
  for (auto& v : sparse_kernel(rows, n * n)) dual.insert(std::move(v));
  dual.make_reduced();

  Presentation out;
  out.name = p.name + "!";
  out.n = p.n;
  out.k = p.k;
  out.order = p.order;
  for (auto& g : out.order.custom) g.family = dual_family(g.family);
  for (const auto& g : p.alphabet.labels()) {
    GeneratorLabel d = g;
    d.family = dual_family(g.family);
    out.alphabet.add(d);
  }
  for (const auto& [pivot, row] : dual.rows()) {
    FreePoly poly;
    for (const auto& [c, v] : row) poly.add(column_word(cols[c], n), v);
    out.add_relation(std::move(poly), "dual");
  }
  return out;
}

namespace {

std::vector<SparseRow> rows_in(const Presentation& src, const Alphabet& target) {
  std::vector<GenId> map(src.alphabet.size());
  for (GenId g = 0; g < src.alphabet.size(); ++g) {
    map[g] = target.id(src.alphabet.label(g));
  }
  const std::size_t n = target.size();
  std::vector<SparseRow> out;
  for (const auto& r : src.relations) {
    SparseRow row;
    const FreePoly quad = r.degree2();
    for (const auto& [w, c] : quad.terms()) row.emplace(static_cast<std::size_t>(map[w[0]]) * n + map[w[1]], c);
    if (!row.empty()) out.push_back(std::move(row));
  }
  return out;
}

void check_same_labels(const Alphabet& a, const Alphabet& b) {
  if (a.size() != b.size()) throw GeneratorMismatch("generator counts differ");
  for (const auto& l : b.labels())
    if (!a.find(l)) throw GeneratorMismatch("generator " + to_string(l) + " has no counterpart");
}

}  // namespace

DualMatchReport verify_dual_matches(const Presentation& computed, const Presentation& expected) {
  check_same_labels(computed.alphabet, expected.alphabet);
  return compare_rows(rows_in(computed, computed.alphabet), rows_in(expected, computed.alphabet),
                      computed.alphabet.size(), computed.alphabet);
}

}  // namespace qpl

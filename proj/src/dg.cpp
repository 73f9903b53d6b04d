#include "qpl/dg.hpp"

#include <map>
#include <optional>

namespace qpl {

namespace {

// r_ij^m, or nullopt when it vanishes or is absent.
std::optional<GenId> gen(const Alphabet& a, int i, int j, int m) {
  if (i == j || m == i || m == j) return std::nullopt;
  return a.find(make_pair_label(Family::r, i, j, {m}));
}

void add_product(FreePoly& out, const Alphabet& a, Rational c, int i1, int j1, int m1, int i2, int j2, int m2) {
  const auto x = gen(a, i1, j1, m1);
  const auto y = gen(a, i2, j2, m2);
  if (x && y) out.add(Word{*x, *y}, c);
}

std::string word_text(const Word& w, const Alphabet& a) { return to_string(w, a); }

}  // namespace

FreePoly Differential::apply(const Word& w) const {
  FreePoly out;
  for (std::size_t p = 0; p < w.size(); ++p) {
    const FreePoly& dx = images.at(w[p]);
    if (dx.is_zero()) continue;
    const Word left(w.begin(), w.begin() + static_cast<long>(p));
    const Word right(w.begin() + static_cast<long>(p) + 1, w.end());
    const Rational sign = p % 2 ? -1 : 1;
    for (const auto& [m, c] : dx.terms()) out.add(concat(concat(left, m), right), sign * c);
  }
  return normal_form(out, system);
}

FreePoly Differential::apply(const FreePoly& p) const {
  FreePoly out;
  for (const auto& [w, c] : p.terms()) out.add(apply(w), c);
  return out;
}

Differential build_differential(int n, DifferentialOptions opts) {
  if (n < 3) throw InvalidParams("the differential needs n >= 3");
  Differential d;
  d.n = n;
  d.algebra = build_B(n, 2);
  d.system = complete(orient(d.algebra), static_cast<std::size_t>(n) + 1).system;
  const Alphabet& a = d.algebra.alphabet;
  for (GenId g = 0; g < a.size(); ++g) {
    const auto& lab = a.label(g);
    const int i = lab.i, j = lab.j, k = lab.sup.at(0);
    FreePoly img;
    for (int l = i + 1; l <= j - 1; ++l) {
      add_product(img, a, -1, i, l, k, l, j, k);
      add_product(img, a, -1, i, l, k, l, j, i);
    }
    if (i < k && k < j)
      for (int l = 1; l <= n; ++l) {
        if (l == i || (opts.exclude_l_equals_j && l == j)) continue;
        add_product(img, a, 1, i, k, l, k, j, i);
      }
    d.images.push_back(normal_form(img, d.system));
  }
  return d;
}

DifferentialReport check_differential(const Differential& d) {
  DifferentialReport rep;
  const Alphabet& a = d.algebra.alphabet;
  auto note = [&](const std::string& what, const std::string& w, const FreePoly& r) {
    if (rep.witnesses.size() < 20) rep.witnesses.push_back(what + " " + w + ": " + to_string(r, a));
  };
  for (const auto& rel : d.algebra.relations) {
    const FreePoly r = d.apply(rel.poly);
    if (!r.is_zero()) {
      rep.well_defined = false;
      note("not well defined on", to_string(rel.poly, a), r);
    }
  }
  for (GenId g = 0; g < a.size(); ++g) {
    const FreePoly r = d.apply(d.images[g]);
    if (!r.is_zero()) {
      rep.squares_to_zero_generators = false;
      rep.squares_to_zero_all = false;
      note("d^2 nonzero on", word_text(Word{g}, a), r);
    }
  }
  for (std::size_t deg = 2; deg <= d.system.certified_degree; ++deg) {
    const auto words = normal_words(d.system, deg);
    if (words.empty()) break;
    for (const auto& w : words) {
      const FreePoly r = d.apply(d.apply(w));
      if (r.is_zero()) continue;
      rep.squares_to_zero_all = false;
      if (deg == 2) rep.squares_to_zero_degree2 = false;
      note("d^2 nonzero on", word_text(w, a), r);
    }
  }
  return rep;
}

ChainComplexDims homology_dims(const Differential& d) {
  ChainComplexDims out;
  std::vector<std::vector<Word>> basis;
  for (std::size_t deg = 0; deg <= d.system.certified_degree; ++deg) {
    auto words = normal_words(d.system, deg);
    if (words.empty()) break;
    basis.push_back(std::move(words));
  }
  for (const auto& b : basis) out.algebra_dims.push_back(b.size());
  const std::size_t top = basis.size();
  out.ranks.assign(top, 0);
  for (std::size_t deg = 0; deg + 1 < top; ++deg) {
    std::map<Word, std::size_t> index;
    for (std::size_t t = 0; t < basis[deg + 1].size(); ++t) index[basis[deg + 1][t]] = t;
    SparseEchelon ech;
    for (const auto& w : basis[deg]) {
      const FreePoly img = d.apply(w);
      SparseRow row;
      for (const auto& [m, c] : img.terms()) row[index.at(m)] = c;
      ech.insert(std::move(row));
      if (!img.is_zero() && !d.apply(img).is_zero()) out.is_complex = false;
    }
    out.ranks[deg] = ech.rank();
  }
  std::vector<std::size_t> h;
  for (std::size_t deg = 0; deg < top; ++deg) {
    const std::size_t prev = deg ? out.ranks[deg - 1] : 0;
    const std::size_t kernel = out.algebra_dims[deg] - out.ranks[deg];
    h.push_back(kernel >= prev ? kernel - prev : 0);
    if (kernel < prev) out.is_complex = false;
  }
  for (std::size_t deg = 0; deg < top; ++deg) {
    const long sign = deg % 2 ? -1 : 1;
    out.euler_algebra += sign * static_cast<long>(out.algebra_dims[deg]);
    out.euler_homology += sign * static_cast<long>(h[deg]);
  }
  while (h.size() > 1 && h.back() == 0) h.pop_back();
  out.homology = std::move(h);
  return out;
}

ChainComplexDims homology_dims(int n) { return homology_dims(build_differential(n)); }

}  // namespace qpl

#include "qpl/presentations.hpp"

#include <algorithm>
#include <iterator>
#include <set>

namespace qpl {

std::vector<IndexSet> subsets(const IndexSet& ground, std::size_t size) {
  std::vector<IndexSet> out;
  if (size > ground.size()) return out;
  std::vector<std::size_t> idx(size);
  for (std::size_t t = 0; t < size; ++t) idx[t] = t;
  while (true) {
    IndexSet s;
    s.reserve(size);
    for (auto t : idx) s.push_back(ground[t]);
    out.push_back(std::move(s));
    std::size_t t = size;
    while (t > 0 && idx[t - 1] == ground.size() - size + t - 1) --t;
    if (t == 0) break;
    ++idx[t - 1];
    for (std::size_t u = t; u < size; ++u) idx[u] = idx[u - 1] + 1;
  }
  return out;
}

IndexSet range_set(int n) {
  IndexSet s;
  for (int x = 1; x <= n; ++x) s.push_back(x);
  return s;
}

IndexSet set_minus(const IndexSet& s, std::initializer_list<int> drop) {
  IndexSet out;
  for (int x : s)
    if (std::find(drop.begin(), drop.end(), x) == drop.end()) out.push_back(x);
  return out;
}

IndexSet set_union(const IndexSet& s, std::initializer_list<int> add) {
  IndexSet out = s;
  for (int x : add)
    if (!set_contains(out, x)) out.insert(std::upper_bound(out.begin(), out.end(), x), x);
  return out;
}

bool set_contains(const IndexSet& s, int x) { return std::binary_search(s.begin(), s.end(), x); }

bool Presentation::is_quadratic() const {
  for (const auto& r : relations)
    for (const auto& [w, c] : r.poly.terms())
      if (w.size() != 2) return false;
  return true;
}

void Presentation::add_relation(FreePoly p, const std::string& source) {
  if (p.is_zero()) return;
  relations.push_back({std::move(p), source});
}

void Presentation::deduplicate() {
  std::set<FreePoly::Terms> seen;
  std::vector<Relation> kept;
  for (auto& r : relations) {
    const Rational lead = r.poly.terms().begin()->second;
    FreePoly::Terms key;
    for (const auto& [w, c] : r.poly.terms()) key.emplace(w, c / lead);
    if (seen.insert(std::move(key)).second) kept.push_back(std::move(r));
  }
  relations = std::move(kept);
}

namespace {

// A factor in a relation term: a generator, the unit (q_ii) or zero.
struct Sym {
  enum Kind { Zero, Unit, Gen } kind;
  GenId id = 0;
};

class TermSum {
 public:
  void add(const Rational& c, std::initializer_list<Sym> factors) {
    Word w;
    for (const Sym& s : factors) {
      if (s.kind == Sym::Zero) return;
      if (s.kind == Sym::Gen) w.push_back(s.id);
    }
    poly_.add(w, c);
  }
  FreePoly take() { return std::move(poly_); }

 private:
  FreePoly poly_;
};

// Resolves q_ij^I style symbols against an alphabet under the conventions
// q_ii = 1 and q_ij = 0 for j in I.
class PairSyms {
 public:
  PairSyms(const Alphabet& a, Family fam) : a_(a), fam_(fam) {}
  Sym operator()(int i, int j, const IndexSet& sup) const {
    if (set_contains(sup, j)) return {Sym::Zero};
    if (i == j) return {Sym::Unit};
    if (set_contains(sup, i)) throw InvalidParams("undefined symbol: first subscript in superscript");
    return {Sym::Gen, a_.id(make_pair_label(fam_, i, j, sup))};
  }

 private:
  const Alphabet& a_;
  Family fam_;
};

void check_nk(int n, int k) {
  if (k < 2 || k >= n) throw InvalidParams("need 2 <= k < n, got n=" + std::to_string(n) + ", k=" + std::to_string(k));
}

void add_pair_generators(Alphabet& a, Family fam, int n, int k, bool ordered_pairs) {
  const IndexSet all = range_set(n);
  for (int i = 1; i <= n; ++i)
    for (int j = ordered_pairs ? 1 : i + 1; j <= n; ++j) {
      if (i == j) continue;
      for (auto& sup : subsets(set_minus(all, {i, j}), static_cast<std::size_t>(k - 1)))
        a.add(make_pair_label(fam, i, j, sup));
    }
}

// Copies generators and relations of src into dst, reinterning ids.
void import_presentation(Presentation& dst, const Presentation& src) {
  std::vector<GenId> map(src.alphabet.size());
  for (GenId g = 0; g < src.alphabet.size(); ++g) map[g] = dst.alphabet.add(src.alphabet.label(g));
  for (const auto& r : src.relations) {
    FreePoly p;
    for (const auto& [w, c] : r.poly.terms()) {
      Word v;
      for (GenId x : w) v.push_back(map[x]);
      p.add(v, c);
    }
    dst.add_relation(std::move(p), r.source);
  }
}

}  // namespace

Presentation build_R(int n, int k) {
  check_nk(n, k);
  Presentation p;
  p.name = "R";
  p.n = n;
  p.k = k;
  p.order = make_order(OrderScheme::B, WordRule::DegLex);
  add_pair_generators(p.alphabet, Family::q, n, k, false);
  const PairSyms q(p.alphabet, Family::q);
  const IndexSet all = range_set(n);
  const auto ks = static_cast<std::size_t>(k);

  for (const auto& I : subsets(all, ks - 1)) {
    IndexSet rest;
    std::set_difference(all.begin(), all.end(), I.begin(), I.end(), std::back_inserter(rest));
    for (const auto& t : subsets(rest, 3)) {
      const int i = t[0], j = t[1], l = t[2];
      TermSum s;
      s.add(1, {q(i, j, I), q(j, l, I)});
      s.add(-1, {q(i, l, I)});
      p.add_relation(s.take(), "transitivity");
    }
  }
  for (const auto& L : subsets(all, ks + 1)) {
    const int l0 = L.front(), lk = L.back();
    for (const auto& M : subsets(set_minus(all, {l0}), ks - 1)) {
      TermSum s;
      for (std::size_t t = 1; t + 1 < L.size(); ++t)
        s.add(1, {q(l0, L[t], M), q(L[t], lk, set_minus(L, {L[t], lk}))});
      s.add(1, {q(l0, lk, set_minus(L, {l0, lk}))});
      s.add(-1, {q(l0, lk, M)});
      p.add_relation(s.take(), "exchange");
    }
  }
  p.deduplicate();
  return p;
}

Presentation quadratic_part(const Presentation& src, const std::string& name) {
  Presentation p;
  p.name = name;
  p.n = src.n;
  p.k = src.k;
  p.alphabet = src.alphabet;
  p.order = src.order;
  for (const auto& r : src.relations) p.add_relation(r.degree2(), r.source);
  p.deduplicate();
  return p;
}

Presentation build_R0(int n, int k) { return quadratic_part(build_R(n, k), "R0"); }

Presentation build_B(int n, int k) {
  if (n < 2 || k < 2) throw InvalidParams("need n >= 2 and k >= 2");
  Presentation p;
  p.name = "B";
  p.n = n;
  p.k = k;
  p.order = make_order(OrderScheme::B, WordRule::DegLex);
  if (k >= n) return p;
  add_pair_generators(p.alphabet, Family::r, n, k, false);
  const PairSyms r(p.alphabet, Family::r);
  const auto& labels = p.alphabet.labels();
  const GenId N = static_cast<GenId>(labels.size());

  auto allowed = [](const GeneratorLabel& x, const GeneratorLabel& y) {
    if (x.j != y.i) return false;
    if (x.sup == y.sup) return true;
    if (!set_contains(y.sup, x.i)) return false;
    for (int e : y.sup)
      if (e != x.i && !(x.i < e && e < y.j)) return false;
    return true;
  };

  for (GenId a = 0; a < N; ++a)
    for (GenId b = 0; b < N; ++b)
      if (!allowed(labels[a], labels[b])) p.add_relation(FreePoly::term({a, b}), "zero-word");

  for (GenId a = 0; a < N; ++a)
    for (GenId b = 0; b < N; ++b) {
      const auto& x = labels[a];
      const auto& y = labels[b];
      if (!allowed(x, y) || x.sup == y.sup) continue;
      const int i = x.i, j = x.j, l = y.j;
      for (int jp : y.sup) {
        if (jp == i || set_contains(x.sup, jp)) continue;
        TermSum s;
        s.add(1, {Sym{Sym::Gen, a}, Sym{Sym::Gen, b}});
        s.add(-1, {r(i, jp, x.sup), r(jp, l, set_union(set_minus(y.sup, {jp}), {j}))});
        p.add_relation(s.take(), "exchange");
      }
    }
  p.deduplicate();
  return p;
}

Presentation build_Q(int n, int k, QOptions opts) {
  check_nk(n, k);
  Presentation p;
  p.name = "Q";
  p.n = n;
  p.k = k;
  p.order = make_order(OrderScheme::B, WordRule::DegLex);
  add_pair_generators(p.alphabet, Family::q, n, k, true);
  const PairSyms q(p.alphabet, Family::q);
  const IndexSet all = range_set(n);
  const auto ks = static_cast<std::size_t>(k);

  for (const auto& I : subsets(all, ks - 1)) {
    for (int i : all)
      for (int j : all) {
        if (i == j || set_contains(I, i) || set_contains(I, j)) continue;
        TermSum inv;
        inv.add(1, {q(i, j, I), q(j, i, I)});
        inv.add(-1, {});
        p.add_relation(inv.take(), "inverse");
        for (int l : all) {
          if (l == i || l == j || set_contains(I, l)) continue;
          TermSum s;
          s.add(1, {q(i, j, I), q(j, l, I)});
          s.add(-1, {q(i, l, I)});
          p.add_relation(s.take(), "transitivity");
        }
      }
  }
  for (const auto& L : subsets(all, ks + 1))
    for (int i : L)
      for (int l : L) {
        if (l == i) continue;
        for (const auto& M : subsets(set_minus(all, {i}), ks - 1)) {
          TermSum s;
          for (int j : L) {
            if (j == i || j == l) continue;
            s.add(1, {q(i, j, M), q(j, l, set_minus(L, {j, l}))});
          }
          s.add(1, {q(i, l, set_minus(L, {i, l}))});
          s.add(-1, {q(i, l, M)});
          p.add_relation(s.take(), "exchange");
        }
      }
  if (opts.include_plucker) {
    for (const auto& M : subsets(all, ks - 1))
      for (int i : all) {
        if (set_contains(M, i)) continue;
        for (const auto& L : subsets(set_minus(all, {i}), ks)) {
          TermSum s;
          for (int j : L) s.add(1, {q(i, j, M), q(j, i, set_minus(L, {j}))});
          s.add(-1, {});
          p.add_relation(s.take(), "plucker");
        }
      }
  }
  if (opts.include_skew) {
    for (const auto& N : subsets(all, ks + 1))
      for (int i : N)
        for (int j : N)
          for (int m : N) {
            if (i == j || j == m || i == m) continue;
            TermSum s;
            s.add(1, {q(i, j, set_minus(N, {i, j})), q(j, m, set_minus(N, {j, m}))});
            s.add(1, {q(i, m, set_minus(N, {i, m}))});
            p.add_relation(s.take(), "skew");
          }
  }
  p.deduplicate();
  return p;
}

Presentation build_Q0(int n, int k, QOptions opts) { return quadratic_part(build_Q(n, k, opts), "Q0"); }

Presentation build_C(int n, int k) {
  check_nk(n, k);
  Presentation p;
  p.name = "C";
  p.n = n;
  p.k = k;
  p.order = make_order(OrderScheme::B, WordRule::DegLex);
  add_pair_generators(p.alphabet, Family::r, n, k, true);
  const PairSyms r(p.alphabet, Family::r);
  const auto& labels = p.alphabet.labels();
  const GenId N = static_cast<GenId>(labels.size());
  const IndexSet all = range_set(n);
  const auto ks = static_cast<std::size_t>(k);

  for (GenId a = 0; a < N; ++a)
    for (GenId b = 0; b < N; ++b) {
      const auto& x = labels[a];
      const auto& y = labels[b];
      const bool nonzero = x.j == y.i && (x.sup == y.sup || set_contains(y.sup, x.i));
      if (!nonzero) p.add_relation(FreePoly::term({a, b}), "zero-word");
    }
  for (const auto& L : subsets(all, ks + 1))
    for (int i : L)
      for (int l : L) {
        if (l == i) continue;
        for (const auto& M : subsets(set_minus(all, {i}), ks - 1)) {
          std::vector<Word> block;
          for (int j : L) {
            if (j == i || j == l || set_contains(M, j)) continue;
            block.push_back({r(i, j, M).id, r(j, l, set_minus(L, {j, l})).id});
          }
          for (std::size_t t = 1; t < block.size(); ++t) {
            FreePoly s = FreePoly::term(block[t - 1]);
            s.add(block[t], -1);
            p.add_relation(std::move(s), "exchange");
          }
        }
      }
  p.deduplicate();
  return p;
}

namespace {

Presentation build_colimit(int n, int k_max, bool ordered, QOptions opts) {
  if (n < 3 || k_max < 2 || k_max > n)
    throw InvalidParams("need n >= 3 and 2 <= k_max <= n, got n=" + std::to_string(n) + ", k_max=" +
                        std::to_string(k_max));
  Presentation p;
  p.name = ordered ? "Qcolim" : "Rcolim";
  p.n = n;
  p.k = k_max;
  p.order = make_order(OrderScheme::Colimit, WordRule::DegLex, SizeDirection::Ascending);
  const int top = std::min(k_max, n - 1);
  for (int kk = 2; kk <= top; ++kk)
    import_presentation(p, ordered ? build_Q(n, kk, opts) : build_R(n, kk));
  const PairSyms q(p.alphabet, Family::q);
  const IndexSet all = range_set(n);
  for (int kk = 2; kk < top; ++kk)
    for (const auto& J : subsets(all, static_cast<std::size_t>(kk - 1)))
      for (int i : all)
        for (int m : all)
          for (int j : all) {
            if (i == m || m == j || i == j) continue;
            if (set_contains(J, i) || set_contains(J, m) || set_contains(J, j)) continue;
            if (!ordered && !(i < m && m < j)) continue;
            TermSum s;
            s.add(1, {q(i, j, J)});
            s.add(-1, {q(i, j, set_union(J, {m}))});
            s.add(-1, {q(i, m, J), q(m, j, set_union(J, {i}))});
            p.add_relation(s.take(), "linking");
          }
  p.deduplicate();
  return p;
}

void check_flag(int n, const FlagOptions& opts) {
  if (n < 2) throw InvalidParams("need n >= 2");
  if (opts.min_size < 0 || opts.min_size > n - 1) throw InvalidParams("min_size out of range");
}

void add_flag_generators(Alphabet& a, Family fam, int n, int min_size) {
  const IndexSet all = range_set(n);
  for (int s = min_size; s <= n - 1; ++s)
    for (int i = 1; i <= n; ++i)
      for (auto& I : subsets(set_minus(all, {i}), static_cast<std::size_t>(s))) {
        a.add(make_flag_label(fam, i, I, false));
        a.add(make_flag_label(fam, i, I, true));
      }
}

}  // namespace

Presentation build_R_colimit(int n, int k_max) { return build_colimit(n, k_max, false, {}); }

Presentation build_Q_colimit(int n, int k_max, QOptions opts) { return build_colimit(n, k_max, true, opts); }

Presentation build_F(int n, FlagOptions opts) {
  check_flag(n, opts);
  Presentation p;
  p.name = "F";
  p.n = n;
  p.order = make_order(OrderScheme::G, WordRule::DegLex);
  add_flag_generators(p.alphabet, Family::f, n, opts.min_size);
  auto f = [&](int i, const IndexSet& I, bool inv) {
    return Sym{Sym::Gen, p.alphabet.id(make_flag_label(Family::f, i, I, inv))};
  };
  const IndexSet all = range_set(n);
  const auto min_size = static_cast<std::size_t>(opts.min_size);

  for (int s = opts.min_size + 1; s <= n - 1; ++s)
    for (int i : all)
      for (const auto& I : subsets(set_minus(all, {i}), static_cast<std::size_t>(s)))
        for (int k : I) {
          const IndexSet Ik = set_minus(I, {k});
          TermSum t;
          t.add(1, {f(i, I, false), f(i, Ik, true)});
          t.add(1, {f(k, set_union(Ik, {i}), false), f(k, Ik, true)});
          p.add_relation(t.take(), "flag-exchange");
        }
  for (std::size_t m = std::max<std::size_t>(2, min_size + 2); m <= all.size(); ++m)
    for (const auto& J : subsets(all, m)) {
      TermSum t;
      for (std::size_t a = 0; a < m; ++a) {
        const int jt = J[a];
        const int jprev = J[(a + m - 1) % m];
        t.add(1, {f(jt, set_minus(J, {jt}), false), f(jt, set_minus(J, {jt, jprev}), true)});
      }
      p.add_relation(t.take(), "flag-cycle");
    }
  for (GenId g = 0; g < p.alphabet.size(); ++g) {
    const auto& x = p.alphabet.label(g);
    if (x.inverted) continue;
    const GenId gi = p.alphabet.id(make_flag_label(Family::f, x.i, x.sup, true));
    TermSum a, b;
    a.add(1, {Sym{Sym::Gen, g}, Sym{Sym::Gen, gi}});
    a.add(-1, {});
    b.add(1, {Sym{Sym::Gen, gi}, Sym{Sym::Gen, g}});
    b.add(-1, {});
    p.add_relation(a.take(), "inverse");
    p.add_relation(b.take(), "inverse");
  }
  p.deduplicate();
  return p;
}

Presentation build_G(int n, FlagOptions opts) {
  check_flag(n, opts);
  Presentation p;
  p.name = "G";
  p.n = n;
  p.order = make_order(OrderScheme::G, WordRule::DegLex);
  add_flag_generators(p.alphabet, Family::g, n, opts.min_size);
  auto g = [&](int i, const IndexSet& I, bool inv) {
    return p.alphabet.id(make_flag_label(Family::g, i, I, inv));
  };
  const auto& labels = p.alphabet.labels();
  const GenId N = static_cast<GenId>(labels.size());
  const IndexSet all = range_set(n);

  // Words g_{i,S\i} g^-1_{i,S\{i,k}} for a set S; the one starting at
  // min S is normal and every other word of the set rewrites to one of them.
  std::set<Word> block_words;
  std::vector<std::pair<Word, Word>> equalities;
  for (std::size_t s = static_cast<std::size_t>(opts.min_size) + 2; s <= all.size(); ++s)
    for (const auto& S : subsets(all, s)) {
      const int m = S.front();
      auto w = [&](int i, int k) {
        return Word{g(i, set_minus(S, {i}), false), g(i, set_minus(S, {i, k}), true)};
      };
      for (int i : S)
        for (int k : S) {
          if (i == k) continue;
          block_words.insert(w(i, k));
          if (i != m) equalities.emplace_back(w(i, k), w(m, i));
        }
    }
  for (GenId a = 0; a < N; ++a)
    for (GenId b = 0; b < N; ++b) {
      const auto& x = labels[a];
      const auto& y = labels[b];
      const bool inverse_pair = x.i == y.i && x.sup == y.sup && x.inverted != y.inverted;
      if (inverse_pair || block_words.count({a, b})) continue;
      p.add_relation(FreePoly::term({a, b}), "zero-word");
    }
  for (const auto& [u, v] : equalities) {
    FreePoly t = FreePoly::term(u);
    t.add(v, -1);
    p.add_relation(std::move(t), "flag-exchange");
  }
  p.deduplicate();
  return p;
}

Presentation build_by_name(const std::string& algebra, int n, int k, QOptions qopts, FlagOptions fopts) {
  if (algebra == "R") return build_R(n, k);
  if (algebra == "R0") return build_R0(n, k);
  if (algebra == "B") return build_B(n, k);
  if (algebra == "Q") return build_Q(n, k, qopts);
  if (algebra == "Q0") return build_Q0(n, k, qopts);
  if (algebra == "C") return build_C(n, k);
  if (algebra == "Rcolim") return build_R_colimit(n, k);
  if (algebra == "Qcolim") return build_Q_colimit(n, k, qopts);
  if (algebra == "F") return build_F(n, fopts);
  if (algebra == "G") return build_G(n, fopts);
  throw InvalidParams("unknown algebra '" + algebra + "'");
}

std::vector<FreePoly> skew_symmetry_instances(const Presentation& r) {
  std::vector<FreePoly> out;
  if (r.name != "R" && r.name != "R0") throw InvalidParams("skew-symmetry instances need an R presentation");
  const PairSyms q(r.alphabet, Family::q);
  for (const auto& N : subsets(range_set(r.n), static_cast<std::size_t>(r.k + 1)))
    for (const auto& t : subsets(N, 3)) {
      const int i = t[0], j = t[1], m = t[2];
      TermSum s;
      s.add(1, {q(i, j, set_minus(N, {i, j})), q(j, m, set_minus(N, {j, m}))});
      if (r.name == "R") s.add(1, {q(i, m, set_minus(N, {i, m}))});
      out.push_back(s.take());
    }
  return out;
}

}  // namespace qpl

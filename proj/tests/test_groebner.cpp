#include <doctest.h>

#include <random>
#include <set>

#include "qpl/groebner.hpp"
#include "qpl/hilbert.hpp"

using namespace qpl;

namespace {

// All words of degree d over N letters, filtered by the subword criterion.
std::set<Word> brute_normal_words(const RewriteSystem& s, std::size_t N, std::size_t d) {
  std::set<Word> out;
  Word w(d, 0);
  while (true) {
    bool normal = true;
    for (std::size_t a = 0; a < d && normal; ++a)
      for (std::size_t b = a + 1; b <= d && normal; ++b)
        if (s.find(Word(w.begin() + static_cast<long>(a), w.begin() + static_cast<long>(b)))) normal = false;
    if (normal) out.insert(w);
    std::size_t t = 0;
    while (t < d && ++w[t] == N) w[t++] = 0;
    if (t == d) break;
  }
  return out;
}

FreePoly random_poly(std::mt19937_64& rng, std::size_t N, std::size_t max_deg, int terms) {
  std::uniform_int_distribution<std::size_t> len(0, max_deg), g(0, N - 1);
  std::uniform_int_distribution<int> c(-3, 3);
  FreePoly p;
  for (int t = 0; t < terms; ++t) {
    Word w(len(rng));
    for (auto& x : w) x = static_cast<GenId>(g(rng));
    p.add(w, c(rng));
  }
  return p;
}

}  // namespace

TEST_SUITE("groebner") {
  TEST_CASE("B(3,2) orients to eight monomial rules") {
    const RewriteSystem s = orient(build_B(3, 2));
    CHECK(s.size() == 8);
    for (const auto& lead : s.sorted_leads()) CHECK(s.find(lead)->is_zero());
    const auto words = normal_words(complete(s, 4).system, 2);
    REQUIRE(words.size() == 1);
    const Presentation p = build_B(3, 2);
    CHECK(to_string(words[0], p.alphabet) == "r[1,2|3] r[2,3|1]");
  }

  TEST_CASE("rules have smaller right-hand sides and quadratic leads") {
    const Presentation p = build_R(3, 2);
    const RewriteSystem s = orient(p);
    const MonomialOrder o = p.monomial_order();
    for (const auto& lead : s.sorted_leads()) {
      CHECK(lead.size() == 2);
      for (const auto& [w, c] : s.find(lead)->terms()) CHECK(o.less(w, lead));
      CHECK(normal_form(FreePoly::term(lead), s) == *s.find(lead));
    }
  }

  TEST_CASE("B and C have quadratic Gröbner bases for small n") {
    for (int n = 3; n <= 5; ++n)
      for (int k = 2; k < n; ++k) {
        if (n == 5 && k == 3) continue;
        const auto rb = complete(orient(build_B(n, k)), 4);
        CHECK_MESSAGE(rb.obstructions.empty(), "B n=" << n << " k=" << k);
        CHECK(rb.quadratic_gb);
      }
    for (int n = 3; n <= 4; ++n)
      for (int k = 2; k < n; ++k) {
        const auto rc = complete(orient(build_C(n, k)), 4);
        CHECK(rc.obstructions.empty());
        CHECK(rc.max_resolution_steps <= 2);
      }
  }

  TEST_CASE("synthetic cubic obstruction is reported") {
    Alphabet a;
    const GenId x = a.add(make_pair_label(Family::q, 1, 2, {3}));
    const GenId y = a.add(make_pair_label(Family::q, 1, 3, {2}));
    const MonomialOrder o(a, make_order(OrderScheme::B, WordRule::DegLex));
    // yx -> 0, yy -> xx with y > x: the overlap yyx reduces to xxx and to 0
    FreePoly r1 = FreePoly::term({y, x});
    FreePoly r2 = FreePoly::term({y, y}) - FreePoly::term({x, x});
    const auto rep = complete(orient({r1, r2}, o), 4);
    CHECK_FALSE(rep.obstructions.empty());
    CHECK(rep.obstructions.front().degree == 3);
    CHECK_FALSE(rep.quadratic_gb);
  }

  TEST_CASE("complete rejects tiny bounds and ties are refused") {
    CHECK_THROWS_AS(complete(orient(build_B(3, 2)), 2), InvalidParams);
    Alphabet a;
    const GenId x = a.add(make_pair_label(Family::q, 1, 2, {3}));
    const GenId y = a.add(make_pair_label(Family::q, 1, 3, {2}));
    OrderSpec flat = make_order(OrderScheme::Custom, WordRule::DegLex);
    const MonomialOrder o(a, flat);
    CHECK_THROWS_AS(orient({FreePoly::term({x, y}) - FreePoly::term({y, x})}, o), TieOnLeadingWord);
    CHECK_NOTHROW(orient({FreePoly::term({x, y})}, o));
  }

  TEST_CASE("normal words match brute-force subword filtering") {
    for (const auto& p : {build_B(4, 2), build_C(4, 2), build_B(4, 3)}) {
      const RewriteSystem s = complete(orient(p), 4).system;
      for (std::size_t d = 0; d <= 4; ++d) {
        const auto words = normal_words(s, d);
        const std::set<Word> got(words.begin(), words.end());
        CHECK(got == brute_normal_words(s, p.num_generators(), d));
        CHECK(count_normal_words(s, d) == words.size());
      }
    }
    CHECK(normal_words(orient(build_B(3, 2)), 0) == std::vector<Word>{Word{}});
    CHECK_THROWS_AS(normal_words(orient(build_B(3, 2)), 3), NotConfluent);
  }

  TEST_CASE("normal form is idempotent and compatible with multiplication") {
    for (const auto& p : {build_B(4, 2), build_C(4, 2), build_R(3, 2)}) {
      const RewriteSystem s = complete(orient(p), 5).system;
      std::mt19937_64 rng(4242);
      for (int t = 0; t < 150; ++t) {
        const FreePoly x = random_poly(rng, p.num_generators(), 3, 4);
        const FreePoly w = random_poly(rng, p.num_generators(), 1, 2);
        const FreePoly nx = normal_form(x, s);
        CHECK(normal_form(nx, s) == nx);
        for (const auto& [word, c] : nx.terms()) CHECK(s.is_normal(word));
        CHECK(normal_form(nx * w, s) == normal_form(x * w, s));
        CHECK(normal_form(w * nx, s) == normal_form(w * x, s));
      }
    }
  }

  TEST_CASE("nonhomogeneous consistency of R(3,2)") {
    const Presentation p = build_R(3, 2);
    const auto r = check_nonhomogeneous_consistency(p, p.order, 4);
    CHECK(r.consistent);
    CHECK_FALSE(r.unit_in_ideal);
    CHECK(r.counts_full == std::vector<Integer>{1, 3, 8, 21, 55});
    CHECK_NOTHROW(require_consistent(r));
  }

  TEST_CASE("unit stays outside the ideal of Q(3,2)") {
    const auto rep = complete(orient(build_Q(3, 2)), 4);
    CHECK_FALSE(rep.unit_in_ideal);
  }

  TEST_CASE("inconsistent systems are flagged") {
    Alphabet a;
    const GenId x = a.add(make_pair_label(Family::q, 1, 2, {3}));
    const MonomialOrder o(a, make_order(OrderScheme::B, WordRule::DegLex));
    const auto rep = complete(orient({FreePoly::term({x, x}) - FreePoly::term({x}), FreePoly::term({x}) - FreePoly::constant(1), FreePoly::term({x}) - FreePoly::constant(2)}, o), 3);
    CHECK(rep.unit_in_ideal);
  }

  TEST_CASE("skew-symmetry instances lie in the ideal for k=2") {
    for (int n : {3, 4}) {
      const Presentation r = build_R(n, 2);
      const auto rep = complete(orient(r), 4);
      const auto inst = skew_symmetry_instances(r);
      CHECK_FALSE(inst.empty());
      for (const auto& p : inst) CHECK(normal_form(p, rep.system).is_zero());
    }
  }
}

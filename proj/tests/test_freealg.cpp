#include <doctest.h>

#include <random>

#include "qpl/presentations.hpp"

using namespace qpl;

namespace {

GeneratorLabel r(int i, int j, IndexSet s) { return make_pair_label(Family::r, i, j, std::move(s)); }

Word random_word(std::mt19937_64& rng, std::size_t gens, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len), g(0, gens - 1);
  Word w(len(rng));
  for (auto& x : w) x = static_cast<GenId>(g(rng));
  return w;
}

}  // namespace

TEST_SUITE("freealg") {
  TEST_CASE("label text round trip") {
    const auto q = make_pair_label(Family::q, 1, 2, {3, 4});
    CHECK(to_string(q) == "q[1,2|3,4]");
    CHECK(parse_label("q[1,2|3,4]") == q);
    const auto f = make_flag_label(Family::f, 1, {2, 3}, true);
    CHECK(to_string(f) == "f^-1[1|2,3]");
    CHECK(parse_label(to_string(f)) == f);
    CHECK(to_string(make_pair_label(Family::r, 1, 2, {})) == "r[1,2|]");
    CHECK_THROWS_AS(parse_label("x[1,2|3]"), ParseError);
    CHECK_THROWS_AS(make_pair_label(Family::q, 1, 2, {1}), InvalidParams);
    CHECK(dual_family(Family::q) == Family::r);
    CHECK(dual_family(Family::f) == Family::g);
  }

  TEST_CASE("polynomial arithmetic") {
    Alphabet a;
    const GenId x = a.add(r(1, 2, {3})), y = a.add(r(1, 3, {2})), z = a.add(r(2, 3, {1}));
    const FreePoly px = FreePoly::term({x}), py = FreePoly::term({y}), pz = FreePoly::term({z});
    CHECK(FreePoly::constant(1) * px == px);
    CHECK((px + py) * pz == px * pz + py * pz);
    CHECK((px - px).is_zero());
    CHECK(((px - px) * py).is_zero());
    FreePoly p = px + Rational(-1) * px;
    CHECK(p.size() == 0);
    CHECK(to_string(FreePoly::constant(1), a) == "1");
    CHECK((px * py).coeff({x, y}) == 1);
    CHECK((px * py + pz).part(2) == px * py);
  }

  TEST_CASE("generator order examples") {
    const OrderSpec b = make_order(OrderScheme::B, WordRule::DegLex);
    CHECK(compare_generators(r(1, 2, {3}), r(1, 3, {2}), b) < 0);
    CHECK(compare_generators(r(1, 2, {3}), r(1, 2, {4}), b) < 0);
    const OrderSpec g = make_order(OrderScheme::G, WordRule::DegLex);
    const auto g1 = make_flag_label(Family::g, 1, {2}, false);
    const auto g1inv = make_flag_label(Family::g, 1, {2}, true);
    CHECK(compare_generators(g1, g1inv, g) < 0);
    CHECK_THROWS_AS(compare_generators(r(1, 2, {3}), g1, b), IncomparableFamilies);
  }

  TEST_CASE("word comparison basics") {
    const Presentation p = build_B(3, 2);
    const MonomialOrder o = p.monomial_order();
    CHECK(o.less({}, {0}));
    CHECK(o.compare({0, 1}, {0, 1}) == 0);
    CHECK(o.less({2}, {0, 0}));
  }

  TEST_CASE("word orders are multiplicative well-orders" * doctest::description("random triples")) {
    for (const OrderSpec& spec : {make_order(OrderScheme::B, WordRule::DegLex), make_order(OrderScheme::B, WordRule::DegRevLex),
                                  make_order(OrderScheme::Colimit, WordRule::DegLex, SizeDirection::Descending)}) {
      Presentation p = build_R_colimit(4, 3);
      p.order = spec;
      const MonomialOrder o = p.monomial_order();
      std::mt19937_64 rng(99);
      for (int t = 0; t < 3000; ++t) {
        const Word u = random_word(rng, p.num_generators(), 5), v = random_word(rng, p.num_generators(), 5),
                   w = random_word(rng, p.num_generators(), 3);
        const int c = o.compare(u, v);
        CHECK(c == -o.compare(v, u));
        if (c < 0) {
          CHECK(o.less(concat(w, u), concat(w, v)));
          CHECK(o.less(concat(u, w), concat(v, w)));
        }
        if (u.size() < v.size()) CHECK(c < 0);
      }
    }
  }

  TEST_CASE("custom order ties are reported") {
    Presentation p = build_B(3, 2);
    p.order.scheme = OrderScheme::Custom;
    p.order.custom = {r(2, 3, {1}), r(1, 2, {3})};
    const MonomialOrder o = p.monomial_order();
    CHECK(o.has_ties() == false);
    p.order.custom = {r(2, 3, {1})};
    CHECK(p.monomial_order().has_ties());
  }
}

#include <doctest.h>

#include <random>

#include "qpl/oracle.hpp"

using namespace qpl;

namespace {

Rational det2(const RationalMatrix& a, int c1, int c2) {
  return a(0, c1 - 1) * a(1, c2 - 1) - a(0, c2 - 1) * a(1, c1 - 1);
}

}  // namespace

TEST_SUITE("oracle") {
  TEST_CASE("quasideterminant small cases") {
    CHECK(quasideterminant(RationalMatrix{{Rational(7, 3)}}, 0, 0) == Rational(7, 3));
    const Rational a = 2, b = 3, c = 5, d = 7;
    CHECK(quasideterminant(RationalMatrix{{a, b}, {c, d}}, 0, 0) == a - b * inverse(d) * c);
    const Quaternion qa(1, 2, 0, 1), qb(0, 1, 1, 0), qc(2, 0, 0, 1), qd(1, 1, 1, 1);
    CHECK(quasideterminant(QuaternionMatrix{{qa, qb}, {qc, qd}}, 0, 0) == qa - qb * qd.inverse() * qc);
    CHECK_THROWS_AS(quasideterminant(RationalMatrix{{1, 2}, {2, 4}}, 0, 0), Undefined);
  }

  TEST_CASE("commutative quasideterminant is a ratio of determinants") {
    std::mt19937_64 rng(8);
    for (int t = 0; t < 30; ++t) {
      const RationalMatrix m = random_matrix<Rational>(3, 3, rng, 4);
      const Rational minor = determinant(m.submatrix({1, 2}, {1, 2}));
      if (determinant(m) == 0 || minor == 0) continue;
      CHECK(quasideterminant(m, 0, 0) == determinant(m) / minor);
      const Rational minor12 = determinant(m.submatrix({1, 2}, {0, 2}));
      if (minor12 != 0) CHECK(quasideterminant(m, 0, 1) == -determinant(m) / minor12);
    }
  }

  TEST_CASE("commutative quasi-Plücker coordinates are Plücker ratios") {
    // all 2x2 minors nonzero
    const RationalMatrix a{{1, 2, 3, 5}, {1, 4, 9, 26}};
    for (int i = 1; i <= 4; ++i)
      for (int j = 1; j <= 4; ++j)
        for (int m = 1; m <= 4; ++m) {
          if (m == i || i == j || m == j || det2(a, i, m) == 0 || det2(a, j, m) == 0) continue;
          CHECK(quasi_plucker(a, i, j, {m}) == det2(a, j, m) / det2(a, i, m));
        }
    const Rational lhs = quasi_plucker(a, 1, 3, {2}) * quasi_plucker(a, 3, 1, {4}) +
                         quasi_plucker(a, 1, 4, {2}) * quasi_plucker(a, 4, 1, {3});
    CHECK(lhs == 1);
  }

  TEST_CASE("quaternionic inverse-sum identity for k=2, n=4") {
    std::mt19937_64 rng(10);
    for (int t = 0; t < 10; ++t) {
      const QuaternionMatrix a = random_matrix<Quaternion>(2, 4, rng, 3);
      try {
        const Quaternion lhs = quasi_plucker(a, 1, 3, {2}) * quasi_plucker(a, 3, 1, {4}) +
                               quasi_plucker(a, 1, 4, {2}) * quasi_plucker(a, 4, 1, {3});
        CHECK(lhs == Quaternion(1));
      } catch (const Undefined&) {
      }
    }
  }

  TEST_CASE("worked identity with M={1,2}, L={3,4,5}, i=6") {
    std::mt19937_64 rng(12);
    const RationalMatrix a = random_matrix<Rational>(3, 6, rng, 5);
    CHECK(plucker_sum(a, 6, {1, 2}, {3, 4, 5}) == 1);
    // commutative form: p_{612}^-1 p_{312} p_{345}^-1 p_{645} + ...
    auto p = [&](std::vector<int> c) { return classical_plucker(a, c); };
    const Rational classical = p({3, 1, 2}) / p({6, 1, 2}) * p({6, 4, 5}) / p({3, 4, 5}) +
                               p({4, 1, 2}) / p({6, 1, 2}) * p({6, 3, 5}) / p({4, 3, 5}) +
                               p({5, 1, 2}) / p({6, 1, 2}) * p({6, 4, 3}) / p({5, 4, 3});
    CHECK(classical == 1);
    const QuaternionMatrix h = random_matrix<Quaternion>(3, 6, rng, 3);
    CHECK(plucker_sum(h, 6, {1, 2}, {3, 4, 5}) == Quaternion(1));
  }

  TEST_CASE("identity block gives unit coordinates") {
    RationalMatrix a(2, 4);
    a(0, 0) = 1;
    a(1, 1) = 1;
    a(0, 2) = 3;
    a(1, 2) = 4;
    CHECK(quasi_plucker(a, 1, 2, {2}) == 0);
    CHECK(quasi_plucker(a, 1, 1, {2}) == 1);
    CHECK(quasi_plucker(a, 1, 3, {2}) == 3);
    CHECK_THROWS_AS(quasi_plucker(a, 1, 3, {1}), Undefined);
  }

  TEST_CASE("s-independence and inverse pairing on quaternions") {
    std::mt19937_64 rng(13);
    for (int t = 0; t < 10; ++t) {
      const QuaternionMatrix a = random_matrix<Quaternion>(3, 5, rng, 3);
      for (const auto& I : subsets(range_set(5), 2))
        for (int i = 1; i <= 5; ++i)
          for (int j = 1; j <= 5; ++j) {
            if (i == j || set_contains(I, i) || set_contains(I, j)) continue;
            std::vector<Quaternion> values;
            for (std::size_t s = 0; s < 3; ++s) {
              try {
                values.push_back(quasi_plucker(a, i, j, I, s));
              } catch (const Undefined&) {
              }
            }
            CHECK(values.size() >= 2);
            for (const auto& v : values) CHECK(v == values.front());
            CHECK(quasi_plucker(a, i, j, I) * quasi_plucker(a, j, i, I) == Quaternion(1));
          }
    }
  }

  TEST_CASE("skew symmetry and flag link on quaternions") {
    std::mt19937_64 rng(14);
    const QuaternionMatrix a = random_matrix<Quaternion>(2, 4, rng, 3);
    const IndexSet N{1, 2, 3};
    CHECK(quasi_plucker(a, 1, 2, set_minus(N, {1, 2})) * quasi_plucker(a, 2, 3, set_minus(N, {2, 3})) ==
          -quasi_plucker(a, 1, 3, set_minus(N, {1, 3})));
    const QuaternionMatrix b = random_matrix<Quaternion>(3, 5, rng, 3);
    for (const auto& I : {IndexSet{2}, IndexSet{2, 4}})
      for (int i : {1, 3, 5})
        for (int j : {1, 3, 5})
          if (i != j) CHECK(quasi_plucker(b, i, j, I) == inverse(flag_coordinate(b, i, I)) * flag_coordinate(b, j, I));
  }

  TEST_CASE("presentations vanish on random quaternionic matrices") {
    CHECK(verify_random<Quaternion>(build_R(4, 2), 10, 1).passed());
    CHECK(verify_random<Quaternion>(build_R(4, 3), 10, 2).passed());
    CHECK(verify_random<Quaternion>(build_Q(4, 2), 5, 3).passed());
    CHECK(verify_random<Quaternion>(build_F(3), 10, 4).passed());
    CHECK(verify_random<Rational>(build_R_colimit(4, 3), 5, 5).passed());
  }

  TEST_CASE("a corrupted relation is reported nonzero") {
    Presentation p = build_R(4, 2);
    p.relations[0].poly.add(Word{0}, 1);
    const auto rep = verify_random<Quaternion>(p, 3, 1);
    CHECK_FALSE(rep.passed());
    CHECK(rep.nonzero == 3);
    CHECK(rep.failures.front().index == 0);
  }

  TEST_CASE("shape checks") {
    std::mt19937_64 rng(1);
    CHECK_THROWS_AS(verify_presentation_numerically(build_R(4, 3), random_matrix<Rational>(2, 4, rng)), ShapeMismatch);
    CHECK_THROWS_AS(verify_presentation_numerically(build_B(4, 2), random_matrix<Rational>(2, 4, rng)), InvalidParams);
    CHECK(required_rows(build_R_colimit(5, 4)) == 4);
  }

  TEST_CASE("classical Plücker relations") {
    std::mt19937_64 rng(15);
    const RationalMatrix a = random_matrix<Rational>(2, 4, rng, 6);
    auto p = [&](int x, int y) { return classical_plucker(a, {x, y}); };
    CHECK(p(1, 2) * p(3, 4) - p(1, 3) * p(2, 4) + p(1, 4) * p(2, 3) == 0);
    CHECK(verify_classical(a) == 0);
    const RationalMatrix b = random_matrix<Rational>(3, 6, rng, 6);
    auto pb = [&](int x, int y, int z) { return classical_plucker(b, {x, y, z}); };
    CHECK(pb(1, 2, 3) * pb(4, 5, 6) - pb(1, 2, 4) * pb(3, 5, 6) + pb(1, 2, 5) * pb(3, 4, 6) - pb(1, 2, 6) * pb(3, 4, 5) == 0);
    CHECK(pb(1, 2, 3) * pb(2, 4, 5) - pb(1, 2, 4) * pb(2, 3, 5) + pb(1, 2, 5) * pb(2, 3, 4) == 0);
    CHECK(verify_classical(b) == 0);
    RationalMatrix rep = b;
    for (std::size_t r = 0; r < 3; ++r) rep(r, 1) = rep(r, 0);
    CHECK(classical_plucker(rep, {1, 2, 3}) == 0);
    CHECK_THROWS_AS(classical_plucker(b, {1, 2}), ShapeMismatch);
  }
}

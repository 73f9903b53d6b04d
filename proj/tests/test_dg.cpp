#include <doctest.h>

#include <map>

#include "qpl/dg.hpp"

using namespace qpl;

namespace {

GenId rid(const Differential& d, int i, int j, int m) { return d.algebra.alphabet.id(make_pair_label(Family::r, i, j, {m})); }

// Homology through dense rref, with d applied term by term and non-normal
// words dropped (B_n^(2) is monomial).
std::vector<std::size_t> dense_homology(const Differential& d) {
  std::vector<std::vector<Word>> basis;
  for (std::size_t deg = 0;; ++deg) {
    auto w = normal_words(d.system, deg);
    if (w.empty()) break;
    basis.push_back(std::move(w));
  }
  std::vector<std::size_t> ranks(basis.size(), 0);
  for (std::size_t deg = 0; deg + 1 < basis.size(); ++deg) {
    std::map<Word, std::size_t> idx;
    for (std::size_t t = 0; t < basis[deg + 1].size(); ++t) idx[basis[deg + 1][t]] = t;
    RationalMatrix m(basis[deg + 1].size(), basis[deg].size());
    for (std::size_t c = 0; c < basis[deg].size(); ++c) {
      const Word& w = basis[deg][c];
      for (std::size_t p = 0; p < w.size(); ++p)
        for (const auto& [img, coeff] : d.images[w[p]].terms()) {
          Word full(w.begin(), w.begin() + static_cast<long>(p));
          full.insert(full.end(), img.begin(), img.end());
          full.insert(full.end(), w.begin() + static_cast<long>(p) + 1, w.end());
          if (!d.system.is_normal(full)) continue;
          m(idx.at(full), c) += (p % 2 ? -1 : 1) * coeff;
        }
    }
    ranks[deg] = rref(m).rank;
  }
  std::vector<std::size_t> h;
  for (std::size_t deg = 0; deg < basis.size(); ++deg) h.push_back(basis[deg].size() - ranks[deg] - (deg ? ranks[deg - 1] : 0));
  while (h.size() > 1 && h.back() == 0) h.pop_back();
  return h;
}

}  // namespace

TEST_SUITE("dg") {
  TEST_CASE("images for n=3") {
    const Differential d = build_differential(3);
    CHECK(d.images[rid(d, 1, 2, 3)].is_zero());
    CHECK(d.images[rid(d, 2, 3, 1)].is_zero());
    const FreePoly img = d.images[rid(d, 1, 3, 2)];
    CHECK(img == FreePoly::term({rid(d, 1, 2, 3), rid(d, 2, 3, 1)}));
    const Differential e = build_differential(3, {true});
    CHECK(e.images[rid(e, 1, 3, 2)].is_zero());
  }

  TEST_CASE("images are reduced degree-2 elements") {
    for (int n = 3; n <= 5; ++n) {
      const Differential d = build_differential(n);
      for (const auto& img : d.images)
        for (const auto& [w, c] : img.terms()) {
          CHECK(w.size() == 2);
          CHECK(d.system.is_normal(w));
        }
    }
  }

  TEST_CASE("n=3 is a differential with homology (1,2)") {
    const Differential d = build_differential(3);
    CHECK(check_differential(d).passed());
    const auto h = homology_dims(d);
    CHECK(h.homology == std::vector<std::size_t>{1, 2});
    CHECK(h.algebra_dims == std::vector<std::size_t>{1, 3, 1});
    CHECK(h.euler_ok());
    CHECK(dense_homology(d) == h.homology);
  }

  TEST_CASE("sparse and dense homology agree, Euler identity holds") {
    for (int n = 3; n <= 5; ++n) {
      const Differential d = build_differential(n);
      const auto h = homology_dims(d);
      if (!h.is_complex) continue;
      CHECK(h.euler_ok());
      CHECK(dense_homology(d) == h.homology);
      // top degree maps to zero
      CHECK(h.ranks.back() == 0);
    }
  }

  TEST_CASE("a mutated image is caught with a witness") {
    const Differential base = build_differential(4);
    REQUIRE(check_differential(base).squares_to_zero_all);
    const GenId count = static_cast<GenId>(base.images.size());
    bool caught = false;
    for (GenId g = 0; g < count && !caught; ++g)
      for (GenId x = 0; x < count && !caught; ++x)
        for (GenId y = 0; y < count && !caught; ++y) {
          if (base.images[x].is_zero() && base.images[y].is_zero()) continue;
          Differential d = base;
          d.images[g] = d.images[g] + FreePoly::term({x, y});
          const auto rep = check_differential(d);
          if (!rep.squares_to_zero_all) {
            caught = true;
            CHECK_FALSE(rep.witnesses.empty());
          }
        }
    CHECK(caught);
  }

  TEST_CASE("invalid n") { CHECK_THROWS_AS(build_differential(2), InvalidParams); }
}

#pragma once

// Builders for the quasi-Plücker, flag and dual algebras. Index sets are
// sorted; generators that vanish by convention (second subscript inside the
// superscript) are never materialized and any term containing one is
// dropped.

#include <string>
#include <vector>

#include "qpl/freealg.hpp"

namespace qpl {

struct Relation {
  FreePoly poly;
  std::string source;  // short tag naming the family of relations

  FreePoly degree2() const { return poly.part(2); }
  FreePoly degree1() const { return poly.part(1); }
  FreePoly degree0() const { return poly.part(0); }
};

struct Presentation {
  std::string name;  // algebra family tag, e.g. "R", "B", "Qcolim"
  int n = 0;
  int k = 0;  // k, or k_max for colimits, or 0 when unused
  Alphabet alphabet;
  std::vector<Relation> relations;
  OrderSpec order;

  std::size_t num_generators() const { return alphabet.size(); }
  bool is_zero_algebra() const { return alphabet.size() == 0; }
  MonomialOrder monomial_order() const { return MonomialOrder(alphabet, order); }
  /// True when no relation has a linear or constant part.
  bool is_quadratic() const;
  /// Appends a relation unless it is zero.
  void add_relation(FreePoly p, const std::string& source);
  /// Drops repeated relations (equal up to a scalar), keeping first occurrences.
  void deduplicate();
};

struct QOptions {
  bool include_plucker = false;  // the "sum equals 1" relations
  bool include_skew = false;     // skew-symmetry relations
};

struct FlagOptions {
  int min_size = 1;  // smallest superscript size
};

Presentation build_R(int n, int k);
Presentation build_R0(int n, int k);
Presentation build_B(int n, int k);
Presentation build_Q(int n, int k, QOptions opts = {});
Presentation build_Q0(int n, int k, QOptions opts = {});
Presentation build_C(int n, int k);
Presentation build_R_colimit(int n, int k_max);
Presentation build_Q_colimit(int n, int k_max, QOptions opts = {});
Presentation build_F(int n, FlagOptions opts = {});
Presentation build_G(int n, FlagOptions opts = {});

/// Presentation keeping only the degree-2 parts of the relations.
Presentation quadratic_part(const Presentation& p, const std::string& name);

/// Dispatch by family tag: R, R0, B, Q, Q0, C, Rcolim, Qcolim, F, G.
Presentation build_by_name(const std::string& algebra, int n, int k, QOptions qopts = {},
                           FlagOptions fopts = {});

/// Skew-symmetry instances as polynomials over the generators of build_R.
std::vector<FreePoly> skew_symmetry_instances(const Presentation& r);

std::vector<IndexSet> subsets(const IndexSet& ground, std::size_t size);
IndexSet range_set(int n);
IndexSet set_minus(const IndexSet& s, std::initializer_list<int> drop);
IndexSet set_union(const IndexSet& s, std::initializer_list<int> add);
bool set_contains(const IndexSet& s, int x);

}  // namespace qpl

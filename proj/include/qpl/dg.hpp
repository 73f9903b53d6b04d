#pragma once

// The differential on the monomial algebra B_n^(2), extended by the graded
// Leibniz rule, and the homology of the resulting complex.

#include <string>
#include <vector>

#include "qpl/groebner.hpp"

namespace qpl {

struct DifferentialOptions {
  /// Drop the l = j term of the second sum. Off by default; with it on the
  /// n = 3 complex has zero differential.
  bool exclude_l_equals_j = false;
};

struct Differential {
  int n = 0;
  Presentation algebra;  // B_n^(2)
  RewriteSystem system;  // completed, certified through degree n+1
  std::vector<FreePoly> images;  // indexed by GenId, already reduced

  /// d of a word by the graded Leibniz rule, reduced.
  FreePoly apply(const Word& w) const;
  FreePoly apply(const FreePoly& p) const;
};

/// InvalidParams unless n >= 3.
Differential build_differential(int n, DifferentialOptions opts = {});

struct DifferentialReport {
  bool well_defined = true;          // d maps every relation into the ideal
  bool squares_to_zero_generators = true;
  bool squares_to_zero_degree2 = true;
  bool squares_to_zero_all = true;   // every normal word in every degree
  std::vector<std::string> witnesses;

  bool passed() const {
    return well_defined && squares_to_zero_generators && squares_to_zero_degree2 && squares_to_zero_all;
  }
};

DifferentialReport check_differential(const Differential& d);

struct ChainComplexDims {
  std::vector<std::size_t> algebra_dims;  // degrees 0..top
  std::vector<std::size_t> ranks;         // rank of d: B_d -> B_{d+1}
  std::vector<std::size_t> homology;      // trailing zeros trimmed
  bool is_complex = true;
  long euler_algebra = 0;
  long euler_homology = 0;
  bool euler_ok() const { return euler_algebra == euler_homology; }
};

ChainComplexDims homology_dims(const Differential& d);
ChainComplexDims homology_dims(int n);

}  // namespace qpl

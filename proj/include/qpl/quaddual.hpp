#pragma once

// Quadratic duality on the degree-2 component, using the unsigned pairing
// <x⊗y, ξ⊗η> = <x,ξ><y,η>.

#include <optional>
#include <string>
#include <vector>

#include "qpl/presentations.hpp"

namespace qpl {

/// Degree-2 relation rows. Column c encodes the word (c / N, c % N).
struct QuadraticData {
  std::size_t num_generators = 0;
  std::vector<SparseRow> rows;
};

QuadraticData quadratic_data(const Presentation& p);
std::size_t degree2_rank(const Presentation& p);

/// Dual presentation on the dual labels (q <-> r, f <-> g). Relations form a
/// reduced echelon basis of the annihilator, leading words largest first.
Presentation quadratic_dual(const Presentation& p);

struct DualMatchReport {
  bool equal = false;
  std::size_t rank_computed = 0;
  std::size_t rank_expected = 0;
  std::size_t rank_union = 0;
  /// Relation of one side outside the span of the other, if any.
  std::optional<FreePoly> witness;
  std::string witness_side;  // "computed" or "expected"
  std::string witness_text;
};

/// Compares degree-2 relation spans. Both presentations must have the same
/// generator labels, otherwise GeneratorMismatch.
DualMatchReport verify_dual_matches(const Presentation& computed, const Presentation& expected);

}  // namespace qpl

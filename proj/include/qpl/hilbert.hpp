#pragma once

// Hilbert series as exact integer coefficient sequences.

#include <optional>
#include <string>
#include <vector>

#include "qpl/groebner.hpp"

namespace qpl {

using SeriesCoeffs = std::vector<Integer>;

/// numerator / denominator, both with constant term first.
struct RationalForm {
  std::vector<Integer> numerator{Integer(1)};
  std::vector<Integer> denominator{Integer(1)};

  /// Power series coefficients up to degree D; needs denominator[0] = ±1.
  SeriesCoeffs expand(std::size_t D) const;
};

SeriesCoeffs dims_by_enumeration(const RewriteSystem& s, std::size_t D);
/// Throws NotQuadratic when some lead has degree above 2.
SeriesCoeffs dims_by_transfer_matrix(const RewriteSystem& s, std::size_t D);

/// Coefficients of 1 / sum (-1)^d a_d t^d up to degree D.
SeriesCoeffs series_reciprocal(const SeriesCoeffs& dual_dims, std::size_t D);
/// The form 1 / sum (-1)^d a_d t^d.
RationalForm koszul_form(const SeriesCoeffs& dual_dims);

/// Coefficient h_{n-l} of the dual series for k = 2; OutOfRange unless
/// 1 <= l <= n-1.
Integer closed_form_B2_coefficient(int n, int l);
Integer closed_form_B2_top(int n);
Integer closed_form_B2_h1(int n);

/// Index of the last nonzero coefficient.
std::size_t top_degree(const SeriesCoeffs& a);

struct RecursionReport {
  bool ok = true;
  std::optional<std::size_t> first_failure;
  std::string message;
};

/// Checks denominator * dims = numerator coefficientwise over the given range.
RecursionReport recursion_check(const SeriesCoeffs& dims, const RationalForm& form);

std::vector<std::string> to_strings(const SeriesCoeffs& a);

}  // namespace qpl

#pragma once

// Degree-bounded non-commutative Gröbner bases via rewriting: rules
// lead -> rhs with every rhs word smaller than its lead.

#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "qpl/presentations.hpp"

namespace qpl {

class RewriteSystem {
 public:
  RewriteSystem() = default;
  explicit RewriteSystem(MonomialOrder order) : order_(std::move(order)) {}

  const MonomialOrder& order() const { return order_; }
  std::size_t size() const { return rules_.size(); }
  const FreePoly* find(const Word& lead) const;
  /// Leads sorted by the monomial order, smallest first.
  std::vector<Word> sorted_leads() const;
  const std::set<std::size_t>& lead_lengths() const { return lead_lengths_; }
  std::size_t max_lead_degree() const { return lead_lengths_.empty() ? 0 : *lead_lengths_.rbegin(); }
  bool unit_in_ideal() const { return rules_.count(Word{}) > 0; }

  /// Leftmost occurrence (start, length) of a lead inside w, if any.
  bool find_reducible(const Word& w, std::size_t& start, std::size_t& len) const;
  /// True when no lead occurs in w.
  bool is_normal(const Word& w) const;
  /// True when no lead is a suffix of w (prefixes assumed already normal).
  bool suffix_normal(const Word& w) const;

  /// Inserts a rule without any interreduction.
  void insert_rule(Word lead, FreePoly rhs);
  void erase_rule(const Word& lead);
  void set_rhs(const Word& lead, FreePoly rhs) { rules_.at(lead) = std::move(rhs); }

  /// Leads having `part` as a proper nonempty prefix (resp. suffix).
  const std::vector<Word>* leads_with_prefix(const Word& part) const;
  const std::vector<Word>* leads_with_suffix(const Word& part) const;

  /// Degree up to which reduction is known to be confluent.
  std::size_t certified_degree = 2;

 private:
  MonomialOrder order_;
  std::unordered_map<Word, FreePoly, WordHash> rules_;
  std::multiset<std::size_t> lead_length_counts_;
  std::set<std::size_t> lead_lengths_;
  std::unordered_map<Word, std::vector<Word>, WordHash> by_prefix_, by_suffix_;
};

/// Orients and interreduces the relations of P under P's order (or `spec`).
/// Throws TieOnLeadingWord when the order cannot separate the words of a
/// relation.
RewriteSystem orient(const Presentation& p);
RewriteSystem orient(const Presentation& p, const OrderSpec& spec);
RewriteSystem orient(const std::vector<FreePoly>& polys, const MonomialOrder& order);

/// Full reduction, largest term first, leftmost occurrence first.
/// `steps` receives the number of rule applications.
FreePoly normal_form(const FreePoly& p, const RewriteSystem& s, std::size_t* steps = nullptr);

struct Obstruction {
  std::size_t degree = 0;
  Word overlap;
  FreePoly remainder;
};

struct GroebnerReport {
  RewriteSystem system;  // completed system
  std::size_t max_degree = 0;
  std::vector<Obstruction> obstructions;
  /// Largest degree below every obstruction (max_degree when none).
  std::size_t confluent_up_to = 0;
  bool quadratic_gb = false;
  bool unit_in_ideal = false;
  std::size_t pairs_checked = 0;
  std::size_t pairs_trivial = 0;  // both rules map to zero
  std::size_t pairs_beyond_bound = 0;
  /// Most rule applications used along one side of a resolved pair,
  /// counting the application that creates the pair.
  std::size_t max_resolution_steps = 0;
};

/// Resolves all overlap ambiguities whose overlap word has degree at most
/// max_degree; nonzero remainders are logged and added as rules.
GroebnerReport complete(RewriteSystem s, std::size_t max_degree);

/// Normal words of degree d, sorted by the order. Throws NotConfluent when
/// d exceeds the certified degree of the system.
std::vector<Word> normal_words(const RewriteSystem& s, std::size_t d);
Integer count_normal_words(const RewriteSystem& s, std::size_t d);

struct ConsistencyReport {
  bool consistent = false;
  bool unit_in_ideal = false;
  std::vector<Integer> counts_full;
  std::vector<Integer> counts_homogeneous;
  std::size_t obstructions_full = 0;
  std::size_t obstructions_homogeneous = 0;
  std::vector<std::string> messages;
};

/// Completes both the full relations and their top-degree parts and compares
/// normal-word counts degree by degree.
ConsistencyReport check_nonhomogeneous_consistency(const Presentation& p, const OrderSpec& order,
                                                   std::size_t max_degree);
/// Throws InconsistentPresentation when the report is not consistent.
void require_consistent(const ConsistencyReport& r);

}  // namespace qpl

#pragma once

// Free associative algebra over Q: generator labels, words, polynomials and
// monomial orders on words.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "qpl/exactmath.hpp"

namespace qpl {

/// q: quasi-Plücker generator, r: its dual, f: flag generator, g: its dual.
enum class Family : char { q = 'q', r = 'r', f = 'f', g = 'g' };

using IndexSet = std::vector<int>;  // always sorted ascending

struct GeneratorLabel {
  Family family = Family::q;
  int i = 0;
  int j = 0;  // 0 for the flag families
  IndexSet sup;
  bool inverted = false;

  auto operator<=>(const GeneratorLabel&) const = default;
};

GeneratorLabel make_pair_label(Family fam, int i, int j, IndexSet sup);
GeneratorLabel make_flag_label(Family fam, int i, IndexSet sup, bool inverted);

bool is_flag_family(Family fam);
/// q <-> r, f <-> g.
Family dual_family(Family fam);

/// Canonical text form: q[1,2|3,4], r[1,2|], f[1|2], f^-1[1|2,3].
std::string to_string(const GeneratorLabel& g);
GeneratorLabel parse_label(const std::string& text);

using GenId = std::uint32_t;
using Word = std::vector<GenId>;

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ULL ^ w.size();
    for (GenId x : w) h = (h ^ x) * 0x100000001b3ULL + (h >> 29);
    return h;
  }
};

/// Interning table from labels to dense ids.
class Alphabet {
 public:
  GenId add(const GeneratorLabel& g);
  std::optional<GenId> find(const GeneratorLabel& g) const;
  GenId id(const GeneratorLabel& g) const;  // throws GeneratorMismatch
  const GeneratorLabel& label(GenId id) const { return labels_.at(id); }
  const std::vector<GeneratorLabel>& labels() const { return labels_; }
  std::size_t size() const { return labels_.size(); }

 private:
  std::vector<GeneratorLabel> labels_;
  std::map<GeneratorLabel, GenId> index_;
};

std::string to_string(const Word& w, const Alphabet& a);
Word concat(const Word& a, const Word& b);

/// Finite Q-linear combination of words; never stores a zero coefficient.
class FreePoly {
 public:
  using Terms = std::map<Word, Rational>;

  FreePoly() = default;
  static FreePoly constant(const Rational& c) { return term({}, c); }
  static FreePoly term(const Word& w, const Rational& c = 1);

  void add(const Word& w, const Rational& c);
  void add(const FreePoly& p, const Rational& scale = 1);
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Terms& terms() const { return terms_; }
  Rational coeff(const Word& w) const;
  /// Homogeneous component of the given degree.
  FreePoly part(std::size_t degree) const;
  std::size_t max_degree() const;

  friend FreePoly operator+(const FreePoly& a, const FreePoly& b);
  friend FreePoly operator-(const FreePoly& a, const FreePoly& b);
  friend FreePoly operator*(const FreePoly& a, const FreePoly& b);
  friend FreePoly operator*(const Rational& c, const FreePoly& p);
  friend bool operator==(const FreePoly& a, const FreePoly& b) { return a.terms_ == b.terms_; }

 private:
  Terms terms_;
};

FreePoly poly_mul(const FreePoly& a, const FreePoly& b);
std::string to_string(const FreePoly& p, const Alphabet& a);

// ---------------------------------------------------------------- orders

enum class OrderScheme { B, Colimit, G, Custom };
/// DegLex compares letters left to right. DegRevLex compares right to left
/// and reverses the verdict of the first differing letter.
enum class WordRule { DegLex, DegRevLex };
enum class SizeDirection { Ascending, Descending };

struct OrderSpec {
  OrderScheme scheme = OrderScheme::B;
  WordRule rule = WordRule::DegLex;
  SizeDirection size_direction = SizeDirection::Ascending;  // colimit only
  std::vector<GeneratorLabel> custom;                       // custom only, smallest first

  bool operator==(const OrderSpec&) const = default;
};

inline OrderSpec make_order(OrderScheme scheme, WordRule rule,
                            SizeDirection dir = SizeDirection::Ascending) {
  OrderSpec s;
  s.scheme = scheme;
  s.rule = rule;
  s.size_direction = dir;
  return s;
}

std::string to_string(OrderScheme s);
std::string to_string(WordRule r);
std::string to_string(SizeDirection d);
OrderScheme parse_order_scheme(const std::string& s);
WordRule parse_word_rule(const std::string& s);
SizeDirection parse_size_direction(const std::string& s);

/// Negative, zero or positive like a three-way comparison.
int compare_generators(const GeneratorLabel& a, const GeneratorLabel& b, const OrderSpec& spec);

/// Order on words of one alphabet, precomputed as generator ranks.
class MonomialOrder {
 public:
  MonomialOrder() = default;
  MonomialOrder(const Alphabet& alphabet, OrderSpec spec);

  int compare(const Word& u, const Word& v) const;
  bool less(const Word& u, const Word& v) const { return compare(u, v) < 0; }
  std::size_t rank(GenId g) const { return rank_.at(g); }
  const OrderSpec& spec() const { return spec_; }
  /// Generators sorted smallest first.
  std::vector<GenId> sorted_generators() const;
  /// True when two distinct generators share a rank.
  bool has_ties() const { return has_ties_; }

 private:
  OrderSpec spec_;
  std::vector<std::size_t> rank_;
  bool has_ties_ = false;
};

int compare_words(const Word& u, const Word& v, const MonomialOrder& order);

/// Largest word of p under the order; p must be nonzero.
const Word& leading_word(const FreePoly& p, const MonomialOrder& order);

}  // namespace qpl

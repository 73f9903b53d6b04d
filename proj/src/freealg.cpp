#include "qpl/freealg.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace qpl {

namespace {

void check_sorted_unique(const IndexSet& s) {
  for (std::size_t t = 1; t < s.size(); ++t)
    if (s[t - 1] >= s[t]) throw InvalidParams("index set must be strictly increasing");
}

bool contains(const IndexSet& s, int x) { return std::binary_search(s.begin(), s.end(), x); }

std::string join(const IndexSet& s) {
  std::string out;
  for (std::size_t t = 0; t < s.size(); ++t) {
    if (t) out += ',';
    out += std::to_string(s[t]);
  }
  return out;
}

std::vector<int> parse_int_list(const std::string& text, const std::string& whole) {
  std::vector<int> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
      throw ParseError("bad index list in label '" + whole + "'");
    out.push_back(std::stoi(item));
  }
  return out;
}

}  // namespace

GeneratorLabel make_pair_label(Family fam, int i, int j, IndexSet sup) {
  if (is_flag_family(fam)) throw InvalidParams("pair label requested for a flag family");
  check_sorted_unique(sup);
  if (i < 1 || j < 1 || i == j) throw InvalidParams("pair label needs distinct positive subscripts");
  if (contains(sup, i)) throw InvalidParams("first subscript may not lie in the superscript");
  return {fam, i, j, std::move(sup), false};
}

GeneratorLabel make_flag_label(Family fam, int i, IndexSet sup, bool inverted) {
  if (!is_flag_family(fam)) throw InvalidParams("flag label requested for a pair family");
  check_sorted_unique(sup);
  if (i < 1) throw InvalidParams("flag label needs a positive subscript");
  if (contains(sup, i)) throw InvalidParams("subscript may not lie in the superscript");
  return {fam, i, 0, std::move(sup), inverted};
}

bool is_flag_family(Family fam) { return fam == Family::f || fam == Family::g; }

Family dual_family(Family fam) {
  switch (fam) {
    case Family::q: return Family::r;
    case Family::r: return Family::q;
    case Family::f: return Family::g;
    case Family::g: return Family::f;
  }
  return fam;
}

std::string to_string(const GeneratorLabel& g) {
  std::string out(1, static_cast<char>(g.family));
  if (g.inverted) out += "^-1";
  out += '[';
  out += std::to_string(g.i);
  if (!is_flag_family(g.family)) out += ',' + std::to_string(g.j);
  out += '|' + join(g.sup) + ']';
  return out;
}

GeneratorLabel parse_label(const std::string& text) {
  if (text.size() < 4) throw ParseError("bad label '" + text + "'");
  const char fc = text[0];
  if (fc != 'q' && fc != 'r' && fc != 'f' && fc != 'g') throw ParseError("bad family in '" + text + "'");
  const Family fam = static_cast<Family>(fc);
  std::size_t pos = 1;
  bool inverted = false;
  if (text.compare(pos, 3, "^-1") == 0) {
    inverted = true;
    pos += 3;
  }
  if (pos >= text.size() || text[pos] != '[' || text.back() != ']') throw ParseError("bad label '" + text + "'");
  const std::string body = text.substr(pos + 1, text.size() - pos - 2);
  const auto bar = body.find('|');
  if (bar == std::string::npos) throw ParseError("missing '|' in '" + text + "'");
  const auto subs = parse_int_list(body.substr(0, bar), text);
  const auto sup = parse_int_list(body.substr(bar + 1), text);
  try {
    if (is_flag_family(fam)) {
      if (subs.size() != 1) throw ParseError("flag label needs one subscript: '" + text + "'");
      return make_flag_label(fam, subs[0], sup, inverted);
    }
    if (subs.size() != 2 || inverted) throw ParseError("pair label needs two subscripts: '" + text + "'");
    return make_pair_label(fam, subs[0], subs[1], sup);
  } catch (const InvalidParams& e) {
    throw ParseError(std::string(e.what()) + " in '" + text + "'");
  }
}

GenId Alphabet::add(const GeneratorLabel& g) {
  auto it = index_.find(g);
  if (it != index_.end()) return it->second;
  const auto id = static_cast<GenId>(labels_.size());
  labels_.push_back(g);
  index_.emplace(g, id);
  return id;
}

std::optional<GenId> Alphabet::find(const GeneratorLabel& g) const {
  auto it = index_.find(g);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

GenId Alphabet::id(const GeneratorLabel& g) const {
  auto found = find(g);
  if (!found) throw GeneratorMismatch("unknown generator " + to_string(g));
  return *found;
}

std::string to_string(const Word& w, const Alphabet& a) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t t = 0; t < w.size(); ++t) {
    if (t) out += ' ';
    out += to_string(a.label(w[t]));
  }
  return out;
}

Word concat(const Word& a, const Word& b) {
  Word out;
  out.reserve(a.size() + b.size());
  out.insert(out.end(), a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

FreePoly FreePoly::term(const Word& w, const Rational& c) {
  FreePoly p;
  p.add(w, c);
  return p;
}

void FreePoly::add(const Word& w, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, fresh] = terms_.try_emplace(w, c);
  if (fresh) return;
  it->second += c;
  if (sgn(it->second) == 0) terms_.erase(it);
}

void FreePoly::add(const FreePoly& p, const Rational& scale) {
  if (sgn(scale) == 0) return;
  for (const auto& [w, c] : p.terms_) add(w, c * scale);
}

Rational FreePoly::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Rational(0) : it->second;
}

FreePoly FreePoly::part(std::size_t degree) const {
  FreePoly out;
  for (const auto& [w, c] : terms_)
    if (w.size() == degree) out.terms_.emplace(w, c);
  return out;
}

std::size_t FreePoly::max_degree() const {
  std::size_t d = 0;
  for (const auto& [w, c] : terms_) d = std::max(d, w.size());
  return d;
}

FreePoly operator+(const FreePoly& a, const FreePoly& b) {
  FreePoly out = a;
  out.add(b);
  return out;
}

FreePoly operator-(const FreePoly& a, const FreePoly& b) {
  FreePoly out = a;
  out.add(b, -1);
  return out;
}

FreePoly operator*(const Rational& c, const FreePoly& p) {
  FreePoly out;
  out.add(p, c);
  return out;
}

FreePoly operator*(const FreePoly& a, const FreePoly& b) {
  FreePoly out;
  for (const auto& [u, c] : a.terms_)
    for (const auto& [v, d] : b.terms_) out.add(concat(u, v), c * d);
  return out;
}

FreePoly poly_mul(const FreePoly& a, const FreePoly& b) { return a * b; }

std::string to_string(const FreePoly& p, const Alphabet& a) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : p.terms()) {
    if (!first) out += sgn(c) < 0 ? " - " : " + ";
    else if (sgn(c) < 0) out += "-";
    first = false;
    const Rational mag = abs(c);
    if (mag != 1 || w.empty()) {
      out += to_string(mag);
      if (!w.empty()) out += '*';
    }
    if (!w.empty()) out += to_string(w, a);
  }
  return out;
}

std::string to_string(OrderScheme s) {
  switch (s) {
    case OrderScheme::B: return "B";
    case OrderScheme::Colimit: return "colimit";
    case OrderScheme::G: return "G";
    case OrderScheme::Custom: return "custom";
  }
  return "?";
}

std::string to_string(WordRule r) { return r == WordRule::DegLex ? "deglex" : "degrevlex"; }

std::string to_string(SizeDirection d) { return d == SizeDirection::Ascending ? "ascending" : "descending"; }

OrderScheme parse_order_scheme(const std::string& s) {
  if (s == "B") return OrderScheme::B;
  if (s == "colimit") return OrderScheme::Colimit;
  if (s == "G") return OrderScheme::G;
  if (s == "custom") return OrderScheme::Custom;
  throw InvalidParams("unknown order scheme '" + s + "'");
}

WordRule parse_word_rule(const std::string& s) {
  if (s == "deglex") return WordRule::DegLex;
  if (s == "degrevlex") return WordRule::DegRevLex;
  throw InvalidParams("unknown word rule '" + s + "'");
}

SizeDirection parse_size_direction(const std::string& s) {
  if (s == "ascending") return SizeDirection::Ascending;
  if (s == "descending") return SizeDirection::Descending;
  throw InvalidParams("unknown size direction '" + s + "'");
}

namespace {

template <class T>
int three_way(const T& a, const T& b) {
  return a < b ? -1 : (b < a ? 1 : 0);
}

int compare_b(const GeneratorLabel& a, const GeneratorLabel& b) {
  if (int c = three_way(std::pair(a.i, a.j), std::pair(b.i, b.j))) return c;
  return three_way(a.sup, b.sup);
}

}  // namespace

int compare_generators(const GeneratorLabel& a, const GeneratorLabel& b, const OrderSpec& spec) {
  const bool same_kind = a.family == b.family || dual_family(a.family) == b.family;
  if (!same_kind || is_flag_family(a.family) != is_flag_family(b.family))
    throw IncomparableFamilies("cannot compare " + to_string(a) + " with " + to_string(b));
  switch (spec.scheme) {
    case OrderScheme::B:
      return compare_b(a, b);
    case OrderScheme::Colimit: {
      int c = three_way(a.sup.size(), b.sup.size());
      if (spec.size_direction == SizeDirection::Descending) c = -c;
      return c ? c : compare_b(a, b);
    }
    case OrderScheme::G: {
      if (int c = three_way(a.sup.size(), b.sup.size())) return c;
      if (int c = three_way(a.i, b.i)) return c;
      if (int c = three_way(a.sup, b.sup)) return c;
      if (int c = three_way(a.j, b.j)) return c;
      return three_way(a.inverted, b.inverted);
    }
    case OrderScheme::Custom: {
      auto pos = [&](const GeneratorLabel& g) {
        auto it = std::find(spec.custom.begin(), spec.custom.end(), g);
        return static_cast<std::size_t>(it - spec.custom.begin());
      };
      return three_way(pos(a), pos(b));
    }
  }
  return 0;
}

MonomialOrder::MonomialOrder(const Alphabet& alphabet, OrderSpec spec) : spec_(std::move(spec)) {
  const auto& labels = alphabet.labels();
  std::vector<GenId> ids(labels.size());
  std::iota(ids.begin(), ids.end(), 0);
  std::stable_sort(ids.begin(), ids.end(), [&](GenId x, GenId y) {
    return compare_generators(labels[x], labels[y], spec_) < 0;
  });
  rank_.assign(labels.size(), 0);
  std::size_t r = 0;
  for (std::size_t t = 0; t < ids.size(); ++t) {
    if (t > 0) {
      if (compare_generators(labels[ids[t - 1]], labels[ids[t]], spec_) == 0) has_ties_ = true;
      else ++r;
    }
    rank_[ids[t]] = r;
  }
}

int MonomialOrder::compare(const Word& u, const Word& v) const {
  if (u.size() != v.size()) return u.size() < v.size() ? -1 : 1;
  if (spec_.rule == WordRule::DegLex) {
    for (std::size_t t = 0; t < u.size(); ++t)
      if (int c = three_way(rank_[u[t]], rank_[v[t]])) return c;
    return 0;
  }
  for (std::size_t t = u.size(); t-- > 0;)
    if (int c = three_way(rank_[u[t]], rank_[v[t]])) return -c;
  return 0;
}

std::vector<GenId> MonomialOrder::sorted_generators() const {
  std::vector<GenId> ids(rank_.size());
  std::iota(ids.begin(), ids.end(), 0);
  std::stable_sort(ids.begin(), ids.end(), [&](GenId x, GenId y) { return rank_[x] < rank_[y]; });
  return ids;
}

int compare_words(const Word& u, const Word& v, const MonomialOrder& order) { return order.compare(u, v); }

const Word& leading_word(const FreePoly& p, const MonomialOrder& order) {
  if (p.is_zero()) throw InvalidParams("leading word of the zero polynomial");
  const Word* best = nullptr;
  for (const auto& [w, c] : p.terms())
    if (!best || order.compare(*best, w) < 0) best = &w;
  return *best;
}

}  // namespace qpl

#include "qpl/groebner.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <tuple>

namespace qpl {

const FreePoly* RewriteSystem::find(const Word& lead) const {
  auto it = rules_.find(lead);
  return it == rules_.end() ? nullptr : &it->second;
}

std::vector<Word> RewriteSystem::sorted_leads() const {
  std::vector<Word> out;
  out.reserve(rules_.size());
  for (const auto& [w, rhs] : rules_) out.push_back(w);
  std::sort(out.begin(), out.end(), [&](const Word& a, const Word& b) { return order_.less(a, b); });
  return out;
}

bool RewriteSystem::find_reducible(const Word& w, std::size_t& start, std::size_t& len) const {
  if (rules_.empty()) return false;
  Word part;
  for (std::size_t s = 0; s <= w.size(); ++s)
    for (std::size_t l : lead_lengths_) {
      if (s + l > w.size()) break;
      part.assign(w.begin() + static_cast<std::ptrdiff_t>(s), w.begin() + static_cast<std::ptrdiff_t>(s + l));
      if (rules_.count(part)) {
        start = s;
        len = l;
        return true;
      }
    }
  return false;
}

bool RewriteSystem::is_normal(const Word& w) const {
  std::size_t s, l;
  return !find_reducible(w, s, l);
}

bool RewriteSystem::suffix_normal(const Word& w) const {
  Word part;
  for (std::size_t l : lead_lengths_) {
    if (l > w.size()) break;
    part.assign(w.end() - static_cast<std::ptrdiff_t>(l), w.end());
    if (rules_.count(part)) return false;
  }
  return true;
}

void RewriteSystem::insert_rule(Word lead, FreePoly rhs) {
  for (std::size_t o = 1; o < lead.size(); ++o) {
    by_prefix_[Word(lead.begin(), lead.begin() + static_cast<std::ptrdiff_t>(o))].push_back(lead);
    by_suffix_[Word(lead.end() - static_cast<std::ptrdiff_t>(o), lead.end())].push_back(lead);
  }
  lead_length_counts_.insert(lead.size());
  lead_lengths_.insert(lead.size());
  rules_.emplace(std::move(lead), std::move(rhs));
}

void RewriteSystem::erase_rule(const Word& lead) {
  auto it = rules_.find(lead);
  if (it == rules_.end()) return;
  auto drop = [&](std::unordered_map<Word, std::vector<Word>, WordHash>& index, const Word& key) {
    auto& v = index[key];
    v.erase(std::remove(v.begin(), v.end(), lead), v.end());
    if (v.empty()) index.erase(key);
  };
  for (std::size_t o = 1; o < lead.size(); ++o) {
    drop(by_prefix_, Word(lead.begin(), lead.begin() + static_cast<std::ptrdiff_t>(o)));
    drop(by_suffix_, Word(lead.end() - static_cast<std::ptrdiff_t>(o), lead.end()));
  }
  lead_length_counts_.erase(lead_length_counts_.find(lead.size()));
  if (!lead_length_counts_.count(lead.size())) lead_lengths_.erase(lead.size());
  rules_.erase(it);
}

const std::vector<Word>* RewriteSystem::leads_with_prefix(const Word& part) const {
  auto it = by_prefix_.find(part);
  return it == by_prefix_.end() ? nullptr : &it->second;
}

const std::vector<Word>* RewriteSystem::leads_with_suffix(const Word& part) const {
  auto it = by_suffix_.find(part);
  return it == by_suffix_.end() ? nullptr : &it->second;
}

namespace {

struct OrderLess {
  const MonomialOrder* order;
  bool operator()(const Word& a, const Word& b) const { return order->less(a, b); }
};

Word slice(const Word& w, std::size_t from, std::size_t to) {
  return Word(w.begin() + static_cast<std::ptrdiff_t>(from), w.begin() + static_cast<std::ptrdiff_t>(to));
}

}  // namespace

FreePoly normal_form(const FreePoly& p, const RewriteSystem& s, std::size_t* steps) {
  std::map<Word, Rational, OrderLess> work(OrderLess{&s.order()});
  for (const auto& [w, c] : p.terms()) work.emplace(w, c);
  FreePoly result;
  std::size_t count = 0;
  while (!work.empty()) {
    auto top = std::prev(work.end());
    const Word w = top->first;
    const Rational c = top->second;
    work.erase(top);
    std::size_t start, len;
    if (!s.find_reducible(w, start, len)) {
      result.add(w, c);
      continue;
    }
    ++count;
    const FreePoly& rhs = *s.find(slice(w, start, start + len));
    const Word left = slice(w, 0, start);
    const Word right = slice(w, start + len, w.size());
    for (const auto& [v, d] : rhs.terms()) {
      Word nw = left;
      nw.insert(nw.end(), v.begin(), v.end());
      nw.insert(nw.end(), right.begin(), right.end());
      auto [it, fresh] = work.try_emplace(std::move(nw), c * d);
      if (!fresh) {
        it->second += c * d;
        if (sgn(it->second) == 0) work.erase(it);
      }
    }
  }
  if (steps) *steps = count;
  return result;
}

namespace {

// Interreducing insertion used by both orientation and completion.
class Inserter {
 public:
  explicit Inserter(RewriteSystem& s) : s_(s) {}

  /// Adds p to the ideal; returns the leads of rules created.
  std::vector<Word> add(const FreePoly& p) {
    std::vector<Word> created;
    std::deque<FreePoly> queue{p};
    while (!queue.empty()) {
      FreePoly q = normal_form(queue.front(), s_);
      queue.pop_front();
      if (q.is_zero()) continue;
      const Word lead = leading_word(q, s_.order());
      const Rational c = q.coeff(lead);
      FreePoly rhs;
      for (const auto& [w, d] : q.terms())
        if (w != lead) rhs.add(w, -d / c);
      if (lead.size() < s_.max_lead_degree()) {
        // Existing rules whose lead contains the new lead are no longer
        // interreduced; send them back through the queue.
        for (const Word& other : s_.sorted_leads()) {
          if (other.size() <= lead.size()) continue;
          if (std::search(other.begin(), other.end(), lead.begin(), lead.end()) == other.end()) continue;
          FreePoly back = FreePoly::term(other);
          back.add(*s_.find(other), -1);
          s_.erase_rule(other);
          created.erase(std::remove(created.begin(), created.end(), other), created.end());
          queue.push_back(std::move(back));
        }
      }
      s_.insert_rule(lead, std::move(rhs));
      created.push_back(lead);
    }
    return created;
  }

  void tail_reduce() {
    for (const Word& lead : s_.sorted_leads()) {
      const FreePoly rhs = *s_.find(lead);
      s_.set_rhs(lead, normal_form(rhs, s_));
    }
  }

 private:
  RewriteSystem& s_;
};

void check_ties(const FreePoly& p, const MonomialOrder& order) {
  if (!order.has_ties()) return;
  const Word& lead = leading_word(p, order);
  for (const auto& [w, c] : p.terms())
    if (w != lead && order.compare(w, lead) == 0)
      throw TieOnLeadingWord("order does not separate the words of a relation");
}

}  // namespace

RewriteSystem orient(const std::vector<FreePoly>& polys, const MonomialOrder& order) {
  RewriteSystem s(order);
  Inserter ins(s);
  for (const auto& p : polys) {
    if (p.is_zero()) continue;
    check_ties(p, order);
    ins.add(p);
  }
  ins.tail_reduce();
  return s;
}

RewriteSystem orient(const Presentation& p, const OrderSpec& spec) {
  std::vector<FreePoly> polys;
  polys.reserve(p.relations.size());
  for (const auto& r : p.relations) polys.push_back(r.poly);
  return orient(polys, MonomialOrder(p.alphabet, spec));
}

RewriteSystem orient(const Presentation& p) { return orient(p, p.order); }

namespace {

struct Pair {
  std::size_t degree;
  Word left, right;
  std::size_t overlap;
  auto operator<=>(const Pair&) const = default;
};

class Completion {
 public:
  Completion(RewriteSystem& s, std::size_t max_degree, GroebnerReport& rep)
      : s_(s), max_degree_(max_degree), rep_(rep) {}

  void queue_pairs_for(const Word& x) {
    for (std::size_t o = 1; o < x.size(); ++o) {
      if (auto* vs = s_.leads_with_prefix(slice(x, x.size() - o, x.size())))
        for (const Word& v : *vs) push(x, v, o);
      if (auto* us = s_.leads_with_suffix(slice(x, 0, o)))
        for (const Word& u : *us) push(u, x, o);
    }
  }

  void run() {
    while (!pairs_.empty() && !s_.unit_in_ideal()) {
      const Pair pr = *pairs_.begin();
      pairs_.erase(pairs_.begin());
      const FreePoly* ru = s_.find(pr.left);
      const FreePoly* rv = s_.find(pr.right);
      if (!ru || !rv) continue;
      ++rep_.pairs_checked;
      const Word a = slice(pr.left, 0, pr.left.size() - pr.overlap);
      const Word b = slice(pr.right, pr.overlap, pr.right.size());
      const FreePoly left_side = *ru * FreePoly::term(b);
      const FreePoly right_side = FreePoly::term(a) * *rv;
      std::size_t sl = 0, sr = 0;
      const FreePoly nl = normal_form(left_side, s_, &sl);
      const FreePoly nr = normal_form(right_side, s_, &sr);
      const FreePoly rem = nl - nr;
      if (rem.is_zero()) {
        rep_.max_resolution_steps = std::max({rep_.max_resolution_steps, sl + 1, sr + 1});
        continue;
      }
      rep_.obstructions.push_back({pr.degree, concat(pr.left, b), rem});
      Inserter ins(s_);
      for (const Word& lead : ins.add(rem)) queue_pairs_for(lead);
    }
  }

 private:
  void push(const Word& u, const Word& v, std::size_t o) {
    const std::size_t degree = u.size() + v.size() - o;
    const FreePoly* ru = s_.find(u);
    const FreePoly* rv = s_.find(v);
    if (ru && rv && ru->is_zero() && rv->is_zero()) {
      ++rep_.pairs_trivial;
      return;
    }
    if (degree > max_degree_) {
      ++rep_.pairs_beyond_bound;
      return;
    }
    pairs_.insert({degree, u, v, o});
  }

  RewriteSystem& s_;
  std::size_t max_degree_;
  GroebnerReport& rep_;
  std::set<Pair> pairs_;
};

}  // namespace

GroebnerReport complete(RewriteSystem s, std::size_t max_degree) {
  if (max_degree < 3) throw InvalidParams("completion needs max_degree >= 3");
  GroebnerReport rep;
  rep.max_degree = max_degree;
  {
    Completion c(s, max_degree, rep);
    for (const Word& lead : s.sorted_leads()) c.queue_pairs_for(lead);
    c.run();
  }
  Inserter(s).tail_reduce();
  rep.unit_in_ideal = s.unit_in_ideal();
  rep.confluent_up_to = max_degree;
  for (const auto& ob : rep.obstructions) rep.confluent_up_to = std::min(rep.confluent_up_to, ob.degree - 1);
  rep.quadratic_gb = rep.obstructions.empty() && s.max_lead_degree() <= 2;
  s.certified_degree = max_degree;
  rep.system = std::move(s);
  return rep;
}

std::vector<Word> normal_words(const RewriteSystem& s, std::size_t d) {
  if (d > s.certified_degree)
    throw NotConfluent("system certified only up to degree " + std::to_string(s.certified_degree));
  std::vector<Word> out;
  if (s.unit_in_ideal()) return out;
  const auto gens = s.order().sorted_generators();
  Word w;
  auto dfs = [&](auto&& self) -> void {
    if (w.size() == d) {
      out.push_back(w);
      return;
    }
    for (GenId g : gens) {
      w.push_back(g);
      if (s.suffix_normal(w)) self(self);
      w.pop_back();
    }
  };
  dfs(dfs);
  std::sort(out.begin(), out.end(), [&](const Word& a, const Word& b) { return s.order().less(a, b); });
  return out;
}

Integer count_normal_words(const RewriteSystem& s, std::size_t d) {
  if (d > s.certified_degree)
    throw NotConfluent("system certified only up to degree " + std::to_string(s.certified_degree));
  if (s.unit_in_ideal()) return 0;
  const std::size_t keep = s.max_lead_degree() > 0 ? s.max_lead_degree() - 1 : 0;
  const auto gens = s.order().sorted_generators();
  std::map<Word, Integer> level{{Word{}, Integer(1)}};
  for (std::size_t step = 0; step < d; ++step) {
    std::map<Word, Integer> next;
    for (const auto& [state, count] : level)
      for (GenId g : gens) {
        Word w = state;
        w.push_back(g);
        if (!s.suffix_normal(w)) continue;
        if (w.size() > keep) w.erase(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(w.size() - keep));
        next[w] += count;
      }
    level = std::move(next);
  }
  Integer total = 0;
  for (const auto& [state, count] : level) total += count;
  return total;
}

ConsistencyReport check_nonhomogeneous_consistency(const Presentation& p, const OrderSpec& order,
                                                   std::size_t max_degree) {
  ConsistencyReport rep;
  const MonomialOrder mo(p.alphabet, order);
  std::vector<FreePoly> full, top;
  for (const auto& r : p.relations) {
    full.push_back(r.poly);
    top.push_back(r.poly.part(r.poly.max_degree()));
  }
  const GroebnerReport gf = complete(orient(full, mo), max_degree);
  const GroebnerReport gh = complete(orient(top, mo), max_degree);
  rep.unit_in_ideal = gf.unit_in_ideal;
  rep.obstructions_full = gf.obstructions.size();
  rep.obstructions_homogeneous = gh.obstructions.size();
  rep.consistent = !rep.unit_in_ideal;
  if (rep.unit_in_ideal) rep.messages.push_back("1 lies in the ideal");
  for (std::size_t d = 0; d <= max_degree; ++d) {
    rep.counts_full.push_back(count_normal_words(gf.system, d));
    rep.counts_homogeneous.push_back(count_normal_words(gh.system, d));
    if (rep.counts_full.back() != rep.counts_homogeneous.back()) {
      rep.consistent = false;
      rep.messages.push_back("degree " + std::to_string(d) + ": " + rep.counts_full.back().get_str() +
                             " normal words vs " + rep.counts_homogeneous.back().get_str() + " homogeneous");
    }
  }
  return rep;
}

void require_consistent(const ConsistencyReport& r) {
  if (r.consistent) return;
  std::string msg = "inconsistent presentation";
  for (const auto& m : r.messages) msg += "; " + m;
  throw InconsistentPresentation(msg);
}

}  // namespace qpl

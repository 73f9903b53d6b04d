#include "qpl/serialize.hpp"

namespace qpl {

json integer_json(const Integer& x) {
  if (x.fits_slong_p()) return json(x.get_si());
  return json(x.get_str());
}

json series_json(const SeriesCoeffs& a) {
  json out = json::array();
  for (const auto& x : a) out.push_back(integer_json(x));
  return out;
}

json to_json(const OrderSpec& spec) {
  json j{{"scheme", to_string(spec.scheme)},
         {"word_rule", to_string(spec.rule)},
         {"size_direction", to_string(spec.size_direction)}};
  if (spec.scheme == OrderScheme::Custom) {
    json labels = json::array();
    for (const auto& g : spec.custom) labels.push_back(to_string(g));
    j["custom"] = labels;
  }
  return j;
}

OrderSpec order_from_json(const json& j) {
  try {
    OrderSpec s = make_order(parse_order_scheme(j.at("scheme").get<std::string>()),
                             parse_word_rule(j.at("word_rule").get<std::string>()),
                             parse_size_direction(j.at("size_direction").get<std::string>()));
    if (j.contains("custom"))
      for (const auto& t : j.at("custom")) s.custom.push_back(parse_label(t.get<std::string>()));
    return s;
  } catch (const json::exception& e) {
    throw ParseError(std::string("order: ") + e.what());
  }
}

json poly_json(const FreePoly& p, const Alphabet& a) {
  json out = json::array();
  for (const auto& [w, c] : p.terms()) {
    json word = json::array();
    for (GenId g : w) word.push_back(to_string(a.label(g)));
    out.push_back(json{{"coeff", to_string(c)}, {"word", word}});
  }
  return out;
}

FreePoly poly_from_json(const json& j, const Alphabet& a) {
  FreePoly p;
  try {
    for (const auto& t : j) {
      Word w;
      for (const auto& g : t.at("word")) w.push_back(a.id(parse_label(g.get<std::string>())));
      p.add(w, parse_rational(t.at("coeff").get<std::string>()));
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("polynomial: ") + e.what());
  }
  return p;
}

json to_json(const Presentation& p) {
  json gens = json::array();
  for (const auto& g : p.alphabet.labels()) gens.push_back(to_string(g));
  json rels = json::array();
  for (const auto& r : p.relations) rels.push_back(json{{"source", r.source}, {"terms", poly_json(r.poly, p.alphabet)}});
  return json{{"schema_version", kSchemaVersion},
              {"kind", "presentation"},
              {"name", p.name},
              {"n", p.n},
              {"k", p.k},
              {"order", to_json(p.order)},
              {"generators", gens},
              {"relations", rels}};
}

Presentation presentation_from_json(const json& j) {
  try {
    if (j.at("schema_version").get<int>() != kSchemaVersion) throw ParseError("unsupported schema_version");
    Presentation p;
    p.name = j.at("name").get<std::string>();
    p.n = j.at("n").get<int>();
    p.k = j.at("k").get<int>();
    p.order = order_from_json(j.at("order"));
    for (const auto& g : j.at("generators")) p.alphabet.add(parse_label(g.get<std::string>()));
    for (const auto& r : j.at("relations"))
      p.relations.push_back(Relation{poly_from_json(r.at("terms"), p.alphabet), r.at("source").get<std::string>()});
    return p;
  } catch (const json::exception& e) {
    throw ParseError(std::string("presentation: ") + e.what());
  }
}

namespace {

json word_json(const Word& w, const Alphabet& a) {
  json out = json::array();
  for (GenId g : w) out.push_back(to_string(a.label(g)));
  return out;
}

}  // namespace

json to_json(const GroebnerReport& r, const Alphabet& a) {
  json rules = json::array();
  for (const auto& lead : r.system.sorted_leads())
    rules.push_back(json{{"lead", word_json(lead, a)}, {"rhs", poly_json(*r.system.find(lead), a)}});
  json obs = json::array();
  for (const auto& o : r.obstructions)
    obs.push_back(json{{"degree", o.degree}, {"overlap", word_json(o.overlap, a)}, {"remainder", poly_json(o.remainder, a)}});
  return json{{"max_degree", r.max_degree},
              {"num_rules", r.system.size()},
              {"rules", rules},
              {"obstructions", obs},
              {"num_obstructions", r.obstructions.size()},
              {"confluent_up_to", r.confluent_up_to},
              {"quadratic_gb", r.quadratic_gb},
              {"unit_in_ideal", r.unit_in_ideal},
              {"pairs_checked", r.pairs_checked},
              {"pairs_trivial", r.pairs_trivial},
              {"pairs_beyond_bound", r.pairs_beyond_bound},
              {"max_resolution_steps", r.max_resolution_steps}};
}

json to_json(const ConsistencyReport& r) {
  return json{{"consistent", r.consistent},
              {"unit_in_ideal", r.unit_in_ideal},
              {"counts_full", series_json(r.counts_full)},
              {"counts_homogeneous", series_json(r.counts_homogeneous)},
              {"obstructions_full", r.obstructions_full},
              {"obstructions_homogeneous", r.obstructions_homogeneous},
              {"messages", r.messages}};
}

json to_json(const DualMatchReport& r) {
  json j{{"equal", r.equal},
         {"rank_computed", r.rank_computed},
         {"rank_expected", r.rank_expected},
         {"rank_union", r.rank_union}};
  if (r.witness) j["witness"] = json{{"side", r.witness_side}, {"relation", r.witness_text}};
  return j;
}

json to_json(const RecursionReport& r) {
  json j{{"ok", r.ok}, {"message", r.message}};
  if (r.first_failure) j["first_failure"] = *r.first_failure;
  return j;
}

json to_json(const DifferentialReport& r) {
  return json{{"passed", r.passed()},
              {"well_defined", r.well_defined},
              {"squares_to_zero_generators", r.squares_to_zero_generators},
              {"squares_to_zero_degree2", r.squares_to_zero_degree2},
              {"squares_to_zero_all", r.squares_to_zero_all},
              {"witnesses", r.witnesses}};
}

json to_json(const ChainComplexDims& r) {
  return json{{"algebra_dims", r.algebra_dims},
              {"ranks", r.ranks},
              {"homology", r.homology},
              {"is_complex", r.is_complex},
              {"euler_algebra", r.euler_algebra},
              {"euler_homology", r.euler_homology},
              {"euler_ok", r.euler_ok()}};
}

json to_json(const NumericReport& r) {
  json fails = json::array();
  for (const auto& f : r.failures)
    fails.push_back(json{{"index", f.index}, {"source", f.source}, {"residual", f.residual}});
  json j{{"passed", r.passed()}, {"trials", r.trials},   {"checked", r.checked}, {"zero", r.zero},
         {"nonzero", r.nonzero}, {"skipped", r.skipped}, {"retries", r.retries}, {"failures", fails}};
  if (!r.entries.empty()) {
    json all = json::array();
    for (const auto& e : r.entries)
      all.push_back(json{{"index", e.index}, {"source", e.source}, {"status", e.status}, {"residual", e.residual}});
    j["entries"] = all;
  }
  return j;
}

}  // namespace qpl

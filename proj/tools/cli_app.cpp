#include "cli_app.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "qpl/serialize.hpp"

namespace qpl::cli {

namespace {

namespace fs = std::filesystem;

struct RunConfig {
  std::string command;
  std::string algebra = "R";
  int n = 4;
  int k = 2;
  int k_max = 0;  // 0: use n
  std::string order = "default";
  std::string word_rule = "deglex";
  std::string size_direction = "ascending";
  int max_degree = 6;
  std::string ring = "quaternion";
  int trials = 10;
  std::uint64_t seed = 1;
  std::string format = "json";
  std::string output;
  bool timings = false;
  bool plucker = false;
  bool skew = false;
  int min_size = 1;
  bool homology = false;
  bool verify = false;
  bool direct = false;
  bool consistency = false;
  bool matrices = false;
  bool on_dual = false;
  bool exclude_l_equals_j = false;
  std::string fixtures;

  bool is_colimit() const { return algebra == "Rcolim" || algebra == "Qcolim"; }
  int effective_k() const { return is_colimit() ? (k_max ? k_max : n) : k; }

  json to_json() const {
    json j{{"algebra", algebra},   {"n", n},
           {"k", effective_k()},  {"order", order},
           {"word_rule", word_rule}, {"size_direction", size_direction},
           {"max_degree", max_degree}, {"format", format}};
    if (command == "verify" || verify) {
      j["ring"] = ring;
      j["trials"] = trials;
      j["seed"] = seed;
    }
    if (algebra == "Q" || algebra == "Q0" || algebra == "Qcolim") {
      j["plucker"] = plucker;
      j["skew"] = skew;
    }
    if (algebra == "F" || algebra == "G") j["min_size"] = min_size;
    if (command == "pipeline") {
      j["homology"] = homology;
      j["verify"] = verify;
      j["direct"] = direct;
      j["consistency"] = consistency;
    }
    if (command == "gbasis") j["dual"] = on_dual;
    if (command == "homology" || homology) j["exclude_l_equals_j"] = exclude_l_equals_j;
    return j;
  }
};

class Timer {
 public:
  explicit Timer(bool enabled) : enabled_(enabled) {}
  template <class F>
  auto stage(const std::string& name, F&& f) {
    const auto start = std::chrono::steady_clock::now();
    auto result = f();
    if (enabled_)
      times_[name] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return result;
  }
  void attach(json& report) const {
    if (enabled_) report["timings_ms"] = times_;
  }

 private:
  bool enabled_;
  std::map<std::string, double> times_;
};

OrderSpec resolve_order(const RunConfig& c, const OrderSpec& fallback) {
  OrderSpec s = fallback;
  if (c.order != "default") s.scheme = parse_order_scheme(c.order);
  s.rule = parse_word_rule(c.word_rule);
  s.size_direction = parse_size_direction(c.size_direction);
  if (s.scheme == OrderScheme::Custom) throw InvalidParams("custom orders are only available from the library");
  return s;
}

Presentation build_algebra(const RunConfig& c, std::ostream& err) {
  QOptions q;
  q.include_plucker = c.plucker;
  q.include_skew = c.skew;
  FlagOptions f;
  f.min_size = c.min_size;
  Presentation p = build_by_name(c.algebra, c.n, c.effective_k(), q, f);
  p.order = resolve_order(c, p.order);
  if (p.is_zero_algebra())
    err << "warning: " << c.algebra << " with n=" << c.n << ", k=" << c.effective_k()
        << " has no generators (zero algebra)\n";
  return p;
}

Presentation dual_of(const Presentation& p) {
  Presentation a = p.is_quadratic() ? p : quadratic_part(p, p.name + "0");
  return quadratic_dual(a);
}

std::size_t degree_bound(const RunConfig& c) {
  if (c.max_degree < 3) throw InvalidParams("--max-degree must be at least 3");
  return static_cast<std::size_t>(c.max_degree);
}

// Hilbert data of the quadratic part of p computed through its dual.
json hilbert_section(const Presentation& p, const RunConfig& c, Timer& timer, bool& ok) {
  const std::size_t D = degree_bound(c);
  const Presentation dual = timer.stage("dual", [&] { return dual_of(p); });
  const GroebnerReport gb = timer.stage("complete_dual", [&] { return complete(orient(dual), D); });
  const SeriesCoeffs a = timer.stage("dual_dims", [&] { return dims_by_enumeration(gb.system, D); });
  json j;
  j["dual_generators"] = dual.num_generators();
  j["dual_obstructions"] = gb.obstructions.size();
  j["dual_confluent"] = gb.obstructions.empty();
  j["dual_dims"] = series_json(a);
  if (gb.system.max_lead_degree() <= 2) {
    const SeriesCoeffs t = timer.stage("transfer_matrix", [&] { return dims_by_transfer_matrix(gb.system, D); });
    j["transfer_matrix_agrees"] = (t == a);
    ok = ok && t == a;
  }
  SeriesCoeffs trimmed(a.begin(), a.begin() + static_cast<long>(top_degree(a)) + 1);
  const RationalForm form = koszul_form(trimmed);
  j["denominator"] = series_json(form.denominator);
  const SeriesCoeffs b = timer.stage("reciprocal", [&] { return series_reciprocal(a, D); });
  j["dims"] = series_json(b);
  const RecursionReport rec = recursion_check(b, form);
  j["recursion"] = to_json(rec);
  ok = ok && gb.obstructions.empty() && rec.ok;
  if (c.direct) {
    const Presentation quad = p.is_quadratic() ? p : quadratic_part(p, p.name + "0");
    const GroebnerReport direct = timer.stage("complete_direct", [&] { return complete(orient(quad), D); });
    const SeriesCoeffs d = dims_by_enumeration(direct.system, D);
    j["direct_dims"] = series_json(d);
    j["direct_obstructions"] = direct.obstructions.size();
    j["direct_matches"] = (d == b);
    ok = ok && d == b;
  }
  return j;
}

json homology_section(const RunConfig& c, Timer& timer, bool& ok) {
  if (c.algebra != "B" || c.k != 2) throw InvalidParams("homology needs --algebra B --k 2");
  DifferentialOptions o;
  o.exclude_l_equals_j = c.exclude_l_equals_j;
  const Differential d = timer.stage("differential", [&] { return build_differential(c.n, o); });
  const DifferentialReport check = timer.stage("check_differential", [&] { return check_differential(d); });
  const ChainComplexDims h = timer.stage("homology", [&] { return homology_dims(d); });
  json j{{"check", to_json(check)}, {"complex", to_json(h)}};
  if (c.matrices) {
    json images = json::object();
    for (GenId g = 0; g < d.algebra.alphabet.size(); ++g)
      images[to_string(d.algebra.alphabet.label(g))] = poly_json(d.images[g], d.algebra.alphabet);
    j["images"] = images;
  }
  ok = ok && check.passed() && h.is_complex && h.euler_ok();
  return j;
}

json verify_section(const Presentation& p, const RunConfig& c, Timer& timer, bool& ok) {
  if (c.trials < 1) throw InvalidParams("--trials must be positive");
  const auto trials = static_cast<std::size_t>(c.trials);
  NumericReport r = timer.stage("oracle", [&] {
    return c.ring == "rational" ? verify_random<Rational>(p, trials, c.seed) : verify_random<Quaternion>(p, trials, c.seed);
  });
  ok = ok && r.passed();
  return to_json(r);
}

// ------------------------------------------------------------- text output

void flatten(const json& j, const std::string& prefix, std::ostream& out) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) flatten(value, prefix.empty() ? key : prefix + "." + key, out);
  } else if (j.is_array() && std::all_of(j.begin(), j.end(), [](const json& x) { return x.is_primitive(); })) {
    if (j.size() > 40) {
      out << prefix << ": [" << j.size() << " entries]\n";
      return;
    }
    out << prefix << ":";
    for (const auto& x : j) out << ' ' << (x.is_string() ? x.get<std::string>() : x.dump());
    out << "\n";
  } else if (j.is_array()) {
    out << prefix << ": [" << j.size() << " entries]\n";
  } else {
    out << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

std::string render(const json& report, const std::string& format) {
  if (format == "text") {
    std::ostringstream s;
    flatten(report, "", s);
    return s.str();
  }
  return report.dump(2) + "\n";
}

// ---------------------------------------------------------------- goldens

void diff_subset(const json& expected, const json& actual, const std::string& path, std::vector<std::string>& diffs) {
  if (expected.is_object()) {
    if (!actual.is_object()) {
      diffs.push_back(path + ": expected an object, got " + actual.dump());
      return;
    }
    for (const auto& [key, value] : expected.items()) {
      if (!actual.contains(key)) {
        diffs.push_back(path + "/" + key + ": missing");
        continue;
      }
      diff_subset(value, actual.at(key), path + "/" + key, diffs);
    }
    return;
  }
  if (expected.is_array() && actual.is_array() && expected.size() == actual.size()) {
    for (std::size_t i = 0; i < expected.size(); ++i) diff_subset(expected[i], actual[i], path + "/" + std::to_string(i), diffs);
    return;
  }
  if (expected != actual) diffs.push_back(path + ": expected " + expected.dump() + ", got " + actual.dump());
}

int run_goldens(const RunConfig& c, std::ostream& out, std::ostream& err) {
  std::string dir = c.fixtures;
  if (dir.empty())
    if (const char* env = std::getenv("QPL_FIXTURES")) dir = env;
  if (dir.empty()) {
    err << "error: no fixture directory (use --fixtures or QPL_FIXTURES)\n";
    return 2;
  }
  if (!fs::is_directory(dir)) {
    err << "error: fixture directory " << dir << " does not exist\n";
    return 2;
  }
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(dir))
    if (e.is_regular_file() && e.path().extension() == ".json") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  if (files.empty()) {
    err << "error: fixture directory " << dir << " contains no golden files\n";
    return 2;
  }
  std::size_t failed = 0;
  for (const auto& f : files) {
    json golden;
    try {
      std::ifstream in(f);
      golden = json::parse(in);
    } catch (const json::exception& e) {
      err << "error: " << f.filename().string() << " is not valid JSON: " << e.what() << "\n";
      return 2;
    }
    if (!golden.contains("args") || !golden.contains("expected")) {
      err << "error: " << f.filename().string() << " needs \"args\" and \"expected\"\n";
      return 2;
    }
    std::vector<std::string> args = golden.at("args").get<std::vector<std::string>>();
    if (!args.empty() && args.front() == "goldens") {
      err << "error: " << f.filename().string() << " may not invoke goldens\n";
      return 2;
    }
    args.push_back("--format");
    args.push_back("json");
    std::ostringstream sub_out, sub_err;
    const int code = run(args, sub_out, sub_err);
    std::vector<std::string> diffs;
    const int want_code = golden.value("exit_code", 0);
    if (code != want_code)
      diffs.push_back("exit code: expected " + std::to_string(want_code) + ", got " + std::to_string(code));
    json actual;
    try {
      actual = json::parse(sub_out.str());
    } catch (const json::exception&) {
      diffs.push_back("output is not JSON: " + sub_err.str());
    }
    if (!actual.is_null()) diff_subset(golden.at("expected"), actual.value("result", json()), "", diffs);
    const std::string name = f.stem().string();
    if (diffs.empty()) {
      out << "PASS " << name << "\n";
    } else {
      ++failed;
      out << "FAIL " << name << "\n";
      for (const auto& d : diffs) out << "  " << d << "\n";
    }
  }
  out << (files.size() - failed) << "/" << files.size() << " golden files match\n";
  return failed ? 1 : 0;
}

// --------------------------------------------------------------- commands

json command_result(const RunConfig& c, std::ostream& err, Timer& timer, bool& ok) {
  const std::string& cmd = c.command;
  if (cmd == "homology") return homology_section(c, timer, ok);
  const Presentation p = timer.stage("build", [&] { return build_algebra(c, err); });
  if (cmd == "build") return to_json(p);
  if (cmd == "dual") return to_json(timer.stage("dual", [&] { return dual_of(p); }));
  if (cmd == "gbasis") {
    const std::size_t D = degree_bound(c);
    const Presentation target = c.on_dual ? dual_of(p) : p;
    const GroebnerReport r = timer.stage("complete", [&] { return complete(orient(target), D); });
    ok = r.obstructions.empty() && !r.unit_in_ideal;
    json j = to_json(r, target.alphabet);
    j["algebra"] = target.name;
    j["normal_word_counts"] = series_json(dims_by_enumeration(r.system, D));
    return j;
  }
  if (cmd == "hilbert") return hilbert_section(p, c, timer, ok);
  if (cmd == "verify") return verify_section(p, c, timer, ok);
  if (cmd == "pipeline") {
    json j;
    j["generators"] = p.num_generators();
    j["relations"] = p.relations.size();
    json h = hilbert_section(p, c, timer, ok);
    for (auto& [key, value] : h.items()) j[key] = value;
    if (c.consistency && !p.is_quadratic()) {
      const ConsistencyReport r = timer.stage("consistency", [&] {
        return check_nonhomogeneous_consistency(p, p.order, degree_bound(c));
      });
      j["consistency"] = to_json(r);
      ok = ok && r.consistent;
    }
    if (c.homology) j["homology"] = homology_section(c, timer, ok);
    if (c.verify) j["oracle"] = verify_section(p, c, timer, ok);
    j["passed"] = ok;
    return j;
  }
  throw InvalidParams("unknown command " + cmd);
}

int execute(const RunConfig& c, std::ostream& out, std::ostream& err) {
  if (c.command == "goldens") return run_goldens(c, out, err);
  Timer timer(c.timings);
  bool ok = true;
  json result = command_result(c, err, timer, ok);
  json report{{"schema_version", kSchemaVersion},
              {"artifact_version", kArtifactVersion},
              {"command", c.command},
              {"config", c.to_json()},
              {"result", result},
              {"ok", ok}};
  timer.attach(report);
  const std::string text = render(report, c.format);
  if (c.output.empty()) {
    out << text;
  } else {
    std::ofstream f(c.output);
    if (!f) throw InvalidParams("cannot write " + c.output);
    f << text;
  }
  return ok ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig c;
  CLI::App app{"Quasi-Plücker and flag algebras: presentations, duals, Gröbner bases, series, homology"};
  app.name("qpl");
  app.set_config("--config", "", "INI or TOML file whose keys mirror the long flags");
  app.require_subcommand(1, 1);
  const std::vector<std::pair<std::string, std::string>> subs{
      {"build", "Build a presentation and print it as JSON"},
      {"dual", "Quadratic dual of the quadratic part"},
      {"gbasis", "Complete the rewriting system up to --max-degree"},
      {"hilbert", "Dual dimensions, reciprocal series and recursion checks"},
      {"homology", "Differential on B_n^(2) and its homology"},
      {"verify", "Evaluate every relation on random matrices"},
      {"pipeline", "build, dual, complete, series, then optional homology and oracle"},
      {"goldens", "Re-run golden fixtures and diff their pinned values"}};
  for (const auto& [name, help] : subs) app.add_subcommand(name, help)->fallthrough();

  const std::vector<std::string> algebras{"R", "R0", "B", "Q", "Q0", "C", "Rcolim", "Qcolim", "F", "G"};
  app.add_option("--algebra", c.algebra, "Algebra family")->check(CLI::IsMember(algebras));
  app.add_option("--n", c.n, "Number of columns");
  app.add_option("--k", c.k, "Rank k");
  app.add_option("--k-max", c.k_max, "Largest rank for colimits (default n)");
  app.add_option("--order", c.order, "Generator order")->check(CLI::IsMember({"default", "B", "colimit", "G"}));
  app.add_option("--word-rule", c.word_rule, "Word comparison")->check(CLI::IsMember({"deglex", "degrevlex"}));
  app.add_option("--size-direction", c.size_direction, "Superscript size direction for colimit orders")
      ->check(CLI::IsMember({"ascending", "descending"}));
  app.add_option("--max-degree", c.max_degree, "Degree bound for completion and series");
  app.add_option("--ring", c.ring, "Scalar ring for the oracle")->check(CLI::IsMember({"rational", "quaternion"}));
  app.add_option("--trials", c.trials, "Random matrices per verification");
  app.add_option("--seed", c.seed, "Random seed");
  app.add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--output", c.output, "Write the report to this file");
  app.add_option("--min-size", c.min_size, "Smallest superscript size for F and G");
  app.add_option("--fixtures", c.fixtures, "Golden fixture directory (default $QPL_FIXTURES)");
  app.add_flag("--timings", c.timings, "Include per-stage timings");
  app.add_flag("--plucker", c.plucker, "Add the inverse-sum relations to Q");
  app.add_flag("--skew", c.skew, "Add skew-symmetry relations to Q");
  app.add_flag("--homology", c.homology, "pipeline: also compute homology");
  app.add_flag("--verify", c.verify, "pipeline: also run the oracle");
  app.add_flag("--direct", c.direct, "Also complete the algebra itself and compare dimensions");
  app.add_flag("--consistency", c.consistency, "pipeline: check nonhomogeneous consistency");
  app.add_flag("--matrices", c.matrices, "homology: include generator images");
  app.add_flag("--dual", c.on_dual, "gbasis: complete the quadratic dual instead");
  app.add_flag("--exclude-l-equals-j", c.exclude_l_equals_j, "homology: drop the l = j term");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  for (auto* sub : app.get_subcommands()) c.command = sub->get_name();
  try {
    return execute(c, out, err);
  } catch (const InvalidParams& e) {
    err << "error: invalid parameters: " << e.what() << "\n";
    return 2;
  } catch (const OutOfRange& e) {
    err << "error: invalid parameters: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace qpl::cli

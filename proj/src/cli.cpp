#include "singulens/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <sstream>

#include "singulens/corpus.hpp"
#include "singulens/errors.hpp"
#include "singulens/parse.hpp"
#include "singulens/report.hpp"

namespace singulens {

namespace {

// Raised for bad flag values; mapped to the usage exit code.
struct UsageError : Error {
  using Error::Error;
};

struct Config {
  std::string vars = "x,y,z";
  std::string order = "grevlex";
  unsigned max_level = 3;
  unsigned degree_cap = kDefaultDegreeCap;
  bool json = false;
  std::uint64_t seed = 0;

  std::string input;
  std::string ideal;
  unsigned k = 1;
  bool local = false;
  std::string weights;
  std::string poly;
};

RingContext make_ring(const Config& c) {
  std::vector<std::string> names;
  std::stringstream ss(c.vars);
  std::string name;
  while (std::getline(ss, name, ',')) names.push_back(name);
  try {
    return RingContext(std::move(names));
  } catch (const Error& e) {
    throw UsageError(std::string("--vars: ") + e.what());
  }
}

MonomialOrder make_order(const Config& c) {
  try {
    return MonomialOrder::parse(c.order);
  } catch (const Error& e) {
    throw UsageError(std::string("--order: ") + e.what());
  }
}

unsigned effective_cap(const Config& c) {
  unsigned cap = c.degree_cap;
  if (const char* env = std::getenv("SINGULENS_DEGREE_CAP"); env && *env) {
    try {
      std::size_t used = 0;
      const unsigned long v = std::stoul(env, &used);
      if (used != std::string_view(env).size()) throw std::invalid_argument(env);
      cap = static_cast<unsigned>(v);
    } catch (const std::exception&) {
      throw UsageError(std::string("SINGULENS_DEGREE_CAP is not a number: ") + env);
    }
  }
  if (cap < 10) throw UsageError("the degree cap must be at least 10");
  return cap;
}

AnalyzerConfig analyzer_config(const Config& c) {
  if (c.max_level < 1) throw UsageError("--max-level must be at least 1");
  return AnalyzerConfig{c.max_level, effective_cap(c)};
}

Json ring_json(const RingContext& ring, MonomialOrder order) {
  return {{"vars", ring.names()}, {"order", std::string(order.name())}};
}

std::vector<std::string> printed(const std::vector<Polynomial>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(print(p));
  return out;
}

Ideal parse_ideal(const Config& c, const RingContext& ring) {
  if (c.ideal.empty()) return Ideal::maximal(ring);
  return Ideal(ring, parse_polynomial_list(c.ideal, ring));
}

int analyze_corpus(const Config& c, std::ostream& out) {
  const auto entries = load_corpus(c.input);
  const RingContext ring = make_ring(c);
  const MonomialOrder order = make_order(c);
  const AnalyzerConfig cfg = analyzer_config(c);
  bool all = true;
  Json docs = Json::array();
  for (const auto& entry : entries) {
    const auto report = analyze(parse_polynomial(entry.polynomial, ring), cfg);
    const auto checks = check_entry(entry, report);
    bool ok = report.all_certified();
    for (const auto& ch : checks) ok = ok && ch.ok;
    all = all && ok;
    if (c.json) {
      Json doc = report_to_json(report, order);
      Json js = Json::array();
      for (const auto& ch : checks) {
        js.push_back({{"key", ch.key}, {"expected", ch.expected}, {"actual", ch.actual}, {"ok", ch.ok}});
      }
      doc["corpus"] = {{"name", entry.name()}, {"line", entry.line}, {"checks", js}, {"ok", ok}};
      docs.push_back(std::move(doc));
      continue;
    }
    out << (ok ? "PASS " : "FAIL ") << entry.name() << ": " << print(report.input);
    for (const auto& ch : checks) {
      if (!ch.ok) out << " [" << ch.key << " expected " << ch.expected << ", got " << ch.actual << "]";
    }
    out << "\n";
  }
  if (c.json) out << docs.dump(2) << "\n";
  return all ? kExitOk : kExitCertificateFailure;
}

int cmd_analyze(const Config& c, std::ostream& out) {
  if (std::filesystem::is_regular_file(c.input)) return analyze_corpus(c, out);
  const RingContext ring = make_ring(c);
  const MonomialOrder order = make_order(c);
  const auto cfg = analyzer_config(c);
  const auto report = analyze(parse_polynomial(c.input, ring), cfg);
  if (c.json) {
    out << report_to_json(report, order).dump(2) << "\n";
  } else {
    out << report_to_text(report, order);
  }
  return report.all_certified() ? kExitOk : kExitCertificateFailure;
}

int cmd_counterexample(const Config& c, std::ostream& out) {
  const MonomialOrder order = make_order(c);
  const auto cfg = analyzer_config(c);
  const Polynomial f =
      c.poly.empty() ? default_counterexample() : parse_polynomial(c.poly, RingContext::xyz());
  const auto suite = counterexample_suite(f);
  AnalysisReport report = analyze(f, cfg);
  report.certificates.insert(report.certificates.end(), suite.certificates.begin(), suite.certificates.end());
  if (c.json) {
    Json doc = report_to_json(report, order);
    doc["conclusion"] = {{"strict_length", suite.strict_length},
                         {"greater_than", suite.genus + 2},
                         {"trusted", std::string(anchors::kHodgeStrictness)}};
    out << doc.dump(2) << "\n";
  } else {
    out << report_to_text(report, order);
    if (suite.strict_length) {
      out << "conclusion: length > " << suite.genus + 2 << " (" << anchors::kHodgeStrictness << ")\n";
    } else {
      out << "conclusion: not established, a certificate failed\n";
    }
  }
  return suite.strict_length ? kExitOk : kExitCertificateFailure;
}

int cmd_invariants(const Config& c, std::ostream& out) {
  const RingContext ring = make_ring(c);
  const unsigned cap = effective_cap(c);
  const Polynomial f = parse_polynomial(c.input, ring);
  const auto mu = milnor_number(f, cap);
  const auto tau = tjurina_number(f, cap);
  std::optional<QHVerdict> qh;
  if (mu) qh = is_quasi_homogeneous(f, cap);
  if (c.json) {
    Json doc;
    doc["input"] = print(f);
    doc["ring"] = ring_json(ring, make_order(c));
    doc["invariants"] = {
        {"mu", mu ? Json(*mu) : Json(nullptr)},
        {"tau", tau ? Json(*tau) : Json(nullptr)},
        {"qh", qh ? Json(qh->quasi_homogeneous) : Json(nullptr)},
        {"weights", qh && qh->witness ? Json(qh->witness->to_string()) : Json(nullptr)},
        {"obstruction", qh && qh->obstruction ? Json(print(*qh->obstruction)) : Json(nullptr)}};
    out << doc.dump(2) << "\n";
    return kExitOk;
  }
  out << "milnor: " << (mu ? std::to_string(*mu) : "infinite") << "\n";
  out << "tjurina: " << (tau ? std::to_string(*tau) : "infinite") << "\n";
  if (qh) {
    out << "quasi-homogeneous: " << (qh->quasi_homogeneous ? "yes" : "no") << "\n";
    if (qh->witness) out << "weights: " << qh->witness->to_string() << "\n";
    if (qh->obstruction) out << "obstruction: " << print(*qh->obstruction) << "\n";
  } else {
    out << "quasi-homogeneous: undefined (non-isolated)\n";
  }
  return kExitOk;
}

int cmd_genus(const Config& c, std::ostream& out) {
  const RingContext ring = make_ring(c);
  const Polynomial f = parse_polynomial(c.input, ring);
  const auto cls = classify(f);
  const auto g = reduced_genus(f, cls);
  if (c.json) {
    Json doc;
    doc["input"] = print(f);
    doc["ring"] = ring_json(ring, make_order(c));
    doc["class"] = cls.to_string();
    doc["genus"] = {{"g", g.genus},
                    {"i0", canonical_generators(g.i0)},
                    {"adj", canonical_generators(g.adjoint)},
                    {"log_canonical", g.log_canonical},
                    {"method", g.method},
                    {"extrapolated", g.extrapolated}};
    out << doc.dump(2) << "\n";
    return kExitOk;
  }
  auto join = [](const std::vector<std::string>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i];
    return "(" + s + ")";
  };
  out << "class: " << cls.to_string() << "\n";
  out << "genus: " << g.genus << " (" << g.method << (g.extrapolated ? ", extrapolated" : "") << ")\n";
  out << "I0: " << join(canonical_generators(g.i0)) << "\n";
  out << "adj: " << join(canonical_generators(g.adjoint)) << "\n";
  out << "log canonical: " << (g.log_canonical ? "yes" : "no") << "\n";
  return kExitOk;
}

int cmd_gb(const Config& c, std::ostream& out) {
  const RingContext ring = make_ring(c);
  const MonomialOrder order = make_order(c);
  const Ideal ideal(ring, parse_polynomial_list(c.input, ring));
  const auto basis = printed(ideal.groebner_basis(order));
  if (c.json) {
    Json doc;
    doc["ring"] = ring_json(ring, order);
    doc["basis"] = basis;
    out << doc.dump(2) << "\n";
    return kExitOk;
  }
  for (const auto& b : basis) out << b << "\n";
  return kExitOk;
}

int cmd_membership(const Config& c, std::ostream& out) {
  if (c.ideal.empty()) throw UsageError("membership needs --ideal");
  const RingContext ring = make_ring(c);
  const Polynomial p = parse_polynomial(c.input, ring);
  const Ideal ideal = parse_ideal(c, ring);
  const bool member = c.local ? local_member(p, ideal) : ideal.member(p);
  if (c.json) {
    out << Json{{"input", print(p)}, {"local", c.local}, {"member", member}}.dump(2) << "\n";
  } else {
    out << (member ? "true" : "false") << "\n";
  }
  return kExitOk;
}

int cmd_jk(const Config& c, std::ostream& out) {
  const RingContext ring = make_ring(c);
  const MonomialOrder order = make_order(c);
  const Polynomial f = parse_polynomial(c.input, ring);
  const Ideal jk = jk_ideal(f, parse_ideal(c, ring), c.k);
  const auto gens = printed(jk.generators());
  if (c.json) {
    Json doc;
    doc["input"] = print(f);
    doc["k"] = c.k;
    doc["generators"] = gens;
    doc["basis"] = printed(jk.groebner_basis(order));
    out << doc.dump(2) << "\n";
    return kExitOk;
  }
  out << gens.size() << " generators\n";
  for (const auto& g : gens) out << g << "\n";
  return kExitOk;
}

std::string step_text(const DescentStep& s) {
  std::string out = s.output.to_string() + " =";
  for (std::size_t i = 0; i < s.operators.size(); ++i) {
    if (s.operators[i].is_zero()) continue;
    out += (i ? " + " : " ") + s.operators[i].to_string() + "[" + s.inputs[i].to_string() + "]";
  }
  return out;
}

int cmd_descent(const Config& c, std::ostream& out) {
  const RingContext ring = make_ring(c);
  const Polynomial f = parse_polynomial(c.input, ring);
  std::optional<WeightSystem> w;
  if (!c.weights.empty()) {
    std::vector<Rational> values;
    std::stringstream ss(c.weights);
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        values.emplace_back(item);
        values.back().canonicalize();
      } catch (const std::exception&) {
        throw UsageError("--weights: not a rational number: " + item);
      }
    }
    if (values.size() != ring.arity()) throw UsageError("--weights needs one weight per variable");
    w = WeightSystem(std::move(values));
  } else {
    w = find_weights(f);
    if (!w) throw HypothesisError("f is not weighted homogeneous in these coordinates");
  }
  const auto chain = generation_descent(f, *w, c.k);
  const bool ok = chain.replay();
  if (c.json) {
    Json doc;
    doc["input"] = print(f);
    doc["level"] = c.k;
    doc["weights"] = w->to_string();
    doc["steps"] = descent_to_json(chain);
    doc["depth"] = chain.depth();
    doc["verified"] = ok;
    out << doc.dump(2) << "\n";
  } else {
    out << "weights: " << w->to_string() << "\n";
    for (const auto& s : chain.steps) out << step_text(s) << "\n";
    out << "steps: " << chain.steps.size() << ", depth " << chain.depth() << ", base cases "
        << chain.base_cases.size() << "\n";
    out << "verified: " << (ok ? "yes" : "no") << "\n";
  }
  return ok ? kExitOk : kExitCertificateFailure;
}

void report_parse_error(const ParseError& e, const std::string& text, std::ostream& err) {
  err << "error: " << e.what() << "\n";
  if (e.position() <= text.size()) {
    err << "  " << text << "\n  " << std::string(e.position(), ' ') << "^\n";
  }
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Config c;
  CLI::App app{"Exact singularity invariants and length certificates", "singulens"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--vars", c.vars, "comma-separated variable names")->capture_default_str();
  app.add_option("--order", c.order, "grevlex, grlex or lex")->capture_default_str();
  app.add_option("--max-level", c.max_level, "level cap K for equality certificates")->capture_default_str();
  app.add_option("--degree-cap", c.degree_cap, "degree cap for local colengths (>= 10)")->capture_default_str();
  app.add_flag("--json", c.json, "emit JSON");
  app.add_option("--seed", c.seed, "seed recorded for reproducibility");

  auto needs_input = [&](CLI::App* sub, const char* what) {
    sub->add_option("input", c.input, what)->required();
  };
  auto* analyze_cmd = app.add_subcommand("analyze", "full analysis of a polynomial or a corpus file");
  needs_input(analyze_cmd, "polynomial or corpus file");
  auto* counter_cmd = app.add_subcommand("counterexample", "run the counterexample certificate suite");
  counter_cmd->add_option("--poly", c.poly)->group("");
  auto* inv_cmd = app.add_subcommand("invariants", "Milnor and Tjurina numbers, quasi-homogeneity");
  needs_input(inv_cmd, "polynomial");
  auto* genus_cmd = app.add_subcommand("genus", "reduced genus with multiplier and adjoint ideals");
  needs_input(genus_cmd, "polynomial");
  auto* gb_cmd = app.add_subcommand("gb", "reduced Groebner basis");
  needs_input(gb_cmd, "comma-separated generators");
  auto* mem_cmd = app.add_subcommand("membership", "ideal membership");
  needs_input(mem_cmd, "polynomial");
  mem_cmd->add_option("--ideal", c.ideal, "comma-separated generators");
  mem_cmd->add_flag("--local", c.local, "membership in the local ring at the origin");
  auto* jk_cmd = app.add_subcommand("jk", "generators of J_k");
  needs_input(jk_cmd, "polynomial f");
  jk_cmd->add_option("--ideal", c.ideal, "generators of I (default: the maximal ideal)");
  jk_cmd->add_option("--k", c.k, "level")->capture_default_str();
  auto* descent_cmd = app.add_subcommand("descent", "weighted-homogeneous descent chain");
  needs_input(descent_cmd, "weighted homogeneous polynomial");
  descent_cmd->add_option("--k", c.k, "level")->capture_default_str();
  descent_cmd->add_option("--weights", c.weights, "comma-separated weights (default: solved)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const std::string& text = counter_cmd->parsed() ? c.poly : c.input;
  try {
    if (analyze_cmd->parsed()) return cmd_analyze(c, out);
    if (counter_cmd->parsed()) return cmd_counterexample(c, out);
    if (inv_cmd->parsed()) return cmd_invariants(c, out);
    if (genus_cmd->parsed()) return cmd_genus(c, out);
    if (gb_cmd->parsed()) return cmd_gb(c, out);
    if (mem_cmd->parsed()) return cmd_membership(c, out);
    if (jk_cmd->parsed()) return cmd_jk(c, out);
    if (descent_cmd->parsed()) return cmd_descent(c, out);
  } catch (const ParseError& e) {
    report_parse_error(e, text, err);
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitCertificateFailure;
  }
  return kExitUsage;
}

}  // namespace singulens

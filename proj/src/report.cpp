#include "singulens/report.hpp"

#include <set>
#include <sstream>

#include "singulens/parse.hpp"

namespace singulens {

std::vector<std::string> canonical_generators(const Ideal& ideal) {
  std::vector<std::string> out;
  for (const auto& g : ideal.groebner_basis()) out.push_back(print(g));
  return out;
}

namespace {

std::string exponent_string(const ExponentVector& u) {
  std::string out = "[";
  for (std::size_t i = 0; i < u.arity(); ++i) {
    if (i) out += ",";
    out += std::to_string(u[i]);
  }
  return out + "]";
}

template <typename T>
Json optional_json(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

std::string ideal_text(const Ideal& ideal) {
  std::string out = "(";
  const auto gens = canonical_generators(ideal);
  for (std::size_t i = 0; i < gens.size(); ++i) out += (i ? ", " : "") + gens[i];
  return out + ")";
}

std::string equality_text(const EqualityVerdict& eq) {
  std::string out(to_string(eq.kind));
  if (eq.kind != EqualityKind::proven_by_descent) out += "(" + std::to_string(eq.level) + ")";
  if (eq.refuted_at_level1) out += " RefutedAtLevel1";
  return out;
}

}  // namespace

Json descent_to_json(const DescentChain& chain) {
  Json steps = Json::array();
  for (const auto& s : chain.steps) {
    steps.push_back({{"u", Json::parse(exponent_string(s.u))},
                     {"scale", to_string(s.scale)},
                     {"operator", s.euler.to_string()},
                     {"verified", s.verified && s.replay()}});
  }
  return steps;
}

std::vector<std::string> citations_of(const std::vector<Certificate>& certificates) {
  std::set<std::string> seen;
  for (const auto& c : certificates) seen.insert(c.citation);
  return {seen.begin(), seen.end()};
}

Json report_to_json(const AnalysisReport& r, MonomialOrder order) {
  Json doc;
  doc["input"] = print(r.input);
  doc["ring"] = {{"vars", r.input.ring().names()}, {"order", std::string(order.name())}};
  doc["class"] = r.cls ? Json(r.cls->to_string()) : Json(nullptr);
  doc["isolated"] = r.screen.isolated;
  doc["jacobian_isolated"] = r.screen.jacobian_isolated;

  Json inv;
  inv["mu"] = optional_json(r.milnor);
  inv["tau"] = optional_json(r.tjurina);
  inv["qh"] = r.qh ? Json(r.qh->quasi_homogeneous) : Json(nullptr);
  inv["weights"] = r.qh && r.qh->witness ? Json(r.qh->witness->to_string()) : Json(nullptr);
  doc["invariants"] = inv;

  if (r.genus) {
    doc["genus"] = {{"g", r.genus->genus},
                    {"i0", canonical_generators(r.genus->i0)},
                    {"adj", canonical_generators(r.genus->adjoint)},
                    {"log_canonical", r.genus->log_canonical},
                    {"method", r.genus->method}};
  } else {
    doc["genus"] = nullptr;
  }

  Json length;
  length["lower_bound"] = optional_json(r.length_lower_bound);
  if (r.equality) {
    length["equality"] = std::string(to_string(r.equality->kind));
    length["level"] = r.equality->level;
    length["markers"] = r.equality->refuted_at_level1 ? Json::array({"RefutedAtLevel1"}) : Json::array();
    length["levels_tested"] = r.equality->level_results;
    length["descent"] = r.equality->descent ? descent_to_json(*r.equality->descent) : Json(nullptr);
  } else {
    length["equality"] = nullptr;
    length["level"] = nullptr;
    length["markers"] = Json::array();
  }
  doc["length"] = length;

  Json certs = Json::array();
  for (const auto& c : r.certificates) {
    certs.push_back({{"name", c.name}, {"verdict", c.verdict}, {"citation", c.citation}, {"detail", c.detail}});
  }
  doc["certificates"] = certs;
  doc["citations"] = citations_of(r.certificates);
  doc["notes"] = r.notes;
  return doc;
}

std::vector<std::string> validate_report(const Json& doc) {
  std::vector<std::string> errors;
  auto need = [&](const Json& obj, const char* key, auto&& check, const std::string& what) {
    if (!obj.is_object() || !obj.contains(key)) {
      errors.push_back(std::string("missing '") + key + "'");
      return;
    }
    if (!check(obj.at(key))) errors.push_back(std::string("'") + key + "' must be " + what);
  };
  auto is_string = [](const Json& j) { return j.is_string(); };
  auto nat_or_null = [](const Json& j) { return j.is_null() || j.is_number_unsigned(); };
  auto string_or_null = [](const Json& j) { return j.is_null() || j.is_string(); };
  auto bool_or_null = [](const Json& j) { return j.is_null() || j.is_boolean(); };
  auto strings = [](const Json& j) {
    if (!j.is_array()) return false;
    for (const auto& e : j) {
      if (!e.is_string()) return false;
    }
    return true;
  };

  if (!doc.is_object()) return {"document must be an object"};
  need(doc, "input", is_string, "a string");
  need(doc, "ring", [&](const Json& j) {
    return j.is_object() && j.contains("vars") && strings(j["vars"]) && !j["vars"].empty() &&
           j.contains("order") && j["order"].is_string();
  }, "an object with vars and order");
  need(doc, "class", string_or_null, "a string or null");
  need(doc, "invariants", [](const Json& j) { return j.is_object(); }, "an object");
  if (doc.contains("invariants") && doc["invariants"].is_object()) {
    const auto& inv = doc["invariants"];
    need(inv, "mu", nat_or_null, "a natural number or null");
    need(inv, "tau", nat_or_null, "a natural number or null");
    need(inv, "qh", bool_or_null, "a boolean or null");
  }
  need(doc, "genus", [&](const Json& j) {
    if (j.is_null()) return true;
    return j.is_object() && j.contains("g") && j["g"].is_number_unsigned() && j.contains("i0") &&
           strings(j["i0"]) && j.contains("adj") && strings(j["adj"]) &&
           j.contains("log_canonical") && j["log_canonical"].is_boolean();
  }, "null or {g, i0, adj, log_canonical}");
  need(doc, "length", [](const Json& j) { return j.is_object(); }, "an object");
  if (doc.contains("length") && doc["length"].is_object()) {
    const auto& len = doc["length"];
    need(len, "lower_bound", nat_or_null, "a natural number or null");
    need(len, "equality", [](const Json& j) {
      return j.is_null() || j == "ProvenAtLevel" || j == "ProvenByDescent" || j == "UnknownUpTo";
    }, "an equality verdict or null");
    need(len, "level", nat_or_null, "a natural number or null");
    if (len.contains("descent") && !len["descent"].is_null()) {
      for (const auto& step : len["descent"]) {
        if (!step.is_object() || !step.contains("u") || !step.contains("scale") ||
            !step.contains("operator") || !step.contains("verified")) {
          errors.push_back("descent steps must be {u, scale, operator, verified}");
          break;
        }
      }
    }
    if (doc.contains("genus") && doc["genus"].is_object() && len.contains("lower_bound") &&
        len["lower_bound"].is_number_unsigned() && doc["genus"].contains("g") &&
        doc["genus"]["g"].is_number_unsigned() &&
        len["lower_bound"].get<std::size_t>() != doc["genus"]["g"].get<std::size_t>() + 2) {
      errors.push_back("lower_bound must equal g + 2");
    }
  }
  need(doc, "certificates", [&](const Json& j) {
    if (!j.is_array()) return false;
    for (const auto& c : j) {
      if (!c.is_object() || !c.contains("name") || !c["name"].is_string() || !c.contains("verdict") ||
          !c["verdict"].is_boolean() || !c.contains("citation") || !c["citation"].is_string()) {
        return false;
      }
    }
    return true;
  }, "a list of {name, verdict, citation}");
  return errors;
}

std::string report_to_text(const AnalysisReport& r, MonomialOrder order) {
  std::ostringstream out;
  const auto& names = r.input.ring().names();
  out << "input: " << print(r.input) << "\n";
  out << "ring: Q[";
  for (std::size_t i = 0; i < names.size(); ++i) out << (i ? "," : "") << names[i];
  out << "] " << order.name() << "\n";
  out << "isolated: " << (r.screen.isolated ? "yes" : "no")
      << " (Jacobian isolated at origin: " << (r.screen.jacobian_isolated ? "yes" : "no") << ")\n";
  if (r.cls) out << "class: " << r.cls->to_string() << "\n";
  if (r.milnor || r.tjurina || r.qh) {
    out << "milnor: " << (r.milnor ? std::to_string(*r.milnor) : "infinite") << "\n";
    out << "tjurina: " << (r.tjurina ? std::to_string(*r.tjurina) : "infinite") << "\n";
  }
  if (r.qh) {
    out << "quasi-homogeneous: " << (r.qh->quasi_homogeneous ? "yes" : "no");
    if (r.qh->witness) out << " weights " << r.qh->witness->to_string();
    if (r.qh->obstruction) out << " obstruction " << print(*r.qh->obstruction);
    out << "\n";
  }
  if (r.genus) {
    out << "genus: " << r.genus->genus << " (" << r.genus->method << ")\n";
    out << "  I0: " << ideal_text(r.genus->i0) << "\n";
    out << "  adj: " << ideal_text(r.genus->adjoint) << "\n";
    out << "  log canonical: " << (r.genus->log_canonical ? "yes" : "no") << "\n";
  }
  if (r.length_lower_bound) out << "length lower bound: " << *r.length_lower_bound << "\n";
  if (r.equality) out << "equality: " << equality_text(*r.equality) << "\n";
  if (!r.certificates.empty()) {
    out << "certificates:\n";
    for (const auto& c : r.certificates) {
      out << "  " << c.name << ": " << (c.verdict ? "true" : "false") << " [" << c.citation << "] "
          << c.detail << "\n";
    }
    out << "citations:";
    for (const auto& c : citations_of(r.certificates)) out << " " << c;
    out << "\n";
  }
  for (const auto& n : r.notes) out << "note: " << n << "\n";
  return out.str();
}

}  // namespace singulens

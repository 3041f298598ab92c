#include "mcat/serialize.hpp"

#include <sstream>

#include "mcat/error.hpp"

namespace mcat {

namespace {

std::string letters(const std::vector<Letter>& ls) {
  std::string s;
  for (Letter l : ls) s += to_char(l);
  return s;
}

std::string symbol_name(Cell c) {
  switch (c) {
    case Cell::empty: return "empty";
    case Cell::alpha: return "alpha";
    case Cell::beta: return "beta";
    case Cell::x: return "x";
  }
  return "?";
}

Json point_json(const RatePoint& p) { return to_json(p); }

}  // namespace

Json to_json(const Shape& s) {
  return Json{{"parts", s.parts},
              {"rowLabels", letters(s.row_labels)},
              {"colLabels", letters(s.col_labels)},
              {"rowPositions", s.row_positions},
              {"colPositions", s.col_positions}};
}

Json to_json(const WeightPoly& p) {
  Json out = Json::array();
  for (const auto& [e, c] : p.terms()) out.push_back({{"a", e.a}, {"b", e.b}, {"c", e.c}, {"coeff", c.get_str()}});
  return out;
}

WeightPoly poly_from_json(const Json& j) {
  if (!j.is_array()) fail(ErrorCode::invalid_argument, "polynomial JSON must be an array of terms");
  WeightPoly p;
  for (const auto& t : j) {
    try {
      const int a = t.at("a").get<int>(), b = t.at("b").get<int>(), c = t.value("c", 0);
      if (a < 0 || b < 0 || c < 0) fail(ErrorCode::invalid_argument, "negative exponent in polynomial JSON");
      p.add_term({a, b, c}, Integer(t.at("coeff").get<std::string>()));
    } catch (const nlohmann::json::exception& e) {
      fail(ErrorCode::invalid_argument, std::string("bad polynomial term: ") + e.what());
    } catch (const std::invalid_argument&) {
      fail(ErrorCode::invalid_argument, "bad coefficient in polynomial JSON");
    }
  }
  return p;
}

Json to_json(const Monomial& m) { return Json{{"a", m.a}, {"b", m.b}}; }

Json to_json(const RatePoint& p) { return Json{{"alpha", to_string(p.alpha)}, {"beta", to_string(p.beta)}}; }

Json to_json(const DEDecomposition& d) {
  Json subs = Json::array(), parts = Json::array();
  for (const auto& w : d.subwords) subs.push_back(w.str());
  for (const auto& s : d.partitions) parts.push_back(s.parts);
  return Json{{"subwords", subs}, {"partitions", parts}};
}

Json to_json(const CondensedTableau& t) {
  Json filling = Json::array();
  for (int i = 0; i < static_cast<int>(t.rows().size()); ++i) {
    for (int j = 0; j < static_cast<int>(t.rows()[i].size()); ++j) {
      if (t.at(i, j) != Cell::empty) filling.push_back({{"row", i}, {"col", j}, {"symbol", symbol_name(t.at(i, j))}});
    }
  }
  return Json{{"word", t.word().str()},
              {"shape", t.shape().parts},
              {"boundaryLabels", {{"rows", letters(t.shape().row_labels)}, {"cols", letters(t.shape().col_labels)}}},
              {"filling", filling},
              {"weight", to_json(t.weight())}};
}

Json to_json(const StaircaseTableau& t) {
  Json filling = Json::array();
  for (int p = 0; p < t.size(); ++p) {
    for (int c = 0; c < static_cast<int>(t.rows()[p].size()); ++c) {
      if (t.at(p, c) != Cell::empty) filling.push_back({{"row", p}, {"col", c}, {"symbol", symbol_name(t.at(p, c))}});
    }
  }
  return Json{{"word", t.type().str()}, {"size", t.size()}, {"filling", filling}, {"weight", to_json(t.weight())}};
}

Json to_json(const AltTableau& t) {
  Json rows = Json::array();
  for (const auto& row : t.rows()) {
    Json r = Json::array();
    for (AltSymbol s : row) r.push_back(to_string(s));
    rows.push_back(r);
  }
  const WeightPoly w = alt_weight(t, true);
  const Exponent e = w.leading_exponent();
  return Json{{"word", t.type().str()}, {"rows", rows}, {"weight", {{"a", e.a}, {"b", e.b}, {"q", e.c}}}};
}

Json to_json(const TheoremReport& r) {
  Json bad = Json::array();
  for (const auto& c : r.counterexamples) {
    bad.push_back({{"word", c.word.str()},
                   {"point", point_json(c.point)},
                   {"stationary", to_string(c.stationary)},
                   {"predicted", to_string(c.predicted)}});
  }
  return Json{{"check", "main-theorem"}, {"passed", r.passed()}, {"m", r.m},          {"sectors", r.sectors},
              {"points", r.points},      {"comparisons", r.comparisons}, {"counterexamples", bad}};
}

Json to_json(const AnsatzReport& r) {
  Json checks = Json::object();
  for (const auto& [c, n] : r.checks) checks[to_string(c)] = n;
  Json bad = Json::array();
  for (const auto& f : r.failures) {
    bad.push_back({{"word", f.word.str()},
                   {"case", to_string(f.which)},
                   {"position", f.position},
                   {"lhs", f.lhs.to_string()},
                   {"rhs", f.rhs.to_string()}});
  }
  return Json{{"check", "ansatz"}, {"passed", r.passed()}, {"mMax", r.m_max},
              {"words", r.words},  {"checks", checks},     {"failures", bad}};
}

Json to_json(const BalanceReport& r) {
  Json bad = Json::array();
  for (const auto& f : r.failures) {
    bad.push_back({{"tableau", f.tableau.key()},
                   {"point", point_json(f.point)},
                   {"outflow", to_string(f.outflow)},
                   {"inflow", to_string(f.inflow)},
                   {"expectedOutflow", to_string(f.expected_outflow)}});
  }
  return Json{{"check", "balance"}, {"passed", r.passed()}, {"m", r.m}, {"r", r.r},
              {"tableaux", r.tableaux}, {"points", r.points}, {"failures", bad}};
}

Json to_json(const ProjectionReport& r) {
  Json bad = Json::array();
  for (const auto& f : r.failures) bad.push_back({{"check", f.check}, {"detail", f.detail}});
  return Json{{"check", "projection"}, {"passed", r.passed()}, {"m", r.m},           {"r", r.r},
              {"tableaux", r.tableaux},  {"moves", r.moves},     {"points", r.points}, {"failures", bad}};
}

Json to_json(const DetCheckReport& r) {
  // Words with A's pass when the exact discrepancy factor was found.
  const bool passed = r.identity_holds() || (r.product.has_value() && r.factor_alpha.has_value());
  Json j{{"check", "det"},
         {"passed", passed},
         {"word", r.word.str()},
         {"identityHolds", r.identity_holds()},
         {"wordWeight", r.word_weight.to_string()}};
  if (r.determinant) j["determinant"] = r.determinant->to_string();
  if (r.interior_weight) j["interiorWeight"] = r.interior_weight->to_string();
  if (r.product) j["product"] = r.product->to_string();
  if (r.factor_alpha) j["factor"] = {{"alpha", *r.factor_alpha}, {"beta", *r.factor_beta}};
  if (r.product && !r.factor_alpha) j["factor"] = nullptr;
  if (r.effective_n) j["effectiveN"] = *r.effective_n;
  return j;
}

Json to_json(const ConjectureReport& r) {
  Json bad = Json::array();
  for (const auto& c : r.mismatches) {
    bad.push_back({{"word", c.word.str()},
                   {"point", point_json(c.point)},
                   {"stationary", to_string(c.stationary)},
                   {"predicted", to_string(c.predicted)}});
  }
  Json j{{"check", "q1-conjecture"}, {"passed", r.passed()}, {"m", r.m},        {"r", r.r},
         {"ruleset", r.ruleset},      {"points", r.points},   {"words", r.words}, {"mismatches", bad}};
  if (r.one_species_total) {
    j["oneSpeciesTotal"] = r.one_species_total->get_str();
    j["oneSpeciesExpected"] = r.one_species_expected->get_str();
  }
  return j;
}

Json to_json(const ConsistencyReport& r) {
  Json bad = Json::array();
  for (const auto& c : r.mismatches) {
    bad.push_back({{"word", c.word.str()}, {"q0Slice", c.q0_slice.to_string()}, {"multiCatalan", c.multi_catalan.to_string()}});
  }
  return Json{{"check", "q0-consistency"}, {"passed", r.passed()}, {"m", r.m},
              {"r", r.r},                  {"ruleset", r.ruleset}, {"words", r.words}, {"mismatches", bad}};
}

Json to_json(const std::vector<SweepEntry>& sweep) {
  Json entries = Json::array();
  bool any = false;
  for (const auto& e : sweep) {
    any = any || e.passed;
    entries.push_back({{"ruleset", Json::parse(e.rules.to_json())},
                       {"passed", e.passed},
                       {"firstFailure", e.first_failure}});
  }
  return Json{{"check", "q1-sweep"}, {"passed", any}, {"candidates", entries}};
}

std::string stationary_csv(const StationaryVector& v) {
  std::string out = "word,probability\n";
  for (const auto& [w, p] : v) out += w.str() + "," + to_string(p) + "\n";
  return out;
}

Json stationary_json(const SectorChain& chain, const StationaryVector& v) {
  Json probs = Json::object();
  for (const auto& [w, p] : v) probs[w.str()] = to_string(p);
  return Json{{"m", chain.m()},
              {"r", chain.r()},
              {"alpha", to_string(chain.params().alpha)},
              {"beta", to_string(chain.params().beta)},
              {"q", to_string(chain.params().q)},
              {"stationary", probs}};
}

std::string chain_graph(const TableauChain& chain, const std::string& format) {
  auto target_id = [&](std::size_t i, std::size_t k) -> std::string {
    const std::size_t t = chain.targets[i][k];
    return t < chain.states.size() ? std::to_string(t) : "?";
  };
  if (format == "json") {
    Json nodes = Json::array(), edges = Json::array();
    for (std::size_t i = 0; i < chain.states.size(); ++i) {
      nodes.push_back({{"id", i}, {"tableau", chain.states[i].key()}, {"weight", to_json(chain.states[i].weight())}});
      for (std::size_t k = 0; k < chain.moves[i].size(); ++k) {
        const auto& mv = chain.moves[i][k];
        edges.push_back({{"source", i},
                         {"target", chain.targets[i][k]},
                         {"rate", to_string(mv.rate)},
                         {"case", mv.case_label},
                         {"point", to_string(mv.point.kind)}});
      }
    }
    return Json{{"m", chain.m}, {"r", chain.r}, {"nodes", nodes}, {"edges", edges}}.dump(2) + "\n";
  }
  if (format == "csv") {
    std::string out = "source,target,rate,case\n";
    for (std::size_t i = 0; i < chain.states.size(); ++i) {
      for (std::size_t k = 0; k < chain.moves[i].size(); ++k) {
        out += std::to_string(i) + "," + target_id(i, k) + "," + to_string(chain.moves[i][k].rate) + "," +
               std::to_string(chain.moves[i][k].case_label) + "\n";
      }
    }
    return out;
  }
  if (format == "dot") {
    std::ostringstream out;
    out << "digraph tableaux {\n";
    for (std::size_t i = 0; i < chain.states.size(); ++i) {
      out << "  " << i << " [label=\"" << chain.states[i].key() << "\"];\n";
    }
    for (std::size_t i = 0; i < chain.states.size(); ++i) {
      for (std::size_t k = 0; k < chain.moves[i].size(); ++k) {
        out << "  " << i << " -> " << target_id(i, k) << " [label=\"" << to_string(chain.moves[i][k].rate)
            << " (" << chain.moves[i][k].case_label << ")\"];\n";
      }
    }
    out << "}\n";
    return out.str();
  }
  fail(ErrorCode::invalid_argument, "unknown graph format '" + format + "' (expected json, csv or dot)");
}

}  // namespace mcat

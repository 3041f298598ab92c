#include "mcat/qone.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <json.hpp>
#include <map>
#include <set>

#include "mcat/error.hpp"

namespace mcat {

namespace {

constexpr std::array<std::pair<AltSymbol, std::string_view>, 8> kSymbolNames{{
    {AltSymbol::alpha, "alpha"},
    {AltSymbol::alpha_hat, "alpha_hat"},
    {AltSymbol::beta, "beta"},
    {AltSymbol::beta_hat, "beta_hat"},
    {AltSymbol::q, "q"},
    {AltSymbol::q_hat, "q_hat"},
    {AltSymbol::u, "u"},
    {AltSymbol::u_hat, "u_hat"},
}};

constexpr std::array<std::pair<PatternScope, std::string_view>, 3> kScopeNames{{
    {PatternScope::submatrix, "submatrix"},
    {PatternScope::consecutive, "consecutive"},
    {PatternScope::none, "none"},
}};

bool is_beta_like(AltSymbol s) { return s == AltSymbol::beta || s == AltSymbol::beta_hat; }
bool is_alpha_like(AltSymbol s) { return s == AltSymbol::alpha || s == AltSymbol::alpha_hat; }

}  // namespace

std::string to_string(AltSymbol s) {
  for (const auto& [sym, name] : kSymbolNames) {
    if (sym == s) return std::string(name);
  }
  return "?";
}

AltSymbol parse_alt_symbol(std::string_view name) {
  for (const auto& [sym, n] : kSymbolNames) {
    if (n == name) return sym;
  }
  fail(ErrorCode::invalid_argument, "unknown symbol '" + std::string(name) + "'");
}

RuleSet RuleSet::standard() {
  RuleSet r;
  r.name = "standard";
  r.de = {AltSymbol::alpha, AltSymbol::beta, AltSymbol::q};
  r.da = {AltSymbol::beta_hat, AltSymbol::q};
  r.ae = {AltSymbol::alpha_hat, AltSymbol::q};
  r.patterns = PatternScope::submatrix;
  return r;
}

void RuleSet::check() const {
  auto check_set = [](const std::vector<AltSymbol>& set, const char* which) {
    if (set.empty()) fail(ErrorCode::invalid_argument, std::string("rule set for ") + which + " boxes is empty");
    for (AltSymbol s : set) {
      if (s == AltSymbol::q_hat || s == AltSymbol::u || s == AltSymbol::u_hat) {
        fail(ErrorCode::invalid_argument, "symbol " + to_string(s) + " is not allowed in the " + which + " set");
      }
    }
  };
  check_set(de, "DE");
  check_set(da, "DA");
  check_set(ae, "AE");
}

RuleSet RuleSet::from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::invalid_argument, std::string("rule set is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) fail(ErrorCode::invalid_argument, "rule set must be a JSON object");
  RuleSet r;
  r.name = j.value("name", std::string("custom"));
  auto read = [&](const char* key) {
    if (!j.contains(key) || !j[key].is_array()) {
      fail(ErrorCode::invalid_argument, std::string("rule set needs an array \"") + key + "\"");
    }
    std::vector<AltSymbol> out;
    for (const auto& s : j[key]) {
      if (!s.is_string()) fail(ErrorCode::invalid_argument, "rule set symbols must be strings");
      out.push_back(parse_alt_symbol(s.get<std::string>()));
    }
    return out;
  };
  r.de = read("de");
  r.da = read("da");
  r.ae = read("ae");
  if (j.contains("patterns")) {
    const auto scope = j["patterns"].get<std::string>();
    auto it = std::find_if(kScopeNames.begin(), kScopeNames.end(), [&](const auto& p) { return p.second == scope; });
    if (it == kScopeNames.end()) fail(ErrorCode::invalid_argument, "unknown pattern scope '" + scope + "'");
    r.patterns = it->first;
  }
  r.check();
  return r;
}

std::string RuleSet::to_json() const {
  nlohmann::ordered_json j;
  j["name"] = name;
  auto names = [](const std::vector<AltSymbol>& v) {
    std::vector<std::string> out;
    for (AltSymbol s : v) out.push_back(to_string(s));
    return out;
  };
  j["de"] = names(de);
  j["da"] = names(da);
  j["ae"] = names(ae);
  for (const auto& [scope, n] : kScopeNames) {
    if (scope == patterns) j["patterns"] = std::string(n);
  }
  return j.dump();
}

std::vector<RuleSet> candidate_rulesets() {
  std::vector<RuleSet> out;
  out.push_back(RuleSet::standard());

  RuleSet consecutive = RuleSet::standard();
  consecutive.name = "standard-consecutive";
  consecutive.patterns = PatternScope::consecutive;
  out.push_back(consecutive);

  RuleSet unconstrained = RuleSet::standard();
  unconstrained.name = "standard-no-patterns";
  unconstrained.patterns = PatternScope::none;
  out.push_back(unconstrained);

  RuleSet swapped = RuleSet::standard();
  swapped.name = "hats-swapped";
  swapped.da = {AltSymbol::alpha_hat, AltSymbol::q};
  swapped.ae = {AltSymbol::beta_hat, AltSymbol::q};
  out.push_back(swapped);

  RuleSet plain = RuleSet::standard();
  plain.name = "no-hats";
  plain.da = {AltSymbol::beta, AltSymbol::q};
  plain.ae = {AltSymbol::alpha, AltSymbol::q};
  out.push_back(plain);

  RuleSet no_q = RuleSet::standard();
  no_q.name = "no-q-on-A-lines";
  no_q.da = {AltSymbol::beta_hat};
  no_q.ae = {AltSymbol::alpha_hat};
  out.push_back(no_q);
  return out;
}

AltTableau::AltTableau(Word type, std::vector<std::vector<AltSymbol>> rows)
    : type_(std::move(type)), rows_(std::move(rows)) {
  const int m = type_.length();
  if (static_cast<int>(rows_.size()) != m) fail(ErrorCode::invalid_argument, "alternative tableau needs one row per letter");
  for (int p = 0; p < m; ++p) {
    if (static_cast<int>(rows_[p].size()) != m - p - 1) {
      fail(ErrorCode::invalid_argument, "alternative tableau row " + std::to_string(p) + " has the wrong length");
    }
  }
}

std::string AltTableau::key() const {
  static constexpr char kCodes[] = {'a', 'A', 'b', 'B', 'q', 'Q', 'u', 'U'};
  std::string k = type_.str() + ":";
  for (std::size_t p = 0; p < rows_.size(); ++p) {
    if (p > 0) k += '|';
    for (AltSymbol s : rows_[p]) k += kCodes[static_cast<int>(s)];
  }
  return k;
}

namespace {

// Number of A letters strictly between positions lo and hi.
int a_between(const Word& w, int lo, int hi) {
  int n = 0;
  for (int t = lo + 1; t < hi; ++t) n += w[t] == Letter::A ? 1 : 0;
  return n;
}

const std::vector<AltSymbol>* options_for(const RuleSet& rules, Letter row, Letter col) {
  switch (box_type(row, col)) {
    case BoxType::DE: return &rules.de;
    case BoxType::DA: return &rules.da;
    case BoxType::AE: return &rules.ae;
    case BoxType::AA: return nullptr;
  }
  return nullptr;
}

// Intersection box layout for the pattern check: cells addressed by letter
// pair (p, s); geometric columns run left to right as s decreases.
bool patterns_ok(const std::vector<std::pair<int, int>>& cand,
                 const std::function<AltSymbol(int, int)>& at, PatternScope scope) {
  if (scope == PatternScope::none) return true;
  std::set<std::pair<int, int>> in(cand.begin(), cand.end());
  auto forbidden = [&](int p1, int s1, int p2, int s2) {
    return in.count({p1, s2}) && in.count({p2, s1}) && in.count({p2, s2}) && at(p1, s1) == AltSymbol::q_hat &&
           at(p1, s2) == AltSymbol::u_hat && at(p2, s1) == AltSymbol::u_hat;
  };
  if (scope == PatternScope::submatrix) {
    for (const auto& [p1, s1] : cand) {
      for (const auto& [p2, s2] : cand) {
        if (p2 > p1 && s2 < s1 && forbidden(p1, s1, p2, s2)) return false;
      }
    }
    return true;
  }
  std::vector<int> rows, cols;
  for (const auto& [p, s] : cand) {
    rows.push_back(p);
    cols.push_back(s);
  }
  std::sort(rows.begin(), rows.end());
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
  std::sort(cols.begin(), cols.end(), std::greater<>());
  cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
  for (const auto& [p1, s1] : cand) {
    const auto i = std::lower_bound(rows.begin(), rows.end(), p1) - rows.begin();
    const auto j = std::find(cols.begin(), cols.end(), s1) - cols.begin();
    if (i + 1 < static_cast<std::ptrdiff_t>(rows.size()) && j + 1 < static_cast<std::ptrdiff_t>(cols.size()) &&
        forbidden(p1, s1, rows[i + 1], cols[j + 1])) {
      return false;
    }
  }
  return true;
}

struct AltSearch {
  const Word& word;
  const RuleSet& rules;
  int m;
  std::vector<std::pair<int, int>> order;
  // grid[p][s] for p < s; `pending` marks a hat-line box awaiting resolution.
  static constexpr int kUnset = -1;
  static constexpr int kPending = 100;
  std::vector<std::vector<int>> grid;
  std::vector<AltTableau> out;

  AltSymbol sym(int p, int s) const { return static_cast<AltSymbol>(grid[p][s]); }
  bool symbol_at(int p, int s) const { return grid[p][s] != kUnset && grid[p][s] != kPending; }

  int seen_right(int p, int s) const {
    for (int s2 = s - 1; s2 > p; --s2) {
      if (symbol_at(p, s2) && is_beta_like(sym(p, s2))) return s2;
    }
    return -1;
  }
  int seen_below(int p, int s) const {
    for (int p2 = p + 1; p2 < s; ++p2) {
      if (symbol_at(p2, s) && is_alpha_like(sym(p2, s))) return p2;
    }
    return -1;
  }

  void run(std::size_t k) {
    if (k == order.size()) {
      finish();
      return;
    }
    const auto [p, s] = order[k];
    const int right = seen_right(p, s);
    const int below = seen_below(p, s);
    int& cell = grid[p][s];
    const bool blocked = word[p] == Letter::E || word[s] == Letter::D ||
                         (right >= 0 && sym(p, right) == AltSymbol::beta) ||
                         (below >= 0 && sym(below, s) == AltSymbol::alpha);
    if (blocked) {
      cell = static_cast<int>(AltSymbol::u);
      run(k + 1);
    } else if (right >= 0 || below >= 0) {
      cell = kPending;
      run(k + 1);
    } else if (const auto* opts = options_for(rules, word[p], word[s])) {
      for (AltSymbol o : *opts) {
        cell = static_cast<int>(o);
        run(k + 1);
      }
    } else {
      cell = static_cast<int>(AltSymbol::u);
      run(k + 1);
    }
    cell = kUnset;
  }

  void finish() {
    std::vector<std::pair<int, int>> cand;
    std::vector<std::pair<int, int>> pending;
    for (const auto& [p, s] : order) {
      if (grid[p][s] == kPending) pending.emplace_back(p, s);
    }
    for (const auto& [p, s] : pending) {
      const int right = seen_right(p, s);
      const int below = seen_below(p, s);
      grid[p][s] = static_cast<int>(AltSymbol::u);
      if (right < 0 || below < 0) continue;
      if (sym(p, right) != AltSymbol::beta_hat || sym(below, s) != AltSymbol::alpha_hat) continue;
      if (a_between(word, p, below) == a_between(word, right, s)) cand.emplace_back(p, s);
    }
    const std::size_t n = cand.size();
    auto at = [&](int p, int s) { return sym(p, s); };
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
      for (std::size_t b = 0; b < n; ++b) {
        grid[cand[b].first][cand[b].second] =
            static_cast<int>((mask >> b) & 1 ? AltSymbol::q_hat : AltSymbol::u_hat);
      }
      if (!patterns_ok(cand, at, rules.patterns)) continue;
      std::vector<std::vector<AltSymbol>> rows(m);
      for (int p = 0; p < m; ++p) {
        for (int s = m - 1; s > p; --s) rows[p].push_back(sym(p, s));
      }
      out.emplace_back(word, std::move(rows));
    }
    for (const auto& [p, s] : pending) grid[p][s] = kPending;
  }
};

}  // namespace

std::vector<AltTableau> enumerate_alt(const Word& word, const RuleSet& rules) {
  rules.check();
  const int m = word.length();
  AltSearch search{word, rules, m, {}, std::vector<std::vector<int>>(m, std::vector<int>(m, AltSearch::kUnset)), {}};
  // Closest to the diagonal first, so each box's sight lines are decided.
  for (int d = 1; d < m; ++d) {
    for (int p = 0; p + d < m; ++p) search.order.emplace_back(p, p + d);
  }
  search.run(0);
  std::sort(search.out.begin(), search.out.end(),
            [](const AltTableau& a, const AltTableau& b) { return a.key() < b.key(); });
  return std::move(search.out);
}

std::vector<Violation> validate_alt(const AltTableau& t, const RuleSet& rules) {
  std::vector<Violation> out;
  const Word& w = t.type();
  const int m = t.size();
  auto report = [&](int p, int s, int rule, std::string msg) { out.push_back({p, m - 1 - s, rule, std::move(msg)}); };
  auto allowed = [](const std::vector<AltSymbol>& set, AltSymbol s) {
    return std::find(set.begin(), set.end(), s) != set.end();
  };
  std::vector<std::pair<int, int>> cand;
  for (int p = 0; p < m; ++p) {
    for (int s = p + 1; s < m; ++s) {
      const AltSymbol c = t.at(p, s);
      AltSymbol right = AltSymbol::u, below = AltSymbol::u;
      int right_pos = -1, below_pos = -1;
      for (int s2 = s - 1; s2 > p; --s2) {
        if (is_beta_like(t.at(p, s2))) {
          right = t.at(p, s2);
          right_pos = s2;
          break;
        }
      }
      for (int p2 = p + 1; p2 < s; ++p2) {
        if (is_alpha_like(t.at(p2, s))) {
          below = t.at(p2, s);
          below_pos = p2;
          break;
        }
      }
      if (w[p] == Letter::E || w[s] == Letter::D) {
        if (c != AltSymbol::u) report(p, s, 9, "box in an E-row or D-column must hold u");
      } else if (right == AltSymbol::beta || below == AltSymbol::alpha) {
        if (c != AltSymbol::u) report(p, s, 5, "box left of a beta or above an alpha must hold u");
      } else if (right == AltSymbol::beta_hat && below == AltSymbol::alpha_hat) {
        if (a_between(w, p, below_pos) == a_between(w, right_pos, s)) {
          if (c != AltSymbol::q_hat && c != AltSymbol::u_hat) report(p, s, 7, "balanced hat intersection must hold q_hat or u_hat");
          cand.emplace_back(p, s);
        } else if (c != AltSymbol::u) {
          report(p, s, 6, "unbalanced hat intersection must hold u");
        }
      } else if (right == AltSymbol::beta_hat || below == AltSymbol::alpha_hat) {
        if (c != AltSymbol::u) report(p, s, 9, "box on a single hat line must hold u");
      } else {
        const BoxType type = box_type(w[p], w[s]);
        const std::vector<AltSymbol>* set = type == BoxType::DE   ? &rules.de
                                            : type == BoxType::AE ? &rules.ae
                                            : type == BoxType::DA ? &rules.da
                                                                  : nullptr;
        const int rule = type == BoxType::DE ? 2 : type == BoxType::AE ? 3 : 4;
        if (set == nullptr) {
          if (c != AltSymbol::u) report(p, s, 9, "AA box must hold u");
        } else if (!allowed(*set, c)) {
          report(p, s, rule, to_string(c) + " is not admissible here");
        }
      }
    }
  }
  if (!patterns_ok(cand, [&](int p, int s) { return t.at(p, s); }, rules.patterns)) {
    out.push_back({0, 0, 8, "forbidden q_hat/u_hat pattern"});
  }
  return out;
}

WeightPoly alt_weight(const AltTableau& t, bool track_q) {
  int a = t.type().d_count(), b = t.type().e_count(), c = 0;
  for (const auto& row : t.rows()) {
    for (AltSymbol s : row) {
      if (is_alpha_like(s)) ++a;
      if (is_beta_like(s)) ++b;
      if (track_q && (s == AltSymbol::q || s == AltSymbol::q_hat)) ++c;
    }
  }
  return WeightPoly::monomial(a, b, c);
}

WeightPoly alt_word_weight(const Word& word, const RuleSet& rules, bool track_q) {
  WeightPoly total;
  for (const auto& t : enumerate_alt(word, rules)) total += alt_weight(t, track_q);
  return total;
}

std::string render_ascii(const AltTableau& t) {
  static constexpr const char* kGlyphs[] = {"a", "a^", "b", "b^", "q", "q^", ".", "u^"};
  const int m = t.size();
  std::string out = "   ";
  for (int c = 0; c < m; ++c) {
    out += "  ";
    out += to_char(t.type()[m - 1 - c]);
  }
  out += '\n';
  for (int p = 0; p < m; ++p) {
    out += to_char(t.type()[p]);
    out += " |";
    for (AltSymbol s : t.rows()[p]) {
      std::string g = kGlyphs[static_cast<int>(s)];
      out += std::string(3 - g.size(), ' ') + g;
    }
    const Letter l = t.type()[p];
    out += l == Letter::D ? "  a" : l == Letter::E ? "  b" : "  x";
    out += '\n';
  }
  return out;
}

bool ConjectureReport::passed() const {
  if (!mismatches.empty()) return false;
  if (one_species_expected && one_species_total != one_species_expected) return false;
  return true;
}

ConjectureReport verify_conjecture(int m, int r, const RuleSet& rules, const std::vector<RatePoint>& grid) {
  rules.check();
  ConjectureReport report;
  report.m = m;
  report.r = r;
  report.ruleset = rules.name;
  report.points = grid.size();
  const auto words = all_words(m, r);
  report.words = words.size();
  std::vector<WeightPoly> weights;
  Integer count = 0;
  for (const auto& w : words) {
    const auto tableaux = enumerate_alt(w, rules);
    count += static_cast<unsigned long>(tableaux.size());
    WeightPoly total;
    for (const auto& t : tableaux) total += alt_weight(t, false);
    weights.push_back(std::move(total));
  }
  if (r == 0) {
    report.one_species_total = count;
    report.one_species_expected = factorial(m + 1);
  }
  for (const auto& pt : grid) {
    const auto chain = build_sector_chain(m, r, ChainParams{pt.alpha, pt.beta, 1});
    const auto pi = stationary(chain);
    std::vector<Rational> values(words.size());
    Rational z = 0;
    for (std::size_t i = 0; i < words.size(); ++i) {
      values[i] = weights[i].eval(pt.alpha, pt.beta, 1);
      z += values[i];
    }
    for (std::size_t i = 0; i < words.size(); ++i) {
      if (z == 0 || pi[i].second != values[i] / z) {
        report.mismatches.push_back({words[i], pt, pi[i].second, z == 0 ? Rational(0) : values[i] / z});
      }
    }
  }
  return report;
}

ConsistencyReport q0_consistency(int m, int r, const RuleSet& rules) {
  ConsistencyReport report;
  report.m = m;
  report.r = r;
  report.ruleset = rules.name;
  for (const auto& w : all_words(m, r)) {
    ++report.words;
    WeightPoly slice = alt_word_weight(w, rules, true).q_slice(0);
    WeightPoly expected = word_weight(w);
    if (slice != expected) report.mismatches.push_back({w, std::move(slice), std::move(expected)});
  }
  return report;
}

std::vector<SweepEntry> sweep_rulesets(int m_max, const std::vector<RatePoint>& grid,
                                       const std::vector<RuleSet>& candidates) {
  std::vector<SweepEntry> out;
  for (const auto& rules : candidates) {
    SweepEntry entry{rules, true, ""};
    for (int m = 1; m <= m_max && entry.passed; ++m) {
      for (int r = 0; r <= m && entry.passed; ++r) {
        const auto rep = verify_conjecture(m, r, rules, grid);
        if (!rep.passed()) {
          entry.passed = false;
          entry.first_failure = "m=" + std::to_string(m) + " r=" + std::to_string(r);
          if (!rep.mismatches.empty()) {
            entry.first_failure += " word=" + rep.mismatches.front().word.str();
          } else {
            entry.first_failure += " one-species total " + to_string(*rep.one_species_total);
          }
        }
      }
    }
    out.push_back(std::move(entry));
  }
  return out;
}

}  // namespace mcat

#include "mcat/chain.hpp"

#include <algorithm>
#include <future>

#include "mcat/error.hpp"
#include "mcat/tableaux.hpp"

namespace mcat {

void ChainParams::check() const {
  if (alpha <= 0) fail(ErrorCode::invalid_argument, "alpha must be positive, got " + to_string(alpha));
  if (beta <= 0) fail(ErrorCode::invalid_argument, "beta must be positive, got " + to_string(beta));
  if (q < 0) fail(ErrorCode::invalid_argument, "q must be non-negative, got " + to_string(q));
}

std::vector<RatePoint> default_grid() {
  return {{1, 1}, {Rational(1, 2), 2}, {2, Rational(1, 2)}, {Rational(1, 3), Rational(1, 3)}, {3, 5}};
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

std::vector<RatePoint> parse_grid(std::string_view text) {
  std::vector<RatePoint> out;
  while (true) {
    const auto semi = text.find(';');
    const auto item = trim(text.substr(0, semi));
    const auto comma = item.find(',');
    if (comma == std::string_view::npos) {
      fail(ErrorCode::invalid_argument, "grid point '" + std::string(item) + "' is not of the form alpha,beta");
    }
    RatePoint pt{parse_rational(trim(item.substr(0, comma))), parse_rational(trim(item.substr(comma + 1)))};
    if (pt.alpha <= 0 || pt.beta <= 0) {
      fail(ErrorCode::invalid_argument, "grid point '" + std::string(item) + "' must have positive rates");
    }
    out.push_back(std::move(pt));
    if (semi == std::string_view::npos) break;
    text.remove_prefix(semi + 1);
  }
  return out;
}

std::vector<WordMove> transitions(const Word& word, const ChainParams& params) {
  const int m = word.length();
  const Rational scale(1, m + 1);
  std::vector<WordMove> out;
  auto add = [&](Word target, const Rational& rate) {
    if (rate != 0) out.push_back({std::move(target), rate * scale});
  };
  for (int i = 0; i + 1 < m; ++i) {
    const Letter a = word[i], b = word[i + 1];
    const bool forward = (a == Letter::D && b == Letter::E) || (a == Letter::D && b == Letter::A) ||
                         (a == Letter::A && b == Letter::E);
    const bool backward = (a == Letter::E && b == Letter::D) || (a == Letter::A && b == Letter::D) ||
                          (a == Letter::E && b == Letter::A);
    if (forward) add(word.swapped(i), 1);
    if (backward) add(word.swapped(i), params.q);
  }
  if (word.starts_with(Letter::E)) add(word.with_letter(0, Letter::D), params.alpha);
  if (word.ends_with(Letter::D)) add(word.with_letter(m - 1, Letter::E), params.beta);
  return out;
}

SectorChain::SectorChain(int m, int r, ChainParams params, std::vector<Word> states, TransitionMatrix p)
    : m_(m), r_(r), params_(std::move(params)), states_(std::move(states)), p_(std::move(p)) {
  for (std::size_t i = 0; i < states_.size(); ++i) index_.emplace(states_[i], i);
}

std::size_t SectorChain::index_of(const Word& w) const {
  auto it = index_.find(w);
  if (it == index_.end()) fail(ErrorCode::invalid_argument, "word " + w.str() + " is not in the sector");
  return it->second;
}

Rational SectorChain::probability(const Word& from, const Word& to) const {
  const std::size_t j = index_of(to);
  for (const auto& [col, prob] : p_[index_of(from)]) {
    if (col == j) return prob;
  }
  return 0;
}

SectorChain build_sector_chain(int m, int r, const ChainParams& params) {
  params.check();
  if (m < 1) fail(ErrorCode::invalid_argument, "m must be at least 1");
  auto states = all_words(m, r);
  std::map<Word, std::size_t> index;
  for (std::size_t i = 0; i < states.size(); ++i) index.emplace(states[i], i);
  TransitionMatrix p(states.size());
  for (std::size_t i = 0; i < states.size(); ++i) {
    std::map<std::size_t, Rational> row;
    Rational out_mass = 0;
    for (auto& mv : transitions(states[i], params)) {
      row[index.at(mv.target)] += mv.probability;
      out_mass += mv.probability;
    }
    // Large alpha or beta can push the residual below zero; pi P = pi does
    // not depend on the self-loop, so it is kept as is.
    if (out_mass != 1) row[i] += 1 - out_mass;
    for (auto& [j, v] : row) p[i].emplace_back(j, std::move(v));
  }
  const auto comps = strongly_connected_components(p);
  if (comps.size() > 1) {
    std::string msg = "sector (m=" + std::to_string(m) + ", r=" + std::to_string(r) + ") is not irreducible; " +
                      std::to_string(comps.size()) + " components:";
    for (const auto& c : comps) {
      msg += " {";
      for (std::size_t k = 0; k < c.size(); ++k) msg += (k ? "," : "") + states[c[k]].str();
      msg += "}";
    }
    fail(ErrorCode::not_irreducible, msg);
  }
  return SectorChain(m, r, params, std::move(states), std::move(p));
}

StationaryVector stationary(const SectorChain& chain, SolveMethod method) {
  const auto pi = solve_stationary(chain.matrix(), method);
  StationaryVector out;
  out.reserve(pi.size());
  for (std::size_t i = 0; i < pi.size(); ++i) out.emplace_back(chain.states()[i], pi[i]);
  return out;
}

WeightPoly partition_function(int m, int r) {
  WeightPoly z;
  for (const auto& w : all_words(m, r)) z += word_weight(w);
  return z;
}

namespace {

std::vector<TheoremCounterexample> check_point(int m, int r, const RatePoint& pt,
                                               const std::vector<WeightPoly>& weights) {
  const auto chain = build_sector_chain(m, r, ChainParams{pt.alpha, pt.beta, 0});
  const auto pi = stationary(chain);
  std::vector<Rational> values(weights.size());
  Rational z = 0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    values[i] = weights[i].eval(pt.alpha, pt.beta);
    z += values[i];
  }
  std::vector<TheoremCounterexample> bad;
  for (std::size_t i = 0; i < pi.size(); ++i) {
    Rational predicted = values[i] / z;
    if (pi[i].second != predicted) bad.push_back({pi[i].first, pt, pi[i].second, std::move(predicted)});
  }
  return bad;
}

}  // namespace

TheoremReport verify_stationary_theorem(int m, std::optional<int> r, const std::vector<RatePoint>& grid) {
  if (m < 1) fail(ErrorCode::invalid_argument, "m must be at least 1");
  TheoremReport report;
  report.m = m;
  report.points = grid.size();
  std::vector<int> rs;
  if (r) {
    if (*r < 0 || *r > m) fail(ErrorCode::invalid_argument, "r must lie in [0, m]");
    rs.push_back(*r);
  } else {
    for (int k = 0; k <= m; ++k) rs.push_back(k);
  }
  for (int rr : rs) {
    report.sectors.push_back(rr);
    std::vector<WeightPoly> weights;
    for (const auto& w : all_words(m, rr)) weights.push_back(word_weight(w));
    // Grid points are independent exact solves.
    std::vector<std::future<std::vector<TheoremCounterexample>>> jobs;
    for (const auto& pt : grid) {
      jobs.push_back(std::async(std::launch::async, check_point, m, rr, pt, std::cref(weights)));
    }
    for (auto& job : jobs) {
      auto bad = job.get();
      report.comparisons += weights.size();
      for (auto& b : bad) report.counterexamples.push_back(std::move(b));
    }
  }
  return report;
}

std::string to_string(AnsatzCase c) {
  switch (c) {
    case AnsatzCase::de: return "DE";
    case AnsatzCase::da: return "DA";
    case AnsatzCase::ae: return "AE";
    case AnsatzCase::leading_e: return "leading E";
    case AnsatzCase::trailing_d: return "trailing D";
  }
  return "?";
}

AnsatzReport verify_ansatz(int m_max) {
  if (m_max < 1) fail(ErrorCode::invalid_argument, "m_max must be at least 1");
  AnsatzReport report;
  report.m_max = m_max;
  std::map<Word, WeightPoly> memo;
  auto weight = [&](const Word& w) -> const WeightPoly& {
    auto it = memo.find(w);
    if (it == memo.end()) it = memo.emplace(w, word_weight(w)).first;
    return it->second;
  };
  const WeightPoly ab = WeightPoly::monomial(1, 1);
  const Letter d[] = {Letter::D};
  const Letter e[] = {Letter::E};
  const Letter a[] = {Letter::A};
  for (int m = 1; m <= m_max; ++m) {
    for (int r = 0; r <= m; ++r) {
      for (const auto& w : all_words(m, r)) {
        ++report.words;
        const WeightPoly& lhs = weight(w);
        auto check = [&](AnsatzCase which, int pos, WeightPoly rhs) {
          ++report.checks[which];
          if (lhs != rhs) report.failures.push_back({w, which, pos, lhs, std::move(rhs)});
        };
        for (int i = 0; i + 1 < m; ++i) {
          const Letter x = w[i], y = w[i + 1];
          if (x == Letter::D && y == Letter::E) {
            check(AnsatzCase::de, i, ab * (weight(w.splice(i, i + 2, d)) + weight(w.splice(i, i + 2, e))));
          } else if (x == Letter::D && y == Letter::A) {
            check(AnsatzCase::da, i, ab * weight(w.splice(i, i + 2, a)));
          } else if (x == Letter::A && y == Letter::E) {
            check(AnsatzCase::ae, i, ab * weight(w.splice(i, i + 2, a)));
          }
        }
        if (w.starts_with(Letter::E)) check(AnsatzCase::leading_e, 0, WeightPoly::beta() * weight(w.erased(0)));
        if (w.ends_with(Letter::D)) {
          check(AnsatzCase::trailing_d, m - 1, WeightPoly::alpha() * weight(w.erased(m - 1)));
        }
      }
    }
  }
  return report;
}

}  // namespace mcat

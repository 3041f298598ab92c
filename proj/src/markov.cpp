#include "mcat/markov.hpp"

#include <algorithm>
#include <string>

#include "mcat/error.hpp"
#include "mcat/linalg.hpp"

namespace mcat {

std::vector<std::vector<std::size_t>> strongly_connected_components(const TransitionMatrix& p) {
  // Iterative Tarjan.
  const std::size_t n = p.size();
  constexpr std::size_t kUnvisited = static_cast<std::size_t>(-1);
  std::vector<std::size_t> index(n, kUnvisited), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  std::vector<std::vector<std::size_t>> components;
  std::size_t counter = 0;

  struct Frame {
    std::size_t v;
    std::size_t edge;
  };
  for (std::size_t root = 0; root < n; ++root) {
    if (index[root] != kUnvisited) continue;
    std::vector<Frame> call{{root, 0}};
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      Frame& fr = call.back();
      const std::size_t v = fr.v;
      if (fr.edge < p[v].size()) {
        const auto& [w, prob] = p[v][fr.edge++];
        if (prob == 0) continue;
        if (index[w] == kUnvisited) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      if (low[v] == index[v]) {
        std::vector<std::size_t> comp;
        std::size_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp.push_back(w);
        } while (w != v);
        std::sort(comp.begin(), comp.end());
        components.push_back(std::move(comp));
      }
      call.pop_back();
      if (!call.empty()) {
        const std::size_t parent = call.back().v;
        low[parent] = std::min(low[parent], low[v]);
      }
    }
  }
  std::sort(components.begin(), components.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return components;
}

bool is_irreducible(const TransitionMatrix& p) {
  return p.empty() || strongly_connected_components(p).size() == 1;
}

bool is_stationary(const TransitionMatrix& p, const std::vector<Rational>& pi) {
  if (pi.size() != p.size()) return false;
  Rational total = 0;
  std::vector<Rational> image(p.size(), 0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    total += pi[i];
    if (pi[i] == 0) continue;
    for (const auto& [j, prob] : p[i]) image[j] += pi[i] * prob;
  }
  return total == 1 && image == pi;
}

namespace {

constexpr std::size_t kRationalThreshold = 48;

// Rows of (P^T - I) with the last row replaced by all ones.
std::vector<std::vector<std::pair<std::size_t, Rational>>> balance_rows(const TransitionMatrix& p) {
  const std::size_t n = p.size();
  std::vector<std::vector<std::pair<std::size_t, Rational>>> rows(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& [j, prob] : p[i]) {
      if (j >= n) fail(ErrorCode::invalid_argument, "transition target out of range");
      if (j + 1 == n) continue;
      rows[j].emplace_back(i, prob);
    }
  }
  for (std::size_t j = 0; j + 1 < n; ++j) {
    auto& row = rows[j];
    std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    bool found = false;
    for (auto& [i, v] : row) {
      if (i == j) {
        v -= 1;
        found = true;
      }
    }
    if (!found) {
      row.emplace_back(j, Rational(-1));
      std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    }
    std::erase_if(row, [](const auto& e) { return e.second == 0; });
  }
  for (std::size_t i = 0; i < n; ++i) rows[n - 1].emplace_back(i, Rational(1));
  return rows;
}

}  // namespace

std::vector<Rational> solve_stationary(const TransitionMatrix& p, SolveMethod method) {
  const std::size_t n = p.size();
  if (n == 0) fail(ErrorCode::invalid_argument, "empty chain");
  const auto rows = balance_rows(p);
  if (method == SolveMethod::automatic) {
    method = n <= kRationalThreshold ? SolveMethod::rational : SolveMethod::padic;
  }

  std::optional<std::vector<Rational>> pi;
  if (method == SolveMethod::rational) {
    RationalMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (const auto& [j, v] : rows[i]) a(i, j) = v;
    }
    std::vector<Rational> b(n, 0);
    b[n - 1] = 1;
    pi = solve_rational(std::move(a), std::move(b));
  } else {
    SparseIntegerMatrix a(n);
    for (std::size_t i = 0; i < n; ++i) {
      Integer scale = 1;
      for (const auto& [j, v] : rows[i]) scale = lcm(scale, Integer(v.get_den()));
      for (const auto& [j, v] : rows[i]) a[i].emplace_back(j, Integer(v.get_num() * (scale / v.get_den())));
    }
    std::vector<Integer> b(n, 0);
    b[n - 1] = 1;
    pi = solve_padic(a, b, [&](const std::vector<Rational>& x) { return is_stationary(p, x); });
  }
  if (!pi) {
    fail(ErrorCode::singular_system,
         "stationary system on " + std::to_string(n) + " states is singular (stationary law not unique)");
  }
  if (!is_stationary(p, *pi)) fail(ErrorCode::internal, "stationary solution failed exact certification");
  return *pi;
}

}  // namespace mcat

#include "mcat/counting.hpp"

#include <algorithm>

#include "mcat/error.hpp"
#include "mcat/tableaux.hpp"

namespace mcat {

Integer catalan(int n) {
  if (n < 0) return 0;
  return binomial(2 * n, n) / (n + 1);
}

Integer narayana(int n, int k) {
  if (n < 1 || k < 1 || k > n) return 0;
  return binomial(n, k) * binomial(n, k - 1) / n;
}

Integer z0_count(int m, int r) {
  if (m < 0 || r < 0 || r > m) fail(ErrorCode::invalid_argument, "z0_count needs 0 <= r <= m");
  const Integer num = 2 * (r + 1) * binomial(2 * m + 1, m - r);
  const Integer den = m + r + 2;
  if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) fail(ErrorCode::internal, "count formula is not integral");
  return num / den;
}

Integer count_nkr(int m, int k, int r) {
  if (m < 0 || r < 0 || r > m) fail(ErrorCode::invalid_argument, "count_nkr needs 0 <= r <= m");
  const int total = m - r;
  if (k < 0 || k > total) return 0;
  // table[n][k]: ways to fill the blocks so far with n letters and k D's.
  std::vector<std::vector<Integer>> table(total + 1, std::vector<Integer>(total + 1, 0));
  for (int n = 0; n <= total; ++n) {
    for (int kk = 0; kk <= n; ++kk) table[n][kk] = narayana(n + 1, kk + 1);
  }
  for (int block = 1; block <= r; ++block) {
    std::vector<std::vector<Integer>> next(total + 1, std::vector<Integer>(total + 1, 0));
    for (int n = 0; n <= total; ++n) {
      for (int kk = 0; kk <= n; ++kk) {
        if (table[n][kk] == 0) continue;
        for (int n2 = 0; n + n2 <= total; ++n2) {
          for (int k2 = 0; k2 <= n2; ++k2) next[n + n2][kk + k2] += table[n][kk] * narayana(n2 + 1, k2 + 1);
        }
      }
    }
    table = std::move(next);
  }
  return table[total][k];
}

std::map<int, Integer> enumerate_counts_by_k(int m, int r) {
  std::map<int, Integer> out;
  for (int k = 0; k <= m - r; ++k) out[k] = 0;
  for (const auto& w : all_words(m, r)) out[w.d_count()] += static_cast<unsigned long>(enumerate_condensed(w).size());
  return out;
}

namespace {

void add_term(WeightPoly& p, const Integer& coeff, int a, int b) {
  if (coeff == 0) return;
  if (a < 0 || b < 0) fail(ErrorCode::internal, "determinant entry has a negative exponent");
  p.add_term({a, b, 0}, coeff);
}

}  // namespace

PolyMatrix build_det_matrix(const std::vector<int>& parts) {
  const int k = static_cast<int>(parts.size());
  for (int i = 0; i < k; ++i) {
    if (parts[i] < 0 || (i > 0 && parts[i] > parts[i - 1])) {
      fail(ErrorCode::invalid_argument, "parts must be a weakly decreasing sequence of non-negative integers");
    }
  }
  // lam[1..k], lam[k+1] = 0.
  std::vector<int> lam(k + 2, 0);
  for (int i = 0; i < k; ++i) lam[i + 1] = parts[i];
  PolyMatrix a(k, std::vector<WeightPoly>(k));
  for (int i = 1; i <= k; ++i) {
    for (int j = 1; j <= k; ++j) {
      WeightPoly& e = a[i - 1][j - 1];
      const int d = j - i;
      const int lj = lam[j], lj1 = lam[j + 1], li = lam[i];
      add_term(e, binomial(lj1, d), li - lj1, d);
      add_term(e, binomial(lj1, d + 1), li - lj1, d + 1);
      for (int l = 0; l <= lj - lj1 - 1; ++l) {
        add_term(e, binomial(lj - l - 1, d - 1), li - lj + l, d);
        add_term(e, binomial(lj - l - 1, d), li - lj + l, d + 1);
      }
    }
  }
  return a;
}

WeightPoly det_weight(const std::vector<int>& parts) {
  if (parts.empty()) return WeightPoly(1);
  return bareiss_determinant(build_det_matrix(parts));
}

bool DetCheckReport::identity_holds() const {
  if (determinant) {
    if (!interior_weight || *determinant != *interior_weight) return false;
    return determinant->shifted(word.d_count(), word.e_count()) == word_weight;
  }
  return factor_alpha && factor_beta && *factor_alpha == 0 && *factor_beta == 0;
}

DetCheckReport det_weight_check(const Word& word) {
  DetCheckReport report;
  report.word = word;
  report.word_weight = mcat::word_weight(word);
  if (word.a_count() == 0) {
    report.determinant = det_weight(shape_of(word).parts);
    WeightPoly interior;
    for (const auto& t : enumerate_condensed(word)) {
      const Monomial w = t.interior_weight();
      interior.add_term({w.a, w.b, 0}, 1);
    }
    report.interior_weight = std::move(interior);
    return report;
  }

  const auto dec = de_decompose(word);
  const int n = word.length();
  const int r = word.a_count();
  const int m1 = dec.subwords.front().e_count();
  const int k_last = dec.subwords.back().d_count();
  WeightPoly product = WeightPoly::monomial(n - m1, n - k_last);
  product *= det_weight(dec.partitions.front().parts).specialize_to_one(false, true, false);
  product *= det_weight(dec.partitions.back().parts).specialize_to_one(true, false, false);
  for (int i = 1; i < r; ++i) product *= det_weight(dec.partitions[i].parts).specialize_to_one(true, true, false);
  report.product = product;

  if (product.is_zero() || report.word_weight.is_zero()) return report;
  const Exponent lw = report.word_weight.leading_exponent();
  const Exponent lp = product.leading_exponent();
  const int fa = lw.a - lp.a;
  const int fb = lw.b - lp.b;
  const WeightPoly lhs = report.word_weight.shifted(std::max(0, -fa), std::max(0, -fb));
  const WeightPoly rhs = product.shifted(std::max(0, fa), std::max(0, fb));
  if (lhs == rhs) {
    report.factor_alpha = fa;
    report.factor_beta = fb;
    if (fa == fb) report.effective_n = n + fa;
  }
  return report;
}

}  // namespace mcat

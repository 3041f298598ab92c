#pragma once

#include <map>
#include <optional>
#include <vector>

#include "mcat/core.hpp"
#include "mcat/poly.hpp"

namespace mcat {

Integer catalan(int n);
/// N(n, k) = C(n,k) C(n,k-1) / n; zero outside 1 <= k <= n.
Integer narayana(int n, int k);

/// Number of tableaux with m letters and r A's: 2(r+1)/(m+r+2) * C(2m+1, m-r).
Integer z0_count(int m, int r);

/// Number of those with exactly k D's, by the Narayana convolution.
Integer count_nkr(int m, int k, int r);

/// Brute force: enumerates every word of the sector and counts its tableaux,
/// keyed by the number of D's.
std::map<int, Integer> enumerate_counts_by_k(int m, int r);

/// Square matrix A_lambda with formal alpha and beta; parts may include zeros.
PolyMatrix build_det_matrix(const std::vector<int>& parts);

/// det A_lambda; 1 for the empty partition.
WeightPoly det_weight(const std::vector<int>& parts);

struct DetCheckReport {
  Word word;
  WeightPoly word_weight;
  // A-free words
  std::optional<WeightPoly> determinant;          // det A_lambda
  std::optional<WeightPoly> interior_weight;      // generating function of interior fillings
  // words with at least one A
  std::optional<WeightPoly> product;              // product formula with n = word length
  std::optional<int> factor_alpha;                // word_weight = alpha^fa beta^fb * product
  std::optional<int> factor_beta;
  std::optional<int> effective_n;                 // exponent n that makes the product exact

  bool identity_holds() const;
};

DetCheckReport det_weight_check(const Word& word);

}  // namespace mcat

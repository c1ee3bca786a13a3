#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "coxeter2d/bigint.hpp"
#include "coxeter2d/coxeter_system.hpp"
#include "coxeter2d/decomposition.hpp"
#include "coxeter2d/gf2.hpp"
#include "coxeter2d/matrix_group.hpp"
#include "coxeter2d/todd_coxeter.hpp"

namespace coxeter2d {

// Membership in P_{lambda|mu} = P_lambda intersect P_mu^t inside
// GL_{total}(F_2): invertible, zero below the lambda block diagonal and zero
// above the mu block diagonal.
bool parabolic_member(const GF2Matrix& m, const Decomposition& lambda,
                      const Decomposition& mu);

// |P_{lambda|mu}| by the block recursion
//   |P_{lambda|mu}| = 2^{mu_m (lambda_l - mu_m)} |GL_{mu_m}| |P_{~lambda|~mu}|
// (after swapping lambda and mu so that mu_m <= lambda_l), with zero parts
// dropped. Memoized.
BigInt order_recursive(const Decomposition& lambda, const Decomposition& mu);

// |P_{lambda|mu}| by enumerating all 2^(total^2) matrices and counting the
// members. The independent oracle; refuses totals above the cap.
BigInt order_bruteforce(const Decomposition& lambda, const Decomposition& mu,
                        int enumeration_cap = 4);

// Coset representatives of <S_{lambda|mu'}> in <S_{lambda|mu}>, the empty
// word first. Two cases:
//   1 < mu_m <= lambda_l: e and y_n x_n^{e_n} ... y_k x_k^{e_k} for
//     n-mu_m+2 <= k <= n, 2^{mu_m} - 1 words in total;
//   lambda_l = 1, mu_m >= 2: e and y_n y_{n-1} ... y_l y_{j_1} ... y_{j_s}
//     for n-mu_m+2 <= l, l < j_1 < ... < j_s <= n, 2^{mu_m - 1} words.
// Throws HypothesisError when neither case applies.
std::vector<Word> coset_rep_words(const Decomposition& lambda,
                                  const Decomposition& mu);

struct VerifyOptions {
  bool run_presentation = true;
  bool run_bruteforce = true;
  bool run_image = true;
  uint64_t max_cosets = kDefaultMaxCosets;
  uint64_t element_limit = kDefaultElementLimit;
  int bruteforce_cap = 4;
};

enum class Verdict { Pass, Fail, Skipped };

std::string verdict_str(Verdict v);

struct VerificationReport {
  Decomposition lambda;
  Decomposition mu;
  BigInt recursive_order;
  std::optional<BigInt> bruteforce_order;
  std::optional<BigInt> presentation_order;
  std::optional<BigInt> closure_order;
  std::optional<bool> image_check;
  Verdict verdict = Verdict::Fail;
  std::string reason;  // set when verdict == Skipped
};

// Cross-checks |P_{lambda|mu}| along every enabled route: the block
// recursion, brute-force enumeration (totals within the cap), Todd-Coxeter
// over A_{2,n}(S_{lambda|mu}), and the closure of the phi image, plus the
// set-level comparison of the closure with P_{lambda|mu} itself. Resource
// limits turn into a skipped verdict with the reason attached.
VerificationReport verify_theorem(const Decomposition& lambda,
                                  const Decomposition& mu,
                                  const VerifyOptions& options = {});

}  // namespace coxeter2d

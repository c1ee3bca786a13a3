#include <vector>

#include "doctest.h"

#include "coxeter2d/errors.hpp"
#include "coxeter2d/parabolic.hpp"

using namespace coxeter2d;

namespace {

const Decomposition d3({3});
const Decomposition d21({2, 1});
const Decomposition d111({1, 1, 1});

BigInt brute_or_one(const std::vector<int>& lam, const std::vector<int>& mu) {
  if (lam.empty()) return 1;
  return order_bruteforce(Decomposition(lam), Decomposition(mu));
}

}  // namespace

TEST_CASE("parabolic membership") {
  CHECK(parabolic_member(GF2Matrix::identity(3), d3, d21));
  CHECK(parabolic_member(phi(Generator::x(1), 1), Decomposition({2}), Decomposition({2})));
  CHECK_FALSE(parabolic_member(phi(Generator::x(1), 1), Decomposition({1, 1}), Decomposition({2})));

  // Borel pattern: invertible upper-triangular
  GF2Matrix upper = GF2Matrix::identity(3);
  upper.set(1, 2, true);
  upper.set(1, 3, true);
  CHECK(parabolic_member(upper, d111, d3));
  CHECK_FALSE(parabolic_member(upper.transposed(), d111, d3));

  CHECK_FALSE(parabolic_member(GF2Matrix(3), d3, d3));  // singular
  CHECK_THROWS_AS(parabolic_member(GF2Matrix::identity(2), d3, d3), std::invalid_argument);
  CHECK_THROWS_AS(parabolic_member(GF2Matrix::identity(3), d3, Decomposition({2})),
                  std::invalid_argument);
}

TEST_CASE("phi image lands in P_lambda exactly off the stopovers") {
  for (int total = 2; total <= 6; ++total) {
    const int n = total - 1;
    const Decomposition full({total});
    for (const auto& lambda : compositions_of(total)) {
      const auto stops = stopovers(lambda);
      for (int j = 1; j <= n; ++j) {
        const bool is_stop = std::find(stops.begin(), stops.end(), j) != stops.end();
        CHECK(parabolic_member(phi(Generator::x(j), n), lambda, full) == !is_stop);
      }
    }
  }
}

TEST_CASE("recursive orders") {
  CHECK(order_recursive(d3, d3) == 168);
  CHECK(order_recursive(d111, d3) == 8);
  CHECK(order_recursive(d3, d21) == 24);
  CHECK(order_recursive(Decomposition({1, 1}), Decomposition({1, 1})) == 1);
  for (int t = 1; t <= 6; ++t) {
    CHECK(order_recursive(Decomposition({t}), Decomposition({t})) == gl_order(t));
  }
  CHECK_THROWS_AS(order_recursive(d3, Decomposition({2})), std::invalid_argument);
}

TEST_CASE("brute-force orders") {
  CHECK(order_bruteforce(Decomposition({2}), Decomposition({2})) == 6);
  CHECK(order_bruteforce(Decomposition({1, 1}), Decomposition({1, 1})) == 1);
  CHECK(order_bruteforce(d21, d3) == 24);
  CHECK_THROWS_AS(order_bruteforce(Decomposition({5}), Decomposition({5})), ResourceLimitError);
}

TEST_CASE("recursion agrees with brute force on every pair") {
  for (int total = 1; total <= 4; ++total) {
    const auto comps = compositions_of(total);
    for (const auto& lambda : comps) {
      for (const auto& mu : comps) {
        CHECK(order_recursive(lambda, mu) == order_bruteforce(lambda, mu));
      }
    }
  }
}

TEST_CASE("transpose symmetry of the order") {
  for (int total = 1; total <= 6; ++total) {
    const auto comps = compositions_of(total);
    for (const auto& lambda : comps) {
      for (const auto& mu : comps) {
        CHECK(order_recursive(lambda, mu) == order_recursive(mu, lambda));
      }
    }
  }
}

TEST_CASE("stripping a trailing 1|1 pair preserves the order") {
  for (int total = 2; total <= 4; ++total) {
    const auto comps = compositions_of(total);
    for (const auto& lambda : comps) {
      for (const auto& mu : comps) {
        if (lambda.last() != 1 || mu.last() != 1) continue;
        auto lam2 = lambda.parts();
        lam2.pop_back();
        auto mu2 = mu.parts();
        mu2.pop_back();
        CHECK(order_bruteforce(lambda, mu) == brute_or_one(lam2, mu2));
      }
    }
  }
}

TEST_CASE("coset representative words") {
  const auto reps33 = coset_rep_words(d3, d3);
  REQUIRE(reps33.size() == 7);  // 2^{mu_m} - 1 with mu_m = 3
  CHECK(word_str(reps33[0]) == "e");
  CHECK(word_str(reps33[1]) == "y2");
  CHECK(word_str(reps33[2]) == "y2 x2");
  CHECK(word_str(reps33[3]) == "y2 y1");
  CHECK(word_str(reps33[4]) == "y2 x2 y1");
  CHECK(word_str(reps33[5]) == "y2 y1 x1");
  CHECK(word_str(reps33[6]) == "y2 x2 y1 x1");

  const auto reps_borel = coset_rep_words(d111, d3);
  REQUIRE(reps_borel.size() == 4);  // 2^{mu_m - 1}
  CHECK(word_str(reps_borel[0]) == "e");
  CHECK(word_str(reps_borel[1]) == "y2");
  CHECK(word_str(reps_borel[2]) == "y2 y1");
  CHECK(word_str(reps_borel[3]) == "y2 y1 y2");

  // mu_m = 1: neither proposition applies
  CHECK_THROWS_AS(coset_rep_words(d21, d21), HypothesisError);
  // lambda_l >= 2 with mu_m > lambda_l: neither applies
  CHECK_THROWS_AS(coset_rep_words(Decomposition({1, 2}), d3), HypothesisError);
}

TEST_CASE("representatives are distinct and covering at desk scale") {
  for (int total = 2; total <= 4; ++total) {
    const auto comps = compositions_of(total);
    for (const auto& lambda : comps) {
      for (const auto& mu : comps) {
        const int mm = mu.last();
        const int ll = lambda.last();
        if (mm < 2 || (mm > ll && ll != 1)) continue;
        const auto reps = coset_rep_words(lambda, mu);
        const uint64_t expected =
            (mm <= ll) ? (uint64_t(1) << mm) - 1 : uint64_t(1) << (mm - 1);
        CHECK(reps.size() == expected);
        const auto system = restricted(a2n(total - 1), generator_subset(lambda, mu));
        const auto h = generator_subset(lambda, mu_prime(mu));
        const auto report = verify_coset_reps(system, h, reps);
        CHECK(report.distinct);
        CHECK(report.covering);
        CHECK(report.count == expected);
      }
    }
  }
}

TEST_CASE("verify_theorem") {
  const auto full = verify_theorem(d3, d3);
  CHECK(full.verdict == Verdict::Pass);
  CHECK(full.recursive_order == 168);
  REQUIRE(full.bruteforce_order.has_value());
  CHECK(*full.bruteforce_order == 168);
  REQUIRE(full.presentation_order.has_value());
  CHECK(*full.presentation_order == 168);
  REQUIRE(full.closure_order.has_value());
  CHECK(*full.closure_order == 168);
  REQUIRE(full.image_check.has_value());
  CHECK(*full.image_check);

  const auto trivial = verify_theorem(Decomposition({1, 1}), Decomposition({1, 1}));
  CHECK(trivial.verdict == Verdict::Pass);
  CHECK(trivial.recursive_order == 1);
  CHECK(*trivial.presentation_order == 1);

  VerifyOptions tight;
  tight.max_cosets = 5;
  const auto skipped = verify_theorem(d3, d3, tight);
  CHECK(skipped.verdict == Verdict::Skipped);
  CHECK_FALSE(skipped.reason.empty());

  VerifyOptions lean;
  lean.run_presentation = false;
  lean.run_bruteforce = false;
  const auto image_only = verify_theorem(d3, d3, lean);
  CHECK(image_only.verdict == Verdict::Pass);
  CHECK_FALSE(image_only.bruteforce_order.has_value());
  CHECK_FALSE(image_only.presentation_order.has_value());
  REQUIRE(image_only.image_check.has_value());
  CHECK(*image_only.image_check);
}

TEST_CASE("mu_prime") {
  CHECK(mu_prime(d3) == d21);
  CHECK(mu_prime(Decomposition({2, 2})) == Decomposition({2, 1, 1}));
  CHECK_THROWS_AS(mu_prime(d111), std::invalid_argument);
}

#include <algorithm>
#include <random>
#include <vector>

#include "doctest.h"

#include "coxeter2d/errors.hpp"
#include "coxeter2d/matrix_group.hpp"

using namespace coxeter2d;

TEST_CASE("phi images") {
  CHECK(phi(Generator::x(1), 1).to_rows() ==
        std::vector<std::vector<int>>{{1, 0}, {1, 1}});
  CHECK(phi(Generator::y(2), 2) == elementary(3, 2, 3));
  for (int n = 1; n <= 6; ++n) {
    for (int j = 1; j <= n; ++j) {
      CHECK(phi(Generator::x(j), n) * phi(Generator::x(j), n) == GF2Matrix::identity(n + 1));
      CHECK(phi(Generator::y(j), n) * phi(Generator::y(j), n) == GF2Matrix::identity(n + 1));
    }
  }
  CHECK_THROWS_AS(phi(Generator::x(3), 2), std::out_of_range);
  CHECK_THROWS_AS(phi(Generator::named("a"), 2), std::invalid_argument);
}

TEST_CASE("eval_word") {
  CHECK(eval_word({}, 2) == GF2Matrix::identity(3));

  Word xy3;
  for (int r = 0; r < 3; ++r) {
    xy3.push_back(Generator::x(1));
    xy3.push_back(Generator::y(1));
  }
  CHECK(eval_word(xy3, 1) == GF2Matrix::identity(2));

  Word x1x2_4;
  for (int r = 0; r < 4; ++r) {
    x1x2_4.push_back(Generator::x(1));
    x1x2_4.push_back(Generator::x(2));
  }
  CHECK(eval_word(x1x2_4, 2) == GF2Matrix::identity(3));
}

TEST_CASE("homomorphism check") {
  CHECK(check_homomorphism(a2n(3), 3).ok);
  CHECK(check_homomorphism(a2n(6), 6).ok);

  const auto doctored = a2n(1).with_pair_label(Generator::x(1), Generator::y(1), 2);
  const auto report = check_homomorphism(doctored, 1);
  CHECK_FALSE(report.ok);
  REQUIRE(report.failing_relator.has_value());
  CHECK(word_str(*report.failing_relator) == "x1 y1 x1 y1");
}

TEST_CASE("triple relators hold under every permutation of the base word") {
  for (int n = 1; n <= 4; ++n) {
    const auto system = a2n(n);
    const auto& gens = system.generators();
    for (size_t a = 0; a < gens.size(); ++a) {
      for (size_t b = a + 1; b < gens.size(); ++b) {
        for (size_t c = b + 1; c < gens.size(); ++c) {
          const int g = system.triple_label(gens[a], gens[b], gens[c]);
          if (g == 0) continue;
          std::vector<Generator> triple = {gens[a], gens[b], gens[c]};
          std::sort(triple.begin(), triple.end());
          do {
            Word w;
            for (int r = 0; r < g; ++r) {
              w.insert(w.end(), triple.begin(), triple.end());
            }
            CHECK(eval_word(w, n) == GF2Matrix::identity(n + 1));
          } while (std::next_permutation(triple.begin(), triple.end()));
        }
      }
    }
  }
}

TEST_CASE("distant generators commute") {
  for (int n = 2; n <= 6; ++n) {
    for (int j = 1; j <= n; ++j) {
      for (int k = j + 2; k <= n; ++k) {
        for (const GF2Matrix& u : {phi(Generator::x(j), n), phi(Generator::y(j), n)}) {
          for (const GF2Matrix& v : {phi(Generator::x(k), n), phi(Generator::y(k), n)}) {
            CHECK(u * v == v * u);
          }
        }
      }
    }
  }
}

TEST_CASE("closures of small generating sets") {
  CHECK(closure({phi(Generator::x(1), 1), phi(Generator::y(1), 1)}).order() == 6);
  CHECK(closure({}, kDefaultElementLimit, 3).order() == 1);

  std::vector<GF2Matrix> full;
  for (const Generator& g : a2n(2).generators()) full.push_back(phi(g, 2));
  const auto gl3 = closure(full);
  CHECK(gl3.order() == 168);
  CHECK(gl3.order() == gl_order(3));

  CHECK(gl3.contains(GF2Matrix::identity(3)));
  CHECK_FALSE(gl3.contains(GF2Matrix(3)));
  CHECK_THROWS_AS(gl3.contains(GF2Matrix::identity(4)), std::invalid_argument);
}

TEST_CASE("chain collapse inside a closure") {
  const auto h = closure({elementary(3, 1, 2), elementary(3, 2, 3)});
  CHECK(contains(h, elementary(3, 1, 3)));
}

TEST_CASE("closure order divides the ambient group order") {
  std::mt19937 rng(424242);
  for (int n : {3, 4}) {
    for (int trial = 0; trial < 8; ++trial) {
      std::vector<GF2Matrix> gens;
      while (gens.size() < 2) {
        std::vector<uint32_t> rows(n);
        for (int r = 0; r < n; ++r) rows[r] = rng() & ((1u << n) - 1u);
        const GF2Matrix m = GF2Matrix::from_row_bits(n, rows);
        if (is_invertible(m)) gens.push_back(m);
      }
      const auto cl = closure(gens);
      CHECK(gl_order(n) % cl.order() == 0);
    }
  }
}

TEST_CASE("closure element set does not depend on generator order") {
  std::vector<GF2Matrix> gens;
  for (const Generator& g : a2n(2).generators()) gens.push_back(phi(g, 2));
  auto sorted_elements = [](const MatrixGroupClosure& c) {
    std::vector<GF2Matrix> v = c.elements();
    std::sort(v.begin(), v.end());
    return v;
  };
  const auto base = sorted_elements(closure(gens));
  std::reverse(gens.begin(), gens.end());
  CHECK(sorted_elements(closure(gens)) == base);
}

TEST_CASE("closure error paths") {
  CHECK_THROWS_AS(closure({phi(Generator::x(1), 1), phi(Generator::y(1), 1)}, 5),
                  ResourceLimitError);
  CHECK_THROWS_AS(closure({GF2Matrix(2)}), std::invalid_argument);                // singular
  CHECK_THROWS_AS(closure({GF2Matrix::identity(2), GF2Matrix::identity(3)}),
                  std::invalid_argument);                                         // mixed dims
}

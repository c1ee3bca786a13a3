#include <set>
#include <sstream>

#include "doctest.h"
#include "json.hpp"

#include "coxeter2d/coxeter_system.hpp"

using namespace coxeter2d;

namespace {

std::string relators_dump(const TwoDimCoxeterSystem& s) {
  std::ostringstream os;
  for (const Word& w : s.relators()) os << word_str(w) << '\n';
  return os.str();
}

}  // namespace

TEST_CASE("a2n small cases") {
  const auto s1 = a2n(1);
  CHECK(s1.num_generators() == 2);
  CHECK(s1.pair_label(Generator::x(1), Generator::y(1)) == 3);

  const auto s2 = a2n(2);
  CHECK(s2.num_generators() == 4);
  CHECK(s2.pair_label(Generator::x(1), Generator::x(2)) == 4);
  CHECK(s2.pair_label(Generator::y(1), Generator::y(2)) == 4);
  CHECK(s2.pair_label(Generator::x(1), Generator::y(2)) == 2);
  CHECK(s2.pair_label(Generator::x(2), Generator::y(1)) == 2);
  CHECK(s2.triple_label(Generator::x(1), Generator::x(2), Generator::y(1)) == 3);
  CHECK(s2.triple_label(Generator::x(1), Generator::x(2), Generator::y(2)) == 3);
  CHECK(s2.triple_label(Generator::x(1), Generator::y(1), Generator::y(2)) == 3);
  CHECK(s2.triple_label(Generator::x(2), Generator::y(1), Generator::y(2)) == 3);

  const auto s3 = a2n(3);
  CHECK(s3.pair_label(Generator::x(1), Generator::x(3)) == 2);
  CHECK(s3.triple_label(Generator::x(1), Generator::x(2), Generator::x(3)) == 4);
  CHECK(s3.triple_label(Generator::y(1), Generator::y(2), Generator::y(3)) == 4);
  CHECK(s3.triple_label(Generator::x(1), Generator::x(2), Generator::y(3)) == 0);

  CHECK_THROWS_AS(a2n(0), std::invalid_argument);
  for (int n = 1; n <= 6; ++n) CHECK(a2n(n).num_generators() == 2 * n);
}

TEST_CASE("stopovers") {
  CHECK(stopovers(Decomposition({4})).empty());
  CHECK(stopovers(Decomposition({2, 1})) == std::vector<int>{2});
  CHECK(stopovers(Decomposition({1, 1, 1})) == std::vector<int>{1, 2});
  CHECK_THROWS_AS(Decomposition({2, 0}), std::invalid_argument);

  // always inside {1, ..., n} for compositions of n+1
  for (int total = 2; total <= 7; ++total) {
    for (const auto& lambda : compositions_of(total)) {
      for (int s : stopovers(lambda)) {
        CHECK(s >= 1);
        CHECK(s <= total - 1);
      }
    }
  }
}

TEST_CASE("generator_subset") {
  const auto both2 = generator_subset(Decomposition({2}), Decomposition({2}));
  CHECK(both2.members() == std::vector<Generator>{Generator::x(1), Generator::y(1)});

  CHECK(generator_subset(Decomposition({1, 1}), Decomposition({1, 1})).size() == 0);

  const auto borel = generator_subset(Decomposition({1, 1, 1}), Decomposition({3}));
  CHECK(borel.members() == std::vector<Generator>{Generator::y(1), Generator::y(2)});

  CHECK_THROWS_AS(generator_subset(Decomposition({2, 1}), Decomposition({2})),
                  std::invalid_argument);
}

TEST_CASE("generator_subset symmetry and mu-prime identities") {
  for (int total = 2; total <= 6; ++total) {
    const auto comps = compositions_of(total);
    for (const auto& lambda : comps) {
      for (const auto& mu : comps) {
        // swapping lambda and mu swaps the x and y parts
        const auto a = generator_subset(lambda, mu);
        const auto b = generator_subset(mu, lambda);
        std::vector<Generator> swapped;
        for (const Generator& g : b.members()) {
          swapped.push_back(g.family == Generator::Family::X ? Generator::y(g.index)
                                                             : Generator::x(g.index));
        }
        CHECK(a == GeneratorSubset(std::move(swapped)));
      }
      for (const auto& mu : comps) {
        if (mu.last() < 2) continue;
        // S_{lambda|mu'} = S_{lambda|mu} minus y_n
        const int n = total - 1;
        auto without_yn = generator_subset(lambda, mu).members();
        std::erase(without_yn, Generator::y(n));
        CHECK(generator_subset(lambda, mu_prime(mu)) == GeneratorSubset(without_yn));
      }
    }
  }
}

TEST_CASE("relators") {
  const auto s1 = a2n(1);
  const auto rels = s1.relators();
  REQUIRE(rels.size() == 3);
  CHECK(word_str(rels[0]) == "x1 x1");
  CHECK(word_str(rels[1]) == "y1 y1");
  CHECK(word_str(rels[2]) == "x1 y1 x1 y1 x1 y1");

  CHECK(TwoDimCoxeterSystem().relators().empty());

  const auto chain = restricted(a2n(2), GeneratorSubset({Generator::x(1), Generator::x(2)}));
  const auto chain_rels = chain.relators();
  REQUIRE(chain_rels.size() == 3);
  CHECK(word_str(chain_rels[2]) == "x1 x2 x1 x2 x1 x2 x1 x2");

  // byte-identical across independently constructed systems
  CHECK(relators_dump(a2n(3)) == relators_dump(a2n(3)));
}

TEST_CASE("restriction") {
  const auto pair = restricted(a2n(2), GeneratorSubset({Generator::x(1), Generator::y(1)}));
  CHECK(pair.num_generators() == 2);
  CHECK(pair.pair_label(Generator::x(1), Generator::y(1)) == 3);

  const auto full = GeneratorSubset(a2n(2).generators());
  CHECK(restricted(a2n(2), full) == a2n(2));

  const auto ychain = restricted(
      a2n(3), GeneratorSubset({Generator::y(1), Generator::y(2), Generator::y(3)}));
  CHECK(ychain.pair_label(Generator::y(1), Generator::y(2)) == 4);
  CHECK(ychain.pair_label(Generator::y(2), Generator::y(3)) == 4);
  CHECK(ychain.pair_label(Generator::y(1), Generator::y(3)) == 2);
  CHECK(ychain.triple_label(Generator::y(1), Generator::y(2), Generator::y(3)) == 4);

  CHECK_THROWS_AS(restricted(a2n(2), GeneratorSubset({Generator::x(3)})),
                  std::invalid_argument);
}

TEST_CASE("doctored pair label") {
  const auto doctored = a2n(1).with_pair_label(Generator::x(1), Generator::y(1), 2);
  CHECK(doctored.pair_label(Generator::x(1), Generator::y(1)) == 2);
  CHECK(a2n(1).pair_label(Generator::x(1), Generator::y(1)) == 3);
}

TEST_CASE("generator labels round-trip") {
  CHECK(Generator::from_label("x3") == Generator::x(3));
  CHECK(Generator::from_label("y12") == Generator::y(12));
  CHECK(Generator::from_label("a").family == Generator::Family::Named);
  CHECK(Generator::from_label("x0").family == Generator::Family::Named);
  for (const Generator& g : a2n(4).generators()) {
    CHECK(Generator::from_label(g.label()) == g);
  }
}

TEST_CASE("diagram export json") {
  const auto j1 = nlohmann::json::parse(export_diagram(a2n(1), DiagramFormat::Json));
  CHECK(j1["vertices"].size() == 2);
  CHECK(j1["edges"].size() == 1);
  CHECK(j1["edges"][0]["f"] == 3);
  CHECK(j1["facets"].size() == 0);

  const auto j2 = nlohmann::json::parse(export_diagram(a2n(2), DiagramFormat::Json));
  CHECK(j2["vertices"].size() == 4);
  CHECK(j2["edges"].size() == 6);
  CHECK(j2["facets"].size() == 4);
  for (const auto& facet : j2["facets"]) CHECK(facet["g"] == 3);

  const auto j3 = nlohmann::json::parse(export_diagram(a2n(3), DiagramFormat::Json));
  CHECK(j3["facets"].size() == 10);
  int g3 = 0, g4 = 0;
  for (const auto& facet : j3["facets"]) {
    if (facet["g"] == 3) ++g3;
    if (facet["g"] == 4) ++g4;
  }
  CHECK(g3 == 8);
  CHECK(g4 == 2);
}

TEST_CASE("diagram export dot") {
  const std::string dot = export_diagram(a2n(2), DiagramFormat::Dot);
  CHECK(dot.rfind("graph ", 0) == 0);
  CHECK(dot.find("\"x1\" -- \"y1\"") != std::string::npos);
  CHECK(dot.find("[style=bold]") != std::string::npos);
  CHECK(dot.find("[style=dotted]") != std::string::npos);
  CHECK(dot.find("shape=triangle") != std::string::npos);
  CHECK(std::count(dot.begin(), dot.end(), '{') == std::count(dot.begin(), dot.end(), '}'));
  // stable output
  CHECK(dot == export_diagram(a2n(2), DiagramFormat::Dot));
}

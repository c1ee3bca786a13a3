#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "coxeter2d/decomposition.hpp"

namespace coxeter2d {

// A generator symbol. Generators of the A_{2,n} family carry an x/y tag and a
// 1-based chain index; anything else is a free-form named symbol.
struct Generator {
  enum class Family : uint8_t { X, Y, Named };

  Family family = Family::Named;
  int index = 0;  // chain position for X/Y, 0 otherwise
  std::string name;

  static Generator x(int i);
  static Generator y(int i);
  static Generator named(std::string label);

  // Parses "x<k>" / "y<k>" (k >= 1, no leading zeros) back into a tagged
  // generator; anything else becomes a named symbol.
  static Generator from_label(std::string_view label);

  const std::string& label() const { return name; }

  friend bool operator==(const Generator&, const Generator&) = default;
  friend auto operator<=>(const Generator&, const Generator&) = default;
};

// A group element on the presentation side: a finite sequence of generator
// symbols. All generators are involutions, so no inverse letters are needed.
using Word = std::vector<Generator>;

// "e" for the empty word, otherwise space-separated labels.
std::string word_str(const Word& w);

// A set of generator symbols drawn from an ambient system; kept sorted.
class GeneratorSubset {
 public:
  GeneratorSubset() = default;
  explicit GeneratorSubset(std::vector<Generator> members);

  const std::vector<Generator>& members() const { return members_; }
  bool contains(const Generator& g) const;
  int size() const { return static_cast<int>(members_.size()); }

  friend bool operator==(const GeneratorSubset&, const GeneratorSubset&) = default;

 private:
  std::vector<Generator> members_;
};

enum class DiagramFormat { Dot, Json };

// A triple (X, f, g): generator set X, a total labeling f of unordered pairs
// and a labeling g of unordered triples (absent triples read as 0). Defines
// the finitely presented group with relators z^2, (zt)^f, (ztv)^g.
//
// Immutable after construction; label updates return modified copies.
class TwoDimCoxeterSystem {
 public:
  using PairLabels = std::vector<std::tuple<Generator, Generator, int>>;
  using TripleLabels = std::vector<std::tuple<Generator, Generator, Generator, int>>;

  TwoDimCoxeterSystem() = default;

  // f must assign every unordered pair exactly once; g entries are optional
  // and default to 0. At most 64 generators.
  TwoDimCoxeterSystem(std::vector<Generator> generators, const PairLabels& f,
                      const TripleLabels& g);

  int num_generators() const { return static_cast<int>(gens_.size()); }
  const std::vector<Generator>& generators() const { return gens_; }
  std::optional<int> find(const Generator& g) const;
  bool contains(const Generator& g) const { return find(g).has_value(); }

  int pair_label(const Generator& a, const Generator& b) const;
  int triple_label(const Generator& a, const Generator& b, const Generator& c) const;

  // Copy with one pair label replaced.
  TwoDimCoxeterSystem with_pair_label(const Generator& a, const Generator& b,
                                      int value) const;

  // Deterministic relator list: squares in generator order, then (zt)^f over
  // pairs in lexicographic position order, then (ztv)^g over triples with
  // g >= 1, each base word in position-sorted order. Labels of 0 contribute
  // nothing.
  std::vector<Word> relators() const;

  friend bool operator==(const TwoDimCoxeterSystem&, const TwoDimCoxeterSystem&) = default;

 private:
  int position_or_throw(const Generator& g) const;
  int pair_at(int i, int j) const { return f_[static_cast<size_t>(i) * gens_.size() + j]; }
  int triple_at(int i, int j, int k) const;

  std::vector<Generator> gens_;
  std::unordered_map<std::string, int> pos_;
  std::vector<int> f_;                    // dense, symmetric, diagonal unused
  std::unordered_map<uint32_t, int> g_;   // sorted-position key, values >= 1

  friend std::string export_diagram(const TwoDimCoxeterSystem&, DiagramFormat);
};

// The 2n-generator system on x_1..x_n, y_1..y_n with f = 4 along each chain,
// f = 3 on the rungs x_i,y_i, f = 2 elsewhere; g = 3 on mixed triples around
// each rung pair and g = 4 on consecutive same-family triples.
TwoDimCoxeterSystem a2n(int n);

// New system on the subset with f and g restricted to it.
TwoDimCoxeterSystem restricted(const TwoDimCoxeterSystem& system,
                               const GeneratorSubset& subset);

// S_{lambda|mu}: keeps x_i for i outside stopovers(lambda) and y_j for j
// outside stopovers(mu), inside a2n(total - 1). Totals must match and be >= 2.
GeneratorSubset generator_subset(const Decomposition& lambda, const Decomposition& mu);

// DOT: edges dotted for f=2, plain for f=3, bold for f=4, numeric label
// otherwise; facets with g >= 3 as labeled triangle-shaped auxiliary nodes.
// JSON: {"vertices": [...], "edges": [{a,b,f}], "facets": [{a,b,c,g}]} with
// g = 0 facets omitted. Node order follows the generator list.
std::string export_diagram(const TwoDimCoxeterSystem& system, DiagramFormat format);

}  // namespace coxeter2d

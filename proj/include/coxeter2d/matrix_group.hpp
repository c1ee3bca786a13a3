#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "coxeter2d/bigint.hpp"
#include "coxeter2d/coxeter_system.hpp"
#include "coxeter2d/gf2.hpp"

namespace coxeter2d {

inline constexpr uint64_t kDefaultElementLimit = 20'000'000;

// A matrix group materialized as its full element set, built by closure().
// Elements are stored in discovery order; membership is O(1) through an
// open-addressing index over the element vector.
class MatrixGroupClosure {
 public:
  uint64_t size() const { return elements_.size(); }
  BigInt order() const { return BigInt(elements_.size()); }
  int dim() const { return dim_; }

  const std::vector<GF2Matrix>& elements() const { return elements_; }
  const std::vector<GF2Matrix>& generators() const { return generators_; }

  bool contains(const GF2Matrix& m) const;

 private:
  friend MatrixGroupClosure closure(std::vector<GF2Matrix>, uint64_t, int);

  bool insert(const GF2Matrix& m, uint64_t element_limit);
  void rehash(size_t new_slot_count);

  int dim_ = 1;
  std::vector<GF2Matrix> elements_;
  std::vector<GF2Matrix> generators_;
  std::vector<uint32_t> slots_;
};

// phi(x_j) = I_{n+1} + E_{j+1,j}, phi(y_j) = I_{n+1} + E_{j,j+1}; requires an
// x/y-tagged generator with 1 <= j <= n.
GF2Matrix phi(const Generator& gen, int n);

// Left-to-right product of phi over the letters; the empty word gives I_{n+1}.
GF2Matrix eval_word(const Word& w, int n);

struct HomomorphismReport {
  bool ok = false;
  std::optional<Word> failing_relator;
};

// Evaluates every relator of the system under phi and reports the first one
// that does not collapse to the identity, if any.
HomomorphismReport check_homomorphism(const TwoDimCoxeterSystem& system, int n);

// BFS from the identity, right-multiplying by the generators in order, until
// the set is closed. Generators must share a dimension and be invertible; an
// empty generator list yields the trivial group of dimension dim_if_empty.
MatrixGroupClosure closure(std::vector<GF2Matrix> generators,
                           uint64_t element_limit = kDefaultElementLimit,
                           int dim_if_empty = 1);

bool contains(const MatrixGroupClosure& group, const GF2Matrix& m);

}  // namespace coxeter2d

#include "coxeter2d/matrix_group.hpp"

#include <limits>
#include <stdexcept>

#include "coxeter2d/errors.hpp"

namespace coxeter2d {

namespace {
constexpr uint32_t kEmptySlot = std::numeric_limits<uint32_t>::max();
}

GF2Matrix phi(const Generator& gen, int n) {
  if (n < 1 || n + 1 > GF2Matrix::kMaxDim) {
    throw std::invalid_argument("phi: n must be in [1, 31]");
  }
  if (gen.family == Generator::Family::Named) {
    throw std::invalid_argument("phi: generator '" + gen.label() +
                                "' has no x/y tag");
  }
  if (gen.index < 1 || gen.index > n) {
    throw std::out_of_range("phi: generator index " + std::to_string(gen.index) +
                            " out of range for n=" + std::to_string(n));
  }
  const int j = gen.index;
  return gen.family == Generator::Family::X ? elementary(n + 1, j + 1, j)
                                            : elementary(n + 1, j, j + 1);
}

GF2Matrix eval_word(const Word& w, int n) {
  GF2Matrix acc = GF2Matrix::identity(n + 1);
  for (const Generator& g : w) acc = acc * phi(g, n);
  return acc;
}

HomomorphismReport check_homomorphism(const TwoDimCoxeterSystem& system, int n) {
  const GF2Matrix id = GF2Matrix::identity(n + 1);
  for (const Word& rel : system.relators()) {
    if (eval_word(rel, n) != id) {
      return HomomorphismReport{false, rel};
    }
  }
  return HomomorphismReport{true, std::nullopt};
}

bool MatrixGroupClosure::contains(const GF2Matrix& m) const {
  if (m.dim() != dim_) {
    throw std::invalid_argument("MatrixGroupClosure::contains: dimension mismatch");
  }
  const size_t mask = slots_.size() - 1;
  for (size_t p = m.hash() & mask;; p = (p + 1) & mask) {
    const uint32_t s = slots_[p];
    if (s == kEmptySlot) return false;
    if (elements_[s] == m) return true;
  }
}

void MatrixGroupClosure::rehash(size_t new_slot_count) {
  slots_.assign(new_slot_count, kEmptySlot);
  const size_t mask = new_slot_count - 1;
  for (size_t i = 0; i < elements_.size(); ++i) {
    size_t p = elements_[i].hash() & mask;
    while (slots_[p] != kEmptySlot) p = (p + 1) & mask;
    slots_[p] = static_cast<uint32_t>(i);
  }
}

bool MatrixGroupClosure::insert(const GF2Matrix& m, uint64_t element_limit) {
  if ((elements_.size() + 1) * 10 >= slots_.size() * 7) {
    rehash(slots_.empty() ? 1024 : slots_.size() * 2);
  }
  const size_t mask = slots_.size() - 1;
  size_t p = m.hash() & mask;
  while (slots_[p] != kEmptySlot) {
    if (elements_[slots_[p]] == m) return false;
    p = (p + 1) & mask;
  }
  if (elements_.size() >= element_limit) {
    throw ResourceLimitError("closure exceeded element_limit=" +
                             std::to_string(element_limit));
  }
  slots_[p] = static_cast<uint32_t>(elements_.size());
  elements_.push_back(m);
  return true;
}

MatrixGroupClosure closure(std::vector<GF2Matrix> generators, uint64_t element_limit,
                           int dim_if_empty) {
  if (element_limit == 0) {
    throw std::invalid_argument("closure: element_limit must be positive");
  }
  const int dim = generators.empty() ? dim_if_empty : generators.front().dim();
  for (const GF2Matrix& g : generators) {
    if (g.dim() != dim) {
      throw std::invalid_argument("closure: generators must share one dimension");
    }
    if (!is_invertible(g)) {
      throw std::invalid_argument("closure: generators must be invertible");
    }
  }
  MatrixGroupClosure c;
  c.dim_ = dim;
  c.generators_ = std::move(generators);
  c.insert(GF2Matrix::identity(dim), element_limit);
  // Right multiplication only: the generating set is closed under inverses
  // (involutions), so one-sided closure already yields the group.
  for (size_t i = 0; i < c.elements_.size(); ++i) {
    const GF2Matrix cur = c.elements_[i];  // copy; the vector may reallocate
    for (const GF2Matrix& g : c.generators_) {
      c.insert(cur * g, element_limit);
    }
  }
  return c;
}

bool contains(const MatrixGroupClosure& group, const GF2Matrix& m) {
  return group.contains(m);
}

}  // namespace coxeter2d

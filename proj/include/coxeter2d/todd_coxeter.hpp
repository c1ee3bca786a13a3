#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "coxeter2d/bigint.hpp"
#include "coxeter2d/coxeter_system.hpp"

namespace coxeter2d {

inline constexpr uint64_t kDefaultMaxCosets = 2'000'000;

// Completed coset action table: cosets x generators, total on all cosets,
// standardized by a BFS renumbering from coset 0 so identical inputs yield
// identical tables. Coset 0 is the subgroup itself. Every generator acts as
// an involution on the cosets.
class CosetTable {
 public:
  CosetTable() = default;

  uint64_t num_cosets() const { return num_cosets_; }
  bool complete() const { return complete_; }
  int num_generators() const { return static_cast<int>(gens_.size()); }
  const std::vector<Generator>& generators() const { return gens_; }

  uint32_t action(uint32_t coset, int gen) const;

  // Follows the word letter by letter; letters must belong to the table's
  // generator set.
  uint32_t trace(uint32_t coset, const Word& w) const;

  // "coset,<labels...>" header then one row per coset.
  std::string to_csv() const;

  friend bool operator==(const CosetTable&, const CosetTable&) = default;

 private:
  friend CosetTable coset_enumerate(const TwoDimCoxeterSystem&,
                                    const std::vector<Word>&, uint64_t);

  int column_of(const Generator& g) const;

  std::vector<Generator> gens_;
  std::vector<uint32_t> action_;  // row-major, num_cosets x num_generators
  uint64_t num_cosets_ = 0;
  bool complete_ = false;
};

// HLT-style Todd-Coxeter enumeration of the cosets of the subgroup generated
// by the given words inside the group presented by the system. Relators are
// scanned in relators() order, cosets in creation order, and coincidences are
// merged immediately through a union-find, so the result is deterministic.
// Throws ResourceLimitError if more than max_cosets cosets get defined before
// the table closes.
CosetTable coset_enumerate(const TwoDimCoxeterSystem& system,
                           const std::vector<Word>& subgroup_gens,
                           uint64_t max_cosets = kDefaultMaxCosets);

// Index of the trivial subgroup: the order of the presented group.
BigInt group_order(const TwoDimCoxeterSystem& system,
                   uint64_t max_cosets = kDefaultMaxCosets);

// Index of the subgroup generated by the subset (as length-1 words).
BigInt subgroup_index(const TwoDimCoxeterSystem& system,
                      const GeneratorSubset& subgroup_gens,
                      uint64_t max_cosets = kDefaultMaxCosets);

struct CosetRepReport {
  bool distinct = false;   // all words land on pairwise different cosets
  bool covering = false;   // the landed cosets exhaust the table
  uint64_t count = 0;      // number of distinct cosets reached
  uint64_t num_cosets = 0; // size of the table traced against
};

// Traces each representative word from coset 0 of the given table.
CosetRepReport check_reps(const CosetTable& table, const std::vector<Word>& reps);

// Enumerates the cosets of <h_subset> and traces the representative words.
CosetRepReport verify_coset_reps(const TwoDimCoxeterSystem& system,
                                 const GeneratorSubset& h_subset,
                                 const std::vector<Word>& reps,
                                 uint64_t max_cosets = kDefaultMaxCosets);

}  // namespace coxeter2d

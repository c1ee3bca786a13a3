#include "coxeter2d/todd_coxeter.hpp"

#include <limits>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "coxeter2d/errors.hpp"

namespace coxeter2d {

namespace {

constexpr uint32_t kUndef = std::numeric_limits<uint32_t>::max();

// HLT enumeration state. Every generator is an involution, so the table has
// one column per generator and each generator is its own inverse. Coincidences
// are merged immediately through a union-find whose representative is always
// the smallest coset in its class; coset 0 therefore never dies.
class Enumerator {
 public:
  Enumerator(int ngens, uint64_t max_cosets) : ngens_(ngens), max_cosets_(max_cosets) {}

  void run(const std::vector<std::vector<int>>& relators,
           const std::vector<std::vector<int>>& subgroup_words) {
    define_new();
    for (const auto& w : subgroup_words) scan_and_fill(0, w);
    for (uint64_t alpha = 0; alpha < parent_.size(); ++alpha) {
      if (!live(alpha)) continue;
      for (const auto& rel : relators) {
        scan_and_fill(static_cast<uint32_t>(alpha), rel);
        if (!live(alpha)) break;
      }
    }
  }

  uint64_t live_count() const { return live_; }

  // Renumbers the live cosets in BFS order from coset 0 and returns the
  // compact table.
  std::vector<uint32_t> standardized() {
    std::vector<uint32_t> newid(parent_.size(), kUndef);
    std::vector<uint32_t> bfs;
    bfs.reserve(live_);
    newid[0] = 0;
    bfs.push_back(0);
    for (size_t qi = 0; qi < bfs.size(); ++qi) {
      const uint32_t c = bfs[qi];
      for (int g = 0; g < ngens_; ++g) {
        const uint32_t raw = at(c, g);
        if (raw == kUndef) throw std::logic_error("coset table left incomplete");
        const uint32_t d = rep(raw);
        if (newid[d] == kUndef) {
          newid[d] = static_cast<uint32_t>(bfs.size());
          bfs.push_back(d);
        }
      }
    }
    if (bfs.size() != live_) throw std::logic_error("coset table not transitive");
    std::vector<uint32_t> out(static_cast<size_t>(live_) * ngens_);
    for (size_t c = 0; c < bfs.size(); ++c) {
      for (int g = 0; g < ngens_; ++g) {
        out[c * ngens_ + g] = newid[rep(at(bfs[c], g))];
      }
    }
    return out;
  }

 private:
  bool live(uint64_t c) const { return parent_[c] == c; }

  uint32_t& at(uint32_t c, int g) { return table_[static_cast<size_t>(c) * ngens_ + g]; }

  uint32_t rep(uint32_t c) {
    while (parent_[c] != c) {
      parent_[c] = parent_[parent_[c]];
      c = parent_[c];
    }
    return c;
  }

  uint32_t define_new() {
    if (parent_.size() >= max_cosets_) {
      throw ResourceLimitError("coset enumeration did not close within max_cosets=" +
                               std::to_string(max_cosets_));
    }
    const uint32_t c = static_cast<uint32_t>(parent_.size());
    parent_.push_back(c);
    table_.resize(table_.size() + ngens_, kUndef);
    ++live_;
    return c;
  }

  void merge(uint32_t a, uint32_t b, std::vector<uint32_t>& queue) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent_[b] = a;
    --live_;
    queue.push_back(b);
  }

  void coincidence(uint32_t a, uint32_t b) {
    std::vector<uint32_t> queue;
    merge(a, b, queue);
    for (size_t qi = 0; qi < queue.size(); ++qi) {
      const uint32_t dead = queue[qi];
      for (int g = 0; g < ngens_; ++g) {
        const uint32_t d = at(dead, g);
        if (d == kUndef) continue;
        at(dead, g) = kUndef;
        if (at(d, g) == dead) at(d, g) = kUndef;
        const uint32_t mu = rep(dead);
        const uint32_t nu = rep(d);
        if (at(mu, g) != kUndef) {
          merge(nu, at(mu, g), queue);
        } else if (at(nu, g) != kUndef) {
          merge(mu, at(nu, g), queue);
        } else {
          at(mu, g) = nu;
          at(nu, g) = mu;
        }
      }
    }
  }

  void scan_and_fill(uint32_t alpha, const std::vector<int>& w) {
    if (w.empty()) return;
    uint32_t f = rep(alpha);
    uint32_t b = f;
    long i = 0;
    long r = static_cast<long>(w.size()) - 1;
    while (true) {
      while (i <= r) {
        const uint32_t t = at(f, w[i]);
        if (t == kUndef) break;
        f = rep(t);
        ++i;
      }
      if (i > r) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (r >= i) {
        const uint32_t t = at(b, w[r]);
        if (t == kUndef) break;
        b = rep(t);
        --r;
      }
      if (r < i) {
        if (f != b) coincidence(f, b);
        return;
      }
      if (r == i) {
        at(f, w[i]) = b;
        at(b, w[i]) = f;
        return;
      }
      const uint32_t beta = define_new();
      at(f, w[i]) = beta;
      at(beta, w[i]) = f;
      f = beta;
      ++i;
    }
  }

  const int ngens_;
  const uint64_t max_cosets_;
  std::vector<uint32_t> table_;
  std::vector<uint32_t> parent_;
  uint64_t live_ = 0;
};

std::vector<int> word_to_columns(const TwoDimCoxeterSystem& system, const Word& w) {
  std::vector<int> out;
  out.reserve(w.size());
  for (const Generator& g : w) {
    auto p = system.find(g);
    if (!p) {
      throw std::invalid_argument("coset_enumerate: word letter '" + g.label() +
                                  "' is not a generator of the system");
    }
    out.push_back(*p);
  }
  return out;
}

void validate_table(const CosetTable& table,
                    const std::vector<std::vector<int>>& relators,
                    const std::vector<std::vector<int>>& subgroup_words) {
  const uint64_t n = table.num_cosets();
  const int m = table.num_generators();
  for (uint64_t c = 0; c < n; ++c) {
    for (int g = 0; g < m; ++g) {
      const uint32_t d = table.action(static_cast<uint32_t>(c), g);
      if (d >= n || table.action(d, g) != c) {
        throw std::logic_error("coset table failed the involution check");
      }
    }
  }
  auto trace_cols = [&](uint32_t start, const std::vector<int>& cols) {
    uint32_t c = start;
    for (int g : cols) c = table.action(c, g);
    return c;
  };
  for (const auto& rel : relators) {
    for (uint64_t c = 0; c < n; ++c) {
      if (trace_cols(static_cast<uint32_t>(c), rel) != c) {
        throw std::logic_error("coset table failed a relator trace");
      }
    }
  }
  for (const auto& w : subgroup_words) {
    if (trace_cols(0, w) != 0) {
      throw std::logic_error("coset table does not fix the subgroup coset");
    }
  }
}

}  // namespace

uint32_t CosetTable::action(uint32_t coset, int gen) const {
  if (coset >= num_cosets_ || gen < 0 || gen >= num_generators()) {
    throw std::out_of_range("CosetTable::action: index out of range");
  }
  return action_[static_cast<size_t>(coset) * num_generators() + gen];
}

int CosetTable::column_of(const Generator& g) const {
  for (int i = 0; i < num_generators(); ++i) {
    if (gens_[i] == g) return i;
  }
  throw std::invalid_argument("CosetTable::trace: letter '" + g.label() +
                              "' is not a generator of the table");
}

uint32_t CosetTable::trace(uint32_t coset, const Word& w) const {
  if (coset >= num_cosets_) {
    throw std::out_of_range("CosetTable::trace: coset out of range");
  }
  uint32_t c = coset;
  for (const Generator& g : w) c = action(c, column_of(g));
  return c;
}

std::string CosetTable::to_csv() const {
  std::ostringstream os;
  os << "coset";
  for (const auto& g : gens_) os << ',' << g.label();
  os << '\n';
  for (uint64_t c = 0; c < num_cosets_; ++c) {
    os << c;
    for (int g = 0; g < num_generators(); ++g) {
      os << ',' << action_[static_cast<size_t>(c) * num_generators() + g];
    }
    os << '\n';
  }
  return os.str();
}

CosetTable coset_enumerate(const TwoDimCoxeterSystem& system,
                           const std::vector<Word>& subgroup_gens,
                           uint64_t max_cosets) {
  if (max_cosets == 0) {
    throw std::invalid_argument("coset_enumerate: max_cosets must be positive");
  }
  std::vector<std::vector<int>> subgroup_words;
  subgroup_words.reserve(subgroup_gens.size());
  for (const Word& w : subgroup_gens) subgroup_words.push_back(word_to_columns(system, w));

  std::vector<std::vector<int>> relator_words;
  for (const Word& w : system.relators()) relator_words.push_back(word_to_columns(system, w));

  Enumerator e(system.num_generators(), max_cosets);
  e.run(relator_words, subgroup_words);

  CosetTable table;
  table.gens_ = system.generators();
  table.num_cosets_ = e.live_count();
  table.action_ = e.standardized();
  table.complete_ = true;
  validate_table(table, relator_words, subgroup_words);
  return table;
}

BigInt group_order(const TwoDimCoxeterSystem& system, uint64_t max_cosets) {
  return BigInt(coset_enumerate(system, {}, max_cosets).num_cosets());
}

BigInt subgroup_index(const TwoDimCoxeterSystem& system,
                      const GeneratorSubset& subgroup_gens, uint64_t max_cosets) {
  std::vector<Word> words;
  words.reserve(subgroup_gens.members().size());
  for (const Generator& g : subgroup_gens.members()) words.push_back(Word{g});
  return BigInt(coset_enumerate(system, words, max_cosets).num_cosets());
}

CosetRepReport check_reps(const CosetTable& table, const std::vector<Word>& reps) {
  if (reps.empty()) {
    throw std::invalid_argument("check_reps: representative list must be nonempty");
  }
  std::unordered_set<uint32_t> landed;
  bool distinct = true;
  for (const Word& w : reps) {
    if (!landed.insert(table.trace(0, w)).second) distinct = false;
  }
  CosetRepReport report;
  report.distinct = distinct;
  report.covering = landed.size() == table.num_cosets();
  report.count = landed.size();
  report.num_cosets = table.num_cosets();
  return report;
}

CosetRepReport verify_coset_reps(const TwoDimCoxeterSystem& system,
                                 const GeneratorSubset& h_subset,
                                 const std::vector<Word>& reps, uint64_t max_cosets) {
  std::vector<Word> words;
  words.reserve(h_subset.members().size());
  for (const Generator& g : h_subset.members()) words.push_back(Word{g});
  return check_reps(coset_enumerate(system, words, max_cosets), reps);
}

}  // namespace coxeter2d

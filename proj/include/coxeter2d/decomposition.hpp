#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace coxeter2d {

// Ordered sequence of positive integer parts with a fixed sum (a composition).
// Part order matters: the block structure it induces is not permutation
// invariant.
class Decomposition {
 public:
  explicit Decomposition(std::vector<int> parts);

  // Comma-separated positive integers, e.g. "2,1,1".
  static Decomposition parse(std::string_view text);

  const std::vector<int>& parts() const { return parts_; }
  int total() const { return total_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int last() const { return parts_.back(); }

  std::string str() const;

  friend bool operator==(const Decomposition&, const Decomposition&) = default;
  friend auto operator<=>(const Decomposition&, const Decomposition&) = default;

 private:
  std::vector<int> parts_;
  int total_ = 0;
};

// All compositions of the given total, parts in the order produced by taking
// the first part 1..total and recursing on the remainder.
std::vector<Decomposition> compositions_of(int total);

// Proper partial sums lambda_1, lambda_1+lambda_2, ..., excluding the total;
// empty for a single part.
std::vector<int> stopovers(const Decomposition& lambda);

// (mu_1, ..., mu_{m-1}, mu_m - 1, 1); requires the last part to be >= 2.
Decomposition mu_prime(const Decomposition& mu);

}  // namespace coxeter2d

#include "coxeter2d/decomposition.hpp"

#include <charconv>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace coxeter2d {

Decomposition::Decomposition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) {
    throw std::invalid_argument("Decomposition: needs at least one part");
  }
  for (int p : parts_) {
    if (p < 1) {
      throw std::invalid_argument("Decomposition: parts must be positive, got " +
                                  std::to_string(p));
    }
  }
  total_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Decomposition Decomposition::parse(std::string_view text) {
  std::vector<int> parts;
  size_t start = 0;
  while (start <= text.size()) {
    size_t end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view token = text.substr(start, end - start);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size() || token.empty()) {
      throw std::invalid_argument("Decomposition: cannot parse part '" +
                                  std::string(token) + "' in '" + std::string(text) + "'");
    }
    parts.push_back(value);
    if (end == text.size()) break;
    start = end + 1;
  }
  return Decomposition(std::move(parts));
}

std::string Decomposition::str() const {
  std::ostringstream os;
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) os << ',';
    os << parts_[i];
  }
  return os.str();
}

namespace {

void build_compositions(int remaining, std::vector<int>& prefix,
                        std::vector<Decomposition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int first = 1; first <= remaining; ++first) {
    prefix.push_back(first);
    build_compositions(remaining - first, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Decomposition> compositions_of(int total) {
  if (total < 1) throw std::invalid_argument("compositions_of: total must be positive");
  std::vector<Decomposition> out;
  std::vector<int> prefix;
  build_compositions(total, prefix, out);
  return out;
}

std::vector<int> stopovers(const Decomposition& lambda) {
  std::vector<int> out;
  int sum = 0;
  for (int i = 0; i + 1 < lambda.length(); ++i) {
    sum += lambda.parts()[i];
    out.push_back(sum);
  }
  return out;
}

Decomposition mu_prime(const Decomposition& mu) {
  if (mu.last() < 2) {
    throw std::invalid_argument("mu_prime: last part must be >= 2, got " +
                                std::to_string(mu.last()));
  }
  std::vector<int> parts = mu.parts();
  parts.back() -= 1;
  parts.push_back(1);
  return Decomposition(std::move(parts));
}

}  // namespace coxeter2d

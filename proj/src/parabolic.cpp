#include "coxeter2d/parabolic.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

#include "coxeter2d/errors.hpp"

namespace coxeter2d {

namespace {

// allowed[r] has bit c set iff entry (r+1, c+1) may be nonzero: at or above
// the lambda block diagonal and at or below the mu block diagonal.
std::vector<uint32_t> allowed_row_masks(const Decomposition& lambda,
                                        const Decomposition& mu) {
  const int t = lambda.total();
  std::vector<int> bl(t), bm(t);
  int pos = 0;
  for (int b = 0; b < lambda.length(); ++b) {
    for (int k = 0; k < lambda.parts()[b]; ++k) bl[pos++] = b;
  }
  pos = 0;
  for (int b = 0; b < mu.length(); ++b) {
    for (int k = 0; k < mu.parts()[b]; ++k) bm[pos++] = b;
  }
  std::vector<uint32_t> allowed(t, 0);
  for (int r = 0; r < t; ++r) {
    for (int c = 0; c < t; ++c) {
      if (bl[r] <= bl[c] && bm[c] <= bm[r]) allowed[r] |= 1u << c;
    }
  }
  return allowed;
}

void check_totals(const Decomposition& lambda, const Decomposition& mu,
                  const char* where) {
  if (lambda.total() != mu.total()) {
    throw std::invalid_argument(std::string(where) + ": totals differ (" +
                                lambda.str() + " vs " + mu.str() + ")");
  }
}

BigInt order_recursive_impl(std::vector<int> lam, std::vector<int> mu) {
  if (lam.empty()) return 1;
  if (mu.back() > lam.back()) lam.swap(mu);

  static std::map<std::pair<std::vector<int>, std::vector<int>>, BigInt> memo;
  static std::mutex memo_mutex;
  const auto key = std::make_pair(lam, mu);
  {
    std::lock_guard<std::mutex> lock(memo_mutex);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
  }

  const int ll = lam.back();
  const int mm = mu.back();
  std::vector<int> lam2 = lam;
  lam2.back() -= mm;
  if (lam2.back() == 0) lam2.pop_back();
  std::vector<int> mu2 = mu;
  mu2.pop_back();

  const BigInt result = (BigInt(1) << (mm * (ll - mm))) * gl_order(mm) *
                        order_recursive_impl(std::move(lam2), std::move(mu2));
  {
    std::lock_guard<std::mutex> lock(memo_mutex);
    memo.emplace(key, result);
  }
  return result;
}

}  // namespace

bool parabolic_member(const GF2Matrix& m, const Decomposition& lambda,
                      const Decomposition& mu) {
  check_totals(lambda, mu, "parabolic_member");
  if (m.dim() != lambda.total()) {
    throw std::invalid_argument("parabolic_member: matrix dimension " +
                                std::to_string(m.dim()) + " does not match total " +
                                std::to_string(lambda.total()));
  }
  const auto allowed = allowed_row_masks(lambda, mu);
  for (int r = 0; r < m.dim(); ++r) {
    if (m.row_bits(r + 1) & ~allowed[r]) return false;
  }
  return is_invertible(m);
}

BigInt order_recursive(const Decomposition& lambda, const Decomposition& mu) {
  check_totals(lambda, mu, "order_recursive");
  return order_recursive_impl(lambda.parts(), mu.parts());
}

BigInt order_bruteforce(const Decomposition& lambda, const Decomposition& mu,
                        int enumeration_cap) {
  check_totals(lambda, mu, "order_bruteforce");
  const int t = lambda.total();
  if (t > enumeration_cap) {
    throw ResourceLimitError("order_bruteforce: total " + std::to_string(t) +
                             " exceeds the enumeration cap " +
                             std::to_string(enumeration_cap));
  }
  uint64_t count = 0;
  std::vector<uint32_t> rows(t);
  const uint64_t codes = uint64_t(1) << (t * t);
  const uint32_t row_mask = (1u << t) - 1u;
  for (uint64_t code = 0; code < codes; ++code) {
    for (int r = 0; r < t; ++r) rows[r] = (code >> (r * t)) & row_mask;
    if (parabolic_member(GF2Matrix::from_row_bits(t, rows), lambda, mu)) ++count;
  }
  return BigInt(count);
}

std::vector<Word> coset_rep_words(const Decomposition& lambda, const Decomposition& mu) {
  check_totals(lambda, mu, "coset_rep_words");
  const int mm = mu.last();
  const int ll = lambda.last();
  const int n = lambda.total() - 1;

  std::vector<Word> reps;
  reps.push_back({});
  if (mm >= 2 && mm <= ll) {
    for (int k = n; k >= n - mm + 2; --k) {
      const int len = n - k + 1;
      for (uint32_t eps = 0; eps < (1u << len); ++eps) {
        Word w;
        for (int j = n; j >= k; --j) {
          w.push_back(Generator::y(j));
          if ((eps >> (n - j)) & 1u) w.push_back(Generator::x(j));
        }
        reps.push_back(std::move(w));
      }
    }
  } else if (mm >= 2 && ll == 1) {
    for (int l = n; l >= n - mm + 2; --l) {
      const int tail = n - l;
      for (uint32_t pick = 0; pick < (1u << tail); ++pick) {
        Word w;
        for (int j = n; j >= l; --j) w.push_back(Generator::y(j));
        for (int t = 0; t < tail; ++t) {
          if ((pick >> t) & 1u) w.push_back(Generator::y(l + 1 + t));
        }
        reps.push_back(std::move(w));
      }
    }
  } else {
    throw HypothesisError(
        "coset_rep_words: representatives are defined for 1 < mu_m <= lambda_l "
        "or for lambda_l = 1 with mu_m >= 2; got lambda=(" + lambda.str() +
        "), mu=(" + mu.str() + ")");
  }
  return reps;
}

std::string verdict_str(Verdict v) {
  switch (v) {
    case Verdict::Pass:
      return "pass";
    case Verdict::Fail:
      return "fail";
    case Verdict::Skipped:
      return "skipped";
  }
  return "fail";
}

VerificationReport verify_theorem(const Decomposition& lambda, const Decomposition& mu,
                                  const VerifyOptions& options) {
  check_totals(lambda, mu, "verify_theorem");
  VerificationReport report{lambda, mu, order_recursive(lambda, mu)};
  const int total = lambda.total();

  bool resource_skip = false;
  std::string reason;

  if (options.run_bruteforce && total <= options.bruteforce_cap) {
    report.bruteforce_order = order_bruteforce(lambda, mu, options.bruteforce_cap);
  }

  // The presentation and image routes need the generator subset inside
  // a2n(total - 1), which only exists for totals >= 2. For total 1 both P's
  // are the trivial GL_1 and the remaining routes already cover it.
  if (total >= 2) {
    const GeneratorSubset subset = generator_subset(lambda, mu);
    const int n = total - 1;
    if (options.run_presentation) {
      try {
        report.presentation_order =
            group_order(restricted(a2n(n), subset), options.max_cosets);
      } catch (const ResourceLimitError& e) {
        resource_skip = true;
        reason = e.what();
      }
    }
    if (options.run_image) {
      try {
        std::vector<GF2Matrix> gens;
        gens.reserve(subset.members().size());
        for (const Generator& g : subset.members()) gens.push_back(phi(g, n));
        const MatrixGroupClosure cl = closure(std::move(gens), options.element_limit, n + 1);
        report.closure_order = cl.order();

        bool inside = true;
        for (const GF2Matrix& m : cl.elements()) {
          if (!parabolic_member(m, lambda, mu)) {
            inside = false;
            break;
          }
        }
        if (options.run_bruteforce && total <= options.bruteforce_cap) {
          // Full enumeration available: containment plus equal counts is set
          // equality.
          report.image_check = inside && report.bruteforce_order &&
                               cl.order() == *report.bruteforce_order;
        } else {
          report.image_check = inside && cl.order() == report.recursive_order;
        }
      } catch (const ResourceLimitError& e) {
        resource_skip = true;
        reason = e.what();
      }
    }
  }

  if (resource_skip) {
    report.verdict = Verdict::Skipped;
    report.reason = reason;
    return report;
  }

  bool ok = true;
  if (report.bruteforce_order && *report.bruteforce_order != report.recursive_order) ok = false;
  if (report.presentation_order && *report.presentation_order != report.recursive_order) ok = false;
  if (report.closure_order && *report.closure_order != report.recursive_order) ok = false;
  if (report.image_check && !*report.image_check) ok = false;
  report.verdict = ok ? Verdict::Pass : Verdict::Fail;
  return report;
}

}  // namespace coxeter2d

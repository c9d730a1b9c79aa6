#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "homacm/bundle_datum.hpp"

namespace homacm {

/// lambda = lambda0 + twist * varpi with m(lambda0) in (0, 1].
struct CanonicalBundle {
  WeightVector lambda0;
  long twist = 0;

  bool operator==(const CanonicalBundle&) const = default;
};

CanonicalBundle canonical_twist(const PolarizedSpace& ps, const BundleWeight& lambda);
bool is_canonical(const PolarizedSpace& ps, const WeightVector& lambda);

class CandidateCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct EnumerationOptions {
  /// Abort once more than this many candidates have been generated.
  std::uint64_t cap = 10'000'000;
  /// Also bound each coordinate by every root of phi_plus_X, not only the sum of simple roots.
  bool tight = false;
};

/// 10^7 unless HOMACM_CAP holds a positive integer.
std::uint64_t default_candidate_cap();

/// Visits, in lexicographic order, every canonical weight with
/// sum_i (a_i + 1) s_i <= (dim X + 1) sum_{i in I} n_i s_i.
/// Throws CandidateCapExceeded past opts.cap.
void for_each_candidate(const PolarizedSpace& ps, const EnumerationOptions& opts,
                        const std::function<void(const WeightVector&)>& visit);
std::vector<WeightVector> candidate_box(const PolarizedSpace& ps, const EnumerationOptions& opts = {});

/// OpenMP filter over the candidate box; output sorted lexicographically.
std::vector<CanonicalBundle> enumerate_acm(const PolarizedSpace& ps, const EnumerationOptions& opts = {});
std::vector<WeightVector> enumerate_ulrich(const PolarizedSpace& ps, const EnumerationOptions& opts = {});

/// Single-threaded reference implementations of the two filters.
std::vector<CanonicalBundle> enumerate_acm_serial(const PolarizedSpace& ps, const EnumerationOptions& opts = {});
std::vector<WeightVector> enumerate_ulrich_serial(const PolarizedSpace& ps, const EnumerationOptions& opts = {});

}  // namespace homacm

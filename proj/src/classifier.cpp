#include "homacm/classifier.hpp"

#include <omp.h>

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <string>

namespace homacm {

namespace {

constexpr size_t kChunk = 1 << 14;

// Upper bounds a_i + 1 <= cap_i derived from every alpha in phi_plus_X:
// (a_i + 1) l_i s_i <= (lambda + rho, alpha) <= (dim + 1)(varpi, alpha).
std::vector<std::int64_t> tight_caps(const PolarizedSpace& ps) {
  const RootSystem& rs = ps.roots();
  const int n = rs.rank();
  std::vector<std::int64_t> caps(n, std::numeric_limits<std::int64_t>::max());
  const auto& roots = ps.phi_plus_X();
  const std::int64_t dim1 = ps.dimension() + 1;
  for (size_t k = 0; k < roots.size(); ++k)
    for (int i = 0; i < n; ++i)
      if (roots[k].coeffs[i] > 0)
        caps[i] = std::min(caps[i], dim1 * ps.varpi_pairings()[k] /
                                        (static_cast<std::int64_t>(roots[k].coeffs[i]) * rs.half_lengths()[i]));
  return caps;
}

bool within_all_roots(const PolarizedSpace& ps, const WeightVector& w) {
  const RootSystem& rs = ps.roots();
  const WeightVector shifted = w + WeightVector::rho(rs.rank());
  const std::int64_t dim1 = ps.dimension() + 1;
  const auto& roots = ps.phi_plus_X();
  for (size_t k = 0; k < roots.size(); ++k)
    if (rs.pairing(shifted, roots[k]) > dim1 * ps.varpi_pairings()[k]) return false;
  return true;
}

// Collects candidates in chunks and hands each chunk to flush().
template <class Flush>
void chunked(const PolarizedSpace& ps, const EnumerationOptions& opts, Flush flush) {
  std::vector<WeightVector> buffer;
  buffer.reserve(kChunk);
  for_each_candidate(ps, opts, [&](const WeightVector& w) {
    buffer.push_back(w);
    if (buffer.size() == kChunk) {
      flush(buffer);
      buffer.clear();
    }
  });
  if (!buffer.empty()) flush(buffer);
}

template <class Pred>
std::vector<WeightVector> parallel_filter(const PolarizedSpace& ps, const EnumerationOptions& opts, Pred keep) {
  std::vector<WeightVector> out;
  chunked(ps, opts, [&](const std::vector<WeightVector>& chunk) {
    std::vector<char> flags(chunk.size(), 0);
    const auto count = static_cast<std::int64_t>(chunk.size());
#pragma omp parallel for schedule(dynamic, 64)
    for (std::int64_t k = 0; k < count; ++k) flags[k] = keep(chunk[k]) ? 1 : 0;
    for (size_t k = 0; k < chunk.size(); ++k)
      if (flags[k]) out.push_back(chunk[k]);
  });
  return out;
}

template <class Pred>
std::vector<WeightVector> serial_filter(const PolarizedSpace& ps, const EnumerationOptions& opts, Pred keep) {
  std::vector<WeightVector> out;
  for_each_candidate(ps, opts, [&](const WeightVector& w) {
    if (keep(w)) out.push_back(w);
  });
  return out;
}

std::vector<CanonicalBundle> as_canonical(std::vector<WeightVector> ws) {
  std::sort(ws.begin(), ws.end());
  std::vector<CanonicalBundle> out;
  out.reserve(ws.size());
  for (auto& w : ws) out.push_back({std::move(w), 0});
  return out;
}

}  // namespace

bool is_canonical(const PolarizedSpace& ps, const WeightVector& lambda) {
  const Rational m = min_closed_form(ps, lambda);
  return m > Rational(0) && m <= Rational(1);
}

CanonicalBundle canonical_twist(const PolarizedSpace& ps, const BundleWeight& lambda) {
  const long t = static_cast<long>(ceil_of(min_closed_form(ps, lambda.weight()))) - 1;
  return {lambda.weight() - t * ps.varpi(), t};
}

std::uint64_t default_candidate_cap() {
  if (const char* env = std::getenv("HOMACM_CAP")) {
    try {
      size_t used = 0;
      const long long v = std::stoll(env, &used);
      if (used == std::string(env).size() && v > 0) return static_cast<std::uint64_t>(v);
    } catch (const std::exception&) {
    }
  }
  return 10'000'000;
}

void for_each_candidate(const PolarizedSpace& ps, const EnumerationOptions& opts,
                        const std::function<void(const WeightVector&)>& visit) {
  const RootSystem& rs = ps.roots();
  const int n = rs.rank();
  const auto& s = rs.half_lengths();
  std::int64_t varpi_sum = 0;
  for (int i = 1; i <= n; ++i) varpi_sum += static_cast<std::int64_t>(ps.n_at(i)) * s[i - 1];
  const std::int64_t budget = (ps.dimension() + 1) * varpi_sum;

  // suffix_min[i] = sum_{j >= i} s_j: what the remaining coordinates need at a_j = 0.
  std::vector<std::int64_t> suffix_min(n + 1, 0);
  for (int i = n - 1; i >= 0; --i) suffix_min[i] = suffix_min[i + 1] + s[i];
  std::vector<std::int64_t> caps;
  if (opts.tight) caps = tight_caps(ps);

  WeightVector w = WeightVector::zero(n);
  std::uint64_t generated = 0;
  // Recursion over coordinates with the remaining budget.
  std::function<void(int, std::int64_t)> rec = [&](int i, std::int64_t remaining) {
    if (i == n) {
      if (!is_canonical(ps, w)) return;
      if (opts.tight && !within_all_roots(ps, w)) return;
      if (++generated > opts.cap)
        throw CandidateCapExceeded("candidate cap of " + std::to_string(opts.cap) + " exceeded for " +
                                   rs.type().to_string() + "; raise --cap or HOMACM_CAP");
      visit(w);
      return;
    }
    std::int64_t hi = (remaining - suffix_min[i + 1]) / s[i] - 1;  // max a_i
    if (opts.tight) hi = std::min(hi, caps[i] - 1);
    if (ps.contains(i + 1)) hi = std::min<std::int64_t>(hi, std::numeric_limits<int>::max() - 1);
    for (std::int64_t a = 0; a <= hi; ++a) {
      w.coeffs[i] = static_cast<int>(a);
      rec(i + 1, remaining - (a + 1) * s[i]);
    }
    w.coeffs[i] = 0;
  };
  rec(0, budget);
}

std::vector<WeightVector> candidate_box(const PolarizedSpace& ps, const EnumerationOptions& opts) {
  std::vector<WeightVector> out;
  for_each_candidate(ps, opts, [&](const WeightVector& w) { out.push_back(w); });
  return out;
}

std::vector<CanonicalBundle> enumerate_acm(const PolarizedSpace& ps, const EnumerationOptions& opts) {
  return as_canonical(parallel_filter(ps, opts, [&](const WeightVector& w) { return is_acm(ps, BundleWeight(ps, w)); }));
}

std::vector<WeightVector> enumerate_ulrich(const PolarizedSpace& ps, const EnumerationOptions& opts) {
  auto out = parallel_filter(ps, opts, [&](const WeightVector& w) { return is_ulrich(ps, BundleWeight(ps, w)); });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<CanonicalBundle> enumerate_acm_serial(const PolarizedSpace& ps, const EnumerationOptions& opts) {
  return as_canonical(serial_filter(ps, opts, [&](const WeightVector& w) { return is_acm(ps, BundleWeight(ps, w)); }));
}

std::vector<WeightVector> enumerate_ulrich_serial(const PolarizedSpace& ps, const EnumerationOptions& opts) {
  auto out = serial_filter(ps, opts, [&](const WeightVector& w) { return is_ulrich(ps, BundleWeight(ps, w)); });
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace homacm

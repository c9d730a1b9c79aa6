#include "homacm/criteria.hpp"

#include <algorithm>
#include <cstdlib>

namespace homacm {

namespace {

int ambient_n(LieType type) { return type.family == Family::A ? type.rank + 1 : type.rank; }

void check_I(LieType type, const std::vector<int>& I) {
  type.validate();
  if (I.empty()) throw InvalidInput("index set I must be non-empty");
  for (size_t k = 0; k < I.size(); ++k) {
    if (I[k] < 1 || I[k] > type.rank)
      throw InvalidInput("index " + std::to_string(I[k]) + " in I is outside 1.." + std::to_string(type.rank));
    if (k > 0 && I[k] <= I[k - 1]) throw InvalidInput("I must be strictly increasing");
  }
}

// d(0) = 0, d(s + 1) = n.
struct Flag {
  std::vector<int> d;
  int s;
  Flag(const std::vector<int>& I, int n) : s(static_cast<int>(I.size())) {
    d.push_back(0);
    d.insert(d.end(), I.begin(), I.end());
    d.push_back(n);
  }
  int operator()(int i) const { return d[i]; }
};

bool between(long lo, long x, long hi) { return lo <= x && x <= hi; }

}  // namespace

MuNu mu_nu(LieType type, const std::vector<int>& I, const WeightVector& lambda) {
  check_I(type, I);
  if (lambda.rank() != type.rank) throw InvalidInput("weight " + lambda.to_string() + " has the wrong length");
  const Flag d(I, ambient_n(type));
  const auto a = [&](int k) { return lambda.coeffs[k - 1]; };
  MuNu r;
  r.mu = a(d(1)) + 1;
  for (int i = 2; i <= d.s; ++i) r.mu = std::min(r.mu, a(d(i)) + 1);
  r.nu = -1;
  for (int i = 1; i <= d.s; ++i)
    if (a(d(i)) + 1 == r.mu) r.nu = std::max(r.nu, d(i + 1) - d(i - 1) - 1);
  return r;
}

bool sufficient_acm(LieType type, const std::vector<int>& I, int m, const WeightVector& lambda) {
  check_I(type, I);
  const int n = type.rank;
  const std::string tag = type.to_string() + ": ";
  if (type.family != Family::B && type.family != Family::C && type.family != Family::D)
    throw InvalidInput(tag + "sufficient conditions cover B, C and D only");
  if (lambda.rank() != n) throw InvalidInput(tag + "weight " + lambda.to_string() + " has the wrong length");
  const Flag d(I, n);
  const int s = d.s;
  const auto a = [&](int k) { return lambda.coeffs[k - 1]; };
  if (type.family == Family::B && d(s) > n - 1) throw InvalidInput(tag + "B requires d_s <= n-1");
  if (type.family == Family::D && d(s) > n - 2) throw InvalidInput(tag + "D requires d_s <= n-2");
  if (m < 1 || m > s + 1) throw InvalidInput(tag + "block index m must lie in 1.." + std::to_string(s + 1));
  if (type.family == Family::C && m == s + 1 && d(s) == n)
    throw InvalidInput(tag + "block m = s+1 is empty when d_s = n");

  // Support: I plus the block (d_{m-1}, d_m].
  const int block_lo = d(m - 1) + 1, block_hi = d(m);
  for (int k = 1; k <= n; ++k) {
    const bool on_I = std::find(I.begin(), I.end(), k) != I.end();
    if (!on_I && !(block_lo <= k && k <= block_hi) && a(k) != 0)
      throw InvalidInput(tag + "a_" + std::to_string(k) + " = " + std::to_string(a(k)) +
                         " lies outside I and the block (" + std::to_string(block_lo - 1) + ", " +
                         std::to_string(block_hi) + "]");
  }

  const MuNu mn = mu_nu(type, I, lambda);
  for (int i = 1; i <= s; ++i)
    for (int j = i + 1; j <= s; ++j)
      if (std::abs(a(d(i)) - a(d(j))) > mn.nu) return false;

  const auto window = [&](int lo, int hi, int bound) {
    for (int j = lo; j <= hi; ++j)
      if (!between(0, a(j), bound)) return false;
    return true;
  };

  if (m == 1) return window(block_lo, block_hi - 1, d(2) - d(1) - 1);
  if (m <= s) return window(block_lo, block_hi - 1, std::min(d(m + 1) - d(m), d(m - 1) - d(m - 2)) - 1);

  const int w = d(s) - d(s - 1);
  switch (type.family) {
    case Family::B:
      return window(block_lo, n - 1, w - 1) && between(0, a(n), 2 * w - 1);
    case Family::C:
      return window(block_lo, n - 1, w - 1) && between(0, a(n), w - 1);
    default: {
      if (!window(block_lo, n - 2, w - 1)) return false;
      const long p = a(n - 1), q = a(n);
      return (between(0, p, w - 1) && between(0, q - p, 2 * w - 1)) ||
             (between(0, q, w - 1) && between(0, p - q, 2 * w - 1));
    }
  }
}

LieType line_bundle_space(Family family, int n) {
  return LieType{family, family == Family::A ? n - 1 : n};
}

bool line_bundle_acm_closed(Family family, int n, int d1, int d2, long a1, long a2) {
  const LieType type = line_bundle_space(family, n);
  type.validate();
  const int top = family == Family::A ? n - 1 : n;
  if (!(1 <= d1 && d1 < d2 && d2 <= top))
    throw InvalidInput(type.to_string() + ": need 1 <= d1 < d2 <= " + std::to_string(top) + ", got (" +
                       std::to_string(d1) + ", " + std::to_string(d2) + ")");
  const long up = a2 - a1;  // a2 >= a1 branch
  const long down = a1 - a2;
  const auto verdict = [&](long up_bound, long down_bound) {
    return between(0, up, up_bound) || (down > 0 && down <= down_bound);
  };
  switch (family) {
    case Family::A:
      return verdict(std::min(n, d1 + d2) - 1, std::min(n, 2 * n - d1 - d2) - 1);
    case Family::B:
      if (d2 <= n - 1)
        return verdict(std::min(d1 + d2, 2 * n - d1) - 1, std::min(2 * n - d2, 4 * n - 2 * (d1 + d2)) - 1);
      return verdict(std::min(2 * d1 + n, 2 * n - d1) - 1, std::min(3 * (n - d1), 2 * n) - 1);
    case Family::C:
      if (d2 <= n - 1)
        return verdict(std::min(d1 + d2, 2 * n - (d1 - 1)) - 1,
                       std::min(2 * n - (d2 - 1), 4 * n - 2 * (d1 + d2 - 1)) - 1);
      return verdict(std::min(d1 + n - 1, 2 * n - d1), std::min(2 * (n - d1) + 1, n));
    case Family::D:
      if (d2 <= n - 2)
        return verdict(std::min(d1 + d2, 2 * n - (d1 + 1)) - 1,
                       std::min(2 * n - (d2 + 1), 4 * n - 2 * (d1 + d2 + 1)) - 1);
      if (d1 == n - 1) return std::labs(a1 - a2) <= 2L * n - 3;
      return verdict(std::min(2 * d1 + n, 2 * n - d1 - 1) - 1, std::min(3 * (n - d1 - 1), 2 * (n - 1)) - 1);
    default:
      throw InvalidInput(type.to_string() + ": line-bundle criteria cover A, B, C and D only");
  }
}

std::vector<UniversalWeight> universal_weights(LieType type, const std::vector<int>& I) {
  check_I(type, I);
  const int n = type.rank;
  if (type.family != Family::B && type.family != Family::C && type.family != Family::D)
    throw InvalidInput(type.to_string() + ": universal bundles are catalogued for B, C and D only");
  const Flag d(I, n);
  if (type.family == Family::B && d(d.s) > n - 1) throw InvalidInput(type.to_string() + ": B requires d_s <= n-1");
  if (type.family == Family::D && d(d.s) > n - 2) throw InvalidInput(type.to_string() + ": D requires d_s <= n-2");
  // lambda_k with lambda_0 = 0.
  const auto lam = [&](int k) {
    WeightVector w = WeightVector::zero(n);
    if (k >= 1) w.coeffs[k - 1] = 1;
    return w;
  };
  const auto H = [](int k) { return "H_" + std::to_string(k); };

  std::vector<UniversalWeight> out;
  for (int i = 1; i <= d.s; ++i) {
    const std::string piece = i == 1 ? H(d(1)) : H(d(i)) + "/" + H(d(i - 1));
    out.push_back({piece, lam(d(i) - 1) - lam(d(i))});
    out.push_back({"(" + piece + ")^*", lam(d(i - 1) + 1) - lam(d(i - 1))});
  }
  const int ds = d(d.s);
  const std::string perp = "H_" + std::to_string(ds) + "^perp/" + H(ds);
  if (type.family == Family::B && ds == n - 1) {
    out.push_back({perp, 2 * lam(n) - lam(n - 1)});
  } else if (type.family == Family::D && ds == n - 2) {
    out.push_back({perp, lam(n) + lam(n - 1) - lam(n - 2)});
  } else if (!(type.family == Family::C && ds == n)) {
    out.push_back({perp, lam(ds + 1) - lam(ds)});
  }
  return out;
}

}  // namespace homacm

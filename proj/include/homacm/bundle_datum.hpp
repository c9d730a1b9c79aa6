#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <variant>
#include <vector>

#include "homacm/root_system.hpp"

namespace homacm {

/// Always reduced, denominator > 0.
using Rational = boost::rational<std::int64_t>;
using BigInt = boost::multiprecision::cpp_int;

std::int64_t floor_of(const Rational& q);
std::int64_t ceil_of(const Rational& q);

/// X = G/P_I together with the very ample weight sum_{i in I} n_i lambda_i.
class PolarizedSpace {
 public:
  /// I is 1-based and strictly increasing; an empty polarization means n_i = 1.
  PolarizedSpace(std::shared_ptr<const RootSystem> rs, std::vector<int> I,
                 std::vector<int> polarization = {});

  const RootSystem& roots() const { return *rs_; }
  const std::shared_ptr<const RootSystem>& root_system_ptr() const { return rs_; }
  const std::vector<int>& I() const { return I_; }
  const std::vector<int>& polarization() const { return pol_; }
  bool contains(int i) const { return n_at_[i - 1] > 0; }
  /// n_i for i in I, 0 otherwise (1-based).
  int n_at(int i) const { return n_at_[i - 1]; }
  bool minimal() const;
  WeightVector varpi() const;

  /// Positive roots not orthogonal to varpi, in root-system order.
  const std::vector<RootVector>& phi_plus_X() const { return phi_x_; }
  /// (varpi, alpha) for each alpha in phi_plus_X().
  const std::vector<std::int64_t>& varpi_pairings() const { return varpi_pairings_; }
  /// Positive roots of the Levi factor, i.e. the complement of phi_plus_X().
  const std::vector<RootVector>& levi_roots() const { return levi_; }
  int dimension() const { return static_cast<int>(phi_x_.size()); }

 private:
  std::shared_ptr<const RootSystem> rs_;
  std::vector<int> I_;
  std::vector<int> pol_;
  std::vector<int> n_at_;
  std::vector<RootVector> phi_x_;
  std::vector<std::int64_t> varpi_pairings_;
  std::vector<RootVector> levi_;
};

/// Highest weight of an irreducible P_I-representation: a_i >= 0 off I.
class BundleWeight {
 public:
  BundleWeight(const PolarizedSpace& ps, WeightVector w);
  const WeightVector& weight() const { return w_; }
  int operator[](int i) const { return w_.coeffs[i]; }  // 0-based

 private:
  WeightVector w_;
};

struct AssociatedDatum {
  std::map<Rational, int> entries;  // value -> multiplicity
  Rational m;
  Rational M;

  int total_multiplicity() const;
  int multiplicity(const Rational& v) const;
};

struct AllZero {
  bool operator==(const AllZero&) const = default;
};
struct NonZeroCohomology {
  int degree = 0;
  WeightVector dominant_weight;
  BigInt dimension;
};
struct CohomologyRecord {
  long twist = 0;
  std::variant<AllZero, NonZeroCohomology> outcome;
};

inline const std::vector<RootVector>& phi_plus_X(const PolarizedSpace& ps) { return ps.phi_plus_X(); }
inline int dimension(const PolarizedSpace& ps) { return ps.dimension(); }

AssociatedDatum associated_datum(const PolarizedSpace& ps, const BundleWeight& lambda);
std::pair<Rational, Rational> datum_min_max(const AssociatedDatum& d);
/// min_{i in I} (a_i + 1) / n_i.
Rational min_closed_form(const PolarizedSpace& ps, const WeightVector& lambda);

/// Every integer between m and M occurs in the datum.
bool is_acm(const AssociatedDatum& d);
bool is_acm(const PolarizedSpace& ps, const BundleWeight& lambda);
/// The datum is exactly {1, ..., dim X}.
bool is_ulrich(const AssociatedDatum& d, int dim);
bool is_ulrich(const PolarizedSpace& ps, const BundleWeight& lambda);

CohomologyRecord cohomology(const PolarizedSpace& ps, const BundleWeight& lambda, long t);
/// Product over roots of (mu + rho, alpha) / (rho, alpha).
BigInt weyl_dimension(const RootSystem& rs, const WeightVector& mu, std::span<const RootVector> roots);
BigInt bundle_rank(const PolarizedSpace& ps, const BundleWeight& lambda);

/// ACM test through Borel-Bott-Weil: every twist is regular of index 0, of
/// index dim X, or singular. Independent of the datum membership test.
bool acm_oracle_bbw(const PolarizedSpace& ps, const BundleWeight& lambda);

}  // namespace homacm

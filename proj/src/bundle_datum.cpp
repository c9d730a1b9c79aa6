#include "homacm/bundle_datum.hpp"

#include <algorithm>
#include <stdexcept>

namespace homacm {

std::int64_t floor_of(const Rational& q) {
  const auto n = q.numerator(), d = q.denominator();
  return n >= 0 ? n / d : -((-n + d - 1) / d);
}

std::int64_t ceil_of(const Rational& q) { return -floor_of(-q); }

PolarizedSpace::PolarizedSpace(std::shared_ptr<const RootSystem> rs, std::vector<int> I,
                               std::vector<int> polarization)
    : rs_(std::move(rs)), I_(std::move(I)), pol_(std::move(polarization)) {
  if (!rs_) throw InvalidInput("missing root system");
  const int n = rs_->rank();
  if (I_.empty()) throw InvalidInput("index set I must be non-empty");
  for (size_t k = 0; k < I_.size(); ++k) {
    if (I_[k] < 1 || I_[k] > n)
      throw InvalidInput("index " + std::to_string(I_[k]) + " in I is outside 1.." + std::to_string(n));
    if (k > 0 && I_[k] <= I_[k - 1]) throw InvalidInput("I must be strictly increasing");
  }
  if (pol_.empty()) pol_.assign(I_.size(), 1);
  if (pol_.size() != I_.size())
    throw InvalidInput("polarization has " + std::to_string(pol_.size()) + " entries, I has " +
                       std::to_string(I_.size()));
  for (int v : pol_)
    if (v <= 0) throw InvalidInput("polarization weights must be positive, got " + std::to_string(v));
  n_at_.assign(n, 0);
  for (size_t k = 0; k < I_.size(); ++k) n_at_[I_[k] - 1] = pol_[k];

  const WeightVector w = varpi();
  for (const auto& r : rs_->positive_roots()) {
    const auto p = rs_->pairing(w, r);
    if (p != 0) {
      phi_x_.push_back(r);
      varpi_pairings_.push_back(p);
    } else {
      levi_.push_back(r);
    }
  }
}

bool PolarizedSpace::minimal() const {
  return std::all_of(pol_.begin(), pol_.end(), [](int v) { return v == 1; });
}

WeightVector PolarizedSpace::varpi() const { return WeightVector(n_at_); }

BundleWeight::BundleWeight(const PolarizedSpace& ps, WeightVector w) : w_(std::move(w)) {
  if (w_.rank() != ps.roots().rank())
    throw InvalidInput("weight " + w_.to_string() + " has length " + std::to_string(w_.rank()) +
                       ", expected " + std::to_string(ps.roots().rank()));
  for (int i = 1; i <= w_.rank(); ++i)
    if (!ps.contains(i) && w_.coeffs[i - 1] < 0)
      throw InvalidInput("a_" + std::to_string(i) + " = " + std::to_string(w_.coeffs[i - 1]) +
                         " must be >= 0 since " + std::to_string(i) + " is not in I");
}

int AssociatedDatum::total_multiplicity() const {
  int total = 0;
  for (const auto& [v, mult] : entries) total += mult;
  return total;
}

int AssociatedDatum::multiplicity(const Rational& v) const {
  auto it = entries.find(v);
  return it == entries.end() ? 0 : it->second;
}

Rational min_closed_form(const PolarizedSpace& ps, const WeightVector& lambda) {
  Rational best;
  bool first = true;
  for (size_t k = 0; k < ps.I().size(); ++k) {
    const Rational v(lambda.coeffs[ps.I()[k] - 1] + 1, ps.polarization()[k]);
    if (first || v < best) best = v;
    first = false;
  }
  return best;
}

AssociatedDatum associated_datum(const PolarizedSpace& ps, const BundleWeight& lambda) {
  const RootSystem& rs = ps.roots();
  const WeightVector shifted = lambda.weight() + WeightVector::rho(rs.rank());
  AssociatedDatum d;
  const auto& roots = ps.phi_plus_X();
  const auto& denom = ps.varpi_pairings();
  for (size_t k = 0; k < roots.size(); ++k) ++d.entries[Rational(rs.pairing(shifted, roots[k]), denom[k])];
  d.m = d.entries.begin()->first;
  d.M = d.entries.rbegin()->first;
  if (d.m != min_closed_form(ps, lambda.weight()))
    throw std::logic_error("datum minimum disagrees with min (a_i+1)/n_i for " +
                           lambda.weight().to_string());
  return d;
}

std::pair<Rational, Rational> datum_min_max(const AssociatedDatum& d) { return {d.m, d.M}; }

bool is_acm(const AssociatedDatum& d) {
  for (auto l = ceil_of(d.m); l <= floor_of(d.M); ++l)
    if (!d.entries.count(Rational(l))) return false;
  return true;
}

bool is_acm(const PolarizedSpace& ps, const BundleWeight& lambda) {
  return is_acm(associated_datum(ps, lambda));
}

bool is_ulrich(const AssociatedDatum& d, int dim) {
  if (static_cast<int>(d.entries.size()) != dim) return false;
  std::int64_t expect = 1;
  for (const auto& [v, mult] : d.entries) {
    if (v != Rational(expect++)) return false;
  }
  // dim distinct values out of dim roots: each occurs once.
  if (d.total_multiplicity() != dim) throw std::logic_error("Ulrich datum with repeated entries");
  return true;
}

bool is_ulrich(const PolarizedSpace& ps, const BundleWeight& lambda) {
  return is_ulrich(associated_datum(ps, lambda), ps.dimension());
}

BigInt weyl_dimension(const RootSystem& rs, const WeightVector& mu, std::span<const RootVector> roots) {
  const WeightVector shifted = mu + WeightVector::rho(rs.rank());
  const WeightVector rho = WeightVector::rho(rs.rank());
  BigInt num = 1, den = 1;
  for (const auto& r : roots) {
    const auto top = rs.pairing(shifted, r);
    if (top <= 0)
      throw InvalidInput("weight " + mu.to_string() + " + rho is not positive on the given roots");
    num *= top;
    den *= rs.pairing(rho, r);
  }
  if (num % den != 0) throw std::logic_error("non-integral Weyl dimension for " + mu.to_string());
  return num / den;
}

BigInt bundle_rank(const PolarizedSpace& ps, const BundleWeight& lambda) {
  return weyl_dimension(ps.roots(), lambda.weight(), ps.levi_roots());
}

CohomologyRecord cohomology(const PolarizedSpace& ps, const BundleWeight& lambda, long t) {
  const RootSystem& rs = ps.roots();
  const WeightVector rho = WeightVector::rho(rs.rank());
  const WeightVector omega = lambda.weight() + rho - t * ps.varpi();
  CohomologyRecord rec{t, AllZero{}};
  const Regularity reg = rs.regularity_index(omega);
  if (std::holds_alternative<Singular>(reg)) return rec;
  const DominantForm dom = rs.to_dominant(omega);
  const WeightVector highest = dom.dominant - rho;
  NonZeroCohomology nz{std::get<Regular>(reg).index, highest,
                       weyl_dimension(rs, highest, rs.positive_roots())};
  rec.outcome = std::move(nz);
  return rec;
}

bool acm_oracle_bbw(const PolarizedSpace& ps, const BundleWeight& lambda) {
  const RootSystem& rs = ps.roots();
  const WeightVector rho = WeightVector::rho(rs.rank());
  const WeightVector shifted = lambda.weight() + rho;
  const auto& roots = ps.phi_plus_X();
  const auto& denom = ps.varpi_pairings();
  Rational lo, hi;
  for (size_t k = 0; k < roots.size(); ++k) {
    const Rational v(rs.pairing(shifted, roots[k]), denom[k]);
    if (k == 0 || v < lo) lo = v;
    if (k == 0 || v > hi) hi = v;
  }
  // Beyond this window every twist is regular of index 0 or dim X.
  const int dim = ps.dimension();
  for (auto t = floor_of(lo) - 1; t <= ceil_of(hi) + 1; ++t) {
    const Regularity reg = rs.regularity_index(shifted - t * ps.varpi());
    if (const auto* r = std::get_if<Regular>(&reg); r && r->index != 0 && r->index != dim) return false;
  }
  return true;
}

}  // namespace homacm

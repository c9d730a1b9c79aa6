#include <doctest.h>

#include <memory>
#include <random>

#include "homacm/bundle_datum.hpp"
#include "oracles.hpp"

using namespace homacm;

namespace {

PolarizedSpace space(LieType t, std::vector<int> I, std::vector<int> pol = {}) {
  return PolarizedSpace(std::make_shared<const RootSystem>(RootSystem::build(t)), std::move(I), std::move(pol));
}

AssociatedDatum datum(const PolarizedSpace& ps, std::vector<int> w) {
  return associated_datum(ps, BundleWeight(ps, WeightVector(std::move(w))));
}

std::map<Rational, int> multiset(std::initializer_list<Rational> xs) {
  std::map<Rational, int> out;
  for (const auto& x : xs) ++out[x];
  return out;
}

bool acm(const PolarizedSpace& ps, std::vector<int> w) { return is_acm(ps, BundleWeight(ps, WeightVector(std::move(w)))); }

const LieType A1{Family::A, 1}, A2{Family::A, 2}, A3{Family::A, 3}, B2{Family::B, 2}, B3{Family::B, 3},
    G2{Family::G, 2};

}  // namespace

TEST_CASE("space validation") {
  auto rs = std::make_shared<const RootSystem>(RootSystem::build(A3));
  CHECK_THROWS_AS(PolarizedSpace(rs, {}), InvalidInput);
  CHECK_THROWS_AS(PolarizedSpace(rs, {0}), InvalidInput);
  CHECK_THROWS_AS(PolarizedSpace(rs, {4}), InvalidInput);
  CHECK_THROWS_AS(PolarizedSpace(rs, {2, 1}), InvalidInput);
  CHECK_THROWS_AS(PolarizedSpace(rs, {1, 2}, {1}), InvalidInput);
  CHECK_THROWS_AS(PolarizedSpace(rs, {1, 2}, {1, 0}), InvalidInput);
  const auto ps = space(A3, {2});
  CHECK_THROWS_AS(BundleWeight(ps, WeightVector({-1, 0, 0})), InvalidInput);
  CHECK_THROWS_AS(BundleWeight(ps, WeightVector({0, 0})), InvalidInput);
  CHECK_NOTHROW(BundleWeight(ps, WeightVector({0, -7, 0})));
}

TEST_CASE("phi_plus_X and dimension") {
  const auto a2 = space(A2, {1});
  std::vector<std::vector<int>> got;
  for (const auto& r : a2.phi_plus_X()) got.push_back(r.coeffs);
  CHECK(got == std::vector<std::vector<int>>{{1, 0}, {1, 1}});

  CHECK(space(G2, {1, 2}).dimension() == 6);
  const auto g24 = space(A3, {2});
  got.clear();
  for (const auto& r : g24.phi_plus_X()) got.push_back(r.coeffs);
  CHECK(got == std::vector<std::vector<int>>{{0, 1, 0}, {0, 1, 1}, {1, 1, 0}, {1, 1, 1}});
  CHECK(g24.dimension() == 4);
  for (int n = 1; n <= 8; ++n) CHECK(space({Family::A, n}, {1}).dimension() == n);
}

TEST_CASE("associated datum examples") {
  const auto g2 = space(G2, {1, 2});
  auto d = datum(g2, {0, 1});
  CHECK(d.entries == multiset({1, 2, Rational(7, 4), Rational(8, 5), Rational(3, 2), Rational(5, 3)}));
  CHECK(datum_min_max(d) == std::pair<Rational, Rational>{1, 2});
  CHECK(datum(g2, {0, 0}).entries == multiset({1, 1, 1, 1, 1, 1}));

  // Spinor weight on the 3-dimensional quadric, checked against the e-basis computation.
  const auto b2 = space(B2, {1});
  d = datum(b2, {0, 1});
  CHECK(d.entries == oracle::classical_datum(B2, {1}, {1}, {0, 1}));
  CHECK(d.entries == multiset({1, 2, 3}));
  CHECK(datum_min_max(d) == std::pair<Rational, Rational>{1, 3});

  for (const auto& t : oracle::all_types(6))
    for (const auto& I : oracle::all_index_sets(t.rank)) CHECK(datum(space(t, I), std::vector<int>(t.rank, 0)).m == Rational(1));
}

TEST_CASE("datum agrees with the e-basis computation") {
  std::mt19937_64 rng(2024);
  int checked = 0;
  while (checked < 1500) {
    auto x = oracle::random_instance(rng, 7, 4, -4, 5);
    if (x.type.family > Family::D) continue;
    const auto ps = space(x.type, x.I, x.polarization);
    CAPTURE(x.type.to_string());
    CHECK(datum(ps, x.weight).entries == oracle::classical_datum(x.type, x.I, x.polarization, x.weight));
    ++checked;
  }
}

TEST_CASE("datum invariants on random instances") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 1000; ++trial) {
    auto x = oracle::random_instance(rng, 8, 4, -4, 4);
    const auto ps = space(x.type, x.I, x.polarization);
    const auto d = datum(ps, x.weight);
    CHECK(d.total_multiplicity() == ps.dimension());
    CHECK(d.m == min_closed_form(ps, WeightVector(x.weight)));
    CHECK(d.m == d.entries.begin()->first);
    CHECK(d.M == d.entries.rbegin()->first);

    // Twisting by t varpi shifts every entry by t.
    const long t = std::uniform_int_distribution<long>(-3, 3)(rng);
    const auto shifted = datum(ps, (WeightVector(x.weight) + t * ps.varpi()).coeffs);
    std::map<Rational, int> expect;
    for (const auto& [v, mult] : d.entries) expect[v + Rational(t)] += mult;
    CHECK(shifted.entries == expect);
    CHECK(acm(ps, x.weight) == is_acm(shifted));

    // Rescaling the invariant form leaves the datum unchanged.
    const int k = std::uniform_int_distribution<int>(2, 5)(rng);
    const PolarizedSpace scaled(std::make_shared<const RootSystem>(ps.roots().scaled(k)), x.I, x.polarization);
    CHECK(datum(scaled, x.weight).entries == d.entries);
  }
}

TEST_CASE("ACM decisions") {
  const auto g2 = space(G2, {1, 2});
  CHECK(acm(g2, {0, 1}));
  CHECK_FALSE(acm(g2, {0, 3}));
  CHECK_FALSE(acm(space(B3, {1}), {-1, 1, 0}));
  CHECK_FALSE(acm(space(A2, {1}), {0, 1}));
  CHECK(datum(space(A2, {1}), {0, 1}).entries == multiset({1, 3}));

  // Every weight is ACM on the projective line.
  const auto line = space(A1, {1});
  for (int a = -6; a <= 6; ++a) CHECK(acm(line, {a}));

  // An endpoint that is an integer is itself an entry.
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    auto x = oracle::random_instance(rng, 6, 3, -3, 4);
    const auto d = datum(space(x.type, x.I, x.polarization), x.weight);
    if (d.m.denominator() == 1) CHECK(d.multiplicity(d.m) > 0);
    if (d.M.denominator() == 1) CHECK(d.multiplicity(d.M) > 0);
  }
}

TEST_CASE("Ulrich decisions") {
  for (int n = 1; n <= 6; ++n) {
    const auto pn = space({Family::A, n}, {1});
    CHECK(is_ulrich(pn, BundleWeight(pn, WeightVector::zero(n))));
  }
  const auto b2 = space(B2, {1});
  CHECK(is_ulrich(b2, BundleWeight(b2, WeightVector({0, 1}))));
  // Not twist invariant.
  CHECK_FALSE(is_ulrich(b2, BundleWeight(b2, WeightVector({1, 1}))));
  CHECK(acm(b2, {1, 1}));
  const auto g2 = space(G2, {1, 2});
  CHECK_FALSE(is_ulrich(g2, BundleWeight(g2, WeightVector({0, 0}))));

  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 2000; ++trial) {
    auto x = oracle::random_instance(rng, 4, 2, -1, 3);
    const auto ps = space(x.type, x.I, x.polarization);
    const auto d = datum(ps, x.weight);
    if (!is_ulrich(d, ps.dimension())) continue;
    CHECK(is_acm(d));
    CHECK(d.m == Rational(1));
    CHECK(d.M == Rational(ps.dimension()));
    for (const auto& [v, mult] : d.entries) CHECK(mult == 1);
  }
}

TEST_CASE("Weyl dimensions") {
  auto full = [](LieType t, int i) {
    const auto rs = RootSystem::build(t);
    return weyl_dimension(rs, WeightVector::fundamental(t.rank, i), rs.positive_roots());
  };
  CHECK(full({Family::E, 8}, 8) == 248);
  CHECK(full(G2, 1) == 7);
  CHECK(full({Family::F, 4}, 4) == 26);
  CHECK(full({Family::F, 4}, 1) == 52);
  CHECK(full({Family::E, 6}, 1) == 27);
  CHECK(full({Family::E, 7}, 7) == 56);
  CHECK(full(B3, 3) == 8);
  CHECK(full(A2, 1) == 3);

  const auto a2 = RootSystem::build(A2);
  CHECK(weyl_dimension(a2, WeightVector::zero(2), a2.positive_roots()) == 1);
  const auto b2 = RootSystem::build(B2);
  const std::vector<RootVector> levi{RootVector{{0, 1}}};
  CHECK(weyl_dimension(b2, WeightVector({0, 1}), levi) == 2);
  CHECK_THROWS_AS(weyl_dimension(a2, WeightVector({-1, 0}), a2.positive_roots()), InvalidInput);
}

TEST_CASE("bundle rank") {
  const auto b2 = space(B2, {1});
  CHECK(bundle_rank(b2, BundleWeight(b2, WeightVector({0, 1}))) == 2);
  const auto g24 = space(A3, {2});
  CHECK(bundle_rank(g24, BundleWeight(g24, WeightVector({1, 0, 0}))) == 2);
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    auto x = oracle::random_instance(rng, 8, 3, -5, 5);
    std::vector<int> line(x.type.rank, 0);
    for (int i : x.I) line[i - 1] = x.weight[i - 1];
    const auto ps = space(x.type, x.I, x.polarization);
    CHECK(bundle_rank(ps, BundleWeight(ps, WeightVector(line))) == 1);
  }
}

TEST_CASE("Borel-Bott-Weil on the projective line") {
  const auto line = space(A1, {1});
  for (int d = 0; d <= 5; ++d) {
    const auto rec = cohomology(line, BundleWeight(line, WeightVector({d})), 0);
    const auto& nz = std::get<NonZeroCohomology>(rec.outcome);
    CHECK(nz.degree == 0);
    CHECK(nz.dimension == d + 1);
  }
  const BundleWeight zero(line, WeightVector({0}));
  const auto h1 = std::get<NonZeroCohomology>(cohomology(line, zero, 2).outcome);
  CHECK(h1.degree == 1);
  CHECK(h1.dimension == 1);
  CHECK(std::holds_alternative<AllZero>(cohomology(line, zero, 1).outcome));
}

TEST_CASE("cohomology tracks the datum") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 250; ++trial) {
    auto x = oracle::random_instance(rng, 5, 3, -3, 3);
    const auto ps = space(x.type, x.I, x.polarization);
    const BundleWeight bw(ps, WeightVector(x.weight));
    const auto d = associated_datum(ps, bw);
    for (long t = floor_of(d.m) - 3; t <= ceil_of(d.M) + 3; ++t) {
      const auto rec = cohomology(ps, bw, t);
      CHECK(rec.twist == t);
      const Rational rt(t);
      const auto* nz = std::get_if<NonZeroCohomology>(&rec.outcome);
      CHECK((nz == nullptr) == (d.multiplicity(rt) > 0));
      CHECK((nz && nz->degree == 0) == (rt < d.m));
      CHECK((nz && nz->degree == ps.dimension()) == (rt > d.M));
      if (nz) CHECK(nz->dimension > 0);
    }
  }
}

TEST_CASE("ACM agrees with the cohomological test") {
  CHECK(acm_oracle_bbw(space(G2, {1, 2}), BundleWeight(space(G2, {1, 2}), WeightVector({0, 1}))));
  const auto a2 = space(A2, {1});
  CHECK_FALSE(acm_oracle_bbw(a2, BundleWeight(a2, WeightVector({0, 1}))));
  std::mt19937_64 rng(123);
  for (int trial = 0; trial < 600; ++trial) {
    auto x = oracle::random_instance(rng, 6, 3, -4, 4);
    const auto ps = space(x.type, x.I, x.polarization);
    const BundleWeight bw(ps, WeightVector(x.weight));
    CHECK(is_acm(ps, bw) == acm_oracle_bbw(ps, bw));
    if (std::all_of(x.weight.begin(), x.weight.end(), [](int a) { return a == 0; })) CHECK(acm_oracle_bbw(ps, bw));
  }
}

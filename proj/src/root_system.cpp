#include "homacm/root_system.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>
#include <utility>

namespace homacm {

namespace {

std::vector<std::pair<int, int>> dynkin_edges(LieType t) {
  const int n = t.rank;
  std::vector<std::pair<int, int>> edges;
  switch (t.family) {
    case Family::A:
    case Family::B:
    case Family::C:
    case Family::F:
    case Family::G:
      for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
      break;
    case Family::D:
      for (int i = 1; i < n - 1; ++i) edges.emplace_back(i, i + 1);
      edges.emplace_back(n - 2, n);
      break;
    case Family::E:
      edges = {{1, 3}, {3, 4}, {4, 5}, {2, 4}};
      for (int i = 5; i < n; ++i) edges.emplace_back(i, i + 1);
      break;
  }
  return edges;
}

// Long simple roots get s = 2 (3 for G2), short ones s = 1.
std::vector<int> half_lengths_for(LieType t) {
  const int n = t.rank;
  std::vector<int> s(n, 1);
  switch (t.family) {
    case Family::B:
      std::fill(s.begin(), s.end() - 1, 2);
      break;
    case Family::C:
      s[n - 1] = 2;
      break;
    case Family::F:
      s = {2, 2, 1, 1};
      break;
    case Family::G:
      s = {1, 3};
      break;
    default:
      break;
  }
  return s;
}

}  // namespace

void LieType::validate() const {
  auto fail = [&](const std::string& why) {
    throw InvalidInput(std::string(1, static_cast<char>(family)) + std::to_string(rank) +
                       ": " + why);
  };
  switch (family) {
    case Family::A:
      if (rank < 1) fail("A requires rank >= 1");
      break;
    case Family::B:
      if (rank < 2) fail("B requires rank >= 2");
      break;
    case Family::C:
      if (rank < 2) fail("C requires rank >= 2");
      break;
    case Family::D:
      if (rank < 4) fail("D requires rank >= 4");
      break;
    case Family::E:
      if (rank < 6 || rank > 8) fail("E requires rank 6, 7 or 8");
      break;
    case Family::F:
      if (rank != 4) fail("F requires rank 4");
      break;
    case Family::G:
      if (rank != 2) fail("G requires rank 2");
      break;
    default:
      fail("unknown family");
  }
}

std::string LieType::to_string() const {
  return std::string(1, static_cast<char>(family)) + std::to_string(rank);
}

LieType LieType::parse(const std::string& token) {
  if (token.size() < 2) throw InvalidInput("type token '" + token + "' must look like B3");
  const char f = static_cast<char>(std::toupper(static_cast<unsigned char>(token[0])));
  if (std::string("ABCDEFG").find(f) == std::string::npos)
    throw InvalidInput("unknown family '" + std::string(1, token[0]) + "' in '" + token + "'");
  const std::string digits = token.substr(1);
  if (digits.empty() || digits.size() > 3 ||
      !std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    throw InvalidInput("rank in '" + token + "' must be a positive integer");
  LieType t{static_cast<Family>(f), std::stoi(digits)};
  t.validate();
  return t;
}

int RootVector::height() const { return std::accumulate(coeffs.begin(), coeffs.end(), 0); }

WeightVector WeightVector::fundamental(int rank, int i) {
  WeightVector w = zero(rank);
  w.coeffs.at(i - 1) = 1;
  return w;
}

WeightVector& WeightVector::operator+=(const WeightVector& o) {
  if (o.coeffs.size() != coeffs.size()) throw InvalidInput("weight rank mismatch");
  for (size_t i = 0; i < coeffs.size(); ++i) coeffs[i] += o.coeffs[i];
  return *this;
}

WeightVector& WeightVector::operator-=(const WeightVector& o) {
  if (o.coeffs.size() != coeffs.size()) throw InvalidInput("weight rank mismatch");
  for (size_t i = 0; i < coeffs.size(); ++i) coeffs[i] -= o.coeffs[i];
  return *this;
}

WeightVector operator*(long k, WeightVector w) {
  for (auto& c : w.coeffs) c = static_cast<int>(k * c);
  return w;
}

std::string WeightVector::to_string() const {
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < coeffs.size(); ++i) os << (i ? "," : "") << coeffs[i];
  os << ')';
  return os.str();
}

int expected_positive_root_count(LieType t) {
  const int n = t.rank;
  switch (t.family) {
    case Family::A: return n * (n + 1) / 2;
    case Family::B:
    case Family::C: return n * n;
    case Family::D: return n * (n - 1);
    case Family::E: return n == 6 ? 36 : n == 7 ? 63 : 120;
    case Family::F: return 24;
    case Family::G: return 6;
  }
  return 0;
}

RootSystem RootSystem::build(LieType type) {
  type.validate();
  RootSystem rs;
  rs.type_ = type;
  const int n = type.rank;
  rs.half_lengths_ = half_lengths_for(type);

  // Symmetric Gram matrix (alpha_i, alpha_j); adjacent nodes meet at -max(s_i, s_j).
  std::vector<std::vector<int>> gram(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) gram[i][i] = 2 * rs.half_lengths_[i];
  for (auto [a, b] : dynkin_edges(type)) {
    const int v = -std::max(rs.half_lengths_[a - 1], rs.half_lengths_[b - 1]);
    gram[a - 1][b - 1] = gram[b - 1][a - 1] = v;
  }
  rs.cartan_.assign(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) rs.cartan_[i][j] = 2 * gram[i][j] / gram[i][i];

  // Height closure with the root-string test: gamma + alpha_i is a root iff
  // p - <gamma, alpha_i^vee> >= 1, p being the length of the string below gamma.
  std::set<std::vector<int>> known;
  std::vector<std::vector<int>> layer;
  for (int i = 0; i < n; ++i) {
    std::vector<int> e(n, 0);
    e[i] = 1;
    known.insert(e);
    layer.push_back(e);
  }
  std::vector<std::vector<int>> all = layer;
  while (!layer.empty()) {
    std::set<std::vector<int>> next;
    for (const auto& gamma : layer) {
      for (int i = 0; i < n; ++i) {
        std::vector<int> cand = gamma;
        ++cand[i];
        if (known.count(cand) || next.count(cand)) continue;
        int p = 0;
        std::vector<int> down = gamma;
        while (down[i] > 0) {
          --down[i];
          if (!known.count(down)) break;
          ++p;
        }
        int coroot_pairing = 0;
        for (int j = 0; j < n; ++j) coroot_pairing += gamma[j] * rs.cartan_[i][j];
        if (p - coroot_pairing >= 1) next.insert(cand);
      }
    }
    layer.assign(next.begin(), next.end());
    for (const auto& r : layer) {
      known.insert(r);
      all.push_back(r);
    }
  }
  std::stable_sort(all.begin(), all.end(), [](const auto& x, const auto& y) {
    const int hx = std::accumulate(x.begin(), x.end(), 0);
    const int hy = std::accumulate(y.begin(), y.end(), 0);
    return hx != hy ? hx < hy : x < y;
  });
  rs.positive_roots_.reserve(all.size());
  for (auto& r : all) rs.positive_roots_.push_back(RootVector{std::move(r)});
  return rs;
}

RootSystem RootSystem::scaled(int factor) const {
  if (factor <= 0) throw InvalidInput("scale factor must be positive");
  RootSystem copy = *this;
  for (auto& s : copy.half_lengths_) s *= factor;
  return copy;
}

void RootSystem::check_rank(const WeightVector& w) const {
  if (w.rank() != rank())
    throw InvalidInput("weight " + w.to_string() + " has length " + std::to_string(w.rank()) +
                       ", expected " + std::to_string(rank()));
}

std::int64_t RootSystem::pairing(const WeightVector& w, const RootVector& r) const {
  check_rank(w);
  if (static_cast<int>(r.coeffs.size()) != rank()) throw InvalidInput("root rank mismatch");
  std::int64_t v = 0;
  for (int i = 0; i < rank(); ++i)
    v += static_cast<std::int64_t>(w.coeffs[i]) * r.coeffs[i] * half_lengths_[i];
  return v;
}

WeightVector RootSystem::root_as_weight(const RootVector& r) const {
  if (static_cast<int>(r.coeffs.size()) != rank()) throw InvalidInput("root rank mismatch");
  WeightVector w = WeightVector::zero(rank());
  for (int k = 0; k < rank(); ++k)
    for (int j = 0; j < rank(); ++j) w.coeffs[k] += r.coeffs[j] * cartan_[k][j];
  return w;
}

WeightVector RootSystem::simple_reflection(const WeightVector& w, int i) const {
  check_rank(w);
  if (i < 1 || i > rank())
    throw InvalidInput("reflection index " + std::to_string(i) + " outside 1.." +
                       std::to_string(rank()));
  WeightVector out = w;
  const int a = w.coeffs[i - 1];
  for (int k = 0; k < rank(); ++k) out.coeffs[k] -= a * cartan_[k][i - 1];
  return out;
}

Regularity RootSystem::regularity_index(const WeightVector& w) const {
  check_rank(w);
  int negatives = 0;
  for (const auto& r : positive_roots_) {
    const auto p = pairing(w, r);
    if (p == 0) return Singular{};
    if (p < 0) ++negatives;
  }
  return Regular{negatives};
}

DominantForm RootSystem::to_dominant(const WeightVector& w) const {
  if (std::holds_alternative<Singular>(regularity_index(w)))
    throw InvalidInput("weight " + w.to_string() + " is singular; no regular dominant form");
  DominantForm out{w, 0};
  for (;;) {
    auto it = std::find_if(out.dominant.coeffs.begin(), out.dominant.coeffs.end(),
                           [](int c) { return c < 0; });
    if (it == out.dominant.coeffs.end()) break;
    out.dominant = simple_reflection(out.dominant, static_cast<int>(it - out.dominant.coeffs.begin()) + 1);
    ++out.reflections_used;
  }
  return out;
}

}  // namespace homacm

#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace homacm {

/// Raised for inputs that violate an operation's precondition.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct LieType {
  Family family = Family::A;
  int rank = 1;

  /// Throws InvalidInput when the rank is not allowed for the family.
  void validate() const;
  /// "B3", "E8", ...
  std::string to_string() const;
  /// Parses "B3"-style tokens and validates them.
  static LieType parse(const std::string& token);

  auto operator<=>(const LieType&) const = default;
};

/// Coefficients over the simple roots.
struct RootVector {
  std::vector<int> coeffs;

  int height() const;
  auto operator<=>(const RootVector&) const = default;
};

/// Coefficients over the fundamental weights.
struct WeightVector {
  std::vector<int> coeffs;

  WeightVector() = default;
  explicit WeightVector(std::vector<int> c) : coeffs(std::move(c)) {}
  static WeightVector zero(int rank) { return WeightVector(std::vector<int>(rank, 0)); }
  static WeightVector rho(int rank) { return WeightVector(std::vector<int>(rank, 1)); }
  static WeightVector fundamental(int rank, int i);  // 1-based

  int rank() const { return static_cast<int>(coeffs.size()); }
  int operator[](int i) const { return coeffs[i]; }  // 0-based

  WeightVector& operator+=(const WeightVector& o);
  WeightVector& operator-=(const WeightVector& o);
  friend WeightVector operator+(WeightVector a, const WeightVector& b) { return a += b; }
  friend WeightVector operator-(WeightVector a, const WeightVector& b) { return a -= b; }
  friend WeightVector operator*(long k, WeightVector w);

  std::string to_string() const;  // "(a1,a2,...)"
  auto operator<=>(const WeightVector&) const = default;
};

struct Singular {
  bool operator==(const Singular&) const = default;
};
struct Regular {
  int index = 0;
  bool operator==(const Regular&) const = default;
};
using Regularity = std::variant<Singular, Regular>;

struct DominantForm {
  WeightVector dominant;
  int reflections_used = 0;
};

/// Immutable root datum of a simple Lie algebra in Bourbaki labelling.
///
/// The invariant form is normalized so that (alpha_i, alpha_i) = 2 s_i with
/// integer s_i; then (lambda_i, alpha_j) = delta_ij s_j and every pairing
/// between integral weights and roots is an integer.
class RootSystem {
 public:
  static RootSystem build(LieType type);

  const LieType& type() const { return type_; }
  int rank() const { return type_.rank; }
  /// cartan()[i][j] = 2 (alpha_i, alpha_j) / (alpha_i, alpha_i), 0-based.
  const std::vector<std::vector<int>>& cartan() const { return cartan_; }
  /// s_i = (alpha_i, alpha_i) / 2.
  const std::vector<int>& half_lengths() const { return half_lengths_; }
  /// Sorted by height, then lexicographically.
  const std::vector<RootVector>& positive_roots() const { return positive_roots_; }

  /// Same Cartan matrix and roots with every s_i multiplied by factor.
  RootSystem scaled(int factor) const;

  /// (w, r) in the fixed normalization.
  std::int64_t pairing(const WeightVector& w, const RootVector& r) const;
  WeightVector root_as_weight(const RootVector& r) const;
  /// s_i(w), i is 1-based.
  WeightVector simple_reflection(const WeightVector& w, int i) const;
  Regularity regularity_index(const WeightVector& w) const;
  /// Dominant chamber representative of a regular weight.
  DominantForm to_dominant(const WeightVector& w) const;

 private:
  RootSystem() = default;
  void check_rank(const WeightVector& w) const;

  LieType type_;
  std::vector<std::vector<int>> cartan_;
  std::vector<int> half_lengths_;
  std::vector<RootVector> positive_roots_;
};

/// Classical number of positive roots for a validated type.
int expected_positive_root_count(LieType type);

}  // namespace homacm

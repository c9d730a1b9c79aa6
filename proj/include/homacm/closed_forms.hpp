#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "homacm/bundle_datum.hpp"

namespace homacm {

/// Explicit per-family datum formulas for the minimal polarization.
///
/// Classical families use the block decomposition indexed by consecutive
/// members of I = {d_1 < ... < d_s} with d_0 = 0 and d_{s+1} = n (n = rank for
/// B, C, D and n = rank + 1 for A). Each block stores its cells with their
/// (u, v) indices; the flattened multiset of all cells is the datum.
/// Exceptional families evaluate the quotient formula over every positive
/// root meeting I.

enum class FormulaCase { A, BC_a, BC_b, D_a, D_b, D_c, D_d, E, F4, G2 };

std::string to_string(FormulaCase c);
FormulaCase formula_case(LieType type, const std::vector<int>& I);

struct DatumCell {
  int u = 0;
  int v = 0;
  Rational value;
};

struct DatumBlock {
  std::string name;  // "P", "Q~", "R^", ...
  int i = 0;
  int j = 0;  // 0 for single-index blocks
  int rows = 0;
  int cols = 0;
  std::vector<DatumCell> cells;
};

struct DatumMatrices {
  FormulaCase family_case = FormulaCase::A;
  std::vector<DatumBlock> blocks;
  Rational M_closed;

  std::map<Rational, int> flattened() const;
  int cell_count() const;
};

/// Requires a minimal polarization; throws InvalidInput otherwise.
DatumMatrices datum_closed_form(const PolarizedSpace& ps, const WeightVector& lambda);
DatumMatrices datum_closed_form(LieType type, const std::vector<int>& I, const WeightVector& lambda);
Rational M_closed_form(const PolarizedSpace& ps, const WeightVector& lambda);
Rational M_closed_form(LieType type, const std::vector<int>& I, const WeightVector& lambda);

struct ClosedFormMatch {};
struct ClosedFormMismatch {
  std::map<Rational, int> closed_only;   // multiplicity surplus of the closed form
  std::map<Rational, int> general_only;  // multiplicity surplus of the general datum
  Rational M_closed;
  Rational M_general;

  bool entries_agree() const { return closed_only.empty() && general_only.empty(); }
  std::string describe() const;
};
using ClosedFormVerdict = std::variant<ClosedFormMatch, ClosedFormMismatch>;

ClosedFormVerdict verify_closed_form(const PolarizedSpace& ps, const WeightVector& lambda);
ClosedFormVerdict verify_closed_form(LieType type, const std::vector<int>& I, const WeightVector& lambda);

/// Known defects of the printed M expressions for D. The entries of the
/// closed form stay correct; only the max formula is affected.
struct DocumentedErratum {
  std::string id;
  std::string description;
};
const std::vector<DocumentedErratum>& documented_errata();

/// Id of the documented erratum that fully accounts for `mm`: the entries
/// agree and removing the faulty term from the printed max gives the general M.
std::optional<std::string> explain_mismatch(const PolarizedSpace& ps, const WeightVector& lambda,
                                            const ClosedFormMismatch& mm);

}  // namespace homacm

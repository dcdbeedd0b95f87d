#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cosecant/big_rational.hpp"
#include "cosecant/genseries.hpp"
#include "cosecant/partitions.hpp"
#include "cosecant/polynomial.hpp"

namespace cosecant {

// Reference values transcribed from the published tables, compiled in from
// core/data/. Cells known to be misprinted carry an expect-diff marker so a
// regression can be told apart from a bad printed digit.

struct Table1GoldenRow {
  std::vector<unsigned> parts;
  std::vector<PartCount> multiplicities;  // decreasing part order
  unsigned length = 0;
};

struct Table2ExpectDiff {
  unsigned power = 0;
  std::string printed;
  std::string note;
};

struct Table2GoldenRow {
  unsigned k = 0;
  std::string prefactor_text;  // e.g. "2/(9*15!)"
  BigRational prefactor;
  BigRational constant;
  std::vector<BigInt> printed;  // printed[i-1] multiplies rho^i
  std::vector<Table2ExpectDiff> expect_diff;
  std::string source;
  std::string note;

  /// The printed row as an exact polynomial.
  RhoPolynomial polynomial() const;
};

struct Table3GoldenCell {
  long rho = 0;
  unsigned k = 0;
  std::string printed;
  std::string expect_diff_kind;  // "", "typo" or "rounded"
  std::string note;
};

struct Table4GoldenRow {
  unsigned ell = 0;
  std::string printed_text;
  RhoPolynomial polynomial;  // variable k
  std::optional<std::string> expect_diff;
};

const std::vector<Table1GoldenRow>& table1_golden();
const std::vector<Table2GoldenRow>& table2_golden();
const std::vector<Table3GoldenCell>& table3_golden();
const std::vector<Table4GoldenRow>& table4_golden();
/// Coefficient of rho^2 in c_{rho,6} from the displayed expansion over the
/// common denominator 5884534656000 (disagrees with the table row).
BigRational table2_k6_displayed_rho2();

struct Table2CellDiff {
  unsigned k = 0;
  unsigned power = 0;
  BigRational printed;   // prefactor * printed integer
  BigRational computed;
  BigRational printed_scaled;   // printed / prefactor, the integer as typeset
  BigRational computed_scaled;  // computed / prefactor
  bool expected = false;  // cell carries an expect-diff marker
  std::string note;
};

/// Cells of `rows` (index = k) that disagree with the printed table.
std::vector<Table2CellDiff> diff_table2(const std::vector<RhoPolynomial>& rows);

}  // namespace cosecant

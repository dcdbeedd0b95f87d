#pragma once

#include <string>
#include <vector>

#include "cosecant/genseries.hpp"
#include "cosecant/identity_report.hpp"
#include "cosecant/polynomial.hpp"

namespace cosecant {

// Text encodings. Every emitter is deterministic: identical inputs give
// byte-identical output.

/// `["1/180","1/72"]`, ascending degree.
std::string polynomial_to_json(const RhoPolynomial& p);
/// Throws ParseError on malformed input.
RhoPolynomial polynomial_from_json(const std::string& text);

/// `{"k":2,"coeffs":[["0","1"],["1","180"],["1","72"]]}`
std::string series_row_json(unsigned k, const RhoPolynomial& row);
/// JSON array of rows, one row per line.
std::string series_table_json(const SeriesTable& table);
/// Throws ParseError on malformed input or non-consecutive k.
SeriesTable series_table_from_json(const std::string& text);

/// Header `k,i,num,den` then one line per coefficient.
std::string series_table_csv(const SeriesTable& table);

std::string reports_to_json(const std::vector<IdentityReport>& reports);
std::vector<IdentityReport> reports_from_json(const std::string& text);

/// Quotes a CSV field when it contains a comma, quote or newline.
std::string csv_field(const std::string& field);

}  // namespace cosecant

#include "cosecant/golden.hpp"

#include <algorithm>
#include <string_view>

#include <json.hpp>

#include "cosecant/errors.hpp"

namespace cosecant {

namespace golden_data {
extern const std::string_view kTable1Json;
extern const std::string_view kTable2Json;
extern const std::string_view kTable3Json;
extern const std::string_view kTable4Json;
}  // namespace golden_data

using nlohmann::json;

namespace {

json load(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("embedded golden data: ") + e.what());
  }
}

std::vector<Table1GoldenRow> parse_table1() {
  std::vector<Table1GoldenRow> rows;
  const json doc = load(golden_data::kTable1Json);
  for (const auto& r : doc.at("rows")) {
    Table1GoldenRow row;
    row.parts = r.at("parts").get<std::vector<unsigned>>();
    for (const auto& [part, mult] : r.at("lambda").items()) {
      row.multiplicities.push_back({static_cast<unsigned>(std::stoul(part)), mult.get<unsigned>()});
    }
    std::sort(row.multiplicities.begin(), row.multiplicities.end(),
              [](const PartCount& a, const PartCount& b) { return a.part > b.part; });
    row.length = r.at("N").get<unsigned>();
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<Table2GoldenRow> parse_table2() {
  std::vector<Table2GoldenRow> rows;
  const json doc = load(golden_data::kTable2Json);
  for (const auto& r : doc.at("rows")) {
    Table2GoldenRow row;
    row.k = r.at("k").get<unsigned>();
    const auto& pf = r.at("prefactor");
    const BigInt num(pf.at("num").get<std::string>());
    const BigInt mult(pf.at("den_multiplier").get<std::string>());
    const unsigned fact = pf.at("den_factorial").get<unsigned>();
    row.prefactor = BigRational(num, mult * factorial(fact));
    row.prefactor_text = pf.at("num").get<std::string>() + "/(" + pf.at("den_multiplier").get<std::string>() + "*" +
                         std::to_string(fact) + "!)";
    row.constant = BigRational::parse(r.at("constant").get<std::string>());
    for (const auto& c : r.at("coeffs")) row.printed.emplace_back(c.get<std::string>());
    if (r.contains("expect_diff")) {
      for (const auto& d : r.at("expect_diff")) {
        row.expect_diff.push_back({d.at("power").get<unsigned>(), d.at("printed").get<std::string>(),
                                   d.at("note").get<std::string>()});
      }
    }
    row.source = r.value("source", "");
    row.note = r.value("note", "");
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<Table3GoldenCell> parse_table3() {
  const json doc = load(golden_data::kTable3Json);
  const auto ks = doc.at("ks").get<std::vector<unsigned>>();
  std::vector<Table3GoldenCell> cells;
  for (const auto& r : doc.at("rows")) {
    const long rho = r.at("rho").get<long>();
    const auto printed = r.at("cells").get<std::vector<std::string>>();
    for (std::size_t i = 0; i < ks.size(); ++i) cells.push_back({rho, ks[i], printed.at(i), "", ""});
  }
  for (const auto& d : doc.at("expect_diff")) {
    for (auto& c : cells) {
      if (c.rho == d.at("rho").get<long>() && c.k == d.at("k").get<unsigned>()) {
        c.expect_diff_kind = d.at("kind").get<std::string>();
        c.note = d.at("note").get<std::string>();
      }
    }
  }
  return cells;
}

std::vector<Table4GoldenRow> parse_table4() {
  std::vector<Table4GoldenRow> rows;
  const json doc = load(golden_data::kTable4Json);
  for (const auto& r : doc.at("rows")) {
    Table4GoldenRow row;
    row.ell = r.at("ell").get<unsigned>();
    const auto desc = r.at("inner_descending").get<std::vector<std::string>>();
    std::vector<BigRational> asc;
    for (auto it = desc.rbegin(); it != desc.rend(); ++it) asc.push_back(BigRational::parse(*it));
    RhoPolynomial poly(std::move(asc));
    const bool factor = r.at("k_km1_factor").get<bool>();
    if (factor) poly = poly * RhoPolynomial({BigRational(0), BigRational(-1), BigRational(1)});
    const BigRational denom = BigRational::parse(r.at("denominator").get<std::string>());
    row.polynomial = poly * (BigRational(1) / denom);

    std::string text = factor ? "k(k-1)(" : "(";
    for (std::size_t i = 0; i < desc.size(); ++i) {
      const std::size_t power = desc.size() - 1 - i;
      std::string c = desc[i];
      if (i > 0) text += c.front() == '-' ? " - " + c.substr(1) : " + " + c;
      else text += c;
      if (power >= 1) text += "k";
      if (power >= 2) text += "^" + std::to_string(power);
    }
    text += ")/" + r.at("denominator").get<std::string>();
    row.printed_text = text;
    if (r.contains("expect_diff")) row.expect_diff = r.at("expect_diff").get<std::string>();
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

RhoPolynomial Table2GoldenRow::polynomial() const {
  std::vector<BigRational> c{constant};
  for (const auto& p : printed) c.push_back(prefactor * BigRational(p));
  return RhoPolynomial(std::move(c));
}

const std::vector<Table1GoldenRow>& table1_golden() {
  static const auto rows = parse_table1();
  return rows;
}

const std::vector<Table2GoldenRow>& table2_golden() {
  static const auto rows = parse_table2();
  return rows;
}

const std::vector<Table3GoldenCell>& table3_golden() {
  static const auto cells = parse_table3();
  return cells;
}

const std::vector<Table4GoldenRow>& table4_golden() {
  static const auto rows = parse_table4();
  return rows;
}

BigRational table2_k6_displayed_rho2() {
  const json doc = load(golden_data::kTable2Json);
  for (const auto& r : doc.at("rows")) {
    if (r.at("k").get<unsigned>() == 6 && r.contains("alternate_source")) {
      const BigInt value(r.at("alternate_source").at("value").get<std::string>());
      return BigRational(value, BigInt("5884534656000"));
    }
  }
  throw ParseError("embedded golden data: k=6 alternate source missing");
}

std::vector<Table2CellDiff> diff_table2(const std::vector<RhoPolynomial>& rows) {
  std::vector<Table2CellDiff> diffs;
  for (const auto& golden : table2_golden()) {
    if (golden.k >= rows.size()) continue;
    const auto printed = golden.polynomial();
    const auto& computed = rows[golden.k];
    const std::size_t top = std::max(printed.degree(), computed.degree());
    for (std::size_t i = 0; i <= top; ++i) {
      if (printed.coefficient(i) == computed.coefficient(i)) continue;
      Table2CellDiff d{golden.k,
                       static_cast<unsigned>(i),
                       printed.coefficient(i),
                       computed.coefficient(i),
                       i == 0 ? printed.coefficient(i) : printed.coefficient(i) / golden.prefactor,
                       i == 0 ? computed.coefficient(i) : computed.coefficient(i) / golden.prefactor,
                       false,
                       ""};
      for (const auto& e : golden.expect_diff) {
        if (e.power == i) {
          d.expected = true;
          d.note = e.note;
        }
      }
      diffs.push_back(std::move(d));
    }
  }
  return diffs;
}

}  // namespace cosecant

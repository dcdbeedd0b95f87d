#include "cosecant/serialize.hpp"

#include <sstream>

#include <json.hpp>

#include "cosecant/errors.hpp"

namespace cosecant {

using nlohmann::ordered_json;

namespace {

template <typename F>
auto guarded(const std::string& what, F&& f) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(what + ": " + e.what());
  }
}

ordered_json row_object(unsigned k, const RhoPolynomial& row) {
  ordered_json coeffs = ordered_json::array();
  for (const auto& c : row.coefficients()) coeffs.push_back({c.numerator().get_str(), c.denominator().get_str()});
  ordered_json obj;
  obj["k"] = k;
  obj["coeffs"] = std::move(coeffs);
  return obj;
}

}  // namespace

std::string polynomial_to_json(const RhoPolynomial& p) { return ordered_json(p.to_strings()).dump(); }

RhoPolynomial polynomial_from_json(const std::string& text) {
  return guarded("polynomial", [&] {
    const auto strings = ordered_json::parse(text).get<std::vector<std::string>>();
    return RhoPolynomial::from_strings(strings);
  });
}

std::string series_row_json(unsigned k, const RhoPolynomial& row) { return row_object(k, row).dump(); }

std::string series_table_json(const SeriesTable& table) {
  std::string out = "[\n";
  for (std::size_t k = 0; k < table.rows.size(); ++k) {
    out += "  " + series_row_json(static_cast<unsigned>(k), table.rows[k]);
    out += k + 1 < table.rows.size() ? ",\n" : "\n";
  }
  out += "]\n";
  return out;
}

SeriesTable series_table_from_json(const std::string& text) {
  return guarded("series table", [&] {
    SeriesTable table;
    for (const auto& row : ordered_json::parse(text)) {
      const auto k = row.at("k").get<unsigned>();
      if (k != table.rows.size()) throw ParseError("series table: expected k=" + std::to_string(table.rows.size()));
      std::vector<BigRational> coeffs;
      for (const auto& pair : row.at("coeffs")) {
        if (pair.size() != 2) throw ParseError("series table: coefficient is not a [num, den] pair");
        coeffs.emplace_back(BigInt(pair[0].get<std::string>()), BigInt(pair[1].get<std::string>()));
      }
      table.rows.emplace_back(std::move(coeffs));
    }
    if (table.rows.empty()) throw ParseError("series table: no rows");
    table.k_max = static_cast<unsigned>(table.rows.size() - 1);
    return table;
  });
}

std::string series_table_csv(const SeriesTable& table) {
  std::ostringstream out;
  out << "k,i,num,den\n";
  for (std::size_t k = 0; k < table.rows.size(); ++k) {
    const auto coeffs = table.rows[k].coefficients();
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      out << k << ',' << i << ',' << coeffs[i].numerator().get_str() << ',' << coeffs[i].denominator().get_str()
          << '\n';
    }
  }
  return out.str();
}

std::string reports_to_json(const std::vector<IdentityReport>& reports) {
  ordered_json arr = ordered_json::array();
  for (const auto& r : reports) {
    ordered_json params = ordered_json::object();
    for (const auto& [name, value] : r.params) params[name] = value;
    ordered_json obj;
    obj["id"] = r.id;
    obj["params"] = std::move(params);
    obj["left"] = r.left;
    obj["right"] = r.right;
    obj["pass"] = r.pass;
    obj["asserted"] = r.asserted;
    obj["note"] = r.note;
    arr.push_back(std::move(obj));
  }
  return arr.dump(1) + "\n";
}

std::vector<IdentityReport> reports_from_json(const std::string& text) {
  return guarded("identity reports", [&] {
    std::vector<IdentityReport> out;
    for (const auto& obj : ordered_json::parse(text)) {
      IdentityReport r;
      r.id = obj.at("id").get<std::string>();
      for (const auto& [name, value] : obj.at("params").items()) r.params.emplace_back(name, value.get<long>());
      r.left = obj.at("left").get<std::string>();
      r.right = obj.at("right").get<std::string>();
      r.pass = obj.at("pass").get<bool>();
      r.asserted = obj.value("asserted", true);
      r.note = obj.value("note", "");
      out.push_back(std::move(r));
    }
    return out;
  });
}

std::string csv_field(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace cosecant

#include "cosecant_cli/app.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "cosecant/coeffs.hpp"
#include "cosecant/errors.hpp"
#include "cosecant/genseries.hpp"
#include "cosecant/golden.hpp"
#include "cosecant/partitions.hpp"
#include "cosecant/serialize.hpp"
#include "cosecant/stirling.hpp"
#include "cosecant/symzeta.hpp"
#include "cosecant/verify.hpp"

namespace cosecant::cli {

namespace {

using nlohmann::ordered_json;

enum class Format { text, csv, json };

struct Options {
  std::string format;  // empty: the subcommand's default
  std::string out_path;
  unsigned parallelism = 1;
  unsigned verbosity = 0;
  unsigned precision = kDefaultPrecision;
};

Format resolve_format(const Options& opt, Format fallback) {
  if (opt.format.empty()) return fallback;
  if (opt.format == "csv") return Format::csv;
  if (opt.format == "json") return Format::json;
  return Format::text;
}

class Logger {
 public:
  Logger(std::ostream& err, unsigned verbosity) : err_(err), verbosity_(verbosity) {}
  void info(const std::string& msg) const {
    if (verbosity_ >= 1) err_ << "[info] " << msg << '\n';
  }
  std::ostream& err() const { return err_; }

 private:
  std::ostream& err_;
  unsigned verbosity_;
};

// Integers print without the "/1".
std::string rho_label(const BigRational& rho) {
  return rho.denominator() == 1 ? rho.numerator().get_str() : rho.to_string();
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

/// Runs f(0..n-1) on up to `parallelism` threads; results keep index order.
template <typename T>
std::vector<T> parallel_map(std::size_t n, unsigned parallelism, const std::function<T(std::size_t)>& f) {
  std::vector<T> out(n);
  const unsigned workers = std::max(1u, std::min<unsigned>(parallelism, static_cast<unsigned>(n)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) out[i] = f(i);
    return out;
  }
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < n; i += workers) out[i] = f(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

std::string join(const std::vector<std::string>& items, const std::string& sep) {
  std::string s;
  for (std::size_t i = 0; i < items.size(); ++i) s += (i ? sep : "") + items[i];
  return s;
}

ordered_json pair_json(const BigRational& q) {
  return ordered_json::array({q.numerator().get_str(), q.denominator().get_str()});
}

// ---------------------------------------------------------------- table1

int cmd_table1(unsigned k, Format fmt, std::ostream& o) {
  const auto parts = enumerate_partitions(k);
  auto part_list = [](const PartitionMultiset& pm) {
    std::vector<std::string> s;
    for (unsigned p : pm.parts()) s.push_back(std::to_string(p));
    return s;
  };
  if (fmt == Format::json) {
    ordered_json arr = ordered_json::array();
    for (const auto& pm : parts) {
      ordered_json lambda = ordered_json::object();
      const auto& mult = pm.multiplicities();
      for (auto it = mult.rbegin(); it != mult.rend(); ++it) lambda[std::to_string(it->part)] = it->multiplicity;
      arr.push_back({{"parts", pm.parts()}, {"lambda", lambda}, {"N", pm.length()}});
    }
    o << arr.dump() << '\n';
    return kExitOk;
  }
  if (fmt == Format::csv) {
    o << "parts";
    for (unsigned i = 1; i <= k; ++i) o << ",lambda_" << i;
    o << ",N\n";
    for (const auto& pm : parts) {
      o << join(part_list(pm), " ");
      for (unsigned i = 1; i <= k; ++i) {
        o << ',';
        if (const unsigned m = pm.multiplicity(i)) o << m;
      }
      o << ',' << pm.length() << '\n';
    }
    return kExitOk;
  }
  std::size_t width = std::string("partition").size();
  for (const auto& pm : parts) width = std::max(width, pm.to_string().size());
  o << std::left << std::setw(static_cast<int>(width)) << "partition";
  for (unsigned i = 1; i <= k; ++i) o << std::right << std::setw(5) << ("l" + std::to_string(i));
  o << std::right << std::setw(5) << "N" << '\n';
  for (const auto& pm : parts) {
    o << std::left << std::setw(static_cast<int>(width)) << pm.to_string();
    for (unsigned i = 1; i <= k; ++i) {
      const unsigned m = pm.multiplicity(i);
      o << std::right << std::setw(5) << (m ? std::to_string(m) : std::string("."));
    }
    o << std::right << std::setw(5) << pm.length() << '\n';
  }
  return kExitOk;
}

// ---------------------------------------------------------------- table2

struct Table2Check {
  bool oracle_agrees = true;
  unsigned oracle_first_bad = 0;
  std::vector<Table2CellDiff> diffs;
  bool unexpected = false;
};

Table2Check check_table2(const SeriesTable& table) {
  Table2Check c;
  const auto oracle = oracle_explog(table.k_max, SeriesKind::cosecant);
  for (unsigned k = 0; k <= table.k_max; ++k) {
    if (oracle.rows[k] != table.rows[k]) {
      c.oracle_agrees = false;
      c.oracle_first_bad = k;
      break;
    }
  }
  c.diffs = diff_table2(table.rows);
  for (const auto& d : c.diffs) c.unexpected = c.unexpected || !d.expected;
  return c;
}

void write_table2_text(const SeriesTable& table, std::ostream& o) {
  for (unsigned k = 0; k <= table.k_max; ++k) o << "k=" << k << ": " << table.rows[k].to_display() << '\n';
}

int cmd_table2(unsigned k_max, bool verify, Format fmt, unsigned parallelism, const Logger& log, std::ostream& o) {
  auto t0 = std::chrono::steady_clock::now();
  const auto table = partition_table(k_max, SeriesKind::cosecant, parallelism);
  log.info("partition method rows 0.." + std::to_string(k_max) + " in " + std::to_string(seconds_since(t0)) + " s");
  if (!verify) {
    if (fmt == Format::json) o << series_table_json(table);
    else if (fmt == Format::csv) o << series_table_csv(table);
    else write_table2_text(table, o);
    return kExitOk;
  }

  const Table2Check check = check_table2(table);
  const bool ok = check.oracle_agrees && !check.unexpected;
  if (fmt == Format::json) {
    ordered_json rows = ordered_json::array();
    for (unsigned k = 0; k <= k_max; ++k) {
      ordered_json coeffs = ordered_json::array();
      for (const auto& c : table.rows[k].coefficients()) coeffs.push_back(pair_json(c));
      rows.push_back({{"k", k}, {"coeffs", coeffs}});
    }
    ordered_json diffs = ordered_json::array();
    for (const auto& d : check.diffs) {
      diffs.push_back({{"k", d.k},
                       {"power", d.power},
                       {"printed", d.printed.to_string()},
                       {"computed", d.computed.to_string()},
                       {"printed_scaled", d.printed_scaled.to_string()},
                       {"computed_scaled", d.computed_scaled.to_string()},
                       {"expected", d.expected},
                       {"note", d.note}});
    }
    ordered_json report{{"oracle_agrees", check.oracle_agrees}, {"golden_diffs", diffs}, {"pass", ok}};
    o << ordered_json{{"rows", rows}, {"verification", report}}.dump(1) << '\n';
    return ok ? kExitOk : kExitVerificationFailed;
  }

  std::ostream& r = fmt == Format::csv ? log.err() : o;
  auto scaled = [](const BigRational& q) { return q.is_integer() ? q.numerator().get_str() : q.to_string(); };
  if (fmt == Format::csv) o << series_table_csv(table);
  else write_table2_text(table, o);
  if (fmt == Format::text) r << '\n';
  r << "verification:\n";
  r << "  partition method vs exp-log series: "
    << (check.oracle_agrees ? "identical" : "differ at k=" + std::to_string(check.oracle_first_bad)) << '\n';
  if (check.diffs.empty()) r << "  printed table: all rows match\n";
  for (const auto& d : check.diffs) {
    r << "  printed table k=" << d.k << " rho^" << d.power << ": printed " << scaled(d.printed_scaled) << ", computed "
      << scaled(d.computed_scaled) << " (" << d.computed.to_string() << ")"
      << (d.expected ? " [known misprint]" : " [UNEXPECTED]") << '\n';
    if (!d.note.empty()) r << "    " << d.note << '\n';
  }
  r << "  result: " << (ok ? "PASS" : "FAIL") << '\n';
  return ok ? kExitOk : kExitVerificationFailed;
}

// ---------------------------------------------------------------- table3

struct GridCell {
  std::string rho;
  unsigned k = 0;
  BetaCell cell;
};

int cmd_table3(const std::vector<std::string>& rhos, const std::vector<unsigned>& ks, bool verify, Format fmt,
               unsigned parallelism, std::ostream& o, const Logger& log) {
  std::vector<BigRational> rho_values;
  for (const auto& r : rhos) {
    BigRational q = BigRational::parse(r);
    if (q < BigRational(1)) throw ConfigurationError("table3: rho must be >= 1, got " + r);
    rho_values.push_back(std::move(q));
  }
  for (unsigned k : ks) {
    if (k < 4) throw ConfigurationError("table3: k must be >= 4, got " + std::to_string(k));
  }
  const std::size_t n = rhos.size() * ks.size();
  const auto cells = parallel_map<GridCell>(n, parallelism, [&](std::size_t idx) {
    const std::size_t r = idx / ks.size();
    const unsigned k = ks[idx % ks.size()];
    return GridCell{rho_label(rho_values[r]), k, beta_ratio_cell(rho_values[r], k)};
  });

  if (fmt == Format::json) {
    ordered_json arr = ordered_json::array();
    for (const auto& c : cells) {
      arr.push_back(
          {{"rho", c.rho}, {"k", c.k}, {"ratio", c.cell.truncated}, {"near_boundary", c.cell.near_boundary}});
    }
    o << arr.dump() << '\n';
  } else {
    const std::string sep = fmt == Format::csv ? "," : "  ";
    std::vector<std::string> header{"rho"};
    for (unsigned k : ks) header.push_back("k=" + std::to_string(k));
    if (fmt == Format::text) {
      o << std::left << std::setw(8) << "rho";
      for (unsigned k : ks) o << std::setw(10) << ("k=" + std::to_string(k));
      o << '\n';
    } else {
      o << join(header, ",") << '\n';
    }
    for (std::size_t r = 0; r < rhos.size(); ++r) {
      if (fmt == Format::text) o << std::left << std::setw(8) << cells[r * ks.size()].rho;
      else o << csv_field(cells[r * ks.size()].rho);
      for (std::size_t j = 0; j < ks.size(); ++j) {
        const auto& c = cells[r * ks.size() + j];
        const std::string s = c.cell.truncated + (c.cell.near_boundary ? "*" : "");
        if (fmt == Format::text) o << std::setw(10) << s;
        else o << ',' << s;
      }
      o << '\n';
    }
    if (fmt == Format::text) o << std::right;
  }

  if (!verify) return kExitOk;
  bool unexpected = false;
  std::size_t compared = 0;
  std::size_t matched = 0;
  for (const auto& c : cells) {
    for (const auto& g : table3_golden()) {
      if (std::to_string(g.rho) != c.rho || g.k != c.k) continue;
      ++compared;
      if (g.printed == c.cell.truncated) {
        ++matched;
        continue;
      }
      const bool known = !g.expect_diff_kind.empty();
      unexpected = unexpected || !known;
      log.err() << "table3 rho=" << c.rho << " k=" << c.k << ": printed " << g.printed << ", computed "
                << c.cell.truncated << (known ? " [" + g.expect_diff_kind + "] " + g.note : " [UNEXPECTED]") << '\n';
    }
  }
  log.err() << "table3: " << matched << " of " << compared << " printed cells reproduced\n";
  return unexpected ? kExitVerificationFailed : kExitOk;
}

// ---------------------------------------------------------------- table4

int cmd_table4(unsigned ell_max, Format fmt, std::ostream& o) {
  if (ell_max < 1 || ell_max > 10) throw ConfigurationError("table4: --ell-max must be in 1..10");
  std::vector<RPolynomial> rows;
  for (unsigned ell = 1; ell <= ell_max; ++ell) rows.push_back(r_poly(ell));
  if (fmt == Format::json) {
    ordered_json arr = ordered_json::array();
    for (const auto& r : rows) {
      arr.push_back({{"ell", r.ell}, {"coeffs", r.poly.to_strings()}, {"k_km1_factor", has_k_km1_factor(r)}});
    }
    o << arr.dump() << '\n';
  } else if (fmt == Format::csv) {
    o << "ell,i,num,den\n";
    for (const auto& r : rows) {
      const auto c = r.poly.coefficients();
      for (std::size_t i = 0; i < c.size(); ++i) {
        o << r.ell << ',' << i << ',' << c[i].numerator().get_str() << ',' << c[i].denominator().get_str() << '\n';
      }
    }
  } else {
    for (const auto& r : rows) {
      o << "r_" << r.ell << "(k) = " << r.poly.to_display("k") << (has_k_km1_factor(r) ? "   [k(k-1) | r]" : "")
        << '\n';
    }
  }
  return kExitOk;
}

// ---------------------------------------------------------------- cosec / secant

int cmd_series(SeriesKind kind, unsigned k, const std::string& rho_text, bool decimal, unsigned precision,
               unsigned parallelism, Format fmt, std::ostream& o) {
  const RhoPolynomial row = partition_transform(k, spec_for(kind), parallelism);
  const char* name = kind == SeriesKind::cosecant ? "c" : "d";
  if (rho_text.empty()) {
    if (fmt == Format::json) {
      o << series_row_json(k, row) << '\n';
    } else if (fmt == Format::csv) {
      o << "k,i,num,den\n";
      const auto c = row.coefficients();
      for (std::size_t i = 0; i < c.size(); ++i) {
        o << k << ',' << i << ',' << c[i].numerator().get_str() << ',' << c[i].denominator().get_str() << '\n';
      }
    } else {
      o << name << "_{rho," << k << "} = " << row.to_display() << '\n';
    }
    return kExitOk;
  }
  const BigRational rho = BigRational::parse(rho_text);
  const BigRational value = row(rho);
  std::string dec;
  if (decimal) dec = FloatHP(value, precision).to_scientific(precision);
  if (fmt == Format::json) {
    ordered_json obj{{"k", k}, {"rho", rho.to_string()}, {"value", value.to_string()}};
    if (decimal) obj["decimal"] = dec;
    o << obj.dump() << '\n';
  } else if (fmt == Format::csv) {
    o << "k,rho,num,den" << (decimal ? ",decimal" : "") << '\n';
    o << k << ',' << rho.to_string() << ',' << value.numerator().get_str() << ',' << value.denominator().get_str();
    if (decimal) o << ',' << dec;
    o << '\n';
  } else {
    o << name << "_{" << rho_label(rho) << "," << k << "} = " << value.to_string();
    if (decimal) o << " ~ " << dec;
    o << '\n';
  }
  return kExitOk;
}

// ---------------------------------------------------------------- verify

int cmd_verify(const std::string& suite, const VerifyRanges& ranges, Format fmt, unsigned verbosity, const Logger& log,
               std::ostream& o) {
  auto t0 = std::chrono::steady_clock::now();
  const auto reports = run_suite(suite, ranges);
  log.info("suite " + suite + ": " + std::to_string(reports.size()) + " instances in " +
           std::to_string(seconds_since(t0)) + " s");
  const bool ok = all_asserted_pass(reports);
  auto params_text = [](const IdentityReport& r) {
    std::vector<std::string> p;
    for (const auto& [name, value] : r.params) p.push_back(name + "=" + std::to_string(value));
    return join(p, " ");
  };
  if (fmt == Format::json) {
    o << reports_to_json(reports);
  } else if (fmt == Format::csv) {
    o << "id,params,pass,asserted,left,right,note\n";
    for (const auto& r : reports) {
      o << csv_field(r.id) << ',' << csv_field(params_text(r)) << ',' << (r.pass ? "true" : "false") << ','
        << (r.asserted ? "true" : "false") << ',' << csv_field(r.left) << ',' << csv_field(r.right) << ','
        << csv_field(r.note) << '\n';
    }
  } else {
    std::size_t failed = 0;
    for (const auto& r : reports) {
      const char* status = r.pass ? "pass" : (r.asserted ? "FAIL" : "fail (not asserted)");
      if (!r.pass || !r.asserted || verbosity >= 1) {
        o << r.id << ' ' << params_text(r) << ": " << status;
        if (!r.note.empty()) o << " (" << r.note << ')';
        o << '\n';
      }
      if (!r.pass && r.asserted) ++failed;
    }
    o << suite << ": " << reports.size() - failed << "/" << reports.size() << " passed\n";
  }
  return ok ? kExitOk : kExitVerificationFailed;
}

// ---------------------------------------------------------------- zeta

int cmd_zeta(unsigned m, unsigned v, unsigned precision, Format fmt, std::ostream& o) {
  if (m < 1 || m > 5) throw ConfigurationError("zeta: --m must be in 1..5");
  if (v < m + 2) throw ConfigurationError("zeta: --v must be >= m+2");
  if (precision < 30) throw ConfigurationError("zeta: --precision must be >= 30");
  const RiemannLimit lim = riemann_limit(m, v, precision);
  const FloatHP exact = zeta_even_closed(m, precision);
  const bool ok = lim.within();
  const unsigned sig = precision;
  if (fmt == Format::json) {
    o << ordered_json{{"m", m},
                      {"v", v},
                      {"precision", precision},
                      {"zeta", exact.to_scientific(sig)},
                      {"estimate", lim.estimate.to_scientific(sig)},
                      {"deviation", lim.deviation.to_scientific(sig)},
                      {"lower", lim.lower.to_scientific(sig)},
                      {"upper", lim.upper.to_scientific(sig)},
                      {"within", ok}}
             .dump()
      << '\n';
  } else if (fmt == Format::csv) {
    o << "m,v,precision,zeta,estimate,deviation,lower,upper,within\n";
    o << m << ',' << v << ',' << precision << ',' << exact.to_scientific(sig) << ',' << lim.estimate.to_scientific(sig)
      << ',' << lim.deviation.to_scientific(sig) << ',' << lim.lower.to_scientific(sig) << ','
      << lim.upper.to_scientific(sig) << ',' << (ok ? "true" : "false") << '\n';
  } else {
    o << "zeta(" << 2 * m << ")      = " << exact.to_scientific(sig) << '\n';
    o << "estimate(v=" << v << ") = " << lim.estimate.to_scientific(sig) << '\n';
    o << "deviation     = " << lim.deviation.to_scientific(sig) << '\n';
    o << "bracket       = [" << lim.lower.to_scientific(12) << ", " << lim.upper.to_scientific(12) << "]\n";
    o << "within        = " << (ok ? "yes" : "NO") << '\n';
  }
  return ok ? kExitOk : kExitVerificationFailed;
}

// ---------------------------------------------------------------- bench

int cmd_bench(unsigned k_max, const std::string& method, unsigned repetitions, unsigned parallelism, Format fmt,
              std::ostream& o) {
  if (k_max < 1) throw ConfigurationError("bench: --k-max must be >= 1");
  const bool run_partition = method != "oracle";
  const bool run_oracle = method != "partition";
  struct Row {
    unsigned k;
    double partition_s = -1;
    double oracle_s = -1;
    bool equal = true;
  };
  std::vector<Row> rows;
  bool all_equal = true;
  const SeriesSpec spec = cosecant_spec();
  for (unsigned k = 1; k <= k_max; ++k) {
    Row row{k};
    RhoPolynomial by_partition;
    RhoPolynomial by_oracle;
    if (run_partition) {
      double best = 1e300;
      for (unsigned rep = 0; rep < repetitions; ++rep) {
        auto t0 = std::chrono::steady_clock::now();
        by_partition = partition_transform(k, spec, parallelism);
        best = std::min(best, seconds_since(t0));
      }
      row.partition_s = best;
    }
    if (run_oracle) {
      double best = 1e300;
      for (unsigned rep = 0; rep < repetitions; ++rep) {
        auto t0 = std::chrono::steady_clock::now();
        by_oracle = oracle_explog(k, SeriesKind::cosecant).rows.back();
        best = std::min(best, seconds_since(t0));
      }
      row.oracle_s = best;
    }
    if (run_partition && run_oracle) row.equal = by_partition == by_oracle;
    all_equal = all_equal && row.equal;
    rows.push_back(row);
  }

  auto ms = [](double s) {
    std::ostringstream os;
    if (s < 0) return std::string();
    os << std::fixed << std::setprecision(3) << s * 1e3;
    return os.str();
  };
  if (fmt == Format::json) {
    ordered_json arr = ordered_json::array();
    for (const auto& r : rows) {
      ordered_json obj{{"k", r.k}, {"partitions", partition_count(r.k).get_str()}};
      if (run_partition) obj["partition_ms"] = r.partition_s * 1e3;
      if (run_oracle) obj["oracle_ms"] = r.oracle_s * 1e3;
      if (run_partition && run_oracle) obj["equal"] = r.equal;
      arr.push_back(std::move(obj));
    }
    o << arr.dump() << '\n';
  } else {
    const bool csv = fmt == Format::csv;
    std::vector<std::string> header{"k", "partitions"};
    if (run_partition) header.push_back("partition_ms");
    if (run_oracle) header.push_back("oracle_ms");
    if (run_partition && run_oracle) header.push_back("equal");
    if (csv) o << join(header, ",") << '\n';
    else {
      for (const auto& h : header) o << std::setw(14) << h;
      o << '\n';
    }
    for (const auto& r : rows) {
      std::vector<std::string> cols{std::to_string(r.k), partition_count(r.k).get_str()};
      if (run_partition) cols.push_back(ms(r.partition_s));
      if (run_oracle) cols.push_back(ms(r.oracle_s));
      if (run_partition && run_oracle) cols.push_back(r.equal ? "yes" : "NO");
      if (csv) o << join(cols, ",") << '\n';
      else {
        for (const auto& c : cols) o << std::setw(14) << c;
        o << '\n';
      }
    }
  }
  return all_equal ? kExitOk : kExitVerificationFailed;
}

// ---------------------------------------------------------------- coeff-closed

int cmd_coeff_closed(unsigned k_max, unsigned ell_max, bool check, Format fmt, std::ostream& o) {
  if (ell_max > 4) throw ConfigurationError("coeff-closed: --ell-max must be <= 4");
  struct Triple {
    unsigned k, ell;
    BigRational value;
    bool agrees;
  };
  std::vector<Triple> rows;
  bool ok = true;
  for (unsigned k = 1; k <= k_max; ++k) {
    for (unsigned ell = 0; ell <= ell_max && ell < k; ++ell) {
      const BigRational value = leading_closed(k, ell);
      const bool agrees = !check || value == coefficient(k, k - ell);
      ok = ok && agrees;
      rows.push_back({k, ell, value, agrees});
    }
  }
  if (fmt == Format::json) {
    ordered_json arr = ordered_json::array();
    for (const auto& r : rows) {
      ordered_json obj{{"k", r.k}, {"ell", r.ell}, {"value", r.value.to_string()}};
      if (check) obj["agrees"] = r.agrees;
      arr.push_back(std::move(obj));
    }
    o << arr.dump() << '\n';
  } else if (fmt == Format::csv) {
    o << "k,ell,fraction" << (check ? ",agrees" : "") << '\n';
    for (const auto& r : rows) {
      o << r.k << ',' << r.ell << ',' << r.value.to_string();
      if (check) o << ',' << (r.agrees ? "true" : "false");
      o << '\n';
    }
  } else {
    for (const auto& r : rows) {
      o << "C_{" << r.k << "," << r.k - r.ell << "} = " << r.value.to_string();
      if (check) o << (r.agrees ? "" : "  [differs from series]");
      o << '\n';
    }
  }
  return ok ? kExitOk : kExitVerificationFailed;
}

unsigned env_precision() {
  const char* env = std::getenv(kPrecisionEnv);
  if (env == nullptr || *env == '\0') return kDefaultPrecision;
  try {
    std::size_t pos = 0;
    const unsigned long v = std::stoul(env, &pos);
    if (pos == std::string(env).size() && v >= 10 && v <= 100000) return static_cast<unsigned>(v);
  } catch (const std::exception&) {
  }
  throw ConfigurationError(std::string(kPrecisionEnv) + " must be an integer in 10..100000");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generalized cosecant and secant numbers: tables, identities and benchmarks", "cosecant"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "cosecant 0.1.0");

  Options opt;
  std::string format;
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "csv", "json"}))
      ->group("Global");
  app.add_option("--out", opt.out_path, "Write primary output to PATH")->group("Global");
  app.add_option("-j,--parallel", opt.parallelism, "Worker threads (default 1)")
      ->check(CLI::Range(1u, 256u))
      ->group("Global");
  auto* verbose = app.add_flag("-v,--verbose", "Log progress to stderr (repeatable)")->group("Global");
  std::optional<unsigned> precision;
  app.add_option("--precision", precision,
                 std::string("Decimal digits for floating output (default ") + kPrecisionEnv + " or 50)")
      ->check(CLI::Range(10u, 100000u))
      ->group("Global");
  app.fallthrough();

  unsigned t1_k = 6;
  auto* t1 = app.add_subcommand("table1", "Partitions of k with multiplicities and lengths");
  t1->add_option("--k", t1_k, "Partitioned integer")->check(CLI::Range(0u, 60u));

  unsigned t2_kmax = 15;
  bool t2_verify = false;
  auto* t2 = app.add_subcommand("table2", "Generalized cosecant numbers c_{rho,k}, k = 0..k_max");
  t2->add_option("--k-max", t2_kmax, "Largest k")->check(CLI::Range(0u, 60u));
  t2->add_flag("--verify", t2_verify, "Cross-check against the exp-log series and the printed table");

  std::vector<std::string> t3_rhos{"10", "15", "20", "30", "50", "100", "1000"};
  std::vector<unsigned> t3_ks{6, 8, 10, 12, 15};
  bool t3_verify = false;
  auto* t3 = app.add_subcommand("table3", "Accuracy ratio of the four-term large-rho approximation");
  t3->alias("beta-table");
  t3->add_option("--rhos", t3_rhos, "Comma-separated rho values (integers or p/q)")->delimiter(',');
  t3->add_option("--ks", t3_ks, "Comma-separated k values (k >= 4)")->delimiter(',')->check(CLI::Range(4u, 60u));
  t3->add_flag("--verify", t3_verify, "Compare against the printed table");

  unsigned t4_ell = 10;
  auto* t4 = app.add_subcommand("table4", "Polynomials r_l(k) for Stirling numbers s_k^(k-l)");
  t4->add_option("--ell-max", t4_ell, "Largest l (1..10)");

  unsigned series_k = 0;
  std::string series_rho;
  bool series_decimal = false;
  auto* cosec = app.add_subcommand("cosec", "Generalized cosecant number c_{rho,k}");
  auto* secant = app.add_subcommand("secant", "Generalized secant number d_{rho,k}");
  for (auto* sub : {cosec, secant}) {
    sub->add_option("--k", series_k, "Index k")->required()->check(CLI::Range(0u, 60u));
    sub->add_option("--rho", series_rho, "Evaluate at rho (integer or p/q)");
    sub->add_flag("--decimal", series_decimal, "Also print a decimal value at --precision digits");
  }

  std::string suite;
  VerifyRanges ranges;
  auto* ver = app.add_subcommand("verify", "Run identity suites; prints IdentityReport records");
  ver->add_option("--suite", suite, "Suite name")->required()->check(CLI::IsMember(suite_names()));
  ver->add_option("--k-max", ranges.k_max, "rho-identities / oracle range")->capture_default_str();
  ver->add_option("--stirling-k-max", ranges.stirling_k_max)->capture_default_str()->check(CLI::Range(2u, 14u));
  ver->add_option("--stirling-j-max", ranges.stirling_j_max)->capture_default_str()->check(CLI::Range(1u, 6u));
  ver->add_option("--nine-v-max", ranges.nine_v_max)->capture_default_str();
  ver->add_option("--hurwitz-v-max", ranges.hurwitz_v_max)->capture_default_str();
  ver->add_option("--sym-v-max", ranges.sym_v_max)->capture_default_str();
  ver->add_option("--sym-ell-max", ranges.sym_ell_max)->capture_default_str();
  ver->add_option("--c2v-v-max", ranges.c2v_v_max)->capture_default_str();
  ver->add_option("--bernoulli-k-max", ranges.bernoulli_k_max)->capture_default_str()->check(CLI::Range(1u, 200u));
  ver->add_option("--leading-k-max", ranges.leading_k_max)->capture_default_str()->check(CLI::Range(5u, 60u));

  unsigned zeta_m = 0;
  unsigned zeta_v = 0;
  auto* zeta = app.add_subcommand("zeta", "Finite-v estimate of zeta(2m) and its analytic bracket");
  zeta->add_option("--m", zeta_m, "Order m (1..5)")->required();
  zeta->add_option("--v", zeta_v, "Truncation v (>= m+2)")->required();

  unsigned bench_kmax = 20;
  std::string bench_method = "both";
  unsigned bench_reps = 1;
  auto* bench = app.add_subcommand("bench", "Wall time per k: partition method vs exp-log series");
  bench->add_option("--k-max", bench_kmax, "Largest k")->check(CLI::Range(1u, 60u));
  bench->add_option("--method", bench_method)->check(CLI::IsMember({"partition", "oracle", "both"}));
  bench->add_option("--repetitions", bench_reps, "Best of R runs")->check(CLI::Range(1u, 1000u));

  unsigned cc_kmax = 20;
  unsigned cc_ell = 4;
  bool cc_check = false;
  auto* cc = app.add_subcommand("coeff-closed", "Closed forms C_{k,k-l} as (k, l, fraction) triples");
  cc->add_option("--k-max", cc_kmax, "Largest k")->check(CLI::Range(1u, 200u));
  cc->add_option("--ell-max", cc_ell, "Largest l (0..4)");
  cc->add_flag("--check", cc_check, "Compare each value with the series coefficient");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream help_out;
    std::ostringstream help_err;
    const int code = app.exit(e, help_out, help_err);
    out << help_out.str();
    err << help_err.str();
    return code == 0 ? kExitOk : kExitUsage;
  }

  opt.format = format;
  opt.verbosity = static_cast<unsigned>(verbose->count());
  const Logger log(err, opt.verbosity);

  std::ostringstream buffer;
  int code = kExitOk;
  try {
    opt.precision = precision ? *precision : env_precision();
    if (*t1) code = cmd_table1(t1_k, resolve_format(opt, Format::text), buffer);
    else if (*t2) code = cmd_table2(t2_kmax, t2_verify, resolve_format(opt, Format::text), opt.parallelism, log, buffer);
    else if (*t3) {
      const Format fallback = std::find(args.begin(), args.end(), "beta-table") != args.end() ? Format::csv : Format::text;
      code = cmd_table3(t3_rhos, t3_ks, t3_verify, resolve_format(opt, fallback), opt.parallelism, buffer, log);
    } else if (*t4) code = cmd_table4(t4_ell, resolve_format(opt, Format::text), buffer);
    else if (*cosec || *secant) {
      code = cmd_series(*cosec ? SeriesKind::cosecant : SeriesKind::secant, series_k, series_rho, series_decimal,
                        opt.precision, opt.parallelism, resolve_format(opt, Format::text), buffer);
    } else if (*ver) {
      ranges.parallelism = opt.parallelism;
      code = cmd_verify(suite, ranges, resolve_format(opt, Format::json), opt.verbosity, log, buffer);
    } else if (*zeta) code = cmd_zeta(zeta_m, zeta_v, opt.precision, resolve_format(opt, Format::text), buffer);
    else if (*bench) {
      code = cmd_bench(bench_kmax, bench_method, bench_reps, opt.parallelism, resolve_format(opt, Format::text), buffer);
    } else if (*cc) code = cmd_coeff_closed(cc_kmax, cc_ell, cc_check, resolve_format(opt, Format::text), buffer);
  } catch (const ConfigurationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitVerificationFailed;
  }

  if (opt.out_path.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(opt.out_path, std::ios::binary);
    if (!file || !(file << buffer.str())) {
      err << "error: cannot write " << opt.out_path << '\n';
      return kExitUsage;
    }
    log.info("wrote " + opt.out_path);
  }
  return code;
}

}  // namespace cosecant::cli

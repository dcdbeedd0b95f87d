// Acceptance criteria 1-10. Prints one PASS/FAIL line per criterion on
// stdout, with supporting detail on stderr.
//
//   cosecant_acceptance          run every criterion
//   cosecant_acceptance 3 7      run the listed criteria
//
// Exit status is non-zero when any selected criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cosecant/coeffs.hpp"
#include "cosecant/genseries.hpp"
#include "cosecant/golden.hpp"
#include "cosecant/stirling.hpp"
#include "cosecant/symzeta.hpp"
#include "cosecant/verify.hpp"
#include "cosecant_cli/app.hpp"
#include "oracles.hpp"

using namespace cosecant;

namespace {

struct Outcome {
  bool pass = false;
  std::string summary;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string fmt_seconds(double s) {
  std::ostringstream os;
  os.precision(3);
  os << s << " s";
  return os.str();
}

BigRational q(long n, long d = 1) { return BigRational(BigInt(n), BigInt(d)); }

// 1. Table 2: exact rows k = 0..15; the marked k=6 cell must be confirmed
// by both methods; runtime under 60 s.
Outcome criterion_table2() {
  const auto t0 = Clock::now();
  const auto table = partition_table(15, SeriesKind::cosecant);
  const auto oracle = oracle_explog(15, SeriesKind::cosecant);
  const bool methods_agree = table.rows == oracle.rows;
  const auto diffs = diff_table2(table.rows);
  bool unexpected = false;
  bool expected_confirmed = true;
  for (const auto& d : diffs) {
    std::cerr << "  table2 k=" << d.k << " rho^" << d.power << ": printed " << d.printed_scaled.to_string()
              << " computed " << d.computed_scaled.to_string() << (d.expected ? " (marked)" : " (UNMARKED)") << '\n';
    if (!d.expected) unexpected = true;
    if (d.expected && oracle.rows[d.k].coefficient(d.power) != d.computed) expected_confirmed = false;
  }
  const bool k6_displayed = table.rows[6].coefficient(2) == table2_k6_displayed_rho2();
  const double elapsed = seconds_since(t0);
  const bool pass = methods_agree && !unexpected && expected_confirmed && k6_displayed && elapsed < 60.0;
  std::ostringstream s;
  s << "16 rows; partition vs exp-log " << (methods_agree ? "identical" : "DIFFER") << "; " << diffs.size()
    << " marked cell(s) differ from print, resolved to the displayed 3327584"
    << (unexpected ? "; UNMARKED differences present" : "") << "; " << fmt_seconds(elapsed);
  return {pass, s.str()};
}

// 2. Table 1 through the command-line layer.
Outcome criterion_table1() {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run({"--format", "json", "table1", "--k", "6"}, out, err);
  const auto doc = nlohmann::json::parse(out.str());
  const auto& golden = table1_golden();
  bool pass = code == 0 && doc.size() == golden.size();
  for (std::size_t i = 0; pass && i < golden.size(); ++i) {
    pass = doc[i]["parts"].get<std::vector<unsigned>>() == golden[i].parts &&
           doc[i]["N"].get<unsigned>() == golden[i].length && doc[i]["lambda"].size() == golden[i].multiplicities.size();
    for (const auto& e : golden[i].multiplicities) {
      pass = pass && doc[i]["lambda"].value(std::to_string(e.part), 0u) == e.multiplicity;
    }
    if (!pass) std::cerr << "  table1 row " << i << " differs\n";
  }
  return {pass, std::to_string(doc.size()) + " rows compared (parts, multiplicities, N)"};
}

// 3. Table 3: all 35 cells as six truncated decimals; runtime under 60 s.
Outcome criterion_table3() {
  const auto t0 = Clock::now();
  std::size_t matched = 0;
  std::size_t rounded = 0;
  std::size_t typos = 0;
  const auto& cells = table3_golden();
  for (const auto& c : cells) {
    const auto got = beta_ratio(c.rho, c.k);
    if (got == c.printed) {
      ++matched;
      continue;
    }
    if (c.expect_diff_kind == "rounded") ++rounded;
    if (c.expect_diff_kind == "typo") ++typos;
    std::cerr << "  table3 (rho=" << c.rho << ", k=" << c.k << "): truncated " << got << ", printed " << c.printed
              << (c.expect_diff_kind.empty() ? "" : " [" + c.expect_diff_kind + "]") << '\n';
  }
  const double elapsed = seconds_since(t0);
  std::ostringstream s;
  s << matched << "/" << cells.size() << " cells match; " << rounded << " printed cells are rounded rather than truncated, "
    << typos << " carry digit typos; " << fmt_seconds(elapsed);
  return {matched == cells.size() && elapsed < 60.0, s.str()};
}

// 4. Table 4: exact rows for l in {1..7, 9, 10}; r_8 validated for
// 9 <= k <= 40 and its mismatch with the print reported.
Outcome criterion_table4() {
  bool rows_ok = true;
  std::vector<unsigned> mismatched;
  for (const auto& row : table4_golden()) {
    const auto r = r_poly(row.ell);
    if (r.poly == row.polynomial) continue;
    mismatched.push_back(row.ell);
    std::cerr << "  table4 l=" << row.ell << ": printed " << row.printed_text << "\n"
              << "           derived " << r.poly.to_display("k") << '\n';
    if (row.ell != 8) rows_ok = false;
  }
  const auto r8 = r_poly(8);
  bool r8_ok = true;
  for (unsigned k = 9; k <= 40; ++k) {
    const BigRational lhs(stirling1(k, k - 8));
    if (lhs != BigRational(binomial(k, 9)) * r8(k)) r8_ok = false;
  }
  const bool r8_reported = std::find(mismatched.begin(), mismatched.end(), 8u) != mismatched.end();
  std::ostringstream s;
  s << "rows differing from print:";
  for (unsigned ell : mismatched) s << " l=" << ell;
  s << "; r_8 identity for 9<=k<=40 " << (r8_ok ? "holds" : "FAILS") << (r8_reported ? ", mismatch reported" : "");
  if (!rows_ok) s << "; a row required to match does not";
  return {rows_ok && r8_ok && r8_reported, s.str()};
}

// 5. Spot rationals.
Outcome criterion_spot_values() {
  struct Check {
    std::string name;
    BigRational got;
    BigRational want;
  };
  const std::vector<Check> checks{
      {"C_{4,1}", coefficient(4, 1), q(144, 5443200)},
      {"leading_closed(8,3)", leading_closed(8, 3), q(73, 26453952000)},
      {"leading_closed(9,4)", leading_closed(9, 4), BigRational(BigInt(229051), BigInt("733303549440000"))},
      {"c2v_vm1_sum(5)", c2v_vm1_sum(5), q(128, 315)},
      {"c2v_vm1_beta(5)", c2v_vm1_beta(5), q(128, 315)},
      {"c_{10,4}", poly_eval(gen_cosecant(4), q(10)), q(128, 315)},
      {"cosecant_number(2)", cosecant_number(2), q(7, 360)},
  };
  std::size_t ok = 0;
  for (const auto& c : checks) {
    if (c.got == c.want) ++ok;
    else std::cerr << "  " << c.name << " = " << c.got << ", expected " << c.want << '\n';
  }
  return {ok == checks.size(), std::to_string(ok) + "/" + std::to_string(checks.size()) + " exact"};
}

// 6. Identity suites at full range, zero tolerance, under 10 minutes.
Outcome criterion_identities() {
  const auto t0 = Clock::now();
  VerifyRanges ranges;  // defaults are the full ranges
  std::ostringstream s;
  bool pass = true;
  std::size_t total = 0;
  for (const char* suite : {"rho-identities", "stirling", "nine", "hurwitz", "symmetric"}) {
    const auto reports = run_suite(suite, ranges);
    std::size_t failed = 0;
    for (const auto& r : reports) {
      if (r.asserted && !r.pass) {
        ++failed;
        std::cerr << "  " << r.id << " failed: " << r.left << " vs " << r.right << '\n';
      }
    }
    total += reports.size();
    pass = pass && failed == 0;
    s << suite << " " << reports.size() - failed << "/" << reports.size() << "; ";
  }
  const double elapsed = seconds_since(t0);
  s << fmt_seconds(elapsed);
  return {pass && elapsed < 600.0, s.str()};
}

// 7. Bernoulli numbers from cosecant numbers against an independent
// recurrence.
Outcome criterion_bernoulli() {
  const auto ref = oracle::bernoulli(30);
  std::size_t ok = 0;
  for (unsigned k = 1; k <= 15; ++k) {
    const auto b = bernoulli_from_cosecant(k);
    if (b.raw() == ref[2 * k]) ++ok;
    else std::cerr << "  B_" << 2 * k << ": " << b << " vs " << ref[2 * k].get_str() << '\n';
  }
  return {ok == 15, std::to_string(ok) + "/15 exact (k = 1..15)"};
}

// 8. zeta(2k) at P = 50 against the direct sum to N = 10^4 within the
// integral tail bound.
Outcome criterion_zeta_numeric() {
  constexpr unsigned kDigits = 50;
  constexpr unsigned long kN = 10000;
  std::vector<unsigned> failing;
  for (unsigned k = 1; k <= 10; ++k) {
    const FloatHP zeta = zeta_even_from_cosecant(k, kDigits);
    FloatHP sum(0, kDigits);
    for (unsigned long n = kN; n >= 1; --n) {
      sum = sum + FloatHP(1, kDigits) / pow(FloatHP(static_cast<long>(n), kDigits), 2 * k);
    }
    const FloatHP gap = abs(zeta - sum);
    const FloatHP bound =
        FloatHP(1, kDigits) / (pow(FloatHP(static_cast<long>(kN), kDigits), 2 * k - 1) * FloatHP(2 * k - 1, kDigits));
    const bool ok = gap < bound;
    if (!ok) failing.push_back(k);
    std::cerr << "  k=" << k << ": |zeta - sum| = " << gap.to_scientific(6) << ", bound " << bound.to_scientific(6)
              << (ok ? "" : "  EXCEEDS") << '\n';
  }
  std::ostringstream s;
  s << 10 - failing.size() << "/10 within the tail bound";
  if (!failing.empty()) {
    s << "; exceeded for k =";
    for (unsigned k : failing) s << ' ' << k;
    s << " (bound minus true tail is ~N^-2k/2, below the 50-digit working precision)";
  }
  return {failing.empty(), s.str()};
}

// 9. Riemann limit bracketing.
Outcome criterion_riemann_bracket() {
  std::size_t ok = 0;
  std::size_t total = 0;
  for (unsigned m = 1; m <= 3; ++m) {
    for (unsigned v : {5u, 10u, 20u, 50u}) {
      ++total;
      const auto lim = riemann_limit(m, v, 50);
      if (lim.within()) ++ok;
      else std::cerr << "  m=" << m << " v=" << v << ": deviation " << lim.deviation.to_scientific(10) << '\n';
    }
  }
  return {ok == total, std::to_string(ok) + "/" + std::to_string(total) + " deviations inside the bracket"};
}

// 10. Large-k behaviour of the classic cosecant numbers at P = 30.
Outcome criterion_large_k() {
  constexpr unsigned kDigits = 30;
  std::size_t ok = 0;
  std::size_t total = 0;
  const FloatHP pi = pi_hp(kDigits);
  for (unsigned k = 5; k <= 40; ++k) {
    ++total;
    const FloatHP scaled = FloatHP(cosecant_number(k), kDigits) * pow(pi, 2 * k) / FloatHP(2, kDigits);
    const FloatHP lhs = abs(scaled - FloatHP(1, kDigits));
    const FloatHP rhs = FloatHP(BigRational(BigInt(4), pow(BigInt(2), 2 * k)), kDigits);
    if (lhs < rhs) ++ok;
    else std::cerr << "  k=" << k << ": " << lhs.to_scientific(6) << " >= " << rhs.to_scientific(6) << '\n';
  }
  return {ok == total, std::to_string(ok) + "/" + std::to_string(total) + " (k = 5..40)"};
}

struct Criterion {
  int id;
  const char* title;
  std::function<Outcome()> run;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all{
      {1, "Table 2 reproduction", criterion_table2},
      {2, "Table 1 reproduction", criterion_table1},
      {3, "Table 3 reproduction", criterion_table3},
      {4, "Table 4 reproduction", criterion_table4},
      {5, "spot rationals", criterion_spot_values},
      {6, "identity suites", criterion_identities},
      {7, "Bernoulli cross-check", criterion_bernoulli},
      {8, "zeta(2k) numeric check", criterion_zeta_numeric},
      {9, "Riemann limit bracketing", criterion_riemann_bracket},
      {10, "large-k cosecant asymptotics", criterion_large_k},
  };
  return all;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) {
    char* end = nullptr;
    const long id = std::strtol(argv[i], &end, 10);
    if (*end != '\0' || id < 1 || id > static_cast<long>(criteria().size())) {
      std::cerr << "usage: " << argv[0] << " [criterion 1-10 ...]\n";
      return 2;
    }
    selected.push_back(static_cast<int>(id));
  }
  if (selected.empty()) {
    for (const auto& c : criteria()) selected.push_back(c.id);
  }

  bool all_pass = true;
  for (int id : selected) {
    const auto& c = criteria()[static_cast<std::size_t>(id - 1)];
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    all_pass = all_pass && o.pass;
    std::cout << "criterion " << c.id << ": " << (o.pass ? "PASS" : "FAIL") << "  " << c.title << "  (" << o.summary
              << ")" << std::endl;
  }
  return all_pass ? 0 : 1;
}

#include "cosecant/verify.hpp"

#include <algorithm>
#include <functional>
#include <memory>
#include <thread>

#include "cosecant/coeffs.hpp"
#include "cosecant/errors.hpp"
#include "cosecant/genseries.hpp"
#include "cosecant/stirling.hpp"
#include "cosecant/symzeta.hpp"

namespace cosecant {

namespace {

using Task = std::function<IdentityReport()>;

IdentityReport compare(std::string id, std::vector<std::pair<std::string, long>> params, const BigRational& left,
                       const BigRational& right, std::string note = {}) {
  IdentityReport r;
  r.id = std::move(id);
  r.params = std::move(params);
  r.left = left.to_string();
  r.right = right.to_string();
  r.pass = left == right;
  r.note = std::move(note);
  return r;
}

void rho_identity_tasks(const VerifyRanges& ranges, std::vector<Task>& tasks) {
  for (unsigned k = 0; k <= ranges.k_max; ++k) {
    tasks.emplace_back([k] {
      const long sign = k % 2 == 0 ? 1 : -1;
      return compare("rho_minus_one", {{"k", k}}, poly_eval(gen_cosecant(k), BigRational(-1)),
                     BigRational(sign) / BigRational(factorial(2 * k + 1)));
    });
    if (k >= 1) {
      tasks.emplace_back([k] {
        const BigRational scale = BigRational(1) - BigRational(1, pow(BigInt(2), 2 * k - 1));
        const BigRational right = BigRational(2 * static_cast<long>(k) - 1) * cosecant_number(k) / scale;
        return compare("rho_two", {{"k", k}}, poly_eval(gen_cosecant(k), BigRational(2)), right);
      });
    }
  }
  // One task per kind: the oracle builds the whole table in one pass.
  for (auto kind : {SeriesKind::cosecant, SeriesKind::secant}) {
    tasks.emplace_back([kind, k_max = ranges.k_max] {
      const std::string id = kind == SeriesKind::cosecant ? "oracle_cosecant" : "oracle_secant";
      const auto oracle = oracle_explog(k_max, kind);
      unsigned first_bad = k_max + 1;
      for (unsigned k = 0; k <= k_max && first_bad > k_max; ++k) {
        const auto row = kind == SeriesKind::cosecant ? gen_cosecant(k) : gen_secant(k);
        if (row != oracle.rows[k]) first_bad = k;
      }
      IdentityReport r;
      r.id = id;
      r.params = {{"k_max", k_max}};
      r.left = "partition method";
      r.right = "exp-log series";
      r.pass = first_bad > k_max;
      r.note = r.pass ? "rows 0.." + std::to_string(k_max) + " identical"
                      : "first differing row k=" + std::to_string(first_bad);
      return r;
    });
  }
}

void stirling_tasks(const VerifyRanges& ranges, std::vector<Task>& tasks) {
  for (unsigned j = 1; j <= ranges.stirling_j_max; ++j) {
    for (unsigned k = j + 1; k <= ranges.stirling_k_max; ++k) {
      tasks.emplace_back([j, k] {
        return compare("stirling_nested", {{"j", j}, {"k", k}}, BigRational(stirling1_nested(k, j)),
                       BigRational(stirling1(k, k - j)));
      });
    }
  }
}

void hurwitz_tasks(const VerifyRanges& ranges, std::vector<Task>& tasks) {
  for (unsigned m = 1; m <= 5; ++m) {
    for (unsigned v = m + 2; v <= ranges.hurwitz_v_max; ++v) {
      tasks.emplace_back([v, m] { return hurwitz_identity(v, m); });
    }
  }
  if (ranges.hurwitz_v_max >= 2) tasks.emplace_back([] { return hurwitz_identity(2, 1, true); });
}

void nine_tasks(const VerifyRanges& ranges, std::vector<Task>& tasks) {
  for (unsigned v = 1; v <= ranges.nine_v_max; ++v) {
    for (unsigned i = 0; i < v; ++i) tasks.emplace_back([v, i] { return identity_nine(v, i); });
  }
}

void symmetric_tasks(const VerifyRanges& ranges, std::vector<Task>& tasks) {
  for (unsigned v = 2; v <= ranges.sym_v_max; ++v) {
    for (unsigned ell = 1; ell <= std::min(v, ranges.sym_ell_max); ++ell) {
      tasks.emplace_back([v, ell] {
        return compare("sym_high", {{"v", v}, {"ell", ell}}, sym_high_partition(v, ell),
                       BigRational(sym_poly(v, v - ell)));
      });
    }
  }
}

void c2v_tasks(const VerifyRanges& ranges, std::vector<Task>& tasks) {
  for (unsigned v = 2; v <= ranges.c2v_v_max; ++v) {
    tasks.emplace_back([v] { return compare("c2v_sum_beta", {{"v", v}}, c2v_vm1_sum(v), c2v_vm1_beta(v)); });
    tasks.emplace_back([v] {
      return compare("c2v_beta_series", {{"v", v}}, c2v_vm1_beta(v),
                     poly_eval(gen_cosecant(v - 1), BigRational(2 * static_cast<long>(v))));
    });
  }
}

void bernoulli_tasks(const VerifyRanges& ranges, std::vector<Task>& tasks) {
  const auto b = std::make_shared<std::vector<BigRational>>(bernoulli_recurrence(2 * ranges.bernoulli_k_max));
  for (unsigned k = 1; k <= ranges.bernoulli_k_max; ++k) {
    tasks.emplace_back([k, b] { return compare("bernoulli", {{"k", k}}, bernoulli_from_cosecant(k), (*b)[2 * k]); });
  }
}

void leading_tasks(const VerifyRanges& ranges, std::vector<Task>& tasks) {
  for (unsigned ell = 0; ell <= 4; ++ell) {
    for (unsigned k = std::max(1u, ell + 1); k <= ranges.leading_k_max; ++k) {
      tasks.emplace_back([k, ell] {
        return compare("leading_closed", {{"ell", ell}, {"k", k}}, leading_closed(k, ell), coefficient(k, k - ell));
      });
    }
  }
  for (unsigned k = 3; k <= ranges.leading_k_max; ++k) {
    tasks.emplace_back(
        [k] { return compare("leading_four_partitions", {{"k", k}}, leading_kk2_from_stirling(k), coefficient(k, k - 2)); });
  }
  for (unsigned ell = 1; ell <= 4; ++ell) {
    tasks.emplace_back([ell, k_max = ranges.leading_k_max] {
      const auto fit = fit_leading_numerator(ell);
      unsigned first_bad = 0;
      for (unsigned k = ell + 1; k <= k_max && first_bad == 0; ++k) {
        if (leading_from_fit(fit, k, ell) != leading_closed(k, ell)) first_bad = k;
      }
      IdentityReport r;
      r.id = "leading_fit";
      r.params = {{"ell", ell}};
      r.left = fit.to_display("k");
      r.right = "closed form";
      r.pass = first_bad == 0;
      r.note = r.pass ? "fit agrees for k <= " + std::to_string(k_max) : "fit differs at k=" + std::to_string(first_bad);
      return r;
    });
  }
}

using Builder = void (*)(const VerifyRanges&, std::vector<Task>&);

const std::vector<std::pair<std::string, Builder>>& builders() {
  static const std::vector<std::pair<std::string, Builder>> table = {
      {"rho-identities", rho_identity_tasks}, {"stirling", stirling_tasks}, {"hurwitz", hurwitz_tasks},
      {"nine", nine_tasks},                   {"symmetric", symmetric_tasks}, {"c2v", c2v_tasks},
      {"bernoulli", bernoulli_tasks},         {"leading", leading_tasks},
  };
  return table;
}

void check_ranges(const VerifyRanges& r) {
  if (r.stirling_j_max > 6 || r.stirling_k_max > 14) {
    throw ConfigurationError("verify: nested Stirling sums are limited to j <= 6, k <= 14");
  }
  if (r.leading_k_max < 5) throw ConfigurationError("verify: leading suite needs k_max >= 5");
  if (r.parallelism == 0) throw ConfigurationError("verify: parallelism must be >= 1");
}

std::vector<IdentityReport> run_tasks(const std::vector<Task>& tasks, unsigned parallelism) {
  std::vector<IdentityReport> out(tasks.size());
  const unsigned workers = std::max(1u, std::min<unsigned>(parallelism, static_cast<unsigned>(tasks.size())));
  if (workers == 1) {
    for (std::size_t i = 0; i < tasks.size(); ++i) out[i] = tasks[i]();
  } else {
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::size_t i = w; i < tasks.size(); i += workers) out[i] = tasks[i]();
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }
  std::stable_sort(out.begin(), out.end(), report_less);
  return out;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n{"all"};
    for (const auto& [name, _] : builders()) n.push_back(name);
    return n;
  }();
  return names;
}

std::vector<IdentityReport> run_suite(const std::string& name, const VerifyRanges& ranges) {
  check_ranges(ranges);
  std::vector<Task> tasks;
  bool found = false;
  for (const auto& [suite, build] : builders()) {
    if (name == "all" || name == suite) {
      build(ranges, tasks);
      found = true;
    }
  }
  if (!found) throw ConfigurationError("unknown suite '" + name + "'");
  return run_tasks(tasks, ranges.parallelism);
}

bool all_asserted_pass(const std::vector<IdentityReport>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const IdentityReport& r) { return !r.asserted || r.pass; });
}

std::vector<BigRational> bernoulli_recurrence(unsigned n) {
  std::vector<BigRational> b{BigRational(1)};
  for (unsigned m = 1; m <= n; ++m) {
    BigRational sum;
    for (unsigned j = 0; j < m; ++j) sum += BigRational(binomial(m + 1, j)) * b[j];
    b.push_back(-sum / BigRational(static_cast<long>(m) + 1));
  }
  return b;
}

}  // namespace cosecant

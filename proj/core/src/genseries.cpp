#include "cosecant/genseries.hpp"

#include <map>
#include <mutex>
#include <string>
#include <thread>

#include "cosecant/errors.hpp"

namespace cosecant {

namespace {

int sign_of(const SeriesSpec& spec, unsigned k) { return spec.global_sign ? spec.global_sign(k) : 1; }

std::vector<BigRational> inner_values(unsigned k, const SeriesSpec& spec) {
  if (!spec.inner) throw ConfigurationError("series spec has no inner function");
  std::vector<BigRational> values(k + 1);
  for (unsigned i = 1; i <= k; ++i) {
    auto v = spec.inner(i);
    if (!v) throw ConfigurationError("inner value undefined for part " + std::to_string(i));
    values[i] = std::move(*v);
  }
  return values;
}

RhoPolynomial outer(unsigned length, const SeriesSpec& spec) {
  if (spec.outer_is_pochhammer) return pochhammer_poly(length);
  if (!spec.scalar_outer) throw ConfigurationError("series spec has no scalar outer weight");
  return RhoPolynomial(spec.scalar_outer(length));
}

BigRational product_term(const PartitionMultiset& pm, const std::vector<BigRational>& inner) {
  BigRational term(1);
  for (const auto& e : pm.multiplicities()) {
    term *= pow(inner[e.part], e.multiplicity);
    term /= BigRational(factorial(e.multiplicity));
  }
  return term;
}

// Per-length sums of prod inner^lambda / lambda! for partitions whose
// enumeration index is congruent to `lane` mod `lanes`.
std::vector<BigRational> accumulate_lane(unsigned k, const std::vector<BigRational>& inner, unsigned lane,
                                         unsigned lanes) {
  std::vector<BigRational> by_length(k + 1);
  std::size_t index = 0;
  for (PartitionGenerator gen(k); !gen.done(); gen.advance(), ++index) {
    if (index % lanes != lane) continue;
    const auto& pm = gen.current();
    by_length[pm.length()] += product_term(pm, inner);
  }
  return by_length;
}

template <typename Compute>
RhoPolynomial memoized(std::map<unsigned, RhoPolynomial>& cache, std::mutex& mutex, unsigned k, Compute compute) {
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(k); it != cache.end()) return it->second;
  }
  RhoPolynomial value = compute();
  std::lock_guard lock(mutex);
  return cache.emplace(k, std::move(value)).first->second;
}

}  // namespace

SeriesSpec cosecant_spec() {
  SeriesSpec spec;
  spec.inner = [](unsigned i) -> std::optional<BigRational> { return BigRational(BigInt(1), factorial(2 * i + 1)); };
  spec.global_sign = [](unsigned k) { return k % 2 == 0 ? 1 : -1; };
  return spec;
}

SeriesSpec secant_spec() {
  SeriesSpec spec;
  spec.inner = [](unsigned i) -> std::optional<BigRational> { return BigRational(BigInt(1), factorial(2 * i)); };
  spec.global_sign = [](unsigned k) { return k % 2 == 0 ? 1 : -1; };
  return spec;
}

SeriesSpec spec_for(SeriesKind kind) { return kind == SeriesKind::cosecant ? cosecant_spec() : secant_spec(); }

RhoPolynomial partition_contribution(const PartitionMultiset& pm, const SeriesSpec& spec) {
  const auto inner = inner_values(pm.weight(), spec);
  BigRational scalar = product_term(pm, inner);
  int sign = sign_of(spec, pm.weight());
  if (spec.alternate_by_length && pm.length() % 2 == 1) sign = -sign;
  if (sign < 0) scalar = -scalar;
  return outer(pm.length(), spec) * scalar;
}

RhoPolynomial partition_transform(unsigned k, const SeriesSpec& spec, unsigned parallelism) {
  const auto inner = inner_values(k, spec);
  const unsigned lanes = std::max(1u, parallelism);

  std::vector<std::vector<BigRational>> partial(lanes);
  if (lanes == 1) {
    partial[0] = accumulate_lane(k, inner, 0, 1);
  } else {
    std::vector<std::thread> workers;
    workers.reserve(lanes);
    for (unsigned lane = 0; lane < lanes; ++lane) {
      workers.emplace_back([&, lane] { partial[lane] = accumulate_lane(k, inner, lane, lanes); });
    }
    for (auto& w : workers) w.join();
  }

  const int global = sign_of(spec, k);
  RhoPolynomial result;
  for (unsigned n = 0; n <= k; ++n) {
    BigRational scalar;
    for (const auto& lane : partial) scalar += lane[n];
    if (scalar.is_zero()) continue;
    int sign = global;
    if (spec.alternate_by_length && n % 2 == 1) sign = -sign;
    if (sign < 0) scalar = -scalar;
    result += outer(n, spec) * scalar;
  }
  return result;
}

RhoPolynomial gen_cosecant(unsigned k) {
  static std::mutex mutex;
  static std::map<unsigned, RhoPolynomial> cache;
  return memoized(cache, mutex, k, [k] { return partition_transform(k, cosecant_spec()); });
}

RhoPolynomial gen_secant(unsigned k) {
  static std::mutex mutex;
  static std::map<unsigned, RhoPolynomial> cache;
  return memoized(cache, mutex, k, [k] { return partition_transform(k, secant_spec()); });
}

SeriesTable partition_table(unsigned k_max, SeriesKind kind, unsigned parallelism) {
  SeriesTable table{k_max, {}};
  table.rows.reserve(k_max + 1);
  const auto spec = spec_for(kind);
  for (unsigned k = 0; k <= k_max; ++k) table.rows.push_back(partition_transform(k, spec, parallelism));
  return table;
}

BigRational cosecant_number(unsigned k) { return poly_eval(gen_cosecant(k), BigRational(1)); }

BigRational bernoulli_from_cosecant(unsigned k) {
  if (k == 0) throw DomainError("bernoulli_from_cosecant requires k >= 1");
  const BigRational scale(factorial(2 * k), pow(BigInt(2), 2 * k) - 2);
  const BigRational b = scale * cosecant_number(k);
  return k % 2 == 1 ? b : -b;
}

FloatHP zeta_even_from_cosecant(unsigned k, unsigned digits) {
  if (k == 0) throw DomainError("zeta_even_from_cosecant requires k >= 1");
  // c_k / (2 (1 - 2^{1-2k})) is exact; only pi^{2k} is rounded.
  const BigRational one_minus = BigRational(1) - BigRational(BigInt(1), pow(BigInt(2), 2 * k - 1));
  const BigRational factor = cosecant_number(k) / (BigRational(2) * one_minus);
  return FloatHP(factor, digits) * pow(pi_hp(digits), 2 * k);
}

}  // namespace cosecant

#include "cosecant/partitions.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

#include "cosecant/errors.hpp"

namespace cosecant {

PartitionMultiset::PartitionMultiset(unsigned weight, std::vector<PartCount> multiplicities)
    : weight_(weight), entries_(std::move(multiplicities)) {
  unsigned long sum = 0;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    const auto& e = entries_[i];
    if (e.part == 0 || e.multiplicity == 0) throw DomainError("partition entries must be positive");
    if (i > 0 && entries_[i - 1].part <= e.part) throw DomainError("partition parts must be strictly decreasing");
    if (e.multiplicity > weight / e.part) throw DomainError("multiplicity exceeds floor(k/i)");
    sum += static_cast<unsigned long>(e.part) * e.multiplicity;
    length_ += e.multiplicity;
  }
  if (sum != weight) throw DomainError("partition parts do not sum to its weight");
}

PartitionMultiset PartitionMultiset::from_parts(std::span<const unsigned> parts) {
  std::map<unsigned, unsigned, std::greater<>> counts;
  unsigned weight = 0;
  for (unsigned p : parts) {
    ++counts[p];
    weight += p;
  }
  std::vector<PartCount> entries;
  for (const auto& [part, mult] : counts) entries.push_back({part, mult});
  return PartitionMultiset(weight, std::move(entries));
}

unsigned PartitionMultiset::multiplicity(unsigned part) const {
  for (const auto& e : entries_) {
    if (e.part == part) return e.multiplicity;
  }
  return 0;
}

std::vector<unsigned> PartitionMultiset::parts() const {
  std::vector<unsigned> out;
  out.reserve(length_);
  for (const auto& e : entries_) out.insert(out.end(), e.multiplicity, e.part);
  return out;
}

std::string PartitionMultiset::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (unsigned p : parts()) {
    if (!first) os << ',';
    os << p;
    first = false;
  }
  os << '}';
  return os.str();
}

PartitionGenerator::PartitionGenerator(unsigned k) {
  current_.weight_ = k;
  if (k > 0) {
    current_.entries_.push_back({k, 1});
    current_.length_ = 1;
  }
}

void PartitionGenerator::advance() {
  if (done_) return;
  auto& entries = current_.entries_;
  // The last partition is {1,...,1} (or the empty partition of 0).
  if (entries.empty() || entries.front().part == 1) {
    done_ = true;
    return;
  }
  unsigned pool = 0;
  if (entries.back().part == 1) {
    pool = entries.back().multiplicity;
    current_.length_ -= pool;
    entries.pop_back();
  }
  // Break one copy of the smallest part > 1 into parts of size part - 1,
  // absorbing the ones collected above.
  auto& smallest = entries.back();
  const unsigned part = smallest.part;
  pool += part;
  --current_.length_;
  if (--smallest.multiplicity == 0) entries.pop_back();
  const unsigned next = part - 1;
  const unsigned copies = pool / next;
  const unsigned rest = pool % next;
  entries.push_back({next, copies});
  current_.length_ += copies;
  if (rest > 0) {
    entries.push_back({rest, 1});
    ++current_.length_;
  }
}

std::vector<PartitionMultiset> enumerate_partitions(unsigned k) {
  std::vector<PartitionMultiset> out;
  for (PartitionGenerator gen(k); !gen.done(); gen.advance()) out.push_back(gen.current());
  return out;
}

BigInt partition_count(unsigned k) {
  static std::mutex mutex;
  static std::vector<BigInt> table{BigInt(1)};
  std::lock_guard lock(mutex);
  while (table.size() <= k) {
    const long n = static_cast<long>(table.size());
    BigInt value = 0;
    for (long j = 1;; ++j) {
      const long g1 = j * (3 * j - 1) / 2;
      if (g1 > n) break;
      const long g2 = j * (3 * j + 1) / 2;
      BigInt term = table[static_cast<std::size_t>(n - g1)];
      if (g2 <= n) term += table[static_cast<std::size_t>(n - g2)];
      if (j % 2 == 1) value += term;
      else value -= term;
    }
    table.push_back(value);
  }
  return table[k];
}

BigInt multinomial_factor(const PartitionMultiset& pm) {
  BigInt out = factorial(pm.length());
  for (const auto& e : pm.multiplicities()) out /= factorial(e.multiplicity);
  return out;
}

}  // namespace cosecant

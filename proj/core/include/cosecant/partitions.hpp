#pragma once

#include <cstddef>
#include <functional>
#include <iterator>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "cosecant/big_rational.hpp"

namespace cosecant {

/// One (part, multiplicity) entry of a partition; only nonzero
/// multiplicities are stored.
struct PartCount {
  unsigned part;
  unsigned multiplicity;

  friend bool operator==(const PartCount&, const PartCount&) = default;
};

/// A partition of `weight` in multiplicity form: lambda_i copies of part i.
/// Entries are kept in strictly decreasing part order, so the sum of
/// part * multiplicity equals the weight and the length N is the sum of the
/// multiplicities. The empty partition of 0 has length 0.
class PartitionMultiset {
 public:
  PartitionMultiset() = default;
  /// Validates the invariants; throws DomainError when they fail.
  PartitionMultiset(unsigned weight, std::vector<PartCount> multiplicities);
  /// Builds from a part list in any order, e.g. {2,1,1,1,1}.
  static PartitionMultiset from_parts(std::span<const unsigned> parts);

  unsigned weight() const { return weight_; }
  unsigned length() const { return length_; }
  /// lambda_part; zero for absent parts.
  unsigned multiplicity(unsigned part) const;
  std::span<const PartCount> multiplicities() const { return entries_; }
  /// Non-increasing part list, e.g. {3,1,1,1}.
  std::vector<unsigned> parts() const;
  /// "{3,1,1,1}"; "{}" for the empty partition.
  std::string to_string() const;

  friend bool operator==(const PartitionMultiset&, const PartitionMultiset&) = default;

 private:
  friend class PartitionGenerator;

  unsigned weight_ = 0;
  unsigned length_ = 0;
  std::vector<PartCount> entries_;
};

/// Generates the partitions of k in decreasing lexicographic order of the
/// part list ({k}, {k-1,1}, ..., {1,...,1}) with an amortized O(1)
/// successor rule on the multiplicity form. No recursion.
class PartitionGenerator {
 public:
  explicit PartitionGenerator(unsigned k);

  /// Current partition; valid while !done().
  const PartitionMultiset& current() const { return current_; }
  bool done() const { return done_; }
  void advance();

 private:
  PartitionMultiset current_;
  bool done_ = false;
};

/// Input range over the partitions of k, for range-for loops.
class Partitions {
 public:
  explicit Partitions(unsigned k) : k_(k) {}

  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = PartitionMultiset;
    using difference_type = std::ptrdiff_t;
    using pointer = const PartitionMultiset*;
    using reference = const PartitionMultiset&;

    iterator() = default;
    explicit iterator(unsigned k) : gen_(std::make_shared<PartitionGenerator>(k)) {}

    reference operator*() const { return gen_->current(); }
    pointer operator->() const { return &gen_->current(); }
    iterator& operator++() {
      gen_->advance();
      return *this;
    }
    void operator++(int) { ++*this; }
    friend bool operator==(const iterator& it, std::default_sentinel_t) { return !it.gen_ || it.gen_->done(); }

   private:
    std::shared_ptr<PartitionGenerator> gen_;
  };

  iterator begin() const { return iterator(k_); }
  std::default_sentinel_t end() const { return {}; }

 private:
  unsigned k_;
};

std::vector<PartitionMultiset> enumerate_partitions(unsigned k);

/// p(k) from Euler's pentagonal-number recurrence; independent of the
/// enumerator.
BigInt partition_count(unsigned k);

/// N! / prod_i lambda_i!.
BigInt multinomial_factor(const PartitionMultiset& pm);

}  // namespace cosecant

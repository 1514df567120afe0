#pragma once

// Brute-force oracles. Everything here is computed straight from the
// combinatorial definitions by walking all partitions (or subsets), and is
// deliberately independent of the series machinery.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iterator>
#include <optional>
#include <utility>
#include <vector>

#include "partlab/series.hpp"

namespace partlab {

inline constexpr unsigned kDefaultPartitionCap = 60;
inline constexpr unsigned kDefaultSubsetCap = 25;

/// Weakly decreasing sequence of positive parts summing to `n`.
struct Partition {
  std::vector<unsigned> parts;
  unsigned n = 0;

  /// (value, multiplicity) pairs, largest value first.
  std::vector<std::pair<unsigned, unsigned>> multiplicities() const;
  unsigned multiplicity(unsigned value) const;
  bool operator==(const Partition&) const = default;
};

/// Walks the partitions of n in reverse-lexicographic order, starting at
/// the single part `n` and ending at 1+1+...+1. n = 0 yields the empty
/// partition once.
class PartitionGenerator {
 public:
  explicit PartitionGenerator(unsigned n);

  bool done() const noexcept { return done_; }
  const Partition& current() const noexcept { return current_; }
  void advance();

 private:
  Partition current_;
  bool done_ = false;
};

/// Input range over PartitionGenerator, for range-for loops.
class PartitionRange {
 public:
  class iterator {
   public:
    using value_type = Partition;
    using difference_type = std::ptrdiff_t;

    iterator() = default;
    explicit iterator(PartitionGenerator* gen) : gen_(gen) {}
    const Partition& operator*() const { return gen_->current(); }
    const Partition* operator->() const { return &gen_->current(); }
    iterator& operator++() {
      gen_->advance();
      return *this;
    }
    void operator++(int) { ++*this; }
    bool operator==(std::default_sentinel_t) const { return gen_ == nullptr || gen_->done(); }

   private:
    PartitionGenerator* gen_ = nullptr;
  };

  explicit PartitionRange(unsigned n) : gen_(n) {}
  iterator begin() { return iterator(&gen_); }
  std::default_sentinel_t end() const { return {}; }

 private:
  PartitionGenerator gen_;
};

inline PartitionRange partitions(unsigned n) { return PartitionRange(n); }

/// Number of partitions of n, by walking them.
std::uint64_t count_partitions(unsigned n);

// Statistics from their verbal definitions. The a- and b-statistics add each
// qualifying part value once per partition, however often it repeats.
BigInt a_k_enum(unsigned n, unsigned k);
BigInt a_kp_enum(unsigned n, unsigned k, unsigned p);
BigInt b_k_enum(unsigned n, unsigned k);

/// Partitions where ell is the least positive non-part and parts larger than
/// ell outnumber parts smaller than ell (multiplicities counted).
BigInt M_ell_enum(unsigned n, unsigned ell);

/// Partitions whose first part larger than 2*ell-1 is odd and occurs exactly
/// ell times, every other odd part occurring at most once.
BigInt MP_ell_enum(unsigned n, unsigned ell);

/// M_ell_enum / MP_ell_enum for every 1 <= ell <= ell_max in one pass over
/// the partitions of n; index 0 is unused.
std::vector<BigInt> M_ell_enum_all(unsigned n, unsigned ell_max);
std::vector<BigInt> MP_ell_enum_all(unsigned n, unsigned ell_max);

/// Partitions of n into distinct parts.
BigInt Q_enum(unsigned n);

/// Subsets of {1..n} containing an element larger than the sum of the
/// others, found by visiting all 2^n subsets. Throws std::out_of_range when
/// n exceeds `cap`.
BigInt c_subset_oracle(unsigned n, unsigned cap = kDefaultSubsetCap);

/// All a_{k,p}(n) and b_k(n) for 1 <= k <= k_max from one pass over the
/// partitions of n. `a[k][p]` and `b[k]`; index 0 of the outer vectors is
/// unused.
struct PartitionTally {
  unsigned n = 0;
  std::vector<std::vector<BigInt>> a;
  std::vector<BigInt> b;
};
PartitionTally tally_statistics(unsigned n, unsigned k_max);

/// A partition with one overlined part occurrence and, optionally, one
/// further colored occurrence; both marked values are divisible by k. The
/// two marks sit on different occurrences, so they may share a value only
/// when that value repeats.
struct OverpartitionMarked {
  Partition base;
  unsigned overlined_part = 0;
  std::optional<unsigned> colored_part;
};

/// The set P_k(n): exactly one part divisible by k is overlined.
std::vector<OverpartitionMarked> overpartitions_P(unsigned n, unsigned k);
/// The set A_k(n): as P_k(n), plus at most one other colored part divisible
/// by k.
std::vector<OverpartitionMarked> overpartitions_A(unsigned n, unsigned k);

/// Visits the elements of A_k(n) without materialising them; elements of
/// P_k(n) are exactly those with no colored part.
void visit_overpartitions_A(
    unsigned n, unsigned k,
    const std::function<void(const Partition&, unsigned, std::optional<unsigned>)>& visit);

/// Per-k sizes of P_k(n) and A_k(n) and the overlined-part total over
/// P_k(n), for 1 <= k <= k_max, from one pass that counts the markings of
/// each partition. Index 0 is unused.
struct OverpartitionTally {
  std::vector<std::uint64_t> p_count;
  std::vector<std::uint64_t> a_count;
  std::vector<std::uint64_t> overlined_sum;
};
OverpartitionTally overpartition_tally(unsigned n, unsigned k_max);

}  // namespace partlab

#include "partlab/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace partlab {

namespace {

void check_k(unsigned k) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
}

void check_kp(unsigned k, unsigned p) {
  check_k(k);
  if (p >= k) throw std::invalid_argument("p must satisfy 0 <= p <= k-1");
}

// Calls visit(value, multiplicity) for each distinct part, largest first.
template <typename F>
void for_each_run(const std::vector<unsigned>& parts, F&& visit) {
  std::size_t i = 0;
  while (i < parts.size()) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    visit(parts[i], static_cast<unsigned>(j - i));
    i = j;
  }
}

}  // namespace

std::vector<std::pair<unsigned, unsigned>> Partition::multiplicities() const {
  std::vector<std::pair<unsigned, unsigned>> out;
  for_each_run(parts, [&](unsigned v, unsigned m) { out.emplace_back(v, m); });
  return out;
}

unsigned Partition::multiplicity(unsigned value) const {
  return static_cast<unsigned>(std::count(parts.begin(), parts.end(), value));
}

PartitionGenerator::PartitionGenerator(unsigned n) {
  current_.n = n;
  if (n > 0) current_.parts.push_back(n);
}

void PartitionGenerator::advance() {
  if (done_) return;
  auto& parts = current_.parts;
  // Strip the trailing 1s; if nothing else is left this was 1+1+...+1.
  unsigned freed = 0;
  while (!parts.empty() && parts.back() == 1) {
    parts.pop_back();
    ++freed;
  }
  if (parts.empty()) {
    done_ = true;
    return;
  }
  const unsigned x = --parts.back();
  ++freed;
  while (freed >= x) {
    parts.push_back(x);
    freed -= x;
  }
  if (freed > 0) parts.push_back(freed);
}

std::uint64_t count_partitions(unsigned n) {
  std::uint64_t count = 0;
  for (PartitionGenerator g(n); !g.done(); g.advance()) ++count;
  return count;
}

BigInt a_k_enum(unsigned n, unsigned k) { return a_kp_enum(n, k, 0); }

BigInt a_kp_enum(unsigned n, unsigned k, unsigned p) {
  check_kp(k, p);
  std::uint64_t total = 0;
  for (PartitionGenerator g(n); !g.done(); g.advance())
    for_each_run(g.current().parts, [&](unsigned v, unsigned) {
      if (v % k == p) total += v;
    });
  return BigInt(static_cast<unsigned long>(total));
}

BigInt b_k_enum(unsigned n, unsigned k) {
  check_k(k);
  std::uint64_t total = 0;
  for (PartitionGenerator g(n); !g.done(); g.advance())
    for_each_run(g.current().parts, [&](unsigned v, unsigned m) {
      if (m >= k) total += v;
    });
  return BigInt(static_cast<unsigned long>(total));
}

std::vector<BigInt> M_ell_enum_all(unsigned n, unsigned ell_max) {
  if (ell_max < 1) throw std::invalid_argument("ell must be >= 1");
  std::vector<std::uint64_t> count(ell_max + 1);
  std::vector<bool> present(n + 2);
  for (PartitionGenerator g(n); !g.done(); g.advance()) {
    const auto& parts = g.current().parts;
    std::fill(present.begin(), present.end(), false);
    for (unsigned v : parts) present[v] = true;
    unsigned mex = 1;
    while (mex <= n && present[mex]) ++mex;
    if (mex > ell_max) continue;
    std::size_t above = 0, below = 0;
    for (unsigned v : parts) {
      if (v > mex) ++above;
      if (v < mex) ++below;
    }
    if (above > below) ++count[mex];
  }
  std::vector<BigInt> out(ell_max + 1);
  for (unsigned l = 1; l <= ell_max; ++l) out[l] = static_cast<unsigned long>(count[l]);
  return out;
}

BigInt M_ell_enum(unsigned n, unsigned ell) { return M_ell_enum_all(n, ell)[ell]; }

std::vector<BigInt> MP_ell_enum_all(unsigned n, unsigned ell_max) {
  if (ell_max < 1) throw std::invalid_argument("ell must be >= 1");
  std::vector<std::uint64_t> count(ell_max + 1);
  std::vector<std::pair<unsigned, unsigned>> runs;
  for (PartitionGenerator g(n); !g.done(); g.advance()) {
    runs.clear();
    for_each_run(g.current().parts, [&](unsigned v, unsigned m) { runs.emplace_back(v, m); });
    // Odd values occurring more than once; at most one may be allowed.
    std::size_t repeated_odd = 0;
    for (const auto& [v, m] : runs)
      if (v % 2 == 1 && m > 1) ++repeated_odd;
    for (unsigned ell = 1; ell <= ell_max; ++ell) {
      const unsigned threshold = 2 * ell - 1;
      // Runs are largest first: the first part above the threshold is the
      // last run whose value still exceeds it.
      std::optional<std::size_t> first_big;
      for (std::size_t i = 0; i < runs.size() && runs[i].first > threshold; ++i) first_big = i;
      if (!first_big) continue;
      const auto [value, mult] = runs[*first_big];
      if (value % 2 == 0 || mult != ell) continue;
      const std::size_t own = mult > 1 ? 1 : 0;
      if (repeated_odd - own == 0) ++count[ell];
    }
  }
  std::vector<BigInt> out(ell_max + 1);
  for (unsigned l = 1; l <= ell_max; ++l) out[l] = static_cast<unsigned long>(count[l]);
  return out;
}

BigInt MP_ell_enum(unsigned n, unsigned ell) { return MP_ell_enum_all(n, ell)[ell]; }

BigInt Q_enum(unsigned n) {
  std::uint64_t count = 0;
  for (PartitionGenerator g(n); !g.done(); g.advance()) {
    const auto& parts = g.current().parts;
    if (std::adjacent_find(parts.begin(), parts.end()) == parts.end()) ++count;
  }
  return BigInt(static_cast<unsigned long>(count));
}

BigInt c_subset_oracle(unsigned n, unsigned cap) {
  if (n > cap)
    throw std::out_of_range("c_subset_oracle: n=" + std::to_string(n) +
                            " exceeds the exhaustive-enumeration cap " + std::to_string(cap));
  if (n >= 63) throw std::out_of_range("c_subset_oracle: n too large for a 64-bit subset mask");
  std::uint64_t count = 0;
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (std::uint64_t mask = 1; mask < limit; ++mask) {
    std::uint64_t sum = 0;
    for (std::uint64_t m = mask; m != 0; m &= m - 1) sum += std::countr_zero(m) + 1U;
    const auto largest = static_cast<std::uint64_t>(std::bit_width(mask));
    if (largest > sum - largest) ++count;
  }
  return BigInt(static_cast<unsigned long>(count));
}

PartitionTally tally_statistics(unsigned n, unsigned k_max) {
  check_k(k_max);
  std::vector<std::vector<std::uint64_t>> a(k_max + 1);
  std::vector<std::uint64_t> b(k_max + 1);
  for (unsigned k = 1; k <= k_max; ++k) a[k].assign(k, 0);
  for (PartitionGenerator g(n); !g.done(); g.advance())
    for_each_run(g.current().parts, [&](unsigned v, unsigned m) {
      for (unsigned k = 1; k <= k_max; ++k) {
        a[k][v % k] += v;
        if (m >= k) b[k] += v;
      }
    });

  PartitionTally t;
  t.n = n;
  t.a.resize(k_max + 1);
  t.b.resize(k_max + 1);
  for (unsigned k = 1; k <= k_max; ++k) {
    for (auto x : a[k]) t.a[k].emplace_back(static_cast<unsigned long>(x));
    t.b[k] = static_cast<unsigned long>(b[k]);
  }
  return t;
}

void visit_overpartitions_A(
    unsigned n, unsigned k,
    const std::function<void(const Partition&, unsigned, std::optional<unsigned>)>& visit) {
  check_k(k);
  for (PartitionGenerator g(n); !g.done(); g.advance()) {
    const auto& lambda = g.current();
    const auto runs = lambda.multiplicities();
    for (const auto& [over, over_mult] : runs) {
      if (over % k != 0) continue;
      visit(lambda, over, std::nullopt);
      for (const auto& [color, color_mult] : runs) {
        if (color % k != 0) continue;
        // Same value needs a second occurrence to carry the color.
        if (color == over && over_mult < 2) continue;
        visit(lambda, over, color);
      }
    }
  }
}

OverpartitionTally overpartition_tally(unsigned n, unsigned k_max) {
  check_k(k_max);
  OverpartitionTally t;
  t.p_count.assign(k_max + 1, 0);
  t.a_count.assign(k_max + 1, 0);
  t.overlined_sum.assign(k_max + 1, 0);
  std::vector<std::pair<unsigned, unsigned>> runs;
  for (PartitionGenerator g(n); !g.done(); g.advance()) {
    runs.clear();
    for_each_run(g.current().parts, [&](unsigned v, unsigned m) { runs.emplace_back(v, m); });
    for (unsigned k = 1; k <= k_max; ++k) {
      std::uint64_t values = 0, repeated = 0, sum = 0;
      for (const auto& [v, m] : runs) {
        if (v % k != 0) continue;
        ++values;
        sum += v;
        if (m >= 2) ++repeated;
      }
      // Overline any value; color nothing, a different value, or a second
      // copy of the overlined value.
      t.p_count[k] += values;
      t.overlined_sum[k] += sum;
      t.a_count[k] += values * values + repeated;
    }
  }
  return t;
}

std::vector<OverpartitionMarked> overpartitions_P(unsigned n, unsigned k) {
  std::vector<OverpartitionMarked> out;
  visit_overpartitions_A(n, k, [&](const Partition& base, unsigned over, std::optional<unsigned> color) {
    if (!color) out.push_back({base, over, std::nullopt});
  });
  return out;
}

std::vector<OverpartitionMarked> overpartitions_A(unsigned n, unsigned k) {
  std::vector<OverpartitionMarked> out;
  visit_overpartitions_A(n, k, [&](const Partition& base, unsigned over, std::optional<unsigned> color) {
    out.push_back({base, over, color});
  });
  return out;
}

}  // namespace partlab

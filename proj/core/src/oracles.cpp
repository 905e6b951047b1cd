#include "partcat/oracles.hpp"

#include <algorithm>
#include <string>

#include "partcat/errors.hpp"

namespace partcat::oracle {
namespace {

void guard(std::size_t size) {
  if (size > kMaxEnumerationSize) {
    throw BoundExceededError("bound exceeded: enumeration of size " + std::to_string(size) +
                             " is above the limit " + std::to_string(kMaxEnumerationSize));
  }
}

}  // namespace

std::vector<Partition> enumerate_all(std::size_t k, std::size_t l) {
  const std::size_t n = k + l;
  guard(n);
  std::vector<Partition> out;
  if (n == 0) {
    out.emplace_back();
    return out;
  }
  // rgs[i] <= 1 + max(rgs[0..i)), rgs[0] = 1.
  std::vector<Label> rgs(n, 1);
  std::vector<Label> prefix_max(n, 1);
  while (true) {
    out.emplace_back(k, l, rgs);
    std::size_t i = n - 1;
    while (i > 0 && rgs[i] == prefix_max[i - 1] + 1) --i;
    if (i == 0) break;
    ++rgs[i];
    prefix_max[i] = std::max(prefix_max[i - 1], rgs[i]);
    for (std::size_t j = i + 1; j < n; ++j) {
      rgs[j] = 1;
      prefix_max[j] = prefix_max[i];
    }
  }
  return out;
}

bool is_pair_partition(const Partition& p) {
  std::vector<std::size_t> count(p.block_count() + 1, 0);
  for (Label label : p.blocks()) ++count[label];
  for (std::size_t b = 1; b < count.size(); ++b) {
    if (count[b] != 2) return false;
  }
  return true;
}

bool is_noncrossing(const Partition& p) {
  std::vector<Label> cycle(p.upper().begin(), p.upper().end());
  cycle.insert(cycle.end(), p.lower().rbegin(), p.lower().rend());
  const std::size_t n = cycle.size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (cycle[b] == cycle[a]) continue;
      for (std::size_t c = b + 1; c < n; ++c) {
        if (cycle[c] != cycle[a]) continue;
        for (std::size_t d = c + 1; d < n; ++d) {
          if (cycle[d] == cycle[b]) return false;
        }
      }
    }
  }
  return true;
}

ReferenceCounts reference_counts(std::size_t size) {
  guard(size);
  ReferenceCounts counts;
  for (std::size_t k = 0; k <= size; ++k) {
    for (const Partition& p : enumerate_all(k, size - k)) {
      ++counts.all;
      if (is_noncrossing(p)) ++counts.noncrossing;
      if (is_pair_partition(p)) ++counts.pair;
    }
  }
  return counts;
}

Partition compose_by_transitive_closure(const Partition& p, const Partition& q) {
  if (q.lower_count() != p.upper_count()) {
    throw SizeMismatchError("size mismatch: lower row of the top partition has " +
                            std::to_string(q.lower_count()) +
                            " points but upper row of the bottom partition has " +
                            std::to_string(p.upper_count()));
  }
  const std::size_t k = q.upper_count();
  const std::size_t middle = q.lower_count();
  const std::size_t m = p.lower_count();
  const std::size_t n = k + middle + m;
  const std::size_t words = (n + 63) / 64;

  // Points: q upper [0, k), shared middle [k, k + middle), p lower after.
  std::vector<std::vector<std::uint64_t>> reach(n, std::vector<std::uint64_t>(words, 0));
  auto link = [&](std::size_t i, std::size_t j) {
    reach[i][j / 64] |= std::uint64_t{1} << (j % 64);
    reach[j][i / 64] |= std::uint64_t{1} << (i % 64);
  };
  for (std::size_t i = 0; i < n; ++i) link(i, i);
  const auto qb = q.blocks();
  for (std::size_t i = 0; i < qb.size(); ++i) {
    for (std::size_t j = i + 1; j < qb.size(); ++j) {
      if (qb[i] == qb[j]) link(i, j);
    }
  }
  const auto pb = p.blocks();
  for (std::size_t i = 0; i < pb.size(); ++i) {
    for (std::size_t j = i + 1; j < pb.size(); ++j) {
      if (pb[i] == pb[j]) link(k + i, k + j);
    }
  }
  for (std::size_t via = 0; via < n; ++via) {
    for (std::size_t i = 0; i < n; ++i) {
      if ((reach[i][via / 64] >> (via % 64)) & 1) {
        for (std::size_t w = 0; w < words; ++w) reach[i][w] |= reach[via][w];
      }
    }
  }
  auto representative = [&](std::size_t i) -> Label {
    for (std::size_t j = 0; j < n; ++j) {
      if ((reach[i][j / 64] >> (j % 64)) & 1) return static_cast<Label>(j) + 1;
    }
    return static_cast<Label>(i) + 1;
  };
  std::vector<Label> blocks;
  blocks.reserve(k + m);
  for (std::size_t i = 0; i < k; ++i) blocks.push_back(representative(i));
  for (std::size_t i = 0; i < m; ++i) blocks.push_back(representative(k + middle + i));
  return Partition(k, m, std::move(blocks));
}

}  // namespace partcat::oracle

#pragma once

#include <string_view>

#include "partcat/partition.hpp"

namespace partcat {

/// Corner a rotation starts from: the end point of that row moves to the same
/// end of the other row.
enum class Corner { top_left, top_right, bottom_left, bottom_right };

/// Corner whose rotation undoes a rotation at `c`.
Corner inverse(Corner c) noexcept;
std::string_view to_string(Corner c) noexcept;

/// Swaps upper and lower rows.
Partition involution(const Partition& p);

/// Places q to the right of p: upper rows concatenated, lower rows concatenated.
Partition tensor(const Partition& p, const Partition& q);

/// p·q with q stacked on top of p. Requires lower_count(q) == upper_count(p);
/// throws SizeMismatchError otherwise. Components that touch neither the upper
/// row of q nor the lower row of p are dropped.
///
/// Middle points are identified through a union-find structure, so the cost is
/// O(n α(n)) for n = |p| + |q|.
Partition compose(const Partition& p, const Partition& q);

/// Same contract as `compose`, computed with a graph of label edges and one
/// depth-first search over its components.
Partition compose_via_dfs(const Partition& p, const Partition& q);

/// Moves one end point between rows, keeping its block. Throws EmptyRowError
/// when the source row of `corner` is empty.
Partition rotate(const Partition& p, Corner corner);

/// Reverses both rows.
Partition reflect_vertical(const Partition& p);

}  // namespace partcat

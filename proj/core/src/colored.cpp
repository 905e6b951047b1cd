#include "partcat/colored.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

#include "partcat/errors.hpp"

namespace partcat {

ColoredPartition::ColoredPartition(Partition base, ColorString upper_colors,
                                   ColorString lower_colors)
    : base_(std::move(base)),
      upper_colors_(std::move(upper_colors)),
      lower_colors_(std::move(lower_colors)) {
  if (upper_colors_.size() != base_.upper_count() || lower_colors_.size() != base_.lower_count()) {
    throw std::invalid_argument("color strings of length " + std::to_string(upper_colors_.size()) +
                                "/" + std::to_string(lower_colors_.size()) +
                                " do not match rows of length " +
                                std::to_string(base_.upper_count()) + "/" +
                                std::to_string(base_.lower_count()));
  }
}

std::strong_ordering operator<=>(const ColoredPartition& a, const ColoredPartition& b) {
  if (auto c = a.base_ <=> b.base_; c != 0) return c;
  if (auto c = a.upper_colors_ <=> b.upper_colors_; c != 0) return c;
  return a.lower_colors_ <=> b.lower_colors_;
}

ColoredPartition colored_involution(const ColoredPartition& p) {
  return {involution(p.base()), p.lower_colors(), p.upper_colors()};
}

ColoredPartition colored_tensor(const ColoredPartition& p, const ColoredPartition& q) {
  ColorString upper = p.upper_colors();
  upper.insert(upper.end(), q.upper_colors().begin(), q.upper_colors().end());
  ColorString lower = p.lower_colors();
  lower.insert(lower.end(), q.lower_colors().begin(), q.lower_colors().end());
  return {tensor(p.base(), q.base()), std::move(upper), std::move(lower)};
}

ColoredPartition colored_compose(const ColoredPartition& p, const ColoredPartition& q) {
  if (q.lower_count() == p.upper_count() && q.lower_colors() != p.upper_colors()) {
    throw ColorMismatchError(
        "color mismatch: lower colors of the top partition differ from upper colors of the "
        "bottom partition");
  }
  return {compose(p.base(), q.base()), q.upper_colors(), p.lower_colors()};
}

ColoredPartition colored_rotate(const ColoredPartition& p, Corner corner) {
  const Partition base = rotate(p.base(), corner);
  ColorString upper = p.upper_colors();
  ColorString lower = p.lower_colors();
  switch (corner) {
    case Corner::top_left:
      lower.insert(lower.begin(), invert(upper.front()));
      upper.erase(upper.begin());
      break;
    case Corner::top_right:
      lower.push_back(invert(upper.back()));
      upper.pop_back();
      break;
    case Corner::bottom_left:
      upper.insert(upper.begin(), invert(lower.front()));
      lower.erase(lower.begin());
      break;
    case Corner::bottom_right:
      upper.push_back(invert(lower.back()));
      lower.pop_back();
      break;
  }
  return {base, std::move(upper), std::move(lower)};
}

ColoredPartition colored_reflect_vertical(const ColoredPartition& p) {
  ColorString upper(p.upper_colors().rbegin(), p.upper_colors().rend());
  ColorString lower(p.lower_colors().rbegin(), p.lower_colors().rend());
  std::transform(upper.begin(), upper.end(), upper.begin(), invert);
  std::transform(lower.begin(), lower.end(), lower.begin(), invert);
  return {reflect_vertical(p.base()), std::move(upper), std::move(lower)};
}

std::vector<ColoredPartition> colored_base_partitions() {
  const Partition id = identity_partition();
  const Partition pair = pair_partition();
  return {
      {id, {Color::white}, {Color::white}},
      {id, {Color::black}, {Color::black}},
      {pair, {}, {Color::white, Color::black}},
      {pair, {}, {Color::black, Color::white}},
  };
}

}  // namespace partcat

std::size_t std::hash<partcat::ColoredPartition>::operator()(
    const partcat::ColoredPartition& p) const noexcept {
  std::size_t h = std::hash<partcat::Partition>{}(p.base());
  for (auto c : p.upper_colors()) h = h * 31 + static_cast<std::size_t>(c) + 1;
  h = h * 31 + 7;
  for (auto c : p.lower_colors()) h = h * 31 + static_cast<std::size_t>(c) + 1;
  return h;
}

#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <vector>

#include "partcat/operations.hpp"
#include "partcat/partition.hpp"

namespace partcat {

enum class Color : std::uint8_t { white, black };

inline Color invert(Color c) noexcept { return c == Color::white ? Color::black : Color::white; }

using ColorString = std::vector<Color>;

/// Partition whose points each carry a white or black color.
class ColoredPartition {
 public:
  ColoredPartition() = default;
  /// Throws std::invalid_argument when a color string length differs from
  /// the matching row length of `base`.
  ColoredPartition(Partition base, ColorString upper_colors, ColorString lower_colors);

  const Partition& base() const noexcept { return base_; }
  const ColorString& upper_colors() const noexcept { return upper_colors_; }
  const ColorString& lower_colors() const noexcept { return lower_colors_; }
  std::size_t upper_count() const noexcept { return base_.upper_count(); }
  std::size_t lower_count() const noexcept { return base_.lower_count(); }
  std::size_t size() const noexcept { return base_.size(); }

  friend bool operator==(const ColoredPartition&, const ColoredPartition&) = default;
  friend std::strong_ordering operator<=>(const ColoredPartition& a, const ColoredPartition& b);

 private:
  Partition base_;
  ColorString upper_colors_;
  ColorString lower_colors_;
};

ColoredPartition colored_involution(const ColoredPartition& p);
ColoredPartition colored_tensor(const ColoredPartition& p, const ColoredPartition& q);

/// q on top of p. Throws SizeMismatchError when the interface lengths differ
/// and ColorMismatchError when they agree but the color strings do not.
ColoredPartition colored_compose(const ColoredPartition& p, const ColoredPartition& q);

/// Rotation of the underlying partition; the moved point changes color.
ColoredPartition colored_rotate(const ColoredPartition& p, Corner corner);

/// Reverses both rows and inverts every color, which is what the reflection
/// derived from rotations and involution does to colors.
ColoredPartition colored_reflect_vertical(const ColoredPartition& p);

/// White identity, black identity, and the white-black and black-white pairs.
std::vector<ColoredPartition> colored_base_partitions();

}  // namespace partcat

template <>
struct std::hash<partcat::ColoredPartition> {
  std::size_t operator()(const partcat::ColoredPartition& p) const noexcept;
};

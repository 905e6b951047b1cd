#pragma once

#include <string>
#include <string_view>

#include "partcat/colored.hpp"
#include "partcat/partition.hpp"
#include "partcat/spatial.hpp"

namespace partcat {

enum class Format { text, json };

// Text encodings:
//   partition  `<upper>|<lower>`, each side a comma-separated list of decimal
//              labels, possibly empty: `1,2|2,1`, `|1,1`, `|`
//   colored    `<colors>:<upper>|<colors>:<lower>` with colors over {w, b}:
//              `wb:1,2|w:2`
//   spatial    `m=<levels>;<flattened partition>`: `m=2;1,2|1,2`
// JSON encodings:
//   {"upper": [...], "lower": [...]}
//   plus "upper_colors"/"lower_colors" strings for colored partitions
//   plus "levels" for spatial partitions
// Parsing normalizes labels. Malformed input throws ParseError carrying the
// byte offset of the fault.

Partition parse_partition(std::string_view text, Format format = Format::text);
std::string render_partition(const Partition& p, Format format = Format::text);

ColoredPartition parse_colored(std::string_view text, Format format = Format::text);
std::string render_colored(const ColoredPartition& p, Format format = Format::text);

SpatialPartition parse_spatial(std::string_view text, Format format = Format::text);
std::string render_spatial(const SpatialPartition& p, Format format = Format::text);

}  // namespace partcat

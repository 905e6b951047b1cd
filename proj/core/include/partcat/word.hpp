#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "partcat/partition.hpp"

namespace partcat {

/// x_generator^exponent with exponent +1 or -1 and generator >= 1.
struct FreeLetter {
  std::uint64_t generator = 1;
  int exponent = 1;

  friend bool operator==(const FreeLetter&, const FreeLetter&) = default;
};

/// Word in the free group on x_1, x_2, ...; not reduced.
struct FreeWord {
  std::vector<FreeLetter> letters;

  friend bool operator==(const FreeWord&, const FreeWord&) = default;
};

/// Word a_{i_1} ... a_{i_n} in the free product of copies of Z/2; each a_i is
/// an involution.
struct InvolutiveWord {
  std::vector<Label> letters;

  friend bool operator==(const InvolutiveWord&, const InvolutiveWord&) = default;
};

/// Substitutes x_n -> a_1 a_{n+1} and x_n^-1 -> a_{n+1} a_1, letter by letter,
/// without cancelling anything. The result always has even length.
InvolutiveWord to_involutive(const FreeWord& w);

/// Deletes adjacent equal letters until none remain.
InvolutiveWord reduce_involutive(const InvolutiveWord& a);

/// Kernel partition of the unreduced involutive image of w: no upper points,
/// one lower point per letter.
Partition partition_of_word(const FreeWord& w);

/// Parses whitespace-separated tokens `x<k>` and `x<k>^-1` with k >= 1.
/// Throws ParseError.
FreeWord parse_word(std::string_view text);
std::string to_string(const FreeWord& w);

}  // namespace partcat

#include "partcat/word.hpp"

#include <cctype>
#include <charconv>

#include "partcat/errors.hpp"

namespace partcat {

InvolutiveWord to_involutive(const FreeWord& w) {
  InvolutiveWord out;
  out.letters.reserve(2 * w.letters.size());
  for (const FreeLetter& x : w.letters) {
    const Label shifted = static_cast<Label>(x.generator) + 1;
    if (x.exponent > 0) {
      out.letters.push_back(1);
      out.letters.push_back(shifted);
    } else {
      out.letters.push_back(shifted);
      out.letters.push_back(1);
    }
  }
  return out;
}

InvolutiveWord reduce_involutive(const InvolutiveWord& a) {
  InvolutiveWord out;
  out.letters.reserve(a.letters.size());
  for (Label letter : a.letters) {
    if (!out.letters.empty() && out.letters.back() == letter) {
      out.letters.pop_back();
    } else {
      out.letters.push_back(letter);
    }
  }
  return out;
}

Partition partition_of_word(const FreeWord& w) {
  return kernel_partition(to_involutive(w).letters);
}

FreeWord parse_word(std::string_view text) {
  FreeWord w;
  std::size_t pos = 0;
  const auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_space();
  while (pos < text.size()) {
    if (text[pos] != 'x') throw ParseError("expected 'x'", pos);
    ++pos;
    std::uint64_t generator = 0;
    const char* first = text.data() + pos;
    const char* last = text.data() + text.size();
    auto [end, ec] = std::from_chars(first, last, generator);
    if (ec != std::errc{} || end == first) throw ParseError("expected generator index", pos);
    if (generator == 0) throw ParseError("generator index must be at least 1", pos);
    pos = static_cast<std::size_t>(end - text.data());
    int exponent = 1;
    if (text.substr(pos).starts_with("^-1")) {
      exponent = -1;
      pos += 3;
    } else if (pos < text.size() && text[pos] == '^') {
      throw ParseError("only the exponent ^-1 is allowed", pos);
    }
    if (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos]))) {
      throw ParseError("expected whitespace between letters", pos);
    }
    w.letters.push_back({generator, exponent});
    skip_space();
  }
  return w;
}

std::string to_string(const FreeWord& w) {
  std::string out;
  for (const FreeLetter& x : w.letters) {
    if (!out.empty()) out += ' ';
    out += 'x';
    out += std::to_string(x.generator);
    if (x.exponent < 0) out += "^-1";
  }
  return out;
}

}  // namespace partcat

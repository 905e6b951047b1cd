#include "partcat/text_format.hpp"

#include <charconv>
#include <nlohmann/json.hpp>
#include <utility>
#include <vector>

#include "partcat/errors.hpp"

namespace partcat {
namespace {

using json = nlohmann::ordered_json;

// Comma-separated decimal labels; `base` is the offset of `text` in the input.
std::vector<Label> parse_labels(std::string_view text, std::size_t base) {
  std::vector<Label> out;
  if (text.empty()) return out;
  std::size_t pos = 0;
  while (true) {
    Label value = 0;
    const char* first = text.data() + pos;
    auto [end, ec] = std::from_chars(first, text.data() + text.size(), value);
    if (ec == std::errc::result_out_of_range) throw ParseError("label out of range", base + pos);
    if (ec != std::errc{} || end == first) throw ParseError("expected a decimal label", base + pos);
    out.push_back(value);
    pos = static_cast<std::size_t>(end - text.data());
    if (pos == text.size()) break;
    if (text[pos] != ',') throw ParseError("expected ',' or '|'", base + pos);
    ++pos;
  }
  return out;
}

std::string_view trim(std::string_view s, std::size_t& base) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\n')) {
    s.remove_prefix(1);
    ++base;
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\n')) {
    s.remove_suffix(1);
  }
  return s;
}

std::pair<std::string_view, std::string_view> split_rows(std::string_view text, std::size_t base,
                                                         std::size_t& bar) {
  bar = text.find('|');
  if (bar == std::string_view::npos) throw ParseError("expected '|' between rows", base + text.size());
  if (text.find('|', bar + 1) != std::string_view::npos) {
    throw ParseError("unexpected second '|'", base + text.find('|', bar + 1));
  }
  return {text.substr(0, bar), text.substr(bar + 1)};
}

Partition parse_partition_text(std::string_view text, std::size_t base) {
  text = trim(text, base);
  std::size_t bar = 0;
  auto [upper, lower] = split_rows(text, base, bar);
  const auto up = parse_labels(upper, base);
  const auto low = parse_labels(lower, base + bar + 1);
  return Partition(up, low);
}

std::string join_labels(std::span<const Label> labels) {
  std::string out;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(labels[i]);
  }
  return out;
}

std::string render_colors(const ColorString& colors) {
  std::string out;
  for (Color c : colors) out += c == Color::white ? 'w' : 'b';
  return out;
}

ColorString parse_colors(std::string_view text, std::size_t base) {
  ColorString out;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == 'w') {
      out.push_back(Color::white);
    } else if (text[i] == 'b') {
      out.push_back(Color::black);
    } else {
      throw ParseError("expected color 'w' or 'b'", base + i);
    }
  }
  return out;
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte > 0 ? e.byte - 1 : 0);
  }
}

std::vector<Label> json_labels(const json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key) || !obj[key].is_array()) {
    throw ParseError(std::string("expected array field \"") + key + "\"", 0);
  }
  std::vector<Label> out;
  for (const auto& v : obj[key]) {
    if (!v.is_number_unsigned()) {
      throw ParseError(std::string("field \"") + key + "\" must hold non-negative integers", 0);
    }
    out.push_back(v.get<Label>());
  }
  return out;
}

std::string json_string(const json& obj, const char* key) {
  if (!obj.contains(key) || !obj[key].is_string()) {
    throw ParseError(std::string("expected string field \"") + key + "\"", 0);
  }
  return obj[key].get<std::string>();
}

json partition_json(const Partition& p) {
  return json{{"upper", std::vector<Label>(p.upper().begin(), p.upper().end())},
              {"lower", std::vector<Label>(p.lower().begin(), p.lower().end())}};
}

Partition partition_from_json(const json& obj) {
  return Partition(json_labels(obj, "upper"), json_labels(obj, "lower"));
}

}  // namespace

Partition parse_partition(std::string_view text, Format format) {
  if (format == Format::json) return partition_from_json(parse_json(text));
  return parse_partition_text(text, 0);
}

std::string render_partition(const Partition& p, Format format) {
  if (format == Format::json) return partition_json(p).dump();
  return join_labels(p.upper()) + "|" + join_labels(p.lower());
}

ColoredPartition parse_colored(std::string_view text, Format format) {
  if (format == Format::json) {
    const json obj = parse_json(text);
    Partition base = partition_from_json(obj);
    ColorString upper = parse_colors(json_string(obj, "upper_colors"), 0);
    ColorString lower = parse_colors(json_string(obj, "lower_colors"), 0);
    if (upper.size() != base.upper_count() || lower.size() != base.lower_count()) {
      throw ParseError("color string length does not match its row", 0);
    }
    return {std::move(base), std::move(upper), std::move(lower)};
  }
  std::size_t base = 0;
  text = trim(text, base);
  std::size_t bar = 0;
  auto [upper, lower] = split_rows(text, base, bar);
  auto side = [&](std::string_view row, std::size_t offset) {
    const std::size_t colon = row.find(':');
    if (colon == std::string_view::npos) {
      throw ParseError("expected '<colors>:' before labels", offset);
    }
    ColorString colors = parse_colors(row.substr(0, colon), offset);
    std::vector<Label> labels = parse_labels(row.substr(colon + 1), offset + colon + 1);
    if (colors.size() != labels.size()) {
      throw ParseError("color string length " + std::to_string(colors.size()) +
                           " does not match " + std::to_string(labels.size()) + " labels",
                       offset);
    }
    return std::pair{std::move(colors), std::move(labels)};
  };
  auto [upper_colors, upper_labels] = side(upper, base);
  auto [lower_colors, lower_labels] = side(lower, base + bar + 1);
  return {Partition(upper_labels, lower_labels), std::move(upper_colors), std::move(lower_colors)};
}

std::string render_colored(const ColoredPartition& p, Format format) {
  if (format == Format::json) {
    json obj = partition_json(p.base());
    obj["upper_colors"] = render_colors(p.upper_colors());
    obj["lower_colors"] = render_colors(p.lower_colors());
    return obj.dump();
  }
  return render_colors(p.upper_colors()) + ":" + join_labels(p.base().upper()) + "|" +
         render_colors(p.lower_colors()) + ":" + join_labels(p.base().lower());
}

SpatialPartition parse_spatial(std::string_view text, Format format) {
  if (format == Format::json) {
    const json obj = parse_json(text);
    if (!obj.is_object() || !obj.contains("levels") || !obj["levels"].is_number_unsigned()) {
      throw ParseError("expected unsigned field \"levels\"", 0);
    }
    const auto levels = obj["levels"].get<std::size_t>();
    if (levels == 0) throw ParseError("levels must be at least 1", 0);
    return {levels, partition_from_json(obj)};
  }
  std::size_t base = 0;
  text = trim(text, base);
  if (!text.starts_with("m=")) throw ParseError("expected 'm=<levels>;'", base);
  const std::size_t semi = text.find(';');
  if (semi == std::string_view::npos) throw ParseError("expected ';' after level count", base + text.size());
  std::size_t levels = 0;
  const char* first = text.data() + 2;
  auto [end, ec] = std::from_chars(first, text.data() + semi, levels);
  if (ec != std::errc{} || end != text.data() + semi) {
    throw ParseError("expected a decimal level count", base + 2);
  }
  if (levels == 0) throw ParseError("levels must be at least 1", base + 2);
  return {levels, parse_partition_text(text.substr(semi + 1), base + semi + 1)};
}

std::string render_spatial(const SpatialPartition& p, Format format) {
  if (format == Format::json) {
    json obj = partition_json(p.flattened());
    obj["levels"] = p.levels();
    return obj.dump();
  }
  return "m=" + std::to_string(p.levels()) + ";" + render_partition(p.flattened());
}

}  // namespace partcat

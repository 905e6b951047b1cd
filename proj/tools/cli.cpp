#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <map>
#include <ostream>
#include <stdexcept>
#include <variant>

#include "partcat/partcat.hpp"

namespace partcat::cli {
namespace {

using Diagram = std::variant<Partition, ColoredPartition, SpatialPartition>;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Diagram parse_diagram(const std::string& text) {
  std::string_view view(text);
  while (!view.empty() && view.front() == ' ') view.remove_prefix(1);
  if (view.starts_with("m=")) return parse_spatial(text);
  if (text.find(':') != std::string::npos) return parse_colored(text);
  return parse_partition(text);
}

std::string render(const Diagram& d, Format format) {
  return std::visit(
      [format](const auto& p) -> std::string {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, Partition>) return render_partition(p, format);
        if constexpr (std::is_same_v<T, ColoredPartition>) return render_colored(p, format);
        if constexpr (std::is_same_v<T, SpatialPartition>) return render_spatial(p, format);
      },
      d);
}

Diagram unary(const Diagram& d, const std::string& op, Corner corner) {
  return std::visit(
      [&](const auto& p) -> Diagram {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, Partition>) {
          if (op == "involution") return involution(p);
          if (op == "rotate") return rotate(p, corner);
          if (op == "reflect") return reflect_vertical(p);
          return p;
        } else if constexpr (std::is_same_v<T, ColoredPartition>) {
          if (op == "involution") return colored_involution(p);
          if (op == "rotate") return colored_rotate(p, corner);
          if (op == "reflect") return colored_reflect_vertical(p);
          return p;
        } else {
          if (op == "involution") return spatial_involution(p);
          if (op == "rotate") return spatial_rotate(p, corner);
          if (op == "reflect") return spatial_reflect_vertical(p);
          return p;
        }
      },
      d);
}

Diagram binary(const Diagram& a, const Diagram& b, const std::string& op) {
  if (a.index() != b.index()) {
    throw UsageError("operands must both be plain, both colored, or both spatial partitions");
  }
  const bool is_tensor = op == "tensor";
  if (const auto* p = std::get_if<Partition>(&a)) {
    const auto& q = std::get<Partition>(b);
    return is_tensor ? tensor(*p, q) : compose(*p, q);
  }
  if (const auto* p = std::get_if<ColoredPartition>(&a)) {
    const auto& q = std::get<ColoredPartition>(b);
    return is_tensor ? colored_tensor(*p, q) : colored_compose(*p, q);
  }
  const auto& p = std::get<SpatialPartition>(a);
  const auto& q = std::get<SpatialPartition>(b);
  return is_tensor ? spatial_tensor(p, q) : spatial_compose(p, q);
}

void print_list(std::ostream& out, const std::vector<std::string>& lines, Format format) {
  if (format == Format::text) {
    for (const auto& line : lines) out << line << '\n';
    return;
  }
  out << '[';
  for (std::size_t i = 0; i < lines.size(); ++i) out << (i ? ",\n " : "\n ") << lines[i];
  out << (lines.empty() ? "]\n" : "\n]\n");
}

template <class Element, class Render>
void emit_closure(std::ostream& out, const ClosureSet<Element>& closure,
                  std::optional<std::size_t> exact_size, bool count_only, Format format,
                  Render&& render_one) {
  const std::vector<Element> selected =
      exact_size ? closure.members_of_size(*exact_size) : closure.members();
  if (count_only) {
    out << selected.size() << '\n';
    return;
  }
  std::vector<std::string> lines;
  lines.reserve(selected.size());
  for (const auto& m : selected) lines.push_back(render_one(m, format));
  print_list(out, lines, format);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Set partitions, their category operations and bounded category generation",
               "partcat"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format_name = "text";
  app.add_option("--format", format_name, "Output encoding")
      ->check(CLI::IsMember({"text", "json"}));

  std::string p_text;
  std::string q_text;
  std::string corner_name;

  auto* normalize_cmd = app.add_subcommand("normalize", "Print the canonical form of a partition");
  normalize_cmd->add_option("p", p_text, "Partition")->required();
  auto* involution_cmd = app.add_subcommand("involution", "Swap upper and lower rows");
  involution_cmd->add_option("p", p_text, "Partition")->required();
  auto* reflect_cmd = app.add_subcommand("reflect", "Reverse both rows");
  reflect_cmd->add_option("p", p_text, "Partition")->required();
  auto* rotate_cmd = app.add_subcommand("rotate", "Move a corner point to the other row");
  rotate_cmd->add_option("--corner", corner_name, "Corner to rotate from")
      ->required()
      ->check(CLI::IsMember({"tl", "tr", "bl", "br"}));
  rotate_cmd->add_option("p", p_text, "Partition")->required();
  auto* tensor_cmd = app.add_subcommand("tensor", "Horizontal concatenation p (x) q");
  tensor_cmd->add_option("p", p_text, "Left partition")->required();
  tensor_cmd->add_option("q", q_text, "Right partition")->required();
  auto* compose_cmd = app.add_subcommand("compose", "Composition p.q with q placed above p");
  compose_cmd->add_option("p", p_text, "Bottom partition")->required();
  compose_cmd->add_option("q", q_text, "Top partition")->required();

  std::size_t bound = 0;
  std::optional<std::size_t> exact_size;
  bool colored = false;
  std::optional<std::size_t> levels;
  bool count_only = false;
  std::optional<std::uint64_t> seed;
  std::vector<std::string> generator_texts;
  auto* generate_cmd =
      app.add_subcommand("generate", "Bounded closure of generators and base partitions");
  generate_cmd->add_option("--bound", bound, "Largest partition size kept")->required();
  generate_cmd->add_option("--exact-size", exact_size, "Only print members of this size");
  auto* colored_flag = generate_cmd->add_flag("--colored", colored, "Generators are colored");
  generate_cmd->add_option("--levels", levels, "Generators are spatial with this many levels")
      ->excludes(colored_flag);
  generate_cmd->add_flag("--count", count_only, "Print the number of members only");
  generate_cmd->add_option("--seed", seed, "Randomize worklist order (result is unchanged)");
  generate_cmd->add_option("generators", generator_texts, "Generating partitions");

  std::string word_text;
  auto* embed_cmd = app.add_subcommand("embed-word", "Partition of a free group word");
  embed_cmd->add_option("word", word_text, "Word such as \"x1 x2 x1^-1\"")->required();

  std::size_t upper = 0;
  std::size_t lower = 0;
  std::string predicate;
  auto* enumerate_cmd = app.add_subcommand("enumerate", "List all partitions of a shape");
  enumerate_cmd->add_option("--upper", upper, "Upper points")->required();
  enumerate_cmd->add_option("--lower", lower, "Lower points")->required();
  enumerate_cmd->add_option("--predicate", predicate, "Filter")
      ->check(CLI::IsMember({"nc", "pair"}));
  enumerate_cmd->add_flag("--count", count_only, "Print the number of partitions only");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }

  const Format format = format_name == "json" ? Format::json : Format::text;
  try {
    if (normalize_cmd->parsed()) {
      out << render(parse_diagram(p_text), format) << '\n';
    } else if (involution_cmd->parsed()) {
      out << render(unary(parse_diagram(p_text), "involution", Corner::top_left), format) << '\n';
    } else if (reflect_cmd->parsed()) {
      out << render(unary(parse_diagram(p_text), "reflect", Corner::top_left), format) << '\n';
    } else if (rotate_cmd->parsed()) {
      static const std::map<std::string, Corner> corners = {{"tl", Corner::top_left},
                                                            {"tr", Corner::top_right},
                                                            {"bl", Corner::bottom_left},
                                                            {"br", Corner::bottom_right}};
      out << render(unary(parse_diagram(p_text), "rotate", corners.at(corner_name)), format)
          << '\n';
    } else if (tensor_cmd->parsed()) {
      out << render(binary(parse_diagram(p_text), parse_diagram(q_text), "tensor"), format)
          << '\n';
    } else if (compose_cmd->parsed()) {
      out << render(binary(parse_diagram(p_text), parse_diagram(q_text), "compose"), format)
          << '\n';
    } else if (generate_cmd->parsed()) {
      ClosureOptions options;
      options.exploration_seed = seed;
      if (colored) {
        std::vector<ColoredPartition> gens;
        for (const auto& t : generator_texts) gens.push_back(parse_colored(t));
        emit_closure(out, construct_colored_closure(gens, bound, options), exact_size,
                     count_only, format,
                     [](const ColoredPartition& p, Format f) { return render_colored(p, f); });
      } else if (levels) {
        std::vector<SpatialPartition> gens;
        for (const auto& t : generator_texts) {
          gens.push_back(t.find("m=") != std::string::npos
                             ? parse_spatial(t)
                             : SpatialPartition(*levels, parse_partition(t)));
        }
        emit_closure(out, construct_spatial_closure(gens, *levels, bound, options), exact_size,
                     count_only, format,
                     [](const SpatialPartition& p, Format f) { return render_spatial(p, f); });
      } else {
        std::vector<Partition> gens;
        for (const auto& t : generator_texts) gens.push_back(parse_partition(t));
        emit_closure(out, construct_closure(gens, bound, options), exact_size, count_only,
                     format,
                     [](const Partition& p, Format f) { return render_partition(p, f); });
      }
    } else if (embed_cmd->parsed()) {
      out << render_partition(partition_of_word(parse_word(word_text)), format) << '\n';
    } else if (enumerate_cmd->parsed()) {
      std::vector<std::string> lines;
      std::size_t count = 0;
      for (const auto& p : oracle::enumerate_all(upper, lower)) {
        if (predicate == "nc" && !oracle::is_noncrossing(p)) continue;
        if (predicate == "pair" && !oracle::is_pair_partition(p)) continue;
        ++count;
        if (!count_only) lines.push_back(render_partition(p, format));
      }
      if (count_only) {
        out << count << '\n';
      } else {
        std::sort(lines.begin(), lines.end());
        print_list(out, lines, format);
      }
    }
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace partcat::cli

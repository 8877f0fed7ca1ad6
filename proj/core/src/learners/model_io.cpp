#include "moviepop/learners/model_io.hpp"

#include <fmt/format.h>

#include "moviepop/errors.hpp"
#include "../text.hpp"

namespace moviepop {
namespace {

using text::format_number;

std::string render_distribution(const ClassDistribution& d) {
  return fmt::format("({}/{}/{}/{})", format_number(d.weights[0]), format_number(d.weights[1]),
                     format_number(d.weights[2]), format_number(d.weights[3]));
}

std::size_t lookup(const std::vector<Column>& schema, std::string_view name) {
  for (std::size_t i = 0; i < schema.size(); ++i) {
    if (schema[i].name == name) return i;
  }
  throw FormatError(fmt::format("model refers to unknown attribute '{}'", name));
}

double number(std::string_view s) {
  auto v = text::parse_double(s);
  if (!v) throw FormatError(fmt::format("model: bad number '{}'", s));
  return *v;
}

std::string_view after_prefix(std::string_view token, std::string_view prefix) {
  if (!token.starts_with(prefix)) {
    throw FormatError(fmt::format("model: expected '{}...', found '{}'", prefix, token));
  }
  return token.substr(prefix.size());
}

ClassDistribution parse_distribution(std::string_view token) {
  if (token.size() < 2 || token.front() != '(' || token.back() != ')') {
    throw FormatError(fmt::format("model: bad distribution '{}'", token));
  }
  auto parts = text::split(token.substr(1, token.size() - 2), '/');
  if (parts.size() != kClassCount) throw FormatError("model: distribution needs four weights");
  ClassDistribution d;
  for (std::size_t i = 0; i < kClassCount; ++i) d.weights[i] = number(parts[i]);
  return d;
}

PopularityClass parse_class(std::string_view s) {
  auto c = popularity_from_string(s);
  if (!c) throw FormatError(fmt::format("model: unknown class '{}'", s));
  return *c;
}

std::vector<std::string_view> words(std::string_view line) {
  std::vector<std::string_view> out;
  for (auto w : text::split(text::trim(line), ' ')) {
    if (!w.empty()) out.push_back(w);
  }
  return out;
}

std::vector<std::string_view> nonblank_lines(std::string_view text_block) {
  std::vector<std::string_view> out;
  for (auto line : text::split(text_block, '\n')) {
    line = text::strip_cr(line);
    if (!text::trim(line).empty()) out.push_back(line);
  }
  return out;
}

class TreeParser {
 public:
  TreeParser(std::vector<std::string_view> lines, const std::vector<Column>& schema)
      : lines_(std::move(lines)), schema_(schema) {}

  DecisionTree parse() {
    if (lines_.empty()) throw FormatError("model: empty tree");
    node(0);
    if (cursor_ != lines_.size()) throw FormatError("model: trailing lines after tree");
    return DecisionTree(std::move(nodes_));
  }

 private:
  std::size_t node(std::size_t depth) {
    if (cursor_ >= lines_.size()) throw FormatError("model: tree ends early");
    std::string_view line = lines_[cursor_++];
    std::size_t indent = line.find_first_not_of(' ');
    if (indent != depth * 2) {
      throw FormatError(fmt::format("model: bad indentation at tree line {}", cursor_));
    }
    auto w = words(line);
    const std::size_t index = nodes_.size();
    nodes_.emplace_back();
    if (!w.empty() && w[0] == "->") {
      if (w.size() != 3) throw FormatError("model: malformed leaf line");
      nodes_[index].distribution = parse_distribution(w[2]);
      if (nodes_[index].distribution.majority() != parse_class(w[1])) {
        throw FormatError("model: leaf class disagrees with its weights");
      }
      return index;
    }
    if (w.size() != 8 || w[1] != "<=" || w[3] != ":") {
      throw FormatError(fmt::format("model: malformed node line {}", cursor_));
    }
    Split split;
    split.attribute = lookup(schema_, w[0]);
    split.threshold = number(w[2]);
    nodes_[index].distribution = parse_distribution(w[4]);
    auto fallback = after_prefix(w[5], "missing=");
    if (fallback != "low" && fallback != "high") throw FormatError("model: bad missing branch");
    nodes_[index].fallback = fallback == "low" ? Branch::Low : Branch::High;
    split.gain = number(after_prefix(w[6], "gain="));
    split.gain_ratio = number(after_prefix(w[7], "ratio="));
    nodes_[index].split = split;
    const std::size_t low = node(depth + 1);
    const std::size_t high = node(depth + 1);
    nodes_[index].low = low;
    nodes_[index].high = high;
    return index;
  }

  std::vector<std::string_view> lines_;
  const std::vector<Column>& schema_;
  std::vector<DecisionTree::Node> nodes_;
  std::size_t cursor_ = 0;
};

void render_node(const DecisionTree& tree, std::size_t i, std::size_t depth,
                 const std::vector<Column>& schema, std::string& out) {
  const auto& n = tree.nodes()[i];
  out.append(depth * 2, ' ');
  if (n.is_leaf()) {
    out += fmt::format("-> {} {}\n", to_string(n.distribution.majority()),
                       render_distribution(n.distribution));
    return;
  }
  out += fmt::format("{} <= {} : {} missing={} gain={} ratio={}\n",
                     schema.at(n.split->attribute).name, format_number(n.split->threshold),
                     render_distribution(n.distribution),
                     n.fallback == Branch::Low ? "low" : "high", format_number(n.split->gain),
                     format_number(n.split->gain_ratio));
  render_node(tree, n.low, depth + 1, schema, out);
  render_node(tree, n.high, depth + 1, schema, out);
}

}  // namespace

std::string render_tree(const DecisionTree& tree, const std::vector<Column>& schema) {
  std::string out;
  if (tree.node_count() > 0) render_node(tree, 0, 0, schema, out);
  return out;
}

DecisionTree parse_tree(std::string_view text_block, const std::vector<Column>& schema) {
  return TreeParser(nonblank_lines(text_block), schema).parse();
}

std::string render_rules(const RuleList& rules, const std::vector<Column>& schema) {
  std::string out;
  for (const auto& r : rules.rules) {
    out += "IF ";
    if (r.conditions.empty()) out += "TRUE";
    for (std::size_t i = 0; i < r.conditions.size(); ++i) {
      const auto& c = r.conditions[i];
      if (i > 0) out += " AND ";
      out += fmt::format("{} {} {}", schema.at(c.attribute).name,
                         c.op == Comparison::LessEqual ? "<=" : ">", format_number(c.threshold));
    }
    out += fmt::format(" THEN {} ({}/{})\n", to_string(r.conclusion), format_number(r.coverage),
                       format_number(r.accuracy));
  }
  out += fmt::format("DEFAULT {}\n", to_string(rules.default_class));
  return out;
}

RuleList parse_rules(std::string_view text_block, const std::vector<Column>& schema) {
  RuleList out;
  bool have_default = false;
  for (auto line : nonblank_lines(text_block)) {
    if (have_default) throw FormatError("model: lines after DEFAULT");
    auto w = words(line);
    if (w.size() == 2 && w[0] == "DEFAULT") {
      out.default_class = parse_class(w[1]);
      have_default = true;
      continue;
    }
    if (w.size() < 5 || w[0] != "IF" || w[w.size() - 3] != "THEN") {
      throw FormatError(fmt::format("model: malformed rule '{}'", line));
    }
    Rule rule;
    const std::size_t end = w.size() - 3;
    if (!(end == 2 && w[1] == "TRUE")) {
      std::size_t i = 1;
      while (true) {
        if (i + 3 > end) throw FormatError(fmt::format("model: malformed condition in '{}'", line));
        Condition c;
        c.attribute = lookup(schema, w[i]);
        if (w[i + 1] == "<=") {
          c.op = Comparison::LessEqual;
        } else if (w[i + 1] == ">") {
          c.op = Comparison::Greater;
        } else {
          throw FormatError(fmt::format("model: bad operator '{}'", w[i + 1]));
        }
        c.threshold = number(w[i + 2]);
        rule.conditions.push_back(c);
        i += 3;
        if (i == end) break;
        if (w[i] != "AND") throw FormatError(fmt::format("model: expected AND in '{}'", line));
        ++i;
      }
    }
    rule.conclusion = parse_class(w[w.size() - 2]);
    std::string_view stats = w.back();
    if (stats.size() < 2 || stats.front() != '(' || stats.back() != ')') {
      throw FormatError("model: bad rule statistics");
    }
    auto parts = text::split(stats.substr(1, stats.size() - 2), '/');
    if (parts.size() != 2) throw FormatError("model: bad rule statistics");
    rule.coverage = number(parts[0]);
    rule.accuracy = number(parts[1]);
    out.rules.push_back(std::move(rule));
  }
  if (!have_default) throw FormatError("model: rule list lacks DEFAULT line");
  return out;
}

}  // namespace moviepop

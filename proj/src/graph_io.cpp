#include "snsim/graph_io.hpp"

#include <algorithm>
#include <cerrno>
#include <charconv>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

#include "snsim/errors.hpp"

namespace snsim {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' ||
                        s.front() == '\r')) {
    s.remove_prefix(1);
  }
  while (!s.empty() &&
         (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

// Splits on commas and/or runs of whitespace.
std::vector<std::string> tokenize(std::string_view line) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : line) {
    if (ch == ',' || ch == ' ' || ch == '\t') {
      if (!cur.empty()) {
        out.push_back(cur);
        cur.clear();
      }
    } else {
      cur.push_back(ch);
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

bool parse_int64(const std::string& s, std::int64_t& out) {
  const char* begin = s.data();
  const char* end = begin + s.size();
  auto res = std::from_chars(begin, end, out);
  return res.ec == std::errc{} && res.ptr == end;
}

double parse_feature(const std::string& token, std::size_t line_no) {
  const char* begin = token.c_str();
  char* end = nullptr;
  errno = 0;
  const double v = std::strtod(begin, &end);
  if (end != begin + token.size() || errno != 0) {
    throw ParseError("line " + std::to_string(line_no) +
                     ": bad feature value '" + token + "'");
  }
  return v;
}

struct Line {
  std::size_t number;  // 1-based in the source text
  std::string text;
};

std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string_view raw = (nl == std::string_view::npos)
                               ? text.substr(pos)
                               : text.substr(pos, nl - pos);
    ++line_no;
    std::size_t hash = raw.find('#');
    if (hash != std::string_view::npos) raw = raw.substr(0, hash);
    raw = trim(raw);
    if (!raw.empty()) out.push_back({line_no, std::string(raw)});
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
  return out;
}

}  // namespace

LoadedNetwork load_network(std::string_view edge_list_text,
                           std::optional<std::string_view> attribute_csv) {
  // Pass 1: collect labeled edges and attribute rows.
  std::vector<std::pair<std::string, std::string>> raw_edges;
  std::vector<std::size_t> edge_lines;
  for (const Line& line : content_lines(edge_list_text)) {
    auto tokens = tokenize(line.text);
    if (tokens.size() != 2) {
      throw ParseError("line " + std::to_string(line.number) +
                       ": expected two node labels, got " +
                       std::to_string(tokens.size()));
    }
    raw_edges.emplace_back(tokens[0], tokens[1]);
    edge_lines.push_back(line.number);
  }

  std::map<std::string, std::vector<double>> rows;
  std::size_t feature_count = 0;
  bool has_table = attribute_csv.has_value();
  if (has_table) {
    auto lines = content_lines(*attribute_csv);
    if (lines.empty()) {
      throw ParseError("attribute table is empty (missing header)");
    }
    auto header = tokenize(lines[0].text);
    if (header.empty() || header[0] != "node") {
      throw ParseError("line " + std::to_string(lines[0].number) +
                       ": attribute header must start with 'node'");
    }
    feature_count = header.size() - 1;
    for (std::size_t k = 1; k < lines.size(); ++k) {
      auto tokens = tokenize(lines[k].text);
      if (tokens.size() != feature_count + 1) {
        throw ParseError("line " + std::to_string(lines[k].number) +
                         ": expected " + std::to_string(feature_count + 1) +
                         " fields, got " + std::to_string(tokens.size()));
      }
      if (rows.count(tokens[0])) {
        throw ValidationError("duplicate attribute row for node '" +
                              tokens[0] + "'");
      }
      std::vector<double> values;
      values.reserve(feature_count);
      for (std::size_t f = 1; f < tokens.size(); ++f) {
        values.push_back(parse_feature(tokens[f], lines[k].number));
      }
      rows.emplace(tokens[0], std::move(values));
    }
  }

  // Label universe: edge endpoints plus attribute rows.
  std::vector<std::string> labels;
  for (const auto& [a, b] : raw_edges) {
    labels.push_back(a);
    labels.push_back(b);
  }
  for (const auto& [label, _] : rows) labels.push_back(label);
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());

  bool all_integers = true;
  std::vector<std::pair<std::int64_t, std::string>> numeric;
  for (const auto& label : labels) {
    std::int64_t value = 0;
    if (!parse_int64(label, value)) {
      all_integers = false;
      break;
    }
    numeric.emplace_back(value, label);
  }
  if (all_integers) {
    std::sort(numeric.begin(), numeric.end());
    labels.clear();
    for (auto& [_, label] : numeric) labels.push_back(label);
  }

  std::map<std::string, NodeId> id_of;
  for (std::size_t k = 0; k < labels.size(); ++k) {
    id_of.emplace(labels[k], static_cast<NodeId>(k));
  }

  if (has_table) {
    for (const auto& [a, b] : raw_edges) {
      for (const std::string* label : {&a, &b}) {
        if (!rows.count(*label)) {
          throw ValidationError("attribute row missing for node '" + *label +
                                "'");
        }
      }
    }
  }

  std::vector<NodeAttributes> attrs(labels.size());
  for (std::size_t k = 0; k < labels.size(); ++k) {
    std::vector<double> features(feature_count, 0.0);
    if (has_table) features = rows.at(labels[k]);
    attrs[k] = NodeAttributes::from_features(std::move(features));
  }

  AttributedNetwork net{std::move(attrs)};
  for (std::size_t e = 0; e < raw_edges.size(); ++e) {
    const auto& [a, b] = raw_edges[e];
    const NodeId i = id_of.at(a);
    const NodeId j = id_of.at(b);
    if (i == j) {
      throw ValidationError("line " + std::to_string(edge_lines[e]) +
                            ": self-loop (" + a + "," + b + ")");
    }
    if (net.has_edge(i, j)) {
      throw ValidationError("line " + std::to_string(edge_lines[e]) +
                            ": duplicate edge (" + a + "," + b + ")");
    }
    net.add_edge(i, j);
  }
  return LoadedNetwork{std::move(net), std::move(labels)};
}

std::string format_double(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string serialize_edge_list(const AttributedNetwork& net) {
  std::ostringstream out;
  for (const auto& [i, j] : net.edges()) {
    out << i << ' ' << j << '\n';
  }
  return out.str();
}

std::string serialize_attribute_csv(const AttributedNetwork& net) {
  std::ostringstream out;
  out << "node";
  for (std::size_t f = 0; f < net.feature_count(); ++f) {
    out << ",f" << (f + 1);
  }
  out << '\n';
  for (NodeId i = 0; i < net.node_count(); ++i) {
    out << i;
    for (double v : net.attributes(i).features) {
      out << ',' << format_double(v);
    }
    out << '\n';
  }
  return out.str();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open '" + path + "' for reading");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) {
    throw IoError("read failure on '" + path + "'");
  }
  return buf.str();
}

}  // namespace snsim

// Copyright 2026 The cayleymd Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Graph ingestion and egress: undirected DOT and a plain adjacency-list
// format ("n" on the first line, then one "u v" pair per line, 0-indexed).

#include <cctype>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "cayleymd/errors.hpp"
#include "cayleymd/graph.hpp"

namespace cayleymd {

namespace detail {

inline std::string dot_quote(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

inline std::string strip_dot_comments(std::string_view text) {
  std::string out;
  bool in_string = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (in_string) {
      out += c;
      if (c == '\\' && i + 1 < text.size()) {
        out += text[++i];
      } else if (c == '"') {
        in_string = false;
      }
      continue;
    }
    if (c == '"') {
      in_string = true;
      out += c;
    } else if (c == '/' && i + 1 < text.size() && text[i + 1] == '/') {
      while (i < text.size() && text[i] != '\n') ++i;
      out += '\n';
    } else if (c == '#' && (i == 0 || text[i - 1] == '\n')) {
      while (i < text.size() && text[i] != '\n') ++i;
      out += '\n';
    } else if (c == '/' && i + 1 < text.size() && text[i + 1] == '*') {
      auto end = text.find("*/", i + 2);
      if (end == std::string_view::npos) throw ParseError("unterminated DOT comment");
      i = end + 1;
      out += ' ';
    } else {
      out += c;
    }
  }
  return out;
}

class DotTokenizer {
 public:
  explicit DotTokenizer(std::string_view s) : s_(s) {}

  // Returns "" at end. Quoted strings come back with their quotes.
  std::string next() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ >= s_.size()) return {};
    const char c = s_[pos_];
    if (c == '"') {
      std::string tok = "\"";
      ++pos_;
      while (pos_ < s_.size() && s_[pos_] != '"') {
        if (s_[pos_] == '\\' && pos_ + 1 < s_.size()) ++pos_;
        tok += s_[pos_++];
      }
      if (pos_ >= s_.size()) throw ParseError("unterminated string in DOT input");
      ++pos_;
      return tok + "\"";
    }
    if (c == '-' && pos_ + 1 < s_.size() && (s_[pos_ + 1] == '-' || s_[pos_ + 1] == '>')) {
      pos_ += 2;
      return std::string("-") + s_[pos_ - 1];
    }
    if (std::string_view("{}[];=,").find(c) != std::string_view::npos) {
      ++pos_;
      return std::string(1, c);
    }
    std::string tok;
    while (pos_ < s_.size()) {
      const char d = s_[pos_];
      if (std::isspace(static_cast<unsigned char>(d)) ||
          std::string_view("{}[];=,\"").find(d) != std::string_view::npos) {
        break;
      }
      if (d == '-' && pos_ + 1 < s_.size() && (s_[pos_ + 1] == '-' || s_[pos_ + 1] == '>')) break;
      tok += d;
      ++pos_;
    }
    return tok;
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

inline std::string unquote(const std::string& tok) {
  if (tok.size() >= 2 && tok.front() == '"') return tok.substr(1, tok.size() - 2);
  return tok;
}

inline std::string lower(std::string s) {
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

}  // namespace detail

/// Vertex ids are indices; labels are written when the graph carries them.
inline std::string to_dot(const Graph& g, std::string_view name = "G") {
  std::ostringstream out;
  out << "graph " << name << " {\n";
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    out << "  " << u;
    if (g.has_labels()) out << " [label=" << detail::dot_quote(g.label(u)) << "]";
    out << ";\n";
  }
  for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

/// Parses an undirected DOT graph. Node ids that are exactly 0..n-1 keep
/// their numeric index; otherwise ids are numbered by first appearance.
inline Graph parse_dot(std::string_view text) {
  const std::string clean = detail::strip_dot_comments(text);
  detail::DotTokenizer tz(clean);

  std::string tok = detail::lower(tz.next());
  if (tok == "strict") tok = detail::lower(tz.next());
  if (tok == "digraph") throw ParseError("directed DOT graphs are not supported");
  if (tok != "graph") throw ParseError("DOT input must start with 'graph'");
  tok = tz.next();
  if (tok != "{") tok = tz.next();
  if (tok != "{") throw ParseError("expected '{' after graph header");

  std::vector<std::string> ids;
  std::map<std::string, std::size_t> id_index;
  std::map<std::string, std::string> labels;
  std::vector<std::pair<std::string, std::string>> raw_edges;

  auto intern = [&](const std::string& id) {
    if (!id_index.count(id)) {
      id_index[id] = ids.size();
      ids.push_back(id);
    }
  };
  auto read_attrs = [&](std::string& t) -> std::map<std::string, std::string> {
    std::map<std::string, std::string> attrs;
    while (t == "[") {
      t = tz.next();
      while (t != "]") {
        if (t.empty()) throw ParseError("unterminated attribute list in DOT input");
        if (t == "," || t == ";") {
          t = tz.next();
          continue;
        }
        const std::string key = detail::unquote(t);
        t = tz.next();
        if (t == "=") {
          attrs[key] = detail::unquote(tz.next());
          t = tz.next();
        }
      }
      t = tz.next();
    }
    return attrs;
  };

  tok = tz.next();
  while (true) {
    if (tok.empty()) throw ParseError("missing closing '}' in DOT input");
    if (tok == "}") break;
    if (tok == ";" || tok == ",") {
      tok = tz.next();
      continue;
    }
    const std::string kw = detail::lower(tok);
    if (kw == "graph" || kw == "node" || kw == "edge") {
      tok = tz.next();
      read_attrs(tok);
      continue;
    }
    if (tok == "{" || kw == "subgraph") throw ParseError("DOT subgraphs are not supported");
    std::string first = detail::unquote(tok);
    tok = tz.next();
    if (tok == "=") {  // graph-level attribute
      tz.next();
      tok = tz.next();
      continue;
    }
    intern(first);
    std::vector<std::string> chain{first};
    while (tok == "--" || tok == "->") {
      if (tok == "->") throw ParseError("directed edge '->' in undirected DOT input");
      std::string next = tz.next();
      if (next.empty() || next == ";" || next == "}") throw ParseError("dangling edge in DOT input");
      chain.push_back(detail::unquote(next));
      intern(chain.back());
      tok = tz.next();
    }
    auto attrs = read_attrs(tok);
    if (chain.size() == 1) {
      if (auto it = attrs.find("label"); it != attrs.end()) labels[first] = it->second;
    } else {
      for (std::size_t i = 0; i + 1 < chain.size(); ++i) raw_edges.emplace_back(chain[i], chain[i + 1]);
    }
  }

  const std::size_t n = ids.size();
  std::vector<std::size_t> index_of_pos(n);
  bool numeric = true;
  std::vector<char> hit(n, 0);
  for (std::size_t i = 0; i < n && numeric; ++i) {
    const std::string& id = ids[i];
    numeric = !id.empty() && id.size() < 10 &&
              std::all_of(id.begin(), id.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
    if (numeric) {
      const std::size_t v = std::stoul(id);
      numeric = v < n && !hit[v] && std::to_string(v) == id;
      if (numeric) {
        hit[v] = 1;
        index_of_pos[i] = v;
      }
    }
  }
  if (!numeric) {
    for (std::size_t i = 0; i < n; ++i) index_of_pos[i] = i;
  }

  std::vector<Edge> edges;
  for (const auto& [a, b] : raw_edges) {
    edges.emplace_back(static_cast<Vertex>(index_of_pos[id_index[a]]),
                       static_cast<Vertex>(index_of_pos[id_index[b]]));
  }
  std::vector<std::string> out_labels;
  if (!labels.empty()) {
    out_labels.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      auto it = labels.find(ids[i]);
      out_labels[index_of_pos[i]] = it != labels.end() ? it->second : ids[i];
    }
  }
  return Graph(n, edges, std::move(out_labels));
}

inline std::string to_adjacency_list(const Graph& g) {
  std::ostringstream out;
  out << g.vertex_count() << "\n";
  for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
  return out.str();
}

inline Graph parse_adjacency_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::optional<std::size_t> n;
  std::vector<Edge> edges;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<long long> nums;
    std::string word;
    while (ls >> word) {
      try {
        std::size_t pos = 0;
        nums.push_back(std::stoll(word, &pos));
        if (pos != word.size()) throw std::invalid_argument(word);
      } catch (const std::exception&) {
        throw ParseError("line " + std::to_string(lineno) + ": not an integer: '" + word + "'");
      }
    }
    if (nums.empty()) continue;
    if (!n) {
      if (nums.size() != 1 || nums[0] < 0) {
        throw ParseError("line " + std::to_string(lineno) + ": expected a vertex count");
      }
      n = static_cast<std::size_t>(nums[0]);
      continue;
    }
    if (nums.size() != 2 || nums[0] < 0 || nums[1] < 0) {
      throw ParseError("line " + std::to_string(lineno) + ": expected 'u v'");
    }
    edges.emplace_back(static_cast<Vertex>(nums[0]), static_cast<Vertex>(nums[1]));
  }
  if (!n) throw ParseError("adjacency list is empty");
  return Graph(*n, edges);
}

/// Reads a graph file; ".dot"/".gv" are DOT, anything else is an adjacency list.
inline Graph load_graph(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open graph file '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  const std::string ext = detail::lower(path.extension().string());
  if (ext == ".dot" || ext == ".gv") return parse_dot(buf.str());
  return parse_adjacency_list(buf.str());
}

}  // namespace cayleymd

// Copyright 2026 The clusterdist Authors.
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

#include "clusterdist/io.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <optional>
#include <string_view>
#include <unordered_map>

namespace clusterdist {
namespace {

constexpr std::string_view kWhitespace = " \t\r\f\v";

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t pos = 0;
  while (true) {
    pos = line.find_first_not_of(kWhitespace, pos);
    if (pos == std::string_view::npos) break;
    std::size_t end = line.find_first_of(kWhitespace, pos);
    if (end == std::string_view::npos) end = line.size();
    fields.push_back(line.substr(pos, end - pos));
    pos = end;
  }
  return fields;
}

std::optional<std::uint64_t> parse_uint(std::string_view token) {
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) return std::nullopt;
  return value;
}

// Calls `on_pair(a, b, line_no)` for every data line; `on_directive` gets
// the fields of each "%%" line.
template <typename PairFn, typename DirectiveFn>
void scan_pairs(std::istream& in, const std::string& source, PairFn on_pair,
                DirectiveFn on_directive) {
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view = line;
    const std::size_t first = view.find_first_not_of(kWhitespace);
    if (first == std::string_view::npos || view[first] == '#') continue;
    view.remove_prefix(first);
    if (view.starts_with("%%")) {
      on_directive(split_fields(view.substr(2)), line_no);
      continue;
    }
    const auto fields = split_fields(view);
    if (fields.size() != 2) {
      throw ParseError(source, line_no,
                       "expected two integers, found " + std::to_string(fields.size()) +
                           " fields");
    }
    const auto a = parse_uint(fields[0]);
    const auto b = parse_uint(fields[1]);
    if (!a || !b) {
      throw ParseError(source, line_no, "not a non-negative integer pair: '" +
                                            std::string(view) + "'");
    }
    on_pair(*a, *b, line_no);
  }
  if (in.bad()) throw std::runtime_error(source + ": read error");
}

std::ofstream open_for_write(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  return out;
}

std::ifstream open_for_read(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path.string() + "' for reading");
  return in;
}

void finish_write(std::ofstream& out, const std::filesystem::path& path) {
  out.flush();
  if (!out) throw std::runtime_error("write to '" + path.string() + "' failed");
}

}  // namespace

EdgeListData read_edge_list(std::istream& in, const EdgeListOptions& options,
                            const std::string& source) {
  std::optional<std::uint64_t> declared;
  std::uint64_t max_id = 0;
  bool any_edge = false;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> raw;

  scan_pairs(
      in, source,
      [&](std::uint64_t a, std::uint64_t b, std::size_t line_no) {
        if (a == b) {
          throw ParseError(source, line_no, "self-loop on vertex " + std::to_string(a));
        }
        if (!options.remap_ids && declared && std::max(a, b) >= *declared) {
          throw ParseError(source, line_no,
                           "vertex id " + std::to_string(std::max(a, b)) +
                               " >= declared vertex count " + std::to_string(*declared));
        }
        if (!options.remap_ids && std::max(a, b) >= UINT32_MAX) {
          throw ParseError(source, line_no, "vertex id exceeds 32-bit range");
        }
        max_id = std::max({max_id, a, b});
        any_edge = true;
        raw.emplace_back(a, b);
      },
      [&](const std::vector<std::string_view>& fields, std::size_t line_no) {
        if (fields.size() != 2 || fields[0] != "vertices" || !parse_uint(fields[1])) {
          throw ParseError(source, line_no, "unrecognized header; expected '%% vertices N'");
        }
        if (declared) throw ParseError(source, line_no, "duplicate vertex-count header");
        if (any_edge) throw ParseError(source, line_no, "header must precede edges");
        declared = parse_uint(fields[1]);
      });

  EdgeListData data;
  std::vector<Edge> edges;
  edges.reserve(raw.size());
  if (options.remap_ids) {
    for (const auto& [a, b] : raw) {
      data.original_ids.push_back(a);
      data.original_ids.push_back(b);
    }
    std::sort(data.original_ids.begin(), data.original_ids.end());
    data.original_ids.erase(std::unique(data.original_ids.begin(), data.original_ids.end()),
                            data.original_ids.end());
    std::unordered_map<std::uint64_t, VertexId> dense;
    dense.reserve(data.original_ids.size());
    for (std::size_t i = 0; i < data.original_ids.size(); ++i) {
      dense.emplace(data.original_ids[i], static_cast<VertexId>(i));
    }
    for (const auto& [a, b] : raw) edges.emplace_back(dense.at(a), dense.at(b));
    data.graph = Graph::build(data.original_ids.size(), edges);
    return data;
  }

  for (const auto& [a, b] : raw) {
    edges.emplace_back(static_cast<VertexId>(a), static_cast<VertexId>(b));
  }
  const std::uint64_t n = declared ? *declared : (any_edge ? max_id + 1 : 0);
  data.graph = Graph::build(static_cast<std::size_t>(n), edges);
  return data;
}

Graph load_edge_list(const std::filesystem::path& path) {
  return load_edge_list(path, EdgeListOptions{}).graph;
}

EdgeListData load_edge_list(const std::filesystem::path& path, const EdgeListOptions& options) {
  auto in = open_for_read(path);
  return read_edge_list(in, options, path.string());
}

void write_edge_list(const Graph& g, std::ostream& out) {
  out << "%% vertices " << g.vertex_count() << '\n';
  for (VertexId u = 0; u < g.vertex_count(); ++u) {
    for (VertexId v : g.neighbors(u)) {
      if (u < v) out << u << ' ' << v << '\n';
    }
  }
}

void save_edge_list(const Graph& g, const std::filesystem::path& path) {
  auto out = open_for_write(path);
  write_edge_list(g, out);
  finish_write(out, path);
}

void save_id_mapping(const std::vector<std::uint64_t>& original_ids,
                     const std::filesystem::path& path) {
  auto out = open_for_write(path);
  out << "# original_id dense_id\n";
  for (std::size_t i = 0; i < original_ids.size(); ++i) {
    out << original_ids[i] << ' ' << i << '\n';
  }
  finish_write(out, path);
}

ClusterAssignment read_cluster_assignment(std::istream& in, const std::string& source) {
  std::vector<std::optional<ClusterId>> labels;
  scan_pairs(
      in, source,
      [&](std::uint64_t v, std::uint64_t c, std::size_t line_no) {
        if (v >= UINT32_MAX || c >= UINT32_MAX) {
          throw ParseError(source, line_no, "id exceeds 32-bit range");
        }
        if (v >= labels.size()) labels.resize(v + 1);
        if (labels[v]) {
          throw ParseError(source, line_no, "vertex " + std::to_string(v) + " labeled twice");
        }
        labels[v] = static_cast<ClusterId>(c);
      },
      [&](const std::vector<std::string_view>&, std::size_t line_no) {
        throw ParseError(source, line_no, "headers are not allowed in assignment files");
      });
  std::vector<ClusterId> dense(labels.size());
  for (std::size_t v = 0; v < labels.size(); ++v) {
    if (!labels[v]) {
      throw std::runtime_error(source + ": vertex " + std::to_string(v) + " has no cluster");
    }
    dense[v] = *labels[v];
  }
  return ClusterAssignment::from_labels(std::move(dense));
}

ClusterAssignment load_cluster_assignment(const std::filesystem::path& path) {
  auto in = open_for_read(path);
  return read_cluster_assignment(in, path.string());
}

void write_cluster_assignment(const ClusterAssignment& a, std::ostream& out) {
  for (std::size_t v = 0; v < a.vertex_count(); ++v) {
    out << v << ' ' << a.labels()[v] << '\n';
  }
}

void save_cluster_assignment(const ClusterAssignment& a, const std::filesystem::path& path) {
  auto out = open_for_write(path);
  write_cluster_assignment(a, out);
  finish_write(out, path);
}

}  // namespace clusterdist

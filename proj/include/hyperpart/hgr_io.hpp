// Copyright 2026 The Hyperpart Authors.
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

// hMETIS-style text format:
//
//   % comment
//   E N
//   <one line per edge: space separated 1-based node ids>
//
// Only unweighted files are accepted (no fmt field, or fmt == 0).

#ifndef HYPERPART_HGR_IO_HPP
#define HYPERPART_HGR_IO_HPP

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "hyperpart/error.hpp"
#include "hyperpart/hypergraph.hpp"

namespace hyperpart {

namespace detail {

inline bool NextDataLine(std::istream& in, std::string& line, std::size_t& line_no) {
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty() && line.front() == '%') continue;
    return true;
  }
  return false;
}

inline bool IsBlank(const std::string& s) {
  return s.find_first_not_of(" \t") == std::string::npos;
}

}  // namespace detail

inline Hypergraph ReadHgr(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  while (detail::NextDataLine(in, line, line_no) && detail::IsBlank(line)) {
  }
  Require(!detail::IsBlank(line), ErrorKind::kParse, "missing 'E N' header");
  std::istringstream header(line);
  long long num_edges = -1, num_nodes = -1, fmt = 0;
  header >> num_edges >> num_nodes;
  Require(!header.fail() && num_edges >= 0 && num_nodes >= 0, ErrorKind::kParse,
          "malformed header on line " + std::to_string(line_no));
  if (header >> fmt) {
    Require(fmt == 0, ErrorKind::kParse, "weighted .hgr files are not supported");
  }
  Hypergraph h(static_cast<std::size_t>(num_nodes));
  for (long long read = 0; read < num_edges; ++read) {
    Require(detail::NextDataLine(in, line, line_no), ErrorKind::kParse,
            "expected " + std::to_string(num_edges) + " edges, found " + std::to_string(read));
    std::istringstream row(line);
    Edge e;
    long long id = 0;
    while (row >> id) {
      Require(id >= 1 && id <= num_nodes, ErrorKind::kParse,
              "node id " + std::to_string(id) + " out of range on line " + std::to_string(line_no));
      e.push_back(static_cast<NodeId>(id - 1));
    }
    Require(row.eof(), ErrorKind::kParse, "non-numeric token on line " + std::to_string(line_no));
    try {
      h.AddEdge(std::move(e));
    } catch (const Error& err) {
      Fail(ErrorKind::kParse, "line " + std::to_string(line_no) + ": " + err.detail());
    }
  }
  while (detail::NextDataLine(in, line, line_no)) {
    Require(detail::IsBlank(line), ErrorKind::kParse,
            "unexpected content after last edge on line " + std::to_string(line_no));
  }
  return h;
}

inline void WriteHgr(std::ostream& out, const Hypergraph& h) {
  out << h.num_edges() << ' ' << h.num_nodes() << '\n';
  for (const auto& e : h.edges()) {
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (i) out << ' ';
      out << e[i] + 1;
    }
    out << '\n';
  }
}

inline std::string ToHgrString(const Hypergraph& h) {
  std::ostringstream out;
  WriteHgr(out, h);
  return out.str();
}

inline Hypergraph ReadHgrFile(const std::string& path) {
  std::ifstream in(path);
  Require(static_cast<bool>(in), ErrorKind::kIo, "cannot open " + path);
  return ReadHgr(in);
}

inline void WriteHgrFile(const std::string& path, const Hypergraph& h) {
  std::ofstream out(path);
  Require(static_cast<bool>(out), ErrorKind::kIo, "cannot write " + path);
  WriteHgr(out, h);
  Require(static_cast<bool>(out), ErrorKind::kIo, "write failed for " + path);
}

// Ground-truth sidecar: line i holds the label of node i.
inline std::vector<int> ReadLabels(std::istream& in) {
  std::vector<int> labels;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (detail::IsBlank(line) || line.front() == '%') continue;
    std::istringstream row(line);
    int label = 0;
    row >> label;
    Require(!row.fail(), ErrorKind::kParse, "bad label on line " + std::to_string(line_no));
    labels.push_back(label);
  }
  return labels;
}

inline PartitionAssignment ReadLabelsFile(const std::string& path) {
  std::ifstream in(path);
  Require(static_cast<bool>(in), ErrorKind::kIo, "cannot open " + path);
  PartitionAssignment p;
  p.labels = ReadLabels(in);
  p.k = 1;
  for (int label : p.labels) p.k = std::max(p.k, label);
  p.Validate(/*allow_unassigned=*/true);
  return p;
}

inline void WriteLabels(std::ostream& out, const PartitionAssignment& p) {
  for (int label : p.labels) out << label << '\n';
}

inline void WriteLabelsFile(const std::string& path, const PartitionAssignment& p) {
  std::ofstream out(path);
  Require(static_cast<bool>(out), ErrorKind::kIo, "cannot write " + path);
  WriteLabels(out, p);
}

}  // namespace hyperpart

#endif  // HYPERPART_HGR_IO_HPP

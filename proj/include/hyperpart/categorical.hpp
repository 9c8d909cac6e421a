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

// Categorical table -> hypergraph. Rows become nodes; every (attribute,
// value) pair shared by at least two rows becomes one edge. Empty cells never
// form an edge. '?' is an ordinary value unless question_mark_is_missing is
// set.

#ifndef HYPERPART_CATEGORICAL_HPP
#define HYPERPART_CATEGORICAL_HPP

#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hyperpart/error.hpp"
#include "hyperpart/hypergraph.hpp"

namespace hyperpart {

// Minimal RFC 4180 reader: comma separated, double-quoted fields with ""
// escapes, CRLF or LF line ends.
inline std::vector<std::vector<std::string>> ReadCsv(std::istream& in) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> row;
  std::string field;
  bool quoted = false, field_started = false, any = false;
  char ch;
  auto end_field = [&] {
    row.push_back(std::move(field));
    field.clear();
    field_started = false;
  };
  auto end_row = [&] {
    end_field();
    rows.push_back(std::move(row));
    row.clear();
  };
  while (in.get(ch)) {
    any = true;
    if (quoted) {
      if (ch == '"') {
        if (in.peek() == '"') {
          in.get(ch);
          field.push_back('"');
        } else {
          quoted = false;
        }
      } else {
        field.push_back(ch);
      }
      continue;
    }
    if (ch == '"' && !field_started) {
      quoted = true;
      field_started = true;
    } else if (ch == ',') {
      end_field();
    } else if (ch == '\n') {
      end_row();
      any = false;
    } else if (ch == '\r') {
      if (in.peek() == '\n') continue;
      end_row();
      any = false;
    } else {
      field.push_back(ch);
      field_started = true;
    }
  }
  Require(!quoted, ErrorKind::kParse, "unterminated quoted field");
  if (any) end_row();
  return rows;
}

struct CategoricalOptions {
  std::optional<std::string> label_column;  // header name, or a 1-based index
  bool question_mark_is_missing = false;
};

struct CategoricalHypergraph {
  Hypergraph h;
  std::optional<PartitionAssignment> truth;
  std::vector<std::string> label_values;   // label i+1 <-> label_values[i]
  std::vector<std::string> edge_sources;   // "attribute=value" per edge
  std::size_t attributes = 0;
};

inline CategoricalHypergraph IngestCategorical(std::istream& in, const CategoricalOptions& opt = {}) {
  auto rows = ReadCsv(in);
  while (!rows.empty() && rows.back().size() == 1 && rows.back()[0].empty()) rows.pop_back();
  Require(!rows.empty(), ErrorKind::kParse, "CSV has no header row");
  const auto& header = rows.front();
  const std::size_t width = header.size();
  for (std::size_t r = 1; r < rows.size(); ++r) {
    Require(rows[r].size() == width, ErrorKind::kParse,
            "row " + std::to_string(r + 1) + " has " + std::to_string(rows[r].size()) + " fields, header has " +
                std::to_string(width));
  }
  std::optional<std::size_t> label_col;
  if (opt.label_column) {
    for (std::size_t c = 0; c < width; ++c) {
      if (header[c] == *opt.label_column) label_col = c;
    }
    if (!label_col) {
      try {
        std::size_t used = 0;
        const long idx = std::stol(*opt.label_column, &used);
        if (used == opt.label_column->size() && idx >= 1 && static_cast<std::size_t>(idx) <= width) {
          label_col = static_cast<std::size_t>(idx - 1);
        }
      } catch (const std::logic_error&) {
      }
    }
    Require(label_col.has_value(), ErrorKind::kSchema, "no column named '" + *opt.label_column + "'");
  }
  const std::size_t n = rows.size() - 1;
  CategoricalHypergraph out;
  out.h = Hypergraph(n);
  for (std::size_t c = 0; c < width; ++c) {
    if (label_col && c == *label_col) continue;
    ++out.attributes;
    std::vector<std::string> order;
    std::map<std::string, Edge> groups;
    for (std::size_t r = 0; r < n; ++r) {
      const auto& value = rows[r + 1][c];
      if (value.empty() || (opt.question_mark_is_missing && value == "?")) continue;
      auto [it, inserted] = groups.try_emplace(value);
      if (inserted) order.push_back(value);
      it->second.push_back(static_cast<NodeId>(r));
    }
    for (const auto& value : order) {
      auto& members = groups[value];
      if (members.size() < 2) continue;
      out.h.AddEdge(std::move(members));
      out.edge_sources.push_back(header[c] + "=" + value);
    }
  }
  Require(out.h.num_edges() > 0, ErrorKind::kParse, "no (attribute, value) pair is shared by two rows");
  if (label_col) {
    std::map<std::string, int> ids;
    PartitionAssignment truth;
    for (std::size_t r = 0; r < n; ++r) {
      const auto& value = rows[r + 1][*label_col];
      auto [it, inserted] = ids.try_emplace(value, static_cast<int>(ids.size()) + 1);
      if (inserted) out.label_values.push_back(value);
      truth.labels.push_back(it->second);
    }
    truth.k = std::max<int>(1, static_cast<int>(ids.size()));
    out.truth = std::move(truth);
  }
  return out;
}

inline CategoricalHypergraph IngestCategoricalFile(const std::string& path, const CategoricalOptions& opt = {}) {
  std::ifstream in(path, std::ios::binary);
  Require(static_cast<bool>(in), ErrorKind::kIo, "cannot open " + path);
  return IngestCategorical(in, opt);
}

}  // namespace hyperpart

#endif  // HYPERPART_CATEGORICAL_HPP

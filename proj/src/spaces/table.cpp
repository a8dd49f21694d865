// Copyright 2026 The Rarity Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#include "rarity/spaces/table.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace rarity::spaces {

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

std::string pad(const std::string& s, std::size_t width, bool right) {
  if (s.size() >= width) return s;
  const std::string fill(width - s.size(), ' ');
  return right ? fill + s : s + fill;
}

}  // namespace

TableFormat parse_table_format(std::string_view text) {
  if (text == "markdown" || text == "md") return TableFormat::markdown;
  if (text == "csv") return TableFormat::csv;
  if (text == "plain" || text == "text") return TableFormat::plain;
  throw std::invalid_argument("unknown table format '" + std::string(text) + "'");
}

std::vector<TableRow> table_rows(const std::vector<Scenario>& registry) {
  const Precision prec{40};
  std::vector<TableRow> rows;
  rows.reserve(registry.size());
  for (const auto& s : registry) {
    TableRow row{s.id,
                 s.description,
                 quantity_log(s.quantity, LogBase::two, prec),
                 quantity_log(s.quantity, LogBase::ten, prec),
                 s.published_order,
                 s.provenance,
                 std::nullopt,
                 false,
                 {}};
    if (s.derived)
      row.recomputed_log2 = quantity_log(*s.derived, LogBase::two, prec);
    else if (s.provenance == Provenance::formula)
      row.recomputed_log2 = row.log2;

    if (row.recomputed_log2 && !s.published_log2.empty()) {
      const XReal published = XReal::parse(s.published_log2, prec);
      const double gap = xprec::abs(*row.recomputed_log2 - published).to_double();
      row.mismatch = gap > kMismatchTolerance;
      if (s.derived)
        row.notes.push_back(s.derived_note + ": log2 = " + row.recomputed_log2->to_fixed(2) +
                            (row.mismatch ? ", does not match the published value" : ""));
    } else if (!s.derived_note.empty()) {
      row.notes.push_back(s.derived_note);
    }

    if (!s.published_order.empty()) {
      const XReal nearest = xprec::floor(row.log10 + XReal(0.5, prec));
      if (nearest != std::stol(s.published_order))
        row.notes.push_back("log10 = " + row.log10.to_fixed(2) + " while the order column reads " +
                            s.published_order);
    }
    rows.push_back(std::move(row));
  }
  std::stable_sort(rows.begin(), rows.end(), [](const TableRow& a, const TableRow& b) {
    if (a.log2 != b.log2) return a.log2 > b.log2;
    return a.id < b.id;
  });
  return rows;
}

std::string render_table(const std::vector<Scenario>& registry, TableFormat format) {
  if (registry.empty()) throw DomainError("empty scenario registry");
  const auto rows = table_rows(registry);
  std::ostringstream out;

  if (format == TableFormat::csv) {
    out << "id,description,log2,log10,paper_order,provenance,mismatch\n";
    for (const auto& r : rows)
      out << r.id << ',' << csv_field(r.description) << ',' << r.log2.to_fixed(2) << ','
          << r.log10.to_fixed(2) << ',' << r.published_order << ',' << to_string(r.provenance)
          << ',' << (r.mismatch ? "yes" : "no") << '\n';
    return out.str();
  }

  const std::vector<std::string> header{"id",    "description", "log2",    "log10",
                                        "order", "provenance",  "mismatch"};
  std::vector<std::vector<std::string>> cells;
  std::vector<std::pair<std::string, std::string>> footnotes;
  for (const auto& r : rows) {
    std::string id = r.id;
    for (const auto& note : r.notes) {
      footnotes.emplace_back(r.id, note);
      if (format == TableFormat::markdown) id += "[^" + std::to_string(footnotes.size()) + "]";
    }
    cells.push_back({id, r.description, r.log2.to_fixed(2), r.log10.to_fixed(2),
                     r.published_order, std::string(to_string(r.provenance)),
                     r.mismatch ? "MISMATCH" : ""});
  }

  if (format == TableFormat::markdown) {
    out << "| " << join(header, " | ") << " |\n";
    out << "|---|---|--:|--:|--:|---|---|\n";
    for (const auto& c : cells) out << "| " << join(c, " | ") << " |\n";
    if (!footnotes.empty()) out << '\n';
    for (std::size_t i = 0; i < footnotes.size(); ++i)
      out << "[^" << i + 1 << "]: " << footnotes[i].first << ": " << footnotes[i].second << '\n';
    return out.str();
  }

  std::vector<std::size_t> width(header.size());
  for (std::size_t j = 0; j < header.size(); ++j) width[j] = header[j].size();
  for (const auto& c : cells)
    for (std::size_t j = 0; j < c.size(); ++j) width[j] = std::max(width[j], c[j].size());
  auto line = [&](const std::vector<std::string>& c) {
    std::string s;
    for (std::size_t j = 0; j < c.size(); ++j) {
      const bool numeric = j >= 2 && j <= 4;
      s += (j ? "  " : "") + pad(c[j], width[j], numeric);
    }
    while (!s.empty() && s.back() == ' ') s.pop_back();
    out << s << '\n';
  };
  line(header);
  for (const auto& c : cells) line(c);
  if (!footnotes.empty()) out << "\nNotes:\n";
  for (const auto& [id, note] : footnotes) out << "  " << id << ": " << note << '\n';
  return out.str();
}

}  // namespace rarity::spaces

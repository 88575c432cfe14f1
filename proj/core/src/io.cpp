// Copyright 2026 The gammahom Authors
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

#include "gammahom/io.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "json.hpp"

#include "gammahom/errors.hpp"

namespace gammahom {

using nlohmann::json;

namespace {

json matrix_json(const SparseMatrix& m) {
  json entries = json::array();
  for (std::size_t c = 0; c < m.cols(); ++c)
    for (const auto& e : m.column(c)) entries.push_back({e.row, c, e.value});
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

SparseMatrix matrix_of(const json& j) {
  const auto rows = j.at("rows").get<std::size_t>();
  const auto cols = j.at("cols").get<std::size_t>();
  std::vector<Triplet> triplets;
  for (const auto& e : j.at("entries")) {
    if (!e.is_array() || e.size() != 3) throw ParseError("matrix entry must be [row, col, value]");
    const auto r = e[0].get<std::size_t>();
    const auto c = e[1].get<std::size_t>();
    if (r >= rows || c >= cols)
      throw ValidationError("matrix entry (" + std::to_string(r) + ", " + std::to_string(c) +
                            ") outside " + std::to_string(rows) + "x" + std::to_string(cols));
    triplets.emplace_back(r, c, e[2].get<std::int64_t>());
  }
  return SparseMatrix::from_triplets(rows, cols, triplets);
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

json group_json(const std::optional<HomologyGroup>& g, const Ring& ring) {
  if (!g) return nullptr;
  json torsion = json::array();
  for (const auto& t : g->torsion) torsion.push_back(t.get_str());
  return {{"group", g->to_string(ring)}, {"rank", g->rank}, {"torsion", std::move(torsion)}};
}

json table_json(const HomologyTable& t) {
  json degrees = json::array();
  for (std::size_t d = 0; d < t.groups.size(); ++d) {
    json row = {{"degree", d}};
    if (t.groups[d]) row.update(group_json(t.groups[d], t.ring));
    else row["group"] = nullptr;
    degrees.push_back(std::move(row));
  }
  return {{"ring", t.ring.tag()}, {"complete", t.complete()}, {"degrees", std::move(degrees)}};
}

const char* mode_name(SpecialMode m) { return m == SpecialMode::Bijection ? "bijection" : "homology"; }

json special_json(const SpecialVerdict& v) {
  return {{"special", v.special}, {"mode", mode_name(v.mode)}, {"bound", v.bound},
          {"depth", v.depth}, {"detail", v.detail}};
}

json result_json(const StableResult& r) {
  json j = {{"space", r.space},
            {"ring", r.ring.tag()},
            {"pre_spectrum", r.pre_spectrum},
            {"special", special_json(r.special)},
            {"connectivity", r.connectivity},
            {"levels_built", r.levels_built}};
  json degrees = json::array();
  for (const auto& e : r.evidence) {
    json row = {{"degree", e.degree}, {"settled", e.settled}, {"n", e.n}, {"bound", e.bound}};
    row["value"] = group_json(e.value, r.ring);
    row["previous"] = group_json(e.previous, r.ring);
    degrees.push_back(std::move(row));
  }
  j["degrees"] = std::move(degrees);
  json tower = json::array();
  for (const auto& [key, g] : r.tower)
    tower.push_back({{"n", key.first}, {"i", key.second}, {"group", g.to_string(r.ring)}});
  j["tower"] = std::move(tower);
  j["unstable_above"] = r.unstable_above ? json(*r.unstable_above) : json(nullptr);
  j["budget_note"] = r.budget_note;
  return j;
}

std::string group_cell(const std::optional<HomologyGroup>& g, const Ring& ring) {
  return g ? g->to_string(ring) : "?";
}

std::string torsion_cell(const std::optional<HomologyGroup>& g) {
  if (!g) return "?";
  std::string s;
  for (const auto& t : g->torsion) s += (s.empty() ? "" : " ") + t.get_str();
  return s;
}

std::string rank_cell(const std::optional<HomologyGroup>& g) {
  return g ? std::to_string(g->rank) : "?";
}

/// Left-aligned columns separated by two spaces.
std::string aligned(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows) {
    width.resize(std::max(width.size(), row.size()), 0);
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  std::ostringstream out;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      line += row[c];
      if (c + 1 < row.size()) line += std::string(width[c] - row[c].size() + 2, ' ');
    }
    out << line << '\n';
  }
  return out.str();
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) quoted += c == '"' ? std::string("\"\"") : std::string(1, c);
  return quoted + "\"";
}

std::string csv_line(const std::vector<std::string>& fields) {
  std::string line;
  for (std::size_t i = 0; i < fields.size(); ++i) line += (i ? "," : "") + csv_field(fields[i]);
  return line + "\n";
}

std::vector<std::vector<std::string>> result_rows(const StableResult& r) {
  std::vector<std::vector<std::string>> rows{{"degree", "group", "rank", "torsion", "n", "previous", "bound"}};
  for (const auto& e : r.evidence)
    rows.push_back({std::to_string(e.degree), group_cell(e.value, r.ring), rank_cell(e.value),
                    torsion_cell(e.value), e.n >= 0 ? std::to_string(e.n) : "-",
                    e.previous ? e.previous->to_string(r.ring) : "-", e.bound});
  return rows;
}

}  // namespace

std::string matrix_to_json(const SparseMatrix& m) {
  json j = matrix_json(m);
  j["schema_version"] = kSchemaVersion;
  return j.dump(2);
}

SparseMatrix matrix_from_json(std::string_view text) {
  try {
    return matrix_of(parse_json(text));
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed matrix: ") + e.what());
  }
}

std::string complex_to_json(const ChainComplex& c) {
  json boundaries = json::array();
  for (int d = 1; d <= c.top_degree(); ++d) {
    json b = matrix_json(c.boundary(d));
    b["degree"] = d;
    boundaries.push_back(std::move(b));
  }
  json j = {{"schema_version", kSchemaVersion},
            {"kind", "chain_complex"},
            {"ring", c.ring().tag()},
            {"ranks", c.ranks()},
            {"boundaries", std::move(boundaries)}};
  return j.dump(2);
}

ChainComplex complex_from_json(std::string_view text) {
  const json j = parse_json(text);
  try {
    if (j.value("schema_version", 0) != kSchemaVersion)
      throw ParseError("unsupported schema_version");
    const Ring ring = Ring::parse(j.value("ring", std::string("z")));
    auto ranks = j.at("ranks").get<std::vector<std::size_t>>();
    std::vector<SparseMatrix> boundaries(ranks.empty() ? 0 : ranks.size() - 1);
    for (std::size_t d = 1; d < ranks.size(); ++d) boundaries[d - 1] = SparseMatrix(ranks[d - 1], ranks[d]);
    for (const auto& b : j.at("boundaries")) {
      const auto d = b.at("degree").get<std::size_t>();
      if (d == 0 || d >= ranks.size())
        throw ValidationError("boundary degree " + std::to_string(d) + " out of range");
      boundaries[d - 1] = matrix_of(b);
    }
    return ChainComplex(ring, std::move(ranks), std::move(boundaries));
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed chain complex: ") + e.what());
  }
}

std::string table_to_json(const HomologyTable& t) {
  json j = table_json(t);
  j["schema_version"] = kSchemaVersion;
  j["kind"] = "homology_table";
  return j.dump(2);
}

std::string result_to_json(const StableResult& r) {
  json j = result_json(r);
  j["schema_version"] = kSchemaVersion;
  j["kind"] = "stable_result";
  return j.dump(2);
}

std::string report_to_json(const CheckReport& r) {
  json results = json::array();
  for (const auto& s : r.results) results.push_back(result_json(s));
  json j = {{"schema_version", kSchemaVersion},
            {"kind", "check_report"},
            {"name", r.name},
            {"space", r.space},
            {"passed", r.passed},
            {"details", r.details},
            {"results", std::move(results)}};
  return j.dump(2);
}

std::string render_text(const HomologyTable& t) {
  std::vector<std::vector<std::string>> rows{{"degree", "group"}};
  for (std::size_t d = 0; d < t.groups.size(); ++d)
    rows.push_back({std::to_string(d), group_cell(t.groups[d], t.ring)});
  return aligned(rows);
}

std::string render_text(const StableResult& r) {
  std::ostringstream out;
  out << "space: " << r.space << "  ring: " << r.ring.symbol()
      << "  input: " << (r.pre_spectrum ? "pre-spectrum" : "special") << '\n';
  out << aligned(result_rows(r));
  if (r.unstable_above) out << "unstable above degree " << *r.unstable_above << '\n';
  if (!r.budget_note.empty()) out << "note: " << r.budget_note << '\n';
  return out.str();
}

std::string render_text(const CheckReport& r) {
  std::ostringstream out;
  out << (r.passed ? "PASS " : "FAIL ") << r.name << " [" << r.space << "]\n";
  for (const auto& d : r.details) out << "  " << d << '\n';
  return out.str();
}

std::string render_csv(const HomologyTable& t) {
  std::string s = csv_line({"degree", "group", "rank", "torsion"});
  for (std::size_t d = 0; d < t.groups.size(); ++d)
    s += csv_line({std::to_string(d), group_cell(t.groups[d], t.ring), rank_cell(t.groups[d]),
                   torsion_cell(t.groups[d])});
  return s;
}

std::string render_csv(const StableResult& r) {
  std::string s;
  for (const auto& row : result_rows(r)) s += csv_line(row);
  return s;
}

std::string render_csv(const CheckReport& r) {
  std::string s = csv_line({"check", "space", "passed", "detail"});
  for (const auto& d : r.details) s += csv_line({r.name, r.space, r.passed ? "1" : "0", d});
  if (r.details.empty()) s += csv_line({r.name, r.space, r.passed ? "1" : "0", ""});
  return s;
}

}  // namespace gammahom

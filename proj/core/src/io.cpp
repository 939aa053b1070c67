// Copyright 2026 The skewbrace Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "skb/io.hpp"

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "json.hpp"

namespace skb {

using nlohmann::json;

std::string_view tool_version() { return SKB_VERSION; }

namespace {

json parse(std::string_view text) {
  try {
    json doc = json::parse(text);
    if (!doc.is_object()) throw Error(ErrorKind::InvalidInput, "top-level JSON value must be an object");
    return doc;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::InvalidInput, std::string("malformed JSON: ") + e.what());
  }
}

Matrix read_matrix(const json& doc, const char* key, std::size_t n) {
  if (!doc.contains(key) || !doc[key].is_array() || doc[key].size() != n) {
    throw Error(ErrorKind::InvalidInput, std::string("'") + key + "' must be an n x n array");
  }
  Matrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    const json& row = doc[key][i];
    if (!row.is_array() || row.size() != n) {
      throw Error(ErrorKind::InvalidInput, std::string("'") + key + "' must be an n x n array");
    }
    for (const json& v : row) {
      if (!v.is_number_integer() || v.get<long long>() < 0 || v.get<long long>() >= static_cast<long long>(n)) {
        throw Error(ErrorKind::InvalidInput, std::string("'") + key + "' entries must lie in 0..n-1");
      }
      m[i].push_back(static_cast<Elem>(v.get<long long>()));
    }
  }
  return m;
}

std::size_t read_size(const json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_number_integer() || doc[key].get<long long>() <= 0) {
    throw Error(ErrorKind::InvalidInput, std::string("'") + key + "' must be a positive integer");
  }
  return static_cast<std::size_t>(doc[key].get<long long>());
}

// The permutation swapping 0 with the two-sided identity of `table`, or the
// identity permutation if there is none (validation then reports it).
Permutation identity_relabeling(const Matrix& table) {
  const std::size_t n = table.size();
  for (Elem e = 0; e < n; ++e) {
    bool identity = true;
    for (Elem x = 0; x < n && identity; ++x) identity = table[e][x] == x && table[x][e] == x;
    if (identity) {
      if (e == 0) break;
      return Permutation::from_cycles(n, {{0, e}});
    }
  }
  return Permutation::identity(n);
}

Matrix apply_relabeling(const Matrix& table, const Permutation& p) {
  Matrix out = table;
  for (Elem a = 0; a < table.size(); ++a) {
    for (Elem b = 0; b < table.size(); ++b) out[p(a)][p(b)] = p(table[a][b]);
  }
  return out;
}

std::string dump(const json& doc) { return doc.dump() + "\n"; }

}  // namespace

FileKind detect_file_kind(std::string_view json_text) {
  const json doc = parse(json_text);
  if (doc.contains("sigma") || doc.contains("tau")) return FileKind::Solution;
  if (doc.contains("add") || doc.contains("circ")) return FileKind::Brace;
  if (doc.contains("table")) return FileKind::Group;
  throw Error(ErrorKind::InvalidInput, "not a group, brace or solution document");
}

LoadedGroup parse_group_json(std::string_view json_text) {
  const json doc = parse(json_text);
  const std::size_t n = read_size(doc, "order");
  const Matrix table = read_matrix(doc, "table", n);
  Permutation p = identity_relabeling(table);
  return {validate_group(apply_relabeling(table, p)), std::move(p)};
}

LoadedBrace parse_brace_json(std::string_view json_text) {
  const json doc = parse(json_text);
  const std::size_t n = read_size(doc, "order");
  const Matrix add = read_matrix(doc, "add", n);
  const Matrix circ = read_matrix(doc, "circ", n);
  Permutation p = identity_relabeling(add);
  GroupTable g_add = validate_group(apply_relabeling(add, p));
  GroupTable g_circ = validate_group(apply_relabeling(circ, p));
  return {validate_brace(g_add, g_circ), std::move(p)};
}

Solution parse_solution_json(std::string_view json_text) {
  const json doc = parse(json_text);
  const std::size_t n = read_size(doc, "size");
  return validate_solution(read_matrix(doc, "sigma", n), read_matrix(doc, "tau", n));
}

std::string group_to_json(const GroupTable& g) {
  return dump(json{{"order", g.order()}, {"table", g.to_matrix()}});
}

std::string brace_to_json(const SkewBrace& a) {
  return dump(json{{"order", a.order()},
                   {"add", a.additive().to_matrix()},
                   {"circ", a.multiplicative().to_matrix()}});
}

std::string solution_to_json(const Solution& s) {
  return dump(json{{"size", s.size()}, {"sigma", s.sigma_matrix()}, {"tau", s.tau_matrix()}});
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::InvalidInput, "cannot open " + path.string());
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::InvalidInput, "cannot write " + path.string());
  out << content;
}

void export_catalog(const BraceCatalog& catalog, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  json entries = json::array();
  for (std::size_t i = 0; i < catalog.entries.size(); ++i) {
    char name[32];
    std::snprintf(name, sizeof name, "brace_%03zu.json", i + 1);
    const auto& e = catalog.entries[i];
    write_text_file(dir / name, brace_to_json(e.brace));
    entries.push_back({{"file", name}, {"add", e.add_name}, {"mult", e.mult_name}});
  }
  json manifest{{"order", catalog.order},
                {"count", catalog.entries.size()},
                {"entries", entries},
                {"provenance", to_string(catalog.provenance)},
                {"tool_version", tool_version()}};
  write_text_file(dir / "manifest.json", manifest.dump(2) + "\n");
}

}  // namespace skb

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

#ifndef SKB_IO_HPP_
#define SKB_IO_HPP_

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "skb/brace.hpp"
#include "skb/enumeration.hpp"
#include "skb/ybe.hpp"

namespace skb {

std::string_view tool_version();

// File formats (JSON, UTF-8):
//   group:    {"order": n, "table": [[...], ...]}
//   brace:    {"order": n, "add": [[...]], "circ": [[...]]}
//   solution: {"size": n, "sigma": [[...]], "tau": [[...]]}
//             with sigma[x][y] = sigma_x(y) and tau[y][x] = tau_y(x).
// Malformed documents raise InvalidInput; documents that parse but fail a
// mathematical check raise the corresponding validation error.

enum class FileKind { Group, Brace, Solution };
FileKind detect_file_kind(std::string_view json_text);

struct LoadedGroup {
  GroupTable group;
  /// Non-identity when the identity was not at label 0; maps old labels to new.
  Permutation relabeling;
};

struct LoadedBrace {
  SkewBrace brace;
  Permutation relabeling;
};

LoadedGroup parse_group_json(std::string_view json_text);
LoadedBrace parse_brace_json(std::string_view json_text);
Solution parse_solution_json(std::string_view json_text);

std::string group_to_json(const GroupTable& g);
std::string brace_to_json(const SkewBrace& a);
std::string solution_to_json(const Solution& s);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view content);

/// Writes brace_NNN.json per entry plus manifest.json (order, count,
/// per-entry group labels, provenance, tool version) into `dir`.
void export_catalog(const BraceCatalog& catalog, const std::filesystem::path& dir);

}  // namespace skb

#endif  // SKB_IO_HPP_

// Copyright 2026 The pedit Authors.
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

#ifndef PEDIT_EDIT_SCRIPT_HPP
#define PEDIT_EDIT_SCRIPT_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "pedit/text.hpp"

namespace pedit {

enum class EditKind : std::uint8_t { kDelete, kInsert, kSubstitute };

/// One edit. `pos` is 1-based. Ops are applied in order, each against the
/// string produced by the previous ones: Delete/Substitute address an
/// existing position, Insert places `symbol` so that it ends up at `pos`
/// (pos == length + 1 appends).
///
/// Every script produced by this library lists its ops right to left, so
/// each position also equals the corresponding source-string coordinate.
struct EditOp {
  EditKind kind;
  std::size_t pos;
  Symbol symbol = 0;

  static EditOp del(std::size_t pos) { return {EditKind::kDelete, pos, 0}; }
  static EditOp ins(std::size_t pos, Symbol s) { return {EditKind::kInsert, pos, s}; }
  static EditOp sub(std::size_t pos, Symbol s) { return {EditKind::kSubstitute, pos, s}; }

  friend bool operator==(const EditOp&, const EditOp&) = default;
};

using EditScript = std::vector<EditOp>;

/// Applies `script` to `source`. Throws ScriptError naming the first op whose
/// position is out of range for the string it is applied to.
Text apply_script(const Text& source, const EditScript& script);

/// True when applying `script` to `source` yields exactly `target`.
bool script_transforms(const Text& source, const EditScript& script, const Text& target);

/// One op per line: "D <pos>", "I <pos> <char>", "S <pos> <char>".
std::string format_script(const EditScript& script, const Alphabet& alphabet);

}  // namespace pedit

#endif  // PEDIT_EDIT_SCRIPT_HPP

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

#include "pedit/edit_script.hpp"

#include <sstream>

#include "pedit/error.hpp"

namespace pedit {

namespace {

const char* kind_name(EditKind kind) {
  switch (kind) {
    case EditKind::kDelete:
      return "delete";
    case EditKind::kInsert:
      return "insert";
    case EditKind::kSubstitute:
      return "substitute";
  }
  return "?";
}

[[noreturn]] void reject(std::size_t index, const EditOp& op, std::size_t length,
                         const char* why) {
  std::ostringstream msg;
  msg << "edit op #" << index << " (" << kind_name(op.kind) << " at " << op.pos << ") " << why
      << " (current length " << length << ")";
  throw ScriptError(index, msg.str());
}

}  // namespace

Text apply_script(const Text& source, const EditScript& script) {
  std::vector<Symbol> s = source.symbols();
  const unsigned sigma = source.alphabet_size();
  for (std::size_t k = 0; k < script.size(); ++k) {
    const EditOp& op = script[k];
    if (op.kind != EditKind::kDelete && op.symbol != kPad && op.symbol >= sigma) {
      reject(k, op, s.size(), "carries a symbol outside the alphabet");
    }
    switch (op.kind) {
      case EditKind::kDelete:
        if (op.pos < 1 || op.pos > s.size()) reject(k, op, s.size(), "is out of range");
        s.erase(s.begin() + static_cast<std::ptrdiff_t>(op.pos - 1));
        break;
      case EditKind::kInsert:
        if (op.pos < 1 || op.pos > s.size() + 1) reject(k, op, s.size(), "is out of range");
        s.insert(s.begin() + static_cast<std::ptrdiff_t>(op.pos - 1), op.symbol);
        break;
      case EditKind::kSubstitute:
        if (op.pos < 1 || op.pos > s.size()) reject(k, op, s.size(), "is out of range");
        s[op.pos - 1] = op.symbol;
        break;
    }
  }
  return Text(std::move(s), sigma);
}

bool script_transforms(const Text& source, const EditScript& script, const Text& target) {
  try {
    return apply_script(source, script) == target;
  } catch (const ScriptError&) {
    return false;
  }
}

std::string format_script(const EditScript& script, const Alphabet& alphabet) {
  std::ostringstream out;
  for (const EditOp& op : script) {
    switch (op.kind) {
      case EditKind::kDelete:
        out << "D " << op.pos << '\n';
        break;
      case EditKind::kInsert:
        out << "I " << op.pos << ' ' << alphabet.to_char(op.symbol) << '\n';
        break;
      case EditKind::kSubstitute:
        out << "S " << op.pos << ' ' << alphabet.to_char(op.symbol) << '\n';
        break;
    }
  }
  return out.str();
}

}  // namespace pedit

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

#ifndef PEDIT_TEXT_HPP
#define PEDIT_TEXT_HPP

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pedit {

/// Symbols are small integer codes in [0, alphabet size). kPad is reserved
/// for the null characters appended when strings are cut into blocks and is
/// never a valid alphabet code.
using Symbol = std::uint8_t;
inline constexpr Symbol kPad = 0xFF;
inline constexpr unsigned kMaxAlphabetSize = 254;

using SymbolView = std::span<const Symbol>;

/// An immutable symbol sequence. Positions are 0-based for element access;
/// the algorithms that mirror the block formulation use 1-based positions and
/// say so explicitly.
class Text {
 public:
  Text() = default;
  Text(std::vector<Symbol> symbols, unsigned alphabet_size);
  Text(std::initializer_list<Symbol> symbols, unsigned alphabet_size)
      : Text(std::vector<Symbol>(symbols), alphabet_size) {}

  std::size_t size() const noexcept { return symbols_.size(); }
  bool empty() const noexcept { return symbols_.empty(); }
  unsigned alphabet_size() const noexcept { return alphabet_size_; }

  Symbol operator[](std::size_t i) const noexcept { return symbols_[i]; }
  SymbolView view() const noexcept { return symbols_; }
  operator SymbolView() const noexcept { return symbols_; }  // NOLINT
  const std::vector<Symbol>& symbols() const noexcept { return symbols_; }

  Text substr(std::size_t pos, std::size_t len) const;

  /// Returns a copy extended with kPad up to `length` (no-op when already at
  /// least that long).
  Text padded_to(std::size_t length) const;

  /// FNV-1a over the length and the symbol codes.
  std::uint64_t checksum() const noexcept;

  friend bool operator==(const Text& a, const Text& b) noexcept {
    return a.symbols_ == b.symbols_;
  }

 private:
  std::vector<Symbol> symbols_;
  unsigned alphabet_size_ = 4;
};

/// Maps bytes to symbol codes. Code k is the k-th character of chars().
class Alphabet {
 public:
  Alphabet() : Alphabet("ACGT") {}
  explicit Alphabet(std::string chars);

  /// "ACGT" prefixes for sizes up to 4, then lowercase, uppercase, digits.
  static Alphabet standard(unsigned size);
  /// Sorted distinct bytes appearing in any of `samples`.
  static Alphabet detect(std::span<const std::string> samples);

  unsigned size() const noexcept { return static_cast<unsigned>(chars_.size()); }
  const std::string& chars() const noexcept { return chars_; }

  /// Throws Error(kInvalidArgument) naming the first byte outside the alphabet.
  Text encode(std::string_view bytes) const;
  std::string decode(SymbolView symbols) const;
  char to_char(Symbol s) const;

 private:
  std::string chars_;
  std::vector<int> code_of_;  // 256 entries, -1 when absent
};

enum class TextFormat {
  kRaw,    // whole file is one string; a single trailing newline is dropped
  kLines,  // one string per line
};

std::vector<std::string> read_strings(const std::string& path, TextFormat format);
void write_string(const std::string& path, std::string_view contents);

}  // namespace pedit

#endif  // PEDIT_TEXT_HPP

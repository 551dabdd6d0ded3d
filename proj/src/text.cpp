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

#include "pedit/text.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <iterator>
#include <sstream>

#include "pedit/error.hpp"

namespace pedit {

Text::Text(std::vector<Symbol> symbols, unsigned alphabet_size)
    : symbols_(std::move(symbols)), alphabet_size_(alphabet_size) {
  if (alphabet_size_ == 0 || alphabet_size_ > kMaxAlphabetSize) {
    throw Error(ErrorCode::kInvalidArgument,
                "alphabet size must be in [1, " + std::to_string(kMaxAlphabetSize) + "]");
  }
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    if (symbols_[i] != kPad && symbols_[i] >= alphabet_size_) {
      throw Error(ErrorCode::kInvalidArgument,
                  "symbol code " + std::to_string(symbols_[i]) + " at offset " +
                      std::to_string(i) + " is outside the alphabet");
    }
  }
}

Text Text::substr(std::size_t pos, std::size_t len) const {
  if (pos > symbols_.size()) {
    throw Error(ErrorCode::kOutOfRange, "substring start past end of text");
  }
  len = std::min(len, symbols_.size() - pos);
  return Text(std::vector<Symbol>(symbols_.begin() + static_cast<std::ptrdiff_t>(pos),
                                  symbols_.begin() + static_cast<std::ptrdiff_t>(pos + len)),
              alphabet_size_);
}

Text Text::padded_to(std::size_t length) const {
  if (length <= symbols_.size()) return *this;
  std::vector<Symbol> out = symbols_;
  out.resize(length, kPad);
  return Text(std::move(out), alphabet_size_);
}

std::uint64_t Text::checksum() const noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto mix = [&h](std::uint8_t byte) {
    h ^= byte;
    h *= 0x100000001b3ULL;
  };
  std::uint64_t n = symbols_.size();
  for (int i = 0; i < 8; ++i) mix(static_cast<std::uint8_t>(n >> (8 * i)));
  for (Symbol s : symbols_) mix(s);
  return h;
}

Alphabet::Alphabet(std::string chars) : chars_(std::move(chars)), code_of_(256, -1) {
  if (chars_.empty() || chars_.size() > kMaxAlphabetSize) {
    throw Error(ErrorCode::kInvalidArgument,
                "alphabet must have between 1 and " + std::to_string(kMaxAlphabetSize) +
                    " characters");
  }
  for (std::size_t k = 0; k < chars_.size(); ++k) {
    auto byte = static_cast<unsigned char>(chars_[k]);
    if (code_of_[byte] != -1) {
      throw Error(ErrorCode::kInvalidArgument,
                  std::string("duplicate alphabet character '") + chars_[k] + "'");
    }
    code_of_[byte] = static_cast<int>(k);
  }
}

Alphabet Alphabet::standard(unsigned size) {
  static const std::string kDna = "ACGT";
  static const std::string kWide =
      "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789";
  if (size == 0) throw Error(ErrorCode::kInvalidArgument, "alphabet size must be positive");
  if (size <= kDna.size()) return Alphabet(kDna.substr(0, size));
  if (size <= kWide.size()) return Alphabet(kWide.substr(0, size));
  throw Error(ErrorCode::kInvalidArgument,
              "standard alphabets stop at " + std::to_string(kWide.size()) + " symbols");
}

Alphabet Alphabet::detect(std::span<const std::string> samples) {
  std::array<bool, 256> seen{};
  for (const auto& s : samples) {
    for (char c : s) seen[static_cast<unsigned char>(c)] = true;
  }
  std::string chars;
  for (int b = 0; b < 256; ++b) {
    if (seen[static_cast<std::size_t>(b)]) chars.push_back(static_cast<char>(b));
  }
  if (chars.empty()) chars = "A";
  return Alphabet(std::move(chars));
}

Text Alphabet::encode(std::string_view bytes) const {
  std::vector<Symbol> out;
  out.reserve(bytes.size());
  for (std::size_t i = 0; i < bytes.size(); ++i) {
    int code = code_of_[static_cast<unsigned char>(bytes[i])];
    if (code < 0) {
      std::ostringstream msg;
      msg << "byte 0x" << std::hex << static_cast<int>(static_cast<unsigned char>(bytes[i]))
          << std::dec << " at offset " << i << " is not in alphabet \"" << chars_ << "\"";
      throw Error(ErrorCode::kInvalidArgument, msg.str());
    }
    out.push_back(static_cast<Symbol>(code));
  }
  return Text(std::move(out), size());
}

char Alphabet::to_char(Symbol s) const {
  if (s >= chars_.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                "symbol code " + std::to_string(s) + " has no character in this alphabet");
  }
  return chars_[s];
}

std::string Alphabet::decode(SymbolView symbols) const {
  std::string out;
  out.reserve(symbols.size());
  for (Symbol s : symbols) out.push_back(to_char(s));
  return out;
}

std::vector<std::string> read_strings(const std::string& path, TextFormat format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open '" + path + "' for reading");
  std::string data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) throw Error(ErrorCode::kIo, "read error on '" + path + "'");

  auto strip_cr = [](std::string& s) {
    if (!s.empty() && s.back() == '\r') s.pop_back();
  };
  std::vector<std::string> out;
  if (format == TextFormat::kRaw) {
    if (!data.empty() && data.back() == '\n') {
      data.pop_back();
      strip_cr(data);
    }
    out.push_back(std::move(data));
    return out;
  }
  std::size_t start = 0;
  while (start < data.size()) {
    std::size_t end = data.find('\n', start);
    if (end == std::string::npos) end = data.size();
    std::string line = data.substr(start, end - start);
    strip_cr(line);
    out.push_back(std::move(line));
    start = end + 1;
  }
  return out;
}

void write_string(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIo, "cannot open '" + path + "' for writing");
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (contents.empty() || contents.back() != '\n') out.put('\n');
  if (!out) throw Error(ErrorCode::kIo, "write error on '" + path + "'");
}

}  // namespace pedit

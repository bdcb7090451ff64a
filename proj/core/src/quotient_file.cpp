// Copyright 2026 The badpairs Authors
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

#include "badpairs/quotient_file.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>

namespace badpairs {

QuotientFileError::QuotientFileError(std::size_t line, const std::string& what)
    : std::runtime_error("quotient file line " + std::to_string(line) + ": " +
                         what),
      line_(line) {}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

}  // namespace

bool QuotientReader::next(Integer& quotient) {
  if (!std::getline(in_, buffer_)) return false;
  const std::size_t line = count_ + 1;
  std::string_view text(buffer_);
  if (!text.empty() && text.back() == '\r') text.remove_suffix(1);
  const auto tab = text.find('\t');
  if (tab == std::string_view::npos) {
    throw QuotientFileError(line, "expected 'index<TAB>quotient'");
  }
  const std::string_view index_text = text.substr(0, tab);
  std::string_view value_text = text.substr(tab + 1);
  std::size_t index = 0;
  const auto [ptr, ec] = std::from_chars(
      index_text.data(), index_text.data() + index_text.size(), index);
  if (!all_digits(index_text) || ec != std::errc() ||
      ptr != index_text.data() + index_text.size()) {
    throw QuotientFileError(line, "malformed index '" +
                                      std::string(index_text) + "'");
  }
  if (index != count_) {
    throw QuotientFileError(line, "expected index " + std::to_string(count_) +
                                      ", found " + std::to_string(index));
  }
  const std::string_view digits =
      !value_text.empty() && value_text.front() == '-' ? value_text.substr(1)
                                                       : value_text;
  if (!all_digits(digits) ||
      quotient.set_str(std::string(value_text), 10) != 0) {
    throw QuotientFileError(line, "malformed quotient '" +
                                      std::string(value_text) + "'");
  }
  ++count_;
  return true;
}

std::vector<Integer> read_quotients(std::istream& in) {
  std::vector<Integer> out;
  QuotientReader reader(in);
  Integer a;
  while (reader.next(a)) out.push_back(a);
  return out;
}

std::vector<Integer> read_quotients(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return read_quotients(in);
}

std::string format_quotient(std::size_t index, const Integer& quotient) {
  return std::to_string(index) + "\t" + quotient.get_str() + "\n";
}

void write_quotients(std::ostream& out, std::span<const Integer> quotients,
                     std::size_t first_index) {
  for (std::size_t i = 0; i < quotients.size(); ++i) {
    out << format_quotient(first_index + i, quotients[i]);
  }
}

}  // namespace badpairs

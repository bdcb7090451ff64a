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

// Plain-text partial-quotient files: one "index<TAB>quotient" record per
// line, decimal, indices starting at 0 and increasing by one.

#ifndef BADPAIRS_QUOTIENT_FILE_HPP_
#define BADPAIRS_QUOTIENT_FILE_HPP_

#include <filesystem>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "badpairs/dyadic.hpp"

namespace badpairs {

class QuotientFileError : public std::runtime_error {
 public:
  QuotientFileError(std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class QuotientReader {
 public:
  explicit QuotientReader(std::istream& in) : in_(in) {}

  // Reads the next record. Returns false at end of input.
  bool next(Integer& quotient);

  std::size_t count() const { return count_; }

 private:
  std::istream& in_;
  std::string buffer_;
  std::size_t count_ = 0;
};

std::vector<Integer> read_quotients(std::istream& in);
std::vector<Integer> read_quotients(const std::filesystem::path& path);

std::string format_quotient(std::size_t index, const Integer& quotient);
void write_quotients(std::ostream& out, std::span<const Integer> quotients,
                     std::size_t first_index = 0);

}  // namespace badpairs

#endif  // BADPAIRS_QUOTIENT_FILE_HPP_

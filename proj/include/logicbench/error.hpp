// Copyright 2026 The logicbench Authors
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

#ifndef LOGICBENCH_ERROR_HPP_
#define LOGICBENCH_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace logicbench {

// Mirrors lb_status in the C API; values must stay in sync.
enum class ErrorCode : int {
  kInvalidArgument = 1,
  kSyntax = 2,
  kIo = 3,
  kSchema = 4,
  kOracleCap = 5,
  kBankExhausted = 6,
  kInternal = 7,
  kNetwork = 8,
  kVerification = 9,
  kShapeMismatch = 10,
  kConfig = 11,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t offset, const std::string& what)
      : Error(ErrorCode::kSyntax,
              "syntax error at offset " + std::to_string(offset) + ": " + what),
        offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

class OracleCapError : public Error {
 public:
  OracleCapError(std::size_t atoms, std::size_t cap)
      : Error(ErrorCode::kOracleCap,
              "entailment oracle cap exceeded: " + std::to_string(atoms) +
                  " atoms (cap " + std::to_string(cap) + ")"),
        atoms_(atoms) {}
  std::size_t atom_count() const noexcept { return atoms_; }

 private:
  std::size_t atoms_;
};

}  // namespace logicbench

#endif  // LOGICBENCH_ERROR_HPP_

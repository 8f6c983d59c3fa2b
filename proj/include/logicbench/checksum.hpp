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

#ifndef LOGICBENCH_CHECKSUM_HPP_
#define LOGICBENCH_CHECKSUM_HPP_

#include <string>
#include <string_view>

namespace logicbench {

std::string sha256_hex(std::string_view data);

// Reads a whole file; throws Error(kIo).
std::string read_file(const std::string& path);

// Writes `data` to a sibling temporary file and renames it over `path`.
void write_file_atomic(const std::string& path, std::string_view data);

}  // namespace logicbench

#endif  // LOGICBENCH_CHECKSUM_HPP_

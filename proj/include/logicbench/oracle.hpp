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

#ifndef LOGICBENCH_ORACLE_HPP_
#define LOGICBENCH_ORACLE_HPP_

#include <cstddef>
#include <span>
#include <string_view>

#include "logicbench/formula.hpp"

namespace logicbench {

struct OracleOptions {
  // 2^20 assignments at most.
  std::size_t max_atoms = 20;
};

enum class Verdict { kEntailed, kContradicted, kIndependent };

std::string_view verdict_name(Verdict v);

// premises |= conclusion, decided by enumerating every assignment over the
// atoms of premises and conclusion. Throws OracleCapError above the cap.
bool entails(std::span<const Formula> premises, const Formula& conclusion,
             const OracleOptions& options = {});

// kEntailed iff premises |= statement, kContradicted iff premises |= ~statement,
// kIndependent otherwise. Inconsistent premises entail everything and yield
// kEntailed.
Verdict consistent_with(std::span<const Formula> premises, const Formula& statement,
                        const OracleOptions& options = {});

bool satisfiable(std::span<const Formula> formulas, const OracleOptions& options = {});

}  // namespace logicbench

#endif  // LOGICBENCH_ORACLE_HPP_

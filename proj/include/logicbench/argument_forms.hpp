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

#ifndef LOGICBENCH_ARGUMENT_FORMS_HPP_
#define LOGICBENCH_ARGUMENT_FORMS_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "logicbench/formula.hpp"
#include "logicbench/oracle.hpp"

namespace logicbench {

enum class ArgumentForm : std::uint8_t {
  kModusPonens,
  kModusTollens,
  kHypotheticalSyllogism,
  kDisjunctiveSyllogism,
  kReductioAdAbsurdum,
  kConstructiveDilemma,
  kDisjunctionElimination,
};

inline constexpr std::array<ArgumentForm, 7> kAllForms = {
    ArgumentForm::kModusPonens,           ArgumentForm::kModusTollens,
    ArgumentForm::kHypotheticalSyllogism, ArgumentForm::kDisjunctiveSyllogism,
    ArgumentForm::kReductioAdAbsurdum,    ArgumentForm::kConstructiveDilemma,
    ArgumentForm::kDisjunctionElimination,
};

// Snake-case identifier used in instance metadata, e.g. "modus_ponens".
std::string_view form_id(ArgumentForm form);
// Display name, e.g. "Modus Ponens".
std::string_view form_display_name(ArgumentForm form);
std::optional<ArgumentForm> form_from_id(std::string_view id);

// Premise and conclusion templates over metavariables p, q, r, s, which are
// atoms 15, 16, 17, 18 ("p".."s") inside the schema.
struct FormSchema {
  std::vector<Formula> premises;
  Formula conclusion;
};

const FormSchema& schema(ArgumentForm form);

enum class Shape { kAny, kNegation, kConditional, kDisjunction };

// The pattern a target conclusion must have for `form` to support it.
Shape conclusion_shape(ArgumentForm form);
bool shape_accepts(Shape shape, const Formula& target);

// Forms whose conclusion shape accepts `target`, in enum order.
std::vector<ArgumentForm> forms_concluding(const Formula& target);

// Hands out atoms that have never been returned before.
class AtomAllocator {
 public:
  explicit AtomAllocator(std::uint32_t first = 0) : next_(first) {}
  AtomId fresh() { return AtomId{next_++}; }
  std::uint32_t issued_until() const { return next_; }

 private:
  std::uint32_t next_;
};

struct InferenceStep {
  ArgumentForm form;
  std::vector<Formula> premises;
  Formula conclusion;
};

// Instantiates `form` so that its conclusion is exactly `target`. Metavariables
// not fixed by matching the conclusion become fresh atoms. Premise order
// follows the schema. Throws Error(kShapeMismatch) if `target` does not fit.
InferenceStep instantiate_for_conclusion(ArgumentForm form, const Formula& target,
                                         AtomAllocator& fresh);

// Syntactic match against the form's schema under one consistent
// substitution, plus the semantic oracle.
bool validate_step(const InferenceStep& step, const OracleOptions& options = {});

}  // namespace logicbench

#endif  // LOGICBENCH_ARGUMENT_FORMS_HPP_

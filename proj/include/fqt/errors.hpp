/*
 * Copyright 2026 The fqt authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstdint>
#include <stdexcept>

namespace fqt {

/// Default cap on exhaustive enumerations (number of objects visited per
/// call). Overridable per call; the CLI also honors the FQ_BUDGET
/// environment variable. CLI exit code 3.
inline constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 24;

/// An enumeration or factorization would exceed its resource cap.
class BudgetError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Two independent computation routes disagreed, or a construction failed
/// a postcondition that is guaranteed mathematically. Always a bug (or a
/// deliberate `--method both` mismatch probe). CLI exit code 4.
class CrossCheckError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

}  // namespace fqt

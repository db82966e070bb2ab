/*
   Copyright 2026 The rootless Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rootless {

/// Base class of every domain error raised by the library. The CLI maps
/// these to exit code 2 (operational error).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define ROOTLESS_DEFINE_ERROR(Name)       \
  class Name : public Error {             \
   public:                                \
    using Error::Error;                   \
  };

ROOTLESS_DEFINE_ERROR(SizeLimitExceeded)
ROOTLESS_DEFINE_ERROR(BudgetExceeded)
ROOTLESS_DEFINE_ERROR(RamifiedPrime)
ROOTLESS_DEFINE_ERROR(DenominatorClash)
ROOTLESS_DEFINE_ERROR(RamifiedQuery)
ROOTLESS_DEFINE_ERROR(NoCrtSolution)
ROOTLESS_DEFINE_ERROR(LocalReducible)
ROOTLESS_DEFINE_ERROR(LocalUndecided)
ROOTLESS_DEFINE_ERROR(NoAdmissibleFound)
ROOTLESS_DEFINE_ERROR(AllSameClass)
ROOTLESS_DEFINE_ERROR(SpecMismatch)
ROOTLESS_DEFINE_ERROR(NonRationalResult)
ROOTLESS_DEFINE_ERROR(SearchExhausted)
ROOTLESS_DEFINE_ERROR(UnsupportedConfig)
ROOTLESS_DEFINE_ERROR(InvalidInput)

#undef ROOTLESS_DEFINE_ERROR

/// Parse failure with the byte offset where it happened.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " at offset " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace rootless

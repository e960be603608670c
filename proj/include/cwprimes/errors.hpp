/* Copyright 2026 The cwprimes Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#ifndef CWPRIMES_ERRORS_HPP_
#define CWPRIMES_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace cwprimes {

// Base class for every error raised by the library.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define CWPRIMES_DEFINE_ERROR(Name)                              \
  struct Name : Error {                                          \
    explicit Name(const std::string& what = #Name) : Error(what) {} \
  }

CWPRIMES_DEFINE_ERROR(CompositeCharacteristic);
CWPRIMES_DEFINE_ERROR(ReducibleModulus);
CWPRIMES_DEFINE_ERROR(NotMonic);
CWPRIMES_DEFINE_ERROR(FieldMismatch);
CWPRIMES_DEFINE_ERROR(DivideByZero);
CWPRIMES_DEFINE_ERROR(DegreeTooSmall);
CWPRIMES_DEFINE_ERROR(NotInSubfield);
CWPRIMES_DEFINE_ERROR(ZeroInput);
CWPRIMES_DEFINE_ERROR(NotPrime);
CWPRIMES_DEFINE_ERROR(NotFixed);
CWPRIMES_DEFINE_ERROR(InvalidBeta);
CWPRIMES_DEFINE_ERROR(InvalidK);
CWPRIMES_DEFINE_ERROR(NotPrimeInExtension);
CWPRIMES_DEFINE_ERROR(TheoremViolation);
CWPRIMES_DEFINE_ERROR(CriterionMismatch);
CWPRIMES_DEFINE_ERROR(ResourceBudget);
CWPRIMES_DEFINE_ERROR(ParseError);

#undef CWPRIMES_DEFINE_ERROR

}  // namespace cwprimes

#endif  // CWPRIMES_ERRORS_HPP_

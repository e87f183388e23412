/*
 * Copyright 2026 The qeslab Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <stdexcept>
#include <string>

namespace qeslab {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define QESLAB_DEFINE_ERROR(Name)        \
  class Name : public Error {            \
   public:                               \
    using Error::Error;                  \
  }

// algebra
QESLAB_DEFINE_ERROR(NonRationalPower);
QESLAB_DEFINE_ERROR(MixedRadicand);
QESLAB_DEFINE_ERROR(ParseError);
// sl2rep
QESLAB_DEFINE_ERROR(DegreeOverflow);
// qes
QESLAB_DEFINE_ERROR(ExponentialCase);
QESLAB_DEFINE_ERROR(NonMonomial);
QESLAB_DEFINE_ERROR(BranchAmbiguity);
QESLAB_DEFINE_ERROR(ConvergenceFailure);
QESLAB_DEFINE_ERROR(DomainError);
QESLAB_DEFINE_ERROR(ScaleMismatch);
QESLAB_DEFINE_ERROR(UnsupportedFamily);
// duality
QESLAB_DEFINE_ERROR(SingularExponent);
QESLAB_DEFINE_ERROR(UnsupportedPair);
QESLAB_DEFINE_ERROR(MissingEnergy);
QESLAB_DEFINE_ERROR(GridTooCoarse);
// radial
QESLAB_DEFINE_ERROR(NotConfining);
QESLAB_DEFINE_ERROR(GridError);

#undef QESLAB_DEFINE_ERROR

}  // namespace qeslab

/*
   Copyright 2026 The ffdyn Authors

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

#ifndef FFDYN_ERRORS_HPP
#define FFDYN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ffdyn {

/// Bad arguments: wrong shapes, negative exponents, zero where nonzero is required.
class InvalidArgument : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// A mathematical hypothesis on (q, L, n) does not hold. The message names it.
class HypothesisViolation : public InvalidArgument {
   public:
    using InvalidArgument::InvalidArgument;
};

/// An enumeration would exceed its configured size cap.
class GuardExceeded : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Two independent computations disagreed.
class VerificationFailure : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

}  // namespace ffdyn

#endif

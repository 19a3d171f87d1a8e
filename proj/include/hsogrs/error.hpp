/*
   Copyright 2026 The hsogrs Authors

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

#ifndef HSOGRS_ERROR_HPP
#define HSOGRS_ERROR_HPP

#include <stdexcept>
#include <string>

namespace hsogrs {

/// A mathematical precondition does not hold (wrong parity, degree bound, divisibility, ...).
class ValidationError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// The requested computation exceeds a configured enumeration cap.
class CapExceededError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Serialized input could not be parsed or violates a structural invariant.
class MalformedInputError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Elements or polynomials from two different field contexts were combined.
class ContextMismatchError : public std::logic_error {
   public:
    using std::logic_error::logic_error;
};

/// A construction produced a result that contradicts its predicted zero count or self-orthogonality.
class VerificationError : public std::logic_error {
   public:
    using std::logic_error::logic_error;
};

}  // namespace hsogrs

#endif

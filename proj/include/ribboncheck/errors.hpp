/*
   Copyright 2026 The ribboncheck Authors

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

namespace ribboncheck {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Problems with user-supplied input: syntax, label consistency, ranges.
/// The CLI maps these to exit code 2.
class InputError : public Error {
   public:
    using Error::Error;
};

class ParseError : public InputError {
   public:
    ParseError(const std::string& what, std::size_t position)
        : InputError(what + " at position " + std::to_string(position)), position_(position) {}
    std::size_t position() const noexcept { return position_; }

   private:
    std::size_t position_;
};

/// A PD code whose labels do not pair up into consistent strands.
class ArcConsistencyError : public InputError {
   public:
    using InputError::InputError;
};

class GeneratorRangeError : public InputError {
   public:
    using InputError::InputError;
};

/// Operands living in Laurent rings with different variable counts.
class DimensionError : public Error {
   public:
    using Error::Error;
};

/// Mathematically meaningless request (division by zero, wrong operand kind).
class DomainError : public Error {
   public:
    using Error::Error;
};

class StructuralError : public Error {
   public:
    using Error::Error;
};

/// An internal consistency check failed during a computation.
class ComputationError : public Error {
   public:
    using Error::Error;
};

class UnsupportedError : public Error {
   public:
    using Error::Error;
};

}  // namespace ribboncheck

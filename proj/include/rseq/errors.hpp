/*
   Copyright 2026 The rseq Authors

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

#ifndef RSEQ_ERRORS_HPP
#define RSEQ_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rseq {

enum class ErrorCode {
    InvalidArgument = 1,
    Parse = 2,
    Io = 3,
    CapExceeded = 4,
    SpaceMismatch = 5,
    Overflow = 6,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

class InvalidArgument : public Error {
public:
    explicit InvalidArgument(const std::string& what) : Error(ErrorCode::InvalidArgument, what) {}
};

/// Malformed textual input. `line()` is 1-based, 0 when the input has no line structure.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line = 0)
        : Error(ErrorCode::Parse, line ? "line " + std::to_string(line) + ": " + what : what),
          line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

class IoError : public Error {
public:
    explicit IoError(const std::string& what) : Error(ErrorCode::Io, what) {}
};

/// A bounded search ran out of room (prime cap, cell budget, ...).
class CapExceeded : public Error {
public:
    explicit CapExceeded(const std::string& what) : Error(ErrorCode::CapExceeded, what) {}
};

class SpaceMismatch : public Error {
public:
    explicit SpaceMismatch(const std::string& what) : Error(ErrorCode::SpaceMismatch, what) {}
};

class OverflowError : public Error {
public:
    explicit OverflowError(const std::string& what) : Error(ErrorCode::Overflow, what) {}
};

}  // namespace rseq

#endif  // RSEQ_ERRORS_HPP

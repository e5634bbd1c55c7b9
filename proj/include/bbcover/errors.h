// Copyright 2026 The bbcover Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BBCOVER_ERRORS_H
#define BBCOVER_ERRORS_H

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bbcover {

/// A caller-side precondition was not met (shape mismatch, non-cover input,
/// search budget exceeded, ...). The CLI maps this to exit code 2.
class RefusalError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Text could not be parsed. `position` is the byte offset of the problem.
class ParseError : public RefusalError {
   public:
    ParseError(const std::string &message, std::size_t position)
        : RefusalError(message + " (at byte " + std::to_string(position) + ")"), detail_(message), position_(position) {
    }
    std::size_t position() const {
        return position_;
    }
    /// The message without the position suffix.
    const std::string &detail() const {
        return detail_;
    }
    /// The same error with its position moved right by `offset` bytes.
    ParseError shifted(std::size_t offset) const {
        return ParseError(detail_, position_ + offset);
    }

   private:
    std::string detail_;
    std::size_t position_;
};

/// An identity that holds by construction failed to hold. Indicates a bug,
/// never bad input. The CLI maps this to exit code 3.
class InvariantError : public std::logic_error {
   public:
    using std::logic_error::logic_error;
};

}  // namespace bbcover

#endif

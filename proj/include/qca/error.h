// Copyright 2026 The qca Authors
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

#ifndef QCA_ERROR_H
#define QCA_ERROR_H

#include <stdexcept>
#include <string>

namespace qca {

enum class ErrorKind {
    DimensionMismatch,
    NontrivialCenter,
    DegenerateSample,
    NumericalFailure,
    NotCommuting,
    NotGenerating,
    IndivisibleWidth,
    InvalidRule,
    WindowTooSmall,
    PreconditionViolated,
    NotLocal,
    IsoSolveFailed,
    NotSeparable,
    ReconstructionMismatch,
    UnsupportedWindow,
    ParseError,
};

const char *error_kind_name(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above so that
/// callers (the CLI in particular) can map it to a report without string matching.
class QcaError : public std::runtime_error {
   public:
    QcaError(ErrorKind kind, const std::string &message)
        : std::runtime_error(message), kind_(kind) {
    }
    ErrorKind kind() const {
        return kind_;
    }

   private:
    ErrorKind kind_;
};

}  // namespace qca

#endif

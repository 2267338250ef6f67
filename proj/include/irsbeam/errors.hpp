// irs-beamsim -- environment-aware beam selection for IRS-aided downlink
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace irsbeam {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Two points that must be distinct coincide (zero-length segment, UE on the IRS, ...).
struct DegenerateGeometry : Error {
    using Error::Error;
};

/// Malformed text input. Carries the 1-based line number when known.
struct ParseError : Error {
    ParseError(std::size_t line_no, const std::string& what_arg)
        : Error("line " + std::to_string(line_no) + ": " + what_arg), line(line_no) {}
    explicit ParseError(const std::string& what_arg) : Error(what_arg), line(0) {}
    std::size_t line;
};

/// A parsed value is outside its physical range (power, angle, delay).
struct UnitError : Error {
    using Error::Error;
};

struct DimensionMismatch : Error {
    using Error::Error;
};

struct IndexOutOfRange : Error {
    using Error::Error;
};

/// Codebook passed to an FFT-structured search is not the expected DFT codebook.
struct UnsupportedCodebook : Error {
    using Error::Error;
};

struct EmptyCandidateSet : Error {
    using Error::Error;
};

/// KNN query with K larger than the database.
struct KTooLarge : Error {
    using Error::Error;
};

/// A persisted file carries an unknown magic/version tag.
struct FormatVersionMismatch : Error {
    using Error::Error;
};

/// A beam-index map was built for different codebook geometry than the scenario's.
struct FingerprintMismatch : Error {
    using Error::Error;
};

/// Training symbols exceed the coherence block length.
struct OverheadExceedsBlock : Error {
    using Error::Error;
};

/// Invalid scenario configuration. Message starts with the offending field path.
struct ConfigError : Error {
    using Error::Error;
};

struct IoError : Error {
    using Error::Error;
};

}  // namespace irsbeam

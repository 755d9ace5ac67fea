#pragma once

#include <stdexcept>
#include <string>

namespace ainf {

/// Mismatched fields/rings/spaces/truncations, malformed construction data.
struct structural_error : std::runtime_error {
    explicit structural_error(const std::string& what) : std::runtime_error(what) {}
};

/// A stated operation precondition does not hold (degree, ideal membership, polarization).
struct precondition_error : std::runtime_error {
    explicit precondition_error(const std::string& what) : std::runtime_error(what) {}
};

/// An internal invariant failed downstream of valid inputs (e.g. image ⊄ kernel).
struct consistency_error : std::runtime_error {
    explicit consistency_error(const std::string& what) : std::runtime_error(what) {}
};

/// Fixture / expression parsing failure.
struct parse_error : std::runtime_error {
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace ainf

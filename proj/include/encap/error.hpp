#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace encap {

/// Input failed validation (bad flags, broken invariants, malformed files).
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// s_max == s_min: every configuration has the same P.S.C., so c_e and c_i are 0/0.
class NoConfigurationFreedom : public std::domain_error {
public:
    NoConfigurationFreedom() : std::domain_error("no configuration freedom") {}
};

/// A manifest row could not be parsed. Row numbers count the header as row 1.
class ManifestError : public InvalidInput {
public:
    ManifestError(std::size_t row, std::string field, const std::string& what)
        : InvalidInput(what), row_(row), field_(std::move(field)) {}

    std::size_t row() const noexcept { return row_; }
    const std::string& field() const noexcept { return field_; }

private:
    std::size_t row_;
    std::string field_;
};

/// The source tree could not be scanned at all (individual bad files are skipped instead).
class ScanError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace encap

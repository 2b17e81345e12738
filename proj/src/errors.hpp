#pragma once
/**
 * @file errors.hpp
 * @brief Exception types and the shared validation-report structure.
 *
 * Two failure modes are distinguished throughout the library:
 *  - parse_error: malformed input (JSON shape, CLI usage, bad tables);
 *  - validation_error: well-formed data that violates a mathematical
 *    invariant (non-associative table, broken cocycle identity, ...).
 *
 * Validators that are expected to report *all* violations (rather than
 * throwing on the first) return a ValidationReport whose entries carry a
 * witness for each broken law.
 */

#include <stdexcept>
#include <string>
#include <vector>

namespace twochar {

class parse_error : public std::runtime_error {
public:
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

class validation_error : public std::runtime_error {
public:
    explicit validation_error(const std::string& what) : std::runtime_error(what) {}
};

/// Accumulates human-readable violation witnesses.
struct ValidationReport {
    std::vector<std::string> problems;

    bool ok() const { return problems.empty(); }
    void fail(const std::string& witness) { problems.push_back(witness); }

    /// Convenience: throw validation_error if any problem was recorded.
    void require(const std::string& context) const;
};

} // namespace twochar

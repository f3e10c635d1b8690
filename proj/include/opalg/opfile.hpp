#pragma once

#include "opalg/operator.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace opalg {

class OpFileError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operator interchange format: a JSON object
///   {"kind": "finite" | "cofinite", "block": [["1", "0"], ["1/2", "-2i"]]}
/// with a nonempty square block of scalar strings in the entry grammar.
/// Scalars travel as exact strings, never as floats, so round-trips are
/// bit-exact.
Operator operator_from_json(const nlohmann::json& j);
nlohmann::json operator_to_json(const Operator& op);

/// Reads and validates an operator file; throws OpFileError with a
/// diagnostic naming the file on any parse or I/O problem.
Operator read_operator_file(const std::string& path);

nlohmann::json subspace_to_json(const Subspace& s);

}  // namespace opalg

#include "opalg/opfile.hpp"

#include <fstream>
#include <utility>

namespace opalg {

namespace {

nlohmann::json matrix_to_json(const Matrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) {
            row.push_back(format_scalar(m.at(r, c)));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

Operator operator_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("kind") || !j.contains("block")) {
        throw OpFileError("operator object must have \"kind\" and \"block\" fields");
    }
    const nlohmann::json& kind = j.at("kind");
    if (!kind.is_string() || (kind != "finite" && kind != "cofinite")) {
        throw OpFileError("\"kind\" must be \"finite\" or \"cofinite\"");
    }
    const nlohmann::json& block_json = j.at("block");
    if (!block_json.is_array() || block_json.empty()) {
        throw OpFileError("\"block\" must be a nonempty array of rows");
    }
    std::size_t n = block_json.size();
    Matrix block(n, n);
    for (std::size_t r = 0; r < n; ++r) {
        const nlohmann::json& row = block_json.at(r);
        if (!row.is_array() || row.size() != n) {
            throw OpFileError("\"block\" must be square (row " + std::to_string(r + 1) +
                              " has the wrong length)");
        }
        for (std::size_t c = 0; c < n; ++c) {
            const nlohmann::json& cell = row.at(c);
            if (!cell.is_string()) {
                throw OpFileError("block entries must be scalar strings (row " +
                                  std::to_string(r + 1) + ", column " + std::to_string(c + 1) + ")");
            }
            try {
                block.at(r, c) = parse_scalar(cell.get<std::string>());
            } catch (const ScalarParseError& e) {
                throw OpFileError("bad scalar at row " + std::to_string(r + 1) + ", column " +
                                  std::to_string(c + 1) + ": " + e.what());
            }
        }
    }
    return kind == "finite" ? Operator::finite(std::move(block))
                            : Operator::cofinite(std::move(block));
}

nlohmann::json operator_to_json(const Operator& op) {
    // A fully absorbed cofinite block (the identity) is written as [["1"]]
    // to satisfy the nonempty-block schema; it reads back identically.
    Matrix block = op.dim() == 0 ? Matrix::identity(1) : op.block();
    return {
        {"kind", carrier_name(op.carrier())},
        {"block", matrix_to_json(block)},
    };
}

Operator read_operator_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw OpFileError(path + ": cannot open file");
    }
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw OpFileError(path + ": invalid JSON: " + e.what());
    }
    try {
        return operator_from_json(j);
    } catch (const OpFileError& e) {
        throw OpFileError(path + ": " + e.what());
    }
}

nlohmann::json subspace_to_json(const Subspace& s) {
    return {
        {"carrier", carrier_name(s.carrier())},
        {"window", s.ambient_dim()},
        {"includes_tail", s.includes_tail()},
        {"basis", matrix_to_json(s.basis())},
        {"dim_finite", s.dim_finite()},
        {"description", s.describe()},
    };
}

}  // namespace opalg

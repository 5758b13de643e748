#pragma once

#include "hairy/decompose.hpp"

#include <json.hpp>

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace hairy {

/// One cell of an expected table.
struct ExpectedCell {
    enum class Kind { zero, unknown, known };

    std::string caption;
    FunctorSpec spec;
    int degree = 0;
    Kind kind = Kind::zero;
    std::vector<std::pair<Partition, std::uint64_t>> entries;
    std::string note;
};

/// Parses "0", "?" or a sum such as "2[3,1,1] + [2,2,1]".
/// Throws std::invalid_argument on malformed text.
ExpectedCell::Kind parse_cell(const std::string& text, std::vector<std::pair<Partition, std::uint64_t>>& entries);

/// Reads the expected-tables file. Throws std::runtime_error when the file is
/// missing or malformed.
std::vector<ExpectedCell> load_expected_tables(const std::string& path);

nlohmann::ordered_json decomposition_json(const Decomposition& dec);
nlohmann::ordered_json bounds_json(const Decomposition& dec, const BoundsReport& report);

/// Entry point of the command-line tool. Returns the process exit code:
/// 0 success, 1 mismatch or bound violation, 2 usage or IO error,
/// 3 internal consistency failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hairy

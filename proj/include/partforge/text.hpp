#ifndef PARTFORGE_TEXT_HPP
#define PARTFORGE_TEXT_HPP

#include "partforge/core.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

// Text grammar shared by the library and the CLI:
//
//   part      := INT ("_" INT)?
//   partition := part ("," part)* | ""
//   tuple     := partition ("|" partition)*
//
// Whitespace is ignored and "ε" is accepted for the empty partition.

namespace partforge {

class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Throws ParseError.  When max_color is given, colors above it are rejected.
ColoredSequence parse_partition(std::string_view text,
                                std::optional<std::uint32_t> max_color = std::nullopt);
/// Each segment must be a strictly decreasing list of uncolored parts.
MultiTuple parse_tuple(std::string_view text);
std::vector<int> parse_int_list(std::string_view text);

std::string format_part(const ColoredPart& part);
std::string format_partition(const ColoredSequence& parts);
std::string format_distinct(const DistinctPartition& parts);
std::string format_tuple(const MultiTuple& tuple);
std::string format_int_list(const std::vector<int>& values);

/// "(a_b,c_d)" or "ε" when empty.
std::string parenthesized(const ColoredSequence& parts);

nlohmann::json to_json(const ColoredSequence& parts);
nlohmann::json to_json(const MultiTuple& tuple);
ColoredSequence partition_from_json(const nlohmann::json& j);

} // namespace partforge

#endif

#include "partforge/text.hpp"

#include <charconv>
#include <limits>

namespace partforge {

namespace {

constexpr std::string_view epsilon = "\xCE\xB5"; // U+03B5

std::string strip(std::string_view text)
{
    std::string out;
    out.reserve(text.size());
    for (char ch : text)
        if (ch != ' ' && ch != '\t' && ch != '\n' && ch != '\r')
            out.push_back(ch);
    if (out == epsilon)
        out.clear();
    return out;
}

std::vector<std::string_view> split(std::string_view text, char sep)
{
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = text.find(sep, start);
        if (pos == std::string_view::npos) {
            out.push_back(text.substr(start));
            return out;
        }
        out.push_back(text.substr(start, pos - start));
        start = pos + 1;
    }
}

long long parse_int(std::string_view token, std::string_view whole)
{
    long long value = 0;
    const auto* first = token.data();
    const auto* last = token.data() + token.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (token.empty() || ec != std::errc{} || ptr != last)
        throw ParseError("malformed integer '" + std::string(token) + "' in '" + std::string(whole) + "'");
    return value;
}

} // namespace

ColoredSequence parse_partition(std::string_view text, std::optional<std::uint32_t> max_color)
{
    const std::string s = strip(text);
    ColoredSequence out;
    if (s.empty())
        return out;
    for (auto token : split(s, ',')) {
        const auto us = token.find('_');
        const auto size = parse_int(token.substr(0, us), s);
        if (size < 1 || size > std::numeric_limits<int>::max())
            throw ParseError("part size must be a positive integer in '" + s + "'");
        ColoredPart part{static_cast<int>(size), Color::uncolored()};
        if (us != std::string_view::npos) {
            const auto color = parse_int(token.substr(us + 1), s);
            if (color < 1 || color > std::numeric_limits<std::uint32_t>::max())
                throw ParseError("color must be >= 1 in '" + s + "'");
            if (max_color && static_cast<std::uint32_t>(color) > *max_color)
                throw ParseError("color " + std::to_string(color) + " out of range (max "
                                 + std::to_string(*max_color) + ")");
            part.color = Color{static_cast<std::uint32_t>(color)};
        }
        out.push_back(part);
    }
    return out;
}

MultiTuple parse_tuple(std::string_view text)
{
    MultiTuple t;
    for (auto segment : split(text, '|')) {
        DistinctPartition mu;
        for (const auto& p : parse_partition(segment)) {
            if (p.color.is_colored())
                throw ParseError("tuple entries are uncolored: '" + std::string(segment) + "'");
            mu.push_back(p.size);
        }
        if (!is_distinct_partition(mu))
            throw ParseError("tuple entry is not strictly decreasing: '" + std::string(segment) + "'");
        t.mus.push_back(std::move(mu));
    }
    return t;
}

std::vector<int> parse_int_list(std::string_view text)
{
    const std::string s = strip(text);
    std::vector<int> out;
    if (s.empty())
        return out;
    for (auto token : split(s, ',')) {
        const auto v = parse_int(token, s);
        if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max())
            throw ParseError("integer out of range in '" + s + "'");
        out.push_back(static_cast<int>(v));
    }
    return out;
}

std::string format_part(const ColoredPart& part)
{
    if (!part.color.is_colored())
        return std::to_string(part.size);
    return std::to_string(part.size) + "_" + std::to_string(part.color.value());
}

std::string format_partition(const ColoredSequence& parts)
{
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i)
            out += ',';
        out += format_part(parts[i]);
    }
    return out;
}

std::string format_int_list(const std::vector<int>& values)
{
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(values[i]);
    }
    return out;
}

std::string format_distinct(const DistinctPartition& parts)
{
    return format_int_list(parts);
}

std::string format_tuple(const MultiTuple& tuple)
{
    std::string out;
    for (std::size_t r = 0; r < tuple.mus.size(); ++r) {
        if (r)
            out += '|';
        out += format_distinct(tuple.mus[r]);
    }
    return out;
}

std::string parenthesized(const ColoredSequence& parts)
{
    if (parts.empty())
        return std::string(epsilon);
    return "(" + format_partition(parts) + ")";
}

nlohmann::json to_json(const ColoredSequence& parts)
{
    auto arr = nlohmann::json::array();
    for (const auto& p : parts) {
        nlohmann::json jp;
        jp["size"] = p.size;
        if (p.color.is_colored())
            jp["color"] = p.color.value();
        else
            jp["color"] = nullptr;
        arr.push_back(std::move(jp));
    }
    return nlohmann::json{{"parts", std::move(arr)}};
}

nlohmann::json to_json(const MultiTuple& tuple)
{
    auto arr = nlohmann::json::array();
    for (const auto& mu : tuple.mus)
        arr.push_back(mu);
    return nlohmann::json{{"mus", std::move(arr)}};
}

ColoredSequence partition_from_json(const nlohmann::json& j)
{
    ColoredSequence out;
    try {
        for (const auto& jp : j.at("parts")) {
            ColoredPart p;
            p.size = jp.at("size").get<int>();
            if (p.size < 1)
                throw ParseError("part size must be positive");
            const auto& c = jp.at("color");
            if (!c.is_null()) {
                const auto v = c.get<long long>();
                if (v < 1)
                    throw ParseError("color must be >= 1");
                p.color = Color{static_cast<std::uint32_t>(v)};
            }
            out.push_back(p);
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed partition JSON: ") + e.what());
    }
    return out;
}

} // namespace partforge

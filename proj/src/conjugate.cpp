#include "partforge/conjugate.hpp"

#include "partforge/bijection.hpp"

#include <algorithm>
#include <sstream>

namespace partforge {

SubscriptedDiagram to_diagram(const ColoredSequence& b)
{
    SubscriptedDiagram d;
    for (const auto& part : b) {
        if (part.size < 1)
            throw std::invalid_argument("diagram rows need positive sizes");
        if (!part.color.is_colored() || omega(part.color) > part.size)
            throw std::invalid_argument("row too short for its color");
        std::vector<int> row(static_cast<std::size_t>(part.size), 0);
        int box = part.size - 1;
        for (int r = 1; r <= 31; ++r)
            if (part.color.uses(r))
                row[static_cast<std::size_t>(box--)] = r;
        d.rows.push_back(std::move(row));
    }
    return d;
}

std::string render_diagram(const SubscriptedDiagram& d)
{
    std::size_t width = 2;
    for (const auto& row : d.rows)
        for (int s : row)
            if (s)
                width = std::max(width, std::to_string(s).size() + 2);
    std::ostringstream out;
    for (const auto& row : d.rows) {
        std::string line;
        for (std::size_t b = 0; b < row.size(); ++b) {
            std::string cell = row[b] ? "[" + std::to_string(row[b]) + "]" : "[]";
            if (b + 1 < row.size())
                cell.resize(width + 1, ' ');
            line += cell;
        }
        out << line << '\n';
    }
    return out.str();
}

ColoredSequence conjugate(const ColoredSequence& b, int n)
{
    if (auto bad = check_B(b, n))
        throw RejectedInput("input: " + bad->detail, *bad);
    const auto d = to_diagram(b);
    ColoredSequence out;
    const int cols = d.columns();
    for (int col = 0; col < cols; ++col) {
        int height = 0;
        while (height < static_cast<int>(d.rows.size())
               && static_cast<int>(d.rows[static_cast<std::size_t>(height)].size()) > col)
            ++height;
        const int sub = d.rows[static_cast<std::size_t>(height - 1)][static_cast<std::size_t>(col)];
        out.push_back({height, sub ? Color{static_cast<std::uint32_t>(sub)} : Color::uncolored()});
    }
    return out;
}

ColoredSequence conjugate_inverse(const ColoredSequence& c, int n)
{
    if (auto bad = check_C(c, n))
        throw RejectedInput("input: " + bad->detail, *bad);
    ColoredSequence out;
    const int rows = c.empty() ? 0 : c.front().size;
    for (int i = 1; i <= rows; ++i) {
        int length = 0;
        std::uint32_t color = 0;
        for (const auto& col : c) {
            if (col.size >= i)
                ++length;
            if (col.size == i && col.color.is_colored())
                color |= std::uint32_t{1} << (col.color.value() - 1);
        }
        out.push_back({length, Color{color}});
    }
    if (auto bad = check_B(out, n))
        throw RejectedInput("not the conjugate of a difference-condition partition: " + bad->detail, *bad);
    if (conjugate(out, n) != c)
        throw RejectedInput("columns out of order", Violation{0, "order", "column colors do not rebuild the input"});
    return out;
}

} // namespace partforge

#ifndef PARTFORGE_CONJUGATE_HPP
#define PARTFORGE_CONJUGATE_HPP

#include "partforge/core.hpp"

#include <string>
#include <vector>

namespace partforge {

/// Ferrers diagram whose boxes may carry a ground-color subscript.
struct SubscriptedDiagram {
    /// rows[i][b] is the subscript of box b (0-based) of row i, 0 for none.
    std::vector<std::vector<int>> rows;

    int columns() const { return rows.empty() ? 0 : static_cast<int>(rows.front().size()); }
};

/// A row of color 2^{j_1}+...+2^{j_k} (j_1 < ... < j_k) gets subscripts
/// j_1+1, ..., j_k+1 on its last k boxes, read from the right.
SubscriptedDiagram to_diagram(const ColoredSequence& b);

/// Boxes as "[]" or "[r]", one line per row, padded to a common cell width.
std::string render_diagram(const SubscriptedDiagram& d);

/// Reads columns left to right; a column is colored by its bottom box.
ColoredSequence conjugate(const ColoredSequence& b, int n);
ColoredSequence conjugate_inverse(const ColoredSequence& c, int n);

} // namespace partforge

#endif

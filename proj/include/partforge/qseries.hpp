#ifndef PARTFORGE_QSERIES_HPP
#define PARTFORGE_QSERIES_HPP

#include "partforge/report.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace partforge {

/// Truncated series in y_1..y_n and q with exact unsigned coefficients.
/// Exponents of every y_r are capped at the largest k with k(k+1)/2 <= max_m,
/// which no product below can exceed within the truncation.
class Series {
public:
    Series(int n, int max_m);

    int n() const { return n_; }
    int max_m() const { return max_m_; }
    int x_cap() const { return cap_; }

    std::uint64_t coeff(const std::vector<int>& x, int m) const;
    /// Nonzero coefficients at weight m, keyed by x.
    CountTable at(int m) const;

    void set(const std::vector<int>& x, int m, std::uint64_t value);
    /// Multiplies in place by (1 + y_r q^e), r 1-based.
    void times_binomial(int r, int e);

private:
    std::size_t index(const std::vector<int>& x, int m) const;

    int n_;
    int max_m_;
    int cap_;
    std::vector<std::size_t> stride_;
    std::vector<std::uint64_t> c_;
};

/// prod_k (1+y_1 q^k)...(1+y_n q^k)
Series product_plain(int n, int max_m);
/// y_1 factors become (1 + y_1 q^{(k-1)M+R}).
Series product_RM(int n, int R, int M, int max_m);
/// y_1 part replaced by sum_k y_1^k q^{M k(k-1)/2 + k} / (q;q)_k.
Series product_gap(int n, int M, int max_m);

enum class DilationMode {
    pos, ///< q -> q^N, y_j -> q^{a_j - N}
    neg, ///< q -> q^N, y_j -> q^{-a_j}
};

/// Coefficients after a dilation substitution, still graded by x.
struct DilatedSeries {
    int max_m = 0;
    std::map<std::vector<int>, std::vector<std::uint64_t>> by_x;

    std::uint64_t coeff(const std::vector<int>& x, int m) const;
    CountTable at(int m) const;
    std::uint64_t total(int m) const;
};

/// The result is exact up to s.max_m() because no monomial shrinks in
/// weight.  In neg mode every a_j must be below N.
DilatedSeries substitute_dilation(const Series& s, const std::vector<int>& a, int N, DilationMode mode);

} // namespace partforge

#endif

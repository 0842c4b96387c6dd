#include "partforge/qseries.hpp"

#include <stdexcept>

namespace partforge {

namespace {

int triangular_cap(int max_m)
{
    int k = 0;
    while ((k + 1) * (k + 2) / 2 <= max_m)
        ++k;
    return k;
}

void require(bool ok, const char* what)
{
    if (!ok)
        throw std::invalid_argument(what);
}

} // namespace

Series::Series(int n, int max_m) : n_(n), max_m_(max_m), cap_(triangular_cap(max_m))
{
    require(n >= 1 && n <= 16, "n must be in [1, 16]");
    require(max_m >= 0, "max_m must be >= 0");
    stride_.assign(static_cast<std::size_t>(n), 0);
    std::size_t stride = static_cast<std::size_t>(max_m) + 1;
    for (int r = n - 1; r >= 0; --r) {
        stride_[static_cast<std::size_t>(r)] = stride;
        stride *= static_cast<std::size_t>(cap_) + 1;
    }
    c_.assign(stride, 0);
}

std::size_t Series::index(const std::vector<int>& x, int m) const
{
    std::size_t i = static_cast<std::size_t>(m);
    for (int r = 0; r < n_; ++r)
        i += static_cast<std::size_t>(x[static_cast<std::size_t>(r)]) * stride_[static_cast<std::size_t>(r)];
    return i;
}

std::uint64_t Series::coeff(const std::vector<int>& x, int m) const
{
    require(static_cast<int>(x.size()) == n_, "x must have n entries");
    if (m < 0 || m > max_m_)
        throw std::out_of_range("weight beyond the truncation");
    for (int v : x) {
        if (v < 0)
            return 0;
        if (v > cap_)
            return 0;
    }
    return c_[index(x, m)];
}

void Series::set(const std::vector<int>& x, int m, std::uint64_t value)
{
    require(static_cast<int>(x.size()) == n_, "x must have n entries");
    require(m >= 0 && m <= max_m_, "weight beyond the truncation");
    for (int v : x)
        require(v >= 0 && v <= cap_, "x entry beyond the cap");
    c_[index(x, m)] = value;
}

CountTable Series::at(int m) const
{
    CountTable out;
    if (m < 0 || m > max_m_)
        return out;
    std::vector<int> x(static_cast<std::size_t>(n_), 0);
    const std::size_t span = static_cast<std::size_t>(max_m_) + 1;
    for (std::size_t base = 0; base < c_.size(); base += span) {
        std::size_t rest = base / span;
        for (int r = n_ - 1; r >= 0; --r) {
            x[static_cast<std::size_t>(r)] = static_cast<int>(rest % (static_cast<std::size_t>(cap_) + 1));
            rest /= static_cast<std::size_t>(cap_) + 1;
        }
        if (const auto v = c_[base + static_cast<std::size_t>(m)])
            out[x] = v;
    }
    return out;
}

void Series::times_binomial(int r, int e)
{
    require(r >= 1 && r <= n_, "variable index out of range");
    require(e >= 1, "exponent must be positive");
    if (e > max_m_)
        return;
    const std::size_t sr = stride_[static_cast<std::size_t>(r - 1)];
    const std::size_t span = static_cast<std::size_t>(max_m_) + 1;
    const std::size_t radix = static_cast<std::size_t>(cap_) + 1;
    const std::size_t shift = sr + static_cast<std::size_t>(e);
    // Descending order reads every source before it is updated.
    for (std::size_t t = c_.size(); t-- > 0;) {
        const auto m = t % span;
        const auto xr = (t / sr) % radix;
        if (xr == 0 || m < static_cast<std::size_t>(e))
            continue;
        c_[t] += c_[t - shift];
    }
}

Series product_plain(int n, int max_m)
{
    Series s(n, max_m);
    s.set(std::vector<int>(static_cast<std::size_t>(n), 0), 0, 1);
    for (int k = 1; k <= max_m; ++k)
        for (int r = 1; r <= n; ++r)
            s.times_binomial(r, k);
    return s;
}

Series product_RM(int n, int R, int M, int max_m)
{
    require(M >= 1, "M must be >= 1");
    require(R >= 1, "R must be >= 1");
    Series s(n, max_m);
    s.set(std::vector<int>(static_cast<std::size_t>(n), 0), 0, 1);
    for (int k = 1; (k - 1) * M + R <= max_m; ++k)
        s.times_binomial(1, (k - 1) * M + R);
    for (int k = 1; k <= max_m; ++k)
        for (int r = 2; r <= n; ++r)
            s.times_binomial(r, k);
    return s;
}

Series product_gap(int n, int M, int max_m)
{
    require(M >= 1, "M must be >= 1");
    Series s(n, max_m);
    // parts[k][w]: partitions of w into parts <= k.
    std::vector<std::uint64_t> parts(static_cast<std::size_t>(max_m) + 1, 0);
    parts[0] = 1;
    std::vector<int> x(static_cast<std::size_t>(n), 0);
    s.set(x, 0, 1);
    for (int k = 1;; ++k) {
        const long long base = static_cast<long long>(M) * k * (k - 1) / 2 + k;
        if (base > max_m)
            break;
        for (int w = k; w <= max_m; ++w)
            parts[static_cast<std::size_t>(w)] += parts[static_cast<std::size_t>(w - k)];
        x[0] = k;
        for (int m = static_cast<int>(base); m <= max_m; ++m)
            s.set(x, m, parts[static_cast<std::size_t>(m - base)]);
    }
    for (int k = 1; k <= max_m; ++k)
        for (int r = 2; r <= n; ++r)
            s.times_binomial(r, k);
    return s;
}

std::uint64_t DilatedSeries::coeff(const std::vector<int>& x, int m) const
{
    if (m < 0 || m > max_m)
        throw std::out_of_range("weight beyond the truncation");
    const auto it = by_x.find(x);
    return it == by_x.end() ? 0 : it->second[static_cast<std::size_t>(m)];
}

CountTable DilatedSeries::at(int m) const
{
    CountTable out;
    for (const auto& [x, row] : by_x)
        if (m >= 0 && m <= max_m && row[static_cast<std::size_t>(m)])
            out[x] = row[static_cast<std::size_t>(m)];
    return out;
}

std::uint64_t DilatedSeries::total(int m) const
{
    std::uint64_t t = 0;
    for (const auto& [x, c] : at(m))
        t += c;
    return t;
}

DilatedSeries substitute_dilation(const Series& s, const std::vector<int>& a, int N, DilationMode mode)
{
    require(static_cast<int>(a.size()) == s.n(), "one residue per variable");
    require(N >= 1, "N must be >= 1");
    for (int v : a) {
        require(v >= 1, "residues must be positive");
        if (mode == DilationMode::neg)
            require(v < N, "negative dilation needs every residue below N");
    }
    DilatedSeries out;
    out.max_m = s.max_m();
    for (int m = 0; m <= s.max_m(); ++m) {
        for (const auto& [x, c] : s.at(m)) {
            long long w = static_cast<long long>(N) * m;
            for (std::size_t r = 0; r < x.size(); ++r)
                w += static_cast<long long>(x[r]) * (mode == DilationMode::pos ? a[r] - N : -a[r]);
            if (w < 0 || w > s.max_m())
                continue;
            auto& row = out.by_x[x];
            if (row.empty())
                row.assign(static_cast<std::size_t>(s.max_m()) + 1, 0);
            row[static_cast<std::size_t>(w)] += c;
        }
    }
    return out;
}

} // namespace partforge

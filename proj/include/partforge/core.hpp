#ifndef PARTFORGE_CORE_HPP
#define PARTFORGE_CORE_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace partforge {

/// Color of a part.
///
/// In the difference-condition classes a color is a non-empty bitmask over
/// the ground colors 1..n: bit r-1 is set when the color uses ground color r,
/// so there are 2^n - 1 colors.  In the conjugate class a part carries a
/// single ground color, stored by its index r.  The value 0 marks an
/// uncolored part, which is only legal in the conjugate class.
class Color {
public:
    constexpr Color() = default;
    constexpr explicit Color(std::uint32_t value) : value_(value) {}

    static constexpr Color uncolored() { return Color{}; }

    constexpr std::uint32_t value() const { return value_; }
    constexpr bool is_colored() const { return value_ != 0; }
    constexpr bool is_odd() const { return (value_ & 1u) != 0; }
    constexpr bool uses(int ground) const { return ((value_ >> (ground - 1)) & 1u) != 0; }

    friend constexpr auto operator<=>(Color, Color) = default;

private:
    std::uint32_t value_ = 0;
};

/// Largest color value for n ground colors.
constexpr std::uint32_t max_color(int n) { return (std::uint32_t{1} << n) - 1; }

// Binary color statistics.  All of them reject the uncolored value.

/// Number of ground colors used (set bits).
int omega(Color c);
/// Set bits at exponent >= 1, i.e. the powers of two that are even numbers.
int omega_e(Color c);
/// Value of the lowest set bit.
std::uint32_t lowest_power(Color c);
/// Value of the highest set bit.
std::uint32_t highest_power(Color c);
/// 1 when every power in c is below every power in d, else 0.
int delta(Color c, Color d);

/// A permutation of the ground colors {1..n}, stored as images sigma(1..n).
class Permutation {
public:
    explicit Permutation(std::vector<int> images);

    static Permutation identity(int n);
    static Permutation reversal(int n);

    int size() const { return static_cast<int>(images_.size()); }
    int operator()(int r) const { return images_.at(static_cast<std::size_t>(r - 1)); }
    const std::vector<int>& images() const { return images_; }
    bool is_identity() const;

    Permutation inverse() const;
    /// Moves bit r-1 of c to bit sigma(r)-1.  Preserves omega.
    Color apply(Color c) const;

    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> images_;
};

inline Color sigma_color(const Permutation& sigma, Color c) { return sigma.apply(c); }

struct ColoredPart {
    int size = 0;
    Color color;

    friend constexpr bool operator==(const ColoredPart&, const ColoredPart&) = default;
};

/// Parts listed from largest to smallest.  Used both for validated
/// partitions and for the unsorted working lists of the bijection.
using ColoredSequence = std::vector<ColoredPart>;

/// Strictly decreasing list of positive integers.
using DistinctPartition = std::vector<int>;

/// The tuple side (mu_1, ..., mu_n) of the identities.
struct MultiTuple {
    std::vector<DistinctPartition> mus;

    int n() const { return static_cast<int>(mus.size()); }
    int weight() const;
    std::vector<int> x_vector() const;

    friend bool operator==(const MultiTuple&, const MultiTuple&) = default;
    friend auto operator<=>(const MultiTuple&, const MultiTuple&) = default;
};

int weight(const ColoredSequence& parts);
int weight(const DistinctPartition& parts);
bool is_distinct_partition(const DistinctPartition& parts);

/// x_r = number of parts whose color uses ground color r.
std::vector<int> bit_counts(const ColoredSequence& parts, int n);
/// x_r = number of parts of ground color r (conjugate class).
std::vector<int> ground_counts(const ColoredSequence& parts, int n);

/// First failing position (1-based) and the condition it breaks.
struct Violation {
    std::size_t index = 0;
    std::string condition;
    std::string detail;
};

/// Empty on success.
using CheckResult = std::optional<Violation>;

/// Difference-condition class, optionally with the permuted lower-interval
/// test delta(sigma^-1(c_i), sigma^-1(c_{i+1})).
CheckResult check_B(const ColoredSequence& parts, int n,
                    const std::optional<Permutation>& sigma = std::nullopt);

/// check_B plus the congruence conditions on odd-colored parts.
CheckResult check_B_RM(const ColoredSequence& parts, int n, int R, int M);

/// check_B plus the gap condition on odd-colored parts.
CheckResult check_B_M(const ColoredSequence& parts, int n, int M);

/// Conjugate class: colors are ground indices 1..n or uncolored.
CheckResult check_C(const ColoredSequence& parts, int n);

/// Rank used to order parts of equal size in the conjugate class:
/// uncolored ranks above every color.
std::uint32_t conjugate_rank(Color c);

} // namespace partforge

#endif

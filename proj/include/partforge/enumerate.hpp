#ifndef PARTFORGE_ENUMERATE_HPP
#define PARTFORGE_ENUMERATE_HPP

// Brute-force generators and counters for every partition class.  These
// never go through the bijection or the q-series code, so they serve as the
// ground truth the other modules are checked against.

#include "partforge/core.hpp"
#include "partforge/report.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace partforge {

using DistinctVisitor = std::function<void(const DistinctPartition&)>;
using SequenceVisitor = std::function<void(const ColoredSequence&)>;
using TupleVisitor = std::function<void(const MultiTuple&)>;

/// Strictly decreasing partitions of m into exactly k parts, consecutive
/// parts differing by at least min_gap, every part accepted by part_ok.
/// Emitted largest-first-part first.
void for_each_distinct(int m, int k, const DistinctVisitor& visit, int min_gap = 1,
                       const std::function<bool(int)>& part_ok = {});

std::vector<DistinctPartition> gen_distinct(int m, int k);

/// Which partition class a query is about.
enum class Family {
    A,    ///< n-tuples of distinct partitions
    A_RM, ///< mu_1 has distinct parts congruent to R mod M
    A_M,  ///< mu_1 has parts differing by at least M
    B,    ///< difference conditions, optionally permuted by sigma
    B_RM, ///< B plus the odd-part congruences
    B_M,  ///< B plus the odd-part gaps
    C,    ///< conjugate class
};

struct Variant {
    Family family = Family::A;
    std::optional<Permutation> sigma; // Family::B only
    int R = 1;
    int M = 1;

    static Variant a() { return {}; }
    static Variant a_rm(int R, int M) { return {Family::A_RM, std::nullopt, R, M}; }
    static Variant a_m(int M) { return {Family::A_M, std::nullopt, 1, M}; }
    static Variant b(std::optional<Permutation> sigma = std::nullopt) { return {Family::B, std::move(sigma), 1, 1}; }
    static Variant b_rm(int R, int M) { return {Family::B_RM, std::nullopt, R, M}; }
    static Variant b_m(int M) { return {Family::B_M, std::nullopt, 1, M}; }
    static Variant c() { return {Family::C, std::nullopt, 1, 1}; }

    bool is_tuple_side() const;
    /// Short label such as "A", "B[2,1]", "B_RM(1,2)".
    std::string label() const;
};

/// Parses "A", "B", "B_RM", "B_M", "C", "A_RM", "A_M" (case-insensitive).
Family parse_family(const std::string& name);

struct CountQuery {
    int n = 1;
    std::vector<int> x;
    int m = 0;
    Variant variant;

    void validate() const;
};

/// Every x-vector of length n with sum of x_r(x_r+1)/2 <= m.
std::vector<std::vector<int>> feasible_x_vectors(int n, int m);

/// Tuple-side classes.  Tuples are emitted grouped by the weight of each
/// component, smallest mu_1 weight first.
void for_each_tuple(const CountQuery& q, const TupleVisitor& visit);
/// Partition-side classes (B, B_RM, B_M, C).  Emission order is unspecified;
/// the collecting wrapper below sorts.
void for_each_partition(const CountQuery& q, const SequenceVisitor& visit);
/// Partition-side classes over every x-vector at once.
void for_each_partition_any_x(int n, int m, const Variant& variant, const SequenceVisitor& visit);

std::vector<MultiTuple> enum_A(const CountQuery& q);
/// Sorted lexicographically by (size desc, color desc) part sequence.
std::vector<ColoredSequence> enum_partitions(const CountQuery& q);

std::uint64_t count(const CountQuery& q);
CountTable counts_by_x(const Variant& variant, int n, int m);

/// Compares two classes count by count for every x and m <= m_max.
IdentityReport sweep_equal(const Variant& left, const Variant& right, int n, int m_max,
                           unsigned threads = 1);

/// Lexicographic (size desc, color desc) ordering of part sequences.
bool sequence_precedes(const ColoredSequence& a, const ColoredSequence& b);

// ---------------------------------------------------------------------------
// Generic chain search, shared with the specialization classes.

/// A class of partitions defined by per-part colors, a condition between
/// consecutive parts and a condition on the smallest part.
struct ChainRules {
    /// Ground colors tracked by the x budget.
    int n = 1;
    /// Colors a part of the given size may carry.
    std::function<void(int size, std::vector<Color>& out)> palette;
    /// Ground colors a part counts towards (bit r-1 for ground color r).
    std::function<std::uint32_t(const ColoredPart&)> usage;
    std::function<bool(const ColoredPart& larger, const ColoredPart& smaller)> adjacent_ok;
    std::function<bool(const ColoredPart& smallest)> smallest_ok;
    /// Lower bound on larger.size - smaller.size for consecutive parts.
    int min_step = 1;
};

/// Every partition of `weight` obeying the rules, optionally with a fixed
/// x-vector.  Partitions are emitted largest part first.
void for_each_chain(const ChainRules& rules, int weight, const std::optional<std::vector<int>>& x,
                    const SequenceVisitor& visit);

} // namespace partforge

#endif

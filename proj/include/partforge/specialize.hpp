#ifndef PARTFORGE_SPECIALIZE_HPP
#define PARTFORGE_SPECIALIZE_HPP

// Dilations of the colored classes onto residue classes mod N, and the
// classical identities they specialize to.

#include "partforge/core.hpp"
#include "partforge/enumerate.hpp"
#include "partforge/report.hpp"

#include <array>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace partforge {

/// Weakly decreasing positive integers.
using Partition = std::vector<int>;

/// a_1 < ... < a_n with every a_k above the sum of its predecessors, and a
/// modulus N >= a_1 + ... + a_n.  Colors index subset sums: alpha(c) adds
/// a_r for every ground color r used by c.
class AndrewsSet {
public:
    AndrewsSet(std::vector<int> a, int N);

    int n() const { return static_cast<int>(a_.size()); }
    int N() const { return N_; }
    int a(int r) const { return a_.at(static_cast<std::size_t>(r - 1)); }
    const std::vector<int>& values() const { return a_; }

    int alpha(Color c) const;
    /// Subset sums in increasing order (alpha of colors 1..2^n-1).
    std::vector<int> primes() const;
    /// Color whose subset sum is x, if x is one.
    std::optional<Color> color_of(long long x) const;
    /// Least positive residue of l modulo N, in [1, N].
    int beta(long long l) const;

    // Statistics on subset sums; x must be in primes().
    int omega_A(int x) const;
    int v_A(int x) const;
    int z_A(int x) const;
    int delta_A(int x, int y) const;
    /// Terms of x other than a_1.
    int omega_A1(int x) const;

    friend bool operator==(const AndrewsSet&, const AndrewsSet&) = default;

private:
    Color require_prime(long long x) const;

    std::vector<int> a_;
    int N_;
    std::vector<int> alpha_; // alpha_[c], c = 0..2^n-1
};

/// Random valid set with 1 <= n <= n_max; N exceeds the sum by a random slack.
AndrewsSet random_andrews_set(std::mt19937_64& rng, int n_max);

/// First (x, y) breaking N + v(y) > N delta(x,y) + x >= v(y), if any.
std::optional<std::pair<int, int>> key_inequality_check(const AndrewsSet& A);

// Part-level dilations.  Results are sorted decreasingly.

/// k in mu_j -> N(k-1) + a_j.
DistinctPartition dilate_pos(const MultiTuple& t, const AndrewsSet& A);
/// k in mu_j -> Nk - a_j.
DistinctPartition dilate_neg(const MultiTuple& t, const AndrewsSet& A);
/// lambda_i -> N(lambda_i - omega(c_i)) + alpha(c_i).
DistinctPartition dilate_pos_B(const ColoredSequence& b, const AndrewsSet& A);
/// lambda_i -> N lambda_i - alpha(c_i).
DistinctPartition dilate_neg_B(const ColoredSequence& b, const AndrewsSet& A);
/// Inverse of dilate_pos on residue-class partitions; throws if a part is
/// not congruent to some a_j.
MultiTuple undilate_pos(const DistinctPartition& parts, const AndrewsSet& A);
MultiTuple undilate_neg(const DistinctPartition& parts, const AndrewsSet& A);

enum class ResidueClass {
    D,         ///< distinct parts congruent to some a_r
    F,         ///< distinct parts congruent to some -a_r
    E,         ///< parts from A'_N with the sigma difference conditions
    E_andrews, ///< parts from A'_N with the v_A form of the conditions
    G,         ///< parts from -A'_N with the sigma difference conditions
    G_andrews, ///< parts from -A'_N with the v_A form
    D_RM,      ///< D, parts = a_1 mod N are (R-1)N + a_1 mod MN
    D_M,       ///< D, parts = a_1 mod N differ by at least MN
    E_RM,      ///< E (sigma = id) plus congruences on parts using a_1
    E_M,       ///< E (sigma = id) plus gaps between parts using a_1
};

struct ClassSpec {
    ResidueClass kind = ResidueClass::D;
    AndrewsSet A;
    std::optional<Permutation> sigma; // E and G only
    int R = 1;
    int M = 1;

    std::string label() const;
};

/// x_r: parts whose residue uses a_r (or -a_r for F and G).
std::vector<int> class_x(const DistinctPartition& parts, const ClassSpec& spec);
CheckResult check_class(const DistinctPartition& parts, const ClassSpec& spec);

void for_each_in_class(const ClassSpec& spec, int m, const std::function<void(const DistinctPartition&)>& visit);
std::vector<DistinctPartition> enum_class(const ClassSpec& spec, int m);
CountTable class_counts_by_x(const ClassSpec& spec, int m);

/// Color 1 stays 1, color 3 becomes 1, color 2 becomes uncolored.
ColoredSequence drop_color(const ColoredSequence& b);
/// Dropped two-color partition -> integer partition: colored j goes to
/// (j-1)k + r when r < k and k(j-2) + r when r > k, uncolored j to kj.
Partition bressoud_dilate(const ColoredSequence& dropped, int r, int k);

// Classical classes, weakly decreasing parts.

/// Consecutive parts differ by >= 3, consecutive multiples of 3 by >= 6.
CheckResult check_schur(const Partition& parts);
/// Parts = r or 0 mod k, gaps >= k, >= 2k between parts = r mod k, smallest
/// part >= k when r > k.
CheckResult check_bressoud_H(const Partition& parts, int r, int k);
/// Parts = 0 or some a_i mod N, only multiples of N repeat, smallest part
/// below N, gaps <= N and < N next to a multiple of N.
CheckResult check_andrews_olsson_P2(const Partition& parts, const std::vector<int>& a, int N);

// Residue-table classes.  table(j, k) is the listed lower bound on
// lambda_i - lambda_{i+1} when lambda_i = j and lambda_{i+1} = k mod N,
// residue 0 written as N.
struct DifferenceTable {
    int N = 1;
    std::function<int(int j, int k)> bound;
};

DifferenceTable mod3_table();
DifferenceTable mod7_table();
/// Smallest d >= bound(j,k) with d = j - k mod N.
int effective_bound(const DifferenceTable& t, int j, int k);
/// Dilated-class minimum N omega(k) + N delta(sigma j, sigma k) + j - k.
int computed_bound(const AndrewsSet& A, const Permutation& sigma, int j, int k);
/// Parts of any residue, x graded through A, gaps from the table.
CheckResult check_table(const Partition& parts, const DifferenceTable& t);

// Verifiers.  Each returns an IdentityReport over m = 0..m_max.

IdentityReport verify_schur(int m_max, unsigned threads = 1);
IdentityReport verify_bressoud(int r, int k, int m_max, unsigned threads = 1);
IdentityReport verify_andrews_olsson(const std::vector<int>& a, int N, int m_max, unsigned threads = 1);
IdentityReport verify_dilated_sigma(const AndrewsSet& A, const Permutation& sigma, int m_max, unsigned threads = 1);
IdentityReport verify_dilated_negative(const AndrewsSet& A, const Permutation& sigma, int m_max, unsigned threads = 1);
IdentityReport verify_dilated_congruence(const AndrewsSet& A, int R, int M, int m_max, unsigned threads = 1);
IdentityReport verify_dilated_gap(const AndrewsSet& A, int M, int m_max, unsigned threads = 1);
IdentityReport verify_andrews_distinct(const AndrewsSet& A, int m_max, unsigned threads = 1);
IdentityReport verify_andrews_negative(const AndrewsSet& A, int m_max, unsigned threads = 1);
IdentityReport verify_table_mod3(int m_max, unsigned threads = 1);
IdentityReport verify_table_mod7(int m_max, unsigned threads = 1);
/// Key inequality over `sets` random sets (seeded); rows are empty, issues list failures.
IdentityReport verify_key_inequality(int sets, int n_max, std::uint64_t seed);

} // namespace partforge

#endif

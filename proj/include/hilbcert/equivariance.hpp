#pragma once

#include "hilbcert/errors.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hilbcert {

/// Weakly decreasing positive parts.
class Partition {
  public:
    explicit Partition(std::vector<unsigned> parts);

    const std::vector<unsigned> &parts() const { return parts_; }
    unsigned n() const;
    std::string to_string() const; // "(2,1)"

    friend bool operator==(const Partition &, const Partition &) = default;
    friend auto operator<=>(const Partition &, const Partition &) = default;

  private:
    std::vector<unsigned> parts_;
};

/// All partitions of n, in decreasing lexicographic order.
std::vector<Partition> partitions_of(unsigned n);

/// Sizes of the classes of equal coordinates.
template <class T>
Partition multiplicity_partition(const std::vector<T> &point) {
    std::map<T, unsigned> counts;
    for (const T &v : point)
        ++counts[v];
    std::vector<unsigned> parts;
    for (const auto &[v, c] : counts)
        parts.push_back(c);
    std::sort(parts.rbegin(), parts.rend());
    return Partition(std::move(parts));
}

inline constexpr unsigned max_refinement_n = 8;

/// Blocks of indices of lam, block j summing to tau.parts()[j], or nullopt
/// when lam does not refine tau. Throws ParameterError for partitions of
/// different n and ResourceLimitError above max_refinement_n.
std::optional<std::vector<std::vector<std::size_t>>> refinement_grouping(const Partition &lam, const Partition &tau);

bool refines(const Partition &lam, const Partition &tau);

/// G = (Z/mZ)^r acting on G^n by the matrix with x on the diagonal and y
/// elsewhere. Elements of G are encoded as integers in [0, m^r), base m.
class FiniteModel {
  public:
    /// Throws ParameterError when (x - y)^(n-1) (x + (n-1) y) is not a unit mod m.
    FiniteModel(long m, unsigned r, unsigned n, long x, long y);

    static bool is_valid(long m, unsigned n, long x, long y);

    long modulus() const { return m_; }
    unsigned rank() const { return r_; }
    unsigned factors() const { return n_; }
    long x() const { return x_; }
    long y() const { return y_; }
    long group_order() const { return order_; }
    long determinant() const; // reduced mod m

    long add(long g, long h) const;
    std::vector<long> apply(const std::vector<long> &p) const;
    /// apply without validation or allocation, for the exhaustive scans.
    void apply_into(const std::vector<long> &p, std::vector<long> &out) const;
    std::string to_string() const;

  private:
    long m_;
    unsigned r_, n_;
    long x_, y_, order_;
    static constexpr long sum_table_limit = 1024;
    std::vector<long> times_x_, times_y_, negate_;
    std::vector<std::int32_t> sum_table_;
};

inline constexpr std::uint64_t max_exhaustive_points = 10'000'000;
inline constexpr long max_group_order = 1'000'000;

struct Sampling {
    std::uint64_t count;
    std::uint64_t seed;
};

struct PreservationResult {
    bool preserved = true;
    std::uint64_t points_checked = 0;
    std::optional<std::vector<long>> counterexample;
};

/// Compares multiplicity partitions of p and f(p) for every point of G^n
/// (throws ResourceLimitError above max_exhaustive_points), or for
/// `sampling->count` uniform random points.
PreservationResult check_multiplicity_preservation(const FiniteModel &model,
                                                   std::optional<Sampling> sampling = std::nullopt);

struct KernelResult {
    long m;
    unsigned r, n;
    std::vector<std::pair<long, long>> valid_pairs;
    /// Pairs whose action permutes the coordinates of every point.
    std::vector<std::pair<long, long>> identity_inducing;
    /// (1, 0), and also the swap (0, 1) when n = 2.
    std::vector<std::pair<long, long>> expected;
    bool trivial() const { return identity_inducing == expected; }
};

/// Exhaustive over (x, y) mod m and over G^n; throws ParameterError for
/// n < 2 and ResourceLimitError above max_exhaustive_points.
KernelResult kernel_triviality_check(long m, unsigned r, unsigned n);

/// A point q of multiplicity lam that collapses to p when each new value is
/// sent back to the value it split from; nullopt if lam does not refine the
/// multiplicity of p or G has too few elements for the split.
std::optional<std::vector<long>> closure_witness(long group_order, const std::vector<long> &p, const Partition &lam);

/// The map from values of q to values of p in a closure witness, or nullopt
/// if no single map sends q to p.
std::optional<std::map<long, long>> collapse_map(const std::vector<long> &q, const std::vector<long> &p);

} // namespace hilbcert

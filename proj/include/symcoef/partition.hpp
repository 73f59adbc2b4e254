#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "symcoef/errors.hpp"
#include "symcoef/numeric.hpp"

namespace symcoef {

/// An integer partition: weakly decreasing positive parts, no trailing zeros.
/// The empty sequence is the unique partition of 0. Immutable after
/// construction; cheap to copy at the sizes this library works with.
class Partition {
public:
    Partition() = default;
    /// Validates weak decrease and positivity; throws DomainError otherwise.
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    /// |lambda|, the sum of the parts.
    int size() const { return size_; }
    /// ell(lambda), the number of parts.
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    /// Part at 0-based index i; 0 beyond the length (convenient for shapes).
    int part(int i) const {
        return (i >= 0 && i < length()) ? parts_[static_cast<size_t>(i)] : 0;
    }

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

/// Canonical order used everywhere (tables, reports, serialized maps):
/// descending lexicographic, so (n) comes first and (1^n) last.
struct DescLex {
    bool operator()(const Partition& a, const Partition& b) const;
};

/// A composition: nonnegative integers, order significant, zeros allowed.
class Composition {
public:
    Composition() = default;
    explicit Composition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return size_; }
    int length() const { return static_cast<int>(parts_.size()); }

    /// Sort descending, drop zeros.
    Partition to_partition() const;

    bool operator==(const Composition& o) const { return parts_ == o.parts_; }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

/// A skew shape outer/inner with inner contained cellwise in outer.
class SkewShape {
public:
    SkewShape() = default;
    explicit SkewShape(Partition outer, Partition inner = Partition());

    const Partition& outer() const { return outer_; }
    const Partition& inner() const { return inner_; }
    /// Number of cells, |outer| - |inner|.
    int size() const { return outer_.size() - inner_.size(); }
    bool is_straight() const { return inner_.empty(); }

private:
    Partition outer_;
    Partition inner_;
};

// ---------------------------------------------------------------------------
// Text grammar shared by every CLI surface: comma-separated parts "4,3,1",
// exponent shorthand "3^2,1" == (3,3,1), empty string == empty partition,
// whitespace ignored.

Partition parse_partition(const std::string& text);
Composition parse_composition(const std::string& text);
std::string format_partition(const Partition& p);
std::string format_composition(const Composition& c);

// ---------------------------------------------------------------------------
// Operations

/// Conjugate (transpose) partition; an involution.
Partition conjugate(const Partition& p);

/// Dominance order: true iff every prefix sum of p weakly exceeds that of q.
/// Throws DomainError if |p| != |q|.
bool dominates(const Partition& p, const Partition& q);

/// Hook lengths h(i,j) = lambda_i - j + lambda'_j - i + 1 for every cell,
/// as a row-shaped table (0-based indices).
std::vector<std::vector<int>> hook_lengths(const Partition& p);

struct PartitionConstraints {
    std::optional<int> max_part;
    std::optional<int> max_length;
};

inline constexpr int kDefaultPartitionEnumCap = 60;

/// All partitions of n satisfying the constraints, in descending
/// lexicographic order. Throws CapacityError when n exceeds the cap.
std::vector<Partition> enumerate_partitions(int n,
                                            const PartitionConstraints& constraints = {},
                                            int cap = kDefaultPartitionEnumCap);

/// p(n), by the Euler pentagonal-number recurrence (no enumeration).
Int partition_count(int n);

/// p_r(a,b): partitions of r with first part <= a and length <= b.
Int partitions_in_rectangle(int r, int a, int b);

/// Coefficient sequence of the Gaussian binomial [a+b choose a]_q;
/// entry r equals partitions_in_rectangle(r, a, b); ab+1 entries.
std::vector<Int> q_binomial(int a, int b);

/// Durfee square size: max { i : lambda_i >= i }.
int durfee(const Partition& p);

/// Principal hooks of a self-conjugate partition: entries 2*lambda_i - 2i + 1
/// for i = 1..durfee, strictly decreasing odd numbers summing to |lambda|.
/// Throws DomainError if p is not self-conjugate.
Composition principal_hooks(const Partition& p);

/// The staircase delta_k = (k, k-1, ..., 1).
Partition staircase(int k);

/// z_lambda = prod_i i^{m_i} m_i!, the centralizer order of the class.
Int z_value(const Partition& p);

} // namespace symcoef

#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "symcoef/partition.hpp"

namespace symcoef {

enum class Basis { Monomial, Elementary, Homogeneous, PowerSum, Schur };

const char* basis_name(Basis b);
Basis basis_from_name(const std::string& name);

/// A homogeneous symmetric function of fixed degree: exact rational
/// coefficients indexed by partitions of that degree, zero terms not stored.
class SymFunc {
public:
    SymFunc() = default;
    SymFunc(int degree, Basis basis) : degree_(degree), basis_(basis) {
        if (degree < 0) throw DomainError("symmetric function degree must be nonnegative");
    }

    /// The basis element b_lambda (coefficient 1 on lambda).
    static SymFunc element(Basis basis, const Partition& lambda);
    /// The unit of the ring as a degree-0 element.
    static SymFunc one(Basis basis);

    int degree() const { return degree_; }
    Basis basis() const { return basis_; }
    const std::map<Partition, Rat, DescLex>& coeffs() const { return coeffs_; }
    Rat coefficient(const Partition& lambda) const;
    bool is_zero() const { return coeffs_.empty(); }

    /// Adds c to the coefficient of lambda; drops the term if it cancels.
    void add_term(const Partition& lambda, const Rat& c);

    SymFunc& operator+=(const SymFunc& o);
    SymFunc& operator-=(const SymFunc& o);
    SymFunc& operator*=(const Rat& c);
    friend SymFunc operator+(SymFunc a, const SymFunc& b) { return a += b; }
    friend SymFunc operator-(SymFunc a, const SymFunc& b) { return a -= b; }
    friend SymFunc operator*(SymFunc a, const Rat& c) { return a *= c; }

    bool operator==(const SymFunc& o) const {
        return degree_ == o.degree_ && basis_ == o.basis_ && coeffs_ == o.coeffs_;
    }

private:
    int degree_ = 0;
    Basis basis_ = Basis::Monomial;
    std::map<Partition, Rat, DescLex> coeffs_;
};

// ---------------------------------------------------------------------------
// Transition counts (also exposed as operations in their own right)

/// CT(rows, cols): nonnegative-integer matrices with the given margins.
Int contingency_count(const Composition& rows, const Composition& cols);

/// CT0(rows, cols): 0-1 matrices with the given margins.
Int contingency01_count(const Composition& rows, const Composition& cols);

/// P(items, bins): ordered set partitions of the item index set into bins
/// with prescribed sums. Returns 0 when the totals differ.
Int ordered_set_partition_count(const Composition& items, const Composition& bins);

// ---------------------------------------------------------------------------
// Ring operations

/// The same element expressed in the target basis. All conversions route
/// through the monomial basis and are exact.
SymFunc to_basis(const SymFunc& f, Basis target);

/// Product in the ring; the result carries the basis of the first factor.
SymFunc multiply(const SymFunc& f, const SymFunc& g);

/// det[h_{lambda_i - i - mu_j + j}] expanded into the homogeneous basis;
/// equals the skew Schur function s_{lambda/mu}.
SymFunc jacobi_trudi(const SkewShape& shape);

/// Numeric value of f(x_1..x_r, 0, 0, ...) at the given point.
Rat evaluate(const SymFunc& f, const std::vector<Rat>& point);

/// s_lambda(1^N) by the hook-content formula; 0 when ell(lambda) > N.
Int schur_dimension(const Partition& p, int N);

/// Hall inner product; Schur functions are orthonormal, <p_l, p_m> = z_l d_lm.
Rat hall_inner_product(const SymFunc& f, const SymFunc& g);

/// The involution omega: e_lambda <-> h_lambda, s_lambda -> s_lambda'.
SymFunc omega(const SymFunc& f);

inline constexpr int kMaxPolyVars = 12;
inline constexpr int kDefaultPlethysmDegreeCap = 64;

/// Plethysm f[g], degree |f|*|g|, computed by expanding f in the power-sum
/// basis and applying p_k[g](x) = g(x_1^k, x_2^k, ...) in var_budget
/// variables. Schur coefficients are reported for ell(lambda) <= var_budget
/// only; that is what the budget declares.
SymFunc plethysm(const SymFunc& f, const SymFunc& g, int var_budget,
                 int degree_cap = kDefaultPlethysmDegreeCap);

/// Verifies the Cauchy identity degreewise up to degree n in r + s variables.
bool cauchy_check(int n, int r, int s);

// ---------------------------------------------------------------------------
// Truncated polynomials (workhorse for alternant extraction)

/// A polynomial in a fixed number of variables truncated at a total degree
/// bound, with arbitrary-precision integer coefficients. Storage is dense for
/// few variables and sparse otherwise.
class DensePoly {
public:
    using Key = std::array<std::uint16_t, kMaxPolyVars>;
    struct KeyHash {
        size_t operator()(const Key& k) const {
            std::uint64_t h = 1469598103934665603ull;
            for (auto v : k) {
                h ^= v;
                h *= 1099511628211ull;
            }
            return static_cast<size_t>(h);
        }
    };

    DensePoly(int nvars, int degree_bound);

    int nvars() const { return nvars_; }
    int degree_bound() const { return bound_; }

    void add_term(const std::vector<int>& exps, const Int& c);
    Int coefficient(const std::vector<int>& exps) const;

    /// this * other, dropping monomials above the degree bound.
    DensePoly multiply_truncated(const DensePoly& other) const;
    /// Substitute x_i -> x_i^k.
    DensePoly substitute_power(int k) const;
    /// this += scale * other.
    void add_scaled(const DensePoly& other, const Int& scale);

    template <typename F>
    void for_each(F&& f) const {
        if (is_dense_) {
            std::vector<int> exps(static_cast<size_t>(nvars_));
            for (size_t idx = 0; idx < dense_.size(); ++idx) {
                if (dense_[idx] == 0) continue;
                decode(idx, exps);
                f(exps, dense_[idx]);
            }
        } else {
            std::vector<int> exps(static_cast<size_t>(nvars_));
            for (const auto& [key, c] : sparse_) {
                if (c == 0) continue;
                for (int i = 0; i < nvars_; ++i) exps[static_cast<size_t>(i)] = key[static_cast<size_t>(i)];
                f(exps, c);
            }
        }
    }

private:
    size_t encode(const std::vector<int>& exps) const;
    void decode(size_t idx, std::vector<int>& exps) const;
    Key make_key(const std::vector<int>& exps) const;

    int nvars_ = 0;
    int bound_ = 0;
    bool is_dense_ = false;
    std::vector<Int> dense_;
    std::unordered_map<Key, Int, KeyHash> sparse_;
};

} // namespace symcoef

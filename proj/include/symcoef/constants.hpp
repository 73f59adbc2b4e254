#pragma once

#include "symcoef/characters.hpp"
#include "symcoef/symfunc.hpp"
#include "symcoef/tableaux.hpp"

namespace symcoef {

/// A triple of partitions indexing a structure constant. Kronecker queries
/// need all three sizes equal; LR queries need |first| = |second| + |third|.
struct TripleQuery {
    Partition first;
    Partition second;
    Partition third;
};

inline constexpr int kKostkaEnumerationThreshold = 12;
inline constexpr int kDefaultSchurWeylMaxN = 6;

/// K_{shape,content}: SSYT count by enumeration up to the threshold, by the
/// monomial expansion of s_shape above it.
Int kostka(const Partition& shape, const Composition& content);

/// K_{shape,content} > 0, decided by the dominance criterion.
bool kostka_positive(const Partition& shape, const Partition& content);

/// c^{outer}_{inner,other} by ballot-tableau enumeration.
Int lr_coefficient(const Partition& outer, const Partition& inner, const Partition& other);

/// Kostka as a Littlewood-Richardson coefficient: K_{lambda,mu} =
/// c^{theta}_{(lambda_1^{l-1}), tau} with eta_i = mu_1 (l - i),
/// tau = eta + mu, theta = (lambda_1 + eta, lambda).
Int kostka_via_lr(const Partition& shape, const Partition& content);

/// g(lambda,mu,nu) by the class-summed character formula over the table.
Int kronecker(const TripleQuery& q, const CharTableProvider& tables);

/// Independent oracle: coefficient of s_mu(x) s_nu(y) in s_lambda evaluated
/// at the pairwise products x_i y_j (rows_x by rows_y variables). Slow by
/// construction; default bound n <= 6.
Int kronecker_schur_weyl(const TripleQuery& q, int rows_x, int rows_y,
                         int max_n = kDefaultSchurWeylMaxN);

/// The Kronecker (internal) product on the ring: p_a * p_b = delta z_a p_a.
SymFunc kronecker_product(const SymFunc& f, const SymFunc& g);

/// Closed form g(lambda, n^d, n^d) = p_{lambda_2}(n,d) - p_{lambda_2 - 1}(n,d)
/// for two-row lambda of size nd.
Int kronecker_two_row_rect(const Partition& lambda, int n, int d);

/// sk(lambda,mu): multiplicity of chi^lambda in the symmetric square of
/// chi^mu, via w -> (chi^mu(w)^2 + chi^mu(w^2)) / 2.
Int symmetric_kronecker(const Partition& lambda, const Partition& mu,
                        const CharTableProvider& tables);

/// a^lambda_{mu,nu} = <s_lambda, s_outer[s_inner]> via the plethysm engine.
Int plethysm_coefficient(const Partition& lambda, const Partition& inner, const Partition& outer,
                         int var_budget);

/// a_lambda(d[n]) = <s_lambda, h_d[h_n]>.
Int pleth_a(const Partition& lambda, int d, int n, int var_budget);

/// Murnaghan stability at the certified point n = 2|lambda| + 1: compares
/// c^lambda_{mu,nu} with the padded Kronecker coefficient.
bool murnaghan_stable_check(const Partition& lambda, const Partition& mu, const Partition& nu,
                            const CharTableProvider& tables);

/// Cycle type of w^2 for w of cycle type alpha.
Partition square_cycle_type(const Partition& alpha);

} // namespace symcoef

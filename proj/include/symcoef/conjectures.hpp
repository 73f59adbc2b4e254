#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "symcoef/constants.hpp"

namespace symcoef {

struct CounterexampleRecord {
    std::string inputs;
    std::string lhs;
    std::string rhs;
};

/// Outcome of one verification suite. failures is empty exactly when the
/// suite passed; counterexamples carry both sides so they can be re-checked.
struct VerificationReport {
    std::string suite;
    std::vector<std::pair<std::string, std::string>> parameters;
    long checked = 0;
    std::vector<CounterexampleRecord> failures;
    double elapsed_ms = 0;
    std::optional<std::uint64_t> seed;

    bool passed() const { return failures.empty(); }
    std::string to_json() const;
    std::string to_text() const;
};

/// Saxl: g(delta_k, delta_k, mu) > 0 for every mu of size k(k+1)/2.
VerificationReport saxl_check(int k, const CharTableProvider& tables);

/// Finds the self-conjugate lambda whose tensor square contains every
/// irreducible; for n >= 9 an empty witness list is a failure.
VerificationReport tensor_square_search(int n, const CharTableProvider& tables);

/// g(lambda,lambda,mu) >= |chi^mu(principal hooks of lambda)| over all
/// self-conjugate lambda and all mu of size n.
VerificationReport char_bound_check(int n, const CharTableProvider& tables);

/// Foulkes at d > n: a_lambda(d[n]) >= a_lambda(n[d]) for all lambda of size
/// nd with ell(lambda) <= var_budget.
VerificationReport foulkes_check(int n, int d, int var_budget);

/// a_lambda((n+1)[n]) = 1 + a_lambda(n[n+1]) for lambda = (n^2-2, n, 2).
VerificationReport dip_identity_check(int n);

/// g(lambda, n^d, n^d) >= a_lambda(d[n]) for lambda = (nd - |rho|, rho).
VerificationReport kron_pleth_check(const Partition& rho, int n, int d,
                                    const CharTableProvider& tables);

/// Semigroup property on seeded random positive triples, plus the mixed
/// horizontal/vertical addition variant.
VerificationReport semigroup_check(int samples, int size_bound, std::uint64_t seed,
                                   const CharTableProvider& tables);

} // namespace symcoef

#include "symcoef/constants.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace symcoef {

namespace {

Int checked_nonneg(Int v, const char* what) {
    if (v < 0) throw InternalError(std::string(what) + ": negative value " + v.str());
    return v;
}

} // namespace

Int kostka(const Partition& shape, const Composition& content) {
    if (shape.size() != content.size())
        throw DomainError("kostka: |shape| must equal the content sum");
    if (shape.size() <= kKostkaEnumerationThreshold)
        return Int(enumerate_ssyt(SkewShape{Partition(shape)}, content).size());
    // Above the threshold: coefficient of m_mu in s_shape through the
    // Jacobi-Trudi expansion, K = sum sgn(sigma) CT(nu_sigma, mu).
    Partition mu = content.to_partition();
    Composition cols(mu.parts());
    Int total = 0;
    SymFunc jt = jacobi_trudi(SkewShape{Partition(shape)});
    for (const auto& [nu, c] : jt.coeffs())
        total += numerator(c) * contingency_count(Composition(nu.parts()), cols);
    return checked_nonneg(std::move(total), "kostka");
}

bool kostka_positive(const Partition& shape, const Partition& content) {
    if (shape.size() != content.size())
        throw DomainError("kostka_positive: sizes must agree");
    return dominates(shape, content);
}

Int lr_coefficient(const Partition& outer, const Partition& inner, const Partition& other) {
    if (outer.size() != inner.size() + other.size())
        throw DomainError("lr_coefficient: |outer| must equal |inner| + |other|");
    for (int i = 0; i < inner.length(); ++i)
        if (inner.part(i) > outer.part(i)) return 0; // no skew shape, coefficient vanishes
    return Int(enumerate_lr_tableaux(outer, inner, other).size());
}

Int kostka_via_lr(const Partition& shape, const Partition& content) {
    if (shape.size() != content.size())
        throw DomainError("kostka_via_lr: sizes must agree");
    int l = content.length();
    if (l <= 1) return lr_coefficient(shape, Partition(), content);
    int width = shape.part(0);
    std::vector<int> theta, tau, inner;
    for (int i = 1; i <= l - 1; ++i) {
        int eta = content.part(0) * (l - i);
        theta.push_back(width + eta);
        tau.push_back(eta + content.part(i - 1));
        inner.push_back(width);
    }
    tau.push_back(content.part(l - 1));
    for (int i = 0; i < shape.length(); ++i) theta.push_back(shape.part(i));
    // The construction always yields partitions; the constructor revalidates.
    return lr_coefficient(Partition(std::move(theta)), Partition(std::move(inner)),
                          Partition(std::move(tau)));
}

Int kronecker(const TripleQuery& q, const CharTableProvider& tables) {
    if (q.first.size() != q.second.size() || q.first.size() != q.third.size())
        throw DomainError("kronecker: the three partitions must have equal sizes");
    int n = q.first.size();
    if (n == 0) return 1;
    auto table = tables.table(n);
    size_t il = table->index_of(q.first);
    size_t im = table->index_of(q.second);
    size_t iv = table->index_of(q.third);
    Int nfact = factorial(n);
    Int acc = 0;
    for (size_t a = 0; a < table->count(); ++a) {
        Int cls = nfact / z_value(table->partitions()[a]);
        acc += cls * table->value(il, a) * table->value(im, a) * table->value(iv, a);
    }
    Int g, r;
    boost::multiprecision::divide_qr(acc, nfact, g, r);
    if (r != 0) throw InternalError("kronecker: class sum is not divisible by n!");
    return checked_nonneg(std::move(g), "kronecker");
}

Int kronecker_schur_weyl(const TripleQuery& q, int rows_x, int rows_y, int max_n) {
    if (q.first.size() != q.second.size() || q.first.size() != q.third.size())
        throw DomainError("kronecker_schur_weyl: the three partitions must have equal sizes");
    if (q.second.length() > rows_x || q.third.length() > rows_y)
        throw DomainError("kronecker_schur_weyl: row bounds below partition lengths");
    int n = q.first.size();
    if (n == 0) return 1;
    if (n > max_n)
        throw CapacityError("kronecker_schur_weyl is an oracle for n <= " + std::to_string(max_n));

    // Expand s_lambda at the rs pairwise products x_i y_j: every SSYT entry
    // v in 1..rs maps to the pair (i,j) = ((v-1)/rows_y, (v-1)%rows_y), and
    // only the margin pair (x-degrees, y-degrees) matters.
    std::map<std::vector<int>, Int> margins;
    for_each_ssyt_content(q.first, rows_x * rows_y, [&](const std::vector<int>& content) {
        std::vector<int> key(static_cast<size_t>(rows_x + rows_y), 0);
        for (int v = 0; v < rows_x * rows_y; ++v) {
            int c = content[static_cast<size_t>(v)];
            if (c == 0) continue;
            key[static_cast<size_t>(v / rows_y)] += c;
            key[static_cast<size_t>(rows_x + v % rows_y)] += c;
        }
        margins[key] += 1;
    });

    // Double alternant: signed permutations of delta on each variable set.
    struct SignedShift {
        std::vector<int> exps;
        int sign;
    };
    auto signed_shifts = [](const Partition& p, int r) {
        std::vector<SignedShift> shifts;
        std::vector<bool> used(static_cast<size_t>(r), false);
        std::vector<int> exps(static_cast<size_t>(r), 0);
        std::function<void(int, int)> rec = [&](int i, int parity) {
            if (i == r) {
                shifts.push_back({exps, parity % 2 == 0 ? 1 : -1});
                return;
            }
            for (int j = 0; j < r; ++j) {
                if (used[static_cast<size_t>(j)]) continue;
                int e = p.part(i) + (r - 1 - i) - (r - 1 - j);
                if (e < 0) continue;
                int inv = 0;
                for (int k = j + 1; k < r; ++k)
                    if (used[static_cast<size_t>(k)]) ++inv;
                used[static_cast<size_t>(j)] = true;
                exps[static_cast<size_t>(i)] = e;
                rec(i + 1, parity + inv);
                used[static_cast<size_t>(j)] = false;
            }
        };
        rec(0, 0);
        return shifts;
    };

    auto xs = signed_shifts(q.second, rows_x);
    auto ys = signed_shifts(q.third, rows_y);
    Int total = 0;
    std::vector<int> key(static_cast<size_t>(rows_x + rows_y), 0);
    for (const auto& sx : xs)
        for (const auto& sy : ys) {
            for (int i = 0; i < rows_x; ++i) key[static_cast<size_t>(i)] = sx.exps[static_cast<size_t>(i)];
            for (int j = 0; j < rows_y; ++j) key[static_cast<size_t>(rows_x + j)] = sy.exps[static_cast<size_t>(j)];
            auto it = margins.find(key);
            if (it != margins.end()) total += Int(sx.sign * sy.sign) * it->second;
        }
    return checked_nonneg(std::move(total), "kronecker_schur_weyl");
}

SymFunc kronecker_product(const SymFunc& f, const SymFunc& g) {
    if (f.degree() != g.degree())
        throw DomainError("kronecker_product: degrees must agree");
    SymFunc fp = to_basis(f, Basis::PowerSum);
    SymFunc gp = to_basis(g, Basis::PowerSum);
    SymFunc prod(f.degree(), Basis::PowerSum);
    for (const auto& [alpha, c] : fp.coeffs()) {
        Rat d = gp.coefficient(alpha);
        if (d != 0) prod.add_term(alpha, c * d * Rat(z_value(alpha)));
    }
    return to_basis(prod, f.basis());
}

Int kronecker_two_row_rect(const Partition& lambda, int n, int d) {
    if (lambda.length() > 2)
        throw DomainError("kronecker_two_row_rect: lambda must have at most two rows");
    if (lambda.size() != n * d)
        throw DomainError("kronecker_two_row_rect: |lambda| must equal n*d");
    if (n < 1 || d < 1) throw DomainError("kronecker_two_row_rect: n, d must be positive");
    int second = lambda.part(1);
    Int value = partitions_in_rectangle(second, n, d) - partitions_in_rectangle(second - 1, n, d);
    return checked_nonneg(std::move(value), "kronecker_two_row_rect");
}

Partition square_cycle_type(const Partition& alpha) {
    std::vector<int> parts;
    for (int c : alpha.parts()) {
        if (c % 2 == 0) {
            parts.push_back(c / 2);
            parts.push_back(c / 2);
        } else {
            parts.push_back(c);
        }
    }
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    return Partition(std::move(parts));
}

Int symmetric_kronecker(const Partition& lambda, const Partition& mu,
                        const CharTableProvider& tables) {
    if (lambda.size() != mu.size())
        throw DomainError("symmetric_kronecker: sizes must agree");
    int n = lambda.size();
    if (n == 0) return 1;
    auto table = tables.table(n);
    size_t il = table->index_of(lambda);
    size_t im = table->index_of(mu);
    Int nfact = factorial(n);
    Int acc = 0;
    for (size_t a = 0; a < table->count(); ++a) {
        const Partition& cls = table->partitions()[a];
        Int weight = nfact / z_value(cls);
        Int chi_mu_sq = table->value(im, table->index_of(square_cycle_type(cls)));
        Int chi_mu = table->value(im, a);
        acc += weight * table->value(il, a) * (chi_mu * chi_mu + chi_mu_sq);
    }
    Int denom = 2 * nfact;
    Int sk, r;
    boost::multiprecision::divide_qr(acc, denom, sk, r);
    if (r != 0) throw InternalError("symmetric_kronecker: sum not divisible by 2 n!");
    checked_nonneg(sk, "symmetric_kronecker");
    Int g = kronecker(TripleQuery{lambda, mu, mu}, tables);
    if (sk > g)
        throw InternalError("symmetric_kronecker: sk(" + format_partition(lambda) + "," +
                            format_partition(mu) + ") exceeds g(lambda,mu,mu)");
    return sk;
}

Int plethysm_coefficient(const Partition& lambda, const Partition& inner, const Partition& outer,
                         int var_budget) {
    if (lambda.size() != inner.size() * outer.size())
        throw DomainError("plethysm_coefficient: |lambda| must equal |inner|*|outer|");
    if (lambda.length() > var_budget)
        throw CapacityError("plethysm_coefficient: ell(lambda) = " + std::to_string(lambda.length()) +
                            " exceeds the variable budget " + std::to_string(var_budget) +
                            "; raise it with --var-budget");
    SymFunc expansion = plethysm(SymFunc::element(Basis::Schur, outer),
                                 SymFunc::element(Basis::Schur, inner), var_budget);
    Rat c = expansion.coefficient(lambda);
    if (!is_integer(c)) throw InternalError("plethysm coefficient is not an integer");
    return checked_nonneg(numerator(c), "plethysm_coefficient");
}

Int pleth_a(const Partition& lambda, int d, int n, int var_budget) {
    if (d < 0 || n < 0) throw DomainError("pleth_a: d and n must be nonnegative");
    if (lambda.size() != n * d) throw DomainError("pleth_a: |lambda| must equal n*d");
    std::vector<int> dd, nn;
    if (d > 0) dd.push_back(d);
    if (n > 0) nn.push_back(n);
    return plethysm_coefficient(lambda, Partition(std::move(nn)), Partition(std::move(dd)),
                                var_budget);
}

bool murnaghan_stable_check(const Partition& lambda, const Partition& mu, const Partition& nu,
                            const CharTableProvider& tables) {
    if (lambda.size() != mu.size() + nu.size())
        throw DomainError("murnaghan_stable_check: |lambda| must equal |mu| + |nu|");
    int n = 2 * lambda.size() + 1;
    auto pad = [n](const Partition& p) {
        std::vector<int> parts;
        parts.push_back(n - p.size());
        for (int i = 0; i < p.length(); ++i) parts.push_back(p.part(i));
        return Partition(std::move(parts));
    };
    Int lr = lr_coefficient(lambda, mu, nu);
    Int g = kronecker(TripleQuery{pad(lambda), pad(mu), pad(nu)}, tables);
    return lr == g;
}

} // namespace symcoef

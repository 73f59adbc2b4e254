#include "symcoef/symfunc.hpp"

#include "symcoef/tableaux.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <numeric>

namespace symcoef {

const char* basis_name(Basis b) {
    switch (b) {
        case Basis::Monomial: return "monomial";
        case Basis::Elementary: return "elementary";
        case Basis::Homogeneous: return "homogeneous";
        case Basis::PowerSum: return "powersum";
        case Basis::Schur: return "schur";
    }
    return "?";
}

Basis basis_from_name(const std::string& name) {
    if (name == "m" || name == "monomial") return Basis::Monomial;
    if (name == "e" || name == "elementary") return Basis::Elementary;
    if (name == "h" || name == "homogeneous" || name == "complete") return Basis::Homogeneous;
    if (name == "p" || name == "powersum" || name == "power_sum") return Basis::PowerSum;
    if (name == "s" || name == "schur") return Basis::Schur;
    throw DomainError("unknown basis '" + name + "'");
}

SymFunc SymFunc::element(Basis basis, const Partition& lambda) {
    SymFunc f(lambda.size(), basis);
    f.add_term(lambda, 1);
    return f;
}

SymFunc SymFunc::one(Basis basis) { return element(basis, Partition()); }

Rat SymFunc::coefficient(const Partition& lambda) const {
    auto it = coeffs_.find(lambda);
    return it == coeffs_.end() ? Rat(0) : it->second;
}

void SymFunc::add_term(const Partition& lambda, const Rat& c) {
    if (c == 0) return;
    if (lambda.size() != degree_)
        throw DomainError("term partition size does not match the element degree");
    auto [it, inserted] = coeffs_.emplace(lambda, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) coeffs_.erase(it);
    }
}

SymFunc& SymFunc::operator+=(const SymFunc& o) {
    if (degree_ != o.degree_ || basis_ != o.basis_)
        throw DomainError("cannot add symmetric functions of different degree or basis");
    for (const auto& [p, c] : o.coeffs_) add_term(p, c);
    return *this;
}

SymFunc& SymFunc::operator-=(const SymFunc& o) {
    if (degree_ != o.degree_ || basis_ != o.basis_)
        throw DomainError("cannot subtract symmetric functions of different degree or basis");
    for (const auto& [p, c] : o.coeffs_) add_term(p, -c);
    return *this;
}

SymFunc& SymFunc::operator*=(const Rat& c) {
    if (c == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& [p, v] : coeffs_) v *= c;
    return *this;
}

// ---------------------------------------------------------------------------
// Transition counts

namespace {

// Shared memo style: keys serialize small int vectors.
std::string vec_key(const std::vector<int>& v) {
    std::string s;
    s.reserve(v.size() * 3);
    for (int x : v) {
        s += std::to_string(x);
        s.push_back(',');
    }
    return s;
}

// Counts matrices with given row sums and (multiset of) remaining column
// sums; zero_one restricts entries to {0,1}.
Int ct_rec(const std::vector<int>& rows, size_t i, std::vector<int>& cols, bool zero_one,
           std::map<std::string, Int>& memo) {
    if (i == rows.size()) return 1; // column sums exhausted along with rows
    std::string key = std::to_string(i) + ";" + vec_key(cols);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;

    Int total = 0;
    int need = rows[i];
    // distribute `need` over the columns
    std::function<void(size_t, int)> dist = [&](size_t j, int rem) {
        if (rem == 0) {
            // tail columns untouched; recurse into next row
            std::vector<int> next = cols;
            std::sort(next.begin(), next.end(), std::greater<int>());
            while (!next.empty() && next.back() == 0) next.pop_back();
            total += ct_rec(rows, i + 1, next, zero_one, memo);
            return;
        }
        if (j == cols.size()) return;
        // capacity prune: remaining columns must be able to absorb rem
        long long cap = 0;
        for (size_t k = j; k < cols.size(); ++k) cap += zero_one ? std::min(cols[k], 1) : cols[k];
        if (cap < rem) return;
        int hi = zero_one ? std::min(cols[j], 1) : std::min(cols[j], rem);
        for (int take = 0; take <= hi && take <= rem; ++take) {
            cols[j] -= take;
            dist(j + 1, rem - take);
            cols[j] += take;
        }
    };
    dist(0, need);
    memo.emplace(std::move(key), total);
    return total;
}

Int contingency_impl(const Composition& rows, const Composition& cols, bool zero_one) {
    if (rows.size() != cols.size())
        throw DomainError("contingency margins must have equal sums");
    std::vector<int> r = rows.parts(), c = cols.parts();
    std::erase(r, 0);
    std::erase(c, 0);
    std::sort(r.begin(), r.end(), std::greater<int>());
    std::sort(c.begin(), c.end(), std::greater<int>());
    std::map<std::string, Int> memo;
    return ct_rec(r, 0, c, zero_one, memo);
}

} // namespace

Int contingency_count(const Composition& rows, const Composition& cols) {
    return contingency_impl(rows, cols, false);
}

Int contingency01_count(const Composition& rows, const Composition& cols) {
    return contingency_impl(rows, cols, true);
}

Int ordered_set_partition_count(const Composition& items, const Composition& bins) {
    if (items.size() != bins.size()) return 0;
    // Group items by value; states are remaining multiplicities per group.
    std::vector<std::pair<int, int>> groups; // (value, multiplicity)
    {
        std::vector<int> v = items.parts();
        std::sort(v.begin(), v.end(), std::greater<int>());
        for (int x : v) {
            if (!groups.empty() && groups.back().first == x)
                ++groups.back().second;
            else
                groups.emplace_back(x, 1);
        }
    }
    std::map<std::vector<int>, Int> frontier;
    {
        std::vector<int> full;
        for (auto& [v, m] : groups) full.push_back(m);
        frontier.emplace(std::move(full), 1);
    }
    for (int bin : bins.parts()) {
        std::map<std::vector<int>, Int> next;
        for (const auto& [state, count] : frontier) {
            // choose c_g items from each group with sum of values == bin
            std::vector<int> pick(groups.size(), 0);
            std::function<void(size_t, int, Int)> choose = [&](size_t g, int rem, Int ways) {
                if (g == groups.size()) {
                    if (rem != 0) return;
                    std::vector<int> ns = state;
                    for (size_t k = 0; k < groups.size(); ++k) ns[k] -= pick[k];
                    next[ns] += count * ways;
                    return;
                }
                int value = groups[g].first;
                int avail = state[g];
                int maxc = value > 0 ? std::min(avail, rem / value) : avail;
                for (int c = 0; c <= maxc; ++c) {
                    pick[g] = c;
                    choose(g + 1, rem - c * value, ways * binomial(avail, c));
                }
                pick[g] = 0;
            };
            choose(0, bin, 1);
        }
        frontier = std::move(next);
        if (frontier.empty()) return 0;
    }
    std::vector<int> zero(groups.size(), 0);
    auto it = frontier.find(zero);
    return it == frontier.end() ? Int(0) : it->second;
}

// ---------------------------------------------------------------------------
// Expansions of basis elements into the monomial basis (the internal pivot).

namespace {

using MMap = std::map<Partition, Rat, DescLex>;

// Signed expansion of the Jacobi-Trudi determinant into h-indexing partitions.
std::map<Partition, Int, DescLex> jt_signed_h(const Partition& outer, const Partition& inner) {
    std::map<Partition, Int, DescLex> out;
    int L = outer.length();
    if (L == 0) {
        out.emplace(Partition(), 1);
        return out;
    }
    std::vector<int> parts;
    std::vector<bool> used(static_cast<size_t>(L), false);
    std::function<void(int, int)> rec = [&](int i, int parity) {
        if (i == L) {
            std::vector<int> v = parts;
            std::sort(v.begin(), v.end(), std::greater<int>());
            Partition p(std::move(v));
            Int& slot = out[p];
            slot += (parity % 2 == 0) ? 1 : -1;
            if (slot == 0) out.erase(p);
            return;
        }
        for (int j = 0; j < L; ++j) {
            if (used[static_cast<size_t>(j)]) continue;
            int idx = outer.part(i) - (i + 1) - inner.part(j) + (j + 1);
            if (idx < 0) continue; // h of negative index vanishes
            int inv = 0;
            for (int k = j + 1; k < L; ++k)
                if (used[static_cast<size_t>(k)]) ++inv;
            used[static_cast<size_t>(j)] = true;
            if (idx > 0) parts.push_back(idx);
            rec(i + 1, parity + inv);
            if (idx > 0) parts.pop_back();
            used[static_cast<size_t>(j)] = false;
        }
    };
    rec(0, 0);
    return out;
}

std::vector<Partition> partitions_of(int n) {
    return enumerate_partitions(n, {}, std::max(n, kDefaultPartitionEnumCap));
}

// Memoized monomial expansions of h/e/p/s basis elements. Coefficients are
// integers; stored as Rat for direct accumulation.
class ExpansionCache {
public:
    const MMap& h_to_m(const Partition& lam) {
        return get(h_cache_, lam, [&](const Partition& l) {
            MMap m;
            Composition rows(l.parts());
            for (const Partition& mu : partitions_of(l.size())) {
                Int c = contingency_count(rows, Composition(mu.parts()));
                if (c != 0) m.emplace(mu, Rat(c));
            }
            return m;
        });
    }
    const MMap& e_to_m(const Partition& lam) {
        return get(e_cache_, lam, [&](const Partition& l) {
            MMap m;
            Composition rows(l.parts());
            for (const Partition& mu : partitions_of(l.size())) {
                Int c = contingency01_count(rows, Composition(mu.parts()));
                if (c != 0) m.emplace(mu, Rat(c));
            }
            return m;
        });
    }
    const MMap& p_to_m(const Partition& lam) {
        return get(p_cache_, lam, [&](const Partition& l) {
            MMap m;
            Composition rows(l.parts());
            for (const Partition& mu : partitions_of(l.size())) {
                Int c = ordered_set_partition_count(rows, Composition(mu.parts()));
                if (c != 0) m.emplace(mu, Rat(c));
            }
            return m;
        });
    }
    const MMap& s_to_m(const Partition& lam) {
        return get(s_cache_, lam, [&](const Partition& l) {
            MMap m;
            for (const auto& [nu, sign] : jt_signed_h(l, Partition())) {
                for (const auto& [mu, c] : h_to_m(nu)) {
                    auto [it, inserted] = m.emplace(mu, c * Rat(sign));
                    if (!inserted) {
                        it->second += c * Rat(sign);
                        if (it->second == 0) m.erase(it);
                    }
                }
            }
            return m;
        });
    }

    static ExpansionCache& instance() {
        static ExpansionCache cache;
        return cache;
    }

private:
    using Cache = std::map<Partition, MMap, DescLex>;

    template <typename F>
    const MMap& get(Cache& cache, const Partition& lam, F&& compute) {
        {
            std::lock_guard<std::mutex> lock(mu_);
            auto it = cache.find(lam);
            if (it != cache.end()) return it->second;
        }
        MMap value = compute(lam);
        std::lock_guard<std::mutex> lock(mu_);
        return cache.emplace(lam, std::move(value)).first->second;
    }

    std::mutex mu_;
    Cache h_cache_, e_cache_, p_cache_, s_cache_;
};

const MMap& element_to_m(Basis basis, const Partition& lam) {
    auto& cache = ExpansionCache::instance();
    switch (basis) {
        case Basis::Homogeneous: return cache.h_to_m(lam);
        case Basis::Elementary: return cache.e_to_m(lam);
        case Basis::PowerSum: return cache.p_to_m(lam);
        case Basis::Schur: return cache.s_to_m(lam);
        case Basis::Monomial: break;
    }
    throw InternalError("element_to_m called with the monomial basis");
}

SymFunc to_monomial(const SymFunc& f) {
    if (f.basis() == Basis::Monomial) return f;
    SymFunc out(f.degree(), Basis::Monomial);
    for (const auto& [lam, c] : f.coeffs())
        for (const auto& [mu, w] : element_to_m(f.basis(), lam)) out.add_term(mu, c * w);
    return out;
}

// Triangular peels out of the monomial basis. Each target basis has a known
// unitriangular (or diagonal) structure against m in a lex-compatible order.
SymFunc from_monomial(const SymFunc& f, Basis target) {
    if (target == Basis::Monomial) return f;
    SymFunc out(f.degree(), target);
    if (f.is_zero()) return out;
    auto& cache = ExpansionCache::instance();
    std::map<Partition, Rat, DescLex> residual = f.coeffs();

    auto subtract = [&](const MMap& expansion, const Rat& c) {
        for (const auto& [mu, w] : expansion) {
            auto [it, inserted] = residual.emplace(mu, -c * w);
            if (!inserted) {
                it->second -= c * w;
                if (it->second == 0) residual.erase(it);
            }
        }
    };

    const auto parts_list = partitions_of(f.degree());
    switch (target) {
        case Basis::Schur:
            // K_{lambda,lambda} = 1 and K_{lambda,mu} != 0 only for mu <= lambda.
            for (const Partition& lam : parts_list) {
                auto it = residual.find(lam);
                if (it == residual.end() || it->second == 0) continue;
                Rat c = it->second;
                out.add_term(lam, c);
                subtract(cache.s_to_m(lam), c);
            }
            break;
        case Basis::Elementary:
            // e_lambda = m_{lambda'} + dominance-lower terms (Gale-Ryser).
            for (const Partition& mu : parts_list) {
                auto it = residual.find(mu);
                if (it == residual.end() || it->second == 0) continue;
                Rat c = it->second;
                Partition lam = conjugate(mu);
                out.add_term(lam, c);
                subtract(cache.e_to_m(lam), c);
            }
            break;
        case Basis::PowerSum:
            // p_lambda = P(lambda,lambda) m_lambda + coarser terms; peel from
            // the finest partition upward.
            for (auto pi = parts_list.rbegin(); pi != parts_list.rend(); ++pi) {
                const Partition& mu = *pi;
                auto it = residual.find(mu);
                if (it == residual.end() || it->second == 0) continue;
                Int diag = ordered_set_partition_count(Composition(mu.parts()),
                                                       Composition(mu.parts()));
                Rat c = it->second / Rat(diag);
                out.add_term(mu, c);
                subtract(cache.p_to_m(mu), c);
            }
            break;
        case Basis::Homogeneous: {
            // Route m -> s -> h; the Schur-to-h step is the Jacobi-Trudi
            // expansion of each element.
            SymFunc in_s = from_monomial(f, Basis::Schur);
            for (const auto& [lam, c] : in_s.coeffs())
                for (const auto& [nu, sign] : jt_signed_h(lam, Partition()))
                    out.add_term(nu, c * Rat(sign));
            break;
        }
        case Basis::Monomial: break;
    }
    if (!residual.empty() && target != Basis::Homogeneous)
        throw InternalError("basis peel left a nonzero residual");
    return out;
}

} // namespace

SymFunc to_basis(const SymFunc& f, Basis target) {
    if (f.basis() == target) return f;
    if (f.basis() == Basis::Monomial) return from_monomial(f, target);
    SymFunc m = to_monomial(f);
    return from_monomial(m, target);
}

SymFunc multiply(const SymFunc& f, const SymFunc& g) {
    SymFunc fp = to_basis(f, Basis::PowerSum);
    SymFunc gp = to_basis(g, Basis::PowerSum);
    SymFunc prod(f.degree() + g.degree(), Basis::PowerSum);
    for (const auto& [a, ca] : fp.coeffs())
        for (const auto& [b, cb] : gp.coeffs()) {
            std::vector<int> parts = a.parts();
            parts.insert(parts.end(), b.parts().begin(), b.parts().end());
            std::sort(parts.begin(), parts.end(), std::greater<int>());
            prod.add_term(Partition(std::move(parts)), ca * cb);
        }
    return to_basis(prod, f.basis());
}

SymFunc jacobi_trudi(const SkewShape& shape) {
    SymFunc out(shape.size(), Basis::Homogeneous);
    for (const auto& [nu, sign] : jt_signed_h(shape.outer(), shape.inner()))
        out.add_term(nu, Rat(sign));
    return out;
}

namespace {

Rat rat_pow(const Rat& base, int e) {
    Rat r = 1;
    for (int i = 0; i < e; ++i) r *= base;
    return r;
}

Rat monomial_value(const Partition& lam, const std::vector<Rat>& point) {
    int r = static_cast<int>(point.size());
    if (lam.length() > r) return 0;
    std::vector<int> exps(static_cast<size_t>(r), 0);
    for (int i = 0; i < lam.length(); ++i) exps[static_cast<size_t>(i)] = lam.part(i);
    std::sort(exps.begin(), exps.end());
    Rat total = 0;
    do {
        Rat term = 1;
        for (int i = 0; i < r; ++i) term *= rat_pow(point[static_cast<size_t>(i)], exps[static_cast<size_t>(i)]);
        total += term;
    } while (std::next_permutation(exps.begin(), exps.end()));
    return total;
}

} // namespace

Rat evaluate(const SymFunc& f, const std::vector<Rat>& point) {
    if (point.empty()) throw DomainError("evaluate requires at least one variable");
    SymFunc m = to_monomial(f);
    Rat total = 0;
    for (const auto& [lam, c] : m.coeffs()) total += c * monomial_value(lam, point);
    return total;
}

Int schur_dimension(const Partition& p, int N) {
    if (N <= 0) throw DomainError("schur_dimension requires N >= 1");
    if (p.length() > N) return 0;
    Int num = 1, den = 1;
    auto hooks = hook_lengths(p);
    for (int i = 0; i < p.length(); ++i)
        for (int j = 0; j < p.part(i); ++j) {
            num *= N + j - i;
            den *= hooks[static_cast<size_t>(i)][static_cast<size_t>(j)];
        }
    Int q, r;
    boost::multiprecision::divide_qr(num, den, q, r);
    if (r != 0) throw InternalError("hook-content formula division was not exact");
    return q;
}

Rat hall_inner_product(const SymFunc& f, const SymFunc& g) {
    if (f.degree() != g.degree())
        throw DomainError("hall inner product requires equal degrees");
    SymFunc fp = to_basis(f, Basis::PowerSum);
    SymFunc gp = to_basis(g, Basis::PowerSum);
    Rat total = 0;
    for (const auto& [lam, c] : fp.coeffs()) {
        Rat d = gp.coefficient(lam);
        if (d != 0) total += Rat(z_value(lam)) * c * d;
    }
    return total;
}

SymFunc omega(const SymFunc& f) {
    switch (f.basis()) {
        case Basis::Elementary: {
            SymFunc out(f.degree(), Basis::Homogeneous);
            for (const auto& [lam, c] : f.coeffs()) out.add_term(lam, c);
            return out;
        }
        case Basis::Homogeneous: {
            SymFunc out(f.degree(), Basis::Elementary);
            for (const auto& [lam, c] : f.coeffs()) out.add_term(lam, c);
            return out;
        }
        case Basis::Schur: {
            SymFunc out(f.degree(), Basis::Schur);
            for (const auto& [lam, c] : f.coeffs()) out.add_term(conjugate(lam), c);
            return out;
        }
        case Basis::PowerSum: {
            SymFunc out(f.degree(), Basis::PowerSum);
            for (const auto& [lam, c] : f.coeffs()) {
                int sign_exp = lam.size() - lam.length();
                out.add_term(lam, sign_exp % 2 == 0 ? c : -c);
            }
            return out;
        }
        case Basis::Monomial: {
            SymFunc p = to_basis(f, Basis::PowerSum);
            return to_basis(omega(p), Basis::Monomial);
        }
    }
    throw InternalError("omega: unhandled basis");
}

// ---------------------------------------------------------------------------
// DensePoly

DensePoly::DensePoly(int nvars, int degree_bound) : nvars_(nvars), bound_(degree_bound) {
    if (nvars < 1) throw DomainError("polynomial needs at least one variable");
    if (nvars > kMaxPolyVars)
        throw CapacityError("variable budget " + std::to_string(nvars) + " exceeds supported maximum " +
                            std::to_string(kMaxPolyVars));
    if (degree_bound < 0) throw DomainError("negative degree bound");
    if (nvars_ <= 4) {
        double cells = 1;
        for (int i = 0; i < nvars_; ++i) cells *= bound_ + 1;
        if (cells <= 4e6) {
            is_dense_ = true;
            dense_.assign(static_cast<size_t>(cells), Int(0));
        }
    }
}

size_t DensePoly::encode(const std::vector<int>& exps) const {
    size_t idx = 0, stride = 1;
    for (int i = 0; i < nvars_; ++i) {
        idx += static_cast<size_t>(exps[static_cast<size_t>(i)]) * stride;
        stride *= static_cast<size_t>(bound_) + 1;
    }
    return idx;
}

void DensePoly::decode(size_t idx, std::vector<int>& exps) const {
    size_t base = static_cast<size_t>(bound_) + 1;
    for (int i = 0; i < nvars_; ++i) {
        exps[static_cast<size_t>(i)] = static_cast<int>(idx % base);
        idx /= base;
    }
}

DensePoly::Key DensePoly::make_key(const std::vector<int>& exps) const {
    Key k{};
    for (int i = 0; i < nvars_; ++i) k[static_cast<size_t>(i)] = static_cast<std::uint16_t>(exps[static_cast<size_t>(i)]);
    return k;
}

void DensePoly::add_term(const std::vector<int>& exps, const Int& c) {
    if (c == 0) return;
    int deg = 0;
    for (int i = 0; i < nvars_; ++i) deg += exps[static_cast<size_t>(i)];
    if (deg > bound_) return;
    if (is_dense_) {
        dense_[encode(exps)] += c;
    } else {
        Key k = make_key(exps);
        auto [it, inserted] = sparse_.emplace(k, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) sparse_.erase(it);
        }
    }
}

Int DensePoly::coefficient(const std::vector<int>& exps) const {
    int deg = 0;
    for (int i = 0; i < nvars_; ++i) deg += exps[static_cast<size_t>(i)];
    if (deg > bound_) return 0;
    if (is_dense_) return dense_[encode(exps)];
    auto it = sparse_.find(make_key(exps));
    return it == sparse_.end() ? Int(0) : it->second;
}

DensePoly DensePoly::multiply_truncated(const DensePoly& other) const {
    if (nvars_ != other.nvars_ || bound_ != other.bound_)
        throw InternalError("polynomial shape mismatch in multiply");
    DensePoly out(nvars_, bound_);
    // Gather nonzero terms of the smaller factor once.
    std::vector<std::pair<std::vector<int>, Int>> terms;
    other.for_each([&](const std::vector<int>& e, const Int& c) { terms.emplace_back(e, c); });
    std::vector<int> sum(static_cast<size_t>(nvars_));
    for_each([&](const std::vector<int>& e1, const Int& c1) {
        int d1 = std::accumulate(e1.begin(), e1.end(), 0);
        for (const auto& [e2, c2] : terms) {
            int d2 = std::accumulate(e2.begin(), e2.end(), 0);
            if (d1 + d2 > bound_) continue;
            for (int i = 0; i < nvars_; ++i) sum[static_cast<size_t>(i)] = e1[static_cast<size_t>(i)] + e2[static_cast<size_t>(i)];
            out.add_term(sum, c1 * c2);
        }
    });
    return out;
}

DensePoly DensePoly::substitute_power(int k) const {
    DensePoly out(nvars_, bound_);
    std::vector<int> scaled(static_cast<size_t>(nvars_));
    for_each([&](const std::vector<int>& e, const Int& c) {
        for (int i = 0; i < nvars_; ++i) scaled[static_cast<size_t>(i)] = e[static_cast<size_t>(i)] * k;
        out.add_term(scaled, c);
    });
    return out;
}

void DensePoly::add_scaled(const DensePoly& other, const Int& scale) {
    if (scale == 0) return;
    other.for_each([&](const std::vector<int>& e, const Int& c) { add_term(e, c * scale); });
}

// ---------------------------------------------------------------------------
// Plethysm

namespace {

// m_mu as a polynomial in r variables.
void add_monomial_poly(DensePoly& target, const Partition& mu, const Int& scale) {
    int r = target.nvars();
    if (mu.length() > r) return;
    std::vector<int> exps(static_cast<size_t>(r), 0);
    for (int i = 0; i < mu.length(); ++i) exps[static_cast<size_t>(i)] = mu.part(i);
    std::sort(exps.begin(), exps.end());
    do {
        target.add_term(exps, scale);
    } while (std::next_permutation(exps.begin(), exps.end()));
}

Int lcm_of_denominators(const SymFunc& f) {
    Int l = 1;
    for (const auto& [p, c] : f.coeffs()) l = boost::multiprecision::lcm(l, denominator(c));
    return l;
}

// Coefficient of s_lambda in the symmetric polynomial A (in r variables,
// homogeneous of A's degree): the alternant trick. Sums sgn(sigma) times the
// coefficient of x^{lambda + delta - sigma(delta)} over permutations sigma.
Int alternant_schur_coeff(const DensePoly& A, const Partition& lam) {
    int r = A.nvars();
    std::vector<int> target(static_cast<size_t>(r));
    for (int i = 0; i < r; ++i) target[static_cast<size_t>(i)] = lam.part(i) + (r - 1 - i);
    std::vector<bool> used(static_cast<size_t>(r), false);
    std::vector<int> exps(static_cast<size_t>(r), 0);
    Int total = 0;
    // position i receives delta value (r-1-j) for some unused j
    std::function<void(int, int)> rec = [&](int i, int parity) {
        if (i == r) {
            Int c = A.coefficient(exps);
            if (c != 0) total += (parity % 2 == 0) ? c : -c;
            return;
        }
        for (int j = 0; j < r; ++j) {
            if (used[static_cast<size_t>(j)]) continue;
            int e = target[static_cast<size_t>(i)] - (r - 1 - j);
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
    return total;
}

} // namespace

SymFunc plethysm(const SymFunc& f, const SymFunc& g, int var_budget, int degree_cap) {
    if (var_budget < 1) throw DomainError("plethysm variable budget must be >= 1");
    long long total_degree = static_cast<long long>(f.degree()) * g.degree();
    if (total_degree > degree_cap)
        throw CapacityError("plethysm degree " + std::to_string(total_degree) + " exceeds cap " +
                            std::to_string(degree_cap) + "; raise the cap to opt in");
    // Scalars compose trivially.
    if (f.degree() == 0) {
        SymFunc out(0, Basis::Schur);
        out.add_term(Partition(), f.coefficient(Partition()));
        return out;
    }
    if (g.degree() == 0) {
        Rat c = g.coefficient(Partition());
        SymFunc fp = to_basis(f, Basis::PowerSum);
        Rat total = 0;
        for (const auto& [alpha, w] : fp.coeffs()) total += w * rat_pow(c, alpha.length());
        SymFunc out(0, Basis::Schur);
        out.add_term(Partition(), total);
        return out;
    }

    int D = static_cast<int>(total_degree);
    int r = var_budget;
    SymFunc fp = to_basis(f, Basis::PowerSum);
    SymFunc gm = to_basis(g, Basis::Monomial);

    Int g_den = lcm_of_denominators(gm);
    DensePoly g_poly(r, D);
    for (const auto& [mu, c] : gm.coeffs()) {
        Rat scaled = c * Rat(g_den);
        add_monomial_poly(g_poly, mu, numerator(scaled));
    }

    Int f_den = lcm_of_denominators(fp);
    int L = f.degree(); // max possible length of alpha
    DensePoly acc(r, D);
    std::map<int, DensePoly> power_cache; // part value -> g(x^k)
    for (const auto& [alpha, c] : fp.coeffs()) {
        DensePoly term(r, D);
        std::vector<int> zero(static_cast<size_t>(r), 0);
        term.add_term(zero, 1);
        for (int i = 0; i < alpha.length(); ++i) {
            int k = alpha.part(i);
            auto it = power_cache.find(k);
            if (it == power_cache.end())
                it = power_cache.emplace(k, g_poly.substitute_power(k)).first;
            term = term.multiply_truncated(it->second);
        }
        // weight = c * f_den * g_den^{L - ell(alpha)}; dividing the final
        // accumulator by f_den * g_den^L restores the exact value.
        Rat w = c * Rat(f_den);
        Int weight = numerator(w);
        for (int i = alpha.length(); i < L; ++i) weight *= g_den;
        acc.add_scaled(term, weight);
    }
    Int world = f_den;
    for (int i = 0; i < L; ++i) world *= g_den;

    SymFunc out(D, Basis::Schur);
    for (const Partition& lam :
         enumerate_partitions(D, PartitionConstraints{std::nullopt, r}, std::max(D, kDefaultPartitionEnumCap))) {
        Int raw = alternant_schur_coeff(acc, lam);
        if (raw == 0) continue;
        out.add_term(lam, Rat(raw) / Rat(world));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Cauchy identity check

bool cauchy_check(int n, int r, int s) {
    if (n < 0 || r < 1 || s < 1) throw DomainError("cauchy_check: bad arguments");
    using Poly = std::map<std::vector<int>, Int>;
    int nv = r + s;

    // Right side: product over (i,j) of sum_k (x_i y_j)^k, truncated at total
    // x-degree n (x and y degrees agree in every term).
    Poly rhs;
    rhs.emplace(std::vector<int>(static_cast<size_t>(nv), 0), 1);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < s; ++j) {
            Poly next;
            for (const auto& [e, c] : rhs) {
                int xdeg = 0;
                for (int t = 0; t < r; ++t) xdeg += e[static_cast<size_t>(t)];
                for (int k = 0; xdeg + k <= n; ++k) {
                    std::vector<int> e2 = e;
                    e2[static_cast<size_t>(i)] += k;
                    e2[static_cast<size_t>(r + j)] += k;
                    next[e2] += c;
                }
            }
            rhs = std::move(next);
        }

    // Left side, degree by degree.
    for (int d = 0; d <= n; ++d) {
        Poly lhs;
        for (const Partition& lam : enumerate_partitions(d)) {
            if (lam.length() > std::min(r, s)) continue;
            // expand s_lambda in x-variables and y-variables via SSYT contents
            std::vector<std::pair<std::vector<int>, Int>> sx, sy;
            {
                std::map<std::vector<int>, Int> mx, my;
                for_each_ssyt_content(lam, r, [&](const std::vector<int>& content) { mx[content] += 1; });
                for_each_ssyt_content(lam, s, [&](const std::vector<int>& content) { my[content] += 1; });
                sx.assign(mx.begin(), mx.end());
                sy.assign(my.begin(), my.end());
            }
            for (const auto& [ex, cx] : sx)
                for (const auto& [ey, cy] : sy) {
                    std::vector<int> e(static_cast<size_t>(nv), 0);
                    for (int t = 0; t < r; ++t) e[static_cast<size_t>(t)] = ex[static_cast<size_t>(t)];
                    for (int t = 0; t < s; ++t) e[static_cast<size_t>(r + t)] = ey[static_cast<size_t>(t)];
                    Int& slot = lhs[e];
                    slot += cx * cy;
                    if (slot == 0) lhs.erase(e);
                }
        }
        // compare with the degree-(d,d) component of rhs
        for (const auto& [e, c] : rhs) {
            int xdeg = 0;
            for (int t = 0; t < r; ++t) xdeg += e[static_cast<size_t>(t)];
            if (xdeg != d) continue;
            auto it = lhs.find(e);
            if (c == 0) {
                if (it != lhs.end() && it->second != 0) return false;
                continue;
            }
            if (it == lhs.end() || it->second != c) return false;
            lhs.erase(it);
        }
        for (const auto& [e, c] : lhs)
            if (c != 0) return false;
    }
    return true;
}

} // namespace symcoef

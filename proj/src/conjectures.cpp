#include "symcoef/conjectures.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <sstream>

#include <json.hpp>

namespace symcoef {

namespace {

using Json = nlohmann::json;

class SuiteTimer {
public:
    explicit SuiteTimer(VerificationReport& report) : report_(report) {}
    ~SuiteTimer() {
        auto end = std::chrono::steady_clock::now();
        report_.elapsed_ms =
            std::chrono::duration_cast<std::chrono::duration<double, std::milli>>(end - start_)
                .count();
    }

private:
    VerificationReport& report_;
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::vector<Partition> self_conjugate_partitions(int n) {
    std::vector<Partition> out;
    for (const Partition& p : enumerate_partitions(n))
        if (conjugate(p) == p) out.push_back(p);
    return out;
}

Partition rectangle(int part, int rows) {
    return Partition(std::vector<int>(static_cast<size_t>(rows), part));
}

Partition partition_add(const Partition& a, const Partition& b) {
    int m = std::max(a.length(), b.length());
    std::vector<int> parts(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) parts[static_cast<size_t>(i)] = a.part(i) + b.part(i);
    return Partition(std::move(parts));
}

Partition vertical_add(const Partition& a, const Partition& b) {
    return conjugate(partition_add(conjugate(a), conjugate(b)));
}

std::string triple_str(const Partition& a, const Partition& b, const Partition& c) {
    return "(" + format_partition(a) + " | " + format_partition(b) + " | " + format_partition(c) +
           ")";
}

} // namespace

std::string VerificationReport::to_json() const {
    Json j;
    j["suite"] = suite;
    Json params = Json::object();
    for (const auto& [k, v] : parameters) params[k] = v;
    j["parameters"] = std::move(params);
    j["checked"] = checked;
    Json fails = Json::array();
    for (const auto& f : failures)
        fails.push_back({{"inputs", f.inputs}, {"lhs", f.lhs}, {"rhs", f.rhs}});
    j["failures"] = std::move(fails);
    j["elapsed_ms"] = elapsed_ms;
    if (seed) j["seed"] = *seed;
    return j.dump();
}

std::string VerificationReport::to_text() const {
    std::ostringstream os;
    os << "suite " << suite << ": " << (passed() ? "PASS" : "FAIL") << " (checked " << checked
       << ", " << failures.size() << " failures, " << elapsed_ms << " ms)";
    for (const auto& [k, v] : parameters) os << "\n  " << k << " = " << v;
    if (seed) os << "\n  seed = " << *seed;
    for (const auto& f : failures)
        os << "\n  counterexample " << f.inputs << ": lhs " << f.lhs << " vs rhs " << f.rhs;
    return os.str();
}

VerificationReport saxl_check(int k, const CharTableProvider& tables) {
    if (k < 1) throw DomainError("saxl_check: k must be >= 1");
    VerificationReport report;
    report.suite = "saxl";
    report.parameters.emplace_back("k", std::to_string(k));
    SuiteTimer timer(report);
    Partition delta = staircase(k);
    int n = delta.size();
    for (const Partition& mu : enumerate_partitions(n)) {
        Int g = kronecker(TripleQuery{delta, delta, mu}, tables);
        ++report.checked;
        if (g == 0)
            report.failures.push_back({triple_str(delta, delta, mu), g.str(), "> 0"});
    }
    return report;
}

VerificationReport tensor_square_search(int n, const CharTableProvider& tables) {
    if (n < 1) throw DomainError("tensor_square_search: n must be >= 1");
    VerificationReport report;
    report.suite = "tensor_square";
    report.parameters.emplace_back("n", std::to_string(n));
    SuiteTimer timer(report);
    auto mus = enumerate_partitions(n);
    std::vector<std::string> witnesses;
    for (const Partition& lam : self_conjugate_partitions(n)) {
        ++report.checked;
        bool covers = true;
        for (const Partition& mu : mus) {
            if (kronecker(TripleQuery{lam, lam, mu}, tables) == 0) {
                covers = false;
                break;
            }
        }
        if (covers) witnesses.push_back(format_partition(lam));
    }
    std::string joined;
    for (const auto& w : witnesses) {
        if (!joined.empty()) joined += "; ";
        joined += w;
    }
    report.parameters.emplace_back("witnesses", joined);
    // The conjecture only claims witnesses from n >= 9 on.
    if (n >= 9 && witnesses.empty())
        report.failures.push_back({"n=" + std::to_string(n), "0 witnesses", ">= 1 witness"});
    return report;
}

VerificationReport char_bound_check(int n, const CharTableProvider& tables) {
    if (n < 1) throw DomainError("char_bound_check: n must be >= 1");
    VerificationReport report;
    report.suite = "char_bound";
    report.parameters.emplace_back("n", std::to_string(n));
    SuiteTimer timer(report);
    auto table = tables.table(n);
    for (const Partition& lam : self_conjugate_partitions(n)) {
        Partition hooks(principal_hooks(lam).parts());
        size_t hook_idx = table->index_of(hooks);
        for (const Partition& mu : enumerate_partitions(n)) {
            Int g = kronecker(TripleQuery{lam, lam, mu}, tables);
            Int chi = table->value(table->index_of(mu), hook_idx);
            if (chi < 0) chi = -chi;
            ++report.checked;
            if (g < chi)
                report.failures.push_back(
                    {"g" + triple_str(lam, lam, mu) + " vs |chi^mu(" + format_partition(hooks) + ")|",
                     g.str(), chi.str()});
        }
    }
    return report;
}

VerificationReport foulkes_check(int n, int d, int var_budget) {
    if (n < 1 || d <= n) throw DomainError("foulkes_check requires d > n >= 1");
    VerificationReport report;
    report.suite = "foulkes";
    report.parameters.emplace_back("n", std::to_string(n));
    report.parameters.emplace_back("d", std::to_string(d));
    report.parameters.emplace_back("var_budget", std::to_string(var_budget));
    SuiteTimer timer(report);
    SymFunc hd = SymFunc::element(Basis::Homogeneous, Partition({d}));
    SymFunc hn = SymFunc::element(Basis::Homogeneous, Partition({n}));
    SymFunc dn = plethysm(hd, hn, var_budget);
    SymFunc nd = plethysm(hn, hd, var_budget);
    for (const Partition& lam :
         enumerate_partitions(n * d, PartitionConstraints{std::nullopt, var_budget})) {
        Rat a = dn.coefficient(lam);
        Rat b = nd.coefficient(lam);
        if (!is_integer(a) || !is_integer(b))
            throw InternalError("foulkes_check: non-integral plethysm coefficient");
        ++report.checked;
        if (a < b)
            report.failures.push_back({"lambda=" + format_partition(lam),
                                       numerator(a).str(), numerator(b).str()});
    }
    return report;
}

VerificationReport dip_identity_check(int n) {
    if (n < 2) throw DomainError("dip_identity_check requires n >= 2");
    VerificationReport report;
    report.suite = "dip_identity";
    report.parameters.emplace_back("n", std::to_string(n));
    SuiteTimer timer(report);
    Partition lam({n * n - 2, n, 2});
    report.parameters.emplace_back("lambda", format_partition(lam));
    Int lhs = pleth_a(lam, n + 1, n, 3);
    Int rhs = pleth_a(lam, n, n + 1, 3) + 1;
    ++report.checked;
    if (lhs != rhs)
        report.failures.push_back({"lambda=" + format_partition(lam), lhs.str(), rhs.str()});
    return report;
}

VerificationReport kron_pleth_check(const Partition& rho, int n, int d,
                                    const CharTableProvider& tables) {
    if (d < 2) throw DomainError("kron_pleth_check requires d >= 2");
    if (n < rho.size()) throw DomainError("kron_pleth_check requires n >= |rho|");
    VerificationReport report;
    report.suite = "kron_pleth";
    report.parameters.emplace_back("rho", format_partition(rho));
    report.parameters.emplace_back("n", std::to_string(n));
    report.parameters.emplace_back("d", std::to_string(d));
    SuiteTimer timer(report);
    std::vector<int> parts;
    parts.push_back(n * d - rho.size());
    for (int i = 0; i < rho.length(); ++i) parts.push_back(rho.part(i));
    Partition lam(std::move(parts));
    Partition rect = rectangle(n, d);
    Int g = kronecker(TripleQuery{lam, rect, rect}, tables);
    Int a = pleth_a(lam, d, n, std::max(lam.length(), 1));
    ++report.checked;
    if (g < a)
        report.failures.push_back({"g" + triple_str(lam, rect, rect) + " vs a_lambda(d[n])",
                                   g.str(), a.str()});
    return report;
}

VerificationReport semigroup_check(int samples, int size_bound, std::uint64_t seed,
                                   const CharTableProvider& tables) {
    if (samples < 1 || size_bound < 2)
        throw DomainError("semigroup_check requires samples >= 1 and size_bound >= 2");
    VerificationReport report;
    report.suite = "semigroup";
    report.parameters.emplace_back("samples", std::to_string(samples));
    report.parameters.emplace_back("size_bound", std::to_string(size_bound));
    report.seed = seed;
    SuiteTimer timer(report);

    std::mt19937_64 rng(seed);
    // modulo reduction keeps the sequence platform-independent
    auto draw = [&rng](std::uint64_t m) { return static_cast<int>(rng() % m); };

    std::vector<std::vector<Partition>> pool(static_cast<size_t>(size_bound) + 1);
    for (int m = 1; m <= size_bound; ++m) pool[static_cast<size_t>(m)] = enumerate_partitions(m);

    auto sample_positive_triple = [&](int m) {
        const auto& ps = pool[static_cast<size_t>(m)];
        for (int attempt = 0; attempt < 10000; ++attempt) {
            TripleQuery q{ps[static_cast<size_t>(draw(ps.size()))],
                          ps[static_cast<size_t>(draw(ps.size()))],
                          ps[static_cast<size_t>(draw(ps.size()))]};
            Int g = kronecker(q, tables);
            if (g > 0) return std::make_pair(q, g);
        }
        throw InternalError("semigroup_check: failed to sample a positive triple");
    };

    for (int s = 0; s < samples; ++s) {
        int n1 = 1 + draw(static_cast<std::uint64_t>(size_bound - 1));
        int n2 = 1 + draw(static_cast<std::uint64_t>(size_bound - n1));
        auto [t1, g1] = sample_positive_triple(n1);
        auto [t2, g2] = sample_positive_triple(n2);
        ++report.checked;

        TripleQuery sum{partition_add(t1.first, t2.first), partition_add(t1.second, t2.second),
                        partition_add(t1.third, t2.third)};
        Int g_sum = kronecker(sum, tables);
        Int expect = g1 > g2 ? g1 : g2;
        if (g_sum < expect)
            report.failures.push_back({"g" + triple_str(sum.first, sum.second, sum.third) +
                                           " from " + triple_str(t1.first, t1.second, t1.third) +
                                           " + " + triple_str(t2.first, t2.second, t2.third),
                                       g_sum.str(), ">= " + expect.str()});

        TripleQuery mixed{partition_add(t1.first, t2.first),
                          vertical_add(t1.second, t2.second), vertical_add(t1.third, t2.third)};
        Int g_mixed = kronecker(mixed, tables);
        if (g_mixed <= 0)
            report.failures.push_back({"mixed g" +
                                           triple_str(mixed.first, mixed.second, mixed.third),
                                       g_mixed.str(), "> 0"});
    }
    return report;
}

} // namespace symcoef

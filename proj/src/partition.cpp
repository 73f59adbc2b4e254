#include "symcoef/partition.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace symcoef {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    // Tolerate trailing zeros (callers often build padded vectors) but store
    // the canonical form.
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw DomainError("partition parts must be positive");
        if (i > 0 && parts_[i - 1] < parts_[i])
            throw DomainError("partition parts must be weakly decreasing");
    }
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

bool DescLex::operator()(const Partition& a, const Partition& b) const {
    // a precedes b iff a is lexicographically greater (missing parts read 0).
    const auto& x = a.parts();
    const auto& y = b.parts();
    size_t m = std::max(x.size(), y.size());
    for (size_t i = 0; i < m; ++i) {
        int xi = i < x.size() ? x[i] : 0;
        int yi = i < y.size() ? y[i] : 0;
        if (xi != yi) return xi > yi;
    }
    return false;
}

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int v : parts_)
        if (v < 0) throw DomainError("composition parts must be nonnegative");
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Composition::to_partition() const {
    std::vector<int> v = parts_;
    std::sort(v.begin(), v.end(), std::greater<int>());
    while (!v.empty() && v.back() == 0) v.pop_back();
    return Partition(std::move(v));
}

SkewShape::SkewShape(Partition outer, Partition inner)
    : outer_(std::move(outer)), inner_(std::move(inner)) {
    if (inner_.length() > outer_.length())
        throw DomainError("skew shape: inner partition longer than outer");
    for (int i = 0; i < inner_.length(); ++i)
        if (inner_.part(i) > outer_.part(i))
            throw DomainError("skew shape: inner partition not contained in outer");
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

std::vector<int> parse_int_parts(const std::string& text, const char* what) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    std::vector<int> parts;
    if (s.empty()) return parts;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty())
            throw DomainError(std::string("malformed ") + what + ": empty entry in '" + text + "'");
        size_t caret = item.find('^');
        std::string base = caret == std::string::npos ? item : item.substr(0, caret);
        std::string rep = caret == std::string::npos ? "1" : item.substr(caret + 1);
        size_t pos = 0;
        int value = 0, count = 0;
        try {
            value = std::stoi(base, &pos);
            if (pos != base.size()) throw std::invalid_argument(base);
            pos = 0;
            count = std::stoi(rep, &pos);
            if (pos != rep.size()) throw std::invalid_argument(rep);
        } catch (const std::exception&) {
            throw DomainError(std::string("malformed ") + what + ": '" + text + "'");
        }
        if (count < 0)
            throw DomainError(std::string("malformed ") + what + ": negative repeat in '" + text + "'");
        for (int i = 0; i < count; ++i) parts.push_back(value);
    }
    return parts;
}

} // namespace

Partition parse_partition(const std::string& text) {
    return Partition(parse_int_parts(text, "partition"));
}

Composition parse_composition(const std::string& text) {
    return Composition(parse_int_parts(text, "composition"));
}

std::string format_partition(const Partition& p) {
    std::string out;
    for (int i = 0; i < p.length(); ++i) {
        if (i) out.push_back(',');
        out += std::to_string(p.part(i));
    }
    return out;
}

std::string format_composition(const Composition& c) {
    std::string out;
    for (size_t i = 0; i < c.parts().size(); ++i) {
        if (i) out.push_back(',');
        out += std::to_string(c.parts()[i]);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Operations

Partition conjugate(const Partition& p) {
    if (p.empty()) return Partition();
    std::vector<int> conj(static_cast<size_t>(p.part(0)), 0);
    for (int j = 0; j < p.part(0); ++j)
        for (int i = 0; i < p.length(); ++i)
            if (p.part(i) >= j + 1) ++conj[static_cast<size_t>(j)];
    return Partition(std::move(conj));
}

bool dominates(const Partition& p, const Partition& q) {
    if (p.size() != q.size())
        throw DomainError("dominance is defined for partitions of equal size");
    long long sp = 0, sq = 0;
    int m = std::max(p.length(), q.length());
    for (int i = 0; i < m; ++i) {
        sp += p.part(i);
        sq += q.part(i);
        if (sp < sq) return false;
    }
    return true;
}

std::vector<std::vector<int>> hook_lengths(const Partition& p) {
    Partition conj = conjugate(p);
    std::vector<std::vector<int>> hooks(static_cast<size_t>(p.length()));
    for (int i = 0; i < p.length(); ++i) {
        hooks[static_cast<size_t>(i)].resize(static_cast<size_t>(p.part(i)));
        for (int j = 0; j < p.part(i); ++j)
            hooks[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                p.part(i) - (j + 1) + conj.part(j) - (i + 1) + 1;
    }
    return hooks;
}

namespace {

void enumerate_rec(int remaining, int max_part, int max_length,
                   std::vector<int>& prefix, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(Partition(prefix));
        return;
    }
    if (max_length == 0) return;
    for (int k = std::min(remaining, max_part); k >= 1; --k) {
        // Remaining cells must fit in a k x (max_length-1) box.
        if (static_cast<long long>(k) * (max_length - 1) < remaining - k) continue;
        prefix.push_back(k);
        enumerate_rec(remaining - k, k, max_length - 1, prefix, out);
        prefix.pop_back();
    }
}

} // namespace

std::vector<Partition> enumerate_partitions(int n, const PartitionConstraints& constraints,
                                            int cap) {
    if (n < 0) throw DomainError("enumerate_partitions: negative n");
    if (n > cap)
        throw CapacityError("partition enumeration refused for n = " + std::to_string(n) +
                            " (cap " + std::to_string(cap) + "); raise it with --cap");
    int max_part = constraints.max_part.value_or(n);
    int max_length = constraints.max_length.value_or(n);
    std::vector<Partition> out;
    if (n == 0) {
        out.push_back(Partition());
        return out;
    }
    if (max_part <= 0 || max_length <= 0) return out;
    std::vector<int> prefix;
    enumerate_rec(n, max_part, max_length, prefix, out);
    return out;
}

Int partition_count(int n) {
    if (n < 0) return 0;
    // Euler's pentagonal recurrence:
    // p(n) = sum_{k>=1} (-1)^{k-1} [ p(n - k(3k-1)/2) + p(n - k(3k+1)/2) ].
    std::vector<Int> p(static_cast<size_t>(n) + 1);
    p[0] = 1;
    for (int m = 1; m <= n; ++m) {
        Int acc = 0;
        for (int k = 1;; ++k) {
            long long g1 = static_cast<long long>(k) * (3 * k - 1) / 2;
            long long g2 = static_cast<long long>(k) * (3 * k + 1) / 2;
            if (g1 > m && g2 > m) break;
            Int term = 0;
            if (g1 <= m) term += p[static_cast<size_t>(m - g1)];
            if (g2 <= m) term += p[static_cast<size_t>(m - g2)];
            if (k % 2 == 1)
                acc += term;
            else
                acc -= term;
        }
        p[static_cast<size_t>(m)] = acc;
    }
    return p[static_cast<size_t>(n)];
}

Int partitions_in_rectangle(int r, int a, int b) {
    if (r < 0) return 0;
    if (r == 0) return 1;
    if (a <= 0 || b <= 0) return 0;
    // Unbounded knapsack over part values 1..a; each copy of a part consumes
    // one of the b length slots. t[s][len] = partitions of s into exactly len
    // parts drawn from the values processed so far.
    std::vector<std::vector<Int>> t(static_cast<size_t>(r) + 1,
                                    std::vector<Int>(static_cast<size_t>(b) + 1));
    t[0][0] = 1;
    for (int v = 1; v <= a; ++v)
        for (int s = v; s <= r; ++s)
            for (int len = 1; len <= b; ++len)
                t[static_cast<size_t>(s)][static_cast<size_t>(len)] +=
                    t[static_cast<size_t>(s - v)][static_cast<size_t>(len - 1)];
    Int total = 0;
    for (int len = 0; len <= b; ++len) total += t[static_cast<size_t>(r)][static_cast<size_t>(len)];
    return total;
}

std::vector<Int> q_binomial(int a, int b) {
    if (a < 0 || b < 0) throw DomainError("q_binomial: negative arguments");
    std::vector<Int> coeffs(static_cast<size_t>(a) * static_cast<size_t>(b) + 1);
    for (size_t r = 0; r < coeffs.size(); ++r)
        coeffs[r] = partitions_in_rectangle(static_cast<int>(r), a, b);
    return coeffs;
}

int durfee(const Partition& p) {
    int d = 0;
    while (d < p.length() && p.part(d) >= d + 1) ++d;
    return d;
}

Composition principal_hooks(const Partition& p) {
    if (!(conjugate(p) == p))
        throw DomainError("principal_hooks requires a self-conjugate partition");
    int d = durfee(p);
    std::vector<int> hooks(static_cast<size_t>(d));
    for (int i = 0; i < d; ++i) hooks[static_cast<size_t>(i)] = 2 * p.part(i) - 2 * i - 1;
    return Composition(std::move(hooks));
}

Partition staircase(int k) {
    if (k < 0) throw DomainError("staircase: negative k");
    std::vector<int> parts;
    for (int v = k; v >= 1; --v) parts.push_back(v);
    return Partition(std::move(parts));
}

Int z_value(const Partition& p) {
    Int z = 1;
    int i = 0;
    while (i < p.length()) {
        int v = p.part(i);
        int mult = 0;
        while (i < p.length() && p.part(i) == v) {
            ++mult;
            ++i;
        }
        for (int m = 1; m <= mult; ++m) z *= static_cast<long long>(v) * m;
    }
    return z;
}

} // namespace symcoef

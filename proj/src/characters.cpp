#include "symcoef/characters.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>

#include <json.hpp>

namespace symcoef {

namespace {

using Json = nlohmann::json;

std::vector<int> clean_cycle_type(const Composition& alpha) {
    std::vector<int> a;
    for (int v : alpha.parts())
        if (v > 0) a.push_back(v);
    std::sort(a.begin(), a.end(), std::greater<int>()); // largest-first heuristic
    return a;
}

// Border-strip removal on the beta set B_i = shape_i + (L-1-i). Removing a
// strip of length k replaces some b in B by b-k (if absent); the strip height
// is the number of beta values strictly between them.
struct MnKey {
    std::vector<int> shape;
    size_t idx;
    bool operator<(const MnKey& o) const {
        if (idx != o.idx) return idx < o.idx;
        return shape < o.shape;
    }
};

Int mn_rec(const std::vector<int>& shape, const std::vector<int>& alpha, size_t idx,
           std::map<MnKey, Int>& memo) {
    if (idx == alpha.size()) return shape.empty() ? 1 : 0;
    MnKey key{shape, idx};
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;

    int k = alpha[idx];
    int L = static_cast<int>(shape.size());
    std::vector<int> beta(static_cast<size_t>(L));
    for (int i = 0; i < L; ++i) beta[static_cast<size_t>(i)] = shape[static_cast<size_t>(i)] + (L - 1 - i);

    Int total = 0;
    for (int i = 0; i < L; ++i) {
        int b = beta[static_cast<size_t>(i)];
        int t = b - k;
        if (t < 0) continue;
        bool occupied = false;
        int height = 0;
        for (int j = 0; j < L; ++j) {
            int v = beta[static_cast<size_t>(j)];
            if (v == t) occupied = true;
            if (v > t && v < b) ++height;
        }
        if (occupied) continue;
        std::vector<int> nb = beta;
        nb[static_cast<size_t>(i)] = t;
        std::sort(nb.begin(), nb.end(), std::greater<int>());
        std::vector<int> next(static_cast<size_t>(L));
        for (int j = 0; j < L; ++j) next[static_cast<size_t>(j)] = nb[static_cast<size_t>(j)] - (L - 1 - j);
        while (!next.empty() && next.back() == 0) next.pop_back();
        Int sub = mn_rec(next, alpha, idx + 1, memo);
        if (height % 2 == 0)
            total += sub;
        else
            total -= sub;
    }
    memo.emplace(std::move(key), total);
    return total;
}

} // namespace

Int character_mn(const Partition& shape, const Composition& alpha) {
    if (shape.size() != alpha.size())
        throw DomainError("character: |shape| must equal the cycle type total");
    std::vector<int> a = clean_cycle_type(alpha);
    std::map<MnKey, Int> memo;
    return mn_rec(shape.parts(), a, 0, memo);
}

Int character_jt(const Partition& shape, const Composition& alpha) {
    if (shape.size() != alpha.size())
        throw DomainError("character: |shape| must equal the cycle type total");
    int L = shape.length();
    if (L > kCharacterJtMaxLength)
        throw CapacityError("character_jt refuses ell(lambda) = " + std::to_string(L) + " > " +
                            std::to_string(kCharacterJtMaxLength) + "; use the MN route");
    if (L == 0) return alpha.size() == 0 ? 1 : 0;

    Composition items(alpha.parts());
    std::map<std::vector<int>, Int> p_memo; // keyed by sorted bin vector
    auto p_count = [&](std::vector<int> bins) {
        std::sort(bins.begin(), bins.end());
        auto it = p_memo.find(bins);
        if (it != p_memo.end()) return it->second;
        Int v = ordered_set_partition_count(items, Composition(bins));
        p_memo.emplace(std::move(bins), v);
        return v;
    };

    Int total = 0;
    std::vector<bool> used(static_cast<size_t>(L), false);
    std::vector<int> targets(static_cast<size_t>(L));
    // assign sigma(i) = j+1 over 0-based positions, pruning negative targets
    std::function<void(int, int)> rec = [&](int i, int parity) {
        if (i == L) {
            Int p = p_count(targets);
            if (p != 0) total += (parity % 2 == 0) ? p : -p;
            return;
        }
        for (int j = 0; j < L; ++j) {
            if (used[static_cast<size_t>(j)]) continue;
            int t = shape.part(i) + j - i;
            if (t < 0) continue; // bins with negative sums hold nothing
            int inv = 0;
            for (int k = j + 1; k < L; ++k)
                if (used[static_cast<size_t>(k)]) ++inv;
            used[static_cast<size_t>(j)] = true;
            targets[static_cast<size_t>(i)] = t;
            rec(i + 1, parity + inv);
            used[static_cast<size_t>(j)] = false;
        }
    };
    rec(0, 0);
    return total;
}

SymFunc power_sum_to_schur(const Partition& alpha) {
    int n = alpha.size();
    SymFunc out(n, Basis::Schur);
    Composition a(alpha.parts());
    for (const Partition& lam : enumerate_partitions(n)) {
        Int c = character_mn(lam, a);
        if (c != 0) out.add_term(lam, Rat(c));
    }
    return out;
}

// ---------------------------------------------------------------------------
// CharacterTable

size_t CharacterTable::index_of(const Partition& p) const {
    auto it = index_.find(p);
    if (it == index_.end())
        throw DomainError("partition " + format_partition(p) + " is not indexed by this table (n=" +
                          std::to_string(n_) + ")");
    return it->second;
}

CharacterTable CharacterTable::compute(int n) {
    CharacterTable t;
    t.n_ = n;
    t.partitions_ = enumerate_partitions(n);
    for (size_t i = 0; i < t.partitions_.size(); ++i) t.index_.emplace(t.partitions_[i], i);
    size_t count = t.partitions_.size();
    t.values_.assign(count, std::vector<std::int64_t>(count, 0));
    for (size_t a = 0; a < count; ++a) {
        // one memo per class column, shared across all rows
        std::vector<int> alpha = t.partitions_[a].parts();
        std::map<MnKey, Int> memo;
        for (size_t l = 0; l < count; ++l) {
            Int v = mn_rec(t.partitions_[l].parts(), alpha, 0, memo);
            t.values_[l][a] = v.convert_to<std::int64_t>();
        }
    }
    return t;
}

void CharacterTable::validate() const {
    if (n_ < 1) throw IntegrityError("character table: bad n");
    auto expected = enumerate_partitions(n_);
    if (partitions_ != expected)
        throw IntegrityError("character table: partition list is not canonical");
    size_t count = expected.size();
    if (values_.size() != count) throw IntegrityError("character table: bad row count");
    for (const auto& row : values_)
        if (row.size() != count) throw IntegrityError("character table: bad column count");
    // the trivial character row must be all ones
    for (size_t a = 0; a < count; ++a)
        if (values_[0][a] != 1) throw IntegrityError("character table: trivial row corrupted");
}

std::string CharacterTable::serialize() const {
    Json j;
    j["version"] = 1;
    j["n"] = n_;
    Json parts = Json::array();
    for (const auto& p : partitions_) parts.push_back(p.parts());
    j["partitions"] = std::move(parts);
    j["values"] = values_;
    return j.dump();
}

CharacterTable CharacterTable::deserialize(const std::string& text) {
    CharacterTable t;
    try {
        Json j = Json::parse(text);
        if (j.at("version").get<int>() != 1) throw IntegrityError("character table: bad version");
        t.n_ = j.at("n").get<int>();
        for (const auto& arr : j.at("partitions"))
            t.partitions_.push_back(Partition(arr.get<std::vector<int>>()));
        t.values_ = j.at("values").get<std::vector<std::vector<std::int64_t>>>();
    } catch (const IntegrityError&) {
        throw;
    } catch (const std::exception& e) {
        throw IntegrityError(std::string("character table: unreadable cache: ") + e.what());
    }
    for (size_t i = 0; i < t.partitions_.size(); ++i) t.index_.emplace(t.partitions_[i], i);
    t.validate();
    return t;
}

// ---------------------------------------------------------------------------
// CharTableProvider

CharTableProvider::CharTableProvider(std::optional<std::filesystem::path> cache_dir, int max_n)
    : dir_(std::move(cache_dir)), max_n_(max_n) {
    if (max_n_ < 1) throw DomainError("character table bound must be >= 1");
    if (max_n_ > kHardMaxTableN)
        throw CapacityError("character table bound " + std::to_string(max_n_) +
                            " exceeds the hard cap " + std::to_string(kHardMaxTableN));
}

std::string CharTableProvider::cache_file_name(int n) {
    return "chartable-v1-n" + std::to_string(n) + ".json";
}

std::shared_ptr<const CharacterTable> CharTableProvider::table(int n) const {
    if (n < 1) throw DomainError("character table requires n >= 1");
    if (n > max_n_)
        throw CapacityError("character table for n = " + std::to_string(n) +
                            " exceeds the bound " + std::to_string(max_n_) +
                            "; raise it with --max-n");
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = mem_.find(n);
        if (it != mem_.end()) return it->second;
    }

    std::shared_ptr<const CharacterTable> result;
    if (dir_) {
        std::filesystem::path file = *dir_ / cache_file_name(n);
        std::error_code ec;
        if (std::filesystem::exists(file, ec)) {
            std::ifstream in(file);
            std::stringstream buf;
            buf << in.rdbuf();
            try {
                auto t = CharacterTable::deserialize(buf.str());
                if (t.n() != n) throw IntegrityError("character table: wrong n in cache file");
                result = std::make_shared<CharacterTable>(std::move(t));
            } catch (const IntegrityError&) {
                result.reset(); // corrupted: fall through to recompute
            }
        }
    }
    bool fresh = false;
    if (!result) {
        result = std::make_shared<CharacterTable>(CharacterTable::compute(n));
        fresh = true;
    }
    if (fresh && dir_) {
        std::error_code ec;
        std::filesystem::create_directories(*dir_, ec);
        std::filesystem::path file = *dir_ / cache_file_name(n);
        // unique temp name per writer, atomic rename into place
        static std::mt19937_64 rng(std::random_device{}());
        std::filesystem::path tmp;
        {
            std::lock_guard<std::mutex> lock(mu_);
            tmp = *dir_ / (cache_file_name(n) + ".tmp" + std::to_string(rng()));
        }
        std::ofstream out(tmp);
        out << result->serialize();
        out.close();
        if (out) std::filesystem::rename(tmp, file, ec);
        if (ec) std::filesystem::remove(tmp, ec);
    }
    std::lock_guard<std::mutex> lock(mu_);
    auto [it, inserted] = mem_.emplace(n, result);
    return it->second;
}

} // namespace symcoef

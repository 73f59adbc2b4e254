#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "symcoef/partition.hpp"
#include "symcoef/symfunc.hpp"

namespace symcoef {

inline constexpr int kDefaultMaxTableN = 18;
inline constexpr int kHardMaxTableN = 26;
inline constexpr int kCharacterJtMaxLength = 9;

/// chi^lambda(alpha) by the Murnaghan-Nakayama border-strip recursion
/// (strips removed largest-first; the result is order-independent).
Int character_mn(const Partition& shape, const Composition& alpha);

/// chi^lambda(alpha) as the alternating sum over S_{ell(lambda)} of ordered
/// set partition counts P(alpha, lambda + sigma - id); negative targets
/// contribute zero. The permutation sum grows as ell(lambda)!, so this route
/// refuses ell(lambda) > kCharacterJtMaxLength (the MN route has no cap).
Int character_jt(const Partition& shape, const Composition& alpha);

/// p_alpha = sum_lambda chi^lambda(alpha) s_lambda.
SymFunc power_sum_to_schur(const Partition& alpha);

/// The full integer character table of S_n: rows indexed by lambda and
/// columns by the class alpha, both in descending lexicographic order.
class CharacterTable {
public:
    int n() const { return n_; }
    const std::vector<Partition>& partitions() const { return partitions_; }
    std::int64_t value(size_t lambda_idx, size_t alpha_idx) const {
        return values_[lambda_idx][alpha_idx];
    }
    std::int64_t value(const Partition& lambda, const Partition& alpha) const {
        return values_[index_of(lambda)][index_of(alpha)];
    }
    size_t index_of(const Partition& p) const;
    size_t count() const { return partitions_.size(); }

    static CharacterTable compute(int n);

    /// Canonical JSON text (stable byte-for-byte across runs).
    std::string serialize() const;
    /// Parses and validates; throws IntegrityError on any corruption.
    static CharacterTable deserialize(const std::string& text);

private:
    void validate() const;

    int n_ = 0;
    std::vector<Partition> partitions_;
    std::map<Partition, size_t, DescLex> index_;
    std::vector<std::vector<std::int64_t>> values_;
};

/// Hands out shared character tables, backed by an in-memory map and an
/// optional on-disk cache ("chartable-v1-n{n}.json" per n). Corrupted cache
/// files are recomputed and rewritten, never trusted. Concurrent readers are
/// fine; writes replace the whole file atomically.
class CharTableProvider {
public:
    explicit CharTableProvider(std::optional<std::filesystem::path> cache_dir = std::nullopt,
                               int max_n = kDefaultMaxTableN);

    std::shared_ptr<const CharacterTable> table(int n) const;
    int max_n() const { return max_n_; }
    const std::optional<std::filesystem::path>& cache_dir() const { return dir_; }

    static std::string cache_file_name(int n);

private:
    std::optional<std::filesystem::path> dir_;
    int max_n_;
    mutable std::mutex mu_;
    mutable std::map<int, std::shared_ptr<const CharacterTable>> mem_;
};

} // namespace symcoef

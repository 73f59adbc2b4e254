#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "symcoef/partition.hpp"

namespace symcoef {

/// A filling of a (possibly skew) shape. rows[i] holds the entries of row i
/// left to right; the absolute column of rows[i][k] is inner_i + k.
class Tableau {
public:
    Tableau() = default;
    Tableau(SkewShape shape, std::vector<std::vector<int>> rows);

    /// Straight-shape tableau; the shape is deduced from the row lengths.
    static Tableau from_rows(std::vector<std::vector<int>> rows);

    const SkewShape& shape() const { return shape_; }
    const std::vector<std::vector<int>>& rows() const { return rows_; }
    int size() const { return shape_.size(); }

    /// Entries weakly increase along rows and strictly increase down columns.
    bool is_semistandard() const;
    /// Semistandard, straight shape, entries a bijection onto 1..size().
    bool is_standard() const;

    /// Content vector: entry v occurs content()[v-1] times.
    std::vector<int> content() const;

    bool operator==(const Tableau& o) const {
        return shape_.outer() == o.shape_.outer() && shape_.inner() == o.shape_.inner() &&
               rows_ == o.rows_;
    }

private:
    SkewShape shape_;
    std::vector<std::vector<int>> rows_;
};

class Permutation {
public:
    Permutation() = default;
    /// word must be a rearrangement of 1..n.
    explicit Permutation(std::vector<int> word);

    const std::vector<int>& word() const { return word_; }
    int size() const { return static_cast<int>(word_.size()); }
    Permutation inverse() const;

    bool operator==(const Permutation& o) const { return word_ == o.word_; }

private:
    std::vector<int> word_;
};

inline constexpr int kDefaultTableauEnumCap = 20;

/// f^lambda by the hook-length formula: n! / prod of hooks, exact.
Int count_syt_hlf(const Partition& p);

/// All standard Young tableaux of shape p, ordered lexicographically by
/// row-major reading of the filling.
std::vector<Tableau> enumerate_syt(const Partition& p, int cap = kDefaultTableauEnumCap);

/// All semistandard fillings of the given skew shape with exactly
/// content.parts()[v-1] entries equal to v. Throws DomainError if the sizes
/// disagree. Same deterministic order as enumerate_syt.
std::vector<Tableau> enumerate_ssyt(const SkewShape& shape, const Composition& content);

/// Visit the content vector of every SSYT of straight shape p with entries in
/// 1..max_entry. Used for polynomial expansions of Schur functions.
void for_each_ssyt_content(const Partition& p, int max_entry,
                           const std::function<void(const std::vector<int>&)>& visit);

/// Classical Schensted row insertion, inserting w_1..w_n in order and bumping
/// the leftmost strictly larger entry. Returns (P, Q) of equal shape.
std::pair<Tableau, Tableau> rsk(const Permutation& w);

/// Inverse of rsk; throws DomainError unless P, Q are standard of equal shape.
Permutation rsk_inverse(const Tableau& P, const Tableau& Q);

/// Rows top to bottom, each read from the back.
std::vector<int> reading_word(const Tableau& t);

/// Every prefix has at least as many i's as (i+1)'s, for every i.
bool is_ballot(const std::vector<int>& word);

/// All skew SSYT of shape outer/inner and type content whose reading word is
/// a ballot sequence; the count is the Littlewood-Richardson coefficient.
std::vector<Tableau> enumerate_lr_tableaux(const Partition& outer, const Partition& inner,
                                           const Partition& content);

} // namespace symcoef

#include "symcoef/tableaux.hpp"

#include <algorithm>
#include <numeric>

namespace symcoef {

Tableau::Tableau(SkewShape shape, std::vector<std::vector<int>> rows)
    : shape_(std::move(shape)), rows_(std::move(rows)) {
    if (static_cast<int>(rows_.size()) != shape_.outer().length())
        throw DomainError("tableau: row count does not match shape");
    for (int i = 0; i < shape_.outer().length(); ++i) {
        int expected = shape_.outer().part(i) - shape_.inner().part(i);
        if (static_cast<int>(rows_[static_cast<size_t>(i)].size()) != expected)
            throw DomainError("tableau: row length does not match shape");
    }
}

Tableau Tableau::from_rows(std::vector<std::vector<int>> rows) {
    std::vector<int> outer;
    outer.reserve(rows.size());
    for (const auto& r : rows) outer.push_back(static_cast<int>(r.size()));
    return Tableau(SkewShape(Partition(std::move(outer))), std::move(rows));
}

bool Tableau::is_semistandard() const {
    const Partition& outer = shape_.outer();
    const Partition& inner = shape_.inner();
    for (int i = 0; i < outer.length(); ++i) {
        const auto& row = rows_[static_cast<size_t>(i)];
        for (size_t k = 0; k < row.size(); ++k) {
            if (row[k] <= 0) return false;
            if (k > 0 && row[k - 1] > row[k]) return false;
        }
        if (i == 0) continue;
        // compare with the row above where both cells exist
        const auto& above = rows_[static_cast<size_t>(i - 1)];
        for (size_t k = 0; k < row.size(); ++k) {
            int col = inner.part(i) + static_cast<int>(k);
            if (col >= inner.part(i - 1) && col < outer.part(i - 1)) {
                int above_entry = above[static_cast<size_t>(col - inner.part(i - 1))];
                if (above_entry >= row[k]) return false;
            }
        }
    }
    return true;
}

bool Tableau::is_standard() const {
    if (!shape_.is_straight()) return false;
    if (!is_semistandard()) return false;
    std::vector<bool> seen(static_cast<size_t>(size()) + 1, false);
    for (const auto& row : rows_)
        for (int v : row) {
            if (v < 1 || v > size() || seen[static_cast<size_t>(v)]) return false;
            seen[static_cast<size_t>(v)] = true;
        }
    return true;
}

std::vector<int> Tableau::content() const {
    int max_entry = 0;
    for (const auto& row : rows_)
        for (int v : row) max_entry = std::max(max_entry, v);
    std::vector<int> counts(static_cast<size_t>(max_entry), 0);
    for (const auto& row : rows_)
        for (int v : row) ++counts[static_cast<size_t>(v - 1)];
    return counts;
}

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
    std::vector<bool> seen(word_.size() + 1, false);
    for (int v : word_) {
        if (v < 1 || v > static_cast<int>(word_.size()) || seen[static_cast<size_t>(v)])
            throw DomainError("permutation word must be a rearrangement of 1..n");
        seen[static_cast<size_t>(v)] = true;
    }
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(word_.size());
    for (size_t i = 0; i < word_.size(); ++i)
        inv[static_cast<size_t>(word_[i] - 1)] = static_cast<int>(i) + 1;
    return Permutation(std::move(inv));
}

Int count_syt_hlf(const Partition& p) {
    Int num = factorial(p.size());
    Int den = 1;
    for (const auto& row : hook_lengths(p))
        for (int h : row) den *= h;
    Int q, r;
    boost::multiprecision::divide_qr(num, den, q, r);
    if (r != 0) throw InternalError("hook-length formula division was not exact");
    return q;
}

// ---------------------------------------------------------------------------
// Enumeration. All enumerations fill cells in row-major order and try
// candidate entries in ascending order, so the output order is the
// lexicographic order of the row-major readings.

namespace {

struct CellRef {
    int row;
    int idx; // index within the stored row
    int col; // absolute column
};

std::vector<CellRef> row_major_cells(const SkewShape& shape) {
    std::vector<CellRef> cells;
    for (int i = 0; i < shape.outer().length(); ++i)
        for (int c = shape.inner().part(i); c < shape.outer().part(i); ++c)
            cells.push_back({i, c - shape.inner().part(i), c});
    return cells;
}

// Entry directly above the given absolute column, or 0 if there is none.
int entry_above(const SkewShape& shape, const std::vector<std::vector<int>>& rows, int row,
                int col) {
    if (row == 0) return 0;
    int prev = row - 1;
    if (col < shape.inner().part(prev) || col >= shape.outer().part(prev)) return 0;
    return rows[static_cast<size_t>(prev)][static_cast<size_t>(col - shape.inner().part(prev))];
}

} // namespace

std::vector<Tableau> enumerate_syt(const Partition& p, int cap) {
    if (p.size() > cap)
        throw CapacityError("SYT enumeration refused for |shape| = " + std::to_string(p.size()) +
                            " (cap " + std::to_string(cap) + "); raise it with --cap");
    SkewShape shape((Partition(p)));
    auto cells = row_major_cells(shape);
    std::vector<std::vector<int>> rows(static_cast<size_t>(p.length()));
    for (int i = 0; i < p.length(); ++i) rows[static_cast<size_t>(i)].resize(static_cast<size_t>(p.part(i)));
    std::vector<bool> used(static_cast<size_t>(p.size()) + 1, false);
    std::vector<Tableau> out;

    std::function<void(size_t)> rec = [&](size_t k) {
        if (k == cells.size()) {
            out.push_back(Tableau(shape, rows));
            return;
        }
        const CellRef& cell = cells[k];
        int lo = 1;
        if (cell.idx > 0)
            lo = std::max(lo, rows[static_cast<size_t>(cell.row)][static_cast<size_t>(cell.idx - 1)] + 1);
        lo = std::max(lo, entry_above(shape, rows, cell.row, cell.col) + 1);
        for (int v = lo; v <= p.size(); ++v) {
            if (used[static_cast<size_t>(v)]) continue;
            used[static_cast<size_t>(v)] = true;
            rows[static_cast<size_t>(cell.row)][static_cast<size_t>(cell.idx)] = v;
            rec(k + 1);
            used[static_cast<size_t>(v)] = false;
        }
    };
    rec(0);
    return out;
}

std::vector<Tableau> enumerate_ssyt(const SkewShape& shape, const Composition& content) {
    if (shape.size() != content.size())
        throw DomainError("enumerate_ssyt: |shape| must equal the content sum");
    int alphabet = content.length();
    auto cells = row_major_cells(shape);
    std::vector<std::vector<int>> rows(static_cast<size_t>(shape.outer().length()));
    for (int i = 0; i < shape.outer().length(); ++i)
        rows[static_cast<size_t>(i)].resize(
            static_cast<size_t>(shape.outer().part(i) - shape.inner().part(i)));
    std::vector<int> remaining = content.parts();
    std::vector<Tableau> out;

    std::function<void(size_t)> rec = [&](size_t k) {
        if (k == cells.size()) {
            out.push_back(Tableau(shape, rows));
            return;
        }
        const CellRef& cell = cells[k];
        int lo = 1;
        if (cell.idx > 0)
            lo = std::max(lo, rows[static_cast<size_t>(cell.row)][static_cast<size_t>(cell.idx - 1)]);
        lo = std::max(lo, entry_above(shape, rows, cell.row, cell.col) + 1);
        for (int v = lo; v <= alphabet; ++v) {
            if (remaining[static_cast<size_t>(v - 1)] == 0) continue;
            --remaining[static_cast<size_t>(v - 1)];
            rows[static_cast<size_t>(cell.row)][static_cast<size_t>(cell.idx)] = v;
            rec(k + 1);
            ++remaining[static_cast<size_t>(v - 1)];
        }
    };
    rec(0);
    return out;
}

void for_each_ssyt_content(const Partition& p, int max_entry,
                           const std::function<void(const std::vector<int>&)>& visit) {
    SkewShape shape((Partition(p)));
    auto cells = row_major_cells(shape);
    std::vector<std::vector<int>> rows(static_cast<size_t>(p.length()));
    for (int i = 0; i < p.length(); ++i)
        rows[static_cast<size_t>(i)].resize(static_cast<size_t>(p.part(i)));
    std::vector<int> counts(static_cast<size_t>(max_entry), 0);

    std::function<void(size_t)> rec = [&](size_t k) {
        if (k == cells.size()) {
            visit(counts);
            return;
        }
        const CellRef& cell = cells[k];
        int lo = 1;
        if (cell.idx > 0)
            lo = std::max(lo, rows[static_cast<size_t>(cell.row)][static_cast<size_t>(cell.idx - 1)]);
        lo = std::max(lo, entry_above(shape, rows, cell.row, cell.col) + 1);
        // column-strictness needs max_entry - (cells below in this column)
        for (int v = lo; v <= max_entry; ++v) {
            ++counts[static_cast<size_t>(v - 1)];
            rows[static_cast<size_t>(cell.row)][static_cast<size_t>(cell.idx)] = v;
            rec(k + 1);
            --counts[static_cast<size_t>(v - 1)];
        }
    };
    rec(0);
}

std::pair<Tableau, Tableau> rsk(const Permutation& w) {
    std::vector<std::vector<int>> p_rows, q_rows;
    for (int step = 0; step < w.size(); ++step) {
        int v = w.word()[static_cast<size_t>(step)];
        size_t row = 0;
        for (;; ++row) {
            if (row == p_rows.size()) {
                p_rows.emplace_back();
                q_rows.emplace_back();
            }
            auto& r = p_rows[row];
            auto it = std::upper_bound(r.begin(), r.end(), v);
            if (it == r.end()) {
                r.push_back(v);
                q_rows[row].push_back(step + 1);
                break;
            }
            std::swap(v, *it); // bump the leftmost strictly larger entry
        }
    }
    return {Tableau::from_rows(std::move(p_rows)), Tableau::from_rows(std::move(q_rows))};
}

Permutation rsk_inverse(const Tableau& P, const Tableau& Q) {
    if (!P.is_standard() || !Q.is_standard())
        throw DomainError("rsk_inverse requires standard tableaux");
    if (!(P.shape().outer() == Q.shape().outer()))
        throw DomainError("rsk_inverse requires tableaux of equal shape");
    int n = P.size();
    std::vector<std::vector<int>> p_rows = P.rows();
    std::vector<int> word(static_cast<size_t>(n));
    // Cell positions of each value in Q drive the reverse bumping order.
    std::vector<std::pair<int, int>> where(static_cast<size_t>(n) + 1);
    for (size_t i = 0; i < Q.rows().size(); ++i)
        for (size_t k = 0; k < Q.rows()[i].size(); ++k)
            where[static_cast<size_t>(Q.rows()[i][k])] = {static_cast<int>(i), static_cast<int>(k)};
    for (int step = n; step >= 1; --step) {
        auto [row, idx] = where[static_cast<size_t>(step)];
        auto& prow = p_rows[static_cast<size_t>(row)];
        if (idx != static_cast<int>(prow.size()) - 1)
            throw DomainError("rsk_inverse: recording tableau is not a valid insertion order");
        int v = prow[static_cast<size_t>(idx)];
        prow.pop_back();
        for (int r = row - 1; r >= 0; --r) {
            auto& above = p_rows[static_cast<size_t>(r)];
            // rightmost entry strictly smaller than v
            auto it = std::lower_bound(above.begin(), above.end(), v);
            if (it == above.begin())
                throw DomainError("rsk_inverse: no reverse bumping target");
            std::swap(v, *(it - 1));
        }
        word[static_cast<size_t>(step - 1)] = v;
    }
    return Permutation(std::move(word));
}

std::vector<int> reading_word(const Tableau& t) {
    std::vector<int> word;
    for (const auto& row : t.rows())
        for (auto it = row.rbegin(); it != row.rend(); ++it) word.push_back(*it);
    return word;
}

bool is_ballot(const std::vector<int>& word) {
    int max_letter = 0;
    for (int v : word) max_letter = std::max(max_letter, v);
    std::vector<int> counts(static_cast<size_t>(max_letter) + 2, 0);
    for (int v : word) {
        if (v < 1) return false;
        ++counts[static_cast<size_t>(v)];
        if (v > 1 && counts[static_cast<size_t>(v)] > counts[static_cast<size_t>(v - 1)]) return false;
    }
    return true;
}

std::vector<Tableau> enumerate_lr_tableaux(const Partition& outer, const Partition& inner,
                                           const Partition& content) {
    SkewShape shape{Partition(outer), Partition(inner)}; // validates containment
    if (shape.size() != content.size())
        throw DomainError("enumerate_lr_tableaux: |outer| - |inner| must equal |content|");
    auto cells = row_major_cells(shape);
    int alphabet = content.length();
    std::vector<std::vector<int>> rows(static_cast<size_t>(outer.length()));
    for (int i = 0; i < outer.length(); ++i)
        rows[static_cast<size_t>(i)].resize(static_cast<size_t>(outer.part(i) - inner.part(i)));
    std::vector<int> remaining = content.parts();
    // counts of letters in the reading word consumed so far (rows completed)
    std::vector<int> word_counts(static_cast<size_t>(alphabet) + 1, 0);
    std::vector<Tableau> out;

    // Checks the reversed row against the ballot prefix condition, updating
    // word_counts; rolls itself back and returns false on violation.
    auto push_row = [&](int row_index) -> bool {
        const auto& row = rows[static_cast<size_t>(row_index)];
        for (auto it = row.rbegin(); it != row.rend(); ++it) {
            int v = *it;
            ++word_counts[static_cast<size_t>(v)];
            if (v > 1 && word_counts[static_cast<size_t>(v)] > word_counts[static_cast<size_t>(v - 1)]) {
                // roll back the partial row
                for (auto jt = row.rbegin(); jt <= it; ++jt) --word_counts[static_cast<size_t>(*jt)];
                return false;
            }
        }
        return true;
    };
    auto pop_row = [&](int row_index) {
        for (int v : rows[static_cast<size_t>(row_index)]) --word_counts[static_cast<size_t>(v)];
    };

    std::function<void(size_t)> rec = [&](size_t k) {
        if (k == cells.size()) {
            out.push_back(Tableau(shape, rows));
            return;
        }
        const CellRef& cell = cells[k];
        bool row_ends_here =
            cell.idx + 1 == static_cast<int>(rows[static_cast<size_t>(cell.row)].size());
        int lo = 1;
        if (cell.idx > 0)
            lo = std::max(lo, rows[static_cast<size_t>(cell.row)][static_cast<size_t>(cell.idx - 1)]);
        lo = std::max(lo, entry_above(shape, rows, cell.row, cell.col) + 1);
        // In a ballot filling every entry of row i is at most i+1 (0-based).
        int hi = std::min(alphabet, cell.row + 1);
        for (int v = lo; v <= hi; ++v) {
            if (remaining[static_cast<size_t>(v - 1)] == 0) continue;
            --remaining[static_cast<size_t>(v - 1)];
            rows[static_cast<size_t>(cell.row)][static_cast<size_t>(cell.idx)] = v;
            if (row_ends_here) {
                if (push_row(cell.row)) {
                    rec(k + 1);
                    pop_row(cell.row);
                }
            } else {
                rec(k + 1);
            }
            ++remaining[static_cast<size_t>(v - 1)];
        }
    };
    // Rows of zero width never enter `cells`; shapes whose rows are all empty
    // yield exactly the empty filling when the content is empty too.
    rec(0);
    return out;
}

} // namespace symcoef

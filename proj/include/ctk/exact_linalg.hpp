/**
 * Exact integer and field linear algebra: Smith normal form with unimodular
 * transforms, field ranks by fraction-free elimination, and span-preserving
 * column removal.
 *
 * Matrices are stored sparsely by column with arbitrary-precision entries.
 * The Smith reduction runs on a machine-integer fast path first and restarts
 * with cpp_int when an intermediate entry grows past the overflow guard.
 */

#ifndef CTK_EXACT_LINALG_HPP
#define CTK_EXACT_LINALG_HPP

#include <utility>
#include <vector>

#include "ctk/field.hpp"

namespace ctk {

/** Sparse integer matrix; no explicit zero entries are stored. */
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), cols_data_(cols) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    /** Set entry (r, c); storing zero erases the entry. */
    void set(int r, int c, Int value);

    Int at(int r, int c) const;

    /** Column c as (row, value) pairs sorted by row. */
    const std::vector<std::pair<int, Int>>& column(int c) const { return cols_data_.at(c); }

    /** Copy with the given columns (ascending index list) deleted. */
    IntMatrix without_columns(const std::vector<int>& cols) const;

    std::vector<std::vector<Int>> to_dense() const;

    static IntMatrix from_dense(const std::vector<std::vector<Int>>& d);

    /** Debug text form used by golden tests: rows of space-separated entries. */
    std::string to_text() const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<std::vector<std::pair<int, Int>>> cols_data_;
};

/** U * A * V = D with U, V unimodular and D diagonal with divisibility chain. */
struct SnfDecomposition {
    IntMatrix d;
    IntMatrix u;
    IntMatrix v;
    std::vector<Int> invariant_factors;  // positive, d1 | d2 | ... | dr

    int rank() const { return static_cast<int>(invariant_factors.size()); }
};

SnfDecomposition smith_normal_form(const IntMatrix& a);

/** Invariant factors only; skips the U/V bookkeeping. */
std::vector<Int> smith_invariants(const IntMatrix& a);

/** Rank of A over Q or over F_p. */
int rank_over_field(const IntMatrix& a, const FieldSpec& field);

/**
 * Up to `budget` column indices, found by a greedy left-to-right scan, whose
 * simultaneous deletion leaves the column span of A over Q unchanged.
 * Throws BudgetUnachievable when fewer removable columns exist.
 */
std::vector<int> image_preserving_column_removal(const IntMatrix& a, int budget);

}  // namespace ctk

#endif  // CTK_EXACT_LINALG_HPP

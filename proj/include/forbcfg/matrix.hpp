#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace forbcfg {

using Symbol = std::uint8_t;
using Column = std::vector<Symbol>;

/// Matrix over symbols {0..r-1}, stored as a multiset of columns in
/// nondecreasing lexicographic order. Construction canonicalizes, so two
/// matrices with equal column multisets compare equal.
class RMatrix {
public:
    RMatrix() : rows_(0), alphabet_(2) {}
    RMatrix(std::size_t rows, int alphabet, std::vector<Column> columns);

    /// Build from row-major entries; column count taken from row length.
    static RMatrix from_rows(int alphabet, const std::vector<std::vector<int>>& rows);

    std::size_t rows() const { return rows_; }
    int alphabet() const { return alphabet_; }
    std::size_t cols() const { return columns_.size(); }
    const Column& column(std::size_t j) const { return columns_[j]; }
    const std::vector<Column>& columns() const { return columns_; }
    Symbol at(std::size_t i, std::size_t j) const { return columns_[j][i]; }

    bool operator==(const RMatrix& rhs) const = default;
    auto operator<=>(const RMatrix& rhs) const = default;

    /// Normative text form: "m r" header, then m whitespace-separated rows.
    std::string to_text() const;
    static RMatrix parse(const std::string& text);
    static RMatrix parse_stream(std::istream& in, int* line_no);

private:
    std::size_t rows_;
    int alphabet_;
    std::vector<Column> columns_;
};

/// Returns the canonical form (column-sorted); idempotent by construction.
RMatrix canonicalize(const RMatrix& a);

bool is_simple(const RMatrix& a);

/// Distinct columns of f (the largest simple matrix of columns of f).
RMatrix support(const RMatrix& f);

/// Largest column multiplicity; 1 iff simple, 0 for a column-less matrix.
std::size_t max_multiplicity(const RMatrix& f);

/// 0/1 complement; requires alphabet 2.
RMatrix complement(const RMatrix& f);

/// Entry-wise substitution 0 -> i, 1 -> j into alphabet r. Requires a
/// 2-symbol input, i != j, and both symbols below r.
RMatrix relabel(const RMatrix& f, Symbol i, Symbol j, int r);

/// Every column of a stacked over every column of b. The 0-row one-column
/// matrix is the identity element.
RMatrix direct_product(const RMatrix& a, const RMatrix& b);

RMatrix empty_unit(int alphabet);  // 0 rows, 1 column

/// True iff f equals a submatrix of a after row and column permutations.
bool contains_config(const RMatrix& f, const RMatrix& a);

/// Like contains_config, but only witnesses whose column selection uses
/// column `anchor` of a count.
bool contains_config_using(const RMatrix& f, const RMatrix& a, std::size_t anchor);
bool contains_config_using(const RMatrix& f, std::span<const Column> a_cols,
                           std::size_t a_rows, int alphabet, std::size_t anchor);

/// Equality up to row and column permutation.
bool config_equal(const RMatrix& a, const RMatrix& b);

/// Deterministic key for configuration-equivalence classes: the
/// lexicographically least canonical column list over all row permutations.
std::string config_key(const RMatrix& a);

/// Per-column symbol occurrence counts.
struct ColumnProfile {
    std::vector<std::size_t> counts;  // length r, sums to rows
};
ColumnProfile column_profile(const RMatrix& a, std::size_t j);

/// max over columns of the count of symbol s in a column.
std::size_t max_symbol_count_per_column(const RMatrix& a, Symbol s);

// Standard families.
RMatrix make_K(std::size_t k);                    // all 2^k 0/1 columns
RMatrix make_Ks(std::size_t k, std::size_t s);    // columns of sum s
RMatrix make_I(std::size_t l);                    // identity
RMatrix make_T(std::size_t l);                    // 1s on and above the diagonal
RMatrix make_const(std::size_t p, std::size_t q, Symbol sym, int alphabet = 2);
RMatrix make_F_abcd(std::size_t a, std::size_t b, std::size_t c, std::size_t d);
RMatrix make_block_side(std::size_t p, std::size_t q0, std::size_t q1);   // [0_{p x q0} 1_{p x q1}]
RMatrix make_block_stack(std::size_t p1, std::size_t p0, std::size_t q);  // 1s on top of 0s
RMatrix make_row01();                                                     // [0 1]
RMatrix make_col01();                                                     // [0; 1]

}  // namespace forbcfg

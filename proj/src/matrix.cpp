#include "forbcfg/matrix.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace forbcfg {

RMatrix::RMatrix(std::size_t rows, int alphabet, std::vector<Column> columns)
    : rows_(rows), alphabet_(alphabet), columns_(std::move(columns)) {
    if (alphabet_ < 2) throw std::invalid_argument("RMatrix: alphabet must be >= 2");
    for (const Column& c : columns_) {
        if (c.size() != rows_)
            throw std::invalid_argument("RMatrix: column length != row count");
        for (Symbol s : c) {
            if (s >= alphabet_)
                throw std::invalid_argument("RMatrix: symbol out of alphabet");
        }
    }
    std::sort(columns_.begin(), columns_.end());
}

RMatrix RMatrix::from_rows(int alphabet, const std::vector<std::vector<int>>& rows) {
    const std::size_t m = rows.size();
    std::size_t n = m ? rows[0].size() : 0;
    for (const auto& row : rows) {
        if (row.size() != n) throw std::invalid_argument("RMatrix: ragged rows");
    }
    std::vector<Column> cols(n, Column(m));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (rows[i][j] < 0 || rows[i][j] >= alphabet)
                throw std::invalid_argument("RMatrix: symbol out of alphabet");
            cols[j][i] = static_cast<Symbol>(rows[i][j]);
        }
    return RMatrix(m, alphabet, std::move(cols));
}

std::string RMatrix::to_text() const {
    std::ostringstream out;
    out << rows_ << ' ' << alphabet_ << '\n';
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols(); ++j) {
            if (j) out << ' ';
            out << static_cast<int>(columns_[j][i]);
        }
        out << '\n';
    }
    return out.str();
}

RMatrix RMatrix::parse_stream(std::istream& in, int* line_no) {
    auto fail = [&](const std::string& msg) -> RMatrix {
        int ln = line_no ? *line_no : 0;
        throw std::runtime_error("matrix parse error at line " + std::to_string(ln) +
                                 ": " + msg);
    };
    std::string line;
    // skip blank lines
    while (std::getline(in, line)) {
        if (line_no) ++*line_no;
        if (line.find_first_not_of(" \t\r") != std::string::npos) break;
    }
    if (!in && line.empty()) return fail("empty input");
    std::istringstream head(line);
    long long m = -1, r = -1;
    if (!(head >> m >> r) || m < 0 || r < 2 || r > 255)
        return fail("expected header \"m r\"");
    std::vector<std::vector<int>> rows;
    for (long long i = 0; i < m; ++i) {
        if (!std::getline(in, line)) return fail("unexpected end of matrix rows");
        if (line_no) ++*line_no;
        std::istringstream ls(line);
        std::vector<int> row;
        int v;
        while (ls >> v) row.push_back(v);
        if (!rows.empty() && row.size() != rows[0].size())
            return fail("row has wrong number of entries");
        rows.push_back(std::move(row));
    }
    try {
        return from_rows(static_cast<int>(r), rows);
    } catch (const std::invalid_argument& e) {
        return fail(e.what());
    }
}

RMatrix RMatrix::parse(const std::string& text) {
    std::istringstream in(text);
    int ln = 0;
    return parse_stream(in, &ln);
}

RMatrix canonicalize(const RMatrix& a) { return a; }

bool is_simple(const RMatrix& a) {
    for (std::size_t j = 1; j < a.cols(); ++j)
        if (a.column(j) == a.column(j - 1)) return false;
    return true;
}

RMatrix support(const RMatrix& f) {
    std::vector<Column> cols;
    for (std::size_t j = 0; j < f.cols(); ++j)
        if (j == 0 || f.column(j) != f.column(j - 1)) cols.push_back(f.column(j));
    return RMatrix(f.rows(), f.alphabet(), std::move(cols));
}

std::size_t max_multiplicity(const RMatrix& f) {
    std::size_t best = 0, run = 0;
    for (std::size_t j = 0; j < f.cols(); ++j) {
        run = (j > 0 && f.column(j) == f.column(j - 1)) ? run + 1 : 1;
        best = std::max(best, run);
    }
    return best;
}

RMatrix complement(const RMatrix& f) {
    if (f.alphabet() != 2)
        throw std::invalid_argument("complement: requires a 2-symbol matrix");
    std::vector<Column> cols = f.columns();
    for (Column& c : cols)
        for (Symbol& s : c) s = static_cast<Symbol>(1 - s);
    return RMatrix(f.rows(), 2, std::move(cols));
}

RMatrix relabel(const RMatrix& f, Symbol i, Symbol j, int r) {
    if (f.alphabet() != 2)
        throw std::invalid_argument("relabel: requires a 2-symbol matrix");
    if (i == j) throw std::invalid_argument("relabel: symbols must differ");
    if (i >= r || j >= r) throw std::invalid_argument("relabel: symbol out of alphabet");
    std::vector<Column> cols = f.columns();
    for (Column& c : cols)
        for (Symbol& s : c) s = (s == 0) ? i : j;
    return RMatrix(f.rows(), r, std::move(cols));
}

RMatrix direct_product(const RMatrix& a, const RMatrix& b) {
    if (a.alphabet() != b.alphabet())
        throw std::invalid_argument("direct_product: alphabet mismatch");
    std::vector<Column> cols;
    cols.reserve(a.cols() * b.cols());
    for (std::size_t x = 0; x < a.cols(); ++x)
        for (std::size_t y = 0; y < b.cols(); ++y) {
            Column c = a.column(x);
            c.insert(c.end(), b.column(y).begin(), b.column(y).end());
            cols.push_back(std::move(c));
        }
    return RMatrix(a.rows() + b.rows(), a.alphabet(), std::move(cols));
}

RMatrix empty_unit(int alphabet) {
    return RMatrix(0, alphabet, std::vector<Column>{Column{}});
}

namespace {

// Containment search state shared by the anchored and plain oracles. F's rows
// are assigned to distinct rows of A, most-constrained F-row first; at a full
// assignment the column multiset is checked by multiplicity counting (distinct
// F-columns restrict to distinct patterns, so counting suffices).
struct Oracle {
    std::size_t fk, fl, am, an;
    std::vector<Column> fcols_distinct;  // distinct columns of F
    std::vector<std::size_t> fmult;
    std::vector<std::vector<std::size_t>> fcnt;  // per F-row symbol counts
    std::vector<std::vector<std::size_t>> acnt;  // per A-row symbol counts
    std::span<const Column> acols;
    int alphabet;
    std::optional<std::size_t> anchor;

    std::vector<std::size_t> order;   // F-row visit order
    std::vector<std::size_t> assign;  // F-row -> A-row
    std::vector<bool> used;

    bool viable(std::size_t fr, std::size_t ar) const {
        for (int s = 0; s < alphabet; ++s)
            if (fcnt[fr][s] > acnt[ar][s]) return false;
        return true;
    }

    // Anchored pruning: the anchor column restricted by the partial row
    // assignment must still match some distinct F-column.
    bool anchor_mask_ok(std::size_t depth) const {
        if (!anchor) return true;
        const Column& ac = acols[*anchor];
        for (std::size_t d = 0; d < fcols_distinct.size(); ++d) {
            bool ok = true;
            for (std::size_t t = 0; t <= depth; ++t) {
                std::size_t fr = order[t];
                if (fcols_distinct[d][fr] != ac[assign[fr]]) { ok = false; break; }
            }
            if (ok) return true;
        }
        return false;
    }

    bool leaf_check() const {
        // count how many A-columns restrict to each distinct F-column
        for (std::size_t d = 0; d < fcols_distinct.size(); ++d) {
            std::size_t cnt = 0;
            for (const Column& ac : acols) {
                bool match = true;
                for (std::size_t fr = 0; fr < fk; ++fr)
                    if (fcols_distinct[d][fr] != ac[assign[fr]]) { match = false; break; }
                cnt += match;
            }
            if (cnt < fmult[d]) return false;
        }
        if (anchor) {
            const Column& ac = acols[*anchor];
            for (std::size_t d = 0; d < fcols_distinct.size(); ++d) {
                bool match = true;
                for (std::size_t fr = 0; fr < fk; ++fr)
                    if (fcols_distinct[d][fr] != ac[assign[fr]]) { match = false; break; }
                if (match) return true;  // a witness can route the anchor here
            }
            return false;
        }
        return true;
    }

    bool dfs(std::size_t depth) {
        if (depth == fk) return leaf_check();
        std::size_t fr = order[depth];
        for (std::size_t ar = 0; ar < am; ++ar) {
            if (used[ar] || !viable(fr, ar)) continue;
            used[ar] = true;
            assign[fr] = ar;
            if (anchor_mask_ok(depth) && dfs(depth + 1)) { used[ar] = false; return true; }
            used[ar] = false;
        }
        return false;
    }
};

bool contains_impl(const RMatrix& f, std::span<const Column> acols, std::size_t am,
                   int alphabet, std::optional<std::size_t> anchor) {
    if (f.cols() == 0) return true;  // the column-less matrix is in everything
    if (f.rows() > am) return false;
    if (f.cols() > acols.size()) return false;

    Oracle o;
    o.fk = f.rows();
    o.fl = f.cols();
    o.am = am;
    o.an = acols.size();
    o.acols = acols;
    o.alphabet = std::max(alphabet, f.alphabet());
    o.anchor = anchor;
    for (std::size_t j = 0; j < f.cols(); ++j) {
        if (j == 0 || f.column(j) != f.column(j - 1)) {
            o.fcols_distinct.push_back(f.column(j));
            o.fmult.push_back(1);
        } else {
            ++o.fmult.back();
        }
    }
    o.fcnt.assign(o.fk, std::vector<std::size_t>(o.alphabet, 0));
    for (std::size_t i = 0; i < o.fk; ++i)
        for (std::size_t j = 0; j < f.cols(); ++j) ++o.fcnt[i][f.at(i, j)];
    o.acnt.assign(am, std::vector<std::size_t>(o.alphabet, 0));
    for (std::size_t i = 0; i < am; ++i)
        for (const Column& c : acols) ++o.acnt[i][c[i]];

    if (o.fk == 0) {
        // no rows: only the multiset size matters
        std::size_t need = f.cols();
        if (acols.size() < need) return false;
        return true;
    }

    // most-constrained F-row first: fewest viable A-rows
    o.order.resize(o.fk);
    std::iota(o.order.begin(), o.order.end(), 0);
    std::vector<std::size_t> viable_count(o.fk, 0);
    for (std::size_t fr = 0; fr < o.fk; ++fr)
        for (std::size_t ar = 0; ar < am; ++ar) viable_count[fr] += o.viable(fr, ar);
    for (std::size_t fr = 0; fr < o.fk; ++fr)
        if (viable_count[fr] == 0) return false;
    std::stable_sort(o.order.begin(), o.order.end(),
                     [&](std::size_t a, std::size_t b) { return viable_count[a] < viable_count[b]; });

    o.assign.assign(o.fk, 0);
    o.used.assign(am, false);
    return o.dfs(0);
}

}  // namespace

bool contains_config(const RMatrix& f, const RMatrix& a) {
    return contains_impl(f, a.columns(), a.rows(), a.alphabet(), std::nullopt);
}

bool contains_config_using(const RMatrix& f, const RMatrix& a, std::size_t anchor) {
    return contains_impl(f, a.columns(), a.rows(), a.alphabet(), anchor);
}

bool contains_config_using(const RMatrix& f, std::span<const Column> a_cols,
                           std::size_t a_rows, int alphabet, std::size_t anchor) {
    return contains_impl(f, a_cols, a_rows, alphabet, anchor);
}

bool config_equal(const RMatrix& a, const RMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols() || a.alphabet() != b.alphabet())
        return false;
    if (a == b) return true;
    return contains_config(a, b);
}

std::string config_key(const RMatrix& a) {
    if (a.rows() > 8) return "big:" + a.to_text();  // row-permutation sweep too wide
    std::vector<std::size_t> perm(a.rows());
    std::iota(perm.begin(), perm.end(), 0);
    std::string best;
    do {
        std::vector<Column> cols(a.cols());
        for (std::size_t j = 0; j < a.cols(); ++j) {
            Column c(a.rows());
            for (std::size_t i = 0; i < a.rows(); ++i) c[i] = a.at(perm[i], j);
            cols[j] = std::move(c);
        }
        std::sort(cols.begin(), cols.end());
        std::string key;
        key.reserve(a.rows() * a.cols() + 16);
        key += std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + "/" +
               std::to_string(a.alphabet()) + ":";
        for (const Column& c : cols)
            for (Symbol s : c) key += static_cast<char>('0' + s);
        if (best.empty() || key < best) best = key;
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (best.empty()) {
        best = "0x" + std::to_string(a.cols()) + "/" + std::to_string(a.alphabet()) + ":";
    }
    return best;
}

ColumnProfile column_profile(const RMatrix& a, std::size_t j) {
    ColumnProfile p;
    p.counts.assign(a.alphabet(), 0);
    for (Symbol s : a.column(j)) ++p.counts[s];
    return p;
}

std::size_t max_symbol_count_per_column(const RMatrix& a, Symbol s) {
    std::size_t best = 0;
    for (std::size_t j = 0; j < a.cols(); ++j) {
        std::size_t cnt = 0;
        for (Symbol x : a.column(j)) cnt += (x == s);
        best = std::max(best, cnt);
    }
    return best;
}

RMatrix make_K(std::size_t k) {
    std::vector<Column> cols;
    cols.reserve(1u << k);
    for (std::size_t mask = 0; mask < (1u << k); ++mask) {
        Column c(k);
        for (std::size_t i = 0; i < k; ++i) c[i] = (mask >> i) & 1;
        cols.push_back(std::move(c));
    }
    return RMatrix(k, 2, std::move(cols));
}

RMatrix make_Ks(std::size_t k, std::size_t s) {
    std::vector<Column> cols;
    for (std::size_t mask = 0; mask < (1u << k); ++mask) {
        if (static_cast<std::size_t>(std::popcount(mask)) != s) continue;
        Column c(k);
        for (std::size_t i = 0; i < k; ++i) c[i] = (mask >> i) & 1;
        cols.push_back(std::move(c));
    }
    return RMatrix(k, 2, std::move(cols));
}

RMatrix make_I(std::size_t l) {
    std::vector<Column> cols;
    for (std::size_t j = 0; j < l; ++j) {
        Column c(l, 0);
        c[j] = 1;
        cols.push_back(std::move(c));
    }
    return RMatrix(l, 2, std::move(cols));
}

RMatrix make_T(std::size_t l) {
    std::vector<Column> cols;
    for (std::size_t j = 0; j < l; ++j) {
        Column c(l, 0);
        for (std::size_t i = 0; i <= j; ++i) c[i] = 1;
        cols.push_back(std::move(c));
    }
    return RMatrix(l, 2, std::move(cols));
}

RMatrix make_const(std::size_t p, std::size_t q, Symbol sym, int alphabet) {
    std::vector<Column> cols(q, Column(p, sym));
    return RMatrix(p, alphabet, std::move(cols));
}

RMatrix make_F_abcd(std::size_t a, std::size_t b, std::size_t c, std::size_t d) {
    const std::size_t k = a + b + c + d;
    Column left(k), right(k);
    std::size_t i = 0;
    for (std::size_t t = 0; t < a; ++t, ++i) { left[i] = 1; right[i] = 1; }
    for (std::size_t t = 0; t < b; ++t, ++i) { left[i] = 1; right[i] = 0; }
    for (std::size_t t = 0; t < c; ++t, ++i) { left[i] = 0; right[i] = 1; }
    for (std::size_t t = 0; t < d; ++t, ++i) { left[i] = 0; right[i] = 0; }
    return RMatrix(k, 2, {left, right});
}

RMatrix make_block_side(std::size_t p, std::size_t q0, std::size_t q1) {
    std::vector<Column> cols;
    for (std::size_t j = 0; j < q0; ++j) cols.push_back(Column(p, 0));
    for (std::size_t j = 0; j < q1; ++j) cols.push_back(Column(p, 1));
    return RMatrix(p, 2, std::move(cols));
}

RMatrix make_block_stack(std::size_t p1, std::size_t p0, std::size_t q) {
    std::vector<Column> cols;
    for (std::size_t j = 0; j < q; ++j) {
        Column c(p1 + p0, 0);
        for (std::size_t i = 0; i < p1; ++i) c[i] = 1;
        cols.push_back(std::move(c));
    }
    return RMatrix(p1 + p0, 2, std::move(cols));
}

RMatrix make_row01() { return RMatrix::from_rows(2, {{0, 1}}); }
RMatrix make_col01() { return RMatrix::from_rows(2, {{0}, {1}}); }

}  // namespace forbcfg

#include "forbcfg/constructions.hpp"

#include <chrono>
#include <stdexcept>

#include "forbcfg/combinatorics.hpp"

namespace forbcfg {

namespace {

void check_budget(const BigUint& count, std::uint64_t budget, const char* who) {
    if (count > BigUint(budget))
        throw std::invalid_argument(std::string(who) + ": output would exceed column budget (" +
                                    count.str() + " columns)");
}

}  // namespace

RMatrix product_construction(const RMatrix& a2, int r, std::uint64_t column_budget) {
    if (a2.alphabet() != 2)
        throw std::invalid_argument("product_construction: base must be a 2-symbol matrix");
    if (!is_simple(a2))
        throw std::invalid_argument("product_construction: base must be simple");
    if (r < 2) throw std::invalid_argument("product_construction: r must be >= 2");
    const std::uint64_t pairs = static_cast<std::uint64_t>(r) * (r - 1) / 2;
    check_budget(bigpow(BigUint(a2.cols()), pairs), column_budget, "product_construction");
    RMatrix acc = empty_unit(r);
    for (Symbol i = 0; i + 1 < r; ++i)
        for (Symbol j = i + 1; j < r; ++j)
            acc = direct_product(acc, relabel(a2, i, j, r));
    return acc;
}

RMatrix multinomial_construction(std::size_t m, int r, std::size_t n, bool constrain_low,
                                 std::uint64_t column_budget) {
    if (n < 2) throw std::invalid_argument("multinomial_construction: n must be >= 2");
    if (r < 2) throw std::invalid_argument("multinomial_construction: r must be >= 2");
    const BigUint expect = bounded_symbol_column_count(m, r, static_cast<std::uint32_t>(n));
    check_budget(expect, column_budget, "multinomial_construction");

    // enumerate columns with a symbol-count cap on the constrained set
    std::vector<Column> cols;
    Column cur(m, 0);
    std::vector<std::size_t> cnt(r, 0);
    const Symbol free_sym = constrain_low ? static_cast<Symbol>(r - 1) : 0;
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == m) {
            cols.push_back(cur);
            return;
        }
        for (int s = 0; s < r; ++s) {
            if (s != free_sym && cnt[s] + 1 > n - 1) continue;
            cur[i] = static_cast<Symbol>(s);
            ++cnt[s];
            self(self, i + 1);
            --cnt[s];
        }
    };
    rec(rec, 0);
    RMatrix out(m, r, std::move(cols));
    if (BigUint(out.cols()) != expect)
        throw std::logic_error("multinomial_construction: count does not match closed form");
    return out;
}

RMatrix block_exact_construction(std::size_t m, int r, std::size_t p, std::size_t q,
                                 std::uint64_t column_budget) {
    if (r < 3) throw std::invalid_argument("block_exact_construction: r must be >= 3");
    if (p < 1 || q < 1) throw std::invalid_argument("block_exact_construction: p,q must be >= 1");
    if (m < (p - 1) * static_cast<std::size_t>(r - 1))
        throw std::invalid_argument("block_exact_construction: m below (p-1)(r-1)");
    if (p == 1 && q >= 3)
        throw std::invalid_argument(
            "block_exact_construction: p=1 with q>=3 is not realizable "
            "(fewer than (q-1)(r-1)m distinct single-marker columns exist)");
    if (q >= 3 && (m - p) * static_cast<std::size_t>(r - 2) < q - 2)
        throw std::invalid_argument(
            "block_exact_construction: not enough marker slots for q distinct block columns");
    const BigUint expect = bounded_symbol_column_count(m, r, static_cast<std::uint32_t>(p)) +
                           BigUint((q - 1) * static_cast<std::uint64_t>(r - 1)) * binomial(m, p);
    check_budget(expect, column_budget, "block_exact_construction");

    // part (a): every low symbol capped at p-1 occurrences, top symbol free;
    // at p = 1 only the constant top-symbol column qualifies
    std::vector<Column> cols;
    if (p == 1) {
        cols.push_back(Column(m, static_cast<Symbol>(r - 1)));
    } else {
        cols = multinomial_construction(m, r, p, /*constrain_low=*/true, column_budget)
                   .columns();
    }

    // part (b): for each p-row subset and low symbol i, q-1 columns with i on
    // the subset and the top symbol elsewhere. The first column of a group is
    // the plain block column; the rest carry a marker entry (smallest free
    // row, then smallest low symbol != i) so the group stays distinct.
    std::vector<std::size_t> subset;
    auto emit_group = [&](const std::vector<std::size_t>& rows_sel, Symbol i) {
        Column base(m, static_cast<Symbol>(r - 1));
        for (std::size_t t : rows_sel) base[t] = i;
        cols.push_back(base);
        std::size_t made = 1;
        for (std::size_t row = 0; row < m && made < q - 1; ++row) {
            if (std::find(rows_sel.begin(), rows_sel.end(), row) != rows_sel.end()) continue;
            for (int s = 0; s < r - 1 && made < q - 1; ++s) {
                if (static_cast<Symbol>(s) == i) continue;
                Column c = base;
                c[row] = static_cast<Symbol>(s);
                cols.push_back(std::move(c));
                ++made;
            }
        }
    };
    auto subsets = [&](auto&& self, std::size_t start, std::size_t need) -> void {
        if (need == 0) {
            for (int i = 0; i < r - 1; ++i) emit_group(subset, static_cast<Symbol>(i));
            return;
        }
        for (std::size_t t = start; t + need <= m; ++t) {
            subset.push_back(t);
            self(self, t + 1, need - 1);
            subset.pop_back();
        }
    };
    if (q >= 2) subsets(subsets, 0, p);

    RMatrix out(m, r, std::move(cols));
    if (BigUint(out.cols()) != expect)
        throw std::logic_error("block_exact_construction: count does not match closed form");
    return out;
}

RMatrix s_block_construction(std::size_t m, int r, std::size_t q) {
    if (m < 2) throw std::invalid_argument("s_block_construction: m must be >= 2");
    if (r < 2) throw std::invalid_argument("s_block_construction: r must be >= 2");
    if (q < 1) throw std::invalid_argument("s_block_construction: q must be >= 1");
    if (q >= 3 && m < 3)
        throw std::invalid_argument(
            "s_block_construction: q >= 3 needs m >= 3 to keep the groups distinct");
    std::vector<Column> cols;
    for (int i = 0; i < r; ++i) {
        std::size_t made = 0;
        // markers from the bottom row upward, smallest differing symbol first
        for (std::size_t row = m; row-- > 0 && made < q - 1;) {
            for (int s = 0; s < r && made < q - 1; ++s) {
                if (s == i) continue;
                Column c(m, static_cast<Symbol>(i));
                c[row] = static_cast<Symbol>(s);
                cols.push_back(std::move(c));
                ++made;
            }
        }
        if (made < q - 1)
            throw std::invalid_argument("s_block_construction: not enough marker slots");
    }
    return RMatrix(m, r, std::move(cols));
}

RMatrix ks_chain_construction(std::size_t m, std::size_t p) {
    if (p < 1) throw std::invalid_argument("ks_chain_construction: p must be >= 1");
    if (p - 1 > m) throw std::invalid_argument("ks_chain_construction: p-1 exceeds row count");
    return make_Ks(m, p - 1);
}

namespace {

RMatrix regenerate(const ConstructionDescriptor& d) {
    auto at = [&](const char* k) -> std::int64_t {
        auto it = d.params.find(k);
        if (it == d.params.end())
            throw std::invalid_argument(std::string("construction: missing parameter ") + k);
        return it->second;
    };
    if (d.kind == "product") {
        if (!d.base) throw std::invalid_argument("product: missing base matrix");
        return product_construction(*d.base, static_cast<int>(at("r")));
    }
    if (d.kind == "multinomial") {
        bool low = d.params.count("low") ? at("low") != 0 : false;
        return multinomial_construction(at("m"), static_cast<int>(at("r")), at("n"), low);
    }
    if (d.kind == "block-exact")
        return block_exact_construction(at("m"), static_cast<int>(at("r")), at("p"), at("q"));
    if (d.kind == "s-block")
        return s_block_construction(at("m"), static_cast<int>(at("r")), at("q"));
    if (d.kind == "ks-chain") return ks_chain_construction(at("m"), at("p"));
    throw std::invalid_argument("construction: unknown kind " + d.kind);
}

}  // namespace

VerificationReport verify_construction(const ConstructionDescriptor& d) {
    VerificationReport rep;
    rep.kind = d.kind;
    rep.claimed_cols = d.claimed_count.str();
    const auto t0 = std::chrono::steady_clock::now();
    try {
        RMatrix a = regenerate(d);
        rep.rows = a.rows();
        rep.cols = a.cols();
        rep.simple = is_simple(a);
        rep.count_ok = (BigUint(a.cols()) == d.claimed_count);
        rep.avoid_ok = family_avoided(a, d.claimed_family);
        rep.pass = rep.simple && rep.count_ok && rep.avoid_ok;
    } catch (const std::exception& e) {
        rep.note = e.what();
        rep.pass = false;
    }
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

ConstructionDescriptor describe_multinomial(std::size_t m, int r, std::size_t n,
                                            const RMatrix& avoided_2symbol, bool constrain_low) {
    ConstructionDescriptor d;
    d.kind = "multinomial";
    d.params = {{"m", static_cast<std::int64_t>(m)},
                {"r", r},
                {"n", static_cast<std::int64_t>(n)},
                {"low", constrain_low ? 1 : 0}};
    d.claimed_family = sym_family(avoided_2symbol, r);
    d.claimed_count = bounded_symbol_column_count(m, r, static_cast<std::uint32_t>(n));
    return d;
}

ConstructionDescriptor describe_block_exact(std::size_t m, int r, std::size_t p, std::size_t q) {
    ConstructionDescriptor d;
    d.kind = "block-exact";
    d.params = {{"m", static_cast<std::int64_t>(m)},
                {"r", r},
                {"p", static_cast<std::int64_t>(p)},
                {"q", static_cast<std::int64_t>(q)}};
    d.claimed_family = sym_family(make_const(p, q, 0), r);
    d.claimed_count = bounded_symbol_column_count(m, r, static_cast<std::uint32_t>(p)) +
                      BigUint((q - 1) * static_cast<std::uint64_t>(r - 1)) * binomial(m, p);
    return d;
}

ConstructionDescriptor describe_s_block(std::size_t m, int r, std::size_t p, std::size_t q) {
    ConstructionDescriptor d;
    d.kind = "s-block";
    d.params = {{"m", static_cast<std::int64_t>(m)},
                {"r", r},
                {"p", static_cast<std::int64_t>(p)},
                {"q", static_cast<std::int64_t>(q)}};
    d.claimed_family = s_family(make_const(p, q, 0), r);
    d.claimed_count = BigUint(static_cast<std::uint64_t>(r) * (q - 1));
    return d;
}

ConstructionDescriptor describe_ks_chain(std::size_t m, std::size_t p) {
    ConstructionDescriptor d;
    d.kind = "ks-chain";
    d.params = {{"m", static_cast<std::int64_t>(m)}, {"p", static_cast<std::int64_t>(p)}};
    d.claimed_family = single(make_block_side(p, 1, 1));
    d.claimed_count = binomial(m, p - 1);
    return d;
}

ConstructionDescriptor describe_product(const RMatrix& a2, int r, const RMatrix& avoided_2symbol) {
    ConstructionDescriptor d;
    d.kind = "product";
    d.params = {{"r", r}};
    d.base = a2;
    d.claimed_family = sym_family(avoided_2symbol, r);
    d.claimed_count = bigpow(BigUint(a2.cols()),
                             static_cast<std::uint64_t>(r) * (r - 1) / 2);
    return d;
}

}  // namespace forbcfg

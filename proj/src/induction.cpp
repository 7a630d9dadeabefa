#include "forbcfg/induction.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "forbcfg/combinatorics.hpp"
#include "forbcfg/turan.hpp"

namespace forbcfg {

namespace {

RMatrix delete_row(const RMatrix& f, std::size_t t) {
    std::vector<Column> cols;
    cols.reserve(f.cols());
    for (std::size_t j = 0; j < f.cols(); ++j) {
        Column c;
        c.reserve(f.rows() - 1);
        for (std::size_t i = 0; i < f.rows(); ++i)
            if (i != t) c.push_back(f.at(i, j));
        cols.push_back(std::move(c));
    }
    return RMatrix(f.rows() - 1, f.alphabet(), std::move(cols));
}

int binom2(int r) { return r * (r - 1) / 2; }

}  // namespace

std::vector<RMatrix> ch(const RMatrix& f) {
    if (f.alphabet() != 2) throw std::invalid_argument("ch: 2-symbol matrices only");
    if (f.rows() == 0 || f.cols() == 0) return {};

    const RMatrix row01 = make_row01();
    std::map<std::string, bool> prop_memo;
    auto prop = [&](const RMatrix& g) {
        // the text form drops the column count at zero rows, so key on both
        auto [it, fresh] =
            prop_memo.try_emplace(std::to_string(g.cols()) + "|" + g.to_text(), false);
        if (fresh) it->second = contains_config(f, direct_product(g, row01));
        return it->second;
    };

    std::vector<RMatrix> pool;
    for (std::size_t t = 0; t < f.rows(); ++t) {
        const RMatrix d = delete_row(f, t);
        // distinct columns of d with multiplicities
        std::vector<Column> distinct;
        std::vector<std::size_t> mult;
        for (std::size_t j = 0; j < d.cols(); ++j) {
            if (j == 0 || d.column(j) != d.column(j - 1)) {
                distinct.push_back(d.column(j));
                mult.push_back(1);
            } else {
                ++mult.back();
            }
        }
        auto build = [&](const std::vector<std::size_t>& take) {
            std::vector<Column> cols;
            for (std::size_t i = 0; i < take.size(); ++i)
                for (std::size_t c = 0; c < take[i]; ++c) cols.push_back(distinct[i]);
            return RMatrix(d.rows(), 2, std::move(cols));
        };
        // walk the sub-multiset lattice; keep the locally minimal members
        std::vector<std::size_t> take(distinct.size(), 0);
        std::vector<std::vector<std::size_t>> hits;
        auto rec = [&](auto&& self, std::size_t i) -> void {
            if (i == distinct.size()) {
                RMatrix g = build(take);
                if (g.cols() > 0 && prop(g)) hits.push_back(take);
                return;
            }
            for (std::size_t v = 0; v <= mult[i]; ++v) {
                take[i] = v;
                self(self, i + 1);
            }
            take[i] = 0;
        };
        rec(rec, 0);
        for (const auto& hit : hits) {
            bool minimal = true;
            for (std::size_t i = 0; i < hit.size() && minimal; ++i) {
                if (hit[i] == 0) continue;
                std::vector<std::size_t> sub = hit;
                --sub[i];
                RMatrix g = build(sub);
                if (g.cols() > 0 && prop(g)) minimal = false;
                if (g.cols() == 0 && prop(g)) minimal = false;
            }
            if (minimal) pool.push_back(build(hit));
        }
    }

    // dedupe by configuration class, then drop members that properly contain
    // another member (single-row removals cannot satisfy the condition: a
    // witness needs at least rows(F)-1 rows)
    std::vector<RMatrix> dedup;
    std::set<std::string> seen;
    for (const RMatrix& g : pool)
        if (seen.insert(config_key(g)).second) dedup.push_back(g);
    std::vector<RMatrix> out;
    for (const RMatrix& g : dedup) {
        bool minimal = true;
        for (const RMatrix& h : dedup) {
            if (&g == &h || config_equal(g, h)) continue;
            if (contains_config(h, g)) { minimal = false; break; }
        }
        if (minimal) out.push_back(g);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<RMatrix> ch_n(const RMatrix& f, std::size_t n) {
    std::vector<RMatrix> level{f};
    for (std::size_t step = 0; step < n; ++step) {
        std::vector<RMatrix> next;
        std::set<std::string> seen;
        for (const RMatrix& g : level)
            for (const RMatrix& h : ch(g))
                if (seen.insert(config_key(h)).second) next.push_back(h);
        level = std::move(next);
        if (level.empty()) break;
    }
    std::sort(level.begin(), level.end());
    return level;
}

int edge_multiplicity_cap(const RMatrix& f) {
    std::size_t p = std::max<std::size_t>(1, max_multiplicity(f));
    int lg = 0;
    while ((1u << lg) < p) ++lg;
    return static_cast<int>(f.rows()) + lg;
}

bool constant_bound_certified(const std::vector<RMatrix>& members, std::size_t max_l) {
    if (members.empty()) return false;
    for (std::size_t l = 2; l <= max_l; ++l) {
        const RMatrix targets[4] = {make_I(l), make_T(l), complement(make_I(l)),
                                    complement(make_T(l))};
        bool all = true;
        for (const RMatrix& target : targets) {
            bool hit = false;
            for (const RMatrix& g : members)
                if (contains_config(g, target)) { hit = true; break; }
            if (!hit) { all = false; break; }
        }
        if (all) return true;
    }
    return false;
}

namespace {

std::string join_names(const std::vector<std::string>& names) {
    std::string out;
    for (const std::string& n : names) {
        if (!out.empty()) out += ",";
        out += n;
    }
    return out;
}

RMatrix p_matrix() { return RMatrix::from_rows(2, {{1, 1}, {1, 1}, {0, 1}}); }
RMatrix l7_matrix() { return RMatrix::from_rows(2, {{1, 1}, {0, 1}, {0, 0}}); }

bool matches_up_to_complement(const RMatrix& f, const RMatrix& target) {
    return config_equal(f, target) || config_equal(f, complement(target));
}

}  // namespace

HFamilyResult h_family(const RMatrix& f, int r) {
    if (f.alphabet() != 2) throw std::invalid_argument("h_family: 2-symbol matrices only");
    if (r < 3) throw std::invalid_argument("h_family: r must be >= 3");
    HFamilyResult out;

    const int cap = edge_multiplicity_cap(f);
    out.family.add(std::to_string(cap) + "xe", make_single_edge(cap));
    out.log.push_back({"edge-multiplicity-cap",
                       "cap=" + std::to_string(cap), {std::to_string(cap) + "xe"}});

    // The star rule fires when some chain member fits inside a single-symbol
    // cell: the induction then wipes out one symbol and every remaining star
    // edge empties the matrix, independent of the rows chosen. The analogous
    // rule keyed on [0 1] members only bounds hand-picked row sequences and
    // is not used here; those graphs enter through curated entries instead.
    const RMatrix one_cell = RMatrix::from_rows(2, {{1}});
    const RMatrix zero_cell = RMatrix::from_rows(2, {{0}});
    std::vector<RMatrix> level{f};
    for (std::size_t n = 1; n <= f.rows() + 1; ++n) {
        std::vector<RMatrix> next;
        std::set<std::string> seen;
        for (const RMatrix& g : level)
            for (const RMatrix& h : ch(g))
                if (seen.insert(config_key(h)).second) next.push_back(h);
        level = std::move(next);
        if (level.empty()) break;

        bool single_symbol_member = false;
        for (const RMatrix& g : level)
            if (contains_config(g, one_cell) || contains_config(g, zero_cell)) {
                single_symbol_member = true;
                break;
            }
        if (single_symbol_member) {
            const std::string name =
                std::to_string(n) + "xS" + std::to_string(r - 1);
            out.family.add(name, make_star(r - 1, static_cast<int>(n)));
            out.log.push_back({"single-symbol-star-rule", "depth " + std::to_string(n),
                               {name}});
        }
        if (constant_bound_certified(level)) {
            const std::string name = std::to_string(n) + "xK" + std::to_string(r);
            out.family.add(name, make_complete(r, static_cast<int>(n)));
            out.log.push_back({"complete-graph-certification",
                               "chain level " + std::to_string(n) + " constant-bounded",
                               {name}});
        }
    }

    // curated entries for specific matrices
    if (matches_up_to_complement(f, make_T(2))) {
        out.family.add("P4", make_path(4));
        out.family.add("K3", make_complete(3));
        out.log.push_back({"triangular-pair-rule", "ordered pair analysis", {"P4", "K3"}});
    }
    if (matches_up_to_complement(f, make_F_abcd(1, 1, 1, 1))) {
        std::vector<std::string> names = {"frak_c2", "frak_d2", "gamma3",
                                          "2xS" + std::to_string(r - 1)};
        out.family.add("frak_c2", make_frak_c(2));
        out.family.add("frak_d2", make_frak_d(2));
        out.family.add("gamma3", make_gamma(3));
        out.family.add("2xS" + std::to_string(r - 1), make_star(r - 1, 2));
        if (r >= 4) {
            Multigraph two_triples(4);
            two_triples.set_mult(0, 1, 3);
            two_triples.set_mult(2, 3, 3);
            out.family.add("3e+3e", two_triples);
            names.push_back("3e+3e");
        }
        out.log.push_back({"identity-product-rule", "double edge builds the identity pair",
                           names});
    }
    if (r == 3 && matches_up_to_complement(f, make_F_abcd(2, 1, 1, 0))) {
        out.family.add("gamma3", make_gamma(3));
        out.family.add("2xS2", make_star(2, 2));
        out.family.add("frak_d2", make_frak_d(2));
        out.log.push_back({"ordered-case-analysis",
                           "all four-edge graphs on three symbols force a constant",
                           {"gamma3", "2xS2", "frak_d2"}});
    }
    return out;
}

std::optional<KnownExponent> known_two_symbol_exponent(const RMatrix& g) {
    if (g.alphabet() != 2 || g.cols() == 0 || !is_simple(g)) return std::nullopt;
    const std::size_t k = g.rows();
    if (k == 1) return KnownExponent{0, "one-row count"};
    if (g.cols() == 1) {
        std::size_t ones = 0;
        for (Symbol s : g.column(0)) ones += (s == 1);
        return KnownExponent{static_cast<int>(std::max(ones, k - ones)) - 1,
                             "single-column count"};
    }
    if (g.cols() == (std::size_t{1} << k)) return KnownExponent{static_cast<int>(k) - 1,
                                                                "complete-matrix bound"};
    for (std::size_t s = 1; s < k; ++s)
        if (config_equal(g, make_Ks(k, s)))
            return KnownExponent{static_cast<int>(k) - 1, "sum-slice equality"};
    if (k == 2) return KnownExponent{1, "two-row classification"};
    if (config_equal(g, make_block_side(k, 1, 1)))
        return KnownExponent{static_cast<int>(k) - 1, "zero-one pair count"};
    if (k == 3 && contains_config(g, linear_three_row_envelope()))
        return KnownExponent{1, "three-row linear classification"};
    if (config_equal(g, make_F_abcd(1, 1, 1, 1)))
        return KnownExponent{1, "four-by-two exact count"};
    if (!af10_predicate(g))
        return KnownExponent{static_cast<int>(k) - 1, "excluded-pair dichotomy"};
    return std::nullopt;
}

RMatrix linear_three_row_envelope() {
    return RMatrix::from_rows(2, {{1, 0, 1, 0}, {0, 1, 1, 1}, {0, 0, 0, 1}});
}

RMatrix ones_over_complete(std::size_t k) {
    if (k < 2) throw std::invalid_argument("ones_over_complete: k must be >= 2");
    RMatrix base = make_K(k - 1);
    std::vector<Column> cols;
    for (std::size_t j = 0; j < base.cols(); ++j) {
        Column c;
        c.push_back(1);
        c.insert(c.end(), base.column(j).begin(), base.column(j).end());
        cols.push_back(std::move(c));
    }
    return RMatrix(k, 2, std::move(cols));
}

bool af10_predicate(const RMatrix& f) {
    const std::size_t k = f.rows();
    bool no11 = false, no00 = false, noI2 = false;
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = a + 1; b < k; ++b) {
            bool has11 = false, has00 = false, has10 = false, has01 = false;
            for (std::size_t j = 0; j < f.cols(); ++j) {
                const Symbol x = f.at(a, j), y = f.at(b, j);
                has11 |= (x == 1 && y == 1);
                has00 |= (x == 0 && y == 0);
                has10 |= (x == 1 && y == 0);
                has01 |= (x == 0 && y == 1);
            }
            no11 |= !has11;
            no00 |= !has00;
            noI2 |= !(has10 && has01);
        }
    return no11 && no00 && noI2;
}

namespace {

bool has_constant_row(const RMatrix& f) {
    for (std::size_t i = 0; i < f.rows(); ++i) {
        bool all0 = true, all1 = true;
        for (std::size_t j = 0; j < f.cols(); ++j) {
            all0 &= f.at(i, j) == 0;
            all1 &= f.at(i, j) == 1;
        }
        if (all0 || all1) return true;
    }
    return false;
}

struct BlockShape {
    enum Kind { None, Const, Stack, Side } kind = None;
    std::size_t p = 0, q = 0, p0 = 0, p1 = 0, q0 = 0, q1 = 0;
};

BlockShape detect_block(const RMatrix& f) {
    BlockShape out;
    if (f.alphabet() != 2 || f.cols() == 0 || f.rows() == 0) return out;
    bool all_equal = true;
    for (std::size_t j = 1; j < f.cols(); ++j)
        if (f.column(j) != f.column(0)) { all_equal = false; break; }
    if (all_equal) {
        std::size_t ones = 0;
        for (Symbol s : f.column(0)) ones += (s == 1);
        if (ones == 0 || ones == f.rows()) {
            out.kind = BlockShape::Const;
            out.p = f.rows();
            out.q = f.cols();
        } else {
            out.kind = BlockShape::Stack;
            out.p1 = ones;
            out.p0 = f.rows() - ones;
            out.q = f.cols();
        }
        return out;
    }
    // distinct columns present: a side block iff every column is constant
    std::size_t q0 = 0, q1 = 0;
    for (std::size_t j = 0; j < f.cols(); ++j) {
        bool c0 = true, c1 = true;
        for (Symbol s : f.column(j)) {
            c0 &= (s == 0);
            c1 &= (s == 1);
        }
        if (c0) ++q0;
        else if (c1) ++q1;
        else return out;
    }
    out.kind = BlockShape::Side;
    out.p = f.rows();
    out.q0 = q0;
    out.q1 = q1;
    return out;
}

void push_cand(std::vector<DerivationStep>& cands, int e, const std::string& rule,
               const std::string& detail) {
    cands.push_back({rule, detail, e});
}

}  // namespace

ExponentSide lower_exponent(const RMatrix& f, int r) {
    if (f.alphabet() != 2) throw std::invalid_argument("lower_exponent: 2-symbol matrices only");
    if (r < 2) throw std::invalid_argument("lower_exponent: r must be >= 2");
    const int c2 = binom2(r);
    const std::size_t k = f.rows();
    std::vector<DerivationStep> cands;

    // bounded-symbol construction from the largest per-column count
    const std::size_t n1 = max_symbol_count_per_column(f, 1);
    const std::size_t n0 = max_symbol_count_per_column(f, 0);
    const std::size_t n = std::max(n0, n1);
    if (n >= 2)
        push_cand(cands, static_cast<int>(n - 1) * (r - 1), "multinomial construction",
                  "n=" + std::to_string(n));
    if (k >= 3)
        push_cand(cands, (static_cast<int>((k + 1) / 2) - 1) * (r - 1),
                  "column-majority floor", "k=" + std::to_string(k));

    const BlockShape shape = detect_block(f);
    if (shape.kind == BlockShape::Const && shape.p == 1 && shape.q >= 2)
        push_cand(cands, 1, "block formula linear part", "");
    if (shape.kind == BlockShape::Stack && std::max(shape.p0, shape.p1) == 1 && shape.q >= 2)
        push_cand(cands, 1, "near-constant construction", "");
    if (shape.kind == BlockShape::Side && shape.p == 1 && shape.q0 + shape.q1 >= 3)
        push_cand(cands, 1, "identity construction", "");

    // product construction over known sub-configurations
    for (std::size_t kk = 2; kk <= k; ++kk) {
        if (f.cols() >= (std::size_t{1} << kk) && contains_config(make_K(kk), f)) {
            push_cand(cands, static_cast<int>(kk - 1) * c2,
                      "product construction over complete matrix", "K" + std::to_string(kk));
        }
        for (std::size_t s = 1; s < kk; ++s) {
            RMatrix ks = make_Ks(kk, s);
            if (f.cols() >= ks.cols() && contains_config(ks, f))
                push_cand(cands, static_cast<int>(kk - 1) * c2,
                          "product construction over sum slice",
                          "K" + std::to_string(kk) + "^" + std::to_string(s));
        }
    }
    {
        // the only two-row patterns without a constant row whose 2-symbol
        // growth is linear
        const RMatrix two_row[] = {make_I(2), make_block_side(2, 1, 1)};
        for (const RMatrix& t : two_row)
            if (contains_config(t, f)) {
                push_cand(cands, c2, "product construction over two-row configuration", "");
                break;
            }
    }
    for (std::size_t p = 2; p <= k; ++p)
        if (contains_config(make_block_side(p, 1, 1), f))
            push_cand(cands, static_cast<int>(p - 1) * c2,
                      "product construction over zero-one pair", "p=" + std::to_string(p));
    for (std::size_t l = 2; l + 1 <= k; ++l) {
        // [0_{l x 1} T_l]
        std::vector<Column> cols;
        cols.push_back(Column(l, 0));
        RMatrix t = make_T(l);
        for (std::size_t j = 0; j < t.cols(); ++j) cols.push_back(t.column(j));
        RMatrix bordered(l, 2, std::move(cols));
        if (contains_config(bordered, f))
            push_cand(cands, static_cast<int>(l - 1) * c2,
                      "product construction over bordered triangular", "l=" + std::to_string(l));
    }
    {
        // four-row quadratic configurations
        const RMatrix f4 = RMatrix::from_rows(2, {{1, 0}, {1, 0}, {0, 1}, {0, 1}});
        const RMatrix f5 =
            RMatrix::from_rows(2, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}});
        const RMatrix f6 = RMatrix::from_rows(2, {{1, 0, 1, 1, 1, 0, 1, 1},
                                                  {0, 1, 1, 0, 1, 1, 0, 0},
                                                  {0, 0, 1, 1, 0, 1, 0, 1},
                                                  {0, 0, 0, 1, 0, 0, 1, 0}});
        const RMatrix f7 = RMatrix::from_rows(2, {{1, 0, 1, 1, 1, 1, 0, 1},
                                                  {0, 1, 1, 1, 1, 0, 1, 0},
                                                  {0, 0, 1, 0, 0, 0, 1, 1},
                                                  {0, 0, 0, 1, 0, 1, 0, 0}});
        const RMatrix f8 = RMatrix::from_rows(2, {{1, 0, 1, 0, 0, 1},
                                                  {0, 1, 0, 1, 1, 0},
                                                  {0, 0, 1, 1, 1, 1},
                                                  {0, 0, 1, 1, 0, 0}});
        const RMatrix f3 = RMatrix::from_rows(2, {{1}, {1}, {1}, {0}});
        auto has_seed = [&](const RMatrix& g) {
            return contains_config(f3, g) || contains_config(complement(f3), g) ||
                   contains_config(f4, g) || contains_config(f5, g) ||
                   contains_config(complement(f5), g);
        };
        auto inside_env = [&](const RMatrix& g) {
            return contains_config(g, f6) || contains_config(g, f7) || contains_config(g, f8);
        };
        if (k == 4 && is_simple(f) && !has_constant_row(f) && has_seed(f) &&
            inside_env(f)) {
            push_cand(cands, 2 * c2, "product construction over four-row quadratic",
                      "the matrix itself");
        }
        const RMatrix quads[] = {f4, f5, complement(f5), f6, f7, f8};
        for (const RMatrix& quad : quads) {
            if (f.rows() >= 4 && contains_config(quad, f) && has_seed(quad) && inside_env(quad)) {
                push_cand(cands, 2 * c2, "product construction over four-row quadratic", "");
                break;
            }
        }
    }
    if (is_simple(f) && k >= 2 && !has_constant_row(f)) {
        // the product construction needs the base itself to have no constant row
        if (auto db = known_two_symbol_exponent(f); db && db->exponent >= 1)
            push_cand(cands, db->exponent * c2, "product construction", db->citation);
    }

    ExponentSide out;
    if (cands.empty()) {
        out.exponent = 0;
        out.chain.push_back({"no-construction", "no applicable lower bound rule", 0});
        return out;
    }
    std::stable_sort(cands.begin(), cands.end(),
                     [](const DerivationStep& a, const DerivationStep& b) {
                         return a.exponent > b.exponent;
                     });
    out.exponent = cands.front().exponent;
    out.chain = std::move(cands);
    return out;
}

ExponentSide upper_exponent(const RMatrix& f, int r) {
    if (f.alphabet() != 2) throw std::invalid_argument("upper_exponent: 2-symbol matrices only");
    if (r < 3) throw std::invalid_argument("upper_exponent: r must be >= 3");
    const int c2 = binom2(r);
    const std::size_t k = f.rows();
    std::vector<DerivationStep> cands;

    if (k == 1 && is_simple(f)) push_cand(cands, 0, "one-row remark", "");
    if (config_equal(f, make_col01())) push_cand(cands, 0, "one-column two-symbol remark", "");

    if (!is_simple(f)) {
        ExponentSide sup = upper_exponent(support(f), r);
        push_cand(cands, std::max(sup.exponent, static_cast<int>(k)),
                  "support multiplicity bound",
                  "support exponent " + std::to_string(sup.exponent) + ", k=" +
                      std::to_string(k));
    }

    {
        // F fits under s.K_k with s = max multiplicity; repeated columns add
        // a Theta(m^k) term that only binds for k below C(r,2)/(C(r,2)-1)
        int e = static_cast<int>(k >= 1 ? k - 1 : 0) * c2;
        if (!is_simple(f)) e = std::max(e, static_cast<int>(k));
        push_cand(cands, e, "symbol-pair complete bound", "k=" + std::to_string(k));
    }

    if (is_simple(f) && k >= 2 && af10_predicate(f))
        push_cand(cands, static_cast<int>(k - 2) * c2, "identity-triangular reduction", "");

    if (k >= 3) {
        const RMatrix umbrella = ones_over_complete(k);
        if (contains_config(f, umbrella) || contains_config(complement(f), umbrella)) {
            const int e = std::max(static_cast<int>(k - 1) * (r - 1),
                                   static_cast<int>(k - 2) * c2);
            push_cand(cands, e, "ones-over-complete bound", "k=" + std::to_string(k));
        }
    }

    if (matches_up_to_complement(f, p_matrix()))
        push_cand(cands, 2 * (r - 1), "ordered star exclusion", "");
    if (matches_up_to_complement(f, l7_matrix()))
        push_cand(cands, r - 1, "ordered coverage exclusion", "");

    const BlockShape shape = detect_block(f);
    if (shape.kind == BlockShape::Const) {
        if (shape.p >= 2)
            push_cand(cands, static_cast<int>(shape.p - 1) * (r - 1), "block majority count",
                      "p=" + std::to_string(shape.p));
        else if (shape.q >= 2)
            push_cand(cands, 1, "support bound over one-row block", "");
    }
    if (shape.kind == BlockShape::Stack) {
        const std::size_t mp = std::max(shape.p0, shape.p1);
        if (mp >= 2)
            push_cand(cands, static_cast<int>(mp - 1) * (r - 1), "stacked blocks bound",
                      "p=" + std::to_string(mp));
        else if (shape.q >= 2)
            push_cand(cands, 1, "one-row pair support bound", "");
    }
    if (shape.kind == BlockShape::Side) {
        if (shape.p >= 2)
            push_cand(cands, static_cast<int>(shape.p - 1) * c2, "side blocks bound",
                      "p=" + std::to_string(shape.p));
        else if (shape.q0 + shape.q1 >= 3)
            push_cand(cands, 1, "one-row side support bound", "");
    }

    try {
        HFamilyResult hf = h_family(f, r);
        const int q = edge_multiplicity_cap(f) - 1;
        TuranResult ex = ex_q(static_cast<std::size_t>(r), q, hf.family);
        std::vector<std::string> names;
        for (const NamedGraph& g : hf.family.members()) names.push_back(g.name);
        push_cand(cands, 1 + ex.value, "induction multigraph bound",
                  "q=" + std::to_string(q) + " family {" + join_names(names) + "}");
    } catch (const std::exception&) {
        // budget exceeded; other rules still apply
    }

    std::stable_sort(cands.begin(), cands.end(),
                     [](const DerivationStep& a, const DerivationStep& b) {
                         return a.exponent < b.exponent;
                     });
    ExponentSide out;
    out.exponent = cands.front().exponent;
    out.chain = std::move(cands);
    return out;
}

ExponentBound classify(const RMatrix& f, int r) {
    if (f.alphabet() != 2) throw std::invalid_argument("classify: 2-symbol matrices only");
    if (r < 3) throw std::invalid_argument("classify: r must be >= 3");
    if (f.cols() == 0) throw std::invalid_argument("classify: empty matrix");
    ExponentBound out;

    if (f.rows() == 1 && is_simple(f)) {
        out.lower = out.upper = 0;
        out.tight = true;
        out.exact_value = 1;
        out.lower_chain.push_back({"one-row remark", "single admissible column", 0});
        out.upper_chain = out.lower_chain;
        return out;
    }
    if (config_equal(f, make_col01())) {
        out.lower = out.upper = 0;
        out.tight = true;
        out.exact_value = static_cast<std::uint64_t>(r);
        out.lower_chain.push_back({"one-column two-symbol remark", "constant columns only", 0});
        out.upper_chain = out.lower_chain;
        return out;
    }

    ExponentSide lo = lower_exponent(f, r);
    ExponentSide up = upper_exponent(f, r);
    out.lower = lo.exponent;
    out.upper = up.exponent;
    out.tight = (lo.exponent == up.exponent);
    out.lower_chain = std::move(lo.chain);
    out.upper_chain = std::move(up.chain);
    return out;
}

}  // namespace forbcfg

#include <chrono>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "forbcfg/cache.hpp"
#include "forbcfg/constructions.hpp"
#include "forbcfg/family.hpp"
#include "forbcfg/induction.hpp"
#include "forbcfg/matrix.hpp"
#include "forbcfg/solver.hpp"
#include "forbcfg/tables.hpp"
#include "forbcfg/turan.hpp"

using nlohmann::json;
using namespace forbcfg;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string now_iso() {
    const auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
    return buf;
}

// Family selection shared by several subcommands: an explicit family file,
// or the symbol-pair closure of a 2-symbol matrix.
struct FamilyArgs {
    std::string family_file;
    std::string sym_file;
    std::string sfam_file;

    void attach(CLI::App* cmd) {
        cmd->add_option("--family", family_file, "family file (matrices separated by blank lines)");
        cmd->add_option("--sym", sym_file, "2-symbol matrix file; forbid its Sym closure at -r");
        cmd->add_option("--sfam", sfam_file, "2-symbol matrix file; forbid its S closure at -r");
    }
    ConfigFamily resolve(int r) const {
        const int given = !family_file.empty() + !sym_file.empty() + !sfam_file.empty();
        if (given != 1)
            throw CLI::ValidationError("exactly one of --family/--sym/--sfam is required");
        if (!family_file.empty()) return ConfigFamily::parse(slurp(family_file));
        if (!sym_file.empty()) return sym_family(RMatrix::parse(slurp(sym_file)), r);
        return s_family(RMatrix::parse(slurp(sfam_file)), r);
    }
};

std::map<std::string, std::int64_t> parse_params(const std::string& spec) {
    std::map<std::string, std::int64_t> out;
    std::istringstream in(spec);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        if (tok.empty()) continue;
        auto eq = tok.find('=');
        if (eq == std::string::npos)
            throw CLI::ValidationError("--params entries must look like k=v");
        out[tok.substr(0, eq)] = std::stoll(tok.substr(eq + 1));
    }
    return out;
}

json report_json(const VerificationReport& rep) {
    json j;
    j["kind"] = rep.kind;
    j["rows"] = rep.rows;
    j["cols"] = rep.cols;
    j["claimed_cols"] = rep.claimed_cols;
    j["simple"] = rep.simple;
    j["count_ok"] = rep.count_ok;
    j["avoid_ok"] = rep.avoid_ok;
    j["pass"] = rep.pass;
    if (!rep.note.empty()) j["note"] = rep.note;
    return j;
}

json exponent_json(const ExponentBound& b) {
    json j;
    j["lower"] = b.lower;
    j["upper"] = b.upper;
    j["tight"] = b.tight;
    if (b.exact_value) j["exact_value"] = *b.exact_value;
    auto chain = [](const std::vector<DerivationStep>& steps) {
        json arr = json::array();
        for (const DerivationStep& s : steps) {
            json e;
            e["rule"] = s.rule;
            e["detail"] = s.detail;
            e["exponent"] = s.exponent;
            arr.push_back(std::move(e));
        }
        return arr;
    };
    j["lower_chain"] = chain(b.lower_chain);
    j["upper_chain"] = chain(b.upper_chain);
    return j;
}

GraphFamily parse_family_names(const std::string& names) {
    GraphFamily fam;
    std::istringstream in(names);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        if (tok.empty()) continue;
        fam.add(tok, parse_graph_name(tok));
    }
    return fam;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"forbidden-configuration toolkit"};
    app.require_subcommand(1);
    bool no_timestamp = false;
    app.add_flag("--no-timestamp", no_timestamp, "omit timestamps and timings from reports");

    // forb-exact
    auto* cmd_forb = app.add_subcommand("forb-exact", "exact forbidden-configuration maximum");
    int fe_m = 0, fe_r = 2, fe_threads = 0;
    std::uint64_t fe_budget = 200'000'000;
    std::string fe_cache, fe_witness_out = "witness.txt";
    FamilyArgs fe_family;
    cmd_forb->add_option("-m", fe_m, "row count")->required();
    cmd_forb->add_option("-r", fe_r, "alphabet size")->required();
    fe_family.attach(cmd_forb);
    cmd_forb->add_option("--budget-nodes", fe_budget, "search node budget");
    cmd_forb->add_option("--threads,-T", fe_threads, "worker threads (default: env THREADS or 1)");
    cmd_forb->add_option("--cache", fe_cache, "cache file (default: env CACHE_PATH)");
    cmd_forb->add_option("--witness-out", fe_witness_out, "path for the witness matrix");

    // construct
    auto* cmd_con = app.add_subcommand("construct", "generate and verify a construction");
    std::string con_kind, con_params, con_base, con_avoids, con_out;
    cmd_con->add_option("--kind", con_kind,
                        "product | multinomial | block-exact | s-block | ks-chain")
        ->required();
    cmd_con->add_option("--params", con_params, "comma-separated k=v parameters");
    cmd_con->add_option("--base", con_base, "base matrix file (product)");
    cmd_con->add_option("--avoids", con_avoids,
                        "2-symbol matrix the product base avoids (product)");
    cmd_con->add_option("-o,--out", con_out, "write the matrix here (default: stdout)");

    // verify-avoid
    auto* cmd_va = app.add_subcommand("verify-avoid", "check a matrix against a family");
    std::string va_matrix;
    int va_r = 0;
    FamilyArgs va_family;
    cmd_va->add_option("-A,--matrix", va_matrix, "matrix file")->required();
    cmd_va->add_option("-r", va_r, "alphabet for --sym/--sfam (default: matrix alphabet)");
    va_family.attach(cmd_va);

    // bounds
    auto* cmd_b = app.add_subcommand("bounds", "closed-form bound evaluators");
    std::string b_op, b_matrix;
    int b_m = 0, b_r = 3;
    long b_p = 1, b_q = 1, b_k = 1, b_s = 0;
    std::uint64_t b_forb_supp = 0;
    cmd_b->add_option("--op", b_op, "sauer | block-formula | s-block-value | support-bound")
        ->required();
    cmd_b->add_option("-m", b_m, "row count");
    cmd_b->add_option("-r", b_r, "alphabet size");
    cmd_b->add_option("-p", b_p, "block height");
    cmd_b->add_option("-q", b_q, "block width");
    cmd_b->add_option("-k", b_k, "row count of the forbidden matrix");
    cmd_b->add_option("-s", b_s, "column sum");
    cmd_b->add_option("-F", b_matrix, "matrix file (support-bound)");
    cmd_b->add_option("--forb-supp", b_forb_supp, "known bound for the support (support-bound)");

    // chain
    auto* cmd_ch = app.add_subcommand("chain", "iterated minimal-configuration chains");
    std::string ch_matrix;
    int ch_depth = 1;
    cmd_ch->add_option("-F", ch_matrix, "matrix file")->required();
    cmd_ch->add_option("-n", ch_depth, "chain depth")->required();

    // turan
    auto* cmd_tu = app.add_subcommand("turan", "extremal multigraph edge counts");
    int tu_n = 0, tu_q = 1;
    std::string tu_names, tu_file;
    cmd_tu->add_option("-n", tu_n, "vertex count")->required();
    cmd_tu->add_option("-q", tu_q, "multiplicity cap")->required();
    cmd_tu->add_option("--family", tu_names, "comma list of graph names (P4,K3,2xS2,...)");
    cmd_tu->add_option("--family-file", tu_file, "multigraph file: n then 'i j mult' lines");

    // classify
    auto* cmd_cl = app.add_subcommand("classify", "growth exponent classification");
    std::string cl_matrix;
    int cl_r = 3;
    cmd_cl->add_option("-F", cl_matrix, "2-symbol matrix file")->required();
    cmd_cl->add_option("-r", cl_r, "alphabet size")->required();

    // tables
    auto* cmd_ta = app.add_subcommand("tables", "regenerate the bundled result tables");
    int ta_which = 1;
    std::string ta_r = "3,4", ta_expect, ta_format = "json";
    cmd_ta->add_option("--which", ta_which, "table id (1-4)")->required();
    cmd_ta->add_option("--r", ta_r, "comma list of alphabet sizes");
    cmd_ta->add_option("--expectations", ta_expect, "expectations file");
    cmd_ta->add_option("--format", ta_format, "json | csv");

    // cache
    auto* cmd_ca = app.add_subcommand("cache", "inspect or merge result caches");
    std::string ca_show, ca_into, ca_from;
    cmd_ca->add_option("--show", ca_show, "print entries of this cache file");
    cmd_ca->add_option("--into", ca_into, "merge target");
    cmd_ca->add_option("--from", ca_from, "merge source");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*cmd_forb) {
            if (fe_threads == 0) {
                if (const char* env = std::getenv("THREADS")) fe_threads = std::atoi(env);
                if (fe_threads <= 0) fe_threads = 1;
            }
            if (fe_cache.empty()) {
                if (const char* env = std::getenv("CACHE_PATH")) fe_cache = env;
            }
            ConfigFamily fam = fe_family.resolve(fe_r);
            SolveOptions opts;
            opts.node_budget = fe_budget;
            opts.threads = fe_threads;
            ForbCache cache;
            if (!fe_cache.empty()) {
                cache = ForbCache::load(fe_cache);
                opts.cache = &cache;
            }
            SolveResult res = exact_forb(fe_m, fe_r, fam, opts);
            if (!fe_cache.empty()) cache.save(fe_cache);
            json j;
            j["value"] = res.value;
            j["status"] = res.status;
            j["nodes"] = res.nodes;
            if (!no_timestamp) {
                j["seconds"] = res.seconds;
                j["timestamp"] = now_iso();
            }
            if (res.from_cache) j["from_cache"] = true;
            if (!res.from_cache && !fe_witness_out.empty()) {
                std::ofstream out(fe_witness_out);
                out << res.witness.to_text();
                j["witness_path"] = fe_witness_out;
            }
            std::cout << j.dump(2) << "\n";
            return res.status == "exact" ? 0 : 1;
        }

        if (*cmd_con) {
            auto params = parse_params(con_params);
            auto geti = [&](const char* k, std::int64_t dflt) {
                auto it = params.find(k);
                return it == params.end() ? dflt : it->second;
            };
            ConstructionDescriptor d;
            if (con_kind == "product") {
                if (con_base.empty() || con_avoids.empty())
                    throw CLI::ValidationError("product needs --base and --avoids");
                RMatrix base = RMatrix::parse(slurp(con_base));
                RMatrix avoided = RMatrix::parse(slurp(con_avoids));
                d = describe_product(base, static_cast<int>(geti("r", 3)), avoided);
            } else if (con_kind == "multinomial") {
                const bool low = geti("low", 0) != 0;
                RMatrix avoided = make_const(geti("n", 2), 1, low ? 0 : 1);
                d = describe_multinomial(geti("m", 4), static_cast<int>(geti("r", 3)),
                                         geti("n", 2), avoided, low);
            } else if (con_kind == "block-exact") {
                d = describe_block_exact(geti("m", 4), static_cast<int>(geti("r", 3)),
                                         geti("p", 2), geti("q", 2));
            } else if (con_kind == "s-block") {
                d = describe_s_block(geti("m", 4), static_cast<int>(geti("r", 3)),
                                     geti("p", 2), geti("q", 2));
            } else if (con_kind == "ks-chain") {
                d = describe_ks_chain(geti("m", 4), geti("p", 2));
            } else {
                throw CLI::ValidationError("unknown construction kind " + con_kind);
            }
            VerificationReport rep = verify_construction(d);
            json j = report_json(rep);
            if (!no_timestamp) j["seconds"] = rep.seconds;
            if (rep.pass) {
                RMatrix a = [&] {
                    if (d.kind == "product")
                        return product_construction(*d.base,
                                                    static_cast<int>(d.params.at("r")));
                    if (d.kind == "multinomial")
                        return multinomial_construction(d.params.at("m"),
                                                        static_cast<int>(d.params.at("r")),
                                                        d.params.at("n"),
                                                        d.params.count("low") &&
                                                            d.params.at("low") != 0);
                    if (d.kind == "block-exact")
                        return block_exact_construction(d.params.at("m"),
                                                        static_cast<int>(d.params.at("r")),
                                                        d.params.at("p"), d.params.at("q"));
                    if (d.kind == "s-block")
                        return s_block_construction(d.params.at("m"),
                                                    static_cast<int>(d.params.at("r")),
                                                    d.params.at("q"));
                    return ks_chain_construction(d.params.at("m"), d.params.at("p"));
                }();
                if (con_out.empty()) {
                    std::cout << a.to_text();
                } else {
                    std::ofstream out(con_out);
                    out << a.to_text();
                    std::ofstream sidecar(con_out + ".json");
                    sidecar << j.dump(2) << "\n";
                }
            }
            std::cerr << j.dump(2) << "\n";
            return rep.pass ? 0 : 1;
        }

        if (*cmd_va) {
            RMatrix a = RMatrix::parse(slurp(va_matrix));
            ConfigFamily fam = va_family.resolve(va_r > 0 ? va_r : a.alphabet());
            bool ok = family_avoided(a, fam);
            json j;
            j["avoided"] = ok;
            std::cout << j.dump(2) << "\n";
            return ok ? 0 : 1;
        }

        if (*cmd_b) {
            json j;
            if (b_op == "sauer") {
                j["value"] = sauer_formula(b_m, b_k).str();
            } else if (b_op == "block-formula") {
                j["value"] = block_formula(b_m, b_r, b_p, b_q).str();
            } else if (b_op == "s-block-value") {
                SBlockValue v = s_block_value(b_m, b_r, b_p, b_q);
                j["value"] = v.value;
                if (!v.note.empty()) j["note"] = v.note;
            } else if (b_op == "support-bound") {
                if (b_matrix.empty()) throw CLI::ValidationError("support-bound needs -F");
                RMatrix f = RMatrix::parse(slurp(b_matrix));
                j["value"] = support_bound(b_m, b_r, f, BigUint(b_forb_supp)).str();
            } else {
                throw CLI::ValidationError("unknown bounds op " + b_op);
            }
            std::cout << j.dump(2) << "\n";
            return 0;
        }

        if (*cmd_ch) {
            RMatrix f = RMatrix::parse(slurp(ch_matrix));
            std::vector<RMatrix> level{f};
            for (int i = 1; i <= ch_depth; ++i) {
                std::vector<RMatrix> next;
                std::set<std::string> seen;
                for (const RMatrix& g : level)
                    for (const RMatrix& h : ch(g))
                        if (seen.insert(config_key(h)).second) next.push_back(h);
                level = std::move(next);
                std::cout << "# chain level " << i << " (" << level.size() << " members)\n";
                for (const RMatrix& g : level) std::cout << g.to_text() << "\n";
                if (level.empty()) break;
            }
            return 0;
        }

        if (*cmd_tu) {
            GraphFamily fam;
            if (!tu_names.empty()) fam = parse_family_names(tu_names);
            if (!tu_file.empty()) fam.add("file", Multigraph::parse(slurp(tu_file)));
            TuranResult res = ex_q(tu_n, tu_q, fam);
            json j;
            j["value"] = res.value;
            j["states"] = res.states;
            j["witness"] = res.witness.to_text();
            std::cout << j.dump(2) << "\n";
            return 0;
        }

        if (*cmd_cl) {
            RMatrix f = RMatrix::parse(slurp(cl_matrix));
            ExponentBound b = classify(f, cl_r);
            std::cout << exponent_json(b).dump(2) << "\n";
            return 0;
        }

        if (*cmd_ta) {
            std::vector<int> rs;
            std::istringstream in(ta_r);
            std::string tok;
            while (std::getline(in, tok, ',')) rs.push_back(std::stoi(tok));
            const std::string path =
                ta_expect.empty() ? default_expectations_path() : ta_expect;
            TableReport rep = run_table(ta_which, rs, path);
            if (ta_format == "csv") std::cout << table_report_csv(rep);
            else std::cout << table_report_json(rep) << "\n";
            return rep.mismatches == 0 ? 0 : 1;
        }

        if (*cmd_ca) {
            if (!ca_show.empty()) {
                ForbCache cache = ForbCache::load(ca_show);
                for (const auto& [k, e] : cache.entries())
                    std::cout << k << " -> " << e.value << " (" << e.method << ")\n";
                return 0;
            }
            if (!ca_into.empty() && !ca_from.empty()) {
                ForbCache into = ForbCache::load(ca_into);
                into.merge(ForbCache::load(ca_from));
                into.save(ca_into);
                std::cout << "merged " << ca_from << " into " << ca_into << "\n";
                return 0;
            }
            throw CLI::ValidationError("cache needs --show or --into/--from");
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "forbcfg/cache.hpp"
#include "forbcfg/constructions.hpp"
#include "forbcfg/family.hpp"
#include "forbcfg/induction.hpp"
#include "forbcfg/matrix.hpp"
#include "forbcfg/solver.hpp"
#include "forbcfg/tables.hpp"
#include "forbcfg/turan.hpp"

namespace py = pybind11;
using namespace forbcfg;

namespace {

RMatrix matrix_from_rows(int alphabet, const std::vector<std::vector<int>>& rows) {
    return RMatrix::from_rows(alphabet, rows);
}

py::dict solve_dict(std::size_t m, int r, const ConfigFamily& fam, std::uint64_t node_budget,
                    int threads) {
    SolveOptions opts;
    opts.node_budget = node_budget;
    opts.threads = threads;
    SolveResult res = exact_forb(m, r, fam, opts);
    py::dict d;
    d["value"] = res.value;
    d["status"] = res.status;
    d["nodes"] = res.nodes;
    d["seconds"] = res.seconds;
    d["witness"] = res.witness;
    return d;
}

py::dict classify_dict(const RMatrix& f, int r) {
    ExponentBound b = classify(f, r);
    py::dict d;
    d["lower"] = b.lower;
    d["upper"] = b.upper;
    d["tight"] = b.tight;
    if (b.exact_value) d["exact_value"] = *b.exact_value;
    auto chain = [](const std::vector<DerivationStep>& steps) {
        py::list out;
        for (const DerivationStep& s : steps) {
            py::dict e;
            e["rule"] = s.rule;
            e["detail"] = s.detail;
            e["exponent"] = s.exponent;
            out.append(e);
        }
        return out;
    };
    d["lower_chain"] = chain(b.lower_chain);
    d["upper_chain"] = chain(b.upper_chain);
    return d;
}

py::dict verify_dict(const VerificationReport& rep) {
    py::dict d;
    d["kind"] = rep.kind;
    d["rows"] = rep.rows;
    d["cols"] = rep.cols;
    d["claimed_cols"] = rep.claimed_cols;
    d["simple"] = rep.simple;
    d["count_ok"] = rep.count_ok;
    d["avoid_ok"] = rep.avoid_ok;
    d["pass"] = rep.pass;
    d["note"] = rep.note;
    return d;
}

}  // namespace

PYBIND11_MODULE(forbcfg, m) {
    m.doc() = "forbidden-configuration toolkit: exact counts, constructions and "
              "growth classification for r-symbol matrices";

    py::class_<RMatrix>(m, "RMatrix")
        .def(py::init(&matrix_from_rows), py::arg("alphabet"), py::arg("rows"))
        .def_static("parse", &RMatrix::parse)
        .def_property_readonly("rows", &RMatrix::rows)
        .def_property_readonly("cols", &RMatrix::cols)
        .def_property_readonly("alphabet", &RMatrix::alphabet)
        .def("to_text", &RMatrix::to_text)
        .def("at", [](const RMatrix& a, std::size_t i, std::size_t j) {
            return static_cast<int>(a.at(i, j));
        })
        .def("__eq__", [](const RMatrix& a, const RMatrix& b) { return a == b; })
        .def("__repr__", [](const RMatrix& a) {
            return "<RMatrix " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                   " over " + std::to_string(a.alphabet()) + " symbols>";
        });

    py::class_<ConfigFamily>(m, "ConfigFamily")
        .def_static("parse", &ConfigFamily::parse)
        .def_property_readonly("alphabet", &ConfigFamily::alphabet)
        .def_property_readonly("members", &ConfigFamily::members)
        .def("normalize", &ConfigFamily::normalize)
        .def("digest", &ConfigFamily::digest)
        .def("to_text", &ConfigFamily::to_text);

    m.def("is_simple", &is_simple);
    m.def("support", &support);
    m.def("max_multiplicity", &max_multiplicity);
    m.def("complement", &complement);
    m.def("relabel", &relabel, py::arg("f"), py::arg("i"), py::arg("j"), py::arg("r"));
    m.def("direct_product", &direct_product);
    m.def("contains_config", py::overload_cast<const RMatrix&, const RMatrix&>(&contains_config));
    m.def("config_equal", &config_equal);
    m.def("family_avoided", &family_avoided);
    m.def("sym_family", &sym_family);
    m.def("s_family", &s_family);

    m.def("make_K", &make_K);
    m.def("make_Ks", &make_Ks);
    m.def("make_I", &make_I);
    m.def("make_T", &make_T);
    m.def("make_const", &make_const, py::arg("p"), py::arg("q"), py::arg("sym"),
          py::arg("alphabet") = 2);
    m.def("make_F_abcd", &make_F_abcd);
    m.def("make_block_side", &make_block_side);
    m.def("make_block_stack", &make_block_stack);

    m.def("exact_forb", &solve_dict, py::arg("m"), py::arg("r"), py::arg("family"),
          py::arg("node_budget") = 200'000'000ull, py::arg("threads") = 1);
    m.def("sauer_formula",
          [](std::uint64_t mm, std::uint64_t k) { return sauer_formula(mm, k).str(); });
    m.def("ks_equality_check", [](std::size_t mm, std::size_t k, std::size_t s) {
        return ks_equality_check(mm, k, s);
    });
    m.def("block_formula", [](std::uint64_t mm, int r, std::uint64_t p, std::uint64_t q) {
        return block_formula(mm, r, p, q).str();
    });
    m.def("support_bound", [](std::uint64_t mm, int r, const RMatrix& f,
                              std::uint64_t forb_supp) {
        return support_bound(mm, r, f, BigUint(forb_supp)).str();
    });

    m.def("multinomial_construction", &multinomial_construction, py::arg("m"), py::arg("r"),
          py::arg("n"), py::arg("constrain_low") = false,
          py::arg("column_budget") = kDefaultColumnBudget);
    m.def("block_exact_construction", &block_exact_construction, py::arg("m"), py::arg("r"),
          py::arg("p"), py::arg("q"), py::arg("column_budget") = kDefaultColumnBudget);
    m.def("s_block_construction", &s_block_construction);
    m.def("ks_chain_construction", &ks_chain_construction);
    m.def("product_construction", &product_construction, py::arg("a2"), py::arg("r"),
          py::arg("column_budget") = kDefaultColumnBudget);
    m.def("verify_multinomial", [](std::size_t mm, int r, std::size_t n, const RMatrix& avoided,
                                   bool low) {
        return verify_dict(verify_construction(describe_multinomial(mm, r, n, avoided, low)));
    });
    m.def("verify_block_exact", [](std::size_t mm, int r, std::size_t p, std::size_t q) {
        return verify_dict(verify_construction(describe_block_exact(mm, r, p, q)));
    });

    m.def("ch", &ch);
    m.def("ch_n", &ch_n);
    m.def("classify", &classify_dict, py::arg("f"), py::arg("r"));
    m.def("ex_q", [](std::size_t n, int q, const std::vector<std::string>& names) {
        GraphFamily fam;
        for (const std::string& name : names) fam.add(name, parse_graph_name(name));
        TuranResult res = ex_q(n, q, fam);
        py::dict d;
        d["value"] = res.value;
        d["witness"] = res.witness.to_text();
        return d;
    });
    m.def("run_table", [](int which, const std::vector<int>& rs, const std::string& path) {
        TableReport rep = run_table(which, rs, path.empty() ? default_expectations_path() : path);
        py::dict d;
        d["table"] = rep.table_id;
        d["mismatches"] = rep.mismatches;
        py::list rows;
        for (const TableRowResult& r : rep.rows) {
            py::dict row;
            row["name"] = r.name;
            row["r"] = r.r;
            row["status"] = r.status;
            row["lower"] = r.lower;
            row["upper"] = r.upper;
            row["tight"] = r.tight;
            rows.append(row);
        }
        d["rows"] = rows;
        return d;
    }, py::arg("which"), py::arg("rs") = std::vector<int>{3, 4}, py::arg("path") = "");
}

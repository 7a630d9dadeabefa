#include "forbcfg/tables.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace forbcfg {

using nlohmann::json;

namespace {

struct ExprParser {
    const std::string& s;
    std::size_t pos = 0;
    const std::map<std::string, long>& vars;

    void skip() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& msg) {
        throw std::invalid_argument("expression error in \"" + s + "\": " + msg);
    }

    long parse_expr() {
        long v = parse_term();
        while (true) {
            skip();
            if (eat('+')) v += parse_term();
            else if (eat('-')) v -= parse_term();
            else return v;
        }
    }
    long parse_term() {
        long v = parse_factor();
        while (eat('*')) v *= parse_factor();
        return v;
    }
    long parse_factor() {
        skip();
        if (eat('(')) {
            long v = parse_expr();
            if (!eat(')')) fail("missing )");
            return v;
        }
        if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            long v = 0;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
                v = v * 10 + (s[pos++] - '0');
            return v;
        }
        std::string ident;
        while (pos < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
            ident += s[pos++];
        if (ident.empty()) fail("unexpected character");
        if (eat('(')) {
            std::vector<long> args{parse_expr()};
            while (eat(',')) args.push_back(parse_expr());
            if (!eat(')')) fail("missing ) after arguments");
            if (ident == "C") {
                if (args.size() != 2) fail("C takes two arguments");
                long n = args[0], k = args[1];
                if (k < 0 || k > n) return 0;
                long v = 1;
                for (long i = 0; i < k; ++i) v = v * (n - i) / (i + 1);
                return v;
            }
            if (ident == "max") {
                long v = args[0];
                for (long a : args) v = std::max(v, a);
                return v;
            }
            fail("unknown function " + ident);
        }
        auto it = vars.find(ident);
        if (it == vars.end()) fail("unknown variable " + ident);
        return it->second;
    }
};

std::string render_name(std::string name, const std::map<std::string, long>& params, int r) {
    std::string out = std::move(name);
    out += " [r=" + std::to_string(r);
    for (const auto& [k, v] : params) out += "," + k + "=" + std::to_string(v);
    out += "]";
    return out;
}

}  // namespace

long eval_expression(const std::string& expr, const std::map<std::string, long>& vars) {
    ExprParser p{expr, 0, vars};
    long v = p.parse_expr();
    p.skip();
    if (p.pos != expr.size()) p.fail("trailing input");
    return v;
}

RMatrix table_matrix(const std::string& kind, const std::map<std::string, long>& params,
                     const std::string& inline_text) {
    auto at = [&](const char* k) -> long {
        auto it = params.find(k);
        if (it == params.end())
            throw std::invalid_argument("table row: missing parameter " + std::string(k));
        return it->second;
    };
    if (kind == "inline") return RMatrix::parse(inline_text);
    if (kind == "const") return make_const(at("p"), at("q"), 0);
    if (kind == "ones") return make_const(at("p"), at("q"), 1);
    if (kind == "stack") return make_block_stack(at("p1"), at("p0"), at("q"));
    if (kind == "side") return make_block_side(at("p"), at("q0"), at("q1"));
    if (kind == "col01") return make_col01();
    if (kind == "row01") return make_row01();
    if (kind == "K") return make_K(at("k"));
    if (kind == "Ks") return make_Ks(at("k"), at("s"));
    if (kind == "I") return make_I(at("l"));
    if (kind == "T") return make_T(at("l"));
    if (kind == "F_abcd") return make_F_abcd(at("a"), at("b"), at("c"), at("d"));
    if (kind == "ones_over_K") return ones_over_complete(at("k"));
    throw std::invalid_argument("table row: unknown matrix kind " + kind);
}

std::string default_expectations_path() {
    return std::string(FORBCFG_DATA_DIR) + "/table_expectations.json";
}

TableReport run_table(int which, const std::vector<int>& r_values,
                      const std::string& expectations_path) {
    std::ifstream in(expectations_path);
    if (!in) throw std::runtime_error("cannot open expectations file " + expectations_path);
    json spec = json::parse(in);
    if (spec.at("schema_version").get<int>() != kTableSchemaVersion)
        throw std::runtime_error("expectations schema version mismatch");

    TableReport report;
    report.table_id = which;
    const std::string key = std::to_string(which);
    if (!spec.at("tables").contains(key))
        throw std::invalid_argument("no such table: " + key);

    std::vector<int> rs = r_values.empty() ? std::vector<int>{3, 4} : r_values;

    for (const json& row : spec.at("tables").at(key)) {
        const std::string base_name = row.at("name").get<std::string>();
        const std::string kind = row.at("matrix").at("kind").get<std::string>();
        const std::string inline_text =
            row.at("matrix").value("text", std::string());
        const std::string citation = row.value("citation", std::string());
        const json& expected = row.at("expected");
        const std::string etype = expected.at("type").get<std::string>();

        std::vector<std::map<std::string, long>> instances;
        if (row.contains("instances")) {
            for (const json& inst : row.at("instances")) {
                std::map<std::string, long> params;
                for (auto it = inst.begin(); it != inst.end(); ++it)
                    params[it.key()] = it.value().get<long>();
                instances.push_back(std::move(params));
            }
        } else {
            instances.push_back({});
        }

        for (int r : rs) {
            if (row.contains("r_min") && r < row.at("r_min").get<int>()) continue;
            if (row.contains("r_only")) {
                bool ok = false;
                for (const json& v : row.at("r_only")) ok |= (v.get<int>() == r);
                if (!ok) continue;
            }
            for (const auto& params : instances) {
                TableRowResult res;
                res.table = which;
                res.r = r;
                res.params = params;
                res.name = render_name(base_name, params, r);
                res.expected_type = etype;
                res.citation = citation;

                std::map<std::string, long> vars = params;
                vars["r"] = r;

                RMatrix f = table_matrix(kind, params, inline_text);
                ExponentBound b = classify(f, r);
                res.lower = b.lower;
                res.upper = b.upper;
                res.tight = b.tight;
                res.has_exact = b.exact_value.has_value();
                if (res.has_exact) res.exact_value = *b.exact_value;

                if (etype == "exact") {
                    res.expected_expr = expected.at("expr").get<std::string>();
                    res.expected_value = eval_expression(res.expected_expr, vars);
                    const bool ok = res.has_exact &&
                                    res.exact_value ==
                                        static_cast<std::uint64_t>(res.expected_value);
                    res.status = ok ? "match" : "mismatch";
                } else if (etype == "theta") {
                    res.expected_expr = expected.at("expr").get<std::string>();
                    res.expected_value = eval_expression(res.expected_expr, vars);
                    const bool ok = res.tight && res.lower == res.expected_value;
                    res.status = ok ? "match" : "mismatch";
                } else if (etype == "open") {
                    bool ok = !res.tight;
                    if (expected.contains("lower_expr"))
                        ok = ok && res.lower == eval_expression(
                                                    expected.at("lower_expr").get<std::string>(),
                                                    vars);
                    if (expected.contains("upper_expr"))
                        ok = ok && res.upper == eval_expression(
                                                    expected.at("upper_expr").get<std::string>(),
                                                    vars);
                    res.expected_expr = "open";
                    res.status = ok ? "open" : "mismatch";
                } else {
                    throw std::invalid_argument("table row: unknown expected type " + etype);
                }
                if (res.status == "mismatch") ++report.mismatches;
                report.rows.push_back(std::move(res));
            }
        }
    }
    return report;
}

std::string table_report_json(const TableReport& report) {
    json j;
    j["table"] = report.table_id;
    j["schema_version"] = report.schema_version;
    j["mismatches"] = report.mismatches;
    json rows = json::array();
    for (const TableRowResult& r : report.rows) {
        json row;
        row["name"] = r.name;
        row["r"] = r.r;
        row["expected_type"] = r.expected_type;
        row["expected_expr"] = r.expected_expr;
        row["expected_value"] = r.expected_value;
        row["lower"] = r.lower;
        row["upper"] = r.upper;
        row["tight"] = r.tight;
        if (r.has_exact) row["exact_value"] = r.exact_value;
        row["citation"] = r.citation;
        row["status"] = r.status;
        rows.push_back(std::move(row));
    }
    j["rows"] = std::move(rows);
    return j.dump(2);
}

std::string table_report_csv(const TableReport& report) {
    std::ostringstream out;
    out << "schema_version,table,name,r,expected_type,expected_expr,expected_value,"
           "lower,upper,tight,exact_value,citation,status\n";
    auto quote = [](const std::string& s) {
        std::string q = "\"";
        for (char c : s) {
            if (c == '"') q += "\"\"";
            else q += c;
        }
        return q + "\"";
    };
    for (const TableRowResult& r : report.rows) {
        out << report.schema_version << ',' << r.table << ',' << quote(r.name) << ',' << r.r
            << ',' << r.expected_type << ',' << quote(r.expected_expr) << ','
            << r.expected_value << ',' << r.lower << ',' << r.upper << ','
            << (r.tight ? 1 : 0) << ',';
        if (r.has_exact) out << r.exact_value;
        out << ',' << quote(r.citation) << ',' << r.status << "\n";
    }
    return out.str();
}

}  // namespace forbcfg

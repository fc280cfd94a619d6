// Command-line front end: validate exponent vectors, compute product
// exponents by the closed form or the q-series route, compare the two,
// scan growth bounds, search for valid vectors, and report leading orders.
//
// Exit codes: 0 success, 1 I/O or parse failure, 2 invalid vector where
// validity is required, 3 closed-form/series mismatch in compare.

#include <CLI11.hpp>

#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "munits/bounds.hpp"
#include "munits/closedform.hpp"
#include "munits/qseries.hpp"
#include "munits/vecio.hpp"

namespace {

using nlohmann::json;
using namespace munits;

struct Options {
    std::string vector_path;
    long long nmax = 200;
    long long precision_bits = 128;
    std::string format = "json";
    std::string out_path;
    std::optional<long long> level_p;
    std::optional<long long> level_f;
    long long perturb_oracle = 0;  // compare only: add 1 to the series-side c(n)
    long long bound = 60;          // search only
};

void add_common(CLI::App* cmd, Options& opt, bool with_nmax = true, bool with_bits = true) {
    cmd->add_option("--vector", opt.vector_path, "path to the exponent vector JSON file")
        ->required();
    if (with_nmax) cmd->add_option("--nmax", opt.nmax, "largest index to compute");
    if (with_bits)
        cmd->add_option("--precision-bits", opt.precision_bits,
                        "working precision for numerical embeddings");
    cmd->add_option("--format", opt.format, "output format: json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--out", opt.out_path, "write output to this file instead of stdout");
    cmd->add_option("--level-p", opt.level_p, "expected p, cross-checked against the file");
    cmd->add_option("--level-f", opt.level_f, "expected f, cross-checked against the file");
}

std::string fmt_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

// Loads the vector file and applies the --level-p/--level-f cross-check.
VectorFile load_checked(const Options& opt) {
    VectorFile vf = load_vector_file(opt.vector_path);
    if ((opt.level_p && *opt.level_p != vf.level.p) ||
        (opt.level_f && *opt.level_f != vf.level.f))
        throw ParseError("level flags do not match the vector file (file has p=" +
                         std::to_string(vf.level.p) + ", f=" + std::to_string(vf.level.f) + ")");
    for (const auto& w : vf.warnings) std::cerr << "warning: " << w << "\n";
    return vf;
}

int emit(const Options& opt, const std::string& text) {
    if (opt.out_path.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream out(opt.out_path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot open output file " << opt.out_path << "\n";
        return 1;
    }
    out << text;
    return out.good() ? 0 : 1;
}

json value_row(long long n, const CycNumber& x, long long bits) {
    ComplexReal z = x.embed(static_cast<mpfr_prec_t>(bits));
    return json{{"n", n},
                {"coeffs", cyc_to_strings(x)},
                {"approx", {{"re", z.re.to_double()}, {"im", z.im.to_double()}}}};
}

std::string join_coeffs(const CycNumber& x) {
    std::string s;
    for (const auto& part : cyc_to_strings(x)) {
        if (!s.empty()) s += ";";
        s += part;
    }
    return s;
}

std::string render_values(const Options& opt, const VectorFile& vf, const char* command,
                          const std::vector<CycNumber>& values) {
    if (opt.format == "csv") {
        std::string out = "n,coeffs,re,im\n";
        for (long long n = 1; n <= opt.nmax; ++n) {
            ComplexReal z = values[n - 1].embed(static_cast<mpfr_prec_t>(opt.precision_bits));
            out += std::to_string(n) + "," + join_coeffs(values[n - 1]) + "," +
                   fmt_double(z.re.to_double()) + "," + fmt_double(z.im.to_double()) + "\n";
        }
        return out;
    }
    json rows = json::array();
    for (long long n = 1; n <= opt.nmax; ++n)
        rows.push_back(value_row(n, values[n - 1], opt.precision_bits));
    json doc{{"level", level_to_json(vf.level)},
             {"command", command},
             {"nmax", opt.nmax},
             {"values", rows}};
    return doc.dump(2) + "\n";
}

int cmd_validate(const Options& opt) {
    VectorFile vf = load_checked(opt);
    ValidityReport rep = validate(vf.vec);
    std::string text;
    if (opt.format == "csv") {
        text = "sum_r2,sum_s2,sum_rs,sum_m,valid\n" + std::to_string(rep.sum_r2) + "," +
               std::to_string(rep.sum_s2) + "," + std::to_string(rep.sum_rs) + "," +
               std::to_string(rep.sum_m) + "," + (rep.valid ? "true" : "false") + "\n";
    } else {
        json doc{{"level", level_to_json(vf.level)}, {"sum_r2", rep.sum_r2},
                 {"sum_s2", rep.sum_s2},           {"sum_rs", rep.sum_rs},
                 {"sum_m", rep.sum_m},             {"valid", rep.valid}};
        text = doc.dump(2) + "\n";
    }
    int rc = emit(opt, text);
    if (rc != 0) return rc;
    return rep.valid ? 0 : 2;
}

int cmd_compute(const Options& opt) {
    VectorFile vf = load_checked(opt);
    ExponentTable table = compute_table(vf.vec, opt.nmax);
    return emit(opt, render_values(opt, vf, "compute", table.values));
}

int cmd_oracle(const Options& opt) {
    VectorFile vf = load_checked(opt);
    std::vector<CycNumber> values = oracle_c(vf.vec, opt.nmax);  // throws if invalid
    return emit(opt, render_values(opt, vf, "oracle", values));
}

int cmd_compare(const Options& opt) {
    VectorFile vf = load_checked(opt);
    std::vector<CycNumber> series = oracle_c(vf.vec, opt.nmax);
    if (opt.perturb_oracle >= 1 && opt.perturb_oracle <= opt.nmax)
        series[opt.perturb_oracle - 1] += CycNumber::one(vf.level);
    ExponentTable table = compute_table(vf.vec, opt.nmax);

    bool all_match = true;
    std::string csv = "n,match,closed,oracle\n";
    json rows = json::array();
    for (long long n = 1; n <= opt.nmax; ++n) {
        bool match = table.at(n) == series[n - 1];
        if (!match) all_match = false;
        if (opt.format == "csv") {
            csv += std::to_string(n) + "," + (match ? "true" : "false") + "," +
                   join_coeffs(table.at(n)) + "," + join_coeffs(series[n - 1]) + "\n";
        } else {
            rows.push_back(json{{"n", n},
                                {"match", match},
                                {"closed", cyc_to_strings(table.at(n))},
                                {"oracle", cyc_to_strings(series[n - 1])}});
        }
    }
    std::string text;
    if (opt.format == "csv") {
        text = csv;
    } else {
        json doc{{"level", level_to_json(vf.level)},
                 {"nmax", opt.nmax},
                 {"all_match", all_match},
                 {"rows", rows}};
        text = doc.dump(2) + "\n";
    }
    int rc = emit(opt, text);
    if (rc != 0) return rc;
    if (!all_match) {
        std::cerr << "error: closed form and series disagree\n";
        return 3;
    }
    return 0;
}

int cmd_bounds(const Options& opt) {
    VectorFile vf = load_checked(opt);
    auto [reports, summary] =
        envelope_scan(vf.vec, opt.nmax, static_cast<mpfr_prec_t>(opt.precision_bits));
    std::string text;
    if (opt.format == "csv") {
        text = "n,abs_c,b1,b2,b3,chain_ok\n";
        for (const auto& rep : reports) {
            text += std::to_string(rep.n) + "," + fmt_double(rep.abs_c.to_double()) + "," +
                    fmt_double(rep.b1.to_double()) + "," + rep.b2.get_str() + "," +
                    (rep.b3 ? fmt_double(rep.b3->to_double()) : std::string()) + "," +
                    (rep.chain_ok ? "true" : "false") + "\n";
        }
    } else {
        json rows = json::array();
        for (const auto& rep : reports) {
            json row{{"n", rep.n},
                     {"abs_c", rep.abs_c.to_double()},
                     {"b1", rep.b1.to_double()},
                     {"b2", rep.b2.get_str()},
                     {"chain_ok", rep.chain_ok}};
            row["b3"] = rep.b3 ? json(rep.b3->to_double()) : json(nullptr);
            rows.push_back(row);
        }
        json doc{{"level", level_to_json(vf.level)},
                 {"nmax", opt.nmax},
                 {"rows", rows},
                 {"summary",
                  {{"violations", summary.violations},
                   {"max_ratio", summary.max_ratio.to_double()},
                   {"argmax_n", summary.argmax_n}}}};
        text = doc.dump(2) + "\n";
    }
    int rc = emit(opt, text);
    if (rc != 0) return rc;
    return 0;
}

int cmd_leading(const Options& opt) {
    VectorFile vf = load_checked(opt);
    ExponentCalculator calc(vf.vec);
    auto [alpha, beta] = calc.leading_order();
    std::string text;
    if (opt.format == "csv") {
        text = "alpha,beta\n" + alpha.get_str() + "," + beta.get_str() + "\n";
    } else {
        json doc{{"alpha", alpha.get_str()}, {"beta", beta.get_str()}};
        text = doc.dump(2) + "\n";
    }
    return emit(opt, text);
}

int cmd_search(const Options& opt) {
    VectorFile vf = load_checked(opt);
    // The file's entries mark the support orbits; their m values are ignored.
    std::vector<TorsionPoint> support;
    for (const auto& [pt, m] : vf.vec.entries()) support.push_back(pt);
    auto found = search_valid(vf.level, support, opt.bound);
    std::string text;
    if (opt.format == "csv") {
        text = "index,entries\n";
        for (size_t i = 0; i < found.size(); ++i) {
            std::string ent;
            for (const auto& [pt, m] : found[i].entries()) {
                if (!ent.empty()) ent += "|";
                ent += std::to_string(pt.r) + ":" + std::to_string(pt.s) + ":" +
                       std::to_string(m);
            }
            text += std::to_string(i) + "," + ent + "\n";
        }
    } else {
        json vecs = json::array();
        for (const auto& v : found) {
            json entries = json::array();
            for (const auto& [pt, m] : v.entries())
                entries.push_back(json{{"r", pt.r}, {"s", pt.s}, {"m", m}});
            vecs.push_back(entries);
        }
        json supp = json::array();
        for (const auto& pt : support) supp.push_back(json{{"r", pt.r}, {"s", pt.s}});
        json doc{{"level", level_to_json(vf.level)},
                 {"support", supp},
                 {"bound", opt.bound},
                 {"count", found.size()},
                 {"vectors", vecs}};
        text = doc.dump(2) + "\n";
    }
    return emit(opt, text);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"modular unit product exponents"};
    app.require_subcommand(1);
    Options opt;

    CLI::App* validate_cmd = app.add_subcommand("validate", "check the validity congruences");
    add_common(validate_cmd, opt, false, false);
    CLI::App* compute_cmd = app.add_subcommand("compute", "closed-form exponents c(n)");
    add_common(compute_cmd, opt);
    CLI::App* oracle_cmd = app.add_subcommand("oracle", "series-derived exponents c(n)");
    add_common(oracle_cmd, opt);
    CLI::App* compare_cmd =
        app.add_subcommand("compare", "closed form against the series, per n");
    add_common(compare_cmd, opt);
    compare_cmd
        ->add_option("--perturb-oracle", opt.perturb_oracle,
                     "fault injection: add 1 to the series-side value at this index")
        ->default_val(0);
    CLI::App* bounds_cmd = app.add_subcommand("bounds", "growth bound chain per n");
    add_common(bounds_cmd, opt);
    CLI::App* leading_cmd = app.add_subcommand("leading", "order alpha and q-exponent beta");
    add_common(leading_cmd, opt, false, false);
    CLI::App* search_cmd =
        app.add_subcommand("search", "valid vectors on the file's support orbits");
    add_common(search_cmd, opt, false, false);
    search_cmd->add_option("--bound", opt.bound, "largest |m| tried (multiples of 12)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    try {
        if (app.got_subcommand(validate_cmd)) return cmd_validate(opt);
        if (app.got_subcommand(compute_cmd)) return cmd_compute(opt);
        if (app.got_subcommand(oracle_cmd)) return cmd_oracle(opt);
        if (app.got_subcommand(compare_cmd)) return cmd_compare(opt);
        if (app.got_subcommand(bounds_cmd)) return cmd_bounds(opt);
        if (app.got_subcommand(leading_cmd)) return cmd_leading(opt);
        if (app.got_subcommand(search_cmd)) return cmd_search(opt);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

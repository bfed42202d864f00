#pragma once

// Command-line front end.
//
// Commands
//   table     emit the full structure-constant table (JSON-lines or CSV)
//   classify  count nonzero constants under cup / star0 / bk
//   product   expand one product sigma_u * sigma_v
//   verify    run the global consistency suites
//
// Exit codes: 0 success, 1 usage error, 2 verification failure, 3 internal
// consistency error.  Data goes to stdout; progress and cache notes go to
// stderr.

#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "schub/serialize.hpp"
#include "schub/verify.hpp"

namespace schub {

namespace cli_detail {

struct CommonOptions {
    std::string type;
    std::string assoc;       // 1-indexed, comma separated; empty = full flag
    std::string notation = "word";
    std::string convention = "ordered";
    std::string product = "cup";
    std::string mixed_set;   // 1-indexed subset of assoc, for --product mixed
    std::string format = "json";
    std::string cache_dir;
    int jobs = 1;
};

inline std::vector<int> parse_index_list(const std::string& text, int rank, const char* what) {
    std::vector<int> out;
    std::size_t k = 0;
    while (k < text.size()) {
        while (k < text.size() && (text[k] == ',' || text[k] == ' ')) ++k;
        if (k >= text.size()) break;
        std::size_t start = k;
        while (k < text.size() && std::isdigit(static_cast<unsigned char>(text[k]))) ++k;
        if (k == start) throw std::invalid_argument(std::string(what) + ": expected 1-indexed integers");
        int idx = std::stoi(text.substr(start, k - start));
        if (idx < 1 || idx > rank)
            throw std::invalid_argument(std::string(what) + ": index " + std::to_string(idx) + " out of range 1.." +
                                        std::to_string(rank));
        out.push_back(idx - 1);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

struct Setup {
    RootSystem rs;
    FlagContext fc;
    DeformTable dt;
    Notation notation;

    Setup(const CommonOptions& o)
        : rs(parse_cartan_type(o.type)),
          fc(rs, o.assoc.empty() ? ParabolicData::full_flag(rs)
                                 : ParabolicData::from_assoc(rs, parse_index_list(o.assoc, rs.rank(), "--assoc"))),
          dt(fc),
          notation(parse_notation_name(o.notation)) {}
};

inline void validate_choice(const std::string& value, std::initializer_list<const char*> allowed,
                            const char* flag) {
    for (const char* a : allowed)
        if (value == a) return;
    std::string msg = std::string(flag) + " must be one of {";
    bool first = true;
    for (const char* a : allowed) {
        if (!first) msg += ", ";
        msg += a;
        first = false;
    }
    throw std::invalid_argument(msg + "}, got '" + value + "'");
}

// Keep a row when the requested product has a nonzero coefficient on it.
inline bool row_selected(const DeformTable& dt, const TableRow& r, const std::string& product,
                         const std::vector<int>& mixed) {
    if (product == "cup") return true;
    if (product == "bk") return dt.bk_survives(r.pu, r.pv, r.pw);
    if (product == "star0") return dt.star0_survives(r.pu, r.pv, r.pw);
    return dt.mixed_survives(r.pu, r.pv, r.pw, mixed);
}

inline int cmd_table(const CommonOptions& o, std::ostream& out, std::ostream& err) {
    validate_choice(o.format, {"json", "csv"}, "--format");
    validate_choice(o.product, {"cup", "bk", "star0", "mixed"}, "--product");
    validate_choice(o.convention, {"ordered", "unordered"}, "--convention");
    Setup s(o);
    std::vector<int> mixed;
    if (o.product == "mixed") mixed = parse_index_list(o.mixed_set, s.rs.rank(), "--mixed-set");
    err << "# table: " << s.fc.num_classes() << " classes, dim " << s.fc.dim() << "\n";
    std::vector<TableRow> rows = load_or_build_table(s.fc, s.dt, o.cache_dir, s.notation, o.jobs, err);
    std::vector<TableRow> selected;
    selected.reserve(rows.size());
    for (const TableRow& r : rows)
        if (row_selected(s.dt, r, o.product, mixed)) selected.push_back(r);
    if (o.format == "json")
        write_table_jsonl(out, s.fc, s.dt, selected, s.notation, o.convention);
    else
        write_table_csv(out, s.fc, s.dt, selected, s.notation, o.convention);
    return 0;
}

inline int cmd_classify(const CommonOptions& o, std::ostream& out, std::ostream& err) {
    validate_choice(o.convention, {"ordered", "unordered"}, "--convention");
    Setup s(o);
    err << "# classify: " << s.fc.num_classes() << " classes, dim " << s.fc.dim() << "\n";
    std::vector<TableRow> rows = load_or_build_table(s.fc, s.dt, o.cache_dir, s.notation, o.jobs, err);
    ClassificationRecord rec = s.dt.classify(rows);
    bool ordered = o.convention == "ordered";
    Json j;
    j["type"] = s.rs.type().name();
    j["assoc"] = detail::assoc_external(s.fc);
    j["convention"] = o.convention;
    j["nonzero_cup"] = ordered ? rec.cup_ordered : rec.cup_unordered;
    j["nonzero_star0"] = ordered ? rec.star0_ordered : rec.star0_unordered;
    j["levi_movable"] = ordered ? rec.bk_ordered : rec.bk_unordered;
    j["counts"] = Json{{"ordered", Json{{"cup", rec.cup_ordered}, {"star0", rec.star0_ordered}, {"bk", rec.bk_ordered}}},
                       {"unordered",
                        Json{{"cup", rec.cup_unordered}, {"star0", rec.star0_unordered}, {"bk", rec.bk_unordered}}}};
    out << j.dump() << '\n';
    return 0;
}

inline int cmd_product(const CommonOptions& o, const std::string& u_text, const std::string& v_text, bool ledger,
                       std::ostream& out, std::ostream& err) {
    validate_choice(o.product, {"cup", "bk", "star0", "mixed"}, "--product");
    Setup s(o);
    std::vector<int> mixed;
    if (o.product == "mixed") mixed = parse_index_list(o.mixed_set, s.rs.rank(), "--mixed-set");
    const WeylGroup& W = s.fc.group();
    int pu = s.fc.pos_of(parse_element(W, u_text, s.notation));
    int pv = s.fc.pos_of(parse_element(W, v_text, s.notation));
    err << "# product: |u| = " << s.fc.length_of(pu) << ", |v| = " << s.fc.length_of(pv) << "\n";
    Json h;
    h["record"] = "header";
    h["type"] = s.rs.type().name();
    h["assoc"] = detail::assoc_external(s.fc);
    h["notation"] = notation_name(s.notation);
    h["product"] = o.product;
    h["u"] = format_element(W, s.fc.rep(pu), s.notation);
    h["v"] = format_element(W, s.fc.rep(pv), s.notation);
    out << h.dump() << '\n';
    for (const auto& [pw, c] : s.fc.product(pu, pv)) {
        TableRow r{pu, pv, pw, c};
        if (!row_selected(s.dt, r, o.product, mixed)) continue;
        Json j;
        j["w"] = format_element(W, s.fc.rep(pw), s.notation);
        j["c"] = detail::coeff_to_json(c);
        if (ledger) {
            DeformedCoefficient dc = s.dt.star_ts_coefficient(pu, pv, pw);
            j["count_diff"] = dc.count_diff;
            j["s1_degree_diff"] = dc.s1_degree_diff;
            j["s0_degree_diff"] = dc.s0_degree_diff;
        }
        out << j.dump() << '\n';
    }
    return 0;
}

inline int cmd_verify(const CommonOptions& o, const std::string& suite, std::ostream& out, std::ostream& err) {
    Setup s(o);
    std::vector<std::string> suites;
    if (suite == "all")
        suites = verify_suite_names();
    else {
        const auto& names = verify_suite_names();
        if (std::find(names.begin(), names.end(), suite) == names.end())
            throw std::invalid_argument("unknown verification suite '" + suite + "'");
        suites.push_back(suite);
    }
    err << "# verify: " << s.fc.num_classes() << " classes, dim " << s.fc.dim() << "\n";
    std::vector<TableRow> rows = s.fc.full_table(o.jobs);
    bool all_pass = true;
    for (const std::string& name : suites) {
        err << "# running " << name << "\n";
        VerifyResult r = run_verify_suite(name, s.fc, s.dt, rows);
        all_pass = all_pass && r.pass;
        Json j;
        j["suite"] = r.suite;
        j["pass"] = r.pass;
        j["detail"] = r.detail;
        out << j.dump() << '\n';
    }
    return all_pass ? 0 : 2;
}

}  // namespace cli_detail

// Entry point shared by the binary and the tests.  `args` excludes the
// program name.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Structure constants of generalized flag varieties and their degenerate products"};
    app.require_subcommand(1);

    cli_detail::CommonOptions opt;
    std::string u_text, v_text, suite = "all";
    bool ledger = false;

    auto add_common = [&](CLI::App* cmd, bool with_table_flags) {
        cmd->add_option("--type", opt.type, "Cartan type, e.g. A3, B4, C6")->required();
        cmd->add_option("--assoc", opt.assoc, "associated simple roots (1-indexed, comma separated); empty = full flag");
        cmd->add_option("--notation", opt.notation, "element notation: word|window");
        cmd->add_option("--jobs", opt.jobs, "worker threads for table construction")->check(CLI::PositiveNumber);
        if (with_table_flags) {
            cmd->add_option("--convention", opt.convention, "triple counting: ordered|unordered");
            cmd->add_option("--cache-dir", opt.cache_dir, "directory for cached tables");
        }
    };

    CLI::App* table = app.add_subcommand("table", "emit the structure-constant table");
    add_common(table, true);
    table->add_option("--product", opt.product, "row filter: cup|bk|star0|mixed");
    table->add_option("--mixed-set", opt.mixed_set, "1-indexed roots taking the s->0 limit (with --product mixed)");
    table->add_option("--format", opt.format, "output format: json|csv");

    CLI::App* classify = app.add_subcommand("classify", "count nonzero constants per product");
    add_common(classify, true);

    CLI::App* product = app.add_subcommand("product", "expand one product");
    add_common(product, false);
    product->add_option("--u", u_text, "first class")->required();
    product->add_option("--v", v_text, "second class")->required();
    product->add_option("--product", opt.product, "coefficient filter: cup|bk|star0|mixed");
    product->add_option("--mixed-set", opt.mixed_set, "1-indexed roots taking the s->0 limit (with --product mixed)");
    product->add_flag("--ledger", ledger, "attach the exponent ledger to every row");

    CLI::App* verify = app.add_subcommand("verify", "run consistency suites");
    add_common(verify, false);
    verify->add_option("--suite", suite, "suite name or 'all'");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 1;
    }

    try {
        if (table->parsed()) return cli_detail::cmd_table(opt, out, err);
        if (classify->parsed()) return cli_detail::cmd_classify(opt, out, err);
        if (product->parsed()) return cli_detail::cmd_product(opt, u_text, v_text, ledger, out, err);
        return cli_detail::cmd_verify(opt, suite, out, err);
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 3;
    }
}

}  // namespace schub

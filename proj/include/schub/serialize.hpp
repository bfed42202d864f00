#pragma once

// Table serialization: JSON-lines (one header record, then one record per
// stored row) and a CSV mirror with '#' metadata comments.  Output is
// byte-deterministic for a given context: rows are emitted in the engine's
// canonical (u, v, w) order regardless of how many threads built them.
//
// Stored rows cover each unordered pair once (u comes no later than v in the
// graded class order); the header's "convention" field records how the
// consumer asked for triples to be counted, not how rows are stored.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "schub/deform.hpp"
#include "schub/notation.hpp"
#include "schub/version.hpp"

namespace schub {

using Json = nlohmann::ordered_json;

struct ParsedRow {
    std::string u, v, w;
    Coeff c = 0, bk = 0, star0 = 0;
};

struct ParsedTable {
    int format_version = 0;
    std::string engine_version, type, notation, convention;
    std::vector<int> assoc_external;  // 1-indexed
    int classes = 0, dim = 0;
    long long row_count = -1;
    std::vector<ParsedRow> rows;
};

namespace detail {

inline std::vector<int> assoc_external(const FlagContext& fc) {
    std::vector<int> out;
    for (int a : fc.parabolic().assoc) out.push_back(a + 1);
    return out;
}

// Structure constants are serialized as JSON numbers when they fit in a
// 64-bit integer and as decimal strings beyond that.
inline Json coeff_to_json(const Coeff& c) {
    static const Coeff lo = std::numeric_limits<long long>::min();
    static const Coeff hi = std::numeric_limits<long long>::max();
    if (c >= lo && c <= hi) return Json(static_cast<long long>(c));
    return Json(c.str());
}

inline Coeff coeff_from_json(const Json& j) {
    if (j.is_number_integer()) return Coeff(j.get<long long>());
    if (j.is_number_unsigned()) return Coeff(j.get<unsigned long long>());
    if (j.is_string()) return Coeff(j.get<std::string>());
    throw std::invalid_argument("coefficient field must be an integer or a decimal string");
}

inline Json header_json(const FlagContext& fc, Notation notation, const std::string& convention,
                        std::size_t row_count) {
    Json h;
    h["record"] = "header";
    h["format_version"] = kFormatVersion;
    h["engine_version"] = kEngineVersion;
    h["type"] = fc.system().type().name();
    h["assoc"] = assoc_external(fc);
    h["notation"] = notation_name(notation);
    h["convention"] = convention;
    h["classes"] = fc.num_classes();
    h["dim"] = fc.dim();
    h["rows"] = row_count;
    return h;
}

inline std::string csv_quote(const std::string& field) {
    if (field.find(',') == std::string::npos && field.find('"') == std::string::npos) return field;
    std::string out = "\"";
    for (char ch : field) {
        if (ch == '"') out += '"';
        out += ch;
    }
    out += '"';
    return out;
}

}  // namespace detail

inline void write_table_jsonl(std::ostream& out, const FlagContext& fc, const DeformTable& dt,
                              const std::vector<TableRow>& rows, Notation notation,
                              const std::string& convention) {
    const WeylGroup& W = fc.group();
    out << detail::header_json(fc, notation, convention, rows.size()).dump() << '\n';
    for (const TableRow& r : rows) {
        Json j;
        j["u"] = format_element(W, fc.rep(r.pu), notation);
        j["v"] = format_element(W, fc.rep(r.pv), notation);
        j["w"] = format_element(W, fc.rep(r.pw), notation);
        j["c"] = detail::coeff_to_json(r.c);
        j["bk"] = detail::coeff_to_json(dt.bk_coefficient(r.pu, r.pv, r.pw));
        j["star0"] = detail::coeff_to_json(dt.star0_coefficient(r.pu, r.pv, r.pw));
        out << j.dump() << '\n';
    }
}

inline void write_table_csv(std::ostream& out, const FlagContext& fc, const DeformTable& dt,
                            const std::vector<TableRow>& rows, Notation notation, const std::string& convention) {
    const WeylGroup& W = fc.group();
    Json h = detail::header_json(fc, notation, convention, rows.size());
    for (const auto& [key, value] : h.items()) {
        if (key == "record") continue;
        out << "# " << key << "=" << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
    }
    out << "u,v,w,c,bk,star0\n";
    for (const TableRow& r : rows) {
        out << detail::csv_quote(format_element(W, fc.rep(r.pu), notation)) << ','
            << detail::csv_quote(format_element(W, fc.rep(r.pv), notation)) << ','
            << detail::csv_quote(format_element(W, fc.rep(r.pw), notation)) << ',' << r.c.str() << ','
            << dt.bk_coefficient(r.pu, r.pv, r.pw).str() << ',' << dt.star0_coefficient(r.pu, r.pv, r.pw).str()
            << '\n';
    }
}

inline ParsedTable parse_table_jsonl(std::istream& in) {
    ParsedTable t;
    std::string line;
    bool have_header = false;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        Json j = Json::parse(line);  // throws nlohmann parse_error (a std::exception)
        if (!have_header) {
            if (!j.contains("record") || j["record"] != "header")
                throw std::invalid_argument("first record must be the table header");
            t.format_version = j.at("format_version").get<int>();
            t.engine_version = j.at("engine_version").get<std::string>();
            t.type = j.at("type").get<std::string>();
            t.assoc_external = j.at("assoc").get<std::vector<int>>();
            t.notation = j.at("notation").get<std::string>();
            t.convention = j.at("convention").get<std::string>();
            t.classes = j.at("classes").get<int>();
            t.dim = j.at("dim").get<int>();
            t.row_count = j.at("rows").get<long long>();
            have_header = true;
            continue;
        }
        ParsedRow r;
        r.u = j.at("u").get<std::string>();
        r.v = j.at("v").get<std::string>();
        r.w = j.at("w").get<std::string>();
        r.c = detail::coeff_from_json(j.at("c"));
        r.bk = detail::coeff_from_json(j.at("bk"));
        r.star0 = detail::coeff_from_json(j.at("star0"));
        t.rows.push_back(std::move(r));
    }
    if (!have_header) throw std::invalid_argument("table stream has no header record");
    if (t.row_count != static_cast<long long>(t.rows.size()))
        throw std::invalid_argument("table stream is truncated: header advertises " + std::to_string(t.row_count) +
                                    " rows, found " + std::to_string(t.rows.size()));
    return t;
}

// Deterministic cache filename for a context (engine version lives inside
// the file, so upgrades are detected by content, not name).
inline std::string table_cache_filename(const FlagContext& fc, Notation notation) {
    std::ostringstream os;
    os << "table-" << fc.system().type().name();
    os << "-assoc";
    for (int a : detail::assoc_external(fc)) os << "-" << a;
    os << "-" << notation_name(notation) << ".jsonl";
    return os.str();
}

// Load the full table from the cache directory when a fresh copy exists;
// otherwise build it (jobs-wide) and refresh the cache.  Stale or unreadable
// caches are rebuilt silently, with a note on the diagnostic stream.
inline std::vector<TableRow> load_or_build_table(const FlagContext& fc, const DeformTable& dt,
                                                 const std::string& cache_dir, Notation notation, int jobs,
                                                 std::ostream& diag) {
    namespace fs = std::filesystem;
    const WeylGroup& W = fc.group();
    fs::path path;
    if (!cache_dir.empty()) {
        path = fs::path(cache_dir) / table_cache_filename(fc, notation);
        if (fs::exists(path)) {
            try {
                std::ifstream in(path);
                ParsedTable t = parse_table_jsonl(in);
                if (t.format_version != kFormatVersion || t.engine_version != kEngineVersion)
                    throw std::invalid_argument("cache was written by a different engine version");
                if (t.type != fc.system().type().name() || t.assoc_external != detail::assoc_external(fc) ||
                    t.classes != fc.num_classes() || t.dim != fc.dim())
                    throw std::invalid_argument("cache does not match the requested context");
                Notation n = parse_notation_name(t.notation);
                std::vector<TableRow> rows;
                rows.reserve(t.rows.size());
                for (const ParsedRow& pr : t.rows) {
                    TableRow r;
                    r.pu = fc.pos_of(parse_element(W, pr.u, n));
                    r.pv = fc.pos_of(parse_element(W, pr.v, n));
                    r.pw = fc.pos_of(parse_element(W, pr.w, n));
                    r.c = pr.c;
                    rows.push_back(r);
                }
                diag << "# cache hit: " << path.string() << " (" << rows.size() << " rows)\n";
                return rows;
            } catch (const std::exception& e) {
                diag << "# cache stale (" << e.what() << "); rebuilding\n";
            }
        }
    }
    std::vector<TableRow> rows = fc.full_table(jobs);
    if (!cache_dir.empty()) {
        std::error_code ec;
        fs::create_directories(cache_dir, ec);
        std::ofstream out(path);
        if (out) {
            write_table_jsonl(out, fc, dt, rows, notation, "ordered");
            diag << "# cache write: " << path.string() << " (" << rows.size() << " rows)\n";
        } else {
            diag << "# cache directory not writable: " << cache_dir << "\n";
        }
    }
    return rows;
}

}  // namespace schub

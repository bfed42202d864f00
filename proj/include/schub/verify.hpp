#pragma once

// Global consistency suites shared by the command-line `verify` command and
// the acceptance harness.  Each suite checks one identity exhaustively over a
// flag context and reports pass/fail plus a short human-readable summary.
//
// Suites:
//   divisibility       filter-count superadditivity on every nonzero constant
//   associativity      four-index associativity of cup, bk, and star0
//   degree-identity    multiset size == length of the parabolic projection
//   region-count       projected lengths are superadditive on nonzero rows
//   richmond           star0 constants factor through every maximal quotient
//   oracle-equivalence Chevalley recursion and (type A) divided-difference
//                      polynomials reproduce the engine's constants

#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "schub/deform.hpp"
#include "schub/notation.hpp"
#include "schub/schubert_poly.hpp"

namespace schub {

struct VerifyResult {
    std::string suite;
    bool pass = true;
    std::string detail;
};

inline const std::vector<std::string>& verify_suite_names() {
    static const std::vector<std::string> names{"divisibility", "associativity", "degree-identity",
                                                "region-count", "richmond",      "oracle-equivalence"};
    return names;
}

inline VerifyResult verify_divisibility(const FlagContext& fc, const DeformTable& dt,
                                        const std::vector<TableRow>& rows) {
    VerifyResult res{"divisibility", true, ""};
    long long checked = 0;
    for (const TableRow& r : rows) {
        auto d = dt.divisibility_check(r.pu, r.pv, r.pw);
        ++checked;
        if (!d) {
            res.pass = false;
            std::ostringstream os;
            os << "violated at row (" << r.pu << "," << r.pv << "," << r.pw << ") alpha=" << d.alpha + 1
               << " k=" << d.k;
            res.detail = os.str();
            return res;
        }
    }
    res.detail = std::to_string(checked) + " nonzero constants certified";
    (void)fc;
    return res;
}

namespace detail {

enum class ProductKind { cup, bk, star0 };

inline const char* product_kind_name(ProductKind k) {
    switch (k) {
        case ProductKind::cup: return "cup";
        case ProductKind::bk: return "bk";
        default: return "star0";
    }
}

// All pairwise products, survival-filtered for the chosen kind.
inline std::vector<std::map<int, Coeff>> all_products(const FlagContext& fc, const DeformTable& dt,
                                                      ProductKind kind) {
    const int n = fc.num_classes();
    std::vector<std::map<int, Coeff>> table(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    for (int pu = 0; pu < n; ++pu)
        for (int pv = pu; pv < n; ++pv) {
            std::map<int, Coeff> prod;
            if (fc.length_of(pu) + fc.length_of(pv) <= fc.dim()) {
                prod = fc.product(pu, pv);
                if (kind != ProductKind::cup)
                    for (auto it = prod.begin(); it != prod.end();) {
                        bool keep = kind == ProductKind::bk ? dt.bk_survives(pu, pv, it->first)
                                                            : dt.star0_survives(pu, pv, it->first);
                        it = keep ? std::next(it) : prod.erase(it);
                    }
            }
            table[static_cast<std::size_t>(pu) * n + pv] = prod;
            table[static_cast<std::size_t>(pv) * n + pu] = std::move(prod);
        }
    return table;
}

}  // namespace detail

// Four-index associativity ((u v) x = u (v x), compared coefficient by
// coefficient) for one product kind over the whole context.
inline VerifyResult verify_associativity_kind(const FlagContext& fc, const DeformTable& dt,
                                              detail::ProductKind kind) {
    VerifyResult res{"associativity", true, ""};
    const int n = fc.num_classes();
    auto table = detail::all_products(fc, dt, kind);
    auto prod = [&](int a, int b) -> const std::map<int, Coeff>& {
        return table[static_cast<std::size_t>(a) * n + b];
    };
    long long triples = 0;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            if (fc.length_of(u) + fc.length_of(v) > fc.dim()) continue;
            for (int x = 0; x < n; ++x) {
                if (fc.length_of(u) + fc.length_of(v) + fc.length_of(x) > fc.dim()) continue;
                ++triples;
                std::map<int, Coeff> lhs, rhs;
                for (const auto& [w, c] : prod(u, v))
                    for (const auto& [y, c2] : prod(w, x)) lhs[y] += c * c2;
                for (const auto& [w, c] : prod(v, x))
                    for (const auto& [y, c2] : prod(u, w)) rhs[y] += c * c2;
                for (auto it = lhs.begin(); it != lhs.end();) it = it->second == 0 ? lhs.erase(it) : std::next(it);
                for (auto it = rhs.begin(); it != rhs.end();) it = it->second == 0 ? rhs.erase(it) : std::next(it);
                if (lhs != rhs) {
                    res.pass = false;
                    std::ostringstream os;
                    os << detail::product_kind_name(kind) << " fails at (" << u << "," << v << "," << x << ")";
                    res.detail = os.str();
                    return res;
                }
            }
        }
    res.detail = std::string(detail::product_kind_name(kind)) + ": " + std::to_string(triples) + " triples";
    return res;
}

inline VerifyResult verify_associativity(const FlagContext& fc, const DeformTable& dt) {
    VerifyResult res{"associativity", true, ""};
    std::ostringstream os;
    bool first = true;
    for (auto kind : {detail::ProductKind::cup, detail::ProductKind::bk, detail::ProductKind::star0}) {
        VerifyResult one = verify_associativity_kind(fc, dt, kind);
        if (!one.pass) return one;
        if (!first) os << "; ";
        os << one.detail;
        first = false;
    }
    res.detail = os.str();
    return res;
}

// The s -> 0 degree of every class at every simple root equals the length of
// its projection to the corresponding maximal-parabolic quotient.
inline VerifyResult verify_degree_identity(const FlagContext& fc, const DeformTable& dt) {
    VerifyResult res{"degree-identity", true, ""};
    const WeylGroup& W = fc.group();
    long long checked = 0;
    for (int p = 0; p < fc.num_classes(); ++p)
        for (int alpha = 0; alpha < fc.system().rank(); ++alpha) {
            ++checked;
            int proj = W.length(W.project_to_simple(fc.rep(p), alpha));
            if (dt.s0_degree(p, alpha) != proj) {
                res.pass = false;
                std::ostringstream os;
                os << "class " << p << " alpha=" << alpha + 1 << ": multiset size " << dt.s0_degree(p, alpha)
                   << " != projected length " << proj;
                res.detail = os.str();
                return res;
            }
        }
    res.detail = std::to_string(checked) + " (class, root) pairs";
    return res;
}

inline VerifyResult verify_region_count(const FlagContext& fc, const DeformTable& dt,
                                        const std::vector<TableRow>& rows) {
    VerifyResult res{"region-count", true, ""};
    (void)fc;
    long long checked = 0;
    for (const TableRow& r : rows) {
        ++checked;
        auto rc = dt.region_count_inequality(r.pu, r.pv, r.pw);
        if (!rc) {
            res.pass = false;
            std::ostringstream os;
            os << "violated at row (" << r.pu << "," << r.pv << "," << r.pw << ") alpha=" << rc.alpha + 1;
            res.detail = os.str();
            return res;
        }
    }
    res.detail = std::to_string(checked) + " nonzero constants";
    return res;
}

// Every star0-surviving constant factors through every maximal quotient lying
// over the parabolic.  Vacuous (and reported so) when the parabolic is
// already maximal.
inline VerifyResult verify_richmond(const FlagContext& fc, const DeformTable& dt,
                                    const std::vector<TableRow>& rows) {
    VerifyResult res{"richmond", true, ""};
    const RootSystem& rs = fc.system();
    const auto& assoc = fc.parabolic().assoc;
    const auto& pl = fc.parabolic().levi;
    if (assoc.size() <= 1) {
        res.detail = "parabolic is maximal; nothing to factor";
        return res;
    }
    long long checked = 0;
    for (int gamma : assoc) {
        std::vector<int> ql;
        for (int i = 0; i < rs.rank(); ++i)
            if (i != gamma) ql.push_back(i);
        FlagContext gq(rs, ParabolicData::from_levi(rs, ql));
        FlagContext fiber(rs, ql, pl);
        for (const TableRow& r : rows) {
            if (!dt.star0_survives(r.pu, r.pv, r.pw)) continue;
            ++checked;
            if (!richmond_factorization_check(dt, gq, fiber, r.pu, r.pv, r.pw)) {
                res.pass = false;
                std::ostringstream os;
                os << "row (" << r.pu << "," << r.pv << "," << r.pw << ") fails through the quotient at alpha="
                   << gamma + 1;
                res.detail = os.str();
                return res;
            }
        }
    }
    res.detail = std::to_string(checked) + " factorizations across " + std::to_string(assoc.size()) + " quotients";
    return res;
}

// Chevalley-style degree-one products (independent recursion) against the
// engine, plus the divided-difference polynomial basis in small type A full
// flags.
inline VerifyResult verify_oracle_equivalence(const FlagContext& fc) {
    VerifyResult res{"oracle-equivalence", true, ""};
    const WeylGroup& W = fc.group();
    long long chev = 0;
    for (int i : fc.parabolic().assoc) {
        int si = fc.pos_of(W.right_multiply(0, i));
        for (int pv = 0; pv < fc.num_classes(); ++pv) {
            ++chev;
            std::map<int, Coeff> lhs = fc.chevalley(i, pv);
            std::map<int, Coeff> rhs = fc.product(si, pv);
            if (lhs != rhs) {
                res.pass = false;
                res.detail = "degree-one recursion disagrees at (alpha=" + std::to_string(i + 1) +
                             ", v=" + std::to_string(pv) + ")";
                return res;
            }
        }
    }
    std::ostringstream os;
    os << chev << " degree-one expansions";

    bool full_flag = fc.parabolic().levi.empty();
    if (fc.system().type().family == Family::A && full_flag && fc.system().rank() <= 3) {
        const int m = fc.system().rank() + 1;
        SchubertOracle oracle(2 * m - 1);
        std::vector<SchubertOracle::OneLine> lines(static_cast<std::size_t>(fc.num_classes()));
        for (int p = 0; p < fc.num_classes(); ++p)
            lines[static_cast<std::size_t>(p)] = oracle.pad(window_entries(W, fc.rep(p)));
        long long pairs = 0;
        for (int pu = 0; pu < fc.num_classes(); ++pu)
            for (int pv = pu; pv < fc.num_classes(); ++pv) {
                ++pairs;
                auto expansion = oracle.expand_product(lines[static_cast<std::size_t>(pu)],
                                                       lines[static_cast<std::size_t>(pv)]);
                std::map<int, Coeff> kept;
                for (const auto& [w, c] : expansion) {
                    bool inside = true;
                    for (int j = m; j < oracle.symbols(); ++j)
                        inside = inside && w[static_cast<std::size_t>(j)] == j + 1;
                    if (!inside) continue;
                    SchubertOracle::OneLine cut(w.begin(), w.begin() + m);
                    kept[fc.pos_of(element_from_window(W, cut))] = c;
                }
                std::map<int, Coeff> engine = fc.product(pu, pv);
                bool same = kept.size() == engine.size();
                if (same)
                    for (const auto& [pw, c] : engine) same = same && kept.count(pw) && Coeff(kept.at(pw)) == c;
                if (!same) {
                    res.pass = false;
                    res.detail = "polynomial basis disagrees at pair (" + std::to_string(pu) + "," +
                                 std::to_string(pv) + ")";
                    return res;
                }
            }
        os << "; " << pairs << " polynomial expansions";
    }
    res.detail = os.str();
    return res;
}

inline VerifyResult run_verify_suite(const std::string& name, const FlagContext& fc, const DeformTable& dt,
                                     const std::vector<TableRow>& rows) {
    if (name == "divisibility") return verify_divisibility(fc, dt, rows);
    if (name == "associativity") return verify_associativity(fc, dt);
    if (name == "degree-identity") return verify_degree_identity(fc, dt);
    if (name == "region-count") return verify_region_count(fc, dt, rows);
    if (name == "richmond") return verify_richmond(fc, dt, rows);
    if (name == "oracle-equivalence") return verify_oracle_equivalence(fc);
    throw std::invalid_argument("unknown verification suite '" + name + "'");
}

}  // namespace schub

#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <memory>

#include "schub/deform.hpp"
#include "schub/notation.hpp"

using namespace schub;

namespace {

// Reference filter count straight from the definition.
int filter_count_reference(const WeylGroup& W, const RootSystem& rs, int e, int alpha, int k) {
    int count = 0;
    for (int b : W.inversion_set(e))
        if (rs.root(b).coords[alpha] >= k) ++count;
    return count;
}

}  // namespace

TEST_CASE("inversion multiplicities track projected lengths", "[deform]") {
    RootSystem rs({Family::B, 3});
    FlagContext fc(rs, ParabolicData::full_flag(rs));
    const WeylGroup& W = fc.group();
    DeformTable dt(fc);
    CHECK(dt.multiset(0, 0).empty());
    CHECK(dt.multiset(0, 2).empty());
    for (int p = 0; p < fc.num_classes(); ++p) {
        for (int alpha = 0; alpha < rs.rank(); ++alpha) {
            const auto& ms = dt.multiset(p, alpha);
            CHECK(std::is_sorted(ms.begin(), ms.end()));
            // Size of the multiset = length of the projection of w to the
            // quotient by the maximal parabolic complementary to alpha.
            int proj = W.project_to_simple(fc.rep(p), alpha);
            CHECK(static_cast<int>(ms.size()) == W.length(proj));
            CHECK(dt.s0_degree(p, alpha) == static_cast<int>(ms.size()));
            int sum = 0;
            for (int m : ms) sum += m;
            CHECK(dt.s1_degree(p, alpha) == sum);
            // filter_count at k = 1 counts the whole multiset.
            CHECK(dt.filter_count(p, alpha, 1) == static_cast<int>(ms.size()));
            for (int k = 1; k <= rs.max_multiplicity(alpha) + 1; ++k)
                CHECK(dt.filter_count(p, alpha, k) == filter_count_reference(W, rs, fc.rep(p), alpha, k));
        }
    }
    CHECK_THROWS_AS(dt.filter_count(0, 0, 0), std::invalid_argument);
}

TEST_CASE("rank-two exponent profile anchors", "[deform]") {
    RootSystem rs({Family::B, 2});
    FlagContext fc(rs, ParabolicData::full_flag(rs));
    const WeylGroup& W = fc.group();
    DeformTable dt(fc);
    int s1 = W.right_multiply(0, 0);
    int s2 = W.right_multiply(0, 1);
    int s1s2 = W.right_multiply(s1, 1);
    int s2s1 = W.right_multiply(s2, 0);

    // s1 o s2 inverts {a2, a1+2a2}: multiplicities {1} at a1 and {1,2} at a2.
    CHECK(dt.multiset(fc.pos_of(s1s2), 0) == std::vector<int>{1});
    CHECK(dt.multiset(fc.pos_of(s1s2), 1) == std::vector<int>{1, 2});
    // s2 o s1 inverts {a1, a1+a2}: multiplicities {1,1} at a1 and {1} at a2.
    CHECK(dt.multiset(fc.pos_of(s2s1), 0) == std::vector<int>{1, 1});
    CHECK(dt.multiset(fc.pos_of(s2s1), 1) == std::vector<int>{1});

    // The longest element inverts everything; at a2 only a1+2a2 has
    // multiplicity two, so the k = 2 filter count is 1.
    int w0 = fc.pos_of(W.longest());
    CHECK(dt.multiset(w0, 0) == std::vector<int>{1, 1, 1});
    CHECK(dt.multiset(w0, 1) == std::vector<int>{1, 1, 2});
    CHECK(dt.filter_count(w0, 1, 2) == 1);
    CHECK(dt.filter_count(w0, 0, 2) == 0);
    CHECK(dt.s1_degree(w0, 1) == 4);
    CHECK(dt.s0_degree(w0, 1) == 3);

    ExponentProfile pr = dt.f_profile(fc.pos_of(s1s2));
    CHECK(pr.assoc == std::vector<int>{0, 1});
    CHECK(pr.at(0) == std::vector<int>{1});
    CHECK(pr.at(1) == std::vector<int>{1, 2});
    CHECK_THROWS_AS(pr.at(3), std::invalid_argument);
}

TEST_CASE("simply-laced profiles are multiplicity-free", "[deform]") {
    RootSystem rs({Family::A, 3});
    FlagContext fc(rs, ParabolicData::full_flag(rs));
    DeformTable dt(fc);
    for (int p = 0; p < fc.num_classes(); ++p)
        for (int alpha = 0; alpha < rs.rank(); ++alpha) {
            for (int m : dt.multiset(p, alpha)) CHECK(m == 1);
            CHECK(dt.s0_degree(p, alpha) == dt.s1_degree(p, alpha));
        }
    // Consequently the s = 1 and s -> 0 limits keep the same constants.
    auto rows = fc.full_table();
    ClassificationRecord rec = dt.classify(rows);
    CHECK(rec.bk_ordered == rec.star0_ordered);
    CHECK(rec.bk_unordered == rec.star0_unordered);
    for (const TableRow& r : rows) CHECK(dt.bk_survives(r.pu, r.pv, r.pw) == dt.star0_survives(r.pu, r.pv, r.pw));
}

TEST_CASE("filter counts are superadditive on every nonzero constant", "[deform]") {
    RootSystem rs({Family::B, 3});
    FlagContext fc(rs, ParabolicData::full_flag(rs));
    DeformTable dt(fc);
    auto rows = fc.full_table();
    REQUIRE(rows.size() > 100);
    for (const TableRow& r : rows) {
        auto res = dt.divisibility_check(r.pu, r.pv, r.pw);
        CHECK(static_cast<bool>(res));
    }

    // Contrapositive: when the certificate fails, the constant vanishes.
    // Scan all top-degree triples and require failures to pinpoint zeros.
    int failures = 0;
    for (int pu = 0; pu < fc.num_classes(); ++pu)
        for (int pv = pu; pv < fc.num_classes(); ++pv) {
            if (fc.length_of(pu) + fc.length_of(pv) > fc.dim()) continue;
            auto prod = fc.product(pu, pv);
            for (int pw = 0; pw < fc.num_classes(); ++pw) {
                if (fc.length_of(pw) != fc.length_of(pu) + fc.length_of(pv)) continue;
                auto res = dt.divisibility_check(pu, pv, pw);
                if (!res) {
                    ++failures;
                    auto it = prod.find(pw);
                    CHECK((it == prod.end() || it->second == 0));
                    CHECK(res.alpha >= 0);
                    CHECK(res.k >= 1);
                    CHECK(res.k <= rs.max_multiplicity(res.alpha));
                }
            }
        }
    CHECK(failures > 0);
}

TEST_CASE("deformed coefficient ledger is internally consistent", "[deform]") {
    RootSystem rs({Family::B, 3});
    FlagContext fc(rs, ParabolicData::from_levi(rs, {2}));
    DeformTable dt(fc);
    auto rows = fc.full_table();
    REQUIRE(!rows.empty());
    for (const TableRow& r : rows) {
        DeformedCoefficient dc = dt.star_ts_coefficient(r.pu, r.pv, r.pw);
        CHECK(dc.c == r.c);
        REQUIRE(dc.assoc == fc.parabolic().assoc);
        for (std::size_t a = 0; a < dc.assoc.size(); ++a) {
            int alpha = dc.assoc[a];
            int s1_from_counts = 0, s0_from_counts = 0;
            for (std::size_t j = 0; j < dc.count_diff[a].size(); ++j) {
                s1_from_counts += static_cast<int>(j + 1) * dc.count_diff[a][j];
                s0_from_counts += dc.count_diff[a][j];
            }
            CHECK(dc.s1_degree_diff[a] == s1_from_counts);
            CHECK(dc.s0_degree_diff[a] == s0_from_counts);
            CHECK(dc.s0_degree_diff[a] == dt.filter_count(r.pw, alpha, 1) - dt.filter_count(r.pu, alpha, 1) -
                                              dt.filter_count(r.pv, alpha, 1));
            // Nonzero constant: every filter tail is nonnegative, hence so
            // are both degree differences.
            for (int k = 1; k <= static_cast<int>(dc.count_diff[a].size()); ++k)
                CHECK(dc.filter_diff(a, k) >= 0);
            CHECK(dc.s1_degree_diff[a] >= 0);
            CHECK(dc.s0_degree_diff[a] >= 0);
        }
        bool s1_flat = true, s0_flat = true;
        for (int d : dc.s1_degree_diff) s1_flat = s1_flat && d == 0;
        for (int d : dc.s0_degree_diff) s0_flat = s0_flat && d == 0;
        CHECK(dt.bk_survives(r.pu, r.pv, r.pw) == s1_flat);
        CHECK(dt.star0_survives(r.pu, r.pv, r.pw) == s0_flat);
        CHECK(static_cast<bool>(dt.region_count_inequality(r.pu, r.pv, r.pw)));
        Coeff c0 = dt.star0_coefficient(r.pu, r.pv, r.pw);
        CHECK(c0 == (s0_flat ? r.c : Coeff(0)));
        Coeff cb = dt.bk_coefficient(r.pu, r.pv, r.pw);
        CHECK(cb == (s1_flat ? r.c : Coeff(0)));
    }
}

TEST_CASE("belkale-kumar survival implies star0 survival on nonzero rows", "[deform]") {
    RootSystem rs({Family::B, 3});
    for (std::vector<int> levi : {std::vector<int>{}, std::vector<int>{2}, std::vector<int>{0}}) {
        FlagContext fc(rs, ParabolicData::from_levi(rs, levi));
        DeformTable dt(fc);
        for (const TableRow& r : fc.full_table())
            if (dt.bk_survives(r.pu, r.pv, r.pw)) CHECK(dt.star0_survives(r.pu, r.pv, r.pw));
    }
}

TEST_CASE("star0 equals cup on maximal parabolics", "[deform]") {
    RootSystem rs({Family::B, 3});
    for (int gamma : {0, 1, 2}) {
        FlagContext fc(rs, ParabolicData::from_assoc(rs, {gamma}));
        DeformTable dt(fc);
        auto rows = fc.full_table();
        REQUIRE(!rows.empty());
        for (const TableRow& r : rows) {
            CHECK(dt.star0_survives(r.pu, r.pv, r.pw));
            CHECK(dt.star0_coefficient(r.pu, r.pv, r.pw) == r.c);
        }
    }
}

TEST_CASE("mixed products interpolate between the two limits", "[deform]") {
    RootSystem rs({Family::B, 3});
    FlagContext fc(rs, ParabolicData::from_levi(rs, {2}));
    DeformTable dt(fc);
    REQUIRE(fc.parabolic().assoc == std::vector<int>{0, 1});
    auto rows = fc.full_table();
    std::uint64_t n_bk = 0, n_mid0 = 0, n_mid1 = 0, n_star0 = 0;
    for (const TableRow& r : rows) {
        bool bk = dt.bk_survives(r.pu, r.pv, r.pw);
        bool star0 = dt.star0_survives(r.pu, r.pv, r.pw);
        CHECK(dt.mixed_survives(r.pu, r.pv, r.pw, {0, 1}) == star0);
        CHECK(dt.mixed_survives(r.pu, r.pv, r.pw, {}) == bk);
        CHECK(dt.mixed_coefficient(r.pu, r.pv, r.pw, {0, 1}) == dt.star0_coefficient(r.pu, r.pv, r.pw));
        CHECK(dt.mixed_coefficient(r.pu, r.pv, r.pw, {}) == dt.bk_coefficient(r.pu, r.pv, r.pw));
        bool mid0 = dt.mixed_survives(r.pu, r.pv, r.pw, {0});
        bool mid1 = dt.mixed_survives(r.pu, r.pv, r.pw, {1});
        // On nonzero rows the s = 1 condition is stronger per root, so the
        // chain bk => mixed(A) => star0 holds for every A.
        if (bk) {
            CHECK(mid0);
            CHECK(mid1);
        }
        if (mid0) CHECK(star0);
        if (mid1) CHECK(star0);
        n_bk += bk;
        n_mid0 += mid0;
        n_mid1 += mid1;
        n_star0 += star0;
    }
    CHECK(n_bk <= n_mid0);
    CHECK(n_mid0 <= n_star0);
    CHECK(n_bk <= n_mid1);
    CHECK(n_mid1 <= n_star0);
    CHECK_THROWS_AS(dt.mixed_survives(0, 0, 0, {2}), std::invalid_argument);
    CHECK_THROWS_AS(dt.mixed_survives(0, 0, 0, {5}), std::invalid_argument);
}

TEST_CASE("star0 survival matches q-factoring at every maximal parabolic", "[deform]") {
    RootSystem rs({Family::B, 3});
    FlagContext gp(rs, ParabolicData::from_levi(rs, {2}));
    FlagContext gq0(rs, ParabolicData::from_levi(rs, {1, 2}));  // associated root a1
    FlagContext gq1(rs, ParabolicData::from_levi(rs, {0, 2}));  // associated root a2
    DeformTable dt(gp);
    int checked = 0;
    for (const TableRow& r : gp.full_table()) {
        int pd = gp.dual_pos(r.pw);  // c_{u,v}^{dual(pd)} = c_{u,v}^{w} != 0
        bool fact = is_q_factoring(gp, gq0, r.pu, r.pv, pd) && is_q_factoring(gp, gq1, r.pu, r.pv, pd);
        CHECK(fact == dt.star0_survives(r.pu, r.pv, r.pw));
        ++checked;
    }
    CHECK(checked > 50);
}

TEST_CASE("q-factoring holds at intermediate parabolics too", "[deform]") {
    RootSystem rs({Family::B, 3});
    FlagContext gb(rs, ParabolicData::full_flag(rs));
    DeformTable dt(gb);
    std::vector<std::vector<int>> levis{{0}, {1}, {2}, {0, 1}, {0, 2}, {1, 2}};
    std::vector<std::unique_ptr<FlagContext>> gqs;
    for (const auto& l : levis) gqs.push_back(std::make_unique<FlagContext>(rs, ParabolicData::from_levi(rs, l)));
    int surviving = 0;
    for (const TableRow& r : gb.full_table()) {
        if (!dt.star0_survives(r.pu, r.pv, r.pw)) continue;
        ++surviving;
        int pd = gb.dual_pos(r.pw);
        for (const auto& gq : gqs) CHECK(is_q_factoring(gb, *gq, r.pu, r.pv, pd));
    }
    CHECK(surviving > 50);
}

TEST_CASE("q-factoring rejects ill-posed input", "[deform]") {
    RootSystem rs({Family::B, 3});
    RootSystem rs_other({Family::B, 3});
    FlagContext gp(rs, ParabolicData::from_levi(rs, {2}));
    FlagContext gq(rs, ParabolicData::from_levi(rs, {0, 2}));
    FlagContext gq_foreign(rs_other, ParabolicData::from_levi(rs_other, {0, 2}));
    FlagContext gq_bad(rs, ParabolicData::from_levi(rs, {0, 1}));  // does not contain {2}
    FlagContext gq_same(rs, ParabolicData::from_levi(rs, {2}));    // not strict
    CHECK_THROWS_AS(is_q_factoring(gp, gq_foreign, 0, 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(is_q_factoring(gp, gq_bad, 0, 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(is_q_factoring(gp, gq_same, 0, 0, 0), std::invalid_argument);
    // Zero triple: (e, e, e) has c_{e,e}^{dual(e)} = c_{e,e}^{top} = 0.
    CHECK_THROWS_AS(is_q_factoring(gp, gq, 0, 0, 0), std::invalid_argument);
}

TEST_CASE("richmond factorization on every surviving triple", "[deform]") {
    RootSystem rs({Family::B, 3});
    FlagContext gp(rs, ParabolicData::from_levi(rs, {2}));
    DeformTable dt(gp);
    FlagContext gq0(rs, ParabolicData::from_levi(rs, {1, 2}));
    FlagContext fib0(rs, std::vector<int>{1, 2}, std::vector<int>{2});
    FlagContext gq1(rs, ParabolicData::from_levi(rs, {0, 2}));
    FlagContext fib1(rs, std::vector<int>{0, 2}, std::vector<int>{2});
    int surviving = 0, vetoed = 0;
    for (const TableRow& r : gp.full_table()) {
        if (dt.star0_survives(r.pu, r.pv, r.pw)) {
            ++surviving;
            CHECK(richmond_factorization_check(dt, gq0, fib0, r.pu, r.pv, r.pw));
            CHECK(richmond_factorization_check(dt, gq1, fib1, r.pu, r.pv, r.pw));
        } else if (vetoed == 0) {
            ++vetoed;
            CHECK_THROWS_AS(richmond_factorization_check(dt, gq0, fib0, r.pu, r.pv, r.pw), std::invalid_argument);
        }
    }
    CHECK(surviving > 50);
    CHECK(vetoed == 1);
}

TEST_CASE("published rank-4 coefficient survives star0 but not belkale-kumar", "[deform]") {
    RootSystem rs({Family::B, 4});
    FlagContext fc(rs, ParabolicData::from_assoc(rs, {1, 3}));
    const WeylGroup& W = fc.group();
    DeformTable dt(fc);
    int pu = fc.pos_of(parse_window(W, "1,3,2,4"));
    int pv = fc.pos_of(parse_window(W, "1,-2,3,4"));
    int pw = fc.pos_of(parse_window(W, "3,-2,1,4"));
    REQUIRE(fc.length_of(pu) == 1);
    REQUIRE(fc.length_of(pv) == 5);
    REQUIRE(fc.length_of(pw) == 6);
    CHECK(fc.coefficient(pu, pv, pw) == 1);
    CHECK(dt.star0_survives(pu, pv, pw));
    CHECK_FALSE(dt.bk_survives(pu, pv, pw));
    CHECK(dt.star0_coefficient(pu, pv, pw) == 1);
    CHECK(dt.bk_coefficient(pu, pv, pw) == 0);

    DeformedCoefficient dc = dt.star_ts_coefficient(pu, pv, pw);
    REQUIRE(dc.assoc == std::vector<int>{1, 3});
    CHECK(dc.s0_degree_diff == std::vector<int>{0, 0});
    CHECK(dc.s1_degree_diff[0] > 0);  // the s = 1 grading breaks at a2
    CHECK(dc.s1_degree_diff[1] == 0);

    // The surviving constant factors through both maximal quotients.
    FlagContext gq0(rs, ParabolicData::from_levi(rs, {0, 2, 3}));
    FlagContext fib0(rs, std::vector<int>{0, 2, 3}, std::vector<int>{0, 2});
    FlagContext gq1(rs, ParabolicData::from_levi(rs, {0, 1, 2}));
    FlagContext fib1(rs, std::vector<int>{0, 1, 2}, std::vector<int>{0, 2});
    CHECK(richmond_factorization_check(dt, gq0, fib0, pu, pv, pw));
    CHECK(richmond_factorization_check(dt, gq1, fib1, pu, pv, pw));
    CHECK(is_q_factoring(fc, gq0, pu, pv, fc.dual_pos(pw)));
    CHECK(is_q_factoring(fc, gq1, pu, pv, fc.dual_pos(pw)));
}

TEST_CASE("classification bookkeeping on the smallest full flag", "[deform]") {
    RootSystem rs({Family::A, 2});
    FlagContext fc(rs, ParabolicData::full_flag(rs));
    DeformTable dt(fc);
    auto rows = fc.full_table();
    ClassificationRecord rec = dt.classify(rows);
    CHECK(rec.cup_unordered == 12);
    CHECK(rec.cup_ordered == 21);
    // By hand: the six identity rows survive, both length-one squares and all
    // four mixed length-two rows die on a projected degree, and the two
    // complementary-inversion rows into the top class survive.
    CHECK(rec.star0_unordered == 8);
    CHECK(rec.star0_ordered == 15);
    CHECK(rec.star0_ordered == rec.bk_ordered);
    CHECK(rec.star0_unordered == rec.bk_unordered);
    std::uint64_t hand_ordered = 0, hand_unordered = 0;
    for (const TableRow& r : rows) {
        if (!dt.star0_survives(r.pu, r.pv, r.pw)) continue;
        hand_unordered += 1;
        hand_ordered += (r.pu == r.pv) ? 1 : 2;
    }
    CHECK(rec.star0_ordered == hand_ordered);
    CHECK(rec.star0_unordered == hand_unordered);
}

#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "schub/root_system.hpp"

using namespace schub;

namespace {

Coords cv(std::initializer_list<int> xs) { return Coords(xs); }

std::vector<CartanType> small_types(int max_rank) {
    std::vector<CartanType> ts;
    for (int n = 1; n <= max_rank; ++n) ts.push_back({Family::A, n});
    for (int n = 2; n <= max_rank; ++n) ts.push_back({Family::B, n});
    for (int n = 2; n <= max_rank; ++n) ts.push_back({Family::C, n});
    for (int n = 3; n <= max_rank; ++n) ts.push_back({Family::D, n});
    if (max_rank >= 2) ts.push_back({Family::G, 2});
    if (max_rank >= 4) ts.push_back({Family::F, 4});
    if (max_rank >= 6) ts.push_back({Family::E, 6});
    return ts;
}

}  // namespace

TEST_CASE("type parsing and validation") {
    CHECK(parse_cartan_type("B4").name() == "B4");
    CHECK(parse_cartan_type("c6").name() == "C6");
    CHECK(parse_cartan_type("E8").rank == 8);
    CHECK_THROWS_AS(parse_cartan_type("A0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_cartan_type("B1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_cartan_type("D2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_cartan_type("E5"), std::invalid_argument);
    CHECK_THROWS_AS(parse_cartan_type("G3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_cartan_type("F5"), std::invalid_argument);
    CHECK_THROWS_AS(parse_cartan_type("H3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_cartan_type("B"), std::invalid_argument);
    CHECK_THROWS_AS(parse_cartan_type("Bx"), std::invalid_argument);
}

TEST_CASE("cartan matrices symmetrize") {
    for (const CartanType& ct : small_types(6)) {
        auto a = cartan_matrix(ct);
        auto d = symmetrizer(ct);
        for (int i = 0; i < ct.rank; ++i)
            for (int j = 0; j < ct.rank; ++j) {
                INFO(ct.name());
                CHECK(d[i] * a[i][j] == d[j] * a[j][i]);
                if (i != j) CHECK(a[i][j] <= 0);
            }
    }
}

TEST_CASE("A2 positive roots are exactly {a1, a2, a1+a2}") {
    RootSystem rs({Family::A, 2});
    std::set<Coords> got;
    for (const Root& r : rs.positive_roots()) got.insert(r.coords);
    CHECK(got == std::set<Coords>{cv({1, 0}), cv({0, 1}), cv({1, 1})});
}

TEST_CASE("positive root counts match the classical formulas") {
    CHECK(RootSystem({Family::B, 4}).num_positive() == 16);
    CHECK(RootSystem({Family::C, 6}).num_positive() == 36);
    CHECK(RootSystem({Family::A, 3}).num_positive() == 6);
    CHECK(RootSystem({Family::D, 4}).num_positive() == 12);
    CHECK(RootSystem({Family::G, 2}).num_positive() == 6);
    CHECK(RootSystem({Family::F, 4}).num_positive() == 24);
    CHECK(RootSystem({Family::E, 6}).num_positive() == 36);
}

TEST_CASE("roots are graded by height with lexicographic tie-break") {
    for (const CartanType& ct : small_types(5)) {
        RootSystem rs(ct);
        for (int r = 0; r + 1 < rs.num_positive(); ++r) {
            const Root& a = rs.root(r);
            const Root& b = rs.root(r + 1);
            INFO(ct.name());
            CHECK((a.height() < b.height() || (a.height() == b.height() && a.coords < b.coords)));
        }
    }
}

TEST_CASE("B2 multiplicity example: n_{a2, a1+2a2} = 2") {
    RootSystem rs({Family::B, 2});
    Root b{cv({1, 2})};
    REQUIRE(rs.root_index(b.coords) >= 0);
    CHECK(rs.expansion_multiplicity(1, b) == 2);
    CHECK(rs.expansion_multiplicity(0, b) == 1);
    CHECK_THROWS_AS(rs.expansion_multiplicity(0, Root{cv({2, 1})}), std::invalid_argument);
}

TEST_CASE("filters: examples and upward closure") {
    SECTION("A2: J_{a1,1} = {a1, a1+a2}") {
        RootSystem rs({Family::A, 2});
        auto f = rs.filter_roots(0, 1);
        std::set<Coords> got;
        for (const Root& r : f) got.insert(r.coords);
        CHECK(got == std::set<Coords>{cv({1, 0}), cv({1, 1})});
    }
    SECTION("B2: J_{a2,2} = {a1+2a2}") {
        RootSystem rs({Family::B, 2});
        auto f = rs.filter_roots(1, 2);
        REQUIRE(f.size() == 1);
        CHECK(f[0].coords == cv({1, 2}));
    }
    SECTION("k beyond the maximal multiplicity gives the empty filter") {
        RootSystem rs({Family::G, 2});
        CHECK(rs.max_multiplicity(0) == 3);
        CHECK(rs.filter_roots(0, 4).empty());
        CHECK(rs.filter_roots(1, 3).empty());
    }
    SECTION("upward closure in the root poset, exhaustively for ranks <= 4") {
        // beta <= gamma iff gamma - beta is a nonnegative integer combination
        // of positive roots; since simple roots are positive roots this is
        // the same as coordinatewise dominance.
        for (const CartanType& ct : small_types(4)) {
            RootSystem rs(ct);
            for (int alpha = 0; alpha < rs.rank(); ++alpha)
                for (int k = 1; k <= rs.max_multiplicity(alpha); ++k) {
                    auto filt = rs.filter_roots(alpha, k);
                    std::set<Coords> in;
                    for (const Root& r : filt) in.insert(r.coords);
                    for (const Root& b : filt)
                        for (const Root& g : rs.positive_roots()) {
                            bool dominates = true;
                            for (int i = 0; i < rs.rank(); ++i)
                                if (g.coords[i] < b.coords[i]) dominates = false;
                            if (dominates) {
                                INFO(ct.name());
                                CHECK(in.count(g.coords) == 1);
                            }
                        }
                }
        }
    }
}

TEST_CASE("sum of positive roots pairs to 2 with every simple coroot (ranks <= 6)") {
    // The sum of the positive roots is 2*rho, and <2rho, alpha_i^vee> = 2 for
    // every simple alpha_i.  (Plain coordinate evenness of the sum is false in
    // general -- A1 already gives (1) -- so the pairing identity is the right
    // integrality sanity check.)
    for (const CartanType& ct : small_types(6)) {
        RootSystem rs(ct);
        Coords sum(rs.rank(), 0);
        for (const Root& r : rs.positive_roots())
            for (int i = 0; i < rs.rank(); ++i) sum[i] += r.coords[i];
        auto a = rs.cartan();
        for (int i = 0; i < rs.rank(); ++i) {
            long long pair = 0;
            for (int j = 0; j < rs.rank(); ++j) pair += static_cast<long long>(a[i][j]) * sum[j];
            INFO(ct.name());
            CHECK(pair == 2);
        }
    }
}

TEST_CASE("type A multiplicities never exceed 1") {
    for (int n = 1; n <= 7; ++n) {
        RootSystem rs({Family::A, n});
        for (const Root& r : rs.positive_roots())
            for (int i = 0; i < n; ++i) CHECK(r.coords[i] <= 1);
    }
}

TEST_CASE("simple reflections permute the other positive roots") {
    for (const CartanType& ct : small_types(4)) {
        RootSystem rs(ct);
        for (int i = 0; i < rs.rank(); ++i) {
            std::set<int> image;
            for (int r = 0; r < rs.num_positive(); ++r) {
                int img = rs.reflect_index(i, r);
                if (r == rs.simple_root_index(i)) {
                    CHECK(img == -1);  // alpha_i is the unique positive root negated by s_i
                } else {
                    REQUIRE(img >= 0);
                    CHECK(img != rs.simple_root_index(i));
                    image.insert(img);
                    // involution
                    CHECK(rs.reflect_index(i, img) == r);
                }
            }
            CHECK(image.size() == static_cast<std::size_t>(rs.num_positive() - 1));
        }
    }
}

TEST_CASE("coroot coordinates are integral and pair to 2") {
    for (const CartanType& ct : small_types(6)) {
        RootSystem rs(ct);
        auto a = rs.cartan();
        for (const Root& b : rs.positive_roots()) {
            Coords dv = rs.coroot_coords(b.coords);
            // <beta, beta^vee> = sum_{i,j} c_i dv_j <alpha_i, alpha_j^vee> = 2.
            long long pair = 0;
            for (int i = 0; i < rs.rank(); ++i)
                for (int j = 0; j < rs.rank(); ++j)
                    pair += static_cast<long long>(b.coords[i]) * dv[j] * a[j][i];
            INFO(ct.name());
            CHECK(pair == 2);
        }
        // simple coroots are the unit vectors
        for (int i = 0; i < rs.rank(); ++i) {
            Coords c(rs.rank(), 0);
            c[i] = 1;
            Coords dv = rs.coroot_coords(c);
            CHECK(dv == c);
        }
    }
}

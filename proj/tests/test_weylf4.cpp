#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <z2c/weylf4.hpp>

using namespace z2c;

namespace {

std::vector<Rat> apply_matrix(const RatMatrix& M, const std::vector<Rat>& v) {
    std::vector<Rat> out(static_cast<std::size_t>(M.rows()));
    for (int i = 0; i < M.rows(); ++i)
        for (int j = 0; j < M.cols(); ++j)
            out[static_cast<std::size_t>(i)] += M.at(i, j) * v[static_cast<std::size_t>(j)];
    return out;
}

} // namespace

TEST_CASE("weight space layout") {
    VarSpacePtr s = f4_weight_space();
    REQUIRE(s->size() == 4);
    CHECK(s->name(0) == "e1");
    CHECK(s->part(0) == VarPart::One);
    CHECK(s->part(1) == VarPart::Zero);
    CHECK(s->part(3) == VarPart::Zero);
}

TEST_CASE("simple roots and reflections") {
    auto roots = f4_simple_roots();
    REQUIRE(roots.size() == 4);
    CHECK(roots[0] == std::vector<Rat>{Rat(1, 2), Rat(-1, 2), Rat(-1, 2), Rat(-1, 2)});
    CHECK(roots[1] == std::vector<Rat>{Rat(0), Rat(0), Rat(0), Rat(1)});
    CHECK(roots[2] == std::vector<Rat>{Rat(0), Rat(0), Rat(1), Rat(-1)});
    CHECK(roots[3] == std::vector<Rat>{Rat(0), Rat(1), Rat(-1), Rat(0)});

    auto refl = f4_simple_reflections();
    REQUIRE(refl.size() == 4);
    // s2 flips the last coordinate
    CHECK(apply_matrix(refl[1], {Rat(3), Rat(4), Rat(5), Rat(6)}) ==
          std::vector<Rat>{Rat(3), Rat(4), Rat(5), Rat(-6)});
    // s3 swaps e3 and e4
    CHECK(apply_matrix(refl[2], {Rat(3), Rat(4), Rat(5), Rat(6)}) ==
          std::vector<Rat>{Rat(3), Rat(4), Rat(6), Rat(5)});
    // s4 swaps e2 and e3
    CHECK(apply_matrix(refl[3], {Rat(3), Rat(4), Rat(5), Rat(6)}) ==
          std::vector<Rat>{Rat(3), Rat(5), Rat(4), Rat(6)});
    // the short-root reflection mixes all coordinates: s1(1,0,0,0) = (1/2,1/2,1/2,1/2)
    CHECK(apply_matrix(refl[0], {Rat(1), Rat(0), Rat(0), Rat(0)}) ==
          std::vector<Rat>(4, Rat(1, 2)));

    // every reflection is an involution fixing its root's hyperplane mate
    for (std::size_t i = 0; i < 4; ++i) {
        RatMatrix sq = refl[i] * refl[i];
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c) CHECK(sq.at(r, c) == (r == c ? Rat(1) : Rat(0)));
        // the root itself maps to its negative
        auto img = apply_matrix(refl[i], roots[i]);
        for (int c = 0; c < 4; ++c)
            CHECK(img[static_cast<std::size_t>(c)] == -roots[i][static_cast<std::size_t>(c)]);
    }
}

TEST_CASE("pullback by a linear map composes contravariantly") {
    VarSpacePtr s = f4_weight_space();
    Poly p = Poly::variable(s, 0) * Poly::variable(s, 1) + Poly::variable(s, 3).pow(2);
    auto refl = f4_simple_reflections();
    Poly ab = apply_linear(apply_linear(p, refl[0]), refl[2]);
    Poly prod = apply_linear(p, refl[0] * refl[2]);
    CHECK(ab == prod);
}

TEST_CASE("even-orthogonal invariants evaluate correctly") {
    D4Invariants inv = d4_basic_invariants();
    std::vector<Rat> pt{Rat(1), Rat(1), Rat(1), Rat(1)};
    CHECK(inv.f2.evaluate(pt) == Rat(4));
    CHECK(inv.f4p.evaluate(pt) == Rat(1));
    CHECK(inv.f4.evaluate(pt) == Rat(6));  // e2 of the squares: C(4,2)
    CHECK(inv.f6.evaluate(pt) == Rat(4));  // e3 of the squares: C(4,3)

    // invariance under a sign change of an even number of coordinates and
    // under coordinate permutations
    RatMatrix flip(4, 4);
    flip.at(0, 0) = Rat(1);
    flip.at(1, 1) = Rat(1);
    flip.at(2, 2) = Rat(-1);
    flip.at(3, 3) = Rat(-1);
    RatMatrix perm(4, 4); // (e1 e2 e3 e4) -> (e2 e1 e4 e3)
    perm.at(0, 1) = Rat(1);
    perm.at(1, 0) = Rat(1);
    perm.at(2, 3) = Rat(1);
    perm.at(3, 2) = Rat(1);
    for (const Poly* f : {&inv.f2, &inv.f4p, &inv.f4, &inv.f6}) {
        CHECK(apply_linear(*f, flip) == *f);
        CHECK(apply_linear(*f, perm) == *f);
    }
}

TEST_CASE("good generators: degrees and an evaluation spot check") {
    F4Generators g = f4_good_generators();
    // g2 = sum of squares mixes the (2,0) and (0,2) components; only its
    // highest part e1^2 is bihomogeneous
    CHECK(!g.g2.bidegree().has_value());
    CHECK(g.g2.is_homogeneous());
    CHECK(g.g2.top_component().bidegree().has_value());
    REQUIRE(!g.g6.is_zero());
    REQUIRE(!g.g12.is_zero());
    auto deg = [](const Poly& p) {
        auto comps = p.bihomogeneous_components();
        return comps.back().first.zero + comps.back().first.one;
    };
    CHECK(deg(g.g2) == 2);
    CHECK(deg(g.g6) == 6);
    CHECK(deg(g.g8) == 8);
    CHECK(deg(g.g12) == 12);
    // the degree-6 combination vanishes on the first coordinate axis
    std::vector<Rat> axis{Rat(1), Rat(0), Rat(0), Rat(0)};
    CHECK(g.g6.evaluate(axis) == Rat(0));
    // and each generator is invariant under every simple reflection
    for (const RatMatrix& s : f4_simple_reflections()) {
        CHECK(apply_linear(g.g2, s) == g.g2);
        CHECK(apply_linear(g.g6, s) == g.g6);
        CHECK(apply_linear(g.g8, s) == g.g8);
        CHECK(apply_linear(g.g12, s) == g.g12);
    }
}

TEST_CASE("full verification bundle") {
    F4Verify v = f4_verify(2024);
    CHECK(v.reflections_ok);
    CHECK(v.invariance_ok);
    CHECK(v.tops_ok);
    CHECK(v.independent);
    CHECK(v.bidegrees_ok);
    CHECK(v.bound_ok);
    CHECK(v.pass);
    CHECK(v.witness.empty());
    REQUIRE(v.bidegrees.size() == 4);
    CHECK(v.bidegrees[0] == BiDegree{0, 2});
    CHECK(v.bidegrees[1] == BiDegree{2, 4});
    CHECK(v.bidegrees[2] == BiDegree{4, 4});
    CHECK(v.bidegrees[3] == BiDegree{6, 6});
}

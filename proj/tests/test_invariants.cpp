#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <z2c/invariants.hpp>
#include <z2c/polymatrix.hpp>
#include <z2c/rng.hpp>

#include <algorithm>

using namespace z2c;

namespace {

Poly slice_var(const VarSpacePtr& s, const std::string& name) {
    return Poly::variable(s, name);
}

} // namespace

TEST_CASE("charpoly coefficients on gl pairs") {
    LieAlgebra g = build_symmetric_pair(Family::GL, 1, 1);
    GeneratingSystem sys = basic_invariants(g, SystemKind::CharpolyCoeffs);
    REQUIRE(sys.generators.size() == 2); // rank of gl(2)
    PolyMatrix M = generic_matrix(g);
    CHECK(sys.generators[0] == M.at(0, 0) + M.at(1, 1));
    CHECK(sys.generators[1] == M.at(0, 0) * M.at(1, 1) - M.at(0, 1) * M.at(1, 0));
    for (const Poly& f : sys.generators)
        CHECK(is_invariant(g, f, RepKind::Coadjoint));
}

TEST_CASE("even minor sums plus pfaffian on so pairs") {
    // so(4): order even -> e2 plus the Pfaffian, both degree <= 2
    LieAlgebra g22 = build_symmetric_pair(Family::SO, 2, 2);
    GeneratingSystem s22 = basic_invariants(g22, SystemKind::EvenCoeffsPlusPfaffian);
    REQUIRE(s22.generators.size() == 2); // rank of so(4)
    // e2 on a skew matrix is the sum of squared above-diagonal entries: it is
    // homogeneous of degree 2 but mixes bidegrees (2,0) and (0,2)
    CHECK(s22.generators[0].is_homogeneous());
    CHECK(!s22.generators[0].bidegree().has_value());
    CHECK(s22.generators[0] != s22.generators[1]);
    CHECK(pfaffian(generic_matrix(g22)) == s22.generators[1]);

    // so(5): order odd -> e2, e4 only
    LieAlgebra g32 = build_symmetric_pair(Family::SO, 3, 2);
    GeneratingSystem s32 = basic_invariants(g32, SystemKind::EvenCoeffsPlusPfaffian);
    REQUIRE(s32.generators.size() == 2); // rank of so(5)
    auto e = principal_minor_sums(generic_matrix(g32), 4);
    CHECK(s32.generators[0] == e[1]);
    CHECK(s32.generators[1] == e[3]);

    // unsupported combination refused
    CHECK_THROWS_AS(basic_invariants(g22, SystemKind::CharpolyCoeffs), std::invalid_argument);
    CHECK_THROWS_AS(basic_invariants(build_symmetric_pair(Family::GL, 2, 1),
                                     SystemKind::EvenCoeffsPlusPfaffian),
                    std::invalid_argument);
}

TEST_CASE("degeneration takes tops, preserves degrees, stays invariant") {
    LieAlgebra g = build_symmetric_pair(Family::GL, 2, 1);
    GeneratingSystem sys = basic_invariants(g, SystemKind::CharpolyCoeffs);
    DegenerationResult degen = z2_degenerate(sys, 11);
    CHECK(degen.degrees_preserved);
    CHECK(degen.invariant);
    CHECK(degen.independent);
    REQUIRE(degen.bidegrees.size() == 3);
    CHECK(degen.bidegrees[0] == BiDegree{1, 0});
    CHECK(degen.bidegrees[1] == BiDegree{0, 2});
    CHECK(degen.bidegrees[2] == BiDegree{1, 2});

    // top-then-degenerate equals degenerate-then-top, checked on the determinant
    LieAlgebra k = contract(g);
    CHECK(degen.degenerated[2] == sys.generators[2].top_component());
    for (const Poly& f : degen.degenerated)
        CHECK(is_invariant(k, f, RepKind::Coadjoint));
    // witness point certifies full Jacobian rank
    CHECK(jacobian_rank_at(degen.degenerated, degen.witness_point) == 3);
}

TEST_CASE("taking the top component commutes with slice restriction") {
    // The slice maps Zero coordinates to Zero slice variables and One to One,
    // so the top component can be taken before or after restricting.
    LieAlgebra g11 = build_symmetric_pair(Family::GL, 1, 1);
    GeneratingSystem s11 = basic_invariants(g11, SystemKind::CharpolyCoeffs);
    Poly det = s11.generators[1];
    CHECK(restrict_to_slice(det.top_component(), g11) ==
          restrict_to_slice(det, g11).top_component());

    LieAlgebra g41 = build_symmetric_pair(Family::SO, 4, 1);
    GeneratingSystem s41 = basic_invariants(g41, SystemKind::EvenCoeffsPlusPfaffian);
    Poly f1 = s41.generators[0];
    CHECK(restrict_to_slice(f1.top_component(), g41) ==
          restrict_to_slice(f1, g41).top_component());
}

TEST_CASE("slice space layout") {
    PairInfo gl32{Family::GL, 3, 2};
    VarSpacePtr s = slice_space(gl32);
    // a1,a2 (Zero), b1,b2 (One), full 1x1 block e1_1 (Zero)
    REQUIRE(s->size() == 5);
    CHECK(s->name(0) == "a1");
    CHECK(s->name(2) == "b1");
    CHECK(s->name(4) == "e1_1");
    CHECK(s->part(2) == VarPart::One);
    CHECK(s->part(4) == VarPart::Zero);

    PairInfo so52{Family::SO, 5, 2};
    VarSpacePtr t = slice_space(so52);
    // d1,d2 (One) plus skew block entries e{r}_{c}, r<c, order 3
    REQUIRE(t->size() == 5);
    CHECK(t->name(0) == "d1");
    CHECK(t->name(1) == "d2");
    CHECK(t->name(2) == "e1_2");
    CHECK(t->name(4) == "e2_3");
    CHECK(t->part(0) == VarPart::One);
    CHECK(t->part(2) == VarPart::Zero);

    // the space is shared across calls so restrictions can be compared
    CHECK(slice_space(gl32).get() == s.get());
}

TEST_CASE("slice restriction goldens") {
    // gl(1,1): det degenerates to -x1_2*x2_1, whose slice value is b1^2
    LieAlgebra g11 = build_symmetric_pair(Family::GL, 1, 1);
    GeneratingSystem sys = basic_invariants(g11, SystemKind::CharpolyCoeffs);
    DegenerationResult degen = z2_degenerate(sys, 5);
    Poly r = restrict_to_slice(sys.generators[1], g11);
    VarSpacePtr s = slice_space(*g11.pair);
    Poly a1 = slice_var(s, "a1"), b1 = slice_var(s, "b1");
    CHECK(r == a1 * a1 + b1 * b1);
    CHECK(restrict_to_slice(degen.degenerated[1], g11) == b1 * b1);

    // so(4,1): the degree-2 generator restricts to d1^2 + sum of e entries squared
    LieAlgebra g41 = build_symmetric_pair(Family::SO, 4, 1);
    GeneratingSystem sys41 = basic_invariants(g41, SystemKind::EvenCoeffsPlusPfaffian);
    Poly r41 = restrict_to_slice(sys41.generators[0], g41);
    VarSpacePtr t = slice_space(*g41.pair);
    Poly expected = Poly::zero(t);
    for (const char* nm : {"d1", "e1_2", "e1_3", "e2_3"}) {
        Poly v = slice_var(t, nm);
        expected += v * v;
    }
    CHECK(r41 == expected);
}

TEST_CASE("good generating systems certified on small pairs") {
    for (auto [n, m] : {std::pair{1, 1}, std::pair{2, 1}, std::pair{2, 2}}) {
        LieAlgebra g = build_symmetric_pair(Family::GL, n, m);
        GoodGenCheck c = good_gensystem_check(g, SystemKind::CharpolyCoeffs, 17);
        CHECK(c.pass);
        CHECK(c.invariant);
        CHECK(c.independent);
        CHECK(c.degree_sum == c.degree_target);
    }
    LieAlgebra g32 = build_symmetric_pair(Family::SO, 3, 2);
    GoodGenCheck c32 = good_gensystem_check(g32, SystemKind::EvenCoeffsPlusPfaffian, 17);
    CHECK(c32.pass);
    // deg e2 + deg e4 = 6 = (dim k + ind k)/2 with dim k = 10, ind k = rk so(5) = 2
    CHECK(c32.degree_sum == 6);
    CHECK(c32.degree_target == 6);
}

TEST_CASE("power traces fail with a symbolic dependence witness") {
    for (auto [n, m] : {std::pair{4, 1}, std::pair{5, 2}}) {
        LieAlgebra g = build_symmetric_pair(Family::SO, n, m);
        GoodGenCheck c = good_gensystem_check(g, SystemKind::PowerTraces, 23);
        CHECK(!c.pass);
        CHECK(c.invariant);   // each degeneration is still an invariant
        CHECK(!c.independent); // but the system is algebraically dependent
        CHECK(c.witness.find("dependent") != std::string::npos);
    }
}

TEST_CASE("degree sum check on contractions and the heisenberg counterexample") {
    LieAlgebra g = build_symmetric_pair(Family::GL, 2, 1);
    GeneratingSystem sys = basic_invariants(g, SystemKind::CharpolyCoeffs);
    DegenerationResult degen = z2_degenerate(sys, 31);
    LieAlgebra k = contract(g);
    DegreeSumCheck d = degree_sum_check(k, degen.degenerated, 8, 31);
    CHECK(!d.skipped);
    CHECK(d.pass);
    CHECK(d.equality);
    CHECK(d.sum == 6);
    CHECK(d.bound == 6); // (9 + 3) / 2

    // heisenberg: the center alone generates, sum 1 < bound (3+1)/2 = 2
    LieAlgebra h = heisenberg();
    Poly z = Poly::variable(h.space, 2);
    DegreeSumCheck dh = degree_sum_check(h, {z}, 8, 31);
    CHECK(!dh.skipped);
    CHECK(!dh.pass);
    CHECK(dh.sum == 1);
    CHECK(dh.bound == 2);

    // size mismatch with the index is skipped, not judged
    DegreeSumCheck ds = degree_sum_check(h, {z, z * z}, 8, 31);
    CHECK(ds.skipped);
}

TEST_CASE("expected bi-degree tables") {
    TableRow gl33 = table_expected("gl", 3, 3);
    REQUIRE(gl33.status == TableStatus::Covered);
    std::string text;
    for (const auto& b : gl33.bidegrees)
        text += "(" + std::to_string(b.zero) + "," + std::to_string(b.one) + ")";
    CHECK(text == "(1,0)(0,2)(1,2)(0,4)(1,4)(0,6)");

    TableRow so63 = table_expected("so", 6, 3);
    REQUIRE(so63.status == TableStatus::Covered);
    REQUIRE(so63.bidegrees.size() == 4);
    CHECK(so63.bidegrees[0] == BiDegree{0, 2});
    CHECK(so63.bidegrees[3] == BiDegree{2, 6});

    CHECK(table_expected("so", 2, 1).status == TableStatus::NotCovered); // n = m+1
    CHECK(table_expected("so", 4, 3).status == TableStatus::NotCovered); // n+m even
    CHECK(table_expected("sp", 3, 1).status == TableStatus::Conjectural);
    CHECK_THROWS_AS(table_expected("gl", 1, 2), std::invalid_argument);
    CHECK_THROWS_AS(table_expected("e8", 4, 2), std::invalid_argument);
}

TEST_CASE("bidegree bound holds with equality on the classified rows") {
    // gl(2,1): bound ((dim s + rk s)/2, dim g1) with s = gl(1) + 1-torus:
    // dim s = 2, rk s = 2, dim g1 = 4
    LieAlgebra g21 = build_symmetric_pair(Family::GL, 2, 1);
    TableRow row = table_expected("gl", 2, 1);
    BidegreeBoundCheck b = bidegree_bound_check(g21, row.bidegrees);
    CHECK(b.pass);
    CHECK(b.equality);
    CHECK(b.bound == BiDegree{2, 4});
    CHECK(b.sum == BiDegree{2, 4});

    // so(6,3) from the closed-form table alone (no degeneration run needed)
    LieAlgebra g63 = build_symmetric_pair(Family::SO, 6, 3);
    TableRow row63 = table_expected("so", 6, 3);
    BidegreeBoundCheck b63 = bidegree_bound_check(g63, row63.bidegrees);
    CHECK(b63.pass);
    CHECK(b63.equality);
    CHECK(b63.bound == BiDegree{2, 18});
}

TEST_CASE("minor cross-identity needs the shuffle sign") {
    LieAlgebra k = contract(build_symmetric_pair(Family::GL, 1, 1));
    PolyMatrix M = generic_matrix(k);
    // free generators of the invariant ring of k*: trace and top of det
    std::vector<Poly> gens{M.at(0, 0) + M.at(1, 1), (M.at(0, 1) * M.at(1, 0)).scaled(Rat(-1))};
    MinorCrossCheck c = minor_cross_identity_check(k, gens, 10, 10, 91);
    CHECK(c.pass);
    CHECK(c.points_checked == 10);
    CHECK(c.pairs_checked == 10);

    // hand check at one explicit point that dropping the shuffle sign breaks
    // the identity: with I = {0,1}, J = {1,3} the signed products agree (9 = 9)
    // while the raw ones differ (9 vs -9).
    std::vector<Rat> pt{Rat(2), Rat(3), Rat(5), Rat(7)};
    PolyMatrix Pi = poisson_matrix(k);
    auto eval_pf = [&](const std::vector<int>& idx) {
        RatMatrix sub(static_cast<int>(idx.size()), static_cast<int>(idx.size()));
        for (std::size_t r = 0; r < idx.size(); ++r)
            for (std::size_t cidx = 0; cidx < idx.size(); ++cidx)
                sub.at(static_cast<int>(r), static_cast<int>(cidx)) =
                    Pi.at(idx[r], idx[cidx]).evaluate(pt);
        return pfaffian(sub);
    };
    auto eval_minor = [&](const std::vector<int>& cols) {
        RatMatrix J = jacobian_at(gens, pt);
        RatMatrix sub(2, 2);
        for (int r = 0; r < 2; ++r)
            for (int cidx = 0; cidx < 2; ++cidx)
                sub.at(r, cidx) = J.at(r, cols[static_cast<std::size_t>(cidx)]);
        return determinant(sub);
    };
    // complements inside {0,1,2,3}
    std::vector<int> I{0, 1}, Ic{2, 3}, J2{1, 3}, Jc{0, 2};
    Rat dI = eval_minor(Ic), dJ = eval_minor(Jc);
    Rat pfI = eval_pf(I), pfJ = eval_pf(J2);
    CHECK(dI == Rat(3));
    CHECK(dJ == Rat(-3));
    CHECK(pfI == Rat(3));
    CHECK(pfJ == Rat(3));
    // shuffle signs: (2,3,0,1) has 4 inversions -> +1; (0,2,1,3) has 1 -> -1
    Rat signedI = dI, signedJ = -dJ;
    CHECK(signedI * pfJ == signedJ * pfI);
    CHECK(dI * pfJ != dJ * pfI); // unsigned version provably fails here
}

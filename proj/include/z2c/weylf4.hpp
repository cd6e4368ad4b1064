#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <z2c/poly.hpp>
#include <z2c/polymatrix.hpp>
#include <z2c/varspace.hpp>

namespace z2c {

// Weight-space coordinates e1..e4; e1 spans the One line, e2..e4 the Zero part,
// so Poly::bidegree reads as (degree in e2..e4, degree in e1).
VarSpacePtr f4_weight_space();

// The four simple roots: 1/2(e1-e2-e3-e4), e4, e3-e4, e2-e3.
std::vector<std::vector<Rat>> f4_simple_roots();

// Orthogonal reflection in the hyperplane of a root: v -> v - 2(v,a)/(a,a) a.
RatMatrix reflection_matrix(const std::vector<Rat>& root);

std::vector<RatMatrix> f4_simple_reflections();

// Pullback p(Mx): substitute the i-th variable by the i-th row of M applied
// to the variables. Composition law: apply(apply(p, A), B) = apply(p, A*B).
Poly apply_linear(const Poly& p, const RatMatrix& M);

// Degree 2, 4, 4, 6 generators of the even-orthogonal reflection group on
// four coordinates: sum of squares, the product e1*e2*e3*e4, and the second
// and third elementary symmetric functions of the squares.
struct D4Invariants {
    Poly f2, f4p, f4, f6;
};
D4Invariants d4_basic_invariants();

// The degree 2, 6, 8, 12 combinations invariant under the full reflection
// group generated by the four simple reflections.
struct F4Generators {
    Poly g2, g6, g8, g12;
};
F4Generators f4_good_generators();

// Bundle verification: reflection sanity, symbolic invariance of the four
// generators (simple reflections and all words of length <= 3), frozen
// highest components, algebraic independence of the tops, bidegrees
// (0,2),(2,4),(4,4),(6,6), and the component-wise degree-sum bound with the
// slice data dim s = 21, rk s = 3, dim g1 = 16.
struct F4Verify {
    bool reflections_ok = false;
    bool invariance_ok = false;
    bool tops_ok = false;
    bool independent = false;
    bool bidegrees_ok = false;
    bool bound_ok = false;
    std::vector<BiDegree> bidegrees;
    bool pass = false;
    std::string witness; // first failure, empty when pass
};
F4Verify f4_verify(std::uint64_t seed);

} // namespace z2c

#pragma once

#include <string>
#include <vector>

#include <z2c/liealg.hpp>
#include <z2c/poly.hpp>
#include <z2c/polymatrix.hpp>
#include <z2c/rational.hpp>

namespace z2c {

// ---------------------------------------------------------------------------
// Partition arithmetic
// ---------------------------------------------------------------------------

struct Partition {
    std::vector<int> parts; // nonincreasing, positive

    int total() const;
    std::string to_text() const; // "(3,1)"
};

// All partitions of N, descending lexicographic, deterministic.
std::vector<Partition> partitions_of(int N);

// Conjugate partition (an involution).
Partition dual_partition(const Partition& p);

// Centralizer dimension of a nilpotent with Jordan type p: sum of squared
// dual parts.
int centralizer_dim_from_partition(const Partition& p);

// Nilpotent matrix with Jordan blocks of the given sizes (eigenvalue 0).
RatMatrix nilpotent_from_partition(const Partition& p);

// dim { Y : MY = YM } inside full matrices, by exact nullspace of the
// commutator map on the standard basis.
int ad_centralizer_dim(const RatMatrix& M);

// Nonnegativity check for partitions of an even number 2n: the closed form
//   1/2 * sum (dual_i - 1)^2 + (floor((s+1)/2) - s/2),   s = number of dual parts,
// must be >= 0 and agree with the independently assembled
//   1/2 * dim g_xi + floor((eta_1 - 1)/2) - 2n + 1.
struct UslovieCheck {
    bool pass = false;
    Rat lhs;   // assembled expression
    Rat rhs;   // closed form
};
UslovieCheck uslovie_check(const Partition& p); // throws on odd total

// ---------------------------------------------------------------------------
// Explicit generators for the pair (gl(2n), gl(n) x gl(n))
// ---------------------------------------------------------------------------

struct NRegularSystem {
    LieAlgebra pair;          // gl(n,n) symmetric pair
    std::vector<Poly> barred; // tr(xi1^(2i)),          i = 1..n, bidegree (0, 2i)
    std::vector<Poly> hatted; // tr(xi0 * xi1^(2i-2)),  i = 1..n, bidegree (1, 2i-2)
};

// Build the 2n generators symbolically and verify each is annihilated by all
// coadjoint derivations of the contraction. Throws beyond the cap.
NRegularSystem nregular_generators(int n, int cap = 3);

// Coordinate vector (on the gl(n,n) pair space) of the block matrix with
// lower-left block the identity and upper-right block a single nilpotent
// Jordan block; certified regular by centralizer dimension 2n.
std::vector<Rat> regular_nilpotent_in_g1(int n);

// Does { block-diagonal part of xi1^(2i-2), i = 1..n } span the kernel of
// y -> [y, xi1] on the diagonal-block subalgebra? Exact linear algebra; the
// point is skipped when xi1 is not regular (centralizer dimension != 2n).
struct SpanCheck {
    bool pass = false;
    bool skipped = false;
    int null_dim = 0; // dim of the kernel
    int span_dim = 0; // rank of the covariant vectors
    bool contained = false;
    std::string note;
};
SpanCheck centralizer_span_check(const LieAlgebra& pair_algebra,
                                 const std::vector<Rat>& point);

} // namespace z2c

#ifndef Z2C_INVARIANTS_HPP
#define Z2C_INVARIANTS_HPP

#include <z2c/liealg.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace z2c {

/*
 * Which classical generating system to build on a symmetric-pair algebra:
 * charpoly coefficients (sums of principal i-minors) for gl; sums of principal
 * 2i-minors, plus the Pfaffian when the matrix order is even, for so; power
 * traces tr(M^{2i}) as the known-bad system for so; the explicit quartet of
 * Weyl-group polynomials for the F4 computation (handled in weylf4).
 */
enum class SystemKind { CharpolyCoeffs, EvenCoeffsPlusPfaffian, PowerTraces, F4Explicit };

std::string system_kind_name(SystemKind k);

struct GeneratingSystem {
    LieAlgebra ambient; // symmetric-pair algebra, uncontracted
    SystemKind kind = SystemKind::CharpolyCoeffs;
    std::vector<Poly> generators; // on the ambient coordinates, count = rk g
};

/*
 * Build the generators symbolically on the generic matrix of the model and
 * spot-check their invariance under a deterministic sample of adjoint
 * derivations. Supported combinations: GL+CharpolyCoeffs, SO+EvenCoeffs..,
 * SO+PowerTraces; anything else throws.
 */
GeneratingSystem basic_invariants(const LieAlgebra& pair_algebra, SystemKind kind);

struct DegenerationResult {
    std::vector<Poly> degenerated; // f_i* = top One-part component of f_i
    std::vector<BiDegree> bidegrees;
    bool degrees_preserved = false; // deg f_i* == deg f_i for all i
    bool invariant = false;         // every f_i* coadjoint-invariant on the contraction
    int failed_generator = -1;      // when not invariant
    int failed_direction = -1;
    bool independent = false;
    std::vector<Rat> witness_point; // full-rank certificate, or last deficient sample
    int witness_rank = 0;
    int samples_used = 0;
};

/*
 * Z2-degeneration of a generating system: take top components, verify each is
 * invariant for the contracted algebra, and decide algebraic independence by
 * Jacobian rank at random integer points. One full-rank sample certifies
 * independence; the dependent verdict requires five deficient samples in a row.
 */
DegenerationResult z2_degenerate(const GeneratingSystem& sys, std::uint64_t seed);

/*
 * Coordinates of the verification slice of a pair: for SO, d1..dm (the
 * One-part) plus the entries e{r}_{c} (r < c) of a skew block of order n-m;
 * for GL, a1..am and the One-part b1..bm plus a full block e{r}_{c} of order
 * n-m. Variable order: a/d first, then b, then e row-major.
 */
VarSpacePtr slice_space(const PairInfo& pair);

// Substitute the slice parameterization into a polynomial in the pair's
// coordinates; the result lives in slice_space(pair).
Poly restrict_to_slice(const Poly& p, const LieAlgebra& pair_algebra);

struct GoodGenCheck {
    bool pass = false;
    bool invariant = false;
    bool independent = false;
    int degree_sum = 0;
    int degree_target = 0; // (dim g + rk g)/2, the free-generation equality value
    std::vector<BiDegree> bidegrees;
    std::string witness; // dependence explanation or failing payload
};

/*
 * Full certification that the degenerations form a good generating system:
 * invariance, independence, and the degree-sum equality. For a dependent
 * system whose slice restrictions involve only the rank-many One-part slice
 * variables, the witness carries that symbolic dependence argument.
 */
GoodGenCheck good_gensystem_check(const LieAlgebra& pair_algebra, SystemKind kind,
                                  std::uint64_t seed);

// Assemble the verdict from an already computed degeneration (lets callers
// reuse one expensive degeneration for several reports).
GoodGenCheck good_gensystem_assess(const LieAlgebra& pair_algebra,
                                   const DegenerationResult& degen);

struct DegreeSumCheck {
    bool skipped = false;
    bool pass = false;
    bool equality = false;
    int sum = 0;
    int bound = 0; // (dim + index)/2
    std::string note;
};

/*
 * The degree-sum inequality sum(deg f_i) >= (dim L + ind L)/2 for a purported
 * list of ind-many independent invariants; equality certifies free generation.
 * Skipped when the list size differs from the estimated index.
 */
DegreeSumCheck degree_sum_check(const LieAlgebra& L, const std::vector<Poly>& fs, int trials,
                                std::uint64_t seed);

struct BidegreeBoundCheck {
    bool pass = false;
    bool equality = false;
    BiDegree sum;
    BiDegree bound; // ((dim s + rk s)/2, dim g1)
};

/*
 * Componentwise lower bound on the total bi-degree of an independent system of
 * degenerated invariants. The slice-stabilizer data (dim s, rk s) comes from
 * the family closed forms: s = gl(n-m) + m-torus for GL, s = so(n-m) for SO.
 */
BidegreeBoundCheck bidegree_bound_check(const LieAlgebra& pair_algebra,
                                        const std::vector<BiDegree>& bidegrees);

enum class TableStatus { Covered, NotCovered, Conjectural };

struct TableRow {
    TableStatus status = TableStatus::NotCovered;
    std::vector<BiDegree> bidegrees;
};

/*
 * Closed-form expected coadjoint bi-degrees for a family/size, as a per-index
 * case analysis on the generator number. The so row is only
 * covered under its stated hypotheses (n > m+2, n+m odd); sp is recorded as
 * conjectural and never expanded. Unknown family names throw.
 */
TableRow table_expected(const std::string& family, int n, int m);

struct MinorCrossCheck {
    bool pass = false;
    int points_checked = 0;
    int pairs_checked = 0;
    std::string witness; // first failing (point, I, J) when not passing
};

/*
 * Cross-identity between the Pfaffian minors of the Poisson matrix and the
 * Jacobian minors of a free generating system: D_I * Pf_J == D_J * Pf_I at
 * random points, where D_I is the minor on the columns complementary to I
 * multiplied by the sign of the shuffle permutation (complement, I). The
 * shuffle sign is required for the identity to hold exactly.
 */
MinorCrossCheck minor_cross_identity_check(const LieAlgebra& contraction,
                                           const std::vector<Poly>& gens, int num_points,
                                           int num_pairs, std::uint64_t seed);

} // namespace z2c

#endif // Z2C_INVARIANTS_HPP

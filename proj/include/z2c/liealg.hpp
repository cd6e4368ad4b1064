#ifndef Z2C_LIEALG_HPP
#define Z2C_LIEALG_HPP

#include <z2c/polymatrix.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace z2c {

enum class Family { GL, SO };

std::string family_name(Family f); // "gl" / "so"

/*
 * Block data of a symmetric pair (g, g0) built from the involution that fixes
 * the two diagonal blocks: total matrix order N = n + m, with the m-block in
 * the top-left corner. Diagonal-block basis vectors carry part Zero, the
 * off-diagonal ones part One.
 */
struct PairInfo {
    Family family = Family::GL;
    int n = 0;
    int m = 0;

    int N() const { return n + m; }
    // Rank of the symmetric space (g, g0): min(n, m) for both families here.
    int rank_pair() const { return m < n ? m : n; }
    // Rank of the ambient algebra g.
    int rank_ambient() const { return family == Family::GL ? N() : N() / 2; }
};

/*
 * Finite-dimensional Lie algebra over Q given by a labeled basis and sparse
 * structure constants [e_i, e_j] = sum_k c_{ij}^k e_k, stored for i < j only
 * (antisymmetry is implicit). The VarSpace holds one coordinate per basis
 * vector, named after it and carrying its Z2 part label; via the trace-form
 * identification those coordinates serve for polynomials on the algebra and on
 * its dual alike. Algebras built from a matrix model also keep the defining
 * matrices of their basis vectors.
 */
struct LieAlgebra {
    std::string name;
    std::vector<std::string> basis_names;
    std::vector<VarPart> parts;
    std::map<std::pair<int, int>, std::vector<std::pair<int, Rat>>> brackets;
    VarSpacePtr space;
    std::vector<RatMatrix> basis_matrices; // empty when there is no matrix model
    int matrix_order = 0;
    std::optional<PairInfo> pair;
    bool contracted = false;

    int dim() const { return static_cast<int>(basis_names.size()); }
    // [e_i, e_j] as a sparse coordinate list, for arbitrary i, j.
    std::vector<std::pair<int, Rat>> bracket_of(int i, int j) const;
    Rat structure_constant(int i, int j, int k) const;
    std::vector<int> part_indices(VarPart p) const;
};

/*
 * gl(N) on the elementary-matrix basis E_rc (row-major), or so(N) on the basis
 * e_ab = E_ab - E_ba for a < b (lexicographic). Structure constants are
 * computed from matrix commutators. The default size cap bounds symbolic cost.
 */
LieAlgebra build_classical(Family f, int N, int max_order = 10);

/*
 * The Z2-graded algebra of the symmetric pair (gl(n+m), gl(m) + gl(n)) or
 * (so(n+m), so(m) + so(n)), with the m-block top-left. Requires n >= m >= 0.
 */
LieAlgebra build_symmetric_pair(Family f, int n, int m, int max_order = 10);

/*
 * Semidirect-product contraction k = g0 x| g1 of a Z2-labeled algebra: brackets
 * between two One-part vectors become zero, all others are kept. The VarSpace
 * is shared with the input, so polynomials transfer verbatim.
 */
LieAlgebra contract(const LieAlgebra& g);

// The 3-dimensional Heisenberg algebra <a, b, h> with [a, b] = h.
LieAlgebra heisenberg();
// Abelian algebra of dimension d with basis a1..ad.
LieAlgebra abelian(int d);

// Generic element of the matrix model: sum_i x_i * (basis matrix i).
PolyMatrix generic_matrix(const LieAlgebra& L);

enum class RepKind { Adjoint, Coadjoint };

/*
 * Derivation of the polynomial ring induced by basis element e_i acting on
 * functions on the dual (coadjoint: D_i(x_j) = sum_k c_{ij}^k x_k) or on the
 * algebra itself (adjoint: D_i(x_k) = sum_j c_{ij}^k x_j). A polynomial is
 * invariant iff every basis derivation annihilates it; the overall sign
 * convention does not affect that kernel.
 */
Poly coadjoint_derivation(const LieAlgebra& L, int i, const Poly& p);
Poly adjoint_derivation(const LieAlgebra& L, int i, const Poly& p);

struct InvarianceReport {
    bool invariant = false;
    int direction = -1; // basis index of the first failing derivation, or -1
    Poly defect;        // that derivation applied to p (zero when invariant)
};

// All-directions invariance test with witness; shares the partial derivatives
// of p across the n derivations.
InvarianceReport invariance_defect(const LieAlgebra& L, const Poly& p, RepKind rep);
bool is_invariant(const LieAlgebra& L, const Poly& p, RepKind rep);

struct JacobiViolation {
    int i = 0, j = 0, k = 0;
    std::vector<Rat> defect; // coordinates of [[i,j],k] + [[j,k],i] + [[k,i],j]
};

std::optional<JacobiViolation> find_jacobi_violation(const LieAlgebra& L);
bool check_jacobi(const LieAlgebra& L);

// Skew matrix of the linear Poisson bracket: entry (i,j) = sum_k c_{ij}^k x_k.
PolyMatrix poisson_matrix(const LieAlgebra& L);

/*
 * dim - max rank of the Poisson matrix over `trials` random integer points
 * (entries in [-10^4, 10^4]): an upper bound for the index of L that is exact
 * with overwhelming probability.
 */
int index_estimate(const LieAlgebra& L, int trials, std::uint64_t seed);

// Dimension of the coadjoint stabilizer at a point: dim - rank Pi(point).
int stabilizer_dim_at(const LieAlgebra& L, const std::vector<Rat>& point);

/*
 * Pointwise check of the stabilizer-dimension formula for a semidirect
 * contraction k = g0 x| g1 at eta = (alpha, xi):
 *   dim k_eta = codim of the G0-orbit of xi in g1* + dim of the stabilizer of
 *               alpha-bar inside g0_xi,
 * with the right side computed from the action matrix Phi (rows g0, columns
 * g1), its left nullspace, and the alpha-bracket form B on that nullspace.
 * Throws if L still has nonzero brackets between One-part vectors.
 */
struct DimStabCheck {
    int lhs = 0;         // dim k - rank Pi(eta)
    int rhs = 0;         // orbit_codim + (stab0_dim - rank_b)
    int orbit_codim = 0; // dim g1 - rank Phi
    int stab0_dim = 0;   // dim of the stabilizer of xi in g0
    int rank_b = 0;
    bool ok = false;
};

DimStabCheck dim_stab_formula_check(const LieAlgebra& L, const std::vector<Rat>& eta);

// One line "i j k c" per nonzero structure constant, 0-based, keys ascending.
std::vector<std::string> structure_constant_lines(const LieAlgebra& L);

} // namespace z2c

#endif // Z2C_LIEALG_HPP

#ifndef Z2C_POLYMATRIX_HPP
#define Z2C_POLYMATRIX_HPP

#include <z2c/poly.hpp>

#include <vector>

namespace z2c {

class RatMatrix;

/*
 * Dense matrix of polynomials over a shared VarSpace. Small orders only (the
 * generic matrices of the algebras handled here are at most 10x10), so the
 * representation is a plain row-major vector of Poly.
 */
class PolyMatrix {
public:
    PolyMatrix() = default;
    PolyMatrix(VarSpacePtr s, int rows, int cols);
    static PolyMatrix identity(VarSpacePtr s, int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const VarSpacePtr& space() const { return space_; }
    Poly& at(int r, int c) { return data_[index(r, c)]; }
    const Poly& at(int r, int c) const { return data_[index(r, c)]; }

    PolyMatrix transpose() const;
    Poly trace() const;
    PolyMatrix scaled(const Rat& c) const;
    bool is_skew_symmetric() const;
    // Principal submatrix on the given (strictly increasing) index set.
    PolyMatrix submatrix(const std::vector<int>& idx) const;
    RatMatrix evaluate(const std::vector<Rat>& point) const;

    friend PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b);
    friend PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b);
    friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);

private:
    std::size_t index(int r, int c) const;

    VarSpacePtr space_;
    int rows_ = 0, cols_ = 0;
    std::vector<Poly> data_;
};

/* Dense matrix of exact rationals, with exact rank / nullspace computations. */
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(int rows, int cols); // zero-filled
    explicit RatMatrix(std::vector<std::vector<Rat>> rows);
    static RatMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rat& at(int r, int c) { return data_[index(r, c)]; }
    const Rat& at(int r, int c) const { return data_[index(r, c)]; }

    RatMatrix transpose() const;
    Rat trace() const;
    RatMatrix pow(unsigned k) const;
    bool is_skew_symmetric() const;
    RatMatrix submatrix(const std::vector<int>& idx) const;

    friend RatMatrix operator+(const RatMatrix& a, const RatMatrix& b);
    friend RatMatrix operator-(const RatMatrix& a, const RatMatrix& b);
    friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
    friend bool operator==(const RatMatrix& a, const RatMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    int rank() const;
    // Basis of the right nullspace {v : Mv = 0}; each vector has cols() entries.
    std::vector<std::vector<Rat>> nullspace() const;

private:
    std::size_t index(int r, int c) const;

    int rows_ = 0, cols_ = 0;
    std::vector<Rat> data_;
};

/*
 * Pfaffian of a skew-symmetric matrix of even order, by first-row expansion
 * memoized on index subsets. Pf of the empty matrix is 1, and the sign
 * convention is Pf([[0, a], [-a, 0]]) = a. Throws std::invalid_argument for a
 * matrix of odd order or one that is not skew-symmetric.
 */
Poly pfaffian(const PolyMatrix& m);
Rat pfaffian(const RatMatrix& m);

/*
 * Sums of principal k-minors e_1..e_upto (the elementary symmetric functions of
 * the eigenvalues). For a skew-symmetric matrix the odd sums vanish and the even
 * ones are computed as sums of squared sub-Pfaffians; otherwise the
 * Faddeev-LeVerrier recurrence is used. Requires 1 <= upto <= order.
 */
std::vector<Poly> principal_minor_sums(const PolyMatrix& m, int upto);

// Exact quotient num/den in the polynomial ring; throws if the division is not exact.
Poly poly_divide_exact(const Poly& num, const Poly& den);

// Determinant by fraction-free (Bareiss) elimination; exact at every step.
Poly bareiss_determinant(const PolyMatrix& m);

// Jacobian matrix (d p_i / d x_j) evaluated at a rational point, and its rank.
RatMatrix jacobian_at(const std::vector<Poly>& polys, const std::vector<Rat>& point);
int jacobian_rank_at(const std::vector<Poly>& polys, const std::vector<Rat>& point);

// Determinant of a rational matrix, by exact Gaussian elimination.
Rat determinant(const RatMatrix& m);

// True iff v lies in the span of the given vectors (all of equal length).
bool in_span(const std::vector<std::vector<Rat>>& vectors, const std::vector<Rat>& v);

} // namespace z2c

#endif // Z2C_POLYMATRIX_HPP

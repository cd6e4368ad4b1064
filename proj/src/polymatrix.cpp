#include <z2c/polymatrix.hpp>

#include <bit>
#include <cstdint>
#include <map>
#include <stdexcept>

namespace z2c {

// ---------------------------------------------------------------- PolyMatrix

PolyMatrix::PolyMatrix(VarSpacePtr s, int rows, int cols)
    : space_(std::move(s)), rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("PolyMatrix: negative dimension");
    data_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols),
                 Poly::zero(space_));
}

std::size_t PolyMatrix::index(int r, int c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
        throw std::out_of_range("PolyMatrix: index out of range");
    return static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(c);
}

PolyMatrix PolyMatrix::identity(VarSpacePtr s, int n) {
    PolyMatrix m(std::move(s), n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Poly::constant(m.space_, Rat(1));
    return m;
}

PolyMatrix PolyMatrix::transpose() const {
    PolyMatrix t(space_, cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
}

Poly PolyMatrix::trace() const {
    if (rows_ != cols_) throw std::invalid_argument("PolyMatrix::trace: matrix not square");
    Poly acc = Poly::zero(space_);
    for (int i = 0; i < rows_; ++i) acc += at(i, i);
    return acc;
}

PolyMatrix PolyMatrix::scaled(const Rat& c) const {
    PolyMatrix m(space_, rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] = data_[i].scaled(c);
    return m;
}

bool PolyMatrix::is_skew_symmetric() const {
    if (rows_ != cols_) return false;
    for (int r = 0; r < rows_; ++r) {
        if (!at(r, r).is_zero()) return false;
        for (int c = r + 1; c < cols_; ++c)
            if (at(r, c) != -at(c, r)) return false;
    }
    return true;
}

PolyMatrix PolyMatrix::submatrix(const std::vector<int>& idx) const {
    PolyMatrix m(space_, static_cast<int>(idx.size()), static_cast<int>(idx.size()));
    for (std::size_t r = 0; r < idx.size(); ++r)
        for (std::size_t c = 0; c < idx.size(); ++c)
            m.at(static_cast<int>(r), static_cast<int>(c)) = at(idx[r], idx[c]);
    return m;
}

RatMatrix PolyMatrix::evaluate(const std::vector<Rat>& point) const {
    RatMatrix m(rows_, cols_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) m.at(r, c) = at(r, c).evaluate(point);
    return m;
}

PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw std::invalid_argument("PolyMatrix::operator+: shape mismatch");
    PolyMatrix m(a.space_, a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.data_.size(); ++i) m.data_[i] = a.data_[i] + b.data_[i];
    return m;
}

PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw std::invalid_argument("PolyMatrix::operator-: shape mismatch");
    PolyMatrix m(a.space_, a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.data_.size(); ++i) m.data_[i] = a.data_[i] - b.data_[i];
    return m;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("PolyMatrix::operator*: shape mismatch");
    PolyMatrix m(a.space_, a.rows_, b.cols_);
    for (int r = 0; r < a.rows_; ++r)
        for (int k = 0; k < a.cols_; ++k) {
            const Poly& ark = a.at(r, k);
            if (ark.is_zero()) continue;
            for (int c = 0; c < b.cols_; ++c) {
                const Poly& bkc = b.at(k, c);
                if (bkc.is_zero()) continue;
                m.at(r, c) += ark * bkc;
            }
        }
    return m;
}

// ----------------------------------------------------------------- RatMatrix

RatMatrix::RatMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("RatMatrix: negative dimension");
    data_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), Rat(0));
}

RatMatrix::RatMatrix(std::vector<std::vector<Rat>> rows) {
    rows_ = static_cast<int>(rows.size());
    cols_ = rows.empty() ? 0 : static_cast<int>(rows.front().size());
    data_.reserve(static_cast<std::size_t>(rows_) * static_cast<std::size_t>(cols_));
    for (auto& r : rows) {
        if (static_cast<int>(r.size()) != cols_)
            throw std::invalid_argument("RatMatrix: ragged rows");
        for (auto& x : r) data_.push_back(std::move(x));
    }
}

std::size_t RatMatrix::index(int r, int c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
        throw std::out_of_range("RatMatrix: index out of range");
    return static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(c);
}

RatMatrix RatMatrix::identity(int n) {
    RatMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Rat(1);
    return m;
}

RatMatrix RatMatrix::transpose() const {
    RatMatrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
}

Rat RatMatrix::trace() const {
    if (rows_ != cols_) throw std::invalid_argument("RatMatrix::trace: matrix not square");
    Rat acc(0);
    for (int i = 0; i < rows_; ++i) acc += at(i, i);
    return acc;
}

RatMatrix RatMatrix::pow(unsigned k) const {
    if (rows_ != cols_) throw std::invalid_argument("RatMatrix::pow: matrix not square");
    RatMatrix result = identity(rows_);
    RatMatrix base = *this;
    while (k > 0) {
        if (k & 1u) result = result * base;
        k >>= 1u;
        if (k > 0) base = base * base;
    }
    return result;
}

bool RatMatrix::is_skew_symmetric() const {
    if (rows_ != cols_) return false;
    for (int r = 0; r < rows_; ++r) {
        if (!at(r, r).is_zero()) return false;
        for (int c = r + 1; c < cols_; ++c)
            if (at(r, c) != -at(c, r)) return false;
    }
    return true;
}

RatMatrix RatMatrix::submatrix(const std::vector<int>& idx) const {
    RatMatrix m(static_cast<int>(idx.size()), static_cast<int>(idx.size()));
    for (std::size_t r = 0; r < idx.size(); ++r)
        for (std::size_t c = 0; c < idx.size(); ++c)
            m.at(static_cast<int>(r), static_cast<int>(c)) = at(idx[r], idx[c]);
    return m;
}

RatMatrix operator+(const RatMatrix& a, const RatMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw std::invalid_argument("RatMatrix::operator+: shape mismatch");
    RatMatrix m(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.data_.size(); ++i) m.data_[i] = a.data_[i] + b.data_[i];
    return m;
}

RatMatrix operator-(const RatMatrix& a, const RatMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw std::invalid_argument("RatMatrix::operator-: shape mismatch");
    RatMatrix m(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.data_.size(); ++i) m.data_[i] = a.data_[i] - b.data_[i];
    return m;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("RatMatrix::operator*: shape mismatch");
    RatMatrix m(a.rows_, b.cols_);
    for (int r = 0; r < a.rows_; ++r)
        for (int k = 0; k < a.cols_; ++k) {
            const Rat& ark = a.at(r, k);
            if (ark.is_zero()) continue;
            for (int c = 0; c < b.cols_; ++c) m.at(r, c) += ark * b.at(k, c);
        }
    return m;
}

namespace {

/*
 * Reduced row echelon form in place; returns the pivot columns in order.
 * Exact over Rat, partial pivoting on the first nonzero entry.
 */
std::vector<int> rref(std::vector<std::vector<Rat>>& a) {
    std::vector<int> pivots;
    if (a.empty()) return pivots;
    const int nrows = static_cast<int>(a.size());
    const int ncols = static_cast<int>(a.front().size());
    int row = 0;
    for (int col = 0; col < ncols && row < nrows; ++col) {
        int pr = -1;
        for (int r = row; r < nrows; ++r)
            if (!a[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)].is_zero()) {
                pr = r;
                break;
            }
        if (pr < 0) continue;
        std::swap(a[static_cast<std::size_t>(row)], a[static_cast<std::size_t>(pr)]);
        Rat inv = Rat(1) / a[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)];
        for (int c = col; c < ncols; ++c)
            a[static_cast<std::size_t>(row)][static_cast<std::size_t>(c)] *= inv;
        for (int r = 0; r < nrows; ++r) {
            if (r == row) continue;
            Rat f = a[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)];
            if (f.is_zero()) continue;
            for (int c = col; c < ncols; ++c)
                a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] -=
                    f * a[static_cast<std::size_t>(row)][static_cast<std::size_t>(c)];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::vector<std::vector<Rat>> to_rows(const RatMatrix& m) {
    std::vector<std::vector<Rat>> rows(static_cast<std::size_t>(m.rows()));
    for (int r = 0; r < m.rows(); ++r) {
        rows[static_cast<std::size_t>(r)].reserve(static_cast<std::size_t>(m.cols()));
        for (int c = 0; c < m.cols(); ++c) rows[static_cast<std::size_t>(r)].push_back(m.at(r, c));
    }
    return rows;
}

} // namespace

int RatMatrix::rank() const {
    auto rows = to_rows(*this);
    return static_cast<int>(rref(rows).size());
}

std::vector<std::vector<Rat>> RatMatrix::nullspace() const {
    auto rows = to_rows(*this);
    std::vector<int> pivots = rref(rows);
    std::vector<bool> is_pivot(static_cast<std::size_t>(cols_), false);
    for (int p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;

    std::vector<std::vector<Rat>> basis;
    for (int free = 0; free < cols_; ++free) {
        if (is_pivot[static_cast<std::size_t>(free)]) continue;
        std::vector<Rat> v(static_cast<std::size_t>(cols_), Rat(0));
        v[static_cast<std::size_t>(free)] = Rat(1);
        for (std::size_t pr = 0; pr < pivots.size(); ++pr) {
            // Row pr reads x_{pivot[pr]} + sum over non-pivot columns = 0.
            v[static_cast<std::size_t>(pivots[pr])] = -rows[pr][static_cast<std::size_t>(free)];
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

bool in_span(const std::vector<std::vector<Rat>>& vectors, const std::vector<Rat>& v) {
    std::vector<std::vector<Rat>> rows = vectors;
    int base_rank = RatMatrix(rows).rank();
    rows.push_back(v);
    return RatMatrix(rows).rank() == base_rank;
}

// ------------------------------------------------------------------ Pfaffian

namespace {

/*
 * Pfaffian on index subsets (bitmask) of a fixed skew matrix, memoized. The
 * expansion runs along the lowest index of the subset:
 *   Pf(S) = sum_t (-1)^{t+1} M[i0][i_t] Pf(S \ {i0, i_t}),
 * where i0 < i_1 < ... enumerate S. Shared between the Poly and Rat versions.
 */
template <class T, class EntryFn>
class PfaffianTable {
public:
    PfaffianTable(int n, EntryFn entry, T zero, T one)
        : n_(n), entry_(entry), zero_(std::move(zero)), one_(std::move(one)) {}

    const T& pf(std::uint64_t mask) {
        auto it = memo_.find(mask);
        if (it != memo_.end()) return it->second;
        T value = zero_;
        if (mask == 0) {
            value = one_;
        } else {
            int i0 = std::countr_zero(mask);
            std::uint64_t rest = mask & (mask - 1);
            int t = 0;
            for (int j = i0 + 1; j < n_; ++j) {
                if (!((rest >> j) & 1u)) continue;
                ++t;
                T term = entry_(i0, j) * pf(rest ^ (std::uint64_t{1} << j));
                if (t % 2 == 1)
                    value = value + term;
                else
                    value = value - term;
            }
        }
        return memo_.emplace(mask, std::move(value)).first->second;
    }

private:
    int n_;
    EntryFn entry_;
    T zero_, one_;
    std::map<std::uint64_t, T> memo_;
};

template <class Matrix, class T>
T pfaffian_checked(const Matrix& m, T zero, T one) {
    if (m.rows() != m.cols()) throw std::invalid_argument("pfaffian: matrix not square");
    if (m.rows() % 2 != 0) throw std::invalid_argument("pfaffian: matrix order is odd");
    if (m.rows() > 62) throw std::invalid_argument("pfaffian: order too large");
    if (!m.is_skew_symmetric()) throw std::invalid_argument("pfaffian: matrix not skew-symmetric");
    auto entry = [&m](int r, int c) -> const T& { return m.at(r, c); };
    PfaffianTable<T, decltype(entry)> table(m.rows(), entry, std::move(zero), std::move(one));
    std::uint64_t full = (m.rows() == 0) ? 0 : ((std::uint64_t{1} << m.rows()) - 1);
    return table.pf(full);
}

} // namespace

Poly pfaffian(const PolyMatrix& m) {
    return pfaffian_checked(m, Poly::zero(m.space()), Poly::constant(m.space(), Rat(1)));
}

Rat pfaffian(const RatMatrix& m) { return pfaffian_checked(m, Rat(0), Rat(1)); }

// ----------------------------------------------------- principal minor sums

std::vector<Poly> principal_minor_sums(const PolyMatrix& m, int upto) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("principal_minor_sums: matrix not square");
    const int n = m.rows();
    if (upto < 1 || upto > n)
        throw std::invalid_argument("principal_minor_sums: k out of range");

    std::vector<Poly> e;
    e.reserve(static_cast<std::size_t>(upto));

    if (m.is_skew_symmetric() && n <= 20) {
        // Odd sums vanish; even sums are sums of squared sub-Pfaffians over all
        // principal index subsets of that size. Far cheaper than the general
        // recurrence when the entries are symbolic.
        auto entry = [&m](int r, int c) -> const Poly& { return m.at(r, c); };
        PfaffianTable<Poly, decltype(entry)> table(n, entry, Poly::zero(m.space()),
                                                   Poly::constant(m.space(), Rat(1)));
        for (int k = 1; k <= upto; ++k) {
            if (k % 2 == 1) {
                e.push_back(Poly::zero(m.space()));
                continue;
            }
            Poly acc = Poly::zero(m.space());
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
                if (std::popcount(mask) != k) continue;
                const Poly& p = table.pf(mask);
                acc += p * p;
            }
            e.push_back(acc);
        }
        return e;
    }

    // Faddeev-LeVerrier: M_1 = M, c_1 = tr M_1, M_k = M (M_{k-1} - c_{k-1} I),
    // c_k = tr(M_k)/k, and e_k = (-1)^{k+1} c_k.
    PolyMatrix mk = m;
    Poly ck = mk.trace();
    e.push_back(ck);
    for (int k = 2; k <= upto; ++k) {
        PolyMatrix shifted = mk;
        for (int i = 0; i < n; ++i) shifted.at(i, i) -= ck;
        mk = m * shifted;
        ck = mk.trace().scaled(Rat(1, k));
        e.push_back(k % 2 == 1 ? ck : -ck);
    }
    return e;
}

// -------------------------------------------------------- exact division etc.

Poly poly_divide_exact(const Poly& num, const Poly& den) {
    if (den.is_zero()) throw std::domain_error("poly_divide_exact: division by zero");
    Poly rem = num;
    Poly quot = Poly::zero(num.space());
    require_space(num.space(), den.space(), "poly_divide_exact");
    const auto& dlead = *den.terms().begin();
    const int nvars = num.space()->size();
    while (!rem.is_zero()) {
        const auto& rlead = *rem.terms().begin();
        // Leading-term division: monomial must divide componentwise.
        Monomial q = rlead.first;
        bool divides = true;
        for (int i = 0; i < nvars; ++i) {
            if (q.exp[static_cast<std::size_t>(i)] < dlead.first.exp[static_cast<std::size_t>(i)]) {
                divides = false;
                break;
            }
            q.exp[static_cast<std::size_t>(i)] = static_cast<std::uint16_t>(
                q.exp[static_cast<std::size_t>(i)] - dlead.first.exp[static_cast<std::size_t>(i)]);
        }
        if (!divides) throw std::domain_error("poly_divide_exact: division is not exact");
        q.tot = rlead.first.tot - dlead.first.tot;
        Rat c = rlead.second / dlead.second;
        Poly qterm = Poly::zero(num.space());
        qterm.add_term(q, c);
        quot += qterm;
        rem -= qterm * den;
    }
    return quot;
}

Poly bareiss_determinant(const PolyMatrix& m) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("bareiss_determinant: matrix not square");
    const int n = m.rows();
    if (n == 0) return Poly::constant(m.space(), Rat(1));
    PolyMatrix b = m;
    int sign = 1;
    Poly prev = Poly::constant(m.space(), Rat(1));
    for (int k = 0; k < n - 1; ++k) {
        if (b.at(k, k).is_zero()) {
            int swap_row = -1;
            for (int r = k + 1; r < n; ++r)
                if (!b.at(r, k).is_zero()) {
                    swap_row = r;
                    break;
                }
            if (swap_row < 0) return Poly::zero(m.space());
            for (int c = 0; c < n; ++c) std::swap(b.at(k, c), b.at(swap_row, c));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                Poly num = b.at(i, j) * b.at(k, k) - b.at(i, k) * b.at(k, j);
                b.at(i, j) = poly_divide_exact(num, prev);
            }
            b.at(i, k) = Poly::zero(m.space());
        }
        prev = b.at(k, k);
    }
    Poly det = b.at(n - 1, n - 1);
    return sign < 0 ? -det : det;
}

RatMatrix jacobian_at(const std::vector<Poly>& polys, const std::vector<Rat>& point) {
    if (polys.empty()) return RatMatrix(0, static_cast<int>(point.size()));
    const auto& space = polys.front().space();
    for (const auto& p : polys) require_space(p.space(), space, "jacobian_rank_at");
    const int nvars = space->size();
    if (static_cast<int>(point.size()) != nvars)
        throw std::invalid_argument("jacobian_rank_at: point dimension mismatch");

    // Shared per-variable power tables over all polynomials.
    std::vector<int> maxe(static_cast<std::size_t>(nvars), 0);
    for (const auto& p : polys)
        for (const auto& [mon, c] : p.terms()) {
            (void)c;
            for (int i = 0; i < nvars; ++i)
                maxe[static_cast<std::size_t>(i)] =
                    std::max(maxe[static_cast<std::size_t>(i)], static_cast<int>(mon.exp[static_cast<std::size_t>(i)]));
        }
    std::vector<std::vector<Rat>> pows(static_cast<std::size_t>(nvars));
    for (int i = 0; i < nvars; ++i) {
        auto& tab = pows[static_cast<std::size_t>(i)];
        tab.resize(static_cast<std::size_t>(maxe[static_cast<std::size_t>(i)]) + 1, Rat(1));
        for (int e = 1; e <= maxe[static_cast<std::size_t>(i)]; ++e)
            tab[static_cast<std::size_t>(e)] = tab[static_cast<std::size_t>(e - 1)] * point[static_cast<std::size_t>(i)];
    }

    RatMatrix jac(static_cast<int>(polys.size()), nvars);
    for (std::size_t r = 0; r < polys.size(); ++r) {
        for (const auto& [mon, c] : polys[r].terms()) {
            for (int j = 0; j < nvars; ++j) {
                int ej = mon.exp[static_cast<std::size_t>(j)];
                if (ej == 0) continue;
                // d/dx_j of c * x^mon, evaluated via the power tables.
                Rat t = c * Rat(ej);
                for (int i = 0; i < nvars; ++i) {
                    int e = mon.exp[static_cast<std::size_t>(i)];
                    if (i == j) --e;
                    if (e > 0) t *= pows[static_cast<std::size_t>(i)][static_cast<std::size_t>(e)];
                }
                jac.at(static_cast<int>(r), j) += t;
            }
        }
    }
    return jac;
}

int jacobian_rank_at(const std::vector<Poly>& polys, const std::vector<Rat>& point) {
    return jacobian_at(polys, point).rank();
}

Rat determinant(const RatMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix not square");
    const int n = m.rows();
    RatMatrix a = m;
    Rat det(1);
    for (int k = 0; k < n; ++k) {
        int pr = -1;
        for (int r = k; r < n; ++r)
            if (!a.at(r, k).is_zero()) {
                pr = r;
                break;
            }
        if (pr < 0) return Rat(0);
        if (pr != k) {
            for (int c = 0; c < n; ++c) std::swap(a.at(k, c), a.at(pr, c));
            det = -det;
        }
        det *= a.at(k, k);
        Rat inv = Rat(1) / a.at(k, k);
        for (int r = k + 1; r < n; ++r) {
            Rat f = a.at(r, k) * inv;
            if (f.is_zero()) continue;
            for (int c = k; c < n; ++c) a.at(r, c) -= f * a.at(k, c);
        }
    }
    return det;
}

} // namespace z2c

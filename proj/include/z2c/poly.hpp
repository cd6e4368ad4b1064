#ifndef Z2C_POLY_HPP
#define Z2C_POLY_HPP

#include <z2c/rational.hpp>
#include <z2c/varspace.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace z2c {

/*
 * Monomial: dense exponent vector over a VarSpace, with the total degree
 * cached. The exponent vector length always equals the space size.
 */
struct Monomial {
    std::vector<std::uint16_t> exp;
    int tot = 0;

    static Monomial unit(int nvars) {
        Monomial m;
        m.exp.assign(static_cast<std::size_t>(nvars), 0);
        return m;
    }
    static Monomial of(std::vector<std::uint16_t> e) {
        Monomial m;
        m.exp = std::move(e);
        for (auto x : m.exp) m.tot += x;
        return m;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.exp == b.exp; }
};

// Graded lexicographic order, *descending*, so that map iteration yields the
// canonical display order (leading term first): larger total degree first, ties
// broken lexicographically on the exponent vector in variable order.
struct GradedLexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const {
        if (a.tot != b.tot) return a.tot > b.tot;
        return a.exp > b.exp;
    }
};

/*
 * Sparse multivariate polynomial with exact rational coefficients over a fixed
 * VarSpace. Invariants: no explicit zero coefficients are stored; term order is
 * the canonical descending graded-lex order of the space.
 */
class Poly {
public:
    using TermMap = std::map<Monomial, Rat, GradedLexGreater>;

    Poly() = default; // zero polynomial over a null space; usable only after assignment

    static Poly zero(VarSpacePtr s);
    static Poly constant(VarSpacePtr s, const Rat& c);
    static Poly variable(VarSpacePtr s, int var);
    static Poly variable(VarSpacePtr s, const std::string& name);
    // Build from (exponent vector, coefficient) pairs; merges duplicates.
    static Poly from_terms(VarSpacePtr s,
                           const std::vector<std::pair<std::vector<std::uint16_t>, Rat>>& terms);

    const VarSpacePtr& space() const { return space_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int term_count() const { return static_cast<int>(terms_.size()); }

    // Total degree; empty for the zero polynomial (its degree is undefined).
    std::optional<int> degree() const;
    bool is_homogeneous() const;

    BiDegree monomial_bidegree(const Monomial& m) const;
    // Bi-degree if bi-homogeneous (constant 0 counts as bi-homogeneous of (0,0)).
    std::optional<BiDegree> bidegree() const;
    // Split into bi-homogeneous components, listed by ascending Zero-degree then
    // ascending One-degree. The sum of the components is the polynomial.
    std::vector<std::pair<BiDegree, Poly>> bihomogeneous_components() const;
    // Component of maximal One-part degree ("top") / minimal One-part degree
    // ("bottom"). Zero maps to zero.
    Poly top_component() const;
    Poly bottom_component() const;
    int max_one_degree() const; // -1 for zero polynomial

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    Poly scaled(const Rat& c) const;
    Poly pow(unsigned k) const; // binary powering
    friend bool operator==(const Poly& a, const Poly& b) {
        return a.space_ == b.space_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly derivative(int var) const;
    Rat evaluate(const std::vector<Rat>& point) const;
    // Substitute images for variables (indices into this space). Images must all
    // live in one target space; unassigned variables must exist there by name.
    Poly substitute(const std::map<int, Poly>& assignment) const;

    // Canonical text, e.g. "3/2*x0^2*y1 - y1^3"; "0" for zero.
    std::string to_text() const;

    // Internal-ish: add c * m (merging, dropping zeros).
    void add_term(const Monomial& m, const Rat& c);

private:
    void require_same_space(const Poly& o, const char* op) const;

    VarSpacePtr space_;
    TermMap terms_;
};

// Throws std::invalid_argument when polynomials from different VarSpaces meet.
void require_space(const VarSpacePtr& a, const VarSpacePtr& b, const char* op);

} // namespace z2c

#endif // Z2C_POLY_HPP

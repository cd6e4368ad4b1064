#ifndef Z2C_RATIONAL_HPP
#define Z2C_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>

namespace z2c {

/*
 * Exact rational scalar.
 *
 * Thin value wrapper around GMP's mpq_class that enforces the canonical form
 * everywhere: lowest terms, denominator > 0, zero represented as 0/1.
 * mpq_class arithmetic already canonicalizes results of +,-,*,/; the wrapper
 * exists so that *construction* is always canonical too (mpq_class{3,6} is not)
 * and so printing follows one fixed "num/den" convention.
 */
class Rat {
public:
    Rat() : v_(0) {}
    Rat(long n) : v_(n) {}
    Rat(int n) : v_(static_cast<long>(n)) {}
    Rat(long num, long den) : v_(num, den) {
        if (den == 0) throw_division_by_zero();
        v_.canonicalize();
    }
    explicit Rat(const mpq_class& q) : v_(q) { v_.canonicalize(); }
    explicit Rat(const mpz_class& z) : v_(z) {}

    static Rat from_mpz(const mpz_class& num, const mpz_class& den) {
        if (den == 0) throw_division_by_zero();
        Rat r;
        r.v_ = mpq_class(num, den);
        r.v_.canonicalize();
        return r;
    }

    bool is_zero() const { return v_ == 0; }
    int sign() const { return sgn(v_); }

    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }

    Rat operator-() const {
        Rat r;
        r.v_ = -v_;
        return r;
    }
    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o) {
        if (o.is_zero()) throw_division_by_zero();
        v_ /= o.v_;
        return *this;
    }

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

    Rat abs() const { return sign() < 0 ? -*this : *this; }

    // Canonical text: "num" when the denominator is 1, else "num/den".
    std::string to_text() const {
        if (v_.get_den() == 1) return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

    const mpq_class& raw() const { return v_; }

private:
    [[noreturn]] static void throw_division_by_zero();
    mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

} // namespace z2c

#endif // Z2C_RATIONAL_HPP

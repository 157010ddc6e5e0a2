#ifndef RGC_RATIONAL_HPP
#define RGC_RATIONAL_HPP

#include <gmpxx.h>
#include <string>

#include "rgc/errors.hpp"

namespace rgc {

// Exact rational scalar. Thin wrapper over GMP's mpq_class so the rest of
// the code has a stable spelling and a canonical string form.
class Rat {
public:
    Rat() : v_(0) {}
    Rat(long n) : v_(n) {}
    Rat(long n, long d) : v_(n, d) { v_.canonicalize(); }
    explicit Rat(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    static Rat parse(const std::string& s) {
        mpq_class q;
        if (q.set_str(s, 10) != 0)
            throw error(errc::syntax, "bad rational: " + s);
        q.canonicalize();
        return Rat(q);
    }

    bool is_zero() const { return sgn(v_) == 0; }
    int sign() const { return sgn(v_); }
    std::string str() const { return v_.get_str(); }
    const mpq_class& raw() const { return v_; }

    Rat operator-() const { return Rat(mpq_class(-v_)); }
    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o) { v_ /= o.v_; return *this; }

    friend Rat operator+(Rat a, const Rat& b) { a += b; return a; }
    friend Rat operator-(Rat a, const Rat& b) { a -= b; return a; }
    friend Rat operator*(Rat a, const Rat& b) { a *= b; return a; }
    friend Rat operator/(Rat a, const Rat& b) { a /= b; return a; }
    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }

    // numerator/denominator as multiprecision integers (for modular reduction)
    const mpz_class num() const { return v_.get_num(); }
    const mpz_class den() const { return v_.get_den(); }

private:
    mpq_class v_;
};

} // namespace rgc

#endif

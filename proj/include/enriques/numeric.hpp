#ifndef ENRIQUES_NUMERIC_HPP
#define ENRIQUES_NUMERIC_HPP

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace enriques {

using Int = mpz_class;
using Rat = mpq_class;

// Structured error with a stable machine-readable code ("NotIsometry",
// "ParityViolation", ...) next to the human-readable message.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& what)
        : std::runtime_error(code + ": " + what), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

inline Rat rat_of(const Int& z) { return Rat(z); }

// sign of a rational as -1/0/+1
inline int sgn(const Rat& q) { return mpq_sgn(q.get_mpq_t()); }
inline int sgn(const Int& z) { return mpz_sgn(z.get_mpz_t()); }

std::optional<Int> int_sqrt_exact(const Int& n);
std::optional<Rat> rat_sqrt_exact(const Rat& q);

// floor(sqrt(q)) for q >= 0
Int rat_sqrt_floor(const Rat& q);

std::string rat_to_string(const Rat& q);
Rat rat_from_string(const std::string& s);

// Gaussian rational a + b*i with exact components.
struct GQ {
    Rat re, im;

    GQ() = default;
    GQ(Rat r) : re(std::move(r)) {}
    GQ(long r) : re(r) {}
    GQ(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}
    GQ(long r, long i) : re(r), im(i) {}

    bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
    bool is_real() const { return sgn(im) == 0; }

    GQ conj() const { return GQ(re, -im); }
    Rat norm() const { return re * re + im * im; }

    friend GQ operator+(const GQ& a, const GQ& b) { return GQ(a.re + b.re, a.im + b.im); }
    friend GQ operator-(const GQ& a, const GQ& b) { return GQ(a.re - b.re, a.im - b.im); }
    friend GQ operator-(const GQ& a) { return GQ(-a.re, -a.im); }
    friend GQ operator*(const GQ& a, const GQ& b) {
        return GQ(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
    }
    friend GQ operator/(const GQ& a, const GQ& b) {
        Rat n = b.norm();
        if (sgn(n) == 0) throw Error("DivisionByZero", "Gaussian rational division by zero");
        GQ num = a * b.conj();
        return GQ(num.re / n, num.im / n);
    }
    GQ& operator+=(const GQ& o) { re += o.re; im += o.im; return *this; }
    GQ& operator-=(const GQ& o) { re -= o.re; im -= o.im; return *this; }
    GQ& operator*=(const GQ& o) { *this = *this * o; return *this; }

    friend bool operator==(const GQ& a, const GQ& b) { return a.re == b.re && a.im == b.im; }
    friend bool operator!=(const GQ& a, const GQ& b) { return !(a == b); }
};

// square root in Q(i), when it exists
std::optional<GQ> gq_sqrt_exact(const GQ& z);

std::string gq_to_string(const GQ& z);

}  // namespace enriques

#endif

#include "enriques/numeric.hpp"

namespace enriques {

std::optional<Int> int_sqrt_exact(const Int& n) {
    if (sgn(n) < 0) return std::nullopt;
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    if (r * r == n) return r;
    return std::nullopt;
}

std::optional<Rat> rat_sqrt_exact(const Rat& q) {
    if (sgn(q) < 0) return std::nullopt;
    auto n = int_sqrt_exact(q.get_num());
    if (!n) return std::nullopt;
    auto d = int_sqrt_exact(q.get_den());
    if (!d) return std::nullopt;
    return Rat(*n, *d);
}

Int rat_sqrt_floor(const Rat& q) {
    if (sgn(q) < 0) throw Error("NegativeSqrt", "rat_sqrt_floor of negative input");
    // floor(sqrt(p/q)) = floor(sqrt(p*q)/q)
    Int pq = q.get_num() * q.get_den();
    Int r;
    mpz_sqrt(r.get_mpz_t(), pq.get_mpz_t());
    Int f;
    mpz_fdiv_q(f.get_mpz_t(), r.get_mpz_t(), q.get_den().get_mpz_t());
    // adjust for the outer floor: f is floor(floor(sqrt(pq))/den) which equals
    // floor(sqrt(p/q)) since den*f <= sqrt(pq) < den*(f+1) is what we need
    while ((f + 1) * (f + 1) * q.get_den() <= q.get_num()) ++f;
    while (f > 0 && f * f * q.get_den() > q.get_num()) --f;
    return f;
}

std::string rat_to_string(const Rat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rat rat_from_string(const std::string& s) {
    Rat q;
    if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
        throw Error("BadRational", "cannot parse rational '" + s + "'");
    q.canonicalize();
    if (sgn(Rat(q.get_den())) == 0)
        throw Error("BadRational", "zero denominator in '" + s + "'");
    return q;
}

std::optional<GQ> gq_sqrt_exact(const GQ& z) {
    // w = u + iv with w^2 = z: u^2 - v^2 = re, 2uv = im, u^2 + v^2 = |z|
    auto mod = rat_sqrt_exact(z.norm());
    if (!mod) return std::nullopt;
    Rat u2 = (z.re + *mod) / 2;
    Rat v2 = (*mod - z.re) / 2;
    auto u = rat_sqrt_exact(u2);
    if (!u) return std::nullopt;
    auto v = rat_sqrt_exact(v2);
    if (!v) return std::nullopt;
    GQ w(*u, sgn(z.im) >= 0 ? *v : Rat(-*v));
    if (w * w == z) return w;
    return std::nullopt;
}

std::string gq_to_string(const GQ& z) {
    if (z.is_real()) return rat_to_string(z.re);
    std::string s = rat_to_string(z.re);
    s += (sgn(z.im) < 0) ? " - " : " + ";
    Rat a = abs(z.im);
    s += rat_to_string(a) + "*i";
    return s;
}

}  // namespace enriques

#include "tensorcone/rational.hpp"

#include <sstream>

namespace tensorcone {

Rat rat_from_string(const std::string& s) {
    mpq_t q;
    mpq_init(q);
    if (mpq_set_str(q, s.c_str(), 10) != 0) {
        mpq_clear(q);
        fail(Errc::invalid_argument, "cannot parse rational '" + s + "'");
    }
    if (mpz_sgn(mpq_denref(q)) == 0) {
        mpq_clear(q);
        fail(Errc::invalid_argument, "zero denominator in '" + s + "'");
    }
    mpq_canonicalize(q);
    Rat r(q);
    mpq_clear(q);
    return r;
}

std::string rat_to_string(const Rat& q) { return q.get_str(); }

long rat_to_long(const Rat& q) {
    require(rat_is_integer(q), Errc::invalid_argument, "expected integer, got " + rat_to_string(q));
    require(q.get_num().fits_slong_p(), Errc::resource_limit, "integer out of range: " + rat_to_string(q));
    return q.get_num().get_si();
}

Int denominator_lcm(const RatVec& v) {
    Int l = 1;
    for (const auto& q : v) {
        Int d = q.get_den();
        Int g;
        mpz_gcd(g.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
        l = l / g * d;
    }
    return l;
}

Rat dot(const RatVec& a, const RatVec& b) {
    require(a.size() == b.size(), Errc::invalid_argument, "dot: dimension mismatch");
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Rat vec_sum(const RatVec& v) {
    Rat s = 0;
    for (const auto& q : v) s += q;
    return s;
}

RatVec vec_add(const RatVec& a, const RatVec& b) {
    require(a.size() == b.size(), Errc::invalid_argument, "vec_add: dimension mismatch");
    RatVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

RatVec vec_sub(const RatVec& a, const RatVec& b) {
    require(a.size() == b.size(), Errc::invalid_argument, "vec_sub: dimension mismatch");
    RatVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

RatVec vec_scale(const Rat& c, const RatVec& v) {
    RatVec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
    return r;
}

std::string vec_to_string(const RatVec& v) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ", ";
        os << rat_to_string(v[i]);
    }
    os << ")";
    return os.str();
}

} // namespace tensorcone

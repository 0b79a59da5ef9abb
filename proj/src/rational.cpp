#include "trimcc/rational.hpp"

#include <ostream>

#include "trimcc/errors.hpp"

namespace trimcc {

Rational::Rational(long num, long den) {
    if (den == 0) throw InputError("rational with zero denominator");
    v_ = mpq_class(static_cast<signed long>(num), static_cast<signed long>(den));
    v_.canonicalize();
}

Rational Rational::parse(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            mpq_class v(mpz_class(s));
            return Rational(v);
        }
        mpz_class num(s.substr(0, slash));
        mpz_class den(s.substr(slash + 1));
        if (sgn(den) == 0) throw InputError("rational with zero denominator: " + s);
        mpq_class v(num, den);
        v.canonicalize();
        return Rational(v);
    } catch (const std::invalid_argument&) {
        throw InputError("cannot parse rational: '" + s + "'");
    }
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw InputError("division by zero rational");
    v_ /= o.v_;
    return *this;
}

Rational Rational::inverse() const {
    if (is_zero()) throw InputError("inverse of zero rational");
    return Rational(mpq_class(1) / v_);
}

Rational Rational::pow(long e) const {
    if (e == 0) return Rational(1L);
    if (is_zero() && e < 0) throw InputError("inverse of zero rational");
    mpq_class base = e > 0 ? v_ : mpq_class(1) / v_;
    unsigned long n = static_cast<unsigned long>(e > 0 ? e : -e);
    mpq_class acc(1);
    while (n) {
        if (n & 1) acc *= base;
        base *= base;
        n >>= 1;
    }
    return Rational(acc);
}

std::string Rational::str() const {
    if (den() == 1) return num().get_str();
    return num().get_str() + "/" + den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

} // namespace trimcc

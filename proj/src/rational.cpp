#include "sgb/rational.hpp"

#include <ostream>

namespace sgb {

Rational Rational::from_string(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            return Rational(mpq_class(mpz_class(s)));
        }
        mpz_class num(s.substr(0, slash));
        mpz_class den(s.substr(slash + 1));
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        mpq_class q(num, den);
        q.canonicalize();
        return Rational(std::move(q));
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("Rational: malformed literal '" + s + "'");
    }
}

std::string Rational::str() const {
    if (denom() == 1) return numer().get_str();
    return numer().get_str() + "/" + denom().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace sgb

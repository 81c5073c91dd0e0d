#include "sympq/rational.hpp"

#include <climits>

#include "sympq/errors.hpp"

namespace sympq {

Rational::Rational(long num, long den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    std::string s;
    for (char c : text)
        if (c != ' ' && c != '\t') s.push_back(c);
    if (s.empty()) throw ParseError("empty rational");
    auto valid_int = [](std::string_view t) {
        std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9') return false;
        return true;
    };
    auto slash = s.find('/');
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (num[0] == '+') num.erase(0, 1);
    if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
        throw ParseError("bad rational '" + std::string(text) + "'");
    mpz_class n(num, 10), d(den, 10);
    if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    return Rational(mpq_class(n, d));
}

long Rational::to_long() const {
    if (!is_integer() || !v_.get_num().fits_slong_p())
        throw DomainError("rational " + to_string() + " is not a machine integer");
    return v_.get_num().get_si();
}

std::string Rational::to_string() const { return v_.get_str(); }

std::size_t Rational::hash() const {
    std::size_t h = mpz_get_ui(v_.get_num_mpz_t());
    h = h * 1000003u ^ mpz_get_ui(v_.get_den_mpz_t());
    return sgn(v_) < 0 ? ~h : h;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw DomainError("division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::inverse() const {
    if (is_zero()) throw DomainError("inverse of zero");
    return Rational(mpq_class(1 / v_));
}

Rational Rational::pow(int e) const {
    if (e < 0) return inverse().pow(-e);
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), v_.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(d.get_mpz_t(), v_.get_den_mpz_t(), static_cast<unsigned long>(e));
    return Rational(mpq_class(n, d));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace sympq

#include "unitdist/rational.hpp"

namespace unitdist {

Rational Rational::parse(std::string_view s) {
    const auto slash = s.find('/');
    std::string num_s, den_s = "1";
    if (slash == std::string_view::npos) {
        num_s = std::string(s);
    } else {
        num_s = std::string(s.substr(0, slash));
        den_s = std::string(s.substr(slash + 1));
    }
    mpz_class num, den;
    if (num_s.empty() || den_s.empty() || mpz_set_str(num.get_mpz_t(), num_s.c_str(), 10) != 0 ||
        mpz_set_str(den.get_mpz_t(), den_s.c_str(), 10) != 0) {
        throw StructuralError("unparseable rational: '" + std::string(s) + "'");
    }
    if (den == 0) throw StructuralError("rational with zero denominator: '" + std::string(s) + "'");
    return Rational(num, den);
}

std::string Rational::decimal(unsigned digits) const {
    mpz_class pow10 = 1;
    for (unsigned i = 0; i < digits; ++i) pow10 *= 10;
    // round(|q| * 10^digits), half away from zero
    mpz_class n = ::abs(num()) * pow10;
    mpz_class scaled = (2 * n + den()) / (2 * den());
    std::string body = scaled.get_str();
    if (body.size() <= digits) body.insert(0, digits + 1 - body.size(), '0');
    std::string out;
    if (sign() < 0 && scaled != 0) out += '-';
    out += body.substr(0, body.size() - digits);
    if (digits > 0) {
        out += '.';
        out += body.substr(body.size() - digits);
    }
    return out;
}

}  // namespace unitdist

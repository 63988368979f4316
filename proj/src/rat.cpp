#include "ybx/rat.hpp"

#include <ostream>

namespace ybx {

Rat Rat::from_string(const std::string& s) {
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            return Rat(mpz_class(s));
        }
        mpz_class n(s.substr(0, slash));
        mpz_class d(s.substr(slash + 1));
        if (d == 0) throw ZeroDenominatorError("Rat: zero denominator in \"" + s + "\"");
        return Rat(n, d);
    } catch (const std::invalid_argument&) {
        throw ParseError("Rat: cannot parse \"" + s + "\"");
    }
}

std::string Rat::str() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

Rat binomial(long n, long k) {
    if (k < 0 || k > n) return Rat(0);
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rat(r);
}

} // namespace ybx

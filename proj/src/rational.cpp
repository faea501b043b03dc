#include "kmw/rational.hpp"

#include "kmw/error.hpp"

namespace kmw {

long rat_to_long(const Rat& q) {
    require(is_integer(q), "Precondition", "rat_to_long on non-integer " + rat_str(q));
    require(q.get_num().fits_slong_p(), "Precondition", "rational too large: " + rat_str(q));
    return q.get_num().get_si();
}

Rat rat_ceil(const Rat& q) {
    mpz_class r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return Rat(r);
}

Rat parse_rat(const std::string& s) {
    if (s.empty()) fail("ParseError", "empty rational");
    const auto slash = s.find('/');
    try {
        Rat q;
        if (q.set_str(s, 10) != 0) fail("ParseError", "bad rational '" + s + "'");
        if (slash != std::string::npos && sgn(Rat(mpz_class(s.substr(slash + 1)))) <= 0)
            fail("ParseError", "bad rational '" + s + "' (non-positive denominator)");
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        fail("ParseError", "bad rational '" + s + "'");
    }
}

std::string rat_str(const Rat& q) {
    if (is_integer(q)) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace kmw

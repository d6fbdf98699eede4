#include "threegap/format.hpp"

#include <cstdio>

#include "threegap/error.hpp"

namespace threegap {

std::string rational_string(const Rational& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string decimal_string(const Rational& r, int digits) {
    if (digits < 0) throw InvalidInputError("negative digit count");
    Int num = r.get_num();
    Int den = r.get_den();
    bool negative = num < 0;
    if (negative) num = -num;

    Int scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));

    // scaled = round(num * 10^digits / den), ties to even
    Int t = num * scale;
    Int q = t / den;
    Int rem = t % den;
    int c = cmp(rem * 2, den);
    if (c > 0 || (c == 0 && mpz_odd_p(q.get_mpz_t()))) q += 1;

    Int ipart = q / scale;
    Int fpart = q % scale;
    std::string out = negative && (ipart != 0 || fpart != 0) ? "-" : "";
    out += ipart.get_str();
    if (digits > 0) {
        std::string frac = fpart.get_str();
        out += "." + std::string(static_cast<size_t>(digits) - frac.size(), '0') + frac;
    }
    return out;
}

std::string decimal_string(double x, int digits) {
    if (digits < 0) throw InvalidInputError("negative digit count");
    char buf[512];
    std::snprintf(buf, sizeof(buf), "%.*f", digits, x);
    return std::string(buf);
}

}  // namespace threegap

#include "threegap/numeric.hpp"

#include "threegap/error.hpp"

namespace threegap {

Rational make_rational(const Int& num, const Int& den) {
    if (den == 0) throw InvalidInputError("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Int isqrt(const Int& n) {
    if (n < 0) throw InvalidInputError("isqrt of negative value");
    Int root;
    mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
    return root;
}

bool is_perfect_square(const Int& n) {
    if (n < 0) return false;
    return mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

Int floor_div(const Int& a, const Int& b) {
    if (b == 0) throw InvalidInputError("division by zero");
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

Int ceil_div(const Int& a, const Int& b) {
    if (b == 0) throw InvalidInputError("division by zero");
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

int cmp_sqrt(const Int& d, const Int& x) {
    if (x < 0) return 1;
    // both sides nonnegative: compare d with x^2
    Int xx = x * x;
    return d > xx ? 1 : -1;
}

Int floor_surd(const Int& p, const Int& d, const Int& q) {
    if (q == 0) throw InvalidInputError("surd with zero denominator");
    if (q < 0) {
        // (p + sqrt(d))/q = -(p + sqrt(d))/|q|; the value is irrational, so
        // floor(-x) = -floor(x) - 1.
        return -floor_surd(p, d, -q) - 1;
    }
    // s = floor(sqrt(d)) gives the candidate m = floor((p + s)/q); the true
    // floor is m or m + 1, decided by comparing sqrt(d) against the next
    // multiple of q.
    Int s = isqrt(d);
    Int m = floor_div(p + s, q);
    if (cmp_sqrt(d, (m + 1) * q - p) > 0) m += 1;
    return m;
}

}  // namespace threegap

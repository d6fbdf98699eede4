#include "threegap/quadratic.hpp"

#include <map>
#include <stdexcept>
#include <utility>

#include "threegap/error.hpp"

namespace threegap {

namespace {

// sign of sqrt(d) - u/v for v > 0; never 0 when d is not a perfect square
int cmp_sqrt_rational(const Int& d, const Int& u, const Int& v) {
    if (u <= 0) return d > 0 || u < 0 ? 1 : 0;
    Int lhs = d * v * v;
    Int rhs = u * u;
    if (lhs > rhs) return 1;
    if (lhs < rhs) return -1;
    return 0;
}

Mat2 digit_matrix(const Int& a) { return Mat2{a, 1, 1, 0}; }

}  // namespace

QuadraticSurd QuadraticSurd::make(const Int& p, const Int& d, const Int& q) {
    if (q == 0) throw InvalidInputError("surd with zero denominator");
    if (d < 0) throw InvalidInputError("surd with negative radicand");
    QuadraticSurd s{p, d, q};
    if ((d - p * p) % q != 0) {
        // rescale by |q| so that q divides d - p^2; value unchanged
        Int f = q < 0 ? Int(-q) : q;
        s.p = p * f;
        s.d = d * f * f;
        s.q = q * f;
    }
    return s;
}

int QuadraticSurd::cmp(const Rational& r) const {
    // (p + sqrt(d))/q vs r  <=>  sqrt(d) vs r q - p, flipped when q < 0
    Rational w = r * Rational(q) - Rational(p);
    int s = cmp_sqrt_rational(d, w.get_num(), w.get_den());
    return q > 0 ? s : -s;
}

bool QuadraticSurd::in_unit_interval() const {
    return cmp(Rational(0)) > 0 && cmp(Rational(1)) < 0;
}

std::string QuadraticSurd::to_string() const {
    std::string out = "(" + p.get_str();
    out += "+sqrt ";
    out += d.get_str();
    out += ")/";
    out += q.get_str();
    return out;
}

CFExpansion expand_surd(const QuadraticSurd& alpha) {
    QuadraticSurd s = QuadraticSurd::make(alpha.p, alpha.d, alpha.q);
    if (is_perfect_square(s.d)) {
        throw NotIrrationalError("radicand " + s.d.get_str() + " is a perfect square");
    }
    if (floor_surd(s.p, s.d, s.q) != 0) {
        throw RangeError("surd " + alpha.to_string() + " outside (0,1)");
    }

    // alpha_1 = 1/alpha: the (P,Q) state walk stays integral because the
    // canonical form guarantees q | d - p^2 and each step preserves
    // Q_i | d - P_i^2.
    Int P = -s.p;
    Int Q = (s.d - s.p * s.p) / s.q;

    std::map<std::pair<Int, Int>, std::size_t> seen;
    std::vector<Int> digits;
    for (std::size_t i = 1;; ++i) {
        auto state = std::make_pair(P, Q);
        auto it = seen.find(state);
        if (it != seen.end()) {
            std::size_t first = it->second;
            std::vector<Int> pre(digits.begin(), digits.begin() + static_cast<long>(first - 1));
            std::vector<Int> per(digits.begin() + static_cast<long>(first - 1), digits.end());
            return CFExpansion::periodic(std::move(pre), std::move(per));
        }
        seen.emplace(std::move(state), i);

        Int a = floor_surd(P, s.d, Q);
        digits.push_back(a);
        Int Pn = a * Q - P;
        Int Qn = (s.d - Pn * Pn) / Q;
        P = Pn;
        Q = Qn;

        if (i > 4'000'000) throw std::logic_error("surd period not detected");
    }
}

PeriodDecomposition period_decomposition(const CFExpansion& cf, long n) {
    if (!cf.is_periodic()) {
        throw RequiresPeriodicError("decomposition needs an eventually periodic expansion");
    }
    const long r = static_cast<long>(cf.preperiod_length());
    const long k = static_cast<long>(cf.period_length());
    if (n < r) {
        throw ResidualIndexError("index " + std::to_string(n) + " lies inside the preperiod (" +
                                 std::to_string(r) + " digits)");
    }

    PeriodDecomposition dec;
    dec.preperiod_len = static_cast<std::size_t>(r);
    dec.period_len = static_cast<std::size_t>(k);
    dec.j = (n - r) / k;
    dec.l = static_cast<std::size_t>((n - r) % k);

    dec.pre = Mat2::identity();
    for (const Int& a : cf.preperiod()) dec.pre = dec.pre * digit_matrix(a);
    dec.period = Mat2::identity();
    for (const Int& a : cf.period()) dec.period = dec.period * digit_matrix(a);
    dec.partial = Mat2::identity();
    for (std::size_t t = 0; t < dec.l; ++t) dec.partial = dec.partial * digit_matrix(cf.period()[t]);
    return dec;
}

QuadFieldElem::QuadFieldElem(Rational x, Rational y, Int delta)
    : x_(std::move(x)), y_(std::move(y)), delta_(std::move(delta)) {
    x_.canonicalize();
    y_.canonicalize();
}

QuadFieldElem QuadFieldElem::operator+(const QuadFieldElem& o) const {
    return {x_ + o.x_, y_ + o.y_, delta_};
}

QuadFieldElem QuadFieldElem::operator-(const QuadFieldElem& o) const {
    return {x_ - o.x_, y_ - o.y_, delta_};
}

QuadFieldElem QuadFieldElem::operator*(const QuadFieldElem& o) const {
    // (x1 + y1 s)(x2 + y2 s) with s^2 = delta
    return {x_ * o.x_ + y_ * o.y_ * Rational(delta_), x_ * o.y_ + y_ * o.x_, delta_};
}

QuadFieldElem QuadFieldElem::operator-() const { return {-x_, -y_, delta_}; }

Rational QuadFieldElem::norm() const { return x_ * x_ - y_ * y_ * Rational(delta_); }

QuadFieldElem QuadFieldElem::conjugate() const { return {x_, -y_, delta_}; }

QuadFieldElem QuadFieldElem::inverse() const {
    Rational nm = norm();
    if (nm == 0) throw InvalidInputError("inverse of an element with zero norm");
    return {x_ / nm, -y_ / nm, delta_};
}

QuadFieldElem QuadFieldElem::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    QuadFieldElem base = *this;
    QuadFieldElem acc(Rational(1), Rational(0), delta_);
    unsigned long u = static_cast<unsigned long>(e);
    while (u > 0) {
        if (u & 1) acc = acc * base;
        base = base * base;
        u >>= 1;
    }
    return acc;
}

bool QuadFieldElem::operator==(const QuadFieldElem& o) const {
    return delta_ == o.delta_ && x_ == o.x_ && y_ == o.y_;
}

EigenSplit eigen_split(const Mat2& period_block) {
    const Int& a = period_block.m11;
    const Int& b = period_block.m12;
    const Int& c = period_block.m21;
    const Int& d = period_block.m22;

    Int delta = (d - a) * (d - a) + 4 * b * c;
    if (delta <= 0) throw InvalidInputError("period block with nonpositive discriminant");

    Rational half(1, 2);
    Rational tr((a + d));
    QuadFieldElem lambda1(tr * half, half, delta);
    QuadFieldElem lambda2(tr * half, -half, delta);

    // 1/sqrt(delta) = sqrt(delta)/delta
    QuadFieldElem inv_sqrt(Rational(0), Rational(Int(1), delta), delta);
    auto elem = [&](const Int& v) { return QuadFieldElem(Rational(v), Rational(0), delta); };

    // P = -(1/sqrt(delta)) [[l2 - a, -b],[-c, l2 - d]]
    // Q = +(1/sqrt(delta)) [[l1 - a, -b],[-c, l1 - d]]
    std::array<QuadFieldElem, 4> pmat = {
        -(inv_sqrt * (lambda2 - elem(a))), -(inv_sqrt * (-elem(b))),
        -(inv_sqrt * (-elem(c))), -(inv_sqrt * (lambda2 - elem(d)))};
    std::array<QuadFieldElem, 4> qmat = {
        inv_sqrt * (lambda1 - elem(a)), inv_sqrt * (-elem(b)),
        inv_sqrt * (-elem(c)), inv_sqrt * (lambda1 - elem(d))};

    return EigenSplit{std::move(delta), std::move(lambda1), std::move(lambda2), std::move(pmat),
                      std::move(qmat)};
}

Int q_closed_form(const CFExpansion& cf, long n) {
    PeriodDecomposition dec = period_decomposition(cf, n);
    EigenSplit es = eigen_split(dec.period);

    const Int& A = dec.pre.m11;
    const Int& B = dec.pre.m12;
    const Int& a = dec.period.m11;
    const Int& b = dec.period.m12;
    const Int& c = dec.period.m21;
    const Int& d = dec.period.m22;
    const Int& f = dec.partial.m12;
    const Int& h = dec.partial.m22;

    // q_{n-1} = (G (l1^{j-1} - l2^{j-1}) + M (l1^j - l2^j)) / sqrt(delta)
    Int G = (f * A + h * B) * (b * c - a * d);
    Int M = f * A * a + f * B * c + h * A * b + h * B * d;

    QuadFieldElem eG(Rational(G), Rational(0), es.delta);
    QuadFieldElem eM(Rational(M), Rational(0), es.delta);
    QuadFieldElem diff1 = es.lambda1.pow(dec.j - 1) - es.lambda2.pow(dec.j - 1);
    QuadFieldElem diff0 = es.lambda1.pow(dec.j) - es.lambda2.pow(dec.j);
    QuadFieldElem inv_sqrt(Rational(0), Rational(Int(1), es.delta), es.delta);

    QuadFieldElem res = (eG * diff1 + eM * diff0) * inv_sqrt;
    if (!res.is_rational() || res.x().get_den() != 1) {
        throw std::logic_error("closed form did not collapse to an integer");
    }
    return res.x().get_num();
}

Rational digit_sum_over_q(const CFExpansion& cf, long n) {
    if (n < 1) throw InvalidInputError("digit sum needs n >= 1");
    ConvergentTable table(cf);
    Int sum = 0;
    for (long i = 1; i <= n; ++i) sum += cf.digit(static_cast<std::size_t>(i));
    return make_rational(sum, table.q(n - 1));
}

}  // namespace threegap

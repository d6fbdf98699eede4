#include "threegap/cf.hpp"

#include <utility>

#include "threegap/error.hpp"
#include "threegap/format.hpp"

namespace threegap {

namespace {

void check_digits(const std::vector<Int>& digits, const char* what) {
    for (const Int& a : digits) {
        if (a < 1) throw InvalidInputError(std::string(what) + " digit below 1");
    }
}

}  // namespace

CFExpansion CFExpansion::finite(std::vector<Int> digits) {
    check_digits(digits, "finite expansion");
    // canonical form: fold a trailing 1 into the digit before it
    if (digits.size() >= 2 && digits.back() == 1) {
        digits.pop_back();
        digits.back() += 1;
    }
    if (digits.size() == 1 && digits[0] == 1) {
        throw RangeError("[0;1] denotes 1, which is outside [0,1)");
    }
    CFExpansion cf;
    cf.pre_ = std::move(digits);
    return cf;
}

CFExpansion CFExpansion::truncated_prefix(std::vector<Int> digits) {
    if (digits.empty()) throw InvalidInputError("empty truncated prefix");
    check_digits(digits, "truncated prefix");
    CFExpansion cf;
    cf.truncated_ = true;
    cf.pre_ = std::move(digits);
    return cf;
}

CFExpansion CFExpansion::periodic(std::vector<Int> preperiod, std::vector<Int> period) {
    if (period.empty()) throw InvalidInputError("periodic expansion with empty period");
    check_digits(preperiod, "preperiod");
    check_digits(period, "period");
    CFExpansion cf;
    cf.periodic_ = true;
    cf.pre_ = std::move(preperiod);
    cf.period_ = std::move(period);
    return cf;
}

bool CFExpansion::has_digit(std::size_t i) const {
    if (i < 1) return false;
    return periodic_ || i <= pre_.size();
}

const Int& CFExpansion::digit(std::size_t i) const {
    if (i < 1) throw InvalidInputError("digit index must be >= 1");
    if (i <= pre_.size()) return pre_[i - 1];
    if (!periodic_) {
        throw ExhaustedExpansionError("finite expansion has only " +
                                      std::to_string(pre_.size()) + " digits, digit " +
                                      std::to_string(i) + " requested");
    }
    return period_[(i - pre_.size() - 1) % period_.size()];
}

std::size_t CFExpansion::digit_count() const {
    if (periodic_) throw RequiresPeriodicError("periodic expansion has no digit count");
    return pre_.size();
}

Rational CFExpansion::evaluate() const {
    if (periodic_) throw RequiresPeriodicError("periodic expansion has no rational value");
    // fold back to front: x -> 1/(a_i + x)
    Rational x(0);
    for (auto it = pre_.rbegin(); it != pre_.rend(); ++it) {
        x = Rational(1) / (Rational(*it) + x);
    }
    return x;
}

std::string CFExpansion::to_string() const {
    std::string out = "[0";
    bool first = true;
    for (const Int& a : pre_) {
        out += first ? ";" : ",";
        out += a.get_str();
        first = false;
    }
    if (periodic_) {
        out += first ? ";" : ",";
        out += "period(";
        for (std::size_t i = 0; i < period_.size(); ++i) {
            if (i) out += ",";
            out += period_[i].get_str();
        }
        out += ")";
    }
    out += "]";
    return out;
}

ConvergentTable::ConvergentTable(CFExpansion cf) : cf_(std::move(cf)) {
    // rows n = -2, -1, 0; a_0 = 0
    p_ = {Int(0), Int(1), Int(0)};
    q_ = {Int(1), Int(0), Int(1)};
}

bool ConvergentTable::has(long n) const {
    if (n < -2) return false;
    return n <= 0 || cf_.has_digit(static_cast<std::size_t>(n));
}

void ConvergentTable::ensure(long n) {
    if (n < -2) throw InvalidInputError("convergent index below -2");
    for (long m = static_cast<long>(p_.size()) - 2; m <= n; ++m) {
        const Int& a = cf_.digit(static_cast<std::size_t>(m));  // throws when exhausted
        p_.push_back(a * p_[m + 1] + p_[m]);
        q_.push_back(a * q_[m + 1] + q_[m]);
    }
}

const Int& ConvergentTable::p(long n) {
    ensure(n);
    return p_[static_cast<std::size_t>(n + 2)];
}

const Int& ConvergentTable::q(long n) {
    ensure(n);
    return q_[static_cast<std::size_t>(n + 2)];
}

Convergent ConvergentTable::at(long n) {
    ensure(n);
    return Convergent{n, p(n), q(n), std::nullopt};
}

CFExpansion cf_from_rational(const Int& num, const Int& den) {
    if (den == 0) throw InvalidInputError("zero denominator");
    Rational r = make_rational(num, den);
    if (r < 0 || r >= 1) throw RangeError("value " + rational_string(r) + " outside [0,1)");
    std::vector<Int> digits;
    Int a = r.get_num(), b = r.get_den();  // 0 <= a < b, gcd 1
    while (a != 0) {
        Int quot = floor_div(b, a);
        Int rem = b - quot * a;
        digits.push_back(quot);
        b = a;
        a = rem;
    }
    return CFExpansion::finite(std::move(digits));
}

std::vector<Convergent> convergents(const CFExpansion& cf, long up_to) {
    if (up_to < 0) throw InvalidInputError("convergent index must be >= 0");
    ConvergentTable table(cf);
    std::vector<Convergent> out;
    out.reserve(static_cast<std::size_t>(up_to) + 1);
    for (long n = 0; n <= up_to; ++n) out.push_back(table.at(n));
    return out;
}

Convergent semiconvergent(const CFExpansion& cf, long n, const Int& i) {
    if (n < 1) throw InvalidInputError("semiconvergent index must be >= 1");
    if (i < 1 || i > cf.digit(static_cast<std::size_t>(n))) {
        throw InvalidInputError("semiconvergent sub-index outside [1, a_n]");
    }
    ConvergentTable table(cf);
    Convergent c;
    c.n = n;
    c.p = i * table.p(n - 1) + table.p(n - 2);
    c.q = i * table.q(n - 1) + table.q(n - 2);
    c.sub_index = i;
    return c;
}

Mat2 matrix_form(const CFExpansion& cf, long n) {
    if (n < -2) throw InvalidInputError("matrix index must be >= -2");
    Mat2 acc = Mat2::identity();
    // factors for digits a_0 = 0, a_1, ..., a_{n+1}
    for (long j = 0; j <= n + 1; ++j) {
        Int a = j == 0 ? Int(0) : cf.digit(static_cast<std::size_t>(j));
        acc = acc * Mat2{a, 1, 1, 0};
    }
    return acc;
}

}  // namespace threegap

#include "threegap/alpha_parse.hpp"

#include <cctype>
#include <optional>
#include <vector>

#include "threegap/error.hpp"

namespace threegap {

namespace {

// cursor over the input with unicode minus / radical folded to ASCII markers
struct Cursor {
    std::string s;
    std::size_t pos = 0;

    explicit Cursor(const std::string& raw) {
        // U+2212 (minus) -> '-', U+221A (radical) -> 'r' marker
        for (std::size_t i = 0; i < raw.size();) {
            if (raw.compare(i, 3, "\xe2\x88\x92") == 0) {
                s += '-';
                i += 3;
            } else if (raw.compare(i, 3, "\xe2\x88\x9a") == 0) {
                s += 'r';
                i += 3;
            } else {
                s += raw[i];
                i += 1;
            }
        }
    }

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= s.size();
    }
    bool peek(char c) {
        skip_ws();
        return pos < s.size() && s[pos] == c;
    }
    bool accept(char c) {
        if (!peek(c)) return false;
        ++pos;
        return true;
    }
    void expect(char c, const char* ctx) {
        if (!accept(c)) {
            throw InvalidInputError(std::string("expected '") + c + "' in " + ctx);
        }
    }
    bool accept_word(const char* w) {
        skip_ws();
        std::size_t len = std::string(w).size();
        if (s.compare(pos, len, w) == 0) {
            pos += len;
            return true;
        }
        return false;
    }

    Int integer(const char* ctx) {
        skip_ws();
        std::size_t start = pos;
        if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) ++pos;
        std::size_t digits_from = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == digits_from) {
            throw InvalidInputError(std::string("expected an integer in ") + ctx);
        }
        return Int(s.substr(start, pos - start));
    }
};

AlphaSource parse_cf_list(Cursor& cur) {
    cur.expect('[', "expansion");
    Int zero = cur.integer("expansion");
    if (zero != 0) throw InvalidInputError("expansion must start with 0");

    std::vector<Int> digits;
    std::vector<Int> period;
    bool saw_period = false;

    if (!cur.peek(']')) {
        cur.expect(';', "expansion");
        do {
            if (cur.accept_word("period")) {
                cur.expect('(', "period block");
                do {
                    period.push_back(cur.integer("period block"));
                } while (cur.accept(','));
                cur.expect(')', "period block");
                saw_period = true;
                break;
            }
            digits.push_back(cur.integer("expansion"));
        } while (cur.accept(','));
    }
    cur.expect(']', "expansion");
    if (!cur.done()) throw InvalidInputError("trailing text after expansion");

    if (saw_period) {
        return AlphaSource::from_cf(CFExpansion::periodic(std::move(digits), std::move(period)));
    }
    return AlphaSource::from_cf(CFExpansion::finite(std::move(digits)));
}

// sum of integer terms and at most one sqrt term, as in "-1+sqrt 5"
struct SurdSum {
    Int constant = 0;
    std::optional<Int> radicand;
    int sqrt_sign = 1;
};

SurdSum parse_sum(Cursor& cur, char terminator) {
    SurdSum sum;
    bool first = true;
    while (true) {
        cur.skip_ws();
        int sign = 1;
        if (cur.accept('+')) {
            sign = 1;
        } else if (cur.accept('-')) {
            sign = -1;
        } else if (!first) {
            break;
        }
        if (cur.accept_word("sqrt") || cur.accept('r')) {
            if (sum.radicand) throw InvalidInputError("more than one sqrt term");
            sum.radicand = cur.integer("radicand");
            if (*sum.radicand < 0) throw InvalidInputError("negative radicand");
            sum.sqrt_sign = sign;
        } else {
            sum.constant += sign * cur.integer("surd term");
        }
        first = false;
        if (cur.peek(terminator) || cur.done()) break;
    }
    if (!sum.radicand) throw InvalidInputError("surd without a sqrt term");
    return sum;
}

AlphaSource parse_surd(Cursor& cur) {
    bool parens = cur.accept('(');
    SurdSum sum = parse_sum(cur, parens ? ')' : '/');
    Int q = 1;
    if (parens) {
        cur.expect(')', "surd");
        if (cur.accept('/')) q = cur.integer("surd denominator");
    } else if (cur.accept('/')) {
        q = cur.integer("surd denominator");
    }
    if (!cur.done()) throw InvalidInputError("trailing text after surd");
    if (q == 0) throw InvalidInputError("surd with zero denominator");

    // (c - sqrt d)/q == (-c + sqrt d)/(-q)
    Int p = sum.constant;
    if (sum.sqrt_sign < 0) {
        p = -p;
        q = -q;
    }
    return AlphaSource::from_surd(QuadraticSurd::make(p, *sum.radicand, q));
}

AlphaSource parse_rational(Cursor& cur) {
    Int num = cur.integer("rational");
    cur.expect('/', "rational");
    Int den = cur.integer("rational");
    if (!cur.done()) throw InvalidInputError("trailing text after rational");
    return AlphaSource::from_rational(num, den);
}

}  // namespace

AlphaSource parse_alpha(const std::string& text) {
    Cursor cur(text);
    if (cur.done()) throw InvalidInputError("empty alpha");
    cur.skip_ws();
    if (cur.peek('[')) return parse_cf_list(cur);
    if (cur.s.find('r') != std::string::npos || cur.s.find("sqrt") != std::string::npos) {
        return parse_surd(cur);
    }
    return parse_rational(cur);
}

}  // namespace threegap

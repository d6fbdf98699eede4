#include "threegap/metric_mc.hpp"

#include <cmath>
#include <random>

#include "threegap/error.hpp"
#include "threegap/numeric.hpp"

namespace threegap {

namespace {

constexpr std::size_t kRedrawCap = 10000;

std::mt19937_64 engine_for(std::uint64_t seed, std::uint64_t index) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
    return std::mt19937_64(seq);
}

// uniform integer in [0, 2^bits)
Int draw_bits(std::mt19937_64& eng, unsigned bits) {
    Int x = 0;
    for (unsigned filled = 0; filled < bits; filled += 64) {
        Int word = static_cast<unsigned long>(eng());
        x = (x << 64) | word;
    }
    unsigned total = ((bits + 63) / 64) * 64;
    if (total > bits) x >>= (total - bits);
    return x;
}

// first digits of the expansion of num/den in (0,1); stops at max_digits
std::vector<Int> euclid_digits(Int num, Int den, unsigned max_digits) {
    std::vector<Int> digits;
    Int a = std::move(num), b = std::move(den);
    // expansion of a/b with 0 < a < b
    while (a != 0 && digits.size() < max_digits) {
        Int quot = b / a;
        Int rem = b - quot * a;
        digits.push_back(std::move(quot));
        b = std::move(a);
        a = std::move(rem);
    }
    return digits;
}

// smallest q_max reachable with max_index digits is the Fibonacci number
// F_{max_index + 1} (all digits 1)
Int fibonacci(unsigned n) {
    Int a = 0, b = 1;
    for (unsigned i = 0; i < n; ++i) {
        Int c = a + b;
        a = b;
        b = std::move(c);
    }
    return a;
}

}  // namespace

SampleBatch sample_alpha(const SampleSpec& spec) {
    if (spec.count == 0) throw InvalidInputError("sample count must be >= 1");
    if (spec.max_index == 0) throw InvalidInputError("max_index must be >= 1");
    if (spec.precision_bits < 2) throw InvalidInputError("precision_bits must be >= 2");

    Int q_limit = Int(1) << (spec.precision_bits / 2);

    // every accepted prefix has q_max_index >= F_{max_index+1}; if even that
    // floor breaks the guard, no draw can ever be accepted
    if (fibonacci(spec.max_index + 1) >= q_limit) {
        throw InsufficientPrecisionError(
            "precision_bits " + std::to_string(spec.precision_bits) +
            " cannot support max_index " + std::to_string(spec.max_index) +
            "; the truncation guard q < 2^(bits/2) is unsatisfiable");
    }

    Int denom = Int(1) << spec.precision_bits;

    SampleBatch batch;
    batch.samples.reserve(spec.count);
    for (std::size_t idx = 0; idx < spec.count; ++idx) {
        auto eng = engine_for(spec.seed, idx);
        for (std::size_t attempt = 0;; ++attempt) {
            if (attempt >= kRedrawCap) {
                throw InsufficientPrecisionError("sample " + std::to_string(idx) +
                                                 " exceeded the redraw limit");
            }
            Int x = draw_bits(eng, spec.precision_bits);
            if (x == 0) {
                ++batch.redraws;
                continue;
            }
            std::vector<Int> digits = euclid_digits(x, denom, spec.max_index);
            if (digits.size() < spec.max_index) {
                ++batch.redraws;
                continue;
            }
            CFExpansion cf = CFExpansion::truncated_prefix(std::move(digits));
            ConvergentTable table(cf);
            if (table.q(static_cast<long>(spec.max_index)) >= q_limit) {
                ++batch.redraws;
                continue;
            }
            batch.samples.push_back(std::move(cf));
            break;
        }
    }
    return batch;
}

double levy_statistic(const CFExpansion& cf, long n) {
    if (n < 1) throw InvalidInputError("Levy statistic needs n >= 1");
    ConvergentTable table(cf);
    const Int& q = table.q(n);
    long exp2 = 0;
    double mant = mpz_get_d_2exp(&exp2, q.get_mpz_t());
    double ln_q = std::log(mant) + static_cast<double>(exp2) * std::log(2.0);
    return ln_q / static_cast<double>(n);
}

double levy_reference() {
    const double pi = 3.14159265358979323846;
    return pi * pi / (12.0 * std::log(2.0));
}

namespace {

MetricReport summarize(std::vector<double> values, std::size_t skipped) {
    MetricReport rep;
    rep.skipped = skipped;
    rep.used = values.size();
    rep.values = std::move(values);
    if (rep.used == 0) return rep;
    double sum = 0.0;
    for (double v : rep.values) sum += v;
    rep.mean = sum / static_cast<double>(rep.used);
    double ss = 0.0;
    for (double v : rep.values) ss += (v - rep.mean) * (v - rep.mean);
    rep.stddev = std::sqrt(ss / static_cast<double>(rep.used));
    return rep;
}

}  // namespace

MetricReport large_digit_census(const std::vector<CFExpansion>& samples, long n_lo, long n_hi) {
    if (n_lo < 1 || n_hi < n_lo) throw InvalidInputError("census window must satisfy 1 <= n_lo <= n_hi");
    std::vector<double> hits;
    std::size_t skipped = 0;
    for (const CFExpansion& cf : samples) {
        if (!cf.has_digit(static_cast<std::size_t>(n_hi))) {
            ++skipped;
            continue;
        }
        bool hit = false;
        for (long n = n_lo; n <= n_hi && !hit; ++n) {
            hit = cf.digit(static_cast<std::size_t>(n)) >= Int(n) * Int(n);
        }
        hits.push_back(hit ? 1.0 : 0.0);
    }
    return summarize(std::move(hits), skipped);
}

MetricReport digit_sum_report(const std::vector<CFExpansion>& samples, long n) {
    if (n < 1) throw InvalidInputError("digit sum needs n >= 1");
    std::vector<double> values;
    std::size_t skipped = 0;
    for (const CFExpansion& cf : samples) {
        if (!cf.has_digit(static_cast<std::size_t>(n))) {
            ++skipped;
            continue;
        }
        ConvergentTable table(cf);
        Int sum = 0;
        for (long i = 1; i <= n; ++i) sum += cf.digit(static_cast<std::size_t>(i));
        values.push_back(Rational(make_rational(sum, table.q(n - 1))).get_d());
    }
    return summarize(std::move(values), skipped);
}

double first_digit_fraction(const std::vector<CFExpansion>& samples, const Int& k) {
    if (samples.empty()) throw InvalidInputError("no samples");
    if (k < 1) throw InvalidInputError("digit value must be >= 1");
    std::size_t hits = 0;
    for (const CFExpansion& cf : samples) {
        if (cf.has_digit(1) && cf.digit(1) == k) ++hits;
    }
    return static_cast<double>(hits) / static_cast<double>(samples.size());
}

}  // namespace threegap

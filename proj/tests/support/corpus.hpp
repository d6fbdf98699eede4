#pragma once

#include <random>
#include <string>
#include <vector>

#include "threegap/gap_oracle.hpp"

namespace corpus {

struct Entry {
    std::string name;
    threegap::AlphaSource source;
};

// 15-digit prefixes with digits uniform in [1,9], drawn from a fixed seed.
// Modulo reduction keeps the generator portable (distribution classes are
// implementation defined).
inline std::vector<threegap::CFExpansion> random_prefixes(std::size_t count = 30) {
    std::mt19937_64 eng(20260816u);
    std::vector<threegap::CFExpansion> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        std::vector<threegap::Int> digits;
        digits.reserve(15);
        for (int d = 0; d < 15; ++d) {
            digits.emplace_back(static_cast<unsigned long>(1 + eng() % 9));
        }
        out.push_back(threegap::CFExpansion::truncated_prefix(std::move(digits)));
    }
    return out;
}

inline threegap::QuadraticSurd golden() { return threegap::QuadraticSurd::make(-1, 5, 2); }
inline threegap::QuadraticSurd sqrt2m1() { return threegap::QuadraticSurd::make(-1, 2, 1); }
inline threegap::QuadraticSurd sqrt3m1() { return threegap::QuadraticSurd::make(-1, 3, 1); }
inline threegap::CFExpansion preperiodic() {
    return threegap::CFExpansion::periodic({3}, {1, 2});
}

// the four eventually periodic entries
inline std::vector<Entry> periodic_entries() {
    std::vector<Entry> out;
    out.push_back({"golden", threegap::AlphaSource::from_surd(golden())});
    out.push_back({"sqrt2-1", threegap::AlphaSource::from_surd(sqrt2m1())});
    out.push_back({"sqrt3-1", threegap::AlphaSource::from_surd(sqrt3m1())});
    out.push_back({"[0;3,period(1,2)]", threegap::AlphaSource::from_cf(preperiodic())});
    return out;
}

// full corpus: 30 random prefixes plus the periodic entries
inline std::vector<Entry> all_entries() {
    std::vector<Entry> out;
    std::size_t i = 0;
    for (auto& cf : random_prefixes()) {
        out.push_back({"random-" + std::to_string(i++), threegap::AlphaSource::from_cf(cf)});
    }
    for (auto& e : periodic_entries()) out.push_back(e);
    return out;
}

}  // namespace corpus

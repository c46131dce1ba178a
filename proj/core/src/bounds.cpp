#include "achrolab/bounds.hpp"

#include "achrolab/stats.hpp"

#include <algorithm>
#include <stdexcept>

namespace achrolab {

namespace {

constexpr long long kSizeGuard = 1'000'000; // keeps l(p+q-l-1) far from overflow

} // namespace

long long excess(long long p, long long q, long long colour_count, long long l) {
    if (p < 1 || q < 1 || colour_count < 1 || l < 1)
        throw std::invalid_argument("excess arguments must be positive");
    if (p > kSizeGuard || q > kSizeGuard || colour_count > 2 * kSizeGuard || l > kSizeGuard)
        throw std::invalid_argument("excess arguments exceed supported size");
    return l * (p + q - l - 1) - (colour_count - 1);
}

ExcessReport matrix_excess(const ColourMatrix & m) {
    const FrequencyTable freq(m);
    ExcessReport report;
    report.min_frequency = freq.min_frequency();
    report.per_colour.reserve(m.colour_count());
    for (int c = 0; c < m.colour_count(); ++c)
        report.per_colour.push_back(excess(m.row_count(), m.col_count(), m.colour_count(),
                                           freq.frequency(static_cast<ColourId>(c))));
    report.matrix_excess =
        *std::min_element(report.per_colour.begin(), report.per_colour.end());
    // with frequencies within min(p,q) the minimum is attained at a
    // minimum-frequency colour; beyond that (non-proper input) only the
    // plain minimum is meaningful
    if (freq.max_frequency() <= std::min(m.row_count(), m.col_count()) &&
        report.matrix_excess !=
            excess(m.row_count(), m.col_count(), m.colour_count(), report.min_frequency))
        throw std::logic_error("matrix excess not attained at the minimum frequency");
    return report;
}

std::vector<BasicBoundViolation> check_basic_bounds(const ColourMatrix & m) {
    std::vector<BasicBoundViolation> out;
    const FrequencyTable freq(m);
    const int line_cap = std::min(m.row_count(), m.col_count());

    for (int c = 0; c < m.colour_count(); ++c) {
        const int f = freq.frequency(static_cast<ColourId>(c));
        if (f > line_cap)
            out.push_back({"frequency-exceeds-line", static_cast<ColourId>(c),
                           "colour '" + m.token_of(static_cast<ColourId>(c)) + "' has frequency " +
                               std::to_string(f) + " > min(p,q) = " + std::to_string(line_cap)});
    }

    if (is_member(m)) {
        for (int c = 0; c < m.colour_count(); ++c) {
            const long long e = excess(m.row_count(), m.col_count(), m.colour_count(),
                                       freq.frequency(static_cast<ColourId>(c)));
            if (e < 0)
                out.push_back({"negative-excess", static_cast<ColourId>(c),
                               "colour '" + m.token_of(static_cast<ColourId>(c)) +
                                   "' has excess " + std::to_string(e)});
        }
        const long long cap =
            static_cast<long long>(m.row_count()) * m.col_count() / freq.min_frequency();
        if (m.colour_count() > cap)
            out.push_back({"palette-too-large", 0,
                           std::to_string(m.colour_count()) + " colours > floor(pq/frq) = " +
                               std::to_string(cap)});
    }
    return out;
}

long long general_upper_bound(int p, int q) {
    if (p < 1 || p > q)
        throw std::invalid_argument("general_upper_bound needs 1 <= p <= q");
    if (q > kSizeGuard)
        throw std::invalid_argument("size exceeds supported range");
    long long best = 0;
    for (long long l = 1; l <= p; ++l) {
        const long long by_lines = l * (p + q - l - 1) + 1;
        const long long by_count = static_cast<long long>(p) * q / l;
        best = std::max(best, std::min(by_lines, by_count));
    }
    return best;
}

K6Bounds k6_bounds(int q) {
    if (q < 7)
        throw std::invalid_argument("k6_bounds needs q >= 7");
    K6Bounds b;
    b.upper = general_upper_bound(6, q);
    if (q % 2 == 1) {
        b.lower = 2LL * q + 3;
        if (q >= 41)
            b.exact = 2LL * q + 3;
    }
    return b;
}

} // namespace achrolab

#pragma once

#include "achrolab/matrix.hpp"

#include <optional>
#include <string>
#include <vector>

namespace achrolab {

/// Slack of an l-colour in the pair-coverage counting argument:
/// l(p+q-l-1) - (colour_count-1). A negative value means no such colour can
/// exist in a proper complete matrix; the value is returned as-is since that
/// sign is exactly what callers reason about. Sizes are validated to stay
/// well inside 64-bit range (p, q, colour_count <= 10^6).
long long excess(long long p, long long q, long long colour_count, long long l);

struct ExcessReport {
    std::vector<long long> per_colour; ///< indexed by ColourId
    long long matrix_excess = 0;       ///< minimum over colours
    int min_frequency = 0;
};

/// Per-colour excesses of a matrix; the matrix excess is attained by any
/// minimum-frequency colour.
ExcessReport matrix_excess(const ColourMatrix & m);

struct BasicBoundViolation {
    std::string rule; ///< "frequency-exceeds-line" | "negative-excess" | "palette-too-large"
    ColourId colour = 0;
    std::string detail;
};

/// Sanity bounds every proper complete matrix satisfies: each frequency is at
/// most min(p,q); on a member matrix additionally every excess is
/// non-negative and |C| <= floor(pq / frq(M)). Returns the empty vector when
/// all hold.
std::vector<BasicBoundViolation> check_basic_bounds(const ColourMatrix & m);

/// max over l in [1,p] of min(l(p+q-l-1)+1, floor(pq/l)) - an upper bound for
/// the achromatic number of K_p [] K_q. Requires 1 <= p <= q.
long long general_upper_bound(int p, int q);

/// Known bounds for achr(K_6 [] K_q), q >= 7: upper 2q+7 always, lower 2q+3
/// for odd q (the explicit construction), exact 2q+3 for odd q >= 41.
struct K6Bounds {
    std::optional<long long> lower;
    long long upper = 0;
    std::optional<long long> exact;
};

K6Bounds k6_bounds(int q);

} // namespace achrolab

#ifndef POLYCERT_CLASSICAL_BOUNDS_HPP
#define POLYCERT_CLASSICAL_BOUNDS_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "polycert/error.hpp"
#include "polycert/polynomial.hpp"
#include "polycert/rational.hpp"
#include "polycert/shift_division.hpp"

namespace polycert {

/// Lagrange's upper bound 1 + (B / a_0)^(1/k) on the positive roots, where
/// a_k is the first negative coefficient (descending indexing, a_0 leading)
/// and B is the largest magnitude among the negative coefficients.
struct BoundReport {
    std::size_t first_negative_index_k = 0;
    Rat magnitude_B;
    /// Rational value >= the true bound. f(x) > 0 for every x > bound.
    Rat bound_overestimate;
    /// Upper bound on bound_overestimate - (true bound); zero when the k-th
    /// root is rational, otherwise at most the requested epsilon.
    Rat slack;
    bool exact = false;
};

inline Rat default_root_epsilon() { return inverse_power_of_two(32); }

/// Upper approximation of target^(1/k) for target > 0: returns hi with
/// hi^k >= target and hi - (true root) <= epsilon. `width` receives the
/// final bracket width (0 when the root is rational).
inline Rat kth_root_upper(const Rat& target, std::size_t k, const Rat& epsilon, Rat& width) {
    Rat root;
    if (exact_root(target, k, root)) {
        width = 0;
        return root;
    }
    Rat lo(0);
    Rat hi = target > 1 ? target : Rat(1);
    while (hi - lo > epsilon) {
        Rat mid = (lo + hi) / 2;
        if (pow(mid, k) >= target)
            hi = mid;
        else
            lo = mid;
    }
    width = hi - lo;
    return hi;
}

/// Returns nullopt when f has no negative coefficient (then f has no
/// positive root and f(x) > 0 for x > 0 whenever a_n > 0).
inline std::optional<BoundReport> lagrange_bound(const Poly& f, const Rat& epsilon = default_root_epsilon()) {
    require_positive_leading(f);
    if (sgn(epsilon) <= 0)
        throw Error(ErrorKind::InvalidArgument, "epsilon must be positive");
    const std::size_t n = f.degree();
    std::optional<std::size_t> k;
    Rat big_b(0);
    for (std::size_t j = 1; j <= n; ++j) {
        const Rat& a = f.descending(j);
        if (sgn(a) >= 0)
            continue;
        if (!k)
            k = j;
        if (-a > big_b)
            big_b = -a;
    }
    if (!k)
        return std::nullopt;

    BoundReport r;
    r.first_negative_index_k = *k;
    r.magnitude_B = big_b;
    Rat width;
    Rat root = kth_root_upper(big_b / f.leading_coefficient(), *k, epsilon, width);
    r.bound_overestimate = root + 1;
    r.slack = width;
    r.exact = sgn(width) == 0;
    return r;
}

struct LaguerreOutcome {
    bool certified = false;
    /// First index i violating f_i(b) >= 0 (i < n) or f_n(b) > 0 (i = n).
    std::size_t offending_index = 0;
};

/// Laguerre's test: if f_1(b)..f_{n-1}(b) >= 0 and f_n(b) > 0, no real root
/// of f is >= b. Note the strict remainder, unlike the certificate verdict.
inline LaguerreOutcome laguerre_test(const Poly& f, const Rat& b) {
    require_positive_leading(f);
    if (sgn(b) <= 0)
        throw Error(ErrorKind::NonpositiveShift, "Laguerre's test needs b > 0, got " + to_string(b));
    ShiftTable t = shift_table(f, b);
    const std::size_t n = t.degree();
    for (std::size_t i = 1; i < n; ++i)
        if (sgn(t.values[i]) < 0)
            return {false, i};
    if (sgn(t.values[n]) <= 0)
        return {false, n};
    return {true, 0};
}

/// Executable upward-closure check: given f_1(b)..f_k(b) >= 0
/// and b' > b, reports whether f_1(b')..f_k(b') >= 0 (always true).
///
/// The values at b' are rebuilt from the table at b through
///   f_i(b') = (b' - b)(f_0(b) b'^{i-1} + ... + f_{i-1}(b)) + f_i(b)
/// and cross-checked against direct evaluation.
inline bool monotone_extension_check(const Poly& f, const Rat& b, const Rat& b_prime, std::size_t k) {
    require_positive_leading(f);
    if (!(sgn(b) > 0 && b < b_prime))
        throw Error(ErrorKind::InvalidArgument, "need 0 < b < b'");
    if (k < 1 || k > f.degree())
        throw Error(ErrorKind::InvalidArgument, "k must lie in [1, deg f]");

    ShiftTable at_b = shift_table(f, b);
    for (std::size_t i = 1; i <= k; ++i)
        if (sgn(at_b.values[i]) < 0)
            throw Error(ErrorKind::PreconditionNotNonnegative,
                        "f_" + std::to_string(i) + "(" + to_string(b) + ") = " + to_string(at_b.values[i]) + " < 0");

    ShiftTable direct = shift_table(f, b_prime);
    const Rat delta = b_prime - b;
    bool all_nonnegative = true;
    Rat partial(0);
    for (std::size_t i = 1; i <= k; ++i) {
        partial = partial * b_prime + at_b.values[i - 1];
        Rat value = delta * partial + at_b.values[i];
        if (value != direct.values[i])
            throw std::logic_error("shift identity disagrees with direct evaluation at index " + std::to_string(i));
        if (sgn(value) < 0)
            all_nonnegative = false;
    }
    return all_nonnegative;
}

} // namespace polycert

#endif // POLYCERT_CLASSICAL_BOUNDS_HPP

#ifndef POLYCERT_SHIFT_SEARCH_HPP
#define POLYCERT_SHIFT_SEARCH_HPP

// Searching for shifts b that admit a positivity certificate.
//
// P(b) := "f_k(b) >= 0 for k = 1..n". P is upward closed in b (once a prefix
// f_1..f_k is nonnegative at b > 0 it stays nonnegative for every larger b),
// so the set of working shifts is [b*, inf) where b* is the largest positive
// root over f_1..f_n. Everything here leans on that monotonicity.

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

struct PredicateResult {
    bool holds = true;
    /// Smallest k in 1..n with f_k(b) < 0 when !holds.
    std::size_t first_offending_index = 0;

    explicit operator bool() const noexcept { return holds; }
};

inline PredicateResult scan_predicate(const ShiftTable& t) {
    for (std::size_t k = 1; k < t.values.size(); ++k)
        if (sgn(t.values[k]) < 0)
            return {false, k};
    return {true, 0};
}

inline PredicateResult predicate_P(const Poly& f, const Rat& b) {
    require_positive_leading(f);
    if (sgn(b) < 0)
        throw Error(ErrorKind::NegativeShift, "shift " + to_string(b) + " is negative");
    return scan_predicate(shift_table(f, b));
}

struct SearchOptions {
    /// Replace the +1 stepping of the integer searches with doubling plus
    /// binary search. Results are identical; only the cost changes.
    bool gallop = false;
};

/// One stage of Laguerre's integer search: at `shift`, f_1..f_{k-1} were
/// nonnegative and f_k was the first negative value (k = 0 on the last,
/// successful stage).
struct LaguerreStage {
    Int shift;
    std::size_t offending_index;
};

namespace detail {

/// f_k(b) by running the recurrence up to k.
inline Rat coefficient_value(const Poly& f, const Rat& b, std::size_t k) {
    Rat v = f.descending(0);
    for (std::size_t i = 1; i <= k; ++i)
        v = b * v + f.descending(i);
    return v;
}

/// Smallest integer b' >= start with pred(b') true, for pred upward closed
/// on [start, inf) and eventually true.
template <typename Pred>
Int first_integer_where(const Int& start, Pred pred, bool gallop) {
    if (pred(start))
        return start;
    if (!gallop) {
        Int b = start;
        do {
            ++b;
        } while (!pred(b));
        return b;
    }
    Int lo = start; // pred(lo) false
    Int step = 1;
    Int hi = start + step;
    while (!pred(hi)) {
        lo = hi;
        step *= 2;
        hi = start + step;
    }
    while (hi - lo > 1) {
        Int mid = (lo + hi) / 2;
        if (pred(mid))
            hi = mid;
        else
            lo = mid;
    }
    return hi;
}

} // namespace detail

/// Laguerre's staged integer search, returning every stage visited.
///
/// Start at the smallest positive integer with f_1(b) >= 0. While some
/// f_{k}(b) < 0 with f_1..f_{k-1} nonnegative, step b upward until
/// f_k(b) >= 0 and rescan. Each stage extends the nonnegative prefix, so at
/// most n stages run.
inline std::vector<LaguerreStage> laguerre_integer_trace(const Poly& f, const SearchOptions& opts = {}) {
    require_positive_leading(f);
    const std::size_t n = f.degree();
    std::vector<LaguerreStage> stages;
    if (n == 0) {
        stages.push_back({Int(1), 0});
        return stages;
    }
    Int b = ceil(Rat(-f.descending(1) / f.leading_coefficient()));
    if (b < 1)
        b = 1;
    for (;;) {
        PredicateResult p = scan_predicate(shift_table(f, Rat(b)));
        if (p.holds) {
            stages.push_back({b, 0});
            return stages;
        }
        const std::size_t k = p.first_offending_index;
        stages.push_back({b, k});
        if (stages.size() > n + 1)
            throw std::logic_error("Laguerre search exceeded n stages");
        b = detail::first_integer_where(
            b, [&](const Int& x) { return sgn(detail::coefficient_value(f, Rat(x), k)) >= 0; }, opts.gallop);
    }
}

inline Int laguerre_integer_search(const Poly& f, const SearchOptions& opts = {}) {
    return laguerre_integer_trace(f, opts).back().shift;
}

/// Least nonnegative integer m with P(m), by walking down from Laguerre's
/// result (or bisecting, with gallop).
inline Int minimal_integer_shift(const Poly& f, const SearchOptions& opts = {}) {
    Int top = laguerre_integer_search(f, opts);
    auto holds = [&](const Int& m) { return scan_predicate(shift_table(f, Rat(m))).holds; };
    if (!opts.gallop) {
        Int m = top;
        while (m > 0 && holds(m - 1))
            --m;
        return m;
    }
    if (holds(Int(0)))
        return Int(0);
    Int lo = 0, hi = top;
    while (hi - lo > 1) {
        Int mid = (lo + hi) / 2;
        if (holds(mid))
            hi = mid;
        else
            lo = mid;
    }
    return hi;
}

/// Bracket around the optimal shift b*: P(lo) fails, P(hi) holds.
struct ThresholdBracket {
    Rat lo;
    Rat hi;
    Rat epsilon;
    /// Set when b* is rational and was hit exactly; then hi == *exact.
    std::optional<Rat> exact;
    /// Index p in 1..n of the smallest f_p(hi) (first on ties); the binding
    /// constraint at the threshold. 0 for constant polynomials.
    std::size_t witness_index_p = 0;
    /// Indices k >= 1 with f_k(hi) == 0.
    std::vector<std::size_t> zero_indices_at_hi;
    /// f has no negative coefficient, so every b >= 0 works and b* = 0.
    /// The bracket collapses to lo = hi = 0.
    bool degenerate = false;
    Int initial_hi;
    std::size_t iterations = 0;
};

inline Rat default_threshold_epsilon() { return inverse_power_of_two(20); }

namespace detail {

inline void describe_hi(const ShiftTable& t, ThresholdBracket& out) {
    out.zero_indices_at_hi.clear();
    out.witness_index_p = 0;
    for (std::size_t k = 1; k < t.values.size(); ++k) {
        if (sgn(t.values[k]) == 0)
            out.zero_indices_at_hi.push_back(k);
        if (out.witness_index_p == 0 || t.values[k] < t.values[out.witness_index_p])
            out.witness_index_p = k;
    }
}

} // namespace detail

/// Bisection on P between 0 and Laguerre's integer shift until the bracket
/// is at most epsilon wide.
///
/// A tested point m where P holds and some f_k(m) == 0 is the threshold
/// itself: below m, f_k(b') = (b' - m)(positive) < 0. The bracket is then
/// reported as exact with lo = max(lo, m - epsilon), which still fails P.
inline ThresholdBracket optimal_threshold(const Poly& f, const Rat& epsilon = default_threshold_epsilon(),
                                          const SearchOptions& opts = {}) {
    require_positive_leading(f);
    if (sgn(epsilon) <= 0)
        throw Error(ErrorKind::InvalidArgument, "epsilon must be positive");

    ThresholdBracket out;
    out.epsilon = epsilon;

    ShiftTable at_zero = shift_table(f, Rat(0));
    if (scan_predicate(at_zero).holds) {
        out.lo = 0;
        out.hi = 0;
        out.exact = Rat(0);
        out.degenerate = true;
        out.initial_hi = 0;
        detail::describe_hi(at_zero, out);
        return out;
    }

    out.initial_hi = laguerre_integer_search(f, opts);
    Rat lo(0);
    Rat hi(out.initial_hi);
    ShiftTable hi_table = shift_table(f, hi);
    auto has_zero = [](const ShiftTable& t) {
        for (std::size_t k = 1; k < t.values.size(); ++k)
            if (sgn(t.values[k]) == 0)
                return true;
        return false;
    };

    const std::size_t cap = ceil_log2(hi / epsilon) + 1;
    if (has_zero(hi_table)) {
        out.exact = hi;
    } else {
        while (hi - lo > epsilon) {
            if (++out.iterations > cap)
                throw std::logic_error("threshold bisection exceeded its iteration cap");
            Rat mid = (lo + hi) / 2;
            ShiftTable t = shift_table(f, mid);
            if (scan_predicate(t).holds) {
                hi = mid;
                hi_table = std::move(t);
                if (has_zero(hi_table)) {
                    out.exact = hi;
                    break;
                }
            } else {
                lo = mid;
            }
        }
    }

    if (out.exact) {
        Rat floor_lo = hi - epsilon;
        if (floor_lo > lo)
            lo = floor_lo;
    }
    out.lo = lo;
    out.hi = hi;
    detail::describe_hi(hi_table, out);
    return out;
}

struct CertifyMode {
    enum class Kind { integer, real };
    Kind kind = Kind::integer;
    Rat epsilon = default_threshold_epsilon();

    static CertifyMode integer() { return {}; }
    static CertifyMode real(Rat eps = default_threshold_epsilon()) { return {Kind::real, std::move(eps)}; }
};

/// A certificate at the smallest integer shift, or at the upper end of the
/// optimal-threshold bracket.
inline Certificate certify_minimal(const Poly& f, const CertifyMode& mode = CertifyMode::integer(),
                                   const SearchOptions& opts = {}) {
    Rat b = mode.kind == CertifyMode::Kind::integer ? Rat(minimal_integer_shift(f, opts))
                                                    : optimal_threshold(f, mode.epsilon, opts).hi;
    Certificate c = certify_at(f, b);
    if (!c.verdict.ok())
        throw std::logic_error("search returned a shift that does not certify");
    return c;
}

} // namespace polycert

#endif // POLYCERT_SHIFT_SEARCH_HPP

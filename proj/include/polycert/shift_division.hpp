#ifndef POLYCERT_SHIFT_DIVISION_HPP
#define POLYCERT_SHIFT_DIVISION_HPP

// Division by the monic linear factor (x - b) through the coefficient
// polynomials f_0 = a_0, f_k(x) = x f_{k-1}(x) + a_k. Their values at b are
// the quotient coefficients f_0(b)..f_{n-1}(b) and the remainder f_n(b):
//
//     f(x) = (x - b)(f_0(b) x^{n-1} + ... + f_{n-1}(b)) + f_n(b).
//
// When every f_k(b), k >= 1, is nonnegative this identity is a positivity
// certificate: f(x) > 0 for all x > b.

#include <cstddef>
#include <string_view>
#include <vector>

#include "polycert/error.hpp"
#include "polycert/polynomial.hpp"
#include "polycert/rational.hpp"

namespace polycert {

struct ShiftTable {
    Rat shift;
    /// values[k] = f_k(shift), k = 0..n.
    std::vector<Rat> values;

    std::size_t degree() const { return values.size() - 1; }
};

/// Evaluates f_0..f_n at b.
inline ShiftTable shift_table(const Poly& f, const Rat& b) {
    if (f.is_zero())
        throw Error(ErrorKind::ZeroPolynomial, "shift table of the zero polynomial");
    const std::size_t n = f.degree();
    ShiftTable t{b, {}};
    t.values.reserve(n + 1);
    t.values.push_back(f.descending(0));
    for (std::size_t k = 1; k <= n; ++k)
        t.values.push_back(b * t.values.back() + f.descending(k));
    return t;
}

struct Verdict {
    enum class Kind { AllNonnegative, HasNegative };
    Kind kind = Kind::AllNonnegative;
    /// First offending index when kind == HasNegative. Index 0 means the
    /// leading quotient coefficient is not positive.
    std::size_t index = 0;

    static Verdict all_nonnegative() { return {}; }
    static Verdict has_negative(std::size_t i) { return {Kind::HasNegative, i}; }

    bool ok() const noexcept { return kind == Kind::AllNonnegative; }
    friend bool operator==(const Verdict&, const Verdict&) = default;
};

/// Scans (f_0(b), ..., f_n(b)): f_0 must be positive, the rest nonnegative.
/// Zeros are acceptable.
inline Verdict scan_values(const std::vector<Rat>& values) {
    if (!values.empty() && sgn(values[0]) <= 0)
        return Verdict::has_negative(0);
    for (std::size_t k = 1; k < values.size(); ++k)
        if (sgn(values[k]) < 0)
            return Verdict::has_negative(k);
    return Verdict::all_nonnegative();
}

struct Certificate {
    Poly input;
    Rat shift;
    /// f_0(b) .. f_{n-1}(b), descending powers of the quotient.
    std::vector<Rat> quotient;
    /// f_n(b).
    Rat remainder;
    Verdict verdict;

    Poly quotient_poly() const { return Poly::from_descending(quotient, input.variable()); }

    /// All values (f_0(b), ..., f_n(b)) in one sequence.
    std::vector<Rat> values() const {
        std::vector<Rat> v = quotient;
        v.push_back(remainder);
        return v;
    }
};

inline Certificate certify_at(const Poly& f, const Rat& b) {
    require_positive_leading(f);
    if (sgn(b) < 0)
        throw Error(ErrorKind::NegativeShift, "shift " + to_string(b) + " is negative");
    ShiftTable t = shift_table(f, b);
    Certificate c;
    c.input = f;
    c.shift = b;
    c.remainder = t.values.back();
    c.quotient.assign(t.values.begin(), t.values.end() - 1);
    c.verdict = scan_values(t.values);
    return c;
}

/// (x - b) * quotient + remainder, by ordinary polynomial multiplication.
inline Poly expand(const Certificate& cert) {
    const std::string& var = cert.input.variable();
    Poly linear(std::vector<Rat>{-cert.shift, Rat(1)}, var);
    return linear * cert.quotient_poly() + Poly::constant(cert.remainder, var);
}

enum class VerifyResult {
    Valid,
    IdentityMismatch,
    /// Claims AllNonnegative but a coefficient is negative (or the leading
    /// quotient coefficient is not positive).
    NegativeCoefficientClaimed,
    /// Claims HasNegative but the recorded index is not the first offender.
    VerdictMismatch,
};

inline std::string_view to_string(VerifyResult r) {
    switch (r) {
    case VerifyResult::Valid: return "Valid";
    case VerifyResult::IdentityMismatch: return "IdentityMismatch";
    case VerifyResult::NegativeCoefficientClaimed: return "NegativeCoefficientClaimed";
    case VerifyResult::VerdictMismatch: return "VerdictMismatch";
    }
    return "Unknown";
}

/// Re-expands the identity and re-scans the signs; nothing stored in the
/// certificate is trusted.
inline VerifyResult verify(const Certificate& cert) {
    if (cert.input.is_zero() || cert.quotient.size() != cert.input.degree())
        return VerifyResult::IdentityMismatch;
    if (!(expand(cert) == cert.input))
        return VerifyResult::IdentityMismatch;
    Verdict fresh = scan_values(cert.values());
    if (fresh == cert.verdict)
        return VerifyResult::Valid;
    if (cert.verdict.ok())
        return VerifyResult::NegativeCoefficientClaimed;
    return VerifyResult::VerdictMismatch;
}

} // namespace polycert

#endif // POLYCERT_SHIFT_DIVISION_HPP

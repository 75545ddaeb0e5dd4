#ifndef POLYCERT_POLYNOMIAL_HPP
#define POLYCERT_POLYNOMIAL_HPP

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "polycert/error.hpp"
#include "polycert/rational.hpp"

namespace polycert {

/// Dense univariate polynomial over exact rationals.
///
/// Storage is ascending by power: coefficients()[i] multiplies x^i. The
/// mathematical convention used by the certificate code is the descending
/// one, f(x) = a_0 x^n + a_1 x^{n-1} + ... + a_n, so `descending(j)` returns
/// a_j = coefficients()[n - j].
///
/// Invariant: the coefficient vector is nonempty and its last entry is
/// nonzero, except for the zero polynomial, stored as the single entry 0.
class Poly {
public:
    Poly() : coeffs_{Rat(0)} {}

    explicit Poly(std::vector<Rat> ascending, std::string variable = "x")
        : coeffs_(std::move(ascending)), variable_(std::move(variable)) {
        normalize();
    }

    static Poly from_descending(const std::vector<Rat>& descending, std::string variable = "x") {
        return Poly(std::vector<Rat>(descending.rbegin(), descending.rend()), std::move(variable));
    }

    static Poly from_descending(std::initializer_list<long> descending, std::string variable = "x") {
        std::vector<Rat> c;
        c.reserve(descending.size());
        for (long v : descending)
            c.emplace_back(v);
        return from_descending(c, std::move(variable));
    }

    static Poly constant(const Rat& c, std::string variable = "x") {
        return Poly(std::vector<Rat>{c}, std::move(variable));
    }

    /// The monomial x.
    static Poly identity(std::string variable = "x") {
        return Poly(std::vector<Rat>{Rat(0), Rat(1)}, std::move(variable));
    }

    const std::vector<Rat>& coefficients() const noexcept { return coeffs_; }
    const std::string& variable() const noexcept { return variable_; }
    void set_variable(std::string name) { variable_ = std::move(name); }

    bool is_zero() const noexcept { return coeffs_.size() == 1 && sgn(coeffs_[0]) == 0; }

    /// Coefficient of x^i; zero past the degree.
    Rat coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rat(0); }

    std::size_t degree() const {
        if (is_zero())
            throw Error(ErrorKind::ZeroPolynomial, "degree of the zero polynomial is undefined");
        return coeffs_.size() - 1;
    }

    const Rat& leading_coefficient() const {
        if (is_zero())
            throw Error(ErrorKind::ZeroPolynomial, "zero polynomial has no leading coefficient");
        return coeffs_.back();
    }

    /// a_j in descending notation, 0 <= j <= degree().
    const Rat& descending(std::size_t j) const { return coeffs_[coeffs_.size() - 1 - j]; }

    std::vector<Rat> descending_coefficients() const {
        return std::vector<Rat>(coeffs_.rbegin(), coeffs_.rend());
    }

    /// Horner evaluation.
    Rat operator()(const Rat& x) const {
        Rat acc(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
            acc = acc * x + *it;
        return acc;
    }

    Poly operator-() const {
        Poly r = *this;
        for (Rat& c : r.coeffs_)
            c = -c;
        return r;
    }

    Poly& operator+=(const Poly& g) {
        if (g.coeffs_.size() > coeffs_.size())
            coeffs_.resize(g.coeffs_.size(), Rat(0));
        for (std::size_t i = 0; i < g.coeffs_.size(); ++i)
            coeffs_[i] += g.coeffs_[i];
        normalize();
        return *this;
    }

    Poly& operator-=(const Poly& g) { return *this += -g; }

    Poly& operator*=(const Rat& c) {
        for (Rat& a : coeffs_)
            a *= c;
        normalize();
        return *this;
    }

    Poly& operator*=(const Poly& g) {
        *this = *this * g;
        return *this;
    }

    friend Poly operator+(Poly f, const Poly& g) { return f += g; }
    friend Poly operator-(Poly f, const Poly& g) { return f -= g; }
    friend Poly operator*(Poly f, const Rat& c) { return f *= c; }
    friend Poly operator*(const Rat& c, Poly f) { return f *= c; }

    friend Poly operator*(const Poly& f, const Poly& g) {
        if (f.is_zero() || g.is_zero())
            return Poly(std::vector<Rat>{Rat(0)}, f.variable_);
        std::vector<Rat> out(f.coeffs_.size() + g.coeffs_.size() - 1, Rat(0));
        for (std::size_t i = 0; i < f.coeffs_.size(); ++i) {
            if (sgn(f.coeffs_[i]) == 0)
                continue;
            for (std::size_t j = 0; j < g.coeffs_.size(); ++j)
                out[i + j] += f.coeffs_[i] * g.coeffs_[j];
        }
        return Poly(std::move(out), f.variable_);
    }

    /// Exact coefficient equality; the variable label is display-only.
    friend bool operator==(const Poly& f, const Poly& g) { return f.coeffs_ == g.coeffs_; }

private:
    void normalize() {
        while (coeffs_.size() > 1 && sgn(coeffs_.back()) == 0)
            coeffs_.pop_back();
        if (coeffs_.empty())
            coeffs_.emplace_back(0);
    }

    std::vector<Rat> coeffs_;
    std::string variable_ = "x";
};

// Free-function spellings of the ring operations.

inline Rat eval(const Poly& f, const Rat& x) { return f(x); }
inline Poly add(const Poly& f, const Poly& g) { return f + g; }
inline Poly mul(const Poly& f, const Poly& g) { return f * g; }
inline Poly scale(const Poly& f, const Rat& c) { return f * c; }
inline Poly neg(const Poly& f) { return -f; }
inline std::size_t degree(const Poly& f) { return f.degree(); }
inline Rat leading_coefficient(const Poly& f) { return f.leading_coefficient(); }

/// Integer power by repeated squaring.
inline Poly pow(Poly base, unsigned long exponent) {
    Poly result = Poly::constant(Rat(1), base.variable());
    while (exponent > 0) {
        if (exponent & 1u)
            result *= base;
        exponent >>= 1u;
        if (exponent > 0)
            base *= base;
    }
    return result;
}

/// Throws unless f is nonzero with a positive leading coefficient, the
/// standing hypothesis of every certificate-producing operation.
inline void require_positive_leading(const Poly& f) {
    if (f.is_zero())
        throw Error(ErrorKind::ZeroPolynomial, "certificates are undefined for the zero polynomial");
    if (sgn(f.leading_coefficient()) <= 0)
        throw Error(ErrorKind::NonpositiveLeadingCoefficient,
                    "leading coefficient " + to_string(f.leading_coefficient()) + " is not positive");
}

} // namespace polycert

#endif // POLYCERT_POLYNOMIAL_HPP

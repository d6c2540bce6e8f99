#ifndef CURVEZETA_POLYNOMIAL_HPP
#define CURVEZETA_POLYNOMIAL_HPP

// Dense univariate polynomials, coefficients stored low to high degree with no
// trailing zeros. The zero polynomial has no coefficients.

#include <curvezeta/integer.hpp>

#include <initializer_list>
#include <string>
#include <vector>

namespace curvezeta {

template <class Coeff>
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Coeff> coeffs) : c_(std::move(coeffs)) { trim(); }
    Poly(std::initializer_list<Coeff> coeffs) : c_(coeffs) { trim(); }
    static Poly constant(Coeff v) { return Poly(std::vector<Coeff>{std::move(v)}); }
    static Poly monomial(Coeff v, std::size_t deg) {
        std::vector<Coeff> c(deg + 1, Coeff(0));
        c[deg] = std::move(v);
        return Poly(std::move(c));
    }

    bool is_zero() const { return c_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const std::vector<Coeff>& coeffs() const { return c_; }
    Coeff coeff(std::size_t j) const { return j < c_.size() ? c_[j] : Coeff(0); }
    const Coeff& leading() const { return c_.back(); }

    friend Poly operator+(const Poly& p, const Poly& q) {
        std::vector<Coeff> r(std::max(p.c_.size(), q.c_.size()), Coeff(0));
        for (std::size_t j = 0; j < p.c_.size(); ++j) r[j] += p.c_[j];
        for (std::size_t j = 0; j < q.c_.size(); ++j) r[j] += q.c_[j];
        return Poly(std::move(r));
    }
    friend Poly operator-(const Poly& p) {
        std::vector<Coeff> r(p.c_);
        for (auto& x : r) x = -x;
        return Poly(std::move(r));
    }
    friend Poly operator-(const Poly& p, const Poly& q) { return p + (-q); }
    friend Poly operator*(const Poly& p, const Poly& q) {
        if (p.is_zero() || q.is_zero()) return {};
        std::vector<Coeff> r(p.c_.size() + q.c_.size() - 1, Coeff(0));
        for (std::size_t i = 0; i < p.c_.size(); ++i) {
            if (p.c_[i] == 0) continue;
            for (std::size_t j = 0; j < q.c_.size(); ++j) r[i + j] += p.c_[i] * q.c_[j];
        }
        return Poly(std::move(r));
    }
    friend Poly operator*(const Coeff& k, const Poly& p) {
        if (k == 0) return {};
        std::vector<Coeff> r(p.c_);
        for (auto& x : r) x *= k;
        return Poly(std::move(r));
    }
    friend bool operator==(const Poly& p, const Poly& q) { return p.c_ == q.c_; }

    Poly derivative() const {
        if (c_.size() <= 1) return {};
        std::vector<Coeff> r(c_.size() - 1);
        for (std::size_t j = 1; j < c_.size(); ++j) r[j - 1] = c_[j] * Coeff(static_cast<unsigned long>(j));
        return Poly(std::move(r));
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Coeff> c_;
};

using IntPoly = Poly<Integer>;
using RatPoly = Poly<Rational>;

/// gcd of the coefficients, nonnegative; 0 for the zero polynomial.
Integer content(const IntPoly& p);

/// p divided by a nonzero integer that divides every coefficient.
IntPoly exact_div(const IntPoly& p, const Integer& k);

/// Multiplies by (N s + nu).
IntPoly mul_linear(const IntPoly& p, const Integer& N, const Integer& nu);

/// True iff s = -nu/N (N > 0) is a root of p.
bool has_root(const IntPoly& p, const Integer& N, const Integer& nu);

/// p / (N s + nu); requires -nu/N to be a root and gcd(N, nu) = 1.
IntPoly div_linear(const IntPoly& p, const Integer& N, const Integer& nu);

/// Value of p at a rational point.
Rational evaluate(const IntPoly& p, const Rational& x);

/// Quotient and remainder over the rationals; divisor nonzero.
std::pair<RatPoly, RatPoly> divmod(const RatPoly& p, const RatPoly& q);

/// Monic gcd over the rationals (zero if both are zero).
RatPoly gcd(const RatPoly& p, const RatPoly& q);

/// Human-readable form in the variable var, highest degree first, e.g. "4s + 5".
std::string to_string(const IntPoly& p, const std::string& var);
std::string to_string(const RatPoly& p, const std::string& var);

}  // namespace curvezeta

#endif  // CURVEZETA_POLYNOMIAL_HPP

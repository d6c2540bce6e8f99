#include <curvezeta/polynomial.hpp>

#include <stdexcept>

namespace curvezeta {

Integer content(const IntPoly& p) {
    Integer g = 0;
    for (const auto& c : p.coeffs()) g = gcd(g, c);
    return g;
}

IntPoly exact_div(const IntPoly& p, const Integer& k) {
    std::vector<Integer> r(p.coeffs());
    for (auto& c : r) {
        if (!mpz_divisible_p(c.get_mpz_t(), k.get_mpz_t())) throw std::logic_error("inexact polynomial division by constant");
        mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), k.get_mpz_t());
    }
    return IntPoly(std::move(r));
}

IntPoly mul_linear(const IntPoly& p, const Integer& N, const Integer& nu) {
    if (p.is_zero()) return {};
    const auto& c = p.coeffs();
    std::vector<Integer> r(c.size() + 1, 0);
    for (std::size_t j = 0; j < c.size(); ++j) {
        r[j] += nu * c[j];
        r[j + 1] += N * c[j];
    }
    return IntPoly(std::move(r));
}

bool has_root(const IntPoly& p, const Integer& N, const Integer& nu) {
    if (p.is_zero()) return true;
    // N^d * p(-nu/N) by homogeneous Horner.
    const auto& c = p.coeffs();
    const std::size_t d = c.size() - 1;
    Integer acc = 0;
    Integer npow = 1;
    Integer neg_nu = -nu;
    for (std::size_t j = d + 1; j-- > 0;) {
        acc = acc * neg_nu + c[j] * npow;
        npow *= N;
    }
    return acc == 0;
}

IntPoly div_linear(const IntPoly& p, const Integer& N, const Integer& nu) {
    const auto& c = p.coeffs();
    if (c.size() < 2) throw std::logic_error("division of a constant by a linear factor");
    const std::size_t d = c.size() - 1;
    std::vector<Integer> q(d);
    Integer cur = c[d];
    for (std::size_t j = d; j >= 1; --j) {
        // q_{j-1} = (c_j - nu * q_j) / N with q_d = 0.
        if (!mpz_divisible_p(cur.get_mpz_t(), N.get_mpz_t())) throw std::logic_error("inexact division by linear factor");
        mpz_divexact(q[j - 1].get_mpz_t(), cur.get_mpz_t(), N.get_mpz_t());
        cur = c[j - 1] - nu * q[j - 1];
    }
    if (cur != 0) throw std::logic_error("linear factor does not divide polynomial");
    return IntPoly(std::move(q));
}

Rational evaluate(const IntPoly& p, const Rational& x) {
    Rational acc = 0;
    const auto& c = p.coeffs();
    for (std::size_t j = c.size(); j-- > 0;) acc = acc * x + Rational(c[j]);
    acc.canonicalize();
    return acc;
}

std::pair<RatPoly, RatPoly> divmod(const RatPoly& p, const RatPoly& q) {
    if (q.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<Rational> r(p.coeffs());
    const auto& d = q.coeffs();
    if (r.size() < d.size()) return {RatPoly{}, p};
    std::vector<Rational> quot(r.size() - d.size() + 1, Rational(0));
    for (std::size_t j = quot.size(); j-- > 0;) {
        Rational f = r[j + d.size() - 1] / d.back();
        quot[j] = f;
        for (std::size_t t = 0; t < d.size(); ++t) r[j + t] -= f * d[t];
    }
    r.resize(d.size() - 1);
    return {RatPoly(std::move(quot)), RatPoly(std::move(r))};
}

RatPoly gcd(const RatPoly& p, const RatPoly& q) {
    RatPoly a = p, b = q;
    while (!b.is_zero()) {
        auto r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    Rational lead = a.leading();
    return Rational(1 / lead) * a;
}

namespace {

template <class C>
std::string poly_str(const Poly<C>& p, const std::string& var) {
    if (p.is_zero()) return "0";
    std::string out;
    const auto& c = p.coeffs();
    for (std::size_t j = c.size(); j-- > 0;) {
        if (c[j] == 0) continue;
        C mag = c[j] < 0 ? C(-c[j]) : c[j];
        bool neg = c[j] < 0;
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        std::string m = to_string(mag);
        if (j == 0) {
            out += m;
        } else {
            if (mag != 1) out += m;
            out += var;
            if (j > 1) out += "^" + std::to_string(j);
        }
    }
    return out;
}

}  // namespace

std::string to_string(const IntPoly& p, const std::string& var) { return poly_str(p, var); }
std::string to_string(const RatPoly& p, const std::string& var) { return poly_str(p, var); }

}  // namespace curvezeta

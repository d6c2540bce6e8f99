#ifndef CURVEZETA_ZETA_HPP
#define CURVEZETA_ZETA_HPP

// Exact rational functions in s with factored linear denominators, and the
// closed-form local topological zeta functions.

#include <curvezeta/equitree.hpp>
#include <curvezeta/integer.hpp>
#include <curvezeta/polynomial.hpp>

#include <map>
#include <span>
#include <string>
#include <vector>

namespace curvezeta {

/// The linear form N*s + nu.
struct LinearFactor {
    Integer N;
    Integer nu;

    Rational root() const { return make_rational(-nu, N); }

    friend bool operator<(const LinearFactor& x, const LinearFactor& y) {
        int c = cmp(x.N, y.N);
        return c != 0 ? c < 0 : x.nu < y.nu;
    }
    friend bool operator==(const LinearFactor& x, const LinearFactor& y) { return x.N == y.N && x.nu == y.nu; }
};

/// numerator(s) / (den_constant * prod (N s + nu)^e).
///
/// Canonical form, restored after every operation: each denominator factor has
/// N >= 1, nu >= 1 and gcd(N, nu) = 1; den_constant >= 1 is coprime with the
/// numerator content; no denominator root is a root of the numerator. The zero
/// function has an empty numerator, constant 1 and no factors.
class RationalFunction {
public:
    RationalFunction() : den_constant_(1) {}
    explicit RationalFunction(const Integer& c) : RationalFunction(IntPoly::constant(c), 1, {}) {}
    RationalFunction(IntPoly numerator, Integer den_constant, std::map<LinearFactor, unsigned> factors);

    /// numerator / prod(factors); factors may repeat and may have N = 0.
    static RationalFunction term(IntPoly numerator, std::span<const LinearFactor> factors);
    static RationalFunction term(const Integer& coefficient, std::initializer_list<LinearFactor> factors);

    const IntPoly& numerator() const { return num_; }
    const Integer& den_constant() const { return den_constant_; }
    const std::map<LinearFactor, unsigned>& factors() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    /// Total degree of the denominator.
    long den_degree() const;

    friend RationalFunction operator+(const RationalFunction& x, const RationalFunction& y);
    friend RationalFunction operator-(const RationalFunction& x);
    friend RationalFunction operator-(const RationalFunction& x, const RationalFunction& y) { return x + (-y); }
    friend RationalFunction operator*(const RationalFunction& x, const RationalFunction& y);
    friend bool operator==(const RationalFunction& x, const RationalFunction& y) {
        return x.num_ == y.num_ && x.den_constant_ == y.den_constant_ && x.den_ == y.den_;
    }

    /// Division by a rational constant; throws std::domain_error on zero.
    RationalFunction divided_by(const Rational& c) const;

    /// Value at a point that is not a pole.
    Rational evaluate(const Rational& s) const;

    /// e.g. "(4s + 5)/((s + 1)(6s + 5))".
    std::string str() const;

private:
    void normalize();

    IntPoly num_;
    Integer den_constant_;
    std::map<LinearFactor, unsigned> den_;
};

RationalFunction rf_add(const RationalFunction& x, const RationalFunction& y);
RationalFunction rf_mul(const RationalFunction& x, const RationalFunction& y);
/// Canonical form of numerator / (den_constant * factors).
RationalFunction rf_normalize(IntPoly numerator, Integer den_constant, const std::map<LinearFactor, unsigned>& factors);

/// Pairwise (balanced) sum; keeps intermediate denominators small when
/// neighbouring terms share factors.
RationalFunction sum(std::vector<RationalFunction> terms);

struct Pole {
    Rational value;
    unsigned order;
    friend bool operator==(const Pole&, const Pole&) = default;
};

/// Poles with orders, sorted by value.
std::vector<Pole> poles(const RationalFunction& z);

/// One face (a, b) of a Newton polygon carrying r distinct simple roots.
struct FaceTriple {
    Integer a;
    Integer b;
    Integer r;
};

/// Closed form for Newton-nondegenerate germs. Faces strictly increasing in
/// slope, a, b >= 1 coprime, r >= 1; throws std::invalid_argument otherwise.
RationalFunction zeta_nondegenerate(std::span<const FaceTriple> faces);

/// Closed form over the bamboos of an annotated tree.
RationalFunction zeta_general(const AnnotatedTree& tree);

struct CandidatePole {
    Rational value;
    std::string bamboo_path;  // empty for the universal candidate -1
    std::size_t face = 0;     // 1-based principal index; 0 for the universal candidate
    bool universal() const { return bamboo_path.empty(); }
};

/// -nu(P_i)/N(P_i) for every principal vertex of every bamboo, then -1.
std::vector<CandidatePole> candidate_poles(const AnnotatedTree& tree);

enum class PoleOrderClass { AtMostOne, OrderTwoCandidate };

/// OrderTwoCandidate iff D_i = 0 for face i (1-based) of the given bamboo.
PoleOrderClass pole_order_predicate(const AnnotatedTree& tree, std::size_t bamboo, std::size_t face);

}  // namespace curvezeta

#endif  // CURVEZETA_ZETA_HPP

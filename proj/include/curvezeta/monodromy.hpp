#ifndef CURVEZETA_MONODROMY_HPP
#define CURVEZETA_MONODROMY_HPP

// Cyclotomic products prod_n (1 - t^n)^{e_n}, the monodromy zeta function,
// the characteristic polynomial of the monodromy on H^1 and the eigenvalue
// check behind the monodromy conjecture.

#include <curvezeta/equitree.hpp>
#include <curvezeta/integer.hpp>
#include <curvezeta/zeta.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

namespace curvezeta {

struct ResolutionGraph;

/// prod_n (1 - t^n)^{e_n}; zero exponents are never stored.
class CycloProduct {
public:
    CycloProduct() = default;

    /// Multiplies by (1 - t^n)^e.
    void multiply(std::uint64_t n, long e);
    void multiply(const Integer& n, long e) { multiply(to_u64(n), e); }

    const std::map<std::uint64_t, long>& factors() const { return e_; }
    long exponent(std::uint64_t n) const;
    bool is_one() const { return e_.empty(); }
    /// sum n * e_n
    long long degree() const;

    friend CycloProduct operator*(CycloProduct x, const CycloProduct& y);
    friend bool operator==(const CycloProduct&, const CycloProduct&) = default;

    /// e.g. "(1 - t^6)/((1 - t^2)(1 - t^3))".
    std::string str() const;

private:
    std::map<std::uint64_t, long> e_;
};

/// Multiplicity of a primitive d-th root of unity: sum of e_n over d | n.
long root_multiplicity(const CycloProduct& z, std::uint64_t d);

struct NotAPolynomial : std::domain_error {
    using std::domain_error::domain_error;
};

inline constexpr std::uint64_t kDefaultExpansionCap = 1'000'000;

struct CharPoly {
    CycloProduct cyclo;                          // (1 - t) * Z^mon
    std::optional<std::vector<Integer>> coeffs;  // expansion, low to high; absent above the cap
    std::uint64_t mu = 0;                        // degree, the Milnor number

    /// expanded[j] = +-expanded[mu - j] with one global sign.
    bool is_palindromic() const;
};

/// Exponents m_d in Delta = prod_d Phi_d^{m_d} (Phi_d the d-th cyclotomic
/// polynomial); zero entries omitted.
std::map<std::uint64_t, long> cyclotomic_multiplicities(const CycloProduct& z);

/// Euler's phi.
std::uint64_t euler_phi(std::uint64_t n);

/// Certificate that Delta is an integer polynomial, palindromic up to sign,
/// without expanding it: every m_d >= 0 and sum_d m_d phi(d) = mu. Phi_d is
/// reciprocal for d >= 2 and Phi_1 = t - 1 flips the sign, so the sign is
/// (-1)^{m_1}.
struct CyclotomicCertificate {
    bool valid = false;
    int palindrome_sign = 1;
};
CyclotomicCertificate cyclotomic_certificate(const CharPoly& delta);

/// (1 - t) * z, expanded when its degree is at most cap. Throws NotAPolynomial
/// when some primitive root of unity would have negative multiplicity.
CharPoly characteristic_poly(const CycloProduct& z, std::uint64_t cap = kDefaultExpansionCap);

long root_multiplicity(const CharPoly& delta, std::uint64_t d);

/// Closed form over the bamboos of an annotated tree.
CycloProduct monodromy_zeta(const AnnotatedTree& tree);

/// prod over exceptional divisors of (1 - t^N)^{-chi(E open)}.
CycloProduct acampo_from_graph(const ResolutionGraph& graph);

struct EigenvalueCheck {
    bool holds = false;
    std::uint64_t order = 0;  // order of exp(2 pi i theta)
    bool via_h0 = false;      // order 1: eigenvalue 1 on H^0
    long multiplicity = 0;    // root multiplicity in Delta
    std::vector<std::uint64_t> contributing;  // n with order | n and e_n != 0
};

/// Whether exp(2 pi i theta) is a monodromy eigenvalue.
EigenvalueCheck is_eigenvalue(const CharPoly& delta, const Rational& theta);
EigenvalueCheck is_eigenvalue(const AnnotatedTree& tree, const Rational& theta);

struct ConjectureReport {
    struct Verdict {
        Pole pole;
        EigenvalueCheck check;
    };
    std::vector<Verdict> verdicts;
    bool holds() const;
};

ConjectureReport verify_conjecture(const RationalFunction& zeta, const CharPoly& delta);
ConjectureReport verify_conjecture(const AnnotatedTree& tree);

}  // namespace curvezeta

#endif  // CURVEZETA_MONODROMY_HPP

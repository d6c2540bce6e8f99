#include <curvezeta/monodromy.hpp>
#include <curvezeta/resolution.hpp>

#include <set>

namespace curvezeta {

void CycloProduct::multiply(std::uint64_t n, long e) {
    if (n == 0) throw std::invalid_argument("cyclotomic factor 1 - t^0");
    if (e == 0) return;
    long& slot = e_[n];
    slot += e;
    if (slot == 0) e_.erase(n);
}

long CycloProduct::exponent(std::uint64_t n) const {
    auto it = e_.find(n);
    return it == e_.end() ? 0 : it->second;
}

long long CycloProduct::degree() const {
    long long d = 0;
    for (const auto& [n, e] : e_) d += static_cast<long long>(n) * e;
    return d;
}

CycloProduct operator*(CycloProduct x, const CycloProduct& y) {
    for (const auto& [n, e] : y.e_) x.multiply(n, e);
    return x;
}

std::string CycloProduct::str() const {
    auto factor = [](std::uint64_t n, long e) {
        std::string s = n == 1 ? "(1 - t)" : "(1 - t^" + std::to_string(n) + ")";
        if (e > 1) s += "^" + std::to_string(e);
        return s;
    };
    std::string num, den;
    std::size_t den_parts = 0;
    for (const auto& [n, e] : e_) {
        if (e > 0) {
            num += factor(n, e);
        } else {
            den += factor(n, -e);
            ++den_parts;
        }
    }
    if (num.empty()) num = "1";
    if (den.empty()) return num;
    if (den_parts > 1) den = "(" + den + ")";
    return num + "/" + den;
}

long root_multiplicity(const CycloProduct& z, std::uint64_t d) {
    if (d == 0) throw std::invalid_argument("root order must be positive");
    long m = 0;
    for (const auto& [n, e] : z.factors())
        if (n % d == 0) m += e;
    return m;
}

long root_multiplicity(const CharPoly& delta, std::uint64_t d) { return root_multiplicity(delta.cyclo, d); }

namespace {

std::vector<std::uint64_t> divisors(std::uint64_t n) {
    std::vector<std::uint64_t> small, large;
    for (std::uint64_t d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        small.push_back(d);
        if (d != n / d) large.push_back(n / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

// Power series of prod (1 - t^n)^{e_n} modulo t^(len). Returns false on int64
// overflow.
bool expand_i64(const CycloProduct& z, std::size_t len, std::vector<long long>& c) {
    c.assign(len, 0);
    c[0] = 1;
    for (const auto& [n, e] : z.factors()) {
        if (n >= len) continue;
        for (long t = 0; t < (e > 0 ? e : -e); ++t) {
            if (e > 0) {
                for (std::size_t j = len; j-- > n;)
                    if (__builtin_sub_overflow(c[j], c[j - n], &c[j])) return false;
            } else {
                for (std::size_t j = n; j < len; ++j)
                    if (__builtin_add_overflow(c[j], c[j - n], &c[j])) return false;
            }
        }
    }
    return true;
}

std::vector<Integer> expand_big(const CycloProduct& z, std::size_t len) {
    std::vector<Integer> c(len, 0);
    c[0] = 1;
    for (const auto& [n, e] : z.factors()) {
        if (n >= len) continue;
        for (long t = 0; t < (e > 0 ? e : -e); ++t) {
            if (e > 0) {
                for (std::size_t j = len; j-- > n;) c[j] -= c[j - n];
            } else {
                for (std::size_t j = n; j < len; ++j) c[j] += c[j - n];
            }
        }
    }
    return c;
}

}  // namespace

CharPoly characteristic_poly(const CycloProduct& z, std::uint64_t cap) {
    CharPoly out;
    out.cyclo = z;
    out.cyclo.multiply(1, 1);

    std::set<std::uint64_t> orders;
    for (const auto& [n, e] : out.cyclo.factors())
        for (auto d : divisors(n)) orders.insert(d);
    for (auto d : orders) {
        long m = root_multiplicity(out.cyclo, d);
        if (m < 0)
            throw NotAPolynomial("not a polynomial: primitive " + std::to_string(d) + "-th roots of unity have multiplicity " +
                                 std::to_string(m));
    }
    long long deg = out.cyclo.degree();
    if (deg < 0) throw NotAPolynomial("not a polynomial: negative degree");
    out.mu = static_cast<std::uint64_t>(deg);

    if (out.mu <= cap) {
        // The product is a polynomial of degree mu, so its power series
        // truncated after t^mu is exact.
        std::size_t len = static_cast<std::size_t>(out.mu) + 1;
        std::vector<long long> small;
        std::vector<Integer> big;
        if (expand_i64(out.cyclo, len, small)) {
            big.reserve(len);
            for (auto v : small) big.push_back(from_i64(v));
        } else {
            big = expand_big(out.cyclo, len);
        }
        out.coeffs = std::move(big);
    }
    return out;
}

bool CharPoly::is_palindromic() const {
    if (!coeffs) throw std::logic_error("palindrome check needs the expanded polynomial");
    const auto& c = *coeffs;
    const std::size_t n = c.size();
    if (n == 0 || c.back() == 0) return false;
    int sign = (c.front() == c.back()) ? 1 : (c.front() == -c.back() ? -1 : 0);
    if (sign == 0) return false;
    for (std::size_t j = 0; j < n; ++j)
        if (c[j] != sign * c[n - 1 - j]) return false;
    return true;
}

std::uint64_t euler_phi(std::uint64_t n) {
    std::uint64_t r = n;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        while (n % p == 0) n /= p;
        r -= r / p;
    }
    if (n > 1) r -= r / n;
    return r;
}

std::map<std::uint64_t, long> cyclotomic_multiplicities(const CycloProduct& z) {
    // 1 - t^n = -prod_{d | n} Phi_d(t)
    std::map<std::uint64_t, long> m;
    for (const auto& [n, e] : z.factors())
        for (auto d : divisors(n)) m[d] += e;
    std::erase_if(m, [](const auto& kv) { return kv.second == 0; });
    return m;
}

CyclotomicCertificate cyclotomic_certificate(const CharPoly& delta) {
    CyclotomicCertificate c;
    long long deg = 0;
    for (const auto& [d, m] : cyclotomic_multiplicities(delta.cyclo)) {
        if (m < 0) return c;
        deg += static_cast<long long>(euler_phi(d)) * m;
        if (d == 1 && m % 2) c.palindrome_sign = -1;
    }
    c.valid = deg >= 0 && static_cast<std::uint64_t>(deg) == delta.mu;
    return c;
}

CycloProduct monodromy_zeta(const AnnotatedTree& tree) {
    CycloProduct z;
    auto exact = [](const Integer& N, const Integer& d, const char* what) {
        if (!mpz_divisible_p(N.get_mpz_t(), d.get_mpz_t()))
            throw std::logic_error(std::string("inexact division for ") + what + ": " + N.get_str() + " / " + d.get_str());
        return Integer(N / d);
    };
    const auto& root = tree.root();
    z.multiply(exact(root.faces.front().N, root.faces.front().b, "N(T_1) = N(P_1)/b_1"), -1);
    for (const auto& bamboo : tree.bamboos()) {
        for (const auto& face : bamboo.faces) z.multiply(face.N, static_cast<long>(face.class_count()));
        const auto& last = bamboo.faces.back();
        z.multiply(exact(last.N, last.a, "N(T_m) = N(P_k)/a_k"), -1);
    }
    return z;
}

CycloProduct acampo_from_graph(const ResolutionGraph& graph) {
    CycloProduct z;
    for (const auto& node : graph.nodes) {
        if (node.kind != DivisorNode::Kind::Exceptional) continue;
        z.multiply(node.N, -node.chi_open);
    }
    return z;
}

EigenvalueCheck is_eigenvalue(const CharPoly& delta, const Rational& theta) {
    Rational q(theta);
    q.canonicalize();
    EigenvalueCheck c;
    c.order = to_u64(q.get_den());
    c.multiplicity = root_multiplicity(delta, c.order);
    for (const auto& [n, e] : delta.cyclo.factors())
        if (n % c.order == 0) c.contributing.push_back(n);
    c.via_h0 = c.order == 1;
    c.holds = c.via_h0 || c.multiplicity >= 1;
    return c;
}

EigenvalueCheck is_eigenvalue(const AnnotatedTree& tree, const Rational& theta) {
    return is_eigenvalue(characteristic_poly(monodromy_zeta(tree)), theta);
}

bool ConjectureReport::holds() const {
    for (const auto& v : verdicts)
        if (!v.check.holds) return false;
    return true;
}

ConjectureReport verify_conjecture(const RationalFunction& zeta, const CharPoly& delta) {
    ConjectureReport r;
    for (const auto& p : poles(zeta)) r.verdicts.push_back({p, is_eigenvalue(delta, p.value)});
    return r;
}

ConjectureReport verify_conjecture(const AnnotatedTree& tree) {
    return verify_conjecture(zeta_general(tree), characteristic_poly(monodromy_zeta(tree)));
}

}  // namespace curvezeta

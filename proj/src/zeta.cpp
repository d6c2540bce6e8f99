#include <curvezeta/zeta.hpp>

#include <algorithm>
#include <stdexcept>

namespace curvezeta {

RationalFunction::RationalFunction(IntPoly numerator, Integer den_constant, std::map<LinearFactor, unsigned> factors)
    : num_(std::move(numerator)), den_constant_(std::move(den_constant)) {
    if (den_constant_ == 0) throw std::domain_error("rational function with zero denominator");
    if (den_constant_ < 0) {
        den_constant_ = -den_constant_;
        num_ = -num_;
    }
    for (auto& [f, e] : factors) {
        if (e == 0) continue;
        Integer N = f.N, nu = f.nu;
        if (N == 0 && nu == 0) throw std::domain_error("linear factor 0*s + 0");
        if (N < 0 || (N == 0 && nu < 0)) {
            N = -N;
            nu = -nu;
            if (e % 2 == 1) num_ = -num_;
        }
        if (N == 0) {
            Integer p;
            mpz_pow_ui(p.get_mpz_t(), nu.get_mpz_t(), e);
            den_constant_ *= p;
            continue;
        }
        Integer g = gcd(N, nu);
        if (g != 1) {
            Integer p;
            mpz_pow_ui(p.get_mpz_t(), g.get_mpz_t(), e);
            den_constant_ *= p;
            N /= g;
            nu /= g;
        }
        den_[LinearFactor{N, nu}] += e;
    }
    normalize();
}

void RationalFunction::normalize() {
    if (num_.is_zero()) {
        den_.clear();
        den_constant_ = 1;
        return;
    }
    for (auto it = den_.begin(); it != den_.end();) {
        while (it->second > 0 && num_.degree() >= 1 && has_root(num_, it->first.N, it->first.nu)) {
            num_ = div_linear(num_, it->first.N, it->first.nu);
            --it->second;
        }
        it = it->second == 0 ? den_.erase(it) : std::next(it);
    }
    Integer g = gcd(content(num_), den_constant_);
    if (g != 1) {
        num_ = exact_div(num_, g);
        den_constant_ /= g;
    }
}

RationalFunction RationalFunction::term(IntPoly numerator, std::span<const LinearFactor> factors) {
    std::map<LinearFactor, unsigned> m;
    for (const auto& f : factors) ++m[f];
    return RationalFunction(std::move(numerator), 1, std::move(m));
}

RationalFunction RationalFunction::term(const Integer& coefficient, std::initializer_list<LinearFactor> factors) {
    return term(IntPoly::constant(coefficient), std::span<const LinearFactor>(factors.begin(), factors.size()));
}

long RationalFunction::den_degree() const {
    long d = 0;
    for (const auto& [f, e] : den_) d += e;
    return d;
}

namespace {

IntPoly times_factors(IntPoly p, const std::map<LinearFactor, unsigned>& have, const std::map<LinearFactor, unsigned>& want) {
    for (const auto& [f, e] : want) {
        auto it = have.find(f);
        unsigned missing = e - (it == have.end() ? 0u : it->second);
        for (unsigned t = 0; t < missing; ++t) p = mul_linear(p, f.N, f.nu);
    }
    return p;
}

}  // namespace

RationalFunction operator+(const RationalFunction& x, const RationalFunction& y) {
    if (x.is_zero()) return y;
    if (y.is_zero()) return x;
    std::map<LinearFactor, unsigned> common = x.den_;
    for (const auto& [f, e] : y.den_) common[f] = std::max(common[f], e);
    Integer L = lcm(x.den_constant_, y.den_constant_);
    IntPoly nx = Integer(L / x.den_constant_) * times_factors(x.num_, x.den_, common);
    IntPoly ny = Integer(L / y.den_constant_) * times_factors(y.num_, y.den_, common);
    RationalFunction r;
    r.num_ = nx + ny;
    r.den_constant_ = L;
    r.den_ = std::move(common);
    r.normalize();
    return r;
}

RationalFunction operator-(const RationalFunction& x) {
    RationalFunction r = x;
    r.num_ = -r.num_;
    return r;
}

RationalFunction operator*(const RationalFunction& x, const RationalFunction& y) {
    if (x.is_zero() || y.is_zero()) return {};
    RationalFunction r;
    r.num_ = x.num_ * y.num_;
    r.den_constant_ = x.den_constant_ * y.den_constant_;
    r.den_ = x.den_;
    for (const auto& [f, e] : y.den_) r.den_[f] += e;
    r.normalize();
    return r;
}

RationalFunction RationalFunction::divided_by(const Rational& c) const {
    if (c == 0) throw std::domain_error("division of a rational function by zero");
    Rational q(c);
    q.canonicalize();
    RationalFunction r = *this;
    r.num_ = q.get_den() * r.num_;
    r.den_constant_ *= q.get_num();
    if (r.den_constant_ < 0) {
        r.den_constant_ = -r.den_constant_;
        r.num_ = -r.num_;
    }
    r.normalize();
    return r;
}

Rational RationalFunction::evaluate(const Rational& s) const {
    Rational den = den_constant_;
    for (const auto& [f, e] : den_) {
        Rational v = f.N * s + f.nu;
        for (unsigned t = 0; t < e; ++t) den *= v;
    }
    if (den == 0) throw std::domain_error("evaluation at a pole");
    Rational r = curvezeta::evaluate(num_, s) / den;
    r.canonicalize();
    return r;
}

std::string RationalFunction::str() const {
    if (num_.is_zero()) return "0";
    std::string n = to_string(num_, "s");
    std::size_t terms = 0;
    for (const auto& c : num_.coeffs()) terms += c != 0;
    if (den_.empty() && den_constant_ == 1) return n;
    if (terms > 1) n = "(" + n + ")";

    std::string d;
    std::size_t parts = 0;
    if (den_constant_ != 1) {
        d += den_constant_.get_str();
        ++parts;
    }
    for (const auto& [f, e] : den_) {
        d += "(" + to_string(IntPoly{f.nu, f.N}, "s") + ")";
        if (e > 1) d += "^" + std::to_string(e);
        ++parts;
    }
    if (parts > 1) d = "(" + d + ")";
    return n + "/" + d;
}

RationalFunction rf_add(const RationalFunction& x, const RationalFunction& y) { return x + y; }
RationalFunction rf_mul(const RationalFunction& x, const RationalFunction& y) { return x * y; }
RationalFunction rf_normalize(IntPoly numerator, Integer den_constant, const std::map<LinearFactor, unsigned>& factors) {
    return RationalFunction(std::move(numerator), std::move(den_constant), factors);
}

RationalFunction sum(std::vector<RationalFunction> terms) {
    if (terms.empty()) return {};
    while (terms.size() > 1) {
        std::vector<RationalFunction> next;
        next.reserve((terms.size() + 1) / 2);
        for (std::size_t j = 0; j + 1 < terms.size(); j += 2) next.push_back(terms[j] + terms[j + 1]);
        if (terms.size() % 2 == 1) next.push_back(std::move(terms.back()));
        terms = std::move(next);
    }
    return std::move(terms.front());
}

std::vector<Pole> poles(const RationalFunction& z) {
    std::vector<Pole> out;
    for (const auto& [f, e] : z.factors()) out.push_back({f.root(), e});
    std::sort(out.begin(), out.end(), [](const Pole& p, const Pole& q) { return p.value < q.value; });
    return out;
}

namespace {

const LinearFactor kOne{0, 1};       // constant 1, the (N, nu) of the frame (0,1)
const LinearFactor kStrict{1, 1};    // s + 1, a strict-transform branch

Integer det2(const Integer& a, const Integer& b, const Integer& a2, const Integer& b2) { return a * b2 - b * a2; }

}  // namespace

RationalFunction zeta_nondegenerate(std::span<const FaceTriple> faces) {
    const std::size_t k = faces.size();
    if (k == 0) throw std::invalid_argument("nondegenerate zeta needs at least one face");
    for (std::size_t i = 0; i < k; ++i) {
        const auto& f = faces[i];
        if (f.a < 1 || f.b < 1) throw std::invalid_argument("face normal must have a, b >= 1");
        if (gcd(f.a, f.b) != 1) throw std::invalid_argument("face normal is not primitive");
        if (f.r < 1) throw std::invalid_argument("face must carry r >= 1 roots");
        if (i > 0 && det2(faces[i - 1].a, faces[i - 1].b, f.a, f.b) <= 0)
            throw std::invalid_argument("faces not strictly increasing in slope");
    }
    // P_0 = (1,0), P_{k+1} = (0,1), both with N = 0, nu = 1.
    std::vector<Integer> a(k + 2), b(k + 2);
    std::vector<LinearFactor> L(k + 2, kOne);
    a[0] = 1;
    b[0] = 0;
    a[k + 1] = 0;
    b[k + 1] = 1;
    for (std::size_t i = 1; i <= k; ++i) {
        a[i] = faces[i - 1].a;
        b[i] = faces[i - 1].b;
        Integer lower = 0, upper = 0;
        for (std::size_t t = 1; t <= i; ++t) lower += faces[t - 1].r * faces[t - 1].b;
        for (std::size_t t = i + 1; t <= k; ++t) upper += faces[t - 1].r * faces[t - 1].a;
        L[i] = LinearFactor{a[i] * lower + b[i] * upper, a[i] + b[i]};
    }
    std::vector<RationalFunction> terms;
    for (std::size_t i = 0; i <= k; ++i)
        terms.push_back(RationalFunction::term(det2(a[i], b[i], a[i + 1], b[i + 1]), {L[i], L[i + 1]}));
    for (std::size_t i = 1; i <= k; ++i) {
        // -r_i s / ((s + 1)(N s + nu))
        LinearFactor fs[] = {kStrict, L[i]};
        terms.push_back(RationalFunction::term(IntPoly{Integer(0), Integer(-faces[i - 1].r)}, fs));
    }
    return sum(std::move(terms));
}

RationalFunction zeta_general(const AnnotatedTree& tree) {
    std::vector<RationalFunction> terms;
    for (const auto& bamboo : tree.bamboos()) {
        const auto& faces = bamboo.faces;
        const std::size_t k = faces.size();
        LinearFactor root{bamboo.N_root, bamboo.nu_root};
        auto factor = [&](std::size_t i) { return LinearFactor{faces[i].N, faces[i].nu}; };

        terms.push_back(RationalFunction::term(faces[0].b, {root, factor(0)}));
        for (std::size_t i = 0; i < k; ++i) {
            if (i + 1 < k) {
                terms.push_back(RationalFunction::term(det2(faces[i].a, faces[i].b, faces[i + 1].a, faces[i + 1].b),
                                                       {factor(i), factor(i + 1)}));
            } else {
                // det(P_k, (0,1)) = a_k against the frame with (N, nu) = (0, 1).
                terms.push_back(RationalFunction::term(faces[i].a, {factor(i), kOne}));
            }
            terms.push_back(RationalFunction::term(-Integer(faces[i].class_count()), {factor(i)}));
            for (const auto& succ : faces[i].successors) {
                if (!succ) terms.push_back(RationalFunction::term(1, {factor(i), kStrict}));
            }
        }
    }
    return sum(std::move(terms));
}

std::vector<CandidatePole> candidate_poles(const AnnotatedTree& tree) {
    std::vector<CandidatePole> out;
    for (const auto& bamboo : tree.bamboos()) {
        for (std::size_t i = 0; i < bamboo.faces.size(); ++i)
            out.push_back({make_rational(-bamboo.faces[i].nu, bamboo.faces[i].N), bamboo.display_path(), i + 1});
    }
    out.push_back({Rational(-1), "", 0});
    return out;
}

PoleOrderClass pole_order_predicate(const AnnotatedTree& tree, std::size_t bamboo, std::size_t face) {
    const auto& b = tree.bamboos().at(bamboo);
    if (face < 1 || face > b.faces.size()) throw std::out_of_range("face index out of range");
    return b.D[face] == 0 ? PoleOrderClass::OrderTwoCandidate : PoleOrderClass::AtMostOne;
}

}  // namespace curvezeta

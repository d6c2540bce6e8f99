#include <curvezeta/frontend.hpp>

#include <algorithm>
#include <cctype>
#include <limits>
#include <numeric>

namespace curvezeta {

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : s_(text) {}

    SparsePoly run() {
        std::map<Exponent, Rational> acc;
        skip_ws();
        if (at_end()) throw ParseError(pos_, "empty input");
        bool first = true;
        while (true) {
            skip_ws();
            int sign = 1;
            if (!at_end() && (peek() == '+' || peek() == '-')) {
                sign = peek() == '-' ? -1 : 1;
                ++pos_;
            } else if (!first) {
                throw ParseError(pos_, "expected '+' or '-'");
            }
            first = false;
            auto [exp, coef] = term();
            acc[exp] += sign * coef;
            skip_ws();
            if (at_end()) break;
            if (peek() != '+' && peek() != '-') throw ParseError(pos_, std::string("unexpected character '") + peek() + "'");
        }
        SparsePoly f;
        for (auto& [e, c] : acc) {
            c.canonicalize();
            if (c != 0) f.terms.emplace(e, c);
        }
        if (f.terms.empty()) throw ParseError(0, "zero polynomial");
        if (f.terms.count({0, 0})) throw ParseError(0, "constant term: f(0,0) must vanish");
        return f;
    }

private:
    bool at_end() const { return pos_ >= s_.size(); }
    char peek() const { return s_[pos_]; }
    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }
    bool digit() const { return !at_end() && std::isdigit(static_cast<unsigned char>(peek())); }

    Integer integer() {
        if (!digit()) throw ParseError(pos_, "expected an integer");
        std::size_t start = pos_;
        while (digit()) ++pos_;
        return Integer(std::string(s_.substr(start, pos_ - start)));
    }

    std::int64_t exponent() {
        std::size_t at = pos_;
        Integer v = integer();
        if (v > std::numeric_limits<std::int64_t>::max() / 4) throw ParseError(at, "exponent too large");
        return static_cast<std::int64_t>(v.get_si());
    }

    // Returns the exponent of a variable factor, or -1 when absent.
    std::int64_t variable(char name, bool& star_pending) {
        skip_ws();
        if (at_end() || peek() != name) return -1;
        ++pos_;
        star_pending = false;
        std::int64_t e = 1;
        skip_ws();
        if (!at_end() && peek() == '^') {
            ++pos_;
            skip_ws();
            e = exponent();
        }
        skip_ws();
        if (!at_end() && peek() == '*') {
            ++pos_;
            star_pending = true;
        }
        return e;
    }

    std::pair<Exponent, Rational> term() {
        skip_ws();
        const std::size_t start = pos_;
        Rational coef = 1;
        bool any = false;
        bool star_pending = false;
        if (digit()) {
            Integer num = integer();
            Integer den = 1;
            skip_ws();
            if (!at_end() && peek() == '/') {
                ++pos_;
                skip_ws();
                std::size_t at = pos_;
                den = integer();
                if (den == 0) throw ParseError(at, "zero denominator");
            }
            coef = make_rational(num, den);
            any = true;
            skip_ws();
            if (!at_end() && peek() == '*') {
                ++pos_;
                star_pending = true;
            }
        }
        std::int64_t ex = variable('x', star_pending);
        std::int64_t ey = variable('y', star_pending);
        if (star_pending) throw ParseError(pos_, "dangling '*'");
        if (!any && ex < 0 && ey < 0) {
            if (!at_end() && peek() == '(') throw ParseError(pos_, "parentheses are not supported");
            throw ParseError(start, "expected a term");
        }
        return {{std::max<std::int64_t>(ex, 0), std::max<std::int64_t>(ey, 0)}, coef};
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace

SparsePoly parse_poly(std::string_view text) { return Parser(text).run(); }

std::string to_string(const SparsePoly& f) {
    std::vector<std::pair<Exponent, Rational>> terms(f.terms.begin(), f.terms.end());
    std::sort(terms.begin(), terms.end(), [](const auto& p, const auto& q) {
        auto dp = p.first.first + p.first.second, dq = q.first.first + q.first.second;
        if (dp != dq) return dp > dq;
        return p.first.first > q.first.first;
    });
    std::string out;
    for (const auto& [e, c] : terms) {
        bool neg = c < 0;
        Rational mag = neg ? Rational(-c) : c;
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        std::vector<std::string> parts;
        if (e.first > 0) parts.push_back(e.first == 1 ? "x" : "x^" + std::to_string(e.first));
        if (e.second > 0) parts.push_back(e.second == 1 ? "y" : "y^" + std::to_string(e.second));
        std::string mono;
        for (std::size_t j = 0; j < parts.size(); ++j) mono += (j ? "*" : "") + parts[j];
        if (mag != 1) out += to_string(mag) + (mono.empty() ? "" : "*");
        out += mono;
    }
    return out;
}

std::vector<NewtonFace> newton_faces(const SparsePoly& f) {
    std::optional<std::int64_t> alpha0, beta0;
    for (const auto& [e, c] : f.terms) {
        if (e.second == 0 && (!alpha0 || e.first < *alpha0)) alpha0 = e.first;
        if (e.first == 0 && (!beta0 || e.second < *beta0)) beta0 = e.second;
    }
    if (!alpha0 || !beta0)
        throw FrontendError("polynomial is divisible by x or y; divide out the monomial factor x^r*y^s first");

    // Lowest point per column in [0, alpha0]; the compact faces are the lower
    // hull of these from (0, beta0) to (alpha0, 0).
    std::map<std::int64_t, std::int64_t> lowest;
    for (const auto& [e, c] : f.terms) {
        if (e.first > *alpha0) continue;
        auto [it, fresh] = lowest.emplace(e.first, e.second);
        if (!fresh && e.second < it->second) it->second = e.second;
    }
    auto cross = [](const Exponent& o, const Exponent& a, const Exponent& b) -> Integer {
        return Integer(a.first - o.first) * Integer(b.second - o.second) -
               Integer(a.second - o.second) * Integer(b.first - o.first);
    };
    std::vector<Exponent> hull;
    for (const auto& p : lowest) {
        while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), p) <= 0) hull.pop_back();
        hull.push_back(p);
    }

    std::vector<NewtonFace> faces;
    for (std::size_t j = 0; j + 1 < hull.size(); ++j) {
        const auto& [a1, b1] = hull[j];
        const auto& [a2, b2] = hull[j + 1];
        std::int64_t da = a2 - a1, db = b1 - b2;
        std::int64_t g = std::gcd(da, db);
        std::int64_t na = db / g, nb = da / g;
        NewtonFace face{PrimitiveVector(na, nb), {}, {}};
        std::vector<Rational> coeffs;
        for (std::int64_t t = 0; t <= g; ++t) {
            Exponent p{a1 + t * nb, b1 - t * na};
            face.lattice_points.push_back(p);
            auto it = f.terms.find(p);
            coeffs.push_back(it == f.terms.end() ? Rational(0) : it->second);
        }
        face.face_poly = RatPoly(std::move(coeffs));
        faces.push_back(std::move(face));
    }
    return faces;
}

NondegeneracyResult nondegeneracy_check(const std::vector<NewtonFace>& faces) {
    for (std::size_t i = 0; i < faces.size(); ++i) {
        RatPoly g = gcd(faces[i].face_poly, faces[i].face_poly.derivative());
        if (g.degree() >= 1) return {false, i, g};
    }
    return {};
}

std::vector<FaceTriple> to_face_specs(const std::vector<NewtonFace>& faces) {
    auto check = nondegeneracy_check(faces);
    if (!check.nondegenerate)
        throw FrontendError("degenerate face " + std::to_string(check.face) + ": gcd(G, G') = " + to_string(check.witness, "z"));
    std::vector<FaceTriple> out;
    for (const auto& f : faces) out.push_back({f.normal.a(), f.normal.b(), Integer(f.face_poly.degree())});
    return out;
}

AnnotatedTree nondegenerate_tree(const std::vector<FaceTriple>& specs) {
    std::vector<std::tuple<Integer, Integer, Integer>> faces;
    for (const auto& s : specs) faces.emplace_back(s.a, s.b, s.r);
    return annotate_unchecked(all_leaf_bamboo(faces));
}

ResolutionGraph build_graph_nondegenerate(const std::vector<FaceTriple>& specs, BuildStrategy strategy) {
    return build_graph(nondegenerate_tree(specs), strategy);
}

}  // namespace curvezeta

#include <curvezeta/lattice.hpp>

#include <algorithm>

namespace curvezeta {

PrimitiveVector::PrimitiveVector(Integer a, Integer b) : a_(std::move(a)), b_(std::move(b)) {
    if (a_ < 0 || b_ < 0) throw LatticeError("primitive vector " + str() + " leaves the positive quadrant");
    if (a_ == 0 && b_ == 0) throw LatticeError("primitive vector (0,0) is not allowed");
    if (gcd(a_, b_) != 1) throw LatticeError("vector " + str() + " is not primitive");
}

std::string PrimitiveVector::str() const { return "(" + a_.get_str() + "," + b_.get_str() + ")"; }

PrimitiveVector primitive_part(const Integer& a, const Integer& b) {
    Integer g = gcd(a, b);
    if (g == 0) throw LatticeError("primitive vector (0,0) is not allowed");
    return {Integer(a / g), Integer(b / g)};
}

Integer det(const PrimitiveVector& p, const PrimitiveVector& q) { return p.a() * q.b() - p.b() * q.a(); }

bool slope_less(const PrimitiveVector& p, const PrimitiveVector& q) { return det(p, q) > 0; }

std::vector<PrimitiveVector> minimal_regular_refinement(const PrimitiveVector& u, const PrimitiveVector& v) {
    Integer n = det(u, v);
    if (n <= 0) throw LatticeError("refinement needs det(U,V) >= 1, got det" + u.str() + v.str() + " = " + n.get_str());

    std::vector<PrimitiveVector> out;
    PrimitiveVector cur = u;
    while (n > 1) {
        // w0 with det(cur, w0) = 1 from a*s + b*t = 1.
        Integer g, s, t;
        mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), cur.a().get_mpz_t(), cur.b().get_mpz_t());
        Integer x0 = -t, y0 = s;
        // Level-1 points are w0 + k*cur; det(w, v) = det(w0, v) + k*n. Take the
        // representative with det(w, v) in [0, n).
        Integer d0 = x0 * v.b() - y0 * v.a();
        Integer k;
        mpz_cdiv_q(k.get_mpz_t(), Integer(-d0).get_mpz_t(), n.get_mpz_t());
        Integer wa = x0 + k * cur.a();
        Integer wb = y0 + k * cur.b();
        PrimitiveVector w(wa, wb);
        Integer next = det(w, v);
        out.push_back(w);
        cur = w;
        n = next;
    }
    return out;
}

Subdivision::Subdivision(std::vector<PrimitiveVector> vectors) : vectors_(std::move(vectors)) {
    auto all = with_frames();
    for (std::size_t j = 0; j + 1 < all.size(); ++j) {
        if (det(all[j], all[j + 1]) != 1)
            throw LatticeError("subdivision is not regular at " + all[j].str() + ", " + all[j + 1].str());
    }
}

std::size_t Subdivision::find(const PrimitiveVector& v) const {
    auto it = std::find(vectors_.begin(), vectors_.end(), v);
    return it == vectors_.end() ? npos : static_cast<std::size_t>(it - vectors_.begin());
}

std::vector<PrimitiveVector> Subdivision::with_frames() const {
    std::vector<PrimitiveVector> all;
    all.reserve(vectors_.size() + 2);
    all.push_back(PrimitiveVector::frame_x());
    all.insert(all.end(), vectors_.begin(), vectors_.end());
    all.push_back(PrimitiveVector::frame_y());
    return all;
}

namespace {

std::vector<PrimitiveVector> regularize(const std::vector<PrimitiveVector>& rays) {
    // rays include both frames and are strictly increasing.
    std::vector<PrimitiveVector> out;
    for (std::size_t j = 0; j + 1 < rays.size(); ++j) {
        if (j > 0) out.push_back(rays[j]);
        auto fill = minimal_regular_refinement(rays[j], rays[j + 1]);
        out.insert(out.end(), fill.begin(), fill.end());
    }
    return out;
}

}  // namespace

Subdivision admissible_subdivision(std::span<const PrimitiveVector> principal) {
    std::vector<PrimitiveVector> rays;
    rays.push_back(PrimitiveVector::frame_x());
    for (std::size_t i = 0; i < principal.size(); ++i) {
        const auto& p = principal[i];
        if (p.a() < 1 || p.b() < 1) throw LatticeError("principal vector " + p.str() + " must have a >= 1 and b >= 1");
        if (i > 0 && !slope_less(principal[i - 1], p))
            throw LatticeError("principal vectors not strictly increasing at " + principal[i - 1].str() + ", " + p.str());
        rays.push_back(p);
    }
    rays.push_back(PrimitiveVector::frame_y());
    return Subdivision(regularize(rays));
}

Subdivision insert_rays(const Subdivision& sub, std::span<const PrimitiveVector> extra) {
    auto rays = sub.with_frames();
    for (const auto& r : extra) {
        if (std::find(rays.begin(), rays.end(), r) != rays.end())
            throw LatticeError("ray " + r.str() + " is already in the subdivision");
        auto pos = std::find_if(rays.begin() + 1, rays.end(), [&](const PrimitiveVector& q) { return slope_less(r, q); });
        rays.insert(pos, r);
    }
    return Subdivision(regularize(rays));
}

}  // namespace curvezeta

#ifndef CURVEZETA_LATTICE_HPP
#define CURVEZETA_LATTICE_HPP

// Primitive weight vectors of the positive quadrant and regular simplicial
// subdivisions of it.

#include <curvezeta/integer.hpp>

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace curvezeta {

struct LatticeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A lattice vector (a, b) with a, b >= 0, not both zero, gcd(a, b) = 1.
class PrimitiveVector {
public:
    PrimitiveVector(Integer a, Integer b);
    PrimitiveVector(long a, long b) : PrimitiveVector(Integer(a), Integer(b)) {}

    static PrimitiveVector frame_x() { return {1L, 0L}; }  // (1,0)
    static PrimitiveVector frame_y() { return {0L, 1L}; }  // (0,1)

    const Integer& a() const { return a_; }
    const Integer& b() const { return b_; }

    friend bool operator==(const PrimitiveVector& p, const PrimitiveVector& q) {
        return p.a_ == q.a_ && p.b_ == q.b_;
    }

    std::string str() const;

private:
    Integer a_;
    Integer b_;
};

/// Returns gcd-reduced (a, b); a, b >= 0 and not both zero.
PrimitiveVector primitive_part(const Integer& a, const Integer& b);

/// det((a,b),(a',b')) = a*b' - b*a'.
Integer det(const PrimitiveVector& p, const PrimitiveVector& q);

/// P < Q iff det(P, Q) > 0, i.e. Q has the larger slope b/a.
bool slope_less(const PrimitiveVector& p, const PrimitiveVector& q);

/// The vectors strictly between U and V on the compact boundary of the convex
/// hull of nonzero lattice points in cone(U, V). Consecutive determinants along
/// U, W_1, ..., W_r, V are all 1. Throws LatticeError if det(U, V) <= 0.
std::vector<PrimitiveVector> minimal_regular_refinement(const PrimitiveVector& u,
                                                        const PrimitiveVector& v);

/// Regular simplicial subdivision T_1 < ... < T_m of the positive quadrant,
/// frames (1,0) and (0,1) excluded.
class Subdivision {
public:
    Subdivision() = default;
    /// Throws LatticeError unless all consecutive determinants, frames
    /// included, equal 1.
    explicit Subdivision(std::vector<PrimitiveVector> vectors);

    const std::vector<PrimitiveVector>& vectors() const { return vectors_; }
    std::size_t size() const { return vectors_.size(); }
    const PrimitiveVector& operator[](std::size_t j) const { return vectors_[j]; }

    /// Index of v among the vectors, or npos.
    std::size_t find(const PrimitiveVector& v) const;
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    /// Frame-augmented list (1,0), T_1, ..., T_m, (0,1).
    std::vector<PrimitiveVector> with_frames() const;

private:
    std::vector<PrimitiveVector> vectors_;
};

/// Minimal regular subdivision containing the principal vectors, which must be
/// strictly increasing in slope with a >= 1 and b >= 1.
Subdivision admissible_subdivision(std::span<const PrimitiveVector> principal);

/// Adds rays lying strictly inside cones of sub and re-regularizes the
/// affected cones. Throws LatticeError on a duplicate ray.
Subdivision insert_rays(const Subdivision& sub, std::span<const PrimitiveVector> extra);

}  // namespace curvezeta

#endif  // CURVEZETA_LATTICE_HPP

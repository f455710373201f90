#ifndef GP_PICARD_HPP
#define GP_PICARD_HPP

#include <cstdint>
#include <vector>

#include "gp/chain_graph.hpp"

namespace gp {

// Picard class of a divisor on the chain: total degree plus one angle per
// loop.  theta_i is the pushforward of the divisor to the i-th circle: points
// left of loop i land at 0, points right of it at m_i, interior points at
// their own coordinate; everything taken mod L_i.  Two divisors are linearly
// equivalent iff they have the same ClassData.
struct ClassData {
    long long d{0};
    std::vector<Rational> theta; // theta_i in [0, L_i), indexed from loop 1

    friend bool operator==(const ClassData& a, const ClassData& b) = default;
};

// v_0-reduced form of a class: d0 chips at v_0 (negative iff the class has no
// effective representative) plus at most one chip per loop, at counterclockwise
// offset x_i from v_{i-1}; x_i = 0 means no chip on loop i.
struct ReducedRep {
    long long d0{0};
    std::vector<Rational> x;

    friend bool operator==(const ReducedRep& a, const ReducedRep& b) = default;
};

ClassData class_of(const ChainGraph& G, const Divisor& D);

// Right-to-left peeling: x_i = (theta_i - m_i * r_i) mod L_i with r_i the
// number of chips already placed on loops > i, then d0 = d - #chips.
ReducedRep reduce_v0(const ChainGraph& G, const ClassData& c);

// A class is equivalent to an effective divisor iff its reduced d0 >= 0.
bool is_effective_class(const ChainGraph& G, const ClassData& c);

// Inverse of the (d0, x) encoding: d0 chips at v_0 (possibly a negative
// coefficient) plus the loop chips.
Divisor realize(const ChainGraph& G, const ReducedRep& R);

// Class of a - b computed anglewise (degree subtracts, angles subtract mod L).
ClassData class_sub(const ChainGraph& G, const ClassData& a, const ClassData& b);
ClassData class_scale(const ChainGraph& G, long long k, const ClassData& c);

// ---------------------------------------------------------------------------
// Symbolic angle algebra.
//
// An angle on loop i is either a known small multiple of m_i (MultM(c),
// meaning c * m_i mod L_i) or a position off that lattice (Generic, carrying
// an opaque tag so derived values stay distinguishable).  Genericity makes
// MultM injective while |c|, |c'| and |c - c'| stay within B = 2g - 2; any
// arithmetic leaving that range raises BoundExceeded and the caller falls
// back to concrete rational arithmetic on a reference instance.
// ---------------------------------------------------------------------------

struct SymAngle {
    enum class Kind { mult_m, generic };

    Kind kind{Kind::mult_m};
    long long c{0};        // multiplier, meaningful for mult_m
    std::uint64_t tag{0};  // provenance tag, meaningful for generic

    static SymAngle mult(long long c) { return SymAngle{Kind::mult_m, c, 0}; }
    static SymAngle generic(std::uint64_t tag) { return SymAngle{Kind::generic, 0, tag}; }

    bool is_mult() const { return kind == Kind::mult_m; }
    bool is_generic() const { return kind == Kind::generic; }

    friend bool operator==(const SymAngle& a, const SymAngle& b) = default;
};

struct SymClass {
    long long d{0};
    std::vector<SymAngle> theta;

    friend bool operator==(const SymClass& a, const SymClass& b) = default;
};

struct SymReducedRep {
    long long d0{0};
    std::vector<SymAngle> x; // MultM(0) = no chip; anything else carries a chip
};

// Deterministic tag derivation for angles produced by symbolic arithmetic.
std::uint64_t derive_tag(std::uint64_t tag, std::uint64_t op);

// Raises BoundExceeded unless |c| <= 2g - 2.
void check_bound(long long c, int genus);

// Symbolic class of the canonical divisor: degree 2g-2, theta_i = 2(g-i) m_i.
SymClass sym_class_of_K(const ChainGraph& G);
SymClass sym_class_of_K(int genus);

// Class of K - 2D in the symbolic algebra.
SymClass sym_residual(const ChainGraph& G, const SymClass& K, const SymClass& D);
SymClass sym_residual(int genus, const SymClass& K, const SymClass& D);

// Same peeling recurrence as reduce_v0, evaluated symbolically: a MultM angle
// subtracts its chip count exactly, a Generic angle always yields x_i != 0.
SymReducedRep sym_reduce_v0(const ChainGraph& G, const SymClass& c);
SymReducedRep sym_reduce_v0(int genus, const SymClass& c);

bool is_effective_sym_class(int genus, const SymClass& c);

// Concrete value of a symbolic angle on a given graph: MultM(c) -> c*m_i mod
// L_i; Generic -> m_i*(2g-1)/2 mod L_i, an off-lattice position on the
// reference instance.
Rational instantiate_angle(const ChainGraph& G, int loop, const SymAngle& a);

} // namespace gp

#endif // GP_PICARD_HPP

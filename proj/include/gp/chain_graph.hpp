#ifndef GP_CHAIN_GRAPH_HPP
#define GP_CHAIN_GRAPH_HPP

#include <compare>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "gp/rational.hpp"

namespace gp {

// The chain of g loops: vertices v_0,...,v_g, loop i joining v_{i-1} and v_i
// by two arcs of (exact rational) lengths ell_i and m_i.  Loop indices are
// 1-based throughout; vertex indices run 0..g.
//
// Coordinate convention on loop i: t in [0, L_i) is the counterclockwise
// distance from v_{i-1}, with v_i sitting at t = m_i.  The m-arc is [0, m_i],
// the ell-arc is [m_i, L_i].
class ChainGraph {
  public:
    struct Loop {
        Rational ell;
        Rational m;
    };

    ChainGraph(int genus, std::vector<std::pair<Rational, Rational>> loop_lengths);

    int genus() const { return g_; }
    const Rational& ell(int loop) const { return loops_.at(loop - 1).ell; }
    const Rational& m(int loop) const { return loops_.at(loop - 1).m; }
    // L_i = ell_i + m_i.
    Rational circumference(int loop) const;

    // True iff no ratio ell_i/m_i equals p/q for positive integers p, q with
    // p + q <= 2g - 2.
    bool is_generic() const;

    // The coefficient bound 2g - 2 protected by genericity.
    long long generic_bound() const { return 2LL * g_ - 2; }

  private:
    int g_;
    std::vector<Loop> loops_;
};

// A point of the chain: either a vertex v_i, or an interior point of loop i
// at counterclockwise offset t from v_{i-1}, 0 < t < L_i, t != m_i.  Points on
// a loop at t = 0 or t = m_i canonicalize to the adjacent vertex; use
// make_point to construct in canonical form.
class GraphPoint {
  public:
    static GraphPoint vertex(int index);

    bool is_vertex() const { return vertex_; }
    int vertex_index() const;
    int loop() const;
    const Rational& offset() const;

    friend bool operator==(const GraphPoint& a, const GraphPoint& b) = default;
    friend std::strong_ordering operator<=>(const GraphPoint& a, const GraphPoint& b);

  private:
    friend GraphPoint make_point(const ChainGraph& G, int loop, const Rational& t);

    bool vertex_{true};
    int index_{0}; // vertex index, or loop index for interior points
    Rational t_{0};
};

// Canonicalizing constructor: reduces t modulo L_loop, then folds t = 0 to
// v_{loop-1} and t = m_loop to v_loop.  Idempotent.
GraphPoint make_point(const ChainGraph& G, int loop, const Rational& t);

// Chip configuration: finite formal integer combination of points.  Zero
// coefficients are never stored.
class Divisor {
  public:
    Divisor() = default;

    void add(const GraphPoint& p, long long coeff);
    long long coefficient(const GraphPoint& p) const;

    long long degree() const;
    bool is_effective() const;

    const std::map<GraphPoint, long long>& support() const { return chips_; }

    friend Divisor operator+(const Divisor& a, const Divisor& b);
    friend Divisor operator-(const Divisor& a, const Divisor& b);
    friend Divisor operator*(long long k, const Divisor& d);
    Divisor operator-() const;

    friend bool operator==(const Divisor& a, const Divisor& b) = default;

  private:
    std::map<GraphPoint, long long> chips_;
};

// Validated construction of the chain graph; raises LengthCountMismatch /
// NonPositiveLength.  Genericity is not required here (checked separately).
ChainGraph new_chain(int genus, std::vector<std::pair<Rational, Rational>> loop_lengths);

// Convenience: g loops all of lengths (ell, m).
ChainGraph uniform_chain(int genus, const Rational& ell, const Rational& m);

// The reference generic instance ell_i = 2g+1, m_i = 1 used for concrete
// fallback checks.
ChainGraph reference_instance(int genus);

// K = sum over vertices of (valence - 2) v: coefficient 2 at each interior
// vertex, 0 at v_0 and v_g; degree 2g - 2.
Divisor canonical_divisor(const ChainGraph& G);

// Result of removing a contiguous block of loops [first, last] and
// identifying v_last with v_{first-1}.  Kept loops renumber to a chain of
// genus g - (last - first + 1); every vertex maps (merged vertices collapse),
// interior points of removed loops are dropped.
class LoopRemoval {
  public:
    const ChainGraph& graph() const { return graph_; }

    // nullopt exactly for interior points of removed loops.
    std::optional<GraphPoint> map_point(const GraphPoint& p) const;

    // Pushes a divisor through map_point; chips on removed loop interiors are
    // dropped, vertex chips merge.
    Divisor map_divisor(const Divisor& D) const;

  private:
    friend LoopRemoval remove_loops(const ChainGraph& G, int first, int last);
    LoopRemoval(ChainGraph graph, int first, int last) : graph_(std::move(graph)), first_(first), last_(last) {}

    ChainGraph graph_;
    int first_;
    int last_;
};

LoopRemoval remove_loops(const ChainGraph& G, int first, int last);

} // namespace gp

#endif // GP_CHAIN_GRAPH_HPP

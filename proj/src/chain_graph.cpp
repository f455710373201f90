#include "gp/chain_graph.hpp"

#include <numeric>
#include <string>

namespace gp {

ChainGraph::ChainGraph(int genus, std::vector<std::pair<Rational, Rational>> loop_lengths) : g_(genus) {
    if (genus < 1) throw LengthCountMismatch("genus must be >= 1, got " + std::to_string(genus));
    if (static_cast<int>(loop_lengths.size()) != genus)
        throw LengthCountMismatch("expected " + std::to_string(genus) + " loop length pairs, got " +
                                  std::to_string(loop_lengths.size()));
    loops_.reserve(loop_lengths.size());
    for (std::size_t i = 0; i < loop_lengths.size(); ++i) {
        const auto& [ell, m] = loop_lengths[i];
        if (ell.sign() <= 0 || m.sign() <= 0)
            throw NonPositiveLength("loop " + std::to_string(i + 1) + " has a non-positive arc length");
        loops_.push_back(Loop{ell, m});
    }
}

Rational ChainGraph::circumference(int loop) const { return ell(loop) + m(loop); }

bool ChainGraph::is_generic() const {
    // ell_i/m_i = a/b in lowest terms; the ratio equals p/q with p + q <= 2g-2
    // for some positive p, q iff a + b <= 2g - 2.
    long long bound = generic_bound();
    for (int i = 1; i <= g_; ++i) {
        Rational ratio = ell(i) / m(i);
        if (ratio.num() + ratio.den() <= bound) return false;
    }
    return true;
}

GraphPoint GraphPoint::vertex(int index) {
    GraphPoint p;
    p.vertex_ = true;
    p.index_ = index;
    return p;
}

int GraphPoint::vertex_index() const {
    if (!vertex_) throw Error("not a vertex");
    return index_;
}

int GraphPoint::loop() const {
    if (vertex_) throw Error("not an interior loop point");
    return index_;
}

const Rational& GraphPoint::offset() const {
    if (vertex_) throw Error("not an interior loop point");
    return t_;
}

std::strong_ordering operator<=>(const GraphPoint& a, const GraphPoint& b) {
    // Order along the chain: v_0 < loop 1 interior < v_1 < loop 2 interior < ...
    long long ka = a.vertex_ ? 2LL * a.index_ : 2LL * a.index_ - 1;
    long long kb = b.vertex_ ? 2LL * b.index_ : 2LL * b.index_ - 1;
    if (ka != kb) return ka <=> kb;
    if (a.vertex_) return std::strong_ordering::equal;
    return a.t_ <=> b.t_;
}

GraphPoint make_point(const ChainGraph& G, int loop, const Rational& t) {
    if (loop < 1 || loop > G.genus())
        throw IndexOutOfRange("loop index " + std::to_string(loop) + " out of range");
    Rational tc = t.mod(G.circumference(loop));
    if (tc.is_zero()) return GraphPoint::vertex(loop - 1);
    if (tc == G.m(loop)) return GraphPoint::vertex(loop);
    GraphPoint p;
    p.vertex_ = false;
    p.index_ = loop;
    p.t_ = tc;
    return p;
}

void Divisor::add(const GraphPoint& p, long long coeff) {
    if (coeff == 0) return;
    auto it = chips_.find(p);
    if (it == chips_.end()) {
        chips_.emplace(p, coeff);
    } else {
        it->second += coeff;
        if (it->second == 0) chips_.erase(it);
    }
}

long long Divisor::coefficient(const GraphPoint& p) const {
    auto it = chips_.find(p);
    return it == chips_.end() ? 0 : it->second;
}

long long Divisor::degree() const {
    long long d = 0;
    for (const auto& [p, c] : chips_) d += c;
    return d;
}

bool Divisor::is_effective() const {
    for (const auto& [p, c] : chips_)
        if (c < 0) return false;
    return true;
}

Divisor operator+(const Divisor& a, const Divisor& b) {
    Divisor r = a;
    for (const auto& [p, c] : b.chips_) r.add(p, c);
    return r;
}

Divisor operator-(const Divisor& a, const Divisor& b) {
    Divisor r = a;
    for (const auto& [p, c] : b.chips_) r.add(p, -c);
    return r;
}

Divisor operator*(long long k, const Divisor& d) {
    Divisor r;
    if (k == 0) return r;
    for (const auto& [p, c] : d.chips_) r.add(p, k * c);
    return r;
}

Divisor Divisor::operator-() const { return -1 * *this; }

ChainGraph new_chain(int genus, std::vector<std::pair<Rational, Rational>> loop_lengths) {
    return ChainGraph(genus, std::move(loop_lengths));
}

ChainGraph uniform_chain(int genus, const Rational& ell, const Rational& m) {
    return ChainGraph(genus, std::vector<std::pair<Rational, Rational>>(genus, {ell, m}));
}

ChainGraph reference_instance(int genus) { return uniform_chain(genus, Rational(2 * genus + 1), Rational(1)); }

Divisor canonical_divisor(const ChainGraph& G) {
    Divisor K;
    for (int i = 1; i < G.genus(); ++i) K.add(GraphPoint::vertex(i), 2);
    return K;
}

LoopRemoval remove_loops(const ChainGraph& G, int first, int last) {
    if (first < 1 || last > G.genus() || first > last)
        throw IndexOutOfRange("loop block [" + std::to_string(first) + "," + std::to_string(last) +
                              "] not a subrange of 1.." + std::to_string(G.genus()));
    int removed = last - first + 1;
    if (removed == G.genus()) throw EmptyRange("removing every loop leaves no graph");

    std::vector<std::pair<Rational, Rational>> kept;
    kept.reserve(G.genus() - removed);
    for (int i = 1; i <= G.genus(); ++i)
        if (i < first || i > last) kept.emplace_back(G.ell(i), G.m(i));
    return LoopRemoval(ChainGraph(G.genus() - removed, std::move(kept)), first, last);
}

std::optional<GraphPoint> LoopRemoval::map_point(const GraphPoint& p) const {
    int removed = last_ - first_ + 1;
    if (p.is_vertex()) {
        int v = p.vertex_index();
        if (v < first_) return GraphPoint::vertex(v);       // v <= first-1 unchanged
        if (v <= last_) return GraphPoint::vertex(first_ - 1); // merged block
        return GraphPoint::vertex(v - removed);
    }
    int i = p.loop();
    if (i >= first_ && i <= last_) return std::nullopt;
    int ni = i < first_ ? i : i - removed;
    return make_point(graph_, ni, p.offset());
}

Divisor LoopRemoval::map_divisor(const Divisor& D) const {
    Divisor out;
    for (const auto& [p, c] : D.support())
        if (auto q = map_point(p)) out.add(*q, c);
    return out;
}

} // namespace gp

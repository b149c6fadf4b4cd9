#include "tb/farey.hpp"

#include "tb/errors.hpp"

#include <algorithm>
#include <deque>
#include <utility>

namespace tb {

ProjMatrix ProjMatrix::operator*(const ProjMatrix& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d,
            c * o.a + d * o.c, c * o.b + d * o.d};
}

ProjMatrix ProjMatrix::inverse() const {
    return {d, -b, -c, a}; // adjugate; equals the inverse up to sign
}

Slope ProjMatrix::apply(const Slope& s) const {
    const Int& p = s.den();
    const Int& q = s.num();
    return Slope(c * p + d * q, a * p + b * q);
}

ProjMatrix ProjMatrix::normalized() const {
    for (const Int* e : {&a, &b, &c, &d}) {
        if (*e != 0) {
            if (*e < 0) {
                return {-a, -b, -c, -d};
            }
            break;
        }
    }
    return *this;
}

bool ProjMatrix::proj_equal(const ProjMatrix& o) const {
    ProjMatrix x = normalized(), y = o.normalized();
    return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
}

bool ProjMatrix::is_proj_identity() const {
    return proj_equal(identity());
}

std::string ProjMatrix::str() const {
    return "[[" + to_string(a) + "," + to_string(b) + "],[" + to_string(c) +
           "," + to_string(d) + "]]";
}

Int farey_pairing(const Slope& x, const Slope& y) {
    return abs(x.den() * y.num() - y.den() * x.num());
}

bool are_farey_neighbors(const Slope& x, const Slope& y) {
    return farey_pairing(x, y) == 1;
}

FareyEdge::FareyEdge(const Slope& x, const Slope& y) : u_(x), v_(y) {
    if (!are_farey_neighbors(x, y)) {
        raise(errc::not_neighbors,
              x.str() + " and " + y.str() + " are not Farey neighbors");
    }
    if (v_ < u_) {
        std::swap(u_, v_);
    }
}

ProjMatrix FareyEdge::reflection() const {
    const Int &p1 = u_.den(), &q1 = u_.num();
    const Int &p2 = v_.den(), &q2 = v_.num();
    Int s = p1 * q2 + p2 * q1;
    return {s, -2 * p1 * p2, 2 * q1 * q2, -s};
}

FareyEdge FareyEdge::transformed(const ProjMatrix& m) const {
    return FareyEdge(m.apply(u_), m.apply(v_));
}

std::string FareyEdge::str() const {
    return "{" + u_.str() + ", " + v_.str() + "}";
}

ProjMatrix ReflectionWord::to_matrix() const {
    ProjMatrix m = ProjMatrix::identity();
    for (const FareyEdge& e : edges) {
        m = m * e.reflection();
    }
    return m;
}

Slope ReflectionWord::apply(const Slope& s) const {
    Slope cur = s;
    for (auto it = edges.rbegin(); it != edges.rend(); ++it) {
        cur = it->reflection().apply(cur);
    }
    return cur;
}

void ReflectionWord::prepend(const ReflectionWord& newer) {
    edges.insert(edges.begin(), newer.edges.begin(), newer.edges.end());
}

Slope FareyFan::neighbor(const Int& k) const {
    return Slope(base.num() + k * vertex.num(), base.den() + k * vertex.den());
}

bool FareyFan::contains(const Slope& x) const {
    return are_farey_neighbors(x, vertex);
}

FareyFan farey_neighbors(const Slope& r) {
    if (r.is_infinity() || r.is_integer()) {
        raise(errc::integer_slope,
              "the fan is parameterized only for non-integral slopes");
    }
    const Int& p = r.den();
    const Int& q = r.num();
    // q*p0 == 1 (mod p) gives one neighbor denominator, p - p0 the other;
    // take the smaller for the base.
    Int p0 = mod_inverse(q, p);
    Int q0 = (q * p0 - 1) / p;
    if (2 * p0 > p) {
        p0 = p - p0;
        q0 = q - q0;
    }
    return {r, Slope(q0, p0)};
}

ProjMatrix conjugator_to_infinity(const Slope& r) {
    if (r.is_infinity()) {
        raise(errc::infinity_input, "conjugator needs a finite slope");
    }
    const Int& p = r.den();
    const Int& q = r.num();
    Int d = mod_inverse(q, p); // d*q == 1 (mod p); 0 when p = 1
    Int c = (1 - d * q) / p;
    return {q, -p, c, d};
}

namespace {

FareyEdge edge_at_infinity(const Int& n) {
    return FareyEdge(Slope::infinity(), Slope::integer(n));
}

} // namespace

FoldResult fold_to_strip(const Slope& x, const Int& c) {
    if (x.is_infinity()) {
        return {x, {}};
    }
    // The orbit of x under x -> 2n - x is {x + 2k} u {-x + 2k}; exactly
    // one point lies in [c, c+1] except for the walls' midpoint orbit.
    Slope t = x + (-c);
    Int k = floor_div(t.num(), 2 * t.den());
    Slope u = t + (-2 * k); // in [0, 2)
    ReflectionWord word;
    if (u.num() * 1 <= u.den()) { // u <= 1: translate by -2k
        if (k != 0) {
            if (u.is_integer() || u.num() == u.den()) {
                // x + target is even: one reflection suffices
                word.edges = {edge_at_infinity(c + k + u.floor())};
            } else {
                // applied right to left: reflect at c, then at c - k
                word.edges = {edge_at_infinity(c - k), edge_at_infinity(c)};
            }
        }
    } else { // u in (1, 2): reflect across c + k + 1
        word.edges = {edge_at_infinity(c + k + 1)};
    }
    Slope result = word.apply(x);
    return {result, std::move(word)};
}

namespace {

struct ReduceContext {
    Int strip_floor;      // floor(r)
    ProjMatrix to_inf;    // B with B(r) = infinity
    ProjMatrix from_inf;  // B^-1 up to sign
    Int wedge_floor;      // floor(B(infinity))
};

ReduceContext make_reduce_context(const Slope& r) {
    if (r.is_infinity() || r.is_integer()) {
        raise(errc::integer_slope,
              "reduction needs a non-integral finite slope");
    }
    ReduceContext ctx;
    ctx.strip_floor = r.floor();
    ctx.to_inf = conjugator_to_infinity(r);
    ctx.from_inf = ctx.to_inf.inverse();
    ctx.wedge_floor = ctx.to_inf.apply(Slope::infinity()).floor();
    return ctx;
}

} // namespace

FoldResult reduce(const Slope& x, const Slope& r) {
    ReduceContext ctx = make_reduce_context(r);
    Slope cur = x;
    ReflectionWord word;
    const std::size_t cap =
        64 + 4 * (bit_length(x.num()) + bit_length(x.den()));
    for (std::size_t iter = 0;; ++iter) {
        if (iter > cap) {
            raise(errc::iteration_cap_exceeded,
                  "reduction of " + x.str() + " at " + r.str() +
                      " exceeded the iteration cap");
        }
        FoldResult strip = fold_to_strip(cur, ctx.strip_floor);
        cur = strip.result;
        word.prepend(strip.word);

        FoldResult wedge = fold_to_strip(ctx.to_inf.apply(cur), ctx.wedge_floor);
        if (strip.word.edges.empty() && wedge.word.edges.empty()) {
            break;
        }
        if (!wedge.word.edges.empty()) {
            ReflectionWord pulled;
            pulled.edges.reserve(wedge.word.edges.size());
            for (const FareyEdge& e : wedge.word.edges) {
                pulled.edges.push_back(e.transformed(ctx.from_inf));
            }
            cur = ctx.from_inf.apply(wedge.result);
            word.prepend(pulled);
        }
    }
    return {cur, word};
}

MembershipVerdict orbit_member(const Slope& x, const Slope& r) {
    FoldResult red = reduce(x, r);
    if (red.result == r || red.result.is_infinity()) {
        // verify the witness by direct matrix application
        if (red.word.to_matrix().apply(x) != red.result) {
            raise(errc::iteration_cap_exceeded,
                  "witness word does not map " + x.str() + " to " +
                      red.result.str());
        }
        return {red.result.is_infinity()
                    ? MembershipVerdict::Kind::InOrbitOfInfinity
                    : MembershipVerdict::Kind::InOrbitOfR,
                std::move(red.word), red.result};
    }
    return {MembershipVerdict::Kind::NotInOrbit, {}, red.result};
}

std::vector<FareyEdge> wall_edges(const Slope& r) {
    ReduceContext ctx = make_reduce_context(r);
    std::vector<FareyEdge> walls;
    walls.push_back(edge_at_infinity(ctx.strip_floor));
    walls.push_back(edge_at_infinity(ctx.strip_floor + 1));
    walls.push_back(
        edge_at_infinity(ctx.wedge_floor).transformed(ctx.from_inf));
    walls.push_back(
        edge_at_infinity(ctx.wedge_floor + 1).transformed(ctx.from_inf));
    return walls;
}

std::set<Slope> orbit_bfs(const Slope& r, int depth, const Int& max_den) {
    if (depth < 0) {
        raise(errc::out_of_range, "orbit_bfs depth must be >= 0");
    }
    std::vector<ProjMatrix> gens;
    for (const FareyEdge& e : wall_edges(r)) {
        gens.push_back(e.reflection());
    }
    std::set<Slope> seen{r, Slope::infinity()};
    std::deque<Slope> frontier(seen.begin(), seen.end());
    for (int level = 0; level < depth && !frontier.empty(); ++level) {
        std::deque<Slope> next;
        for (const Slope& s : frontier) {
            for (const ProjMatrix& g : gens) {
                Slope image = g.apply(s);
                if (seen.insert(image).second) {
                    next.push_back(image);
                }
            }
        }
        frontier = std::move(next);
    }
    std::set<Slope> out;
    for (const Slope& s : seen) {
        if (s.is_infinity() || s.den() <= max_den) {
            out.insert(s);
        }
    }
    return out;
}

} // namespace tb

#include "tfund/polyhedral.hpp"

#include <algorithm>
#include <map>

namespace tfund {

namespace {

constexpr std::size_t kMaxDualRank = 6;

Int dot(const IntVec& a, const IntVec& b) {
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Rat dot(const RatVec& a, const RatVec& b) {
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

bool vec_less(const IntVec& a, const IntVec& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

// Minimal V-representation of {v : <h, v> >= 0 for all h in constraints}:
// lineality = integer kernel of the constraint matrix; extreme rays modulo
// lineality found by enumerating all (rank-1)-subsets of constraints, taking
// the one-dimensional integer kernel of [subset; lineality-basis] (which pins
// the representative inside the orthogonal complement of the lineality), and
// keeping directions on which no constraint changes sign.
struct VRep {
    std::vector<IntVec> rays;
    IntMatrix lineality{0, {}};
};

VRep dual_description(const std::vector<IntVec>& constraints, std::size_t n) {
    if (n > kMaxDualRank)
        throw input_error("cone operations support ambient rank <= 6");
    VRep out;
    IntMatrix h(n, constraints);
    out.lineality = integer_kernel(h);
    const std::size_t rank = n - out.lineality.row_count();
    if (rank == 0) return out;  // the whole space: no ray part

    const std::size_t m = constraints.size();
    const std::size_t k = rank - 1;  // subset size
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;

    auto try_subset = [&](const std::vector<std::size_t>& subset) {
        std::vector<IntVec> rows;
        for (auto i : subset) rows.push_back(constraints[i]);
        for (const auto& l : out.lineality.rows) rows.push_back(l);
        IntMatrix kernel = integer_kernel(IntMatrix(n, std::move(rows)));
        if (kernel.row_count() != 1) return;
        IntVec v = kernel.rows[0];
        bool nonneg = true, nonpos = true;
        for (const auto& c : constraints) {
            const Int d = dot(c, v);
            if (d < 0) nonneg = false;
            if (d > 0) nonpos = false;
        }
        if (!nonneg && !nonpos) return;
        if (!nonneg)
            for (auto& x : v) x = -x;
        out.rays.push_back(std::move(v));
    };

    if (k == 0) {
        try_subset({});
    } else if (k <= m) {
        // iterate over all k-subsets of {0..m-1}
        for (;;) {
            try_subset(idx);
            std::size_t pos = k;
            while (pos > 0 && idx[pos - 1] == m - k + (pos - 1)) --pos;
            if (pos == 0) break;
            ++idx[pos - 1];
            for (std::size_t i = pos; i < k; ++i) idx[i] = idx[i - 1] + 1;
        }
    }
    std::sort(out.rays.begin(), out.rays.end(), vec_less);
    out.rays.erase(std::unique(out.rays.begin(), out.rays.end()), out.rays.end());
    return out;
}

Cone cone_from_vrep(std::size_t n, VRep data) {
    // rebuild through generators to reuse the canonical constructor
    std::vector<IntVec> gens = std::move(data.rays);
    for (const auto& l : data.lineality.rows) {
        gens.push_back(l);
        IntVec neg(l.size());
        for (std::size_t i = 0; i < l.size(); ++i) neg[i] = -l[i];
        gens.push_back(std::move(neg));
    }
    return Cone::from_generators(n, gens);
}

}  // namespace

Cone Cone::from_generators(std::size_t ambient_rank, const std::vector<RatVec>& gens) {
    std::vector<IntVec> prim;
    for (const auto& g : gens) {
        if (g.size() != ambient_rank)
            throw input_error("cone generator length differs from ambient rank");
        bool zero = true;
        for (const auto& x : g)
            if (x != 0) zero = false;
        if (zero) continue;
        prim.push_back(primitive(g));
    }
    std::sort(prim.begin(), prim.end(), vec_less);
    prim.erase(std::unique(prim.begin(), prim.end()), prim.end());

    Cone c;
    c.ambient_rank_ = ambient_rank;
    c.lineality_ = IntMatrix(ambient_rank, {});
    if (prim.empty()) return c;  // zero cone

    // canonicalize by a double dual description
    VRep dual = dual_description(prim, ambient_rank);
    std::vector<IntVec> dual_gens = dual.rays;
    for (const auto& l : dual.lineality.rows) {
        dual_gens.push_back(l);
        IntVec neg(l.size());
        for (std::size_t i = 0; i < l.size(); ++i) neg[i] = -l[i];
        dual_gens.push_back(std::move(neg));
    }
    VRep self = dual_description(dual_gens, ambient_rank);
    c.rays_ = std::move(self.rays);
    c.lineality_ = std::move(self.lineality);
    return c;
}

Cone Cone::from_generators(std::size_t ambient_rank, const std::vector<IntVec>& gens) {
    std::vector<RatVec> q;
    q.reserve(gens.size());
    for (const auto& g : gens) q.push_back(to_rat(g));
    return from_generators(ambient_rank, q);
}

Cone Cone::zero(std::size_t ambient_rank) {
    Cone c;
    c.ambient_rank_ = ambient_rank;
    c.lineality_ = IntMatrix(ambient_rank, {});
    return c;
}

Cone Cone::full_space(std::size_t ambient_rank) {
    Cone c;
    c.ambient_rank_ = ambient_rank;
    c.lineality_ = identity_matrix(ambient_rank);
    return c;
}

std::vector<IntVec> Cone::generators() const {
    std::vector<IntVec> out = rays_;
    for (const auto& l : lineality_.rows) {
        out.push_back(l);
        IntVec neg(l.size());
        for (std::size_t i = 0; i < l.size(); ++i) neg[i] = -l[i];
        out.push_back(std::move(neg));
    }
    return out;
}

std::size_t Cone::dim() const {
    IntMatrix span(ambient_rank_, {});
    span.rows = rays_;
    for (const auto& l : lineality_.rows) span.rows.push_back(l);
    return lattice_rank(span);
}

bool cone_less(const Cone& a, const Cone& b) {
    if (a.ambient_rank() != b.ambient_rank()) return a.ambient_rank() < b.ambient_rank();
    if (a.ray_list().size() != b.ray_list().size()) return a.ray_list().size() < b.ray_list().size();
    if (a.ray_list() != b.ray_list())
        return std::lexicographical_compare(a.ray_list().begin(), a.ray_list().end(),
                                            b.ray_list().begin(), b.ray_list().end(), vec_less);
    return std::lexicographical_compare(a.lineality().rows.begin(), a.lineality().rows.end(),
                                        b.lineality().rows.begin(), b.lineality().rows.end(),
                                        vec_less);
}

std::string to_string(const Cone& c) {
    std::string out = "cone{rays=[";
    for (std::size_t i = 0; i < c.ray_list().size(); ++i) {
        if (i) out += ", ";
        out += to_string(c.ray_list()[i]);
    }
    out += "]";
    if (c.lineality().row_count() > 0) out += ", lineality=" + to_string(c.lineality());
    return out + "}";
}

Cone dual_cone(const Cone& c) {
    return cone_from_vrep(c.ambient_rank(), dual_description(c.generators(), c.ambient_rank()));
}

std::vector<IntVec> rays(const Cone& c) {
    if (!c.is_pointed()) throw input_error("rays: cone contains a line");
    return c.ray_list();
}

std::vector<Cone> proper_faces(const Cone& c) {
    if (!c.is_pointed()) throw input_error("proper_faces: cone contains a line");
    const std::vector<IntVec> normals = dual_cone(c).ray_list();
    const std::size_t f = normals.size();
    if (f > 20) throw input_error("proper_faces: too many facets for exact enumeration");

    std::map<std::vector<IntVec>, Cone> seen;
    for (std::size_t mask = 1; mask < (std::size_t(1) << f); ++mask) {
        std::vector<IntVec> kept;
        for (const auto& r : c.ray_list()) {
            bool on_face = true;
            for (std::size_t i = 0; i < f && on_face; ++i)
                if ((mask >> i & 1) && dot(normals[i], r) != 0) on_face = false;
            if (on_face) kept.push_back(r);
        }
        if (!seen.count(kept)) seen.emplace(kept, Cone::from_generators(c.ambient_rank(), kept));
    }
    // f == 0 only for the zero cone, which has no proper faces
    std::vector<Cone> out;
    for (auto& [key, face] : seen) {
        (void)key;
        if (face != c) out.push_back(std::move(face));
    }
    std::sort(out.begin(), out.end(), cone_less);
    return out;
}

Polyhedron::Polyhedron(std::size_t rank, std::vector<RatVec> pts, Cone tail_cone)
    : ambient_rank(rank), points(std::move(pts)), tail(std::move(tail_cone)) {
    if (points.empty()) throw input_error("polyhedron needs at least one point");
    for (const auto& p : points)
        if (p.size() != ambient_rank) throw input_error("polyhedron point length differs from ambient rank");
    if (tail.ambient_rank() != ambient_rank)
        throw input_error("polyhedron tail lives in a different ambient rank");
    std::sort(points.begin(), points.end(), [](const RatVec& a, const RatVec& b) {
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
    });
    points.erase(std::unique(points.begin(), points.end()), points.end());
}

Polyhedron tail_polyhedron(const Cone& tail) {
    return Polyhedron(tail.ambient_rank(), {RatVec(tail.ambient_rank(), Rat(0))}, tail);
}

std::string to_string(const Polyhedron& p) {
    std::string out = "poly{points=[";
    for (std::size_t i = 0; i < p.points.size(); ++i) {
        if (i) out += ", ";
        out += to_string(p.points[i]);
    }
    return out + "], tail=" + to_string(p.tail) + "}";
}

Rat support_min(const Polyhedron& p, const RatVec& u) {
    if (u.size() != p.ambient_rank) throw input_error("support_min: vector length differs from ambient rank");
    for (const auto& g : p.tail.generators()) {
        Rat d = 0;
        for (std::size_t i = 0; i < u.size(); ++i) d += u[i] * Rat(g[i]);
        if (d < 0) throw input_error("unbounded below");
    }
    Rat best = dot(u, p.points[0]);
    for (std::size_t i = 1; i < p.points.size(); ++i) best = std::min(best, dot(u, p.points[i]));
    return best;
}

Polyhedron minkowski_sum(const Polyhedron& a, const Polyhedron& b) {
    if (a.ambient_rank != b.ambient_rank) throw input_error("minkowski_sum: mismatched ambient rank");
    auto translate = [](const Polyhedron& base, const RatVec& shift) {
        std::vector<RatVec> pts;
        for (const auto& p : base.points) {
            RatVec q(p.size());
            for (std::size_t i = 0; i < p.size(); ++i) q[i] = p[i] + shift[i];
            pts.push_back(std::move(q));
        }
        return Polyhedron(base.ambient_rank, std::move(pts), base.tail);
    };
    const bool a_point = a.points.size() == 1 && a.tail.is_zero();
    const bool b_point = b.points.size() == 1 && b.tail.is_zero();
    if (a.tail == b.tail) {
        std::vector<RatVec> pts;
        for (const auto& p : a.points)
            for (const auto& q : b.points) {
                RatVec s(p.size());
                for (std::size_t i = 0; i < p.size(); ++i) s[i] = p[i] + q[i];
                pts.push_back(std::move(s));
            }
        return Polyhedron(a.ambient_rank, std::move(pts), a.tail);  // ctor dedups
    }
    if (a_point) return translate(b, a.points[0]);
    if (b_point) return translate(a, b.points[0]);
    throw input_error("minkowski_sum: tails differ and neither operand is a single point");
}

Fan::Fan(std::size_t rank, std::vector<Cone> members) : ambient_rank(rank), cones(std::move(members)) {
    for (const auto& c : cones)
        if (c.ambient_rank() != ambient_rank)
            throw input_error("fan member lives in a different ambient rank");
    std::sort(cones.begin(), cones.end(), cone_less);
    cones.erase(std::unique(cones.begin(), cones.end()), cones.end());
}

}  // namespace tfund

#include "tfund/pi1.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace tfund {
namespace {

std::vector<std::string> generator_names(std::size_t k, std::size_t r) {
    std::vector<std::string> names;
    if (k == 1) {
        names.push_back("t");
    } else {
        for (std::size_t i = 1; i <= k; ++i) names.push_back("t" + std::to_string(i));
    }
    for (std::size_t j = 1; j <= r; ++j) names.push_back("b" + std::to_string(j));
    return names;
}

// Canonical basis of the saturated span lattice of a cone, optionally
// rewritten by the caller's basis map.
IntMatrix span_lattice_basis(const Cone& c, const PresentationOptions& opt) {
    IntMatrix basis = saturate(IntMatrix(c.ambient_rank(), c.generators()), c.ambient_rank()).basis;
    if (opt.basis_map) basis = opt.basis_map(basis);
    return basis;
}

// t_1^{n_1} ... t_k^{n_k}
Word t_word(const IntVec& n) {
    Word w;
    for (std::size_t i = 0; i < n.size(); ++i)
        if (n[i] != 0) w.push(i, n[i]);
    return w;
}

// row = (v1, w): the word t^w b^{v1} on generator index b_gen.
Word point_word(const IntVec& row, std::size_t k, std::size_t b_gen) {
    Word w;
    for (std::size_t i = 0; i < k; ++i)
        if (row[i + 1] != 0) w.push(i, row[i + 1]);
    if (row[0] != 0) w.push(b_gen, row[0]);
    return w;
}

void add_commutators(Presentation& p, std::size_t k, std::size_t r) {
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j) p.add_relator(commutator_word(i, j), "commutator");
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < r; ++j)
            p.add_relator(commutator_word(i, k + j), "commutator");
}

void add_product_relator(Presentation& p, std::size_t k, std::size_t r) {
    if (r == 0) return;
    Word w;
    for (std::size_t j = 0; j < r; ++j) w.push(k + j, 1);
    p.add_relator(w, "product relation");
}

// The cone over {0} + tail in rank k+1: what a member contributes at a
// support point it does not list.
Cone cone_over_trivial_coefficient(const Cone& tail) {
    std::vector<IntVec> gens;
    for (const IntVec& g : tail.generators()) {
        IntVec lifted(tail.ambient_rank() + 1, 0);
        for (std::size_t i = 0; i < g.size(); ++i) lifted[i + 1] = g[i];
        gens.push_back(lifted);
    }
    IntVec apex(tail.ambient_rank() + 1, 0);
    apex[0] = 1;
    gens.push_back(apex);
    return Cone::from_generators(tail.ambient_rank() + 1, gens);
}

bool lists_label(const PPDivisor& d, const std::string& label) {
    for (const auto& [l, coeff] : d.coefficients)
        if (l == label) return true;
    return false;
}

void require_pointed(const Cone& c) {
    if (!c.is_pointed()) throw input_error("toric computation requires pointed cones");
}

}  // namespace

AbelianInvariants toric_pi1_invariants(const Fan& f) {
    IntMatrix stacked(f.ambient_rank, {});
    for (const Cone& c : f.cones) {
        require_pointed(c);
        IntMatrix basis = saturate(IntMatrix(f.ambient_rank, c.generators()), f.ambient_rank).basis;
        for (const IntVec& row : basis.rows) stacked.rows.push_back(row);
    }
    return quotient_invariants(f.ambient_rank, stacked);
}

Presentation toric_pi1_presentation(const Fan& f, const PresentationOptions& opt) {
    Presentation p(generator_names(f.ambient_rank, 0));
    add_commutators(p, f.ambient_rank, 0);
    for (const Cone& c : f.cones) {
        require_pointed(c);
        for (const IntVec& row : span_lattice_basis(c, opt).rows)
            p.add_relator(t_word(row), "tail-fan lattice");
    }
    return p;
}

Presentation complexity_one_presentation(const DivisorialFanP1& s, const PresentationOptions& opt) {
    const std::size_t k = s.rank_k;

    // Union of member supports, first-occurrence order.
    std::vector<std::string> points;
    for (const PPDivisor& d : s.members)
        for (const std::string& label : d.support())
            if (std::find(points.begin(), points.end(), label) == points.end())
                points.push_back(label);

    if (points.empty()) {
        std::vector<Cone> tails;
        for (const PPDivisor& d : s.members) tails.push_back(d.tail);
        return toric_pi1_presentation(Fan(k, std::move(tails)), opt);
    }

    const std::size_t r = points.size();
    Presentation p(generator_names(k, r));
    add_product_relator(p, k, r);
    add_commutators(p, k, r);

    for (const PPDivisor& d : s.members)
        for (const IntVec& row : span_lattice_basis(d.tail, opt).rows)
            p.add_relator(t_word(row), "tail-fan lattice");

    for (const PPDivisor& d : s.members) {
        for (std::size_t j = 0; j < r; ++j) {
            const std::string& label = points[j];
            Cone over;
            if (lists_label(d, label)) {
                const PolyCoeff& coeff = d.at(label);
                if (!coeff) continue;  // empty coefficient: no fiber, no relators
                over = cone_over_point(d, label);
            } else {
                over = cone_over_trivial_coefficient(d.tail);
            }
            for (const IntVec& row : span_lattice_basis(over, opt).rows)
                p.add_relator(point_word(row, k, k + j), "point " + label + " lattice");
        }
    }
    return p;
}

Presentation local_pi1_presentation(const PPDivisor& d, FacesMode mode,
                                    const PresentationOptions& opt) {
    if (d.tail.is_zero())
        return complexity_one_presentation(DivisorialFanP1(d.rank_k, {d}), opt);
    if (d.tail.dim() != d.rank_k)
        throw input_error("punctured computation requires a full-dimensional or zero tail cone");

    const std::size_t k = d.rank_k;
    const std::vector<std::string> points = d.support();
    const std::size_t r = points.size();

    Presentation p(generator_names(k, r));
    add_product_relator(p, k, r);
    add_commutators(p, k, r);

    if (mode == FacesMode::Rays) {
        // A tail ray is a stratum of the complement only when it is a proper
        // face; a one-dimensional tail is its own ray and is the puncture.
        if (d.tail.dim() >= 2)
            for (const IntVec& rho : rays(d.tail)) p.add_relator(t_word(rho), "face ray");
        for (std::size_t j = 0; j < r; ++j) {
            const PolyCoeff& coeff = d.at(points[j]);
            if (!coeff) continue;
            for (const IntVec& row : rays(cone_over_point(d, points[j])))
                if (row[0] > 0) p.add_relator(point_word(row, k, k + j),
                                              "point " + points[j] + " lattice");
        }
    } else {
        for (const Cone& face : proper_faces(d.tail))
            for (const IntVec& row : span_lattice_basis(face, opt).rows)
                p.add_relator(t_word(row), "face ray");
        for (std::size_t j = 0; j < r; ++j) {
            const PolyCoeff& coeff = d.at(points[j]);
            if (!coeff) continue;
            for (const Cone& face : proper_faces(cone_over_point(d, points[j])))
                for (const IntVec& row : span_lattice_basis(face, opt).rows)
                    p.add_relator(point_word(row, k, k + j),
                                  "point " + points[j] + " lattice");
        }
    }
    return p;
}

std::vector<Word> allfaces_extra_relators(const PPDivisor& d) {
    if (d.tail.is_zero()) return {};
    Presentation rays_mode = local_pi1_presentation(d, FacesMode::Rays);
    Presentation all_mode = local_pi1_presentation(d, FacesMode::AllFaces);

    std::set<Word> known;
    for (const Word& w : rays_mode.relators) known.insert(cyclic_canonical(w));

    std::vector<Word> extras;
    std::set<Word> reported;
    for (const Word& w : all_mode.relators) {
        Word c = cyclic_canonical(w);
        if (known.count(c) == 0 && reported.insert(c).second) extras.push_back(w);
    }
    return extras;
}

Presentation cstar_bundle_presentation(const std::vector<std::pair<Int, Int>>& points) {
    for (const auto& [e, m] : points) {
        if (m < 1) throw input_error("fiber multiplicity must be a positive integer");
        if (gcd(boost::multiprecision::abs(e), m) != 1)
            throw input_error("coefficient " + to_string(e) + "/" + to_string(m) +
                              " must be a reduced fraction");
    }
    const std::size_t r = points.size();
    Presentation p(generator_names(1, r));
    add_product_relator(p, 1, r);
    add_commutators(p, 1, r);
    for (std::size_t j = 0; j < r; ++j) {
        Word w;
        if (points[j].first != 0) w.push(0, points[j].first);
        w.push(1 + j, points[j].second);
        p.add_relator(w, "point " + std::to_string(j + 1) + " lattice");
    }
    return p;
}

}  // namespace tfund

#include "tfund/divisorial.hpp"

#include <algorithm>
#include <set>

namespace tfund {

PPDivisor::PPDivisor(std::size_t rank, Cone tail_cone,
                     std::vector<std::pair<std::string, PolyCoeff>> coeffs)
    : rank_k(rank), tail(std::move(tail_cone)), coefficients(std::move(coeffs)) {
    if (rank_k == 0) throw input_error("pp-divisor rank must be positive");
    if (tail.ambient_rank() != rank_k)
        throw input_error("pp-divisor tail lives in a different ambient rank");
    std::set<std::string> seen;
    for (const auto& [label, coeff] : coefficients) {
        if (!seen.insert(label).second)
            throw input_error("pp-divisor has a repeated point label: " + label);
        if (coeff && coeff->tail != tail)
            throw input_error("coefficient at " + label + " does not share the divisor tail");
    }
}

const PolyCoeff& PPDivisor::at(const std::string& label) const {
    for (const auto& [l, coeff] : coefficients)
        if (l == label) return coeff;
    throw input_error("pp-divisor has no coefficient at label: " + label);
}

bool PPDivisor::has_empty_coefficient() const {
    for (const auto& [label, coeff] : coefficients)
        if (!coeff) return true;
    return false;
}

std::vector<std::string> PPDivisor::support() const {
    const Polyhedron plain = tail_polyhedron(tail);
    std::vector<std::string> out;
    for (const auto& [label, coeff] : coefficients)
        if (!coeff || *coeff != plain) out.push_back(label);
    return out;
}

DivisorialFanP1::DivisorialFanP1(std::size_t rank, std::vector<PPDivisor> divisors)
    : rank_k(rank), members(std::move(divisors)) {
    if (rank_k == 0) throw input_error("divisorial fan rank must be positive");
    if (members.empty()) throw input_error("divisorial fan needs at least one member");
    for (const auto& d : members)
        if (d.rank_k != rank_k)
            throw input_error("divisorial fan member lives in a different ambient rank");
}

std::vector<std::string> shallow_warnings(const DivisorialFanP1& s) {
    std::vector<std::string> out;
    std::set<std::string> all_labels;
    for (const auto& d : s.members)
        for (const auto& [label, coeff] : d.coefficients) all_labels.insert(label);
    for (std::size_t i = 0; i < s.members.size(); ++i) {
        std::set<std::string> mine;
        for (const auto& [label, coeff] : s.members[i].coefficients) mine.insert(label);
        if (mine != all_labels) {
            out.push_back("member " + std::to_string(i) +
                          " does not list every point label used by the family");
        }
    }
    if (!out.empty())
        out.push_back("face/intersection axioms of the family are not verified");
    return out;
}

std::vector<std::pair<std::string, Rat>> evaluate_coefficients(const PPDivisor& d, const RatVec& u) {
    if (u.size() != d.rank_k)
        throw input_error("evaluate_coefficients: vector length differs from divisor rank");
    for (const auto& g : d.tail.generators()) {
        Rat dot = 0;
        for (std::size_t i = 0; i < u.size(); ++i) dot += u[i] * Rat(g[i]);
        if (dot < 0) throw input_error("evaluate_coefficients: vector outside the dual tail cone");
    }
    std::vector<std::pair<std::string, Rat>> out;
    for (const auto& [label, coeff] : d.coefficients)
        if (coeff) out.emplace_back(label, support_min(*coeff, u));
    return out;
}

Rat degree(const PPDivisor& d, const RatVec& u) {
    if (d.has_empty_coefficient())
        throw input_error("degree: divisor has an empty coefficient (affine locus)");
    Rat total = 0;
    for (const auto& [label, value] : evaluate_coefficients(d, u)) total += value;
    return total;
}

std::string to_string(const ProperVerdict& v) {
    switch (v.kind) {
        case ProperVerdict::Kind::Proper:
            return "Proper";
        case ProperVerdict::Kind::NotSemiample:
            return "NotSemiample(u=" + to_string(v.witness) + ")";
        default:
            return "NotBig(u=" + to_string(v.witness) + ")";
    }
}

ProperVerdict is_proper(const PPDivisor& d) {
    if (d.has_empty_coefficient()) return {};  // affine locus: proper outright

    const Cone dual = dual_cone(d.tail);
    IntVec interior(d.rank_k, Int(0));
    for (const auto& ray : dual.ray_list()) {
        if (degree(d, to_rat(ray)) < 0) return {ProperVerdict::Kind::NotSemiample, ray};
        for (std::size_t i = 0; i < d.rank_k; ++i) interior[i] += ray[i];
    }
    bool interior_zero = true;
    for (const auto& x : interior)
        if (x != 0) interior_zero = false;
    if (!interior_zero && degree(d, to_rat(interior)) <= 0)
        return {ProperVerdict::Kind::NotBig, interior};
    return {};
}

Cone cone_over_point(const PPDivisor& d, const std::string& label) {
    const PolyCoeff& coeff = d.at(label);
    if (!coeff) throw input_error("cone_over_point: empty coefficient at label " + label);
    std::vector<RatVec> gens;
    for (const auto& g : d.tail.generators()) {
        RatVec lifted(d.rank_k + 1, Rat(0));
        for (std::size_t i = 0; i < d.rank_k; ++i) lifted[i + 1] = Rat(g[i]);
        gens.push_back(std::move(lifted));
    }
    for (const auto& v : coeff->points) {
        RatVec lifted(d.rank_k + 1);
        lifted[0] = 1;
        for (std::size_t i = 0; i < d.rank_k; ++i) lifted[i + 1] = v[i];
        gens.push_back(std::move(lifted));
    }
    return Cone::from_generators(d.rank_k + 1, gens);
}

KltCheck klt_necessary_check(const PPDivisor& d) {
    if (d.has_empty_coefficient())
        throw input_error("klt check requires a complete locus");
    if (d.tail.dim() != d.rank_k)
        throw input_error("good-action hypothesis violated: tail is not full-dimensional");
    KltCheck out;
    out.sum = 0;
    for (const auto& [label, coeff] : d.coefficients) {
        Int mu_p = 1;
        for (const auto& v : coeff->points) mu_p = std::max(mu_p, mu(v));
        out.sum += Rat(mu_p - 1, mu_p);
    }
    out.pass = out.sum < 2;
    out.margin = out.pass ? Rat(2) - out.sum : out.sum - Rat(2);
    return out;
}

bool platonic_triple_check(const Int& a, const Int& b, const Int& c) {
    std::vector<Int> m{a, b, c};
    std::sort(m.begin(), m.end());
    if (m[0] == 1 && m[1] >= 1) return true;                    // (1, p, q)
    if (m[0] == 2 && m[1] == 2 && m[2] >= 2) return true;       // (2, 2, r)
    if (m[0] == 2 && m[1] == 3 && m[2] >= 3 && m[2] <= 5) return true;  // (2,3,3..5)
    return false;
}

}  // namespace tfund

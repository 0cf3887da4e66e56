#ifndef GK_EXTENSIONS_HPP
#define GK_EXTENSIONS_HPP

// Prime graphs of extension constructions: affine extensions V:G for a module
// V in some characteristic, outer-automorphism extensions, and ad-hoc edge
// additions.  Also the Brauer fixed-point-dimension identity used to audit
// individual module facts from supplied character values.

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "gk/catalog.hpp"
#include "gk/errors.hpp"
#include "gk/families.hpp"
#include "gk/graph.hpp"
#include "gk/numtheory.hpp"

namespace gk {

// Dimension of the fixed-point space of an element g of prime order p acting
// on a module of the given degree, where tail_sum is the sum of the character
// values of g, g^2, ..., g^(p-1) (an integer by Galois conjugacy).  The
// dimension is (degree + tail_sum) / p.
inline unsigned fixed_point_dimension(u64 p, long long degree, long long tail_sum) {
    if (!is_prime(p)) throw DomainError("fixed_point_dimension: p must be prime");
    if (degree < 1) throw DomainError("fixed_point_dimension: degree must be positive");
    long long total = degree + tail_sum;
    if (total % static_cast<long long>(p) != 0)
        throw NotIntegral("fixed_point_dimension: " + std::to_string(degree) + " + " +
                          std::to_string(tail_sum) + " is not divisible by " +
                          std::to_string(p));
    if (total < 0)
        throw Negative("fixed_point_dimension: negative fixed-point dimension "
                       "signals inconsistent character data");
    return static_cast<unsigned>(total / static_cast<long long>(p));
}

// The prime graph of an affine extension V:G, where V is a module for G in
// characteristic r.  Vertices gain r (if new); each prime in `fixing` gains an
// edge to r (elements of that order fix non-zero vectors in V); primes in
// `avoiding` act fixed-point-freely and are guaranteed non-adjacent to r in
// the result.  A prime in neither set is tolerated only when it is already
// adjacent to r in the base graph, so the output does not depend on the
// unknown behaviour.
inline PrimeGraph affine_extension(const PrimeGraph& base, const Vertex& r,
                                   const std::vector<u64>& fixing,
                                   const std::vector<u64>& avoiding) {
    std::set<u64> fix(fixing.begin(), fixing.end());
    std::set<u64> avoid(avoiding.begin(), avoiding.end());
    for (u64 p : fixing)
        if (avoid.count(p))
            throw Conflict("affine_extension: prime " + std::to_string(p) +
                           " is both fixing and avoiding");
    for (u64 p : fixing)
        if (!base.has_vertex(Vertex::prime(p)))
            throw VertexNotFound("affine_extension: fixing prime " + std::to_string(p) +
                                 " is not a vertex of the base graph");
    for (u64 p : avoiding) {
        Vertex v = Vertex::prime(p);
        if (!base.has_vertex(v))
            throw VertexNotFound("affine_extension: avoiding prime " + std::to_string(p) +
                                 " is not a vertex of the base graph");
        if (base.has_edge(r, v))
            throw Conflict("affine_extension: avoiding prime " + std::to_string(p) +
                           " is already adjacent to " + r.label());
    }
    const bool r_in_base = base.has_vertex(r);
    for (const Vertex& v : base.vertices()) {
        if (v == r) continue;
        if (!v.is_symbolic()) {
            u64 p = v.prime_value();
            if (fix.count(p) || avoid.count(p)) continue;
        }
        if (!r_in_base || !base.has_edge(r, v))
            throw AmbiguousPrime("affine_extension: adjacency of " + v.label() +
                                 " to " + r.label() + " is undetermined");
    }
    PrimeGraph g = base.with_vertex(r);
    for (u64 p : fixing) {
        Vertex v = Vertex::prime(p);
        if (v == r) continue;
        g = g.with_edge(r, v);
    }
    return g;
}

inline PrimeGraph apply_step(const PrimeGraph& base, const ExtensionStep& step) {
    switch (step.kind) {
        case StepKind::Affine:
            return affine_extension(base, step.r, step.fixing, step.avoiding);
        case StepKind::AddEdges: {
            PrimeGraph g = base;
            for (auto [a, b] : step.edges)
                g = g.with_edge(Vertex::prime(a), Vertex::prime(b));
            return g;
        }
        case StepKind::AddOuterPrime: {
            PrimeGraph g = base.with_vertex(Vertex::prime(step.prime));
            for (auto [a, b] : step.edges)
                g = g.with_edge(Vertex::prime(a), Vertex::prime(b));
            return g;
        }
    }
    throw DomainError("apply_step: bad step kind");
}

inline PrimeGraph replay_witness(const WitnessSpec& spec) {
    PrimeGraph g = prime_graph(spec.base);
    for (const ExtensionStep& step : spec.steps) g = apply_step(g, step);
    return g;
}

struct WitnessVerification {
    PrimeGraph graph; // the replayed extension graph
    std::vector<std::pair<Vertex, Vertex>> isomorphism; // onto the target graph
    bool labelled_equal = false; // vertex and edge sets coincide exactly
};

namespace detail {

// Human-readable first difference between two graphs' invariant tuples.
inline std::string distinguishing_invariant(const GraphInvariants& a,
                                            const GraphInvariants& b) {
    auto item = [](const std::string& name, unsigned x, unsigned y) {
        return name + " " + std::to_string(x) + " vs " + std::to_string(y);
    };
    if (a.vertex_count != b.vertex_count)
        return item("vertex counts", a.vertex_count, b.vertex_count);
    if (a.edge_count != b.edge_count)
        return item("edge counts", a.edge_count, b.edge_count);
    if (a.component_count != b.component_count)
        return item("component counts", a.component_count, b.component_count);
    if (a.isolated_vertex_count != b.isolated_vertex_count)
        return item("isolated vertex counts", a.isolated_vertex_count,
                    b.isolated_vertex_count);
    if (a.independence_number != b.independence_number)
        return item("independence numbers", a.independence_number,
                    b.independence_number);
    if (a.clique_number != b.clique_number)
        return item("clique numbers", a.clique_number, b.clique_number);
    if (a.degree_sequence != b.degree_sequence) return "degree sequences differ";
    return "graphs differ despite equal invariants";
}

inline bool same_labelled_graph(const PrimeGraph& a, const PrimeGraph& b) {
    return a.vertices() == b.vertices() && a.edges() == b.edges();
}

} // namespace detail

inline WitnessVerification verify_witness(const Catalog& catalog,
                                          const WitnessSpec& spec) {
    WitnessVerification out;
    out.graph = replay_witness(spec);
    const PrimeGraph& target =
        get_entry(catalog, GroupId::sporadic_group(spec.target)).graph;
    auto iso = is_isomorphic(out.graph, target);
    if (!iso)
        throw NotIsomorphic(
            "witness for " + sporadic_to_string(spec.target) + ": " +
            detail::distinguishing_invariant(invariants(out.graph), invariants(target)));
    out.isomorphism = *iso;
    out.labelled_equal = detail::same_labelled_graph(out.graph, target);
    // A witness built over the target group itself promises a labelled
    // coincidence, not merely an isomorphism.
    if (spec.base == GroupId::sporadic_group(spec.target) && !out.labelled_equal)
        throw NotIsomorphic("witness for " + sporadic_to_string(spec.target) +
                            ": labelled graphs differ");
    return out;
}

inline WitnessVerification verify_witness(const WitnessSpec& spec) {
    return verify_witness(builtin_catalog(), spec);
}

} // namespace gk

#endif // GK_EXTENSIONS_HPP

#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "gk/extensions.hpp"

using namespace gk;

TEST_CASE("fixed_point_dimension: worked examples") {
    // Trivial character of a group with elements of order 5: chi(g^k) = 1.
    REQUIRE(fixed_point_dimension(5, 1, 4) == 1);
    // Order-29 elements acting fixed-point-freely on the 28-dimensional module.
    REQUIRE(fixed_point_dimension(29, 28, -28) == 0);
    // Reflection-type involution on a 3-space: eigenvalues +1, +1, -1.
    REQUIRE(fixed_point_dimension(2, 3, 1) == 2);
}

TEST_CASE("fixed_point_dimension: identity dim * p = degree + tail") {
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull}) {
        for (long long degree = 1; degree <= 40; ++degree) {
            for (long long tail = -degree; tail <= 60; ++tail) {
                if ((degree + tail) % static_cast<long long>(p) != 0) continue;
                long long dim = fixed_point_dimension(p, degree, tail);
                REQUIRE(dim * static_cast<long long>(p) == degree + tail);
                REQUIRE(dim >= 0);
            }
        }
    }
}

TEST_CASE("fixed_point_dimension: error cases") {
    REQUIRE_THROWS_AS(fixed_point_dimension(4, 8, 0), DomainError);   // not prime
    REQUIRE_THROWS_AS(fixed_point_dimension(5, 0, 5), DomainError);   // degree < 1
    REQUIRE_THROWS_AS(fixed_point_dimension(5, 7, 1), NotIntegral);   // 8 % 5 != 0
    REQUIRE_THROWS_AS(fixed_point_dimension(5, 7, -12), Negative);    // -5 / 5 < 0
}

TEST_CASE("affine_extension: adds exactly the fixing edges") {
    PrimeGraph base = prime_graph(GroupId::two_b2(9)); // Sz(2^19)
    PrimeGraph ext = affine_extension(base, Vertex::prime(2), {5},
                                      {229, 457, 524287, 525313});
    REQUIRE(ext.vertex_count() == base.vertex_count());
    REQUIRE(ext.edge_count() == base.edge_count() + 1);
    REQUIRE(ext.has_edge(Vertex::prime(2), Vertex::prime(5)));
    // Avoiding primes stay non-adjacent to the characteristic.
    for (u64 p : {229ull, 457ull, 524287ull, 525313ull})
        REQUIRE(!ext.has_edge(Vertex::prime(2), Vertex::prime(p)));
    // Monotone: no edge of the base disappears.
    for (const Edge& e : base.edges()) REQUIRE(ext.has_edge(e.first, e.second));
}

TEST_CASE("affine_extension: identity when nothing is classified") {
    PrimeGraph base = prime_graph(GroupId::alt(7));
    // r = 2 is a vertex; every other vertex must already be adjacent to 2 or
    // classified.  Alt(7) has Gamma with 2 adjacent only to 3, so 5 and 7 must
    // be classified; classifying them as avoiding keeps the graph unchanged.
    PrimeGraph same = affine_extension(base, Vertex::prime(2), {3}, {5, 7});
    REQUIRE(same.vertices() == base.vertices());
    REQUIRE(same.edges() == base.edges());
}

TEST_CASE("affine_extension: error cases") {
    PrimeGraph base = prime_graph(GroupId::alt(7)); // {2,3,5,7}, edge {2,3}
    // Fixing and avoiding overlap.
    REQUIRE_THROWS_AS(
        affine_extension(base, Vertex::prime(11), {3}, {3, 5}), Conflict);
    // Fixing prime outside the base graph.
    REQUIRE_THROWS_AS(
        affine_extension(base, Vertex::prime(11), {13}, {}), VertexNotFound);
    // Avoiding prime already adjacent to r.
    REQUIRE_THROWS_AS(
        affine_extension(base, Vertex::prime(2), {}, {3, 5, 7}), Conflict);
    // Unclassified vertex whose adjacency to a new r is undetermined.
    REQUIRE_THROWS_AS(
        affine_extension(base, Vertex::prime(11), {2, 3}, {5}), AmbiguousPrime);
}

TEST_CASE("apply_step covers all step kinds") {
    PrimeGraph base = prime_graph(GroupId::two_b2(3)); // Sz(128)
    PrimeGraph outer = apply_step(
        base, ExtensionStep::add_outer_prime(7, {{2, 7}, {5, 7}}, "field aut"));
    REQUIRE(outer.has_vertex(Vertex::prime(7)));
    REQUIRE(outer.has_edge(Vertex::prime(2), Vertex::prime(7)));
    REQUIRE(outer.has_edge(Vertex::prime(5), Vertex::prime(7)));

    PrimeGraph edged = apply_step(
        base, ExtensionStep::add_edges({{2, 5}}, "ad-hoc"));
    REQUIRE(edged.has_edge(Vertex::prime(2), Vertex::prime(5)));
    REQUIRE(edged.edge_count() == base.edge_count() + 1);
}

TEST_CASE("all shipped witnesses verify") {
    const Catalog& c = builtin_catalog();
    std::set<SporadicName> expected = {
        SporadicName::J1,  SporadicName::M22, SporadicName::M11, SporadicName::HS,
        SporadicName::J3,  SporadicName::M23, SporadicName::Co2, SporadicName::M24,
        SporadicName::Suz, SporadicName::Ru,  SporadicName::Fi22, SporadicName::HN,
        SporadicName::Co1};
    std::set<SporadicName> seen;
    for (const WitnessSpec& w : c.witnesses) {
        INFO(sporadic_to_string(w.target));
        seen.insert(w.target);
        WitnessVerification v = verify_witness(c, w);
        REQUIRE(!v.isomorphism.empty());
        const PrimeGraph& target =
            get_entry(c, GroupId::sporadic_group(w.target)).graph;
        REQUIRE(is_isomorphic(v.graph, target).has_value());
    }
    REQUIRE(seen == expected);
}

TEST_CASE("the Ru witness is a labelled coincidence") {
    const Catalog& c = builtin_catalog();
    const WitnessSpec* w = find_witness(c, SporadicName::Ru);
    REQUIRE(w != nullptr);
    REQUIRE(w->base == GroupId::sporadic_group(SporadicName::Ru));
    WitnessVerification v = verify_witness(c, *w);
    REQUIRE(v.labelled_equal);
}

TEST_CASE("witness base graphs: HS and J3 share the PSL2(61) construction") {
    const Catalog& c = builtin_catalog();
    const WitnessSpec* hs = find_witness(c, SporadicName::HS);
    const WitnessSpec* j3 = find_witness(c, SporadicName::J3);
    REQUIRE(hs != nullptr);
    REQUIRE(j3 != nullptr);
    REQUIRE(hs->base == GroupId::psl2(61));
    REQUIRE(j3->base == GroupId::psl2(61));
    PrimeGraph g = replay_witness(*hs);
    REQUIRE(is_isomorphic(g, get_entry(c, GroupId::sporadic_group(SporadicName::HS)).graph));
    REQUIRE(is_isomorphic(g, get_entry(c, GroupId::sporadic_group(SporadicName::J3)).graph));
}

TEST_CASE("verify_witness rejects a broken spec with a distinguishing invariant") {
    const Catalog& c = builtin_catalog();
    WitnessSpec w = *find_witness(c, SporadicName::HN);
    w.steps.clear(); // Gamma(Alt(13)) alone is not isomorphic to Gamma(HN)
    try {
        verify_witness(c, w);
        FAIL("expected NotIsomorphic");
    } catch (const NotIsomorphic& e) {
        std::string msg = e.what();
        REQUIRE(msg.find("HN") != std::string::npos);
        // Names the first differing invariant rather than just failing.
        REQUIRE(msg.find(" vs ") != std::string::npos);
    }
}

TEST_CASE("targets with witnesses are exactly the unrecognisable ones minus "
          "the citation-only groups") {
    const Catalog& c = builtin_catalog();
    for (SporadicName n : {SporadicName::M12, SporadicName::J2, SporadicName::McL,
                           SporadicName::He, SporadicName::Co3})
        REQUIRE(find_witness(c, n) == nullptr);
    for (SporadicName n :
         {SporadicName::B, SporadicName::Th, SporadicName::M, SporadicName::J4})
        REQUIRE(find_witness(c, n) == nullptr);
}

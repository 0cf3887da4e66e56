#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <set>
#include <sstream>

#include "gk/catalog.hpp"

using namespace gk;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    REQUIRE(f.good());
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

// Exhaustive subset-enumeration independence number, usable up to ~20 vertices.
unsigned oracle_independence(const PrimeGraph& g) {
    const auto& vs = g.vertices();
    unsigned n = g.vertex_count();
    unsigned best = 0;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        bool ok = true;
        for (unsigned i = 0; i < n && ok; ++i) {
            if (!(mask & (1u << i))) continue;
            for (unsigned j = i + 1; j < n && ok; ++j)
                if ((mask & (1u << j)) && g.has_edge(vs[i], vs[j])) ok = false;
        }
        if (ok) best = std::max(best, static_cast<unsigned>(std::popcount(mask)));
    }
    return best;
}

} // namespace

TEST_CASE("builtin catalog passes validation") {
    REQUIRE(validate_catalog(builtin_catalog()).empty());
}

TEST_CASE("catalog shape: entries, facts, rows, witnesses") {
    const Catalog& c = builtin_catalog();
    REQUIRE(c.recognisability.size() == 26);
    // 26 sporadic groups plus the simple groups the case analysis consults.
    std::set<std::string> keys;
    for (const auto& e : c.entries) keys.insert(e.id.key());
    REQUIRE(c.entries.size() == keys.size());
    for (const char* k : {"psl3_4", "psu4_3", "psu6_2", "2e6_2", "f4:1", "2f4:1",
                          "2g2:1", "pomega_minus:5", "e7_2", "e7_3", "sporadic:J4",
                          "sporadic:Ru", "sporadic:M"})
        REQUIRE(keys.count(k) == 1);
    // Entries are sorted by key, so lookups and serialization are stable.
    for (size_t i = 0; i + 1 < c.entries.size(); ++i)
        REQUIRE(c.entries[i].id.key() < c.entries[i + 1].id.key());
    for (const auto& f : c.facts) REQUIRE(!f.citation.empty());
    for (const auto& e : c.entries) REQUIRE(!e.citations.empty());
}

TEST_CASE("get_entry: tabulated graphs") {
    const Catalog& c = builtin_catalog();

    const CatalogEntry& j4 = get_entry(c, GroupId::sporadic_group(SporadicName::J4));
    REQUIRE(j4.graph.vertex_count() == 10);
    REQUIRE(j4.graph.edge_count() == 8);
    for (auto [a, b] : {std::pair<u64, u64>{2, 3}, {2, 5}, {2, 7}, {2, 11},
                        {3, 5}, {3, 7}, {3, 11}, {5, 7}})
        REQUIRE(j4.graph.has_edge(Vertex::prime(a), Vertex::prime(b)));

    const CatalogEntry& ru = get_entry(c, GroupId::sporadic_group(SporadicName::Ru));
    REQUIRE(ru.graph.edge_count() == 5);
    for (auto [a, b] : {std::pair<u64, u64>{2, 3}, {2, 5}, {2, 7}, {2, 13}, {3, 5}})
        REQUIRE(ru.graph.has_edge(Vertex::prime(a), Vertex::prime(b)));
    REQUIRE(ru.graph.degree(Vertex::prime(29)) == 0);

    REQUIRE_THROWS_AS(get_entry(c, GroupId::alt(11)), NotFound);
}

TEST_CASE("entries without full graphs are component-only") {
    const Catalog& c = builtin_catalog();
    for (const char* k : {"e7_2", "e7_3"}) {
        const CatalogEntry& e = get_entry(c, GroupId::parse(k));
        REQUIRE(!e.has_graph);
        REQUIRE(!e.order.factors.empty());
    }
}

TEST_CASE("facts_for filters by subject and kind") {
    const Catalog& c = builtin_catalog();

    auto e6 = facts_for(c, GroupId::two_e6_2(), FactKind::ForcedFix);
    bool found_coprime = false;
    for (const auto& f : e6)
        if (f.characteristic.cls == CharClass::Coprime &&
            f.fixing == std::vector<u64>{13, 17, 19})
            found_coprime = true;
    REQUIRE(found_coprime);

    auto ru = facts_for(c, GroupId::sporadic_group(SporadicName::Ru),
                        FactKind::ModuleExists);
    REQUIRE(ru.size() == 1);
    REQUIRE(ru[0].dimension == 28);
    REQUIRE(ru[0].avoiding == std::vector<u64>{29});

    // Family-wide Suzuki facts are visible from any member of the family.
    auto sz = facts_for(c, GroupId::two_b2(3), FactKind::ForcedFix);
    bool family_fixes_all = false;
    for (const auto& f : sz)
        if (f.family_wide && f.fixes_all && f.characteristic.cls == CharClass::Coprime)
            family_fixes_all = true;
    REQUIRE(family_fixes_all);

    REQUIRE(facts_for(c, GroupId::alt(5), std::nullopt).empty());
}

TEST_CASE("recognisability rows carry the corrected labelled column") {
    const Catalog& c = builtin_catalog();
    for (const RecognisabilityRow& r : c.recognisability) {
        if (r.group == SporadicName::Ru) {
            // The corrected table: infinitely many groups share even Ru's
            // labelled prime graph.
            REQUIRE(r.labelled == LabelledStatus::Unrecognisable);
            REQUIRE(r.k == 0);
            REQUIRE(!r.unlabelled_recognisable);
        }
        if (r.group == SporadicName::M) {
            REQUIRE(r.labelled == LabelledStatus::Recognisable);
            REQUIRE(r.unlabelled_recognisable);
        }
        if (r.unlabelled_recognisable)
            REQUIRE(r.labelled == LabelledStatus::Recognisable);
    }
}

TEST_CASE("catalog JSON round-trip is bit-exact") {
    const Catalog& c = builtin_catalog();
    std::string once = catalog_to_string(c);
    Catalog back = catalog_from_json(json::parse(once));
    REQUIRE(catalog_to_string(back) == once);
    REQUIRE(validate_catalog(back).empty());
}

TEST_CASE("catalog golden file matches byte for byte") {
    std::string golden = read_file(std::string(GK_SOURCE_DIR) +
                                   "/tests/data/catalog.golden.json");
    REQUIRE(catalog_to_string(builtin_catalog()) == golden);
}

TEST_CASE("injected fault: graph vertex without a matching order prime") {
    Catalog c = builtin_catalog();
    for (auto& e : c.entries)
        if (e.id == GroupId::sporadic_group(SporadicName::M11))
            e.graph = e.graph.with_vertex(Vertex::prime(13));
    auto v = validate_catalog(c);
    bool hit = false;
    for (const auto& msg : v)
        if (msg.find("sporadic:M11") != std::string::npos &&
            msg.find("prime divisors of the order") != std::string::npos)
            hit = true;
    REQUIRE(hit);
}

TEST_CASE("injected fault: Ru marked labelled-recognisable") {
    Catalog c = builtin_catalog();
    for (auto& r : c.recognisability)
        if (r.group == SporadicName::Ru) {
            r.labelled = LabelledStatus::Recognisable;
            r.k = 0;
        }
    auto v = validate_catalog(c);
    bool hit = false;
    for (const auto& msg : v)
        if (msg.find("Ru must not be labelled-recognisable") != std::string::npos)
            hit = true;
    REQUIRE(hit);
}

TEST_CASE("injected fault: empty citation") {
    Catalog c = builtin_catalog();
    c.facts[0].citation.clear();
    auto v = validate_catalog(c);
    bool hit = false;
    for (const auto& msg : v)
        if (msg.find("no citation") != std::string::npos) hit = true;
    REQUIRE(hit);
}

TEST_CASE("injected fault: out-of-range min_avoid") {
    Catalog c = builtin_catalog();
    for (auto& f : c.facts)
        if (f.kind == FactKind::NoModuleAvoiding) {
            f.min_avoid = static_cast<unsigned>(f.avoiding.size()) + 1;
            break;
        }
    auto v = validate_catalog(c);
    bool hit = false;
    for (const auto& msg : v)
        if (msg.find("out-of-range min_avoid") != std::string::npos) hit = true;
    REQUIRE(hit);
}

TEST_CASE("injected fault: duplicate entry id") {
    Catalog c = builtin_catalog();
    c.entries.push_back(c.entries.front());
    auto v = validate_catalog(c);
    bool hit = false;
    for (const auto& msg : v)
        if (msg.find("duplicate entry id") != std::string::npos) hit = true;
    REQUIRE(hit);
}

TEST_CASE("injected fault: prime both fixing and avoiding") {
    Catalog c = builtin_catalog();
    for (auto& f : c.facts)
        if (f.kind == FactKind::NoModuleAvoiding && !f.avoiding.empty()) {
            f.fixing.push_back(f.avoiding.front());
            break;
        }
    auto v = validate_catalog(c);
    bool hit = false;
    for (const auto& msg : v)
        if (msg.find("both fixing and avoiding") != std::string::npos) hit = true;
    REQUIRE(hit);
}

TEST_CASE("independence numbers on catalog graphs match subset enumeration") {
    for (const CatalogEntry& e : builtin_catalog().entries) {
        if (!e.has_graph || e.graph.vertex_count() > 12) continue;
        INFO(e.id.key());
        REQUIRE(e.graph.independence_number() == oracle_independence(e.graph));
    }
}

TEST_CASE("invariant table for the eight targets") {
    const Catalog& c = builtin_catalog();
    struct Row {
        SporadicName g;
        unsigned pi, s, t;
    };
    for (const Row& row : std::initializer_list<Row>{
             {SporadicName::Fi24p, 9, 4, 6},
             {SporadicName::Ly, 8, 4, 6},
             {SporadicName::ON, 7, 4, 5},
             {SporadicName::B, 11, 3, 8},
             {SporadicName::Th, 7, 3, 5},
             {SporadicName::Fi23, 8, 3, 5},
         }) {
        const auto& g = get_entry(c, GroupId::sporadic_group(row.g)).graph;
        INFO(sporadic_to_string(row.g));
        REQUIRE(g.vertex_count() == row.pi);
        REQUIRE(g.component_count() == row.s);
        REQUIRE(g.independence_number() == row.t);
    }
    const auto& m = get_entry(c, GroupId::sporadic_group(SporadicName::M)).graph;
    REQUIRE(m.vertex_count() == 15);
    REQUIRE(m.component_count() == 4);
    REQUIRE(m.independence_number() >= 11);
    const auto& j4 = get_entry(c, GroupId::sporadic_group(SporadicName::J4)).graph;
    REQUIRE(j4.vertex_count() == 10);
    REQUIRE(j4.component_count() == 6);
    REQUIRE(j4.independence_number() == 7);
    // The component of 2 has five vertices and is not a coclique.
    REQUIRE(j4.components().front().size() == 5);
    REQUIRE(j4.edge_count() > 0);
}

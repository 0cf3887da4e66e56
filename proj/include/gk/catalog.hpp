#ifndef GK_CATALOG_HPP
#define GK_CATALOG_HPP

// The embedded data catalog: prime-graph entries for the sporadic groups and
// the explicitly known exceptional instances, a registry of character-theoretic
// facts (which element orders fix vectors in which modules), the labelled /
// unlabelled recognisability table, and the witness constructions used to
// certify unrecognisability.  Facts are data, not computation: each record
// carries a literature citation and consumers refuse uncited facts.

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "gk/errors.hpp"
#include "gk/families.hpp"
#include "gk/graph.hpp"
#include "gk/graph_io.hpp"
#include "gk/numtheory.hpp"
#include "gk/sporadic_data.hpp"

namespace gk {

// ---------------------------------------------------------------------------
// Fact records
// ---------------------------------------------------------------------------

// The characteristic(s) in which a module-theoretic fact holds.
enum class CharClass {
    Concrete,   // a listed set of concrete primes
    Coprime,    // any characteristic coprime to |S|
    AnyFitting, // any prime dividing the Fitting subgroup of the ambient group
};

struct Characteristic {
    CharClass cls = CharClass::Coprime;
    std::vector<u64> primes; // used when cls == Concrete

    static Characteristic concrete(std::vector<u64> ps) {
        return {CharClass::Concrete, std::move(ps)};
    }
    static Characteristic coprime() { return {CharClass::Coprime, {}}; }
    static Characteristic any_fitting() { return {CharClass::AnyFitting, {}}; }

    friend bool operator==(const Characteristic&, const Characteristic&) = default;
};

enum class FactKind {
    // Every element of order p, for p in `fixing` (or for every prime divisor
    // of |S| when fixes_all), fixes a non-zero vector in every faithful
    // irreducible module in the stated characteristic.
    ForcedFix,
    // A specific faithful irreducible module exists: elements of order p fix
    // non-zero vectors exactly for p in `fixing`; elements of order p act
    // fixed-point-freely for p in `avoiding`.
    ModuleExists,
    // An outer automorphism of prime order centralises elements of each order
    // listed in `fixing` (yielding edges from the outer prime to those primes).
    CentralizerEdge,
    // No faithful irreducible module in the stated characteristic has at least
    // (or, with exact_avoid, exactly) min_avoid of the listed primes acting
    // fixed-point-freely.
    NoModuleAvoiding,
};

struct FactRecord {
    GroupId subject;
    bool family_wide = false; // applies to every parameter of subject.family
    FactKind kind = FactKind::ForcedFix;
    Characteristic characteristic;
    std::vector<u64> fixing;
    bool fixes_all = false;
    std::vector<u64> avoiding;
    unsigned min_avoid = 0;
    bool exact_avoid = false;
    unsigned dimension = 0; // module dimension when known (ModuleExists)
    std::string context;
    std::string citation;

    friend bool operator==(const FactRecord&, const FactRecord&) = default;
};

// ---------------------------------------------------------------------------
// Recognisability table
// ---------------------------------------------------------------------------

struct RecognisabilityRow {
    SporadicName group = SporadicName::M11;
    LabelledStatus labelled = LabelledStatus::Recognisable;
    unsigned k = 0; // for KRecognisable: the number of groups sharing the labelled graph
    bool unlabelled_recognisable = false;

    friend bool operator==(const RecognisabilityRow&, const RecognisabilityRow&) = default;
};

// ---------------------------------------------------------------------------
// Catalog entries
// ---------------------------------------------------------------------------

struct CatalogEntry {
    GroupId id;
    bool has_graph = true; // false: component data only, adjacency not recorded
    PrimeGraph graph;
    Factorization order;
    Factorization out_order;
    std::vector<std::string> citations;
};

// ---------------------------------------------------------------------------
// Witness constructions (replayed by the extensions module)
// ---------------------------------------------------------------------------

enum class StepKind { Affine, AddEdges, AddOuterPrime };

struct ExtensionStep {
    StepKind kind = StepKind::Affine;
    Vertex r = Vertex::prime(2);           // Affine: the module characteristic
    std::vector<u64> fixing;               // Affine: primes gaining an edge to r
    std::vector<u64> avoiding;             // Affine: primes guaranteed non-adjacent to r
    std::vector<std::pair<u64, u64>> edges; // AddEdges / AddOuterPrime adjacency
    u64 prime = 0;                         // AddOuterPrime: the outer prime
    std::string citation;

    static ExtensionStep affine(Vertex r, std::vector<u64> fixing,
                                std::vector<u64> avoiding, std::string citation) {
        ExtensionStep s;
        s.kind = StepKind::Affine;
        s.r = r;
        s.fixing = std::move(fixing);
        s.avoiding = std::move(avoiding);
        s.citation = std::move(citation);
        return s;
    }
    static ExtensionStep add_edges(std::vector<std::pair<u64, u64>> edges,
                                   std::string citation) {
        ExtensionStep s;
        s.kind = StepKind::AddEdges;
        s.edges = std::move(edges);
        s.citation = std::move(citation);
        return s;
    }
    static ExtensionStep add_outer_prime(u64 p, std::vector<std::pair<u64, u64>> edges,
                                         std::string citation) {
        ExtensionStep s;
        s.kind = StepKind::AddOuterPrime;
        s.prime = p;
        s.edges = std::move(edges);
        s.citation = std::move(citation);
        return s;
    }
};

struct WitnessSpec {
    SporadicName target = SporadicName::M11;
    GroupId base;
    std::vector<ExtensionStep> steps;
    std::string citation;
};

struct Catalog {
    std::vector<CatalogEntry> entries;
    std::vector<FactRecord> facts;
    std::vector<RecognisabilityRow> recognisability;
    std::vector<WitnessSpec> witnesses;
};

// ---------------------------------------------------------------------------
// Built-in data
// ---------------------------------------------------------------------------

namespace detail {

inline CatalogEntry sporadic_entry(const SporadicRecord& rec) {
    CatalogEntry e;
    e.id = GroupId::sporadic_group(rec.name);
    e.graph = sporadic_graph(rec.name);
    e.order = sporadic_order(rec.name);
    e.out_order = factorize(rec.out_order);
    e.citations = {rec.citation};
    return e;
}

inline CatalogEntry family_entry(const GroupId& id, std::string citation) {
    CatalogEntry e;
    e.id = id;
    e.graph = prime_graph(id);
    e.order = order(id);
    e.out_order = factorize(out_order_value(id));
    e.citations = {std::move(citation)};
    return e;
}

inline CatalogEntry component_only_entry(const GroupId& id, std::string citation) {
    CatalogEntry e;
    e.id = id;
    e.has_graph = false;
    e.order = order(id);
    e.out_order = factorize(out_order_value(id));
    e.citations = {std::move(citation)};
    return e;
}

inline Catalog build_catalog() {
    Catalog c;

    // --- Entries: the 26 sporadic groups -----------------------------------
    for (const SporadicRecord& rec : sporadic_records())
        c.entries.push_back(sporadic_entry(rec));

    // --- Entries: explicitly known non-sporadic graphs ---------------------
    c.entries.push_back(family_entry(GroupId::psl3_4(), "ATLAS p.23"));
    c.entries.push_back(family_entry(GroupId::psu4_3(), "ATLAS p.52"));
    c.entries.push_back(family_entry(GroupId::psu6_2(), "ATLAS p.115"));
    c.entries.push_back(family_entry(GroupId::two_e6_2(), "ATLAS p.191"));
    c.entries.push_back(family_entry(GroupId::f4(1), "ATLAS p.167"));
    c.entries.push_back(family_entry(GroupId::two_f4(1),
                                     "Shinoda 1975; Vasil'ev-Vdovin 2005"));
    c.entries.push_back(family_entry(GroupId::two_g2(1), "ATLAS p.6; Ward 1966"));
    c.entries.push_back(family_entry(GroupId::pomega_minus(5),
                                     "ATLAS p.141; Zavarnitsine 2006"));

    // Component-structure only: the full adjacency of these graphs is not
    // recorded, only the partition of the vertex set into components.
    c.entries.push_back(component_only_entry(GroupId::e7_2(),
                                             "Kondrat'ev 1989; Vasil'ev-Vdovin 2005"));
    c.entries.push_back(component_only_entry(GroupId::e7_3(),
                                             "Kondrat'ev 1989; Vasil'ev-Vdovin 2005"));

    std::sort(c.entries.begin(), c.entries.end(),
              [](const CatalogEntry& a, const CatalogEntry& b) {
                  return a.id.key() < b.id.key();
              });

    // --- Facts -------------------------------------------------------------
    auto sp = [](SporadicName n) { return GroupId::sporadic_group(n); };
    auto forced_fix = [](GroupId subject, Characteristic ch, std::vector<u64> fixing,
                         std::string context, std::string citation) {
        FactRecord f;
        f.subject = subject;
        f.kind = FactKind::ForcedFix;
        f.characteristic = std::move(ch);
        f.fixing = std::move(fixing);
        f.context = std::move(context);
        f.citation = std::move(citation);
        return f;
    };

    // Elements of the listed orders fix non-zero vectors in every faithful
    // irreducible module in every coprime characteristic.
    c.facts.push_back(forced_fix(
        GroupId::two_e6_2(), Characteristic::coprime(), {13, 17, 19},
        "elements of order 13, 17, or 19 fix non-zero vectors in every faithful "
        "irreducible module in coprime characteristic",
        "ATLAS p.191; GAP character table library"));
    c.facts.push_back(forced_fix(
        sp(SporadicName::ON), Characteristic::coprime(), {11, 19, 31},
        "elements of order 11, 19, or 31 fix non-zero vectors in every faithful "
        "irreducible module in coprime characteristic",
        "ATLAS p.132; GAP character table library"));
    c.facts.push_back(forced_fix(
        sp(SporadicName::ON), Characteristic::coprime(), {3, 5, 7, 11, 19, 31},
        "elements of every odd prime order fix non-zero vectors in every faithful "
        "irreducible module in coprime characteristic",
        "ATLAS p.132; GAP character table library"));
    c.facts.push_back(forced_fix(
        sp(SporadicName::Ly), Characteristic::coprime(), {31, 37, 67},
        "elements of order 31, 37, or 67 fix non-zero vectors in every faithful "
        "irreducible module in coprime characteristic",
        "ATLAS p.174; GAP character table library"));
    c.facts.push_back(forced_fix(
        sp(SporadicName::M22), Characteristic::coprime(), {3},
        "elements of order 3 fix non-zero vectors in every faithful irreducible "
        "module in coprime characteristic",
        "ATLAS p.39; GAP character table library"));
    c.facts.push_back(forced_fix(
        sp(SporadicName::J1), Characteristic::coprime(), {3},
        "elements of order 3 fix non-zero vectors in every faithful irreducible "
        "module in coprime characteristic",
        "ATLAS p.36; GAP character table library"));
    c.facts.push_back(forced_fix(
        sp(SporadicName::Suz), Characteristic::coprime(), {11},
        "elements of order 11 fix non-zero vectors in every faithful irreducible "
        "module in coprime characteristic",
        "ATLAS p.128; GAP character table library"));
    c.facts.push_back(forced_fix(
        sp(SporadicName::M24), Characteristic::coprime(), {11},
        "elements of order 11 fix non-zero vectors in every faithful irreducible "
        "module in coprime characteristic",
        "ATLAS p.96; GAP character table library"));
    c.facts.push_back(forced_fix(
        sp(SporadicName::M23), Characteristic::coprime(), {11},
        "elements of order 11 fix non-zero vectors in every faithful irreducible "
        "module in coprime characteristic",
        "ATLAS p.71; GAP character table library"));
    c.facts.push_back(forced_fix(
        sp(SporadicName::Co2), Characteristic::coprime(), {11},
        "elements of order 11 fix non-zero vectors in every faithful irreducible "
        "module in coprime characteristic",
        "ATLAS p.154; GAP character table library"));
    c.facts.push_back(forced_fix(
        sp(SporadicName::Th), Characteristic::coprime(), {19},
        "elements of order 19 fix non-zero vectors in every faithful irreducible "
        "module in coprime characteristic",
        "ATLAS p.177; GAP character table library"));
    c.facts.push_back(forced_fix(
        GroupId::two_g2(1), Characteristic::coprime(), {19},
        "elements of order 19 fix non-zero vectors in every faithful irreducible "
        "module in coprime characteristic",
        "ATLAS p.6; GAP character table library"));
    c.facts.push_back(forced_fix(
        GroupId::f4(1), Characteristic::coprime(), {13},
        "elements of order 13 fix non-zero vectors in every faithful irreducible "
        "module in coprime characteristic",
        "ATLAS p.167; GAP character table library"));
    c.facts.push_back(forced_fix(
        GroupId::pomega_minus(5), Characteristic::coprime(), {41},
        "elements of order 41 fix non-zero vectors in every faithful irreducible "
        "module in coprime characteristic",
        "ATLAS p.141; GAP character table library"));

    // Suzuki groups: in every coprime characteristic, elements of every prime
    // order fix non-zero vectors in every faithful irreducible module.
    {
        FactRecord f;
        f.subject = GroupId::two_b2(1);
        f.family_wide = true;
        f.kind = FactKind::ForcedFix;
        f.characteristic = Characteristic::coprime();
        f.fixes_all = true;
        f.context = "in every faithful irreducible module in coprime characteristic, "
                    "each prime divisor of the group order has an element fixing a "
                    "non-zero vector";
        f.citation = "Suzuki 1962; Brauer-character computation for Sz(q)";
        c.facts.push_back(f);
    }

    // J4: every isolated vertex of its prime graph fixes vectors in every
    // r-modular representation, for every prime r dividing a Fitting subgroup.
    c.facts.push_back(forced_fix(
        sp(SporadicName::J4), Characteristic::any_fitting(), {23, 29, 31, 37, 43},
        "for every prime r dividing the Fitting subgroup, elements of order 23, "
        "29, 31, 37, or 43 fix non-zero vectors in every faithful irreducible "
        "r-modular representation",
        "ATLAS p.190; GAP character table library"));

    // O'N in concrete characteristics (Brauer tables).
    c.facts.push_back(forced_fix(
        sp(SporadicName::ON), Characteristic::concrete({11, 19, 31}), {3, 5},
        "elements of orders 3 and 5 fix non-zero vectors in every faithful "
        "irreducible representation in characteristic 11, 19, or 31",
        "GAP Brauer character tables of O'N"));
    c.facts.push_back(forced_fix(
        sp(SporadicName::ON), Characteristic::concrete({2, 3, 5, 7}), {11, 31},
        "elements of order 11 and 31 fix non-zero vectors in every faithful "
        "irreducible representation in characteristic 2, 3, 5, or 7",
        "GAP Brauer character tables of O'N"));

    // 2E6(2) in characteristics 2 and 3, via Brauer tables of maximal subgroups.
    c.facts.push_back(forced_fix(
        GroupId::two_e6_2(), Characteristic::concrete({2, 3}), {13, 17},
        "elements of orders 13 and 17 fix non-zero vectors in every faithful "
        "irreducible representation in characteristic 2 or 3",
        "GAP Brauer character tables of the maximal subgroups Fi22 and F4(2)"));

    // No-module facts.
    {
        FactRecord f;
        f.subject = sp(SporadicName::J1);
        f.kind = FactKind::NoModuleAvoiding;
        f.characteristic = Characteristic::coprime();
        f.avoiding = {7, 11, 19};
        f.min_avoid = 2;
        f.context = "no faithful irreducible module in coprime characteristic has "
                    "two or more of these primes acting fixed-point-freely";
        f.citation = "ATLAS p.36; GAP character table library";
        c.facts.push_back(f);
    }
    {
        FactRecord f;
        f.subject = GroupId::two_e6_2();
        f.kind = FactKind::NoModuleAvoiding;
        f.characteristic = Characteristic::concrete({13, 17, 19});
        f.avoiding = {3, 5, 7, 11, 13, 17, 19};
        f.min_avoid = 6;
        f.context = "no faithful irreducible module in characteristic 13, 17, or 19 "
                    "has every element order coprime to the characteristic acting "
                    "fixed-point-freely";
        f.citation = "GAP Brauer character tables of 2E6(2)";
        c.facts.push_back(f);
    }
    // Ly in characteristics 5, 7, and 11: for a module in characteristic r in
    // {5,7,11}, elements of each order in {5,7,11} \ {r} fix non-zero vectors.
    c.facts.push_back(forced_fix(
        sp(SporadicName::Ly), Characteristic::concrete({5, 7, 11}), {5, 7, 11},
        "for characteristic r in {5,7,11}, elements of both orders in "
        "{5,7,11} minus {r} fix non-zero vectors in every faithful irreducible "
        "r-modular representation",
        "GAP Brauer character tables of Ly (characteristics 7, 11); "
        "5-modular character table of the maximal subgroup 3.McL.2"));

    // Centraliser facts for outer automorphisms.
    {
        FactRecord f;
        f.subject = GroupId::two_b2(1);
        f.family_wide = true;
        f.kind = FactKind::CentralizerEdge;
        f.fixing = {2, 5};
        f.context = "a field automorphism of prime order centralises a subgroup "
                    "Sz(2) = 5:4, so the outer prime is adjacent to 2 and 5";
        f.citation = "Suzuki 1962";
        c.facts.push_back(f);
    }
    {
        FactRecord f;
        f.subject = sp(SporadicName::ON);
        f.kind = FactKind::CentralizerEdge;
        f.fixing = {2, 3, 5, 7, 11, 19};
        f.context = "the centraliser of an outer involution has order divisible by "
                    "every prime divisor of the group order except 31";
        f.citation = "ATLAS p.132";
        c.facts.push_back(f);
    }
    {
        FactRecord f;
        f.subject = GroupId::two_e6_2();
        f.kind = FactKind::CentralizerEdge;
        f.fixing = {13, 17};
        f.context = "outer automorphisms of order 2 or 3 centralise elements of "
                    "orders 13 and 17";
        f.citation = "ATLAS p.191";
        c.facts.push_back(f);
    }

    // Modules used by the witness constructions.
    auto module_exists = [](GroupId subject, Characteristic ch, unsigned dim,
                            std::vector<u64> fixing, std::vector<u64> avoiding,
                            std::string context, std::string citation) {
        FactRecord f;
        f.subject = subject;
        f.kind = FactKind::ModuleExists;
        f.characteristic = std::move(ch);
        f.dimension = dim;
        f.fixing = std::move(fixing);
        f.avoiding = std::move(avoiding);
        f.context = std::move(context);
        f.citation = std::move(citation);
        return f;
    };
    c.facts.push_back(module_exists(
        sp(SporadicName::Ru), Characteristic::concrete({2}), 28, {3, 5, 7, 13}, {29},
        "28-dimensional module over F2 on which elements of order 29 act "
        "fixed-point-freely",
        "GAP 2-modular character table of Ru"));
    c.facts.push_back(module_exists(
        GroupId::psl2(61), Characteristic::concrete({2}), 30, {3, 5}, {31, 61},
        "30-dimensional module over F4 on which elements of order 31 and 61 act "
        "fixed-point-freely",
        "2-modular character table of PSL2(61)"));
    c.facts.push_back(module_exists(
        GroupId::two_b2(3), Characteristic::concrete({2}), 0, {},
        {5, 7, 29, 113, 127},
        "direct sum of the seven Frobenius twists of the natural 4-dimensional "
        "Sz(128) module, irreducible for Aut(Sz(128)); no element of odd prime "
        "order fixes a non-zero vector",
        "Martineau 1972; natural symplectic representation of Sz(q)"));
    c.facts.push_back(module_exists(
        GroupId::two_b2(9), Characteristic::concrete({2}), 16, {5},
        {229, 457, 524287, 525313},
        "tensor product of the natural Sz(2^19) module with its first Frobenius "
        "twist; only elements of order 5 fix non-zero vectors among odd orders",
        "Martineau 1972; natural symplectic representation of Sz(q)"));
    c.facts.push_back(module_exists(
        GroupId::two_b2(9), Characteristic::concrete({2}), 64, {5, 229},
        {457, 524287, 525313},
        "tensor product of the natural Sz(2^19) module with its first and fourth "
        "Frobenius twists; only elements of order 5 or 229 fix non-zero vectors "
        "among odd orders",
        "Martineau 1972; natural symplectic representation of Sz(q)"));
    c.facts.push_back(module_exists(
        sp(SporadicName::M23), Characteristic::concrete({2}), 11, {5, 11}, {23},
        "11-dimensional module over F2 on which, among odd orders, exactly the "
        "elements of orders 3, 5, 7, and 11 fix non-zero vectors",
        "GAP 2-modular character table of M23"));
    c.facts.push_back(module_exists(
        sp(SporadicName::M23), Characteristic::coprime(), 22, {2, 3, 5, 7, 11}, {23},
        "22-dimensional faithful irreducible module in any coprime characteristic; "
        "elements of all prime orders other than 23 fix non-zero vectors",
        "ATLAS p.71; GAP character table library"));
    c.facts.push_back(module_exists(
        sp(SporadicName::M24), Characteristic::concrete({3}), 22, {11}, {23},
        "22-dimensional module over F3 on which elements of order 11 fix non-zero "
        "vectors and elements of order 23 act fixed-point-freely",
        "GAP 3-modular character table of M24"));
    c.facts.push_back(module_exists(
        GroupId::alt(13), Characteristic::concrete({3}), 12, {11}, {13},
        "12-dimensional module over F3 on which elements of order 11 fix non-zero "
        "vectors and elements of order 13 act fixed-point-freely",
        "GAP 3-modular character table of Alt(13)"));

    // --- Recognisability table ---------------------------------------------
    for (const SporadicRecord& rec : sporadic_records()) {
        RecognisabilityRow row;
        row.group = rec.name;
        row.labelled = rec.labelled;
        row.k = rec.k_recognisable;
        row.unlabelled_recognisable = rec.unlabelled_recognisable;
        c.recognisability.push_back(row);
    }

    // --- Witness constructions ---------------------------------------------
    auto witness = [&](SporadicName target, GroupId base,
                       std::vector<ExtensionStep> steps, std::string citation) {
        WitnessSpec w;
        w.target = target;
        w.base = base;
        w.steps = std::move(steps);
        w.citation = std::move(citation);
        c.witnesses.push_back(std::move(w));
    };
    const std::string suz_unrec =
        "Suzuki groups are unrecognisable by their labelled prime graphs "
        "(Maslova et al.)";

    witness(SporadicName::J1, GroupId::two_b2(9), {}, suz_unrec);
    witness(SporadicName::M22, GroupId::two_b2(3), {}, suz_unrec);
    witness(SporadicName::M11, GroupId::g2(1),
            {}, "G2(3) is unrecognisable by its labelled prime graph (Maslova et al.)");
    witness(SporadicName::HS, GroupId::psl2(61),
            {ExtensionStep::affine(Vertex::prime(2), {}, {31, 61},
                                   "2-modular character table of PSL2(61)")},
            "an affine group F4^30 : PSL2(61) has this prime graph");
    witness(SporadicName::J3, GroupId::psl2(61),
            {ExtensionStep::affine(Vertex::prime(2), {}, {31, 61},
                                   "2-modular character table of PSL2(61)")},
            "an affine group F4^30 : PSL2(61) has this prime graph");
    witness(SporadicName::M23, GroupId::two_b2(3),
            {ExtensionStep::add_outer_prime(
                 7, {{2, 7}, {5, 7}},
                 "a field automorphism of order 7 centralises Sz(2) = 5:4"),
             ExtensionStep::affine(Vertex::prime(2), {}, {5, 29, 113, 127},
                                   "direct sum of the Frobenius twists of the "
                                   "natural Sz(128) module")},
            "an affine group V : Aut(Sz(128)) has this prime graph");
    witness(SporadicName::Co2, GroupId::two_b2(9),
            {ExtensionStep::affine(Vertex::prime(2), {5},
                                   {229, 457, 524287, 525313},
                                   "tensor square twist module for Sz(2^19)")},
            "an affine group V : Sz(2^19) has this prime graph");
    witness(SporadicName::M24, GroupId::two_b2(9),
            {ExtensionStep::affine(Vertex::prime(2), {5, 229},
                                   {457, 524287, 525313},
                                   "triple tensor twist module for Sz(2^19)")},
            "an affine group V : Sz(2^19) has this prime graph");
    witness(SporadicName::Suz, GroupId::two_b2(9),
            {ExtensionStep::affine(Vertex::prime(2), {5, 229},
                                   {457, 524287, 525313},
                                   "triple tensor twist module for Sz(2^19)")},
            "an affine group V : Sz(2^19) has this prime graph");
    witness(SporadicName::Ru, GroupId::sporadic_group(SporadicName::Ru),
            {ExtensionStep::affine(Vertex::prime(2), {}, {29},
                                   "28-dimensional F2 module with fixed-point-free "
                                   "action of elements of order 29")},
            "an affine group F2^28 : Ru has the same labelled prime graph");
    witness(SporadicName::Fi22, GroupId::sporadic_group(SporadicName::M24),
            {ExtensionStep::affine(Vertex::prime(3), {11}, {23},
                                   "22-dimensional F3 module for M24")},
            "an affine group F3^22 : M24 has this prime graph");
    witness(SporadicName::HN, GroupId::alt(13),
            {ExtensionStep::affine(Vertex::prime(3), {11}, {13},
                                   "12-dimensional F3 module for Alt(13)")},
            "an affine group F3^12 : Alt(13) has this prime graph");
    witness(SporadicName::Co1, GroupId::sporadic_group(SporadicName::M23),
            {ExtensionStep::affine(Vertex::prime(2), {5, 11}, {23},
                                   "11-dimensional F2 module for M23"),
             ExtensionStep::affine(Vertex::symbolic(1), {2, 3, 5, 7, 11}, {23},
                                   "22-dimensional coprime-characteristic module "
                                   "for M23")},
            "an affine group (F2^11 x Fr^22) : M23 has this prime graph");

    return c;
}

} // namespace detail

inline const Catalog& builtin_catalog() {
    static const Catalog c = detail::build_catalog();
    return c;
}

// ---------------------------------------------------------------------------
// Lookup
// ---------------------------------------------------------------------------

inline const CatalogEntry& get_entry(const Catalog& c, const GroupId& id) {
    for (const CatalogEntry& e : c.entries)
        if (e.id == id) return e;
    throw NotFound("catalog entry: " + id.key());
}

inline const CatalogEntry& get_entry(const GroupId& id) {
    return get_entry(builtin_catalog(), id);
}

inline std::vector<FactRecord> facts_for(const Catalog& c, const GroupId& id,
                                         std::optional<FactKind> kind = std::nullopt) {
    std::vector<FactRecord> out;
    for (const FactRecord& f : c.facts) {
        bool applies = f.family_wide ? f.subject.family == id.family : f.subject == id;
        if (!applies) continue;
        if (kind && f.kind != *kind) continue;
        out.push_back(f);
    }
    return out;
}

inline std::vector<FactRecord> facts_for(const GroupId& id,
                                         std::optional<FactKind> kind = std::nullopt) {
    return facts_for(builtin_catalog(), id, kind);
}

inline const WitnessSpec* find_witness(const Catalog& c, SporadicName target) {
    for (const WitnessSpec& w : c.witnesses)
        if (w.target == target) return &w;
    return nullptr;
}

// ---------------------------------------------------------------------------
// JSON serialization (keys sorted, byte-stable)
// ---------------------------------------------------------------------------

namespace detail {

inline json factorization_to_json(const Factorization& f) {
    json a = json::array();
    for (const auto& pp : f.factors)
        a.push_back(json::array({to_string_u128(pp.prime), pp.exponent}));
    return a;
}

inline Factorization factorization_from_json(const json& a) {
    Factorization f;
    for (const auto& pe : a) {
        if (!pe.is_array() || pe.size() != 2)
            throw ParseError("catalog json: bad prime power");
        f.factors.push_back({parse_u128(pe[0].get<std::string>()), pe[1].get<unsigned>()});
    }
    return f;
}

inline std::string char_class_name(CharClass c) {
    switch (c) {
        case CharClass::Concrete: return "concrete";
        case CharClass::Coprime: return "coprime";
        case CharClass::AnyFitting: return "any_fitting";
    }
    throw DomainError("char_class_name: bad enum");
}

inline CharClass char_class_parse(const std::string& s) {
    if (s == "concrete") return CharClass::Concrete;
    if (s == "coprime") return CharClass::Coprime;
    if (s == "any_fitting") return CharClass::AnyFitting;
    throw ParseError("catalog json: bad characteristic class '" + s + "'");
}

inline std::string fact_kind_name(FactKind k) {
    switch (k) {
        case FactKind::ForcedFix: return "forced_fix";
        case FactKind::ModuleExists: return "module_exists";
        case FactKind::CentralizerEdge: return "centralizer_edge";
        case FactKind::NoModuleAvoiding: return "no_module_avoiding";
    }
    throw DomainError("fact_kind_name: bad enum");
}

inline FactKind fact_kind_parse(const std::string& s) {
    if (s == "forced_fix") return FactKind::ForcedFix;
    if (s == "module_exists") return FactKind::ModuleExists;
    if (s == "centralizer_edge") return FactKind::CentralizerEdge;
    if (s == "no_module_avoiding") return FactKind::NoModuleAvoiding;
    throw ParseError("catalog json: bad fact kind '" + s + "'");
}

inline std::string labelled_status_name(LabelledStatus s) {
    switch (s) {
        case LabelledStatus::Recognisable: return "recognisable";
        case LabelledStatus::KRecognisable: return "k_recognisable";
        case LabelledStatus::Unrecognisable: return "unrecognisable";
    }
    throw DomainError("labelled_status_name: bad enum");
}

inline LabelledStatus labelled_status_parse(const std::string& s) {
    if (s == "recognisable") return LabelledStatus::Recognisable;
    if (s == "k_recognisable") return LabelledStatus::KRecognisable;
    if (s == "unrecognisable") return LabelledStatus::Unrecognisable;
    throw ParseError("catalog json: bad labelled status '" + s + "'");
}

inline std::string step_kind_name(StepKind k) {
    switch (k) {
        case StepKind::Affine: return "affine";
        case StepKind::AddEdges: return "add_edges";
        case StepKind::AddOuterPrime: return "add_outer_prime";
    }
    throw DomainError("step_kind_name: bad enum");
}

inline StepKind step_kind_parse(const std::string& s) {
    if (s == "affine") return StepKind::Affine;
    if (s == "add_edges") return StepKind::AddEdges;
    if (s == "add_outer_prime") return StepKind::AddOuterPrime;
    throw ParseError("catalog json: bad step kind '" + s + "'");
}

inline json u64_edges_to_json(const std::vector<std::pair<u64, u64>>& edges) {
    json a = json::array();
    for (auto [p, q] : edges) a.push_back(json::array({p, q}));
    return a;
}

inline std::vector<std::pair<u64, u64>> u64_edges_from_json(const json& a) {
    std::vector<std::pair<u64, u64>> out;
    for (const auto& e : a) {
        if (!e.is_array() || e.size() != 2) throw ParseError("catalog json: bad edge");
        out.push_back({e[0].get<u64>(), e[1].get<u64>()});
    }
    return out;
}

} // namespace detail

inline json catalog_to_json(const Catalog& c) {
    json j;
    j["version"] = 1;

    j["entries"] = json::array();
    for (const CatalogEntry& e : c.entries) {
        json je;
        je["id"] = e.id.key();
        if (e.has_graph) {
            json g = graph_to_json(e.graph);
            je["vertices"] = g["vertices"];
            je["edges"] = g["edges"];
        }
        je["order"] = detail::factorization_to_json(e.order);
        je["out_order"] = detail::factorization_to_json(e.out_order);
        je["citations"] = e.citations;
        j["entries"].push_back(je);
    }

    j["facts"] = json::array();
    for (const FactRecord& f : c.facts) {
        json jf;
        jf["subject"] = f.subject.key();
        jf["family_wide"] = f.family_wide;
        jf["kind"] = detail::fact_kind_name(f.kind);
        jf["characteristic"] = {{"class", detail::char_class_name(f.characteristic.cls)},
                                {"primes", f.characteristic.primes}};
        jf["fixing"] = f.fixing;
        jf["fixes_all"] = f.fixes_all;
        jf["avoiding"] = f.avoiding;
        jf["min_avoid"] = f.min_avoid;
        jf["exact_avoid"] = f.exact_avoid;
        jf["dimension"] = f.dimension;
        jf["context"] = f.context;
        jf["citation"] = f.citation;
        j["facts"].push_back(jf);
    }

    j["recognisability"] = json::array();
    for (const RecognisabilityRow& r : c.recognisability) {
        json jr;
        jr["group"] = sporadic_to_string(r.group);
        jr["labelled"] = detail::labelled_status_name(r.labelled);
        jr["k"] = r.k;
        jr["unlabelled"] = r.unlabelled_recognisable ? "recognisable" : "unrecognisable";
        j["recognisability"].push_back(jr);
    }

    j["witnesses"] = json::array();
    for (const WitnessSpec& w : c.witnesses) {
        json jw;
        jw["target"] = sporadic_to_string(w.target);
        jw["base"] = w.base.key();
        jw["steps"] = json::array();
        for (const ExtensionStep& s : w.steps) {
            json js;
            js["kind"] = detail::step_kind_name(s.kind);
            js["r"] = s.r.label();
            js["fixing"] = s.fixing;
            js["avoiding"] = s.avoiding;
            js["edges"] = detail::u64_edges_to_json(s.edges);
            js["prime"] = s.prime;
            js["citation"] = s.citation;
            jw["steps"].push_back(js);
        }
        jw["citation"] = w.citation;
        j["witnesses"].push_back(jw);
    }

    return j;
}

inline std::string catalog_to_string(const Catalog& c) {
    return catalog_to_json(c).dump(2) + "\n";
}

inline Catalog catalog_from_json(const json& j) {
    Catalog c;
    for (const auto& je : j.at("entries")) {
        CatalogEntry e;
        e.id = GroupId::parse(je.at("id").get<std::string>());
        if (je.contains("vertices")) {
            json g;
            g["vertices"] = je.at("vertices");
            g["edges"] = je.at("edges");
            e.graph = graph_from_json(g);
        } else {
            e.has_graph = false;
        }
        e.order = detail::factorization_from_json(je.at("order"));
        e.out_order = detail::factorization_from_json(je.at("out_order"));
        e.citations = je.at("citations").get<std::vector<std::string>>();
        c.entries.push_back(std::move(e));
    }
    for (const auto& jf : j.at("facts")) {
        FactRecord f;
        f.subject = GroupId::parse(jf.at("subject").get<std::string>());
        f.family_wide = jf.at("family_wide").get<bool>();
        f.kind = detail::fact_kind_parse(jf.at("kind").get<std::string>());
        f.characteristic.cls =
            detail::char_class_parse(jf.at("characteristic").at("class").get<std::string>());
        f.characteristic.primes =
            jf.at("characteristic").at("primes").get<std::vector<u64>>();
        f.fixing = jf.at("fixing").get<std::vector<u64>>();
        f.fixes_all = jf.at("fixes_all").get<bool>();
        f.avoiding = jf.at("avoiding").get<std::vector<u64>>();
        f.min_avoid = jf.at("min_avoid").get<unsigned>();
        f.exact_avoid = jf.at("exact_avoid").get<bool>();
        f.dimension = jf.at("dimension").get<unsigned>();
        f.context = jf.at("context").get<std::string>();
        f.citation = jf.at("citation").get<std::string>();
        c.facts.push_back(std::move(f));
    }
    for (const auto& jr : j.at("recognisability")) {
        RecognisabilityRow r;
        r.group = sporadic_from_string(jr.at("group").get<std::string>());
        r.labelled = detail::labelled_status_parse(jr.at("labelled").get<std::string>());
        r.k = jr.at("k").get<unsigned>();
        r.unlabelled_recognisable = jr.at("unlabelled").get<std::string>() == "recognisable";
        c.recognisability.push_back(r);
    }
    for (const auto& jw : j.at("witnesses")) {
        WitnessSpec w;
        w.target = sporadic_from_string(jw.at("target").get<std::string>());
        w.base = GroupId::parse(jw.at("base").get<std::string>());
        for (const auto& js : jw.at("steps")) {
            ExtensionStep s;
            s.kind = detail::step_kind_parse(js.at("kind").get<std::string>());
            s.r = Vertex::parse(js.at("r").get<std::string>());
            s.fixing = js.at("fixing").get<std::vector<u64>>();
            s.avoiding = js.at("avoiding").get<std::vector<u64>>();
            s.edges = detail::u64_edges_from_json(js.at("edges"));
            s.prime = js.at("prime").get<u64>();
            s.citation = js.at("citation").get<std::string>();
            w.steps.push_back(std::move(s));
        }
        w.citation = jw.at("citation").get<std::string>();
        c.witnesses.push_back(std::move(w));
    }
    return c;
}

// ---------------------------------------------------------------------------
// Validation
// ---------------------------------------------------------------------------

inline std::vector<std::string> validate_catalog(const Catalog& c) {
    std::vector<std::string> out;
    auto fail = [&](std::string msg) { out.push_back(std::move(msg)); };

    // --- Entries ------------------------------------------------------------
    std::set<std::string> seen_ids;
    for (const CatalogEntry& e : c.entries) {
        const std::string key = e.id.key();
        if (!seen_ids.insert(key).second) fail("duplicate entry id: " + key);
        if (e.citations.empty()) fail("entry " + key + ": no citations");
        for (const std::string& s : e.citations)
            if (s.empty()) fail("entry " + key + ": empty citation");

        if (e.has_graph) {
            std::set<u64> graph_primes;
            for (const Vertex& v : e.graph.vertices()) {
                if (v.is_symbolic()) {
                    fail("entry " + key + ": symbolic vertex in catalog graph");
                    continue;
                }
                graph_primes.insert(v.prime_value());
            }
            std::set<u64> order_primes;
            for (const auto& pp : e.order.factors) {
                if (pp.prime > ~u64(0)) {
                    fail("entry " + key + ": order prime exceeds 64 bits");
                    continue;
                }
                if (!is_prime(pp.prime))
                    fail("entry " + key + ": order factor " + to_string_u128(pp.prime) +
                         " is not prime");
                order_primes.insert(static_cast<u64>(pp.prime));
            }
            if (graph_primes != order_primes)
                fail("entry " + key + ": graph vertex set differs from the prime "
                     "divisors of the order");
        }

        if (e.id.family == Family::Sporadic) {
            const SporadicRecord& rec = sporadic_record(e.id.sporadic);
            if (factored_decimal(e.order) != rec.order_decimal)
                fail("entry " + key + ": order does not multiply out to " +
                     rec.order_decimal);
            if (e.out_order.value() != rec.out_order)
                fail("entry " + key + ": outer automorphism order mismatch");
            if (e.has_graph && !rec.table_components.empty()) {
                std::vector<std::vector<u64>> comps;
                for (const auto& comp : e.graph.components()) {
                    std::vector<u64> primes;
                    for (const Vertex& v : comp)
                        if (!v.is_symbolic()) primes.push_back(v.prime_value());
                    std::sort(primes.begin(), primes.end());
                    comps.push_back(std::move(primes));
                }
                std::vector<std::vector<u64>> expected = rec.table_components;
                for (auto& comp : expected) std::sort(comp.begin(), comp.end());
                if (comps != expected)
                    fail("entry " + key + ": components disagree with the tabulated "
                         "component partition");
            }
        }
    }

    // --- Facts --------------------------------------------------------------
    for (size_t i = 0; i < c.facts.size(); ++i) {
        const FactRecord& f = c.facts[i];
        const std::string tag = "fact " + std::to_string(i) + " (" + f.subject.key() + ")";
        if (f.citation.empty()) fail(tag + ": no citation");
        std::set<u64> fx(f.fixing.begin(), f.fixing.end());
        for (u64 p : f.avoiding)
            if (fx.count(p)) fail(tag + ": prime " + std::to_string(p) +
                                  " both fixing and avoiding");
        if (f.characteristic.cls == CharClass::Concrete) {
            if (f.characteristic.primes.empty())
                fail(tag + ": concrete characteristic with no primes");
            for (u64 p : f.characteristic.primes)
                if (!is_prime(p))
                    fail(tag + ": characteristic " + std::to_string(p) + " is not prime");
        } else if (!f.characteristic.primes.empty()) {
            fail(tag + ": characteristic primes listed for a non-concrete class");
        }
        if (f.kind == FactKind::ForcedFix && f.fixing.empty() && !f.fixes_all)
            fail(tag + ": forced-fix fact with nothing fixed");
        if (f.kind == FactKind::NoModuleAvoiding) {
            if (f.avoiding.empty()) fail(tag + ": no-module fact with empty prime set");
            if (f.min_avoid == 0 || f.min_avoid > f.avoiding.size())
                fail(tag + ": no-module fact with out-of-range min_avoid");
        }
        if (f.kind == FactKind::CentralizerEdge && f.fixing.empty())
            fail(tag + ": centralizer fact with no adjacent primes");
    }

    // --- Recognisability ----------------------------------------------------
    const std::set<SporadicName> theorem_groups = {
        SporadicName::B,  SporadicName::Fi23, SporadicName::Fi24p, SporadicName::J4,
        SporadicName::Ly, SporadicName::M,    SporadicName::ON,    SporadicName::Th};
    std::set<SporadicName> seen_groups, unlabelled_set;
    for (const RecognisabilityRow& r : c.recognisability) {
        const std::string name = sporadic_to_string(r.group);
        if (!seen_groups.insert(r.group).second)
            fail("recognisability: duplicate row for " + name);
        if (r.unlabelled_recognisable) {
            unlabelled_set.insert(r.group);
            if (r.labelled != LabelledStatus::Recognisable)
                fail("recognisability: " + name +
                     " unlabelled-recognisable but not labelled-recognisable");
        }
        if (r.labelled == LabelledStatus::KRecognisable && r.k < 2)
            fail("recognisability: " + name + " k-recognisable with k < 2");
        if (r.labelled != LabelledStatus::KRecognisable && r.k != 0)
            fail("recognisability: " + name + " has a spurious k value");
        if (r.group == SporadicName::Ru && r.labelled == LabelledStatus::Recognisable)
            fail("recognisability: Ru must not be labelled-recognisable");
    }
    if (seen_groups.size() != all_sporadic_names().size())
        fail("recognisability: expected one row per sporadic group");
    if (seen_groups.size() == all_sporadic_names().size() &&
        unlabelled_set != theorem_groups)
        fail("recognisability: unlabelled-recognisable set is not the expected "
             "eight groups");

    // --- Witnesses ----------------------------------------------------------
    for (const WitnessSpec& w : c.witnesses) {
        const std::string name = sporadic_to_string(w.target);
        if (w.citation.empty()) fail("witness " + name + ": no citation");
        for (const ExtensionStep& s : w.steps) {
            if (s.citation.empty()) fail("witness " + name + ": step without citation");
            std::set<u64> fx(s.fixing.begin(), s.fixing.end());
            for (u64 p : s.avoiding)
                if (fx.count(p))
                    fail("witness " + name + ": step prime " + std::to_string(p) +
                         " both fixing and avoiding");
        }
        for (const RecognisabilityRow& r : c.recognisability)
            if (r.group == w.target && r.unlabelled_recognisable)
                fail("witness " + name + ": target is marked unlabelled-recognisable");
    }

    return out;
}

} // namespace gk

#endif // GK_CATALOG_HPP

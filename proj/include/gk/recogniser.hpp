#ifndef GK_RECOGNISER_HPP
#define GK_RECOGNISER_HPP

// The proof-replay engine.  For each of the eight sporadic groups that are
// recognisable by the isomorphism type of their prime graph, enumerate every
// candidate socle S (a non-abelian simple group with s(S) >= s(G) and
// |pi(S)| <= |pi(G)|) and eliminate it through an ordered rule pipeline:
//
//   R1  cardinalities (vertex and edge counts),
//   R2  the coclique bound t(S) >= t(G) - 1,
//   R3  the bound t(2,S) >= t(2,G),
//   R4  structural embedding: Gamma(S) must be a subgraph of Gamma(G),
//   R5  fact-driven forced edges (Fitting primes, outer automorphisms,
//       module fixed points) contradicting component / isolated-vertex /
//       clique requirements of Gamma(G),
//   R6  exhaustive completion search with a final isomorphism test.
//
// Every rule invocation that relies on group- or character-theoretic input
// pulls it from the catalog's fact registry; absent facts raise MissingFact
// rather than being assumed.  The remaining 18 sporadic groups route to
// witness verification instead.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "gk/catalog.hpp"
#include "gk/errors.hpp"
#include "gk/extensions.hpp"
#include "gk/families.hpp"
#include "gk/graph.hpp"
#include "gk/graph_io.hpp"
#include "gk/numtheory.hpp"

namespace gk {

// ---------------------------------------------------------------------------
// Candidates and reports
// ---------------------------------------------------------------------------

struct Candidate {
    bool is_slice = false;
    GroupId id;                // concrete candidate
    Family family = Family::TwoB2; // family slice
    std::string predicate;     // slice: human-readable parameter range
    std::vector<u64> params;   // slice: finite parameter list when resolved

    static Candidate concrete(GroupId g) {
        Candidate c;
        c.id = g;
        return c;
    }
    static Candidate family_slice(Family f, std::string predicate,
                                  std::vector<u64> params = {}) {
        Candidate c;
        c.is_slice = true;
        c.family = f;
        c.predicate = std::move(predicate);
        c.params = std::move(params);
        return c;
    }

    std::string key() const;
    std::string display() const;
};

struct EliminationReport {
    SporadicName target = SporadicName::M11;
    Candidate candidate;
    bool eliminated = true;
    std::string rule;  // "R1" .. "R6"
    std::string trace;
    std::string citation;
    bool earlier_rule = false; // eliminated before the rule the literature uses
    std::optional<PrimeGraph> completion; // present iff !eliminated
};

// Search space description for R6: k anonymous new primes, the forced
// skeleton they generate, and the number of edges still to be chosen.
struct CompletionConstraints {
    unsigned new_primes = 0;
    PrimeGraph forced;       // Gamma(S) + new vertices + forced edges
    unsigned edge_budget = 0;
};

enum class SearchOrder { Forward, Reverse };

struct RecognitionResult {
    SporadicName target = SporadicName::M11;
    bool recognisable = false;
    std::string summary;
    std::vector<EliminationReport> reports; // recognisable targets
    RecognisabilityRow row;
    std::optional<WitnessSpec> witness;
    std::optional<WitnessVerification> verification;
    std::string citation;
};

// ---------------------------------------------------------------------------
// Display helpers
// ---------------------------------------------------------------------------

namespace detail {

inline std::string number_word(unsigned n) {
    static const char* words[] = {"zero", "one",  "two", "three", "four",
                                  "five", "six",  "seven", "eight", "nine",
                                  "ten",  "eleven", "twelve"};
    return n <= 12 ? words[n] : std::to_string(n);
}

inline std::string family_tag(Family f) {
    switch (f) {
        case Family::Alt: return "alt";
        case Family::PSL2: return "psl2";
        case Family::POmegaMinus: return "pomega_minus";
        case Family::G2: return "g2";
        case Family::TwoG2: return "2g2";
        case Family::F4: return "f4";
        case Family::TwoF4: return "2f4";
        case Family::TwoB2: return "sz";
        case Family::E8: return "e8";
        default: break;
    }
    throw DomainError("family_tag: family has no slice form");
}

inline std::string family_slice_display(Family f) {
    switch (f) {
        case Family::Alt: return "Alt(p), p and p-2 prime";
        case Family::PSL2: return "PSL2(q)";
        case Family::POmegaMinus: return "POmega-(2p,3), p = 2^m+1 prime";
        case Family::G2: return "G2(3^k), k >= 1";
        case Family::TwoG2: return "2G2(3^(2m+1)), m >= 1";
        case Family::F4: return "F4(2^k), k >= 1";
        case Family::TwoF4: return "2F4(2^(2m+1)), m >= 1";
        case Family::TwoB2: return "Sz(2^(2m+1)), m >= 1";
        case Family::E8: return "E8(q)";
        default: break;
    }
    throw DomainError("family_slice_display: family has no slice form");
}

inline std::string family_slice_citation(Family f) {
    switch (f) {
        case Family::Alt: return "Williams 1981";
        case Family::PSL2: return "Williams 1981";
        case Family::POmegaMinus: return "Kondrat'ev 1989; Zavarnitsine 2006";
        case Family::G2: return "Williams 1981; Kondrat'ev 1989";
        case Family::TwoG2: return "Ward 1966; Kondrat'ev 1989";
        case Family::F4: return "Kondrat'ev 1989; Vasil'ev-Vdovin 2005";
        case Family::TwoF4: return "Shinoda 1975; Vasil'ev-Vdovin 2005";
        case Family::TwoB2: return "Suzuki 1962";
        default: break;
    }
    throw DomainError("family_slice_citation: family has no slice form");
}

inline std::string pow2_string(unsigned e) {
    if (e <= 10) return std::to_string(u64(1) << e);
    return "2^" + std::to_string(e);
}

inline std::string concrete_display(const GroupId& id) {
    switch (id.family) {
        case Family::Sporadic: return sporadic_to_string(id.sporadic);
        case Family::Alt: return "Alt(" + std::to_string(id.param) + ")";
        case Family::PSL2: return "PSL2(" + std::to_string(id.param) + ")";
        case Family::PSL3_4: return "PSL3(4)";
        case Family::PSU4_3: return "PSU4(3)";
        case Family::PSU6_2: return "PSU6(2)";
        case Family::POmegaMinus:
            return "POmega" + std::to_string(2 * id.param) + "-(3)";
        case Family::G2: {
            u64 q = 1;
            for (u64 i = 0; i < id.param; ++i) q *= 3;
            return "G2(" + std::to_string(q) + ")";
        }
        case Family::TwoG2: {
            u64 q = 1;
            for (u64 i = 0; i < 2 * id.param + 1; ++i) q *= 3;
            return "2G2(" + std::to_string(q) + ")";
        }
        case Family::F4:
            return "F4(" + pow2_string(static_cast<unsigned>(id.param)) + ")";
        case Family::TwoF4:
            return "2F4(" + pow2_string(static_cast<unsigned>(2 * id.param + 1)) + ")";
        case Family::TwoB2:
            return "Sz(" + pow2_string(static_cast<unsigned>(2 * id.param + 1)) + ")";
        case Family::TwoE6_2: return "2E6(2)";
        case Family::E7_2: return "E7(2)";
        case Family::E7_3: return "E7(3)";
        case Family::E8: return "E8(" + std::to_string(id.param) + ")";
    }
    throw DomainError("concrete_display: bad family");
}

inline std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

inline std::string prime_list_text(const std::vector<u64>& ps) {
    std::vector<std::string> parts;
    for (u64 p : ps) parts.push_back(std::to_string(p));
    return join(parts, ", ");
}

inline std::string vertex_list_text(const std::vector<Vertex>& vs) {
    std::vector<std::string> parts;
    for (const Vertex& v : vs) parts.push_back(v.label());
    return join(parts, ", ");
}

// Merge citation strings, splitting on "; " so repeated fragments collapse,
// keeping first-seen order.
inline std::string merge_citations(const std::vector<std::string>& parts) {
    std::vector<std::string> kept;
    for (const auto& p : parts) {
        size_t pos = 0;
        while (pos <= p.size()) {
            size_t next = p.find("; ", pos);
            std::string frag = p.substr(pos, next == std::string::npos
                                                  ? std::string::npos
                                                  : next - pos);
            pos = next == std::string::npos ? p.size() + 1 : next + 2;
            if (frag.empty()) continue;
            if (std::find(kept.begin(), kept.end(), frag) == kept.end())
                kept.push_back(std::move(frag));
        }
    }
    return join(kept, "; ");
}

} // namespace detail

inline std::string Candidate::key() const {
    if (is_slice) return detail::family_tag(family) + "-family";
    return id.key();
}

inline std::string Candidate::display() const {
    if (!is_slice) return detail::concrete_display(id);
    std::string out = detail::family_slice_display(family);
    if (!predicate.empty()) out += " [" + predicate + "]";
    return out;
}

// ---------------------------------------------------------------------------
// Target data and fact access
// ---------------------------------------------------------------------------

namespace detail {

struct TargetData {
    SporadicName name = SporadicName::M11;
    PrimeGraph graph;
    GraphInvariants inv;
    unsigned coclique_need = 0; // t(G) - 1
    unsigned min_t_at = 0;      // min over vertices v of t(v, G)
    std::string display;
    std::string citation;
};

inline TargetData target_data(const Catalog& cat, SporadicName name) {
    TargetData t;
    t.name = name;
    const CatalogEntry& e = get_entry(cat, GroupId::sporadic_group(name));
    t.graph = e.graph;
    t.inv = invariants(e.graph);
    t.coclique_need = t.inv.independence_number - 1;
    t.min_t_at = t.inv.independence_number;
    for (const Vertex& v : t.graph.vertices())
        t.min_t_at = std::min(t.min_t_at, t.graph.t_at(v));
    t.display = sporadic_to_string(name);
    t.citation = e.citations.empty() ? std::string() : e.citations.front();
    return t;
}

// The graph of a concrete candidate: catalog entry if present, otherwise the
// family builder.
inline PrimeGraph candidate_graph(const Catalog& cat, const GroupId& id) {
    for (const CatalogEntry& e : cat.entries)
        if (e.id == id && e.has_graph) return e.graph;
    return prime_graph(id);
}

inline std::vector<u64> graph_primes(const PrimeGraph& g) {
    std::vector<u64> out;
    for (const Vertex& v : g.vertices())
        if (!v.is_symbolic()) out.push_back(v.prime_value());
    return out;
}

inline std::vector<u64> out_order_primes(const Catalog& cat, const GroupId& id) {
    Factorization f;
    bool found = false;
    for (const CatalogEntry& e : cat.entries)
        if (e.id == id) { f = e.out_order; found = true; break; }
    if (!found) f = factorize(detail::out_order_value(id));
    std::vector<u64> out;
    for (const auto& pp : f.factors) out.push_back(static_cast<u64>(pp.prime));
    return out;
}

inline std::vector<u64> fixing_of(const FactRecord& f, const std::vector<u64>& s_primes) {
    return f.fixes_all ? s_primes : f.fixing;
}

// ---------------------------------------------------------------------------
// Forced extension graphs (rule R5, k >= 1 new primes)
// ---------------------------------------------------------------------------

struct ForcedBuild {
    PrimeGraph graph;                 // skeleton + fact-forced edges
    std::vector<Vertex> new_vertices;
    std::vector<u64> forced_adjacent; // primes forced adjacent to every new prime
    std::vector<std::string> fact_contexts;
    std::vector<std::string> citations;
};

// Gamma(S) extended by k new Fitting primes: each is adjacent to 2
// (a prime not adjacent to 2 cannot divide |F(H)|), the new primes are
// pairwise adjacent (F(H) is a direct product of its Sylow subgroups), and
// ForcedFix facts in coprime (or any-Fitting) characteristic contribute edges
// from each new prime to the fixed element orders.
inline ForcedBuild build_forced(const Catalog& cat, const GroupId& id,
                                const PrimeGraph& s_graph, unsigned k) {
    ForcedBuild out;
    out.graph = s_graph;
    for (unsigned i = 1; i <= k; ++i) {
        Vertex r = Vertex::symbolic(i);
        out.new_vertices.push_back(r);
        out.graph = out.graph.with_edge(Vertex::prime(2), r);
        for (unsigned j = 1; j < i; ++j)
            out.graph = out.graph.with_edge(Vertex::symbolic(j), r);
    }
    std::vector<u64> s_primes = graph_primes(s_graph);
    for (const FactRecord& f : facts_for(cat, id, FactKind::ForcedFix)) {
        if (f.characteristic.cls == CharClass::Concrete) continue;
        std::vector<u64> fix = fixing_of(f, s_primes);
        for (const Vertex& r : out.new_vertices)
            for (u64 p : fix)
                if (p != 2) out.graph = out.graph.with_edge(r, Vertex::prime(p));
        for (u64 p : fix)
            if (p != 2 &&
                std::find(out.forced_adjacent.begin(), out.forced_adjacent.end(), p) ==
                    out.forced_adjacent.end())
                out.forced_adjacent.push_back(p);
        if (!out.new_vertices.empty()) {
            out.fact_contexts.push_back(f.context);
            out.citations.push_back(f.citation);
        }
    }
    std::sort(out.forced_adjacent.begin(), out.forced_adjacent.end());
    return out;
}

// ---------------------------------------------------------------------------
// Shared R5 helpers
// ---------------------------------------------------------------------------

struct RuleOutcome {
    bool fired = false;
    std::string trace;
    std::vector<std::string> citations;
};

// Check a forced supergraph F of Gamma(S) against the monotone requirements
// of Gamma(G): component count and isolated-vertex count can only shrink as
// more edges appear in Gamma(H).
inline RuleOutcome monotone_check(const PrimeGraph& f, const TargetData& g,
                                  const std::string& subject) {
    RuleOutcome out;
    unsigned s_f = f.component_count();
    if (s_f == 1 && g.inv.component_count > 1) {
        out.fired = true;
        out.trace = subject + " is connected, but Gamma(" + g.display + ") has " +
                    number_word(g.inv.component_count) + " connected components";
        return out;
    }
    auto iso = f.isolated_vertices();
    if (static_cast<unsigned>(iso.size()) < g.inv.isolated_vertex_count) {
        out.fired = true;
        std::string listing = iso.empty() ? std::string()
                                          : " (" + vertex_list_text(iso) + ")";
        unsigned n = static_cast<unsigned>(iso.size());
        out.trace = subject + " has at most " + number_word(n) + " isolated " +
                    (n == 1 ? "vertex" : "vertices") + listing + "; " + subject +
                    " does not have " + number_word(g.inv.isolated_vertex_count) +
                    " isolated vertices as Gamma(" + g.display + ") requires";
        return out;
    }
    if (s_f < g.inv.component_count) {
        out.fired = true;
        out.trace = subject + " has at most " + number_word(s_f) +
                    " connected components, but Gamma(" + g.display + ") has " +
                    number_word(g.inv.component_count);
        return out;
    }
    return out;
}

// Check that F embeds into Gamma(G) as a (not necessarily induced) subgraph.
// A maximum clique of g, as sorted primes (symbolic vertices excluded by the
// callers, which only use this on concrete graphs).
inline std::vector<u64> max_clique_primes(const PrimeGraph& g) {
    std::vector<Vertex> best;
    for (const auto& cl : g.all_maximal_cliques())
        if (cl.size() > best.size()) best = cl;
    std::vector<u64> out;
    for (const Vertex& v : best)
        if (!v.is_symbolic()) out.push_back(v.prime_value());
    std::sort(out.begin(), out.end());
    return out;
}

inline RuleOutcome embedding_check(const PrimeGraph& f, const TargetData& g,
                                   const std::string& subject) {
    RuleOutcome out;
    if (contains_pattern(g.graph, pattern_of(f))) return out;
    out.fired = true;
    unsigned cf = f.clique_number(), cg = g.inv.clique_number;
    if (cf > cg) {
        out.trace = subject + " contains a clique of size " + std::to_string(cf) +
                    ", but Gamma(" + g.display + ") has no such clique";
    } else if (f.edge_count() > g.inv.edge_count) {
        out.trace = subject + " has at least " + std::to_string(f.edge_count()) +
                    " edges, but Gamma(" + g.display + ") has only " +
                    std::to_string(g.inv.edge_count);
    } else {
        out.trace = "Gamma(" + g.display + ") has no subgraph isomorphic to " + subject;
    }
    return out;
}

} // namespace detail

// ---------------------------------------------------------------------------
// R6: exhaustive completion search
// ---------------------------------------------------------------------------

namespace detail {

// A prime r of pi(S) can "explain" new edges at r only if its forced
// adjacencies (2, plus every order forced to fix vectors in r-modular
// representations) already lie in the extended graph, and no NoModuleAvoiding
// fact is violated by the primes that remain non-adjacent to r.
inline bool fitting_prime_viable(const Catalog& cat, const GroupId& id,
                                 const PrimeGraph& h, u64 r,
                                 std::vector<std::string>* why,
                                 std::vector<std::string>* cites) {
    Vertex rv = Vertex::prime(r);
    auto need_edge = [&](u64 p) {
        if (p == r) return true;
        return h.has_edge(rv, Vertex::prime(p));
    };
    if (r != 2 && !need_edge(2)) {
        if (why)
            why->push_back("r = " + std::to_string(r) +
                           " would not be adjacent to 2");
        return false;
    }
    std::vector<u64> s_primes = graph_primes(h);
    for (const FactRecord& f : facts_for(cat, id, FactKind::ForcedFix)) {
        bool applies = f.characteristic.cls == CharClass::AnyFitting;
        if (f.characteristic.cls == CharClass::Concrete)
            applies = std::find(f.characteristic.primes.begin(),
                                f.characteristic.primes.end(),
                                r) != f.characteristic.primes.end();
        if (!applies) continue;
        for (u64 p : fixing_of(f, s_primes)) {
            if (!need_edge(p)) {
                if (why)
                    why->push_back("r = " + std::to_string(r) +
                                   " lacks the forced edge {" + std::to_string(p) +
                                   "," + std::to_string(r) + "}");
                if (cites) cites->push_back(f.citation);
                return false;
            }
        }
    }
    for (const FactRecord& f : facts_for(cat, id, FactKind::NoModuleAvoiding)) {
        bool applies = f.characteristic.cls == CharClass::AnyFitting;
        if (f.characteristic.cls == CharClass::Concrete)
            applies = std::find(f.characteristic.primes.begin(),
                                f.characteristic.primes.end(),
                                r) != f.characteristic.primes.end();
        if (!applies) continue;
        unsigned avoiding = 0;
        for (u64 p : f.avoiding)
            if (p != r && !h.has_edge(rv, Vertex::prime(p))) ++avoiding;
        if (avoiding >= f.min_avoid) {
            if (why)
                why->push_back("r = " + std::to_string(r) + " would require a module with " +
                               std::to_string(avoiding) + " of {" +
                               prime_list_text(f.avoiding) +
                               "} acting fixed-point-freely; no such module exists");
            if (cites) cites->push_back(f.citation);
            return false;
        }
    }
    return true;
}

// Validity test for a completed graph H = forced + chosen edges.
inline bool completion_valid(const Catalog& cat, const GroupId& id,
                             const PrimeGraph& base, const PrimeGraph& h,
                             bool equal_pi, std::vector<std::string>* why,
                             std::vector<std::string>* cites) {
    if (equal_pi) {
        // Each added edge needs an endpoint dividing |F(H)| that is viable.
        for (const Edge& e : h.edges()) {
            if (base.has_edge(e.first, e.second)) continue;
            bool ok = false;
            std::vector<std::string> local;
            for (const Vertex& v : {e.first, e.second}) {
                if (v.is_symbolic()) { ok = true; break; }
                if (fitting_prime_viable(cat, id, h, v.prime_value(), &local, cites)) {
                    ok = true;
                    break;
                }
            }
            if (!ok) {
                if (why) {
                    std::string msg = "added edge {" + e.first.label() + "," +
                                      e.second.label() + "}: " + join(local, "; ");
                    why->push_back(msg);
                }
                return false;
            }
        }
        return true;
    }
    // New primes present: NoModuleAvoiding facts in coprime characteristic
    // bound how many primes may stay non-adjacent to each new prime.
    for (const FactRecord& f : facts_for(cat, id, FactKind::NoModuleAvoiding)) {
        if (f.characteristic.cls != CharClass::Coprime) continue;
        for (const Vertex& v : h.vertices()) {
            if (!v.is_symbolic()) continue;
            unsigned avoiding = 0;
            for (u64 p : f.avoiding)
                if (!h.has_edge(v, Vertex::prime(p))) ++avoiding;
            if (avoiding >= f.min_avoid) {
                if (why)
                    why->push_back("new prime " + v.label() + " would require a module with " +
                                   std::to_string(avoiding) + " of {" +
                                   prime_list_text(f.avoiding) +
                                   "} acting fixed-point-freely; no such module exists");
                if (cites) cites->push_back(f.citation);
                return false;
            }
        }
    }
    return true;
}

// Canonical-form filter identifying the anonymous new primes up to
// permutation: their adjacency masks must be non-decreasing.
inline bool symmetric_canonical(const PrimeGraph& h) {
    std::vector<std::uint32_t> masks;
    std::vector<unsigned> idx;
    for (unsigned i = 0; i < h.vertex_count(); ++i)
        if (h.vertices()[i].is_symbolic()) idx.push_back(i);
    for (size_t a = 0; a + 1 < idx.size(); ++a) {
        std::uint32_t ma = h.adjacency_mask(idx[a]);
        std::uint32_t mb = h.adjacency_mask(idx[a + 1]);
        // Compare neighbourhoods ignoring the symbolic block itself.
        std::uint32_t sym_mask = 0;
        for (unsigned i : idx) sym_mask |= 1u << i;
        if ((ma & ~sym_mask) > (mb & ~sym_mask)) return false;
    }
    return true;
}

} // namespace detail

inline CompletionConstraints completion_constraints(const Catalog& cat,
                                                    SporadicName target,
                                                    const GroupId& socle) {
    detail::TargetData g = detail::target_data(cat, target);
    PrimeGraph s = detail::candidate_graph(cat, socle);
    if (g.inv.vertex_count < s.vertex_count())
        throw DomainError("completion_constraints: candidate has too many vertices");
    unsigned k = g.inv.vertex_count - s.vertex_count();
    if (k > 4 || g.inv.vertex_count > 15)
        throw DomainError("completion_constraints: search bound exceeded "
                          "(at most 4 new primes, 15 vertices)");
    CompletionConstraints out;
    out.new_primes = k;
    out.forced = k == 0 ? s : detail::build_forced(cat, socle, s, k).graph;
    unsigned forced_edges = out.forced.edge_count();
    out.edge_budget =
        g.inv.edge_count >= forced_edges ? g.inv.edge_count - forced_edges : 0;
    return out;
}

// Exhaustive search for a graph H with Gamma(H) isomorphic to Gamma(target)
// extending the forced skeleton of the candidate socle, subject to the
// catalog's module facts.  Returns the first completion found, or nullopt.
inline std::optional<PrimeGraph> completion_search(const Catalog& cat,
                                                   SporadicName target,
                                                   const GroupId& socle,
                                                   SearchOrder order) {
    detail::TargetData g = detail::target_data(cat, target);
    PrimeGraph s = detail::candidate_graph(cat, socle);
    CompletionConstraints cc = completion_constraints(cat, target, socle);
    const PrimeGraph& forced = cc.forced;
    if (forced.edge_count() > g.inv.edge_count) return std::nullopt;

    std::vector<std::pair<Vertex, Vertex>> slots;
    const auto& verts = forced.vertices();
    for (unsigned i = 0; i < verts.size(); ++i)
        for (unsigned j = i + 1; j < verts.size(); ++j)
            if (!forced.has_edge(verts[i], verts[j])) slots.push_back({verts[i], verts[j]});
    if (order == SearchOrder::Reverse) std::reverse(slots.begin(), slots.end());

    unsigned budget = cc.edge_budget;
    std::optional<PrimeGraph> found;
    std::vector<unsigned> chosen;
    auto rec = [&](auto&& self, unsigned start, PrimeGraph h) -> bool {
        if (chosen.size() == budget) {
            if (!detail::symmetric_canonical(h)) return false;
            if (!is_isomorphic(h, g.graph)) return false;
            if (!detail::completion_valid(cat, socle, s, h, cc.new_primes == 0,
                                          nullptr, nullptr))
                return false;
            found = h;
            return true;
        }
        for (unsigned i = start; i < slots.size(); ++i) {
            chosen.push_back(i);
            if (self(self, i + 1, h.with_edge(slots[i].first, slots[i].second)))
                return true;
            chosen.pop_back();
        }
        return false;
    };
    rec(rec, 0, forced);
    return found;
}

// ---------------------------------------------------------------------------
// R5: fact-driven elimination
// ---------------------------------------------------------------------------

namespace detail {

// k >= 1 new primes.  All primes of |Out(S)| must divide |S| here, so the new
// primes all divide |F(H)|.
inline RuleOutcome r5_new_primes(const Catalog& cat, const GroupId& id,
                                 const PrimeGraph& s_graph, const TargetData& g,
                                 unsigned k, const std::string& name) {
    RuleOutcome out;
    std::vector<u64> s_primes = graph_primes(s_graph);
    for (u64 p : out_order_primes(cat, id))
        if (std::find(s_primes.begin(), s_primes.end(), p) == s_primes.end())
            throw MissingFact("outer-prime analysis for " + id.key() +
                              ": |Out(S)| has the prime divisor " + std::to_string(p) +
                              " outside pi(S)");
    ForcedBuild fb = build_forced(cat, id, s_graph, k);
    std::string preamble =
        "every prime divisor of |Out(" + name + ")| divides |" + name +
        "|, so there must be " + number_word(k) + " prime" + (k == 1 ? "" : "s") +
        " dividing |F(H)| but not |" + name + "|, " +
        (k == 1 ? std::string("adjacent to 2")
                : "pairwise adjacent and all adjacent to 2");
    std::string fact_note;
    if (!fb.forced_adjacent.empty())
        fact_note = "; elements of order " + prime_list_text(fb.forced_adjacent) +
                    " fix non-zero vectors in every faithful irreducible module in "
                    "the relevant characteristic, forcing edges from each new prime "
                    "to " + prime_list_text(fb.forced_adjacent);

    RuleOutcome mono = monotone_check(fb.graph, g, "Gamma(H)");
    if (mono.fired) {
        out.fired = true;
        out.trace = preamble + fact_note + "; " + mono.trace;
        out.citations = fb.citations;
        return out;
    }
    RuleOutcome embed = embedding_check(fb.graph, g, "Gamma(H)");
    if (embed.fired) {
        out.fired = true;
        out.trace = preamble + fact_note + "; " + embed.trace;
        out.citations = fb.citations;
        return out;
    }
    // Isolated vertices of Gamma(H) survive from the isolated vertices of the
    // forced graph; NoModuleAvoiding facts can rule out every choice.
    std::vector<u64> iso_forced;
    for (const Vertex& v : fb.graph.isolated_vertices())
        if (!v.is_symbolic()) iso_forced.push_back(v.prime_value());
    for (const FactRecord& f : facts_for(cat, id, FactKind::NoModuleAvoiding)) {
        if (f.characteristic.cls != CharClass::Coprime) continue;
        unsigned outside = 0;
        for (u64 p : iso_forced)
            if (std::find(f.avoiding.begin(), f.avoiding.end(), p) == f.avoiding.end())
                ++outside;
        if (g.inv.isolated_vertex_count < outside) continue;
        unsigned forced_avoiding = g.inv.isolated_vertex_count - outside;
        if (forced_avoiding >= f.min_avoid) {
            out.fired = true;
            out.trace = preamble + fact_note + "; Gamma(H) must have " +
                        number_word(g.inv.isolated_vertex_count) +
                        " isolated vertices, all among {" + prime_list_text(iso_forced) +
                        "}, so " + name +
                        " must admit a faithful irreducible module in coprime "
                        "characteristic in which at least " +
                        number_word(forced_avoiding) + " of the primes {" +
                        prime_list_text(f.avoiding) +
                        "} act fixed-point-freely; the character table of " + name +
                        " shows that no such module exists";
            out.citations = fb.citations;
            out.citations.push_back(f.citation);
            return out;
        }
    }
    return out;
}

// k == 0: pi(H) = pi(S).  First exclude outer automorphisms via centraliser
// facts, then enumerate every edge set completing Gamma(S) to Gamma(G) and
// show each added edge lacks a viable Fitting prime.
inline RuleOutcome r5_equal_pi(const Catalog& cat, const GroupId& id,
                               const PrimeGraph& s_graph, const TargetData& g,
                               const std::string& name) {
    RuleOutcome out;
    std::vector<std::string> sentences;

    std::vector<u64> outs = out_order_primes(cat, id);
    if (outs.empty()) {
        sentences.push_back("Out(" + name + ") is trivial, so pi(F(H)) is a "
                            "non-empty subset of pi(" + name + ")");
    } else {
        auto cents = facts_for(cat, id, FactKind::CentralizerEdge);
        if (cents.empty())
            throw MissingFact("outer-automorphism centraliser data for " + id.key());
        for (u64 p : outs) {
            PrimeGraph f = s_graph;
            for (const FactRecord& c : cents) {
                for (u64 x : c.fixing)
                    if (x != p) f = f.with_edge(Vertex::prime(p), Vertex::prime(x));
                out.citations.push_back(c.citation);
            }
            RuleOutcome mono = monotone_check(f, g, "Gamma(H)");
            if (!mono.fired)
                throw MissingFact("outer-automorphism analysis for " + id.key() +
                                  " at outer prime " + std::to_string(p) +
                                  " is inconclusive");
            sentences.push_back(
                "if H/F(H) contains an outer automorphism of " + name +
                " of prime order " + std::to_string(p) + ", then " + mono.trace);
        }
        sentences.push_back("hence H/F(H) = " + name +
                            " and F(H) is non-trivial with pi(F(H)) contained in pi(" +
                            name + ")");
    }

    unsigned budget = g.inv.edge_count - s_graph.edge_count();
    sentences.push_back("Gamma(" + g.display + ") has exactly " +
                        number_word(budget) + " more edge" + (budget == 1 ? "" : "s") +
                        " than Gamma(" + name + ")");

    // Enumerate completions.
    std::vector<std::pair<Vertex, Vertex>> slots;
    const auto& verts = s_graph.vertices();
    for (unsigned i = 0; i < verts.size(); ++i)
        for (unsigned j = i + 1; j < verts.size(); ++j)
            if (!s_graph.has_edge(verts[i], verts[j])) slots.push_back({verts[i], verts[j]});
    unsigned completions = 0, surviving = 0;
    std::vector<std::string> failures;
    std::vector<unsigned> pick;
    auto rec = [&](auto&& self, unsigned start, PrimeGraph h) -> void {
        if (pick.size() == budget) {
            if (!is_isomorphic(h, g.graph)) return;
            ++completions;
            std::vector<std::string> why;
            if (detail::completion_valid(cat, id, s_graph, h, true, &why,
                                         &out.citations)) {
                ++surviving;
            } else {
                std::vector<std::string> names;
                for (unsigned i : pick)
                    names.push_back("{" + slots[i].first.label() + "," +
                                    slots[i].second.label() + "}");
                failures.push_back("adding " + join(names, " and ") + " fails: " +
                                   join(why, "; "));
            }
            return;
        }
        for (unsigned i = start; i < slots.size(); ++i) {
            pick.push_back(i);
            self(self, i + 1, h.with_edge(slots[i].first, slots[i].second));
            pick.pop_back();
        }
    };
    rec(rec, 0, s_graph);

    if (completions == 0) {
        sentences.push_back("no set of " + number_word(budget) +
                            " added edges makes the graphs isomorphic");
        out.fired = true;
        out.trace = join(sentences, "; ");
        return out;
    }
    if (surviving > 0) return out; // not eliminated at R5; R6 decides
    sentences.push_back(
        "each of the " + std::to_string(completions) +
        " admissible edge sets needs every added edge to contain a prime that "
        "can divide |F(H)|, and the modular character tables rule out every "
        "choice: " + join(failures, "; "));
    out.fired = true;
    out.trace = join(sentences, "; ");
    return out;
}

} // namespace detail

// ---------------------------------------------------------------------------
// apply_filters: the R1..R6 pipeline for concrete candidates
// ---------------------------------------------------------------------------

namespace detail {

inline EliminationReport eliminate_concrete(const Catalog& cat, const TargetData& g,
                                            const Candidate& cand) {
    EliminationReport rep;
    rep.target = g.name;
    rep.candidate = cand;
    const GroupId& id = cand.id;
    std::string name = concrete_display(id);
    PrimeGraph s = candidate_graph(cat, id);
    GraphInvariants si = invariants(s);
    std::vector<std::string> cites;
    for (const CatalogEntry& e : cat.entries)
        if (e.id == id)
            for (const std::string& c : e.citations) cites.push_back(c);

    // R1: cardinalities.
    if (si.vertex_count > g.inv.vertex_count) {
        rep.rule = "R1";
        rep.trace = "Gamma(" + name + ") has " + std::to_string(si.vertex_count) +
                    " vertices, more than the " + std::to_string(g.inv.vertex_count) +
                    " of Gamma(" + g.display + ")";
        rep.citation = merge_citations(cites);
        return rep;
    }
    if (si.component_count < g.inv.component_count) {
        rep.rule = "R1";
        rep.trace = "s(" + name + ") = " + std::to_string(si.component_count) +
                    " < " + std::to_string(g.inv.component_count) + " = s(" +
                    g.display + ")";
        rep.citation = merge_citations(cites);
        return rep;
    }
    if (si.edge_count > g.inv.edge_count) {
        rep.rule = "R1";
        rep.trace = "Gamma(" + name + ") has more edges than Gamma(" + g.display +
                    ") (" + std::to_string(si.edge_count) + " > " +
                    std::to_string(g.inv.edge_count) + ")";
        rep.citation = merge_citations(cites);
        return rep;
    }

    // R2: the coclique bound t(S) >= t(G) - 1.
    if (si.independence_number < g.coclique_need) {
        rep.rule = "R2";
        if (si.vertex_count < g.coclique_need) {
            rep.trace = "Gamma(" + name + ") has only " +
                        std::to_string(si.vertex_count) + " vertices, so t(" + name +
                        ") < " + std::to_string(g.coclique_need) + " = t(" +
                        g.display + ") - 1";
        } else if (si.vertex_count == g.coclique_need) {
            rep.trace = "Gamma(" + name + ") has exactly " +
                        std::to_string(si.vertex_count) +
                        " vertices, and they do not form a coclique (t(" + name +
                        ") = " + std::to_string(si.independence_number) + " < " +
                        std::to_string(g.coclique_need) + " = t(" + g.display +
                        ") - 1)";
        } else {
            bool cliques = true;
            for (const auto& comp : s.components())
                for (size_t i = 0; i < comp.size() && cliques; ++i)
                    for (size_t j = i + 1; j < comp.size(); ++j)
                        if (!s.has_edge(comp[i], comp[j])) { cliques = false; break; }
            std::string because =
                cliques ? "Gamma(" + name + ") is a disjoint union of " +
                              number_word(si.component_count) + " cliques, so "
                        : "";
            rep.trace = because + "t(" + name + ") = " +
                        std::to_string(si.independence_number) + " < " +
                        std::to_string(g.coclique_need) + " = t(" + g.display +
                        ") - 1";
        }
        rep.citation = merge_citations(cites);
        return rep;
    }

    // R3: t(2,S) >= t(2,H), and t(2,H) = t(v,G) for the (unknown) vertex v of
    // Gamma(G) that corresponds to the prime 2 of H under the isomorphism, so
    // only the minimum of t(v,G) over all vertices gives a sound bound.
    if (si.t_at_two < g.min_t_at) {
        rep.rule = "R3";
        rep.trace = "t(2," + name + ") = " + std::to_string(si.t_at_two) +
                    ", but every vertex of Gamma(" + g.display +
                    ") lies in a coclique of size at least " +
                    std::to_string(g.min_t_at);
        rep.citation = merge_citations(cites);
        return rep;
    }

    // R4: Gamma(S) must embed into Gamma(G).
    RuleOutcome embed = embedding_check(s, g, "Gamma(" + name + ")");
    if (embed.fired) {
        rep.rule = "R4";
        rep.trace = embed.trace;
        rep.citation = merge_citations(cites);
        return rep;
    }

    // R5: fact-driven forced edges.
    unsigned k = g.inv.vertex_count - si.vertex_count;
    RuleOutcome r5 = k >= 1 ? r5_new_primes(cat, id, s, g, k, name)
                            : r5_equal_pi(cat, id, s, g, name);
    if (r5.fired) {
        rep.rule = "R5";
        rep.trace = r5.trace;
        for (const std::string& c : r5.citations) cites.push_back(c);
        rep.citation = merge_citations(cites);
        return rep;
    }

    // R6: exhaustive completion search.
    auto completion = completion_search(cat, g.name, id, SearchOrder::Forward);
    if (completion) {
        rep.eliminated = false;
        rep.rule = "R6";
        rep.trace = "a completion of Gamma(" + name +
                    ") isomorphic to Gamma(" + g.display + ") exists";
        rep.completion = completion;
        rep.citation = merge_citations(cites);
        return rep;
    }
    rep.rule = "R6";
    rep.trace = "no completion of Gamma(" + name + ") by at most " +
                number_word(k) + " new primes yields a graph isomorphic to Gamma(" +
                g.display + ") consistent with the recorded module facts";
    for (const std::string& c : r5.citations) cites.push_back(c);
    rep.citation = merge_citations(cites);
    return rep;
}

} // namespace detail

// ---------------------------------------------------------------------------
// Family slices
// ---------------------------------------------------------------------------

namespace detail {

// The Suzuki groups: Gamma(Sz(q)) is the isolated vertex 2 plus three cliques
// C1, C2, C3.  Enumerate the total clique sizes N and the shape of each.
inline EliminationReport eliminate_suzuki(const Catalog& cat, const TargetData& g,
                                          const Candidate& cand) {
    EliminationReport rep;
    rep.target = g.name;
    rep.candidate = cand;
    std::vector<std::string> cites{family_slice_citation(Family::TwoB2)};

    if (4 < g.coclique_need) {
        rep.rule = "R2";
        rep.trace = "Gamma(Sz(q)) is an isolated vertex and three cliques, so "
                    "t(Sz(q)) = 4 < " + std::to_string(g.coclique_need) + " = t(" +
                    g.display + ") - 1 for every q";
        rep.citation = merge_citations(cites);
        return rep;
    }

    // Family-wide facts.
    const GroupId rep_id = GroupId::two_b2(1);
    const FactRecord* fixes_all = nullptr;
    for (const FactRecord& f : facts_for(cat, rep_id, FactKind::ForcedFix))
        if (f.family_wide && f.fixes_all &&
            f.characteristic.cls == CharClass::Coprime)
            fixes_all = &f;
    const FactRecord* cent = nullptr;
    for (const FactRecord& f : facts_for(cat, rep_id, FactKind::CentralizerEdge))
        if (f.family_wide) cent = &f;
    if (!fixes_all)
        throw MissingFact("family-wide fixed-point fact for Suzuki groups");

    unsigned pi_g = g.inv.vertex_count;
    unsigned iso_g = g.inv.isolated_vertex_count;
    std::vector<std::string> sections;

    for (unsigned n = pi_g - 1; n >= 3; --n) {
        unsigned k = pi_g - 1 - n;
        std::vector<std::string> shapes;
        for (unsigned a = 1; 3 * a <= n; ++a) {
            for (unsigned b = a; a + 2 * b <= n; ++b) {
                unsigned c = n - a - b;
                std::string shape = "(" + std::to_string(a) + "," + std::to_string(b) +
                                    "," + std::to_string(c) + ")";
                unsigned singles = (a == 1) + (b == 1) + (c == 1);
                unsigned max_iso = singles + (k == 0 ? 1 : 0);
                if (max_iso < iso_g) {
                    shapes.push_back("sizes " + shape + " leave at most " +
                                     number_word(max_iso) + " isolated " +
                                     (max_iso == 1 ? "vertex" : "vertices") +
                                     ", not " + number_word(iso_g));
                    continue;
                }
                // The forced shape: vertex 2, cliques of sizes a, b, c, and k
                // new primes adjacent to 2.
                auto shape_pattern = [&](bool outer_clique) {
                    Pattern p;
                    p.n = 1 + n + k;
                    unsigned base = 1;
                    for (unsigned size : {a, b, c}) {
                        for (unsigned i = 0; i < size; ++i)
                            for (unsigned j = i + 1; j < size; ++j)
                                p.edges.push_back({base + i, base + j});
                        base += size;
                    }
                    for (unsigned i = 0; i < k; ++i) p.edges.push_back({0, base + i});
                    if (outer_clique)
                        for (unsigned i = 0; i < k; ++i)
                            for (unsigned j = i + 1; j < k; ++j)
                                p.edges.push_back({base + i, base + j});
                    return p;
                };
                if (!contains_pattern(g.graph, shape_pattern(false))) {
                    std::string note;
                    if (g.name == SporadicName::Fi23)
                        note = " (every edge and triangle of Gamma(Fi23) meets its "
                               "unique clique of size 4, and its triangles pairwise "
                               "intersect)";
                    std::string subject =
                        k == 0 ? "the three cliques together with the isolated "
                                 "vertex 2"
                               : "the three cliques together with the edges from 2 "
                                 "to the " + number_word(k) + " new prime" +
                                     (k == 1 ? "" : "s");
                    shapes.push_back("sizes " + shape + ": " + subject +
                                     " form a subgraph that does not arise in Gamma(" +
                                     g.display + ")" + note);
                    continue;
                }
                if (n == 3) {
                    // All Ci are isolated vertices, so m in {1,2}; Out(S) is
                    // cyclic of order 2m+1 in {3,5}.
                    std::vector<std::string> sub;
                    sub.push_back("all three cliques are single vertices, which "
                                  "forces m = 1 or m = 2, with Out(S) cyclic of "
                                  "order 2m+1 in {3,5}");
                    if (g.name == SporadicName::ON) {
                        sub.push_back("if all " + number_word(k) +
                                      " new primes divide |F(H)| they form a clique "
                                      "with 2 of size " + std::to_string(k + 1) +
                                      ", but Gamma(O'N) has no clique of size 4");
                        sub.push_back("so one new prime divides |Out(S)| = 2m+1; "
                                      "m = 2 is impossible because 5 divides |Sz(32)|");
                        if (!cent)
                            throw MissingFact("Suzuki outer-centraliser fact");
                        sub.push_back(
                            "for m = 1 the vertex set of Gamma(Sz(8)) is {2,5,7,13} "
                            "and the outer prime is 3; the remaining two new primes "
                            "divide |F(H)|, giving an edge between them and edges to "
                            "2, and a field automorphism of order 3 centralises "
                            "Sz(2) = 5:4, adding the edge {3,5}; Gamma(H) then has "
                            "at most two isolated vertices, 7 and 13, a contradiction");
                        cites.push_back(cent->citation);
                    } else {
                        sub.push_back("none of the " + number_word(k) +
                                      " new primes can divide |F(H)|, or else every "
                                      "prime divisor of |S| would be adjacent to it "
                                      "and Gamma(H) would be connected");
                        sub.push_back("so |Out(S)| = 2m+1 in {3,5} must be divisible "
                                      "by " + number_word(k) +
                                      " distinct primes, but it is not");
                        cites.push_back(fixes_all->citation);
                    }
                    shapes.push_back("sizes " + shape + ": " + join(sub, "; "));
                    continue;
                }
                // N >= 4 with k >= 1 surviving the embedding test: tag analysis.
                if (k == 0)
                    throw MissingFact("Suzuki shape " + shape + " with no new primes "
                                      "survives all structural checks against " +
                                      g.display);
                std::vector<std::string> sub;
                sub.push_back("if any new prime divides |F(H)| then every prime "
                              "divisor of |S| is adjacent to it, so Gamma(H) is "
                              "connected");
                cites.push_back(fixes_all->citation);
                if (contains_pattern(g.graph, shape_pattern(true)))
                    throw MissingFact("Suzuki shape " + shape +
                                      " with outer new primes survives against " +
                                      g.display);
                sub.push_back("otherwise all new primes divide the cyclic group "
                              "Out(S), so together with 2 they form a clique of "
                              "size " + std::to_string(k + 1) +
                              ", and the resulting subgraph does not arise in "
                              "Gamma(" + g.display + ")");
                shapes.push_back("sizes " + shape + ": " + join(sub, "; "));
            }
        }
        sections.push_back("N = " + std::to_string(n) + ": " + join(shapes, "; "));
    }

    rep.rule = "R5";
    rep.trace = "Gamma(Sz(q)) is the isolated vertex 2 and three cliques of total "
                "size N with 3 <= N <= " + std::to_string(pi_g - 1) + ". " +
                join(sections, ". ");
    rep.citation = merge_citations(cites);
    return rep;
}

// Bundle several per-parameter branch reports into one slice report.
struct Branch {
    std::string label;
    std::string rule;
    std::string trace;
    std::string citation;
};

inline EliminationReport bundle(const TargetData& g, const Candidate& cand,
                                const std::vector<Branch>& branches,
                                std::string default_citation) {
    EliminationReport rep;
    rep.target = g.name;
    rep.candidate = cand;
    std::string rule = "R1";
    std::vector<std::string> parts, cites{std::move(default_citation)};
    for (const Branch& b : branches) {
        if (b.rule > rule) rule = b.rule;
        parts.push_back(b.label + ": " + b.trace);
        cites.push_back(b.citation);
    }
    rep.rule = rule;
    rep.trace = join(parts, ". ");
    rep.citation = merge_citations(cites);
    return rep;
}

inline Branch branch_from_concrete(const Catalog& cat, const TargetData& g,
                                   const GroupId& id, std::string label) {
    EliminationReport r = eliminate_concrete(cat, g, Candidate::concrete(id));
    if (!r.eliminated)
        throw MissingFact("family branch " + id.key() + " not eliminated against " +
                          sporadic_to_string(g.name));
    return Branch{std::move(label), r.rule, r.trace, r.citation};
}

inline EliminationReport eliminate_slice(const Catalog& cat, const TargetData& g,
                                         const Candidate& cand) {
    const unsigned need = g.coclique_need;
    const std::string fam_cite = family_slice_citation(cand.family);

    auto simple_r2 = [&](const std::string& what, unsigned t) {
        EliminationReport rep;
        rep.target = g.name;
        rep.candidate = cand;
        rep.rule = "R2";
        rep.trace = what + ", so t(S) = " + std::to_string(t) + " < " +
                    std::to_string(need) + " = t(" + g.display + ") - 1 throughout "
                    "the family";
        rep.citation = fam_cite;
        return rep;
    };

    switch (cand.family) {
        case Family::TwoB2:
            return eliminate_suzuki(cat, g, cand);
        case Family::PSL2:
            return simple_r2("Gamma(PSL2(q)) always consists of three cliques", 3);
        case Family::G2:
            return simple_r2("Gamma(G2(3^k)) always consists of three cliques", 3);
        case Family::TwoG2: {
            if (need > 5)
                return simple_r2("Gamma(2G2(3^(2m+1))) always has independence "
                                 "number at most 5", 5);
            std::vector<Branch> branches;
            branches.push_back(branch_from_concrete(cat, g, GroupId::two_g2(1), "m = 1"));
            FamilyProfile prof = family_profile(GroupId::two_g2(2));
            if (!prof.pi_lower_if_two_isolated || g.inv.isolated_vertex_count < 2 ||
                *prof.pi_lower_if_two_isolated <= g.inv.vertex_count)
                throw MissingFact("2G2 branch m >= 2 against " + g.display);
            branches.push_back(
                Branch{"m >= 2",
                       "R1",
                       "Gamma(S) must have two isolated vertices, which forces "
                       "|pi(S)| >= " + std::to_string(*prof.pi_lower_if_two_isolated) +
                       " > " + std::to_string(g.inv.vertex_count) + " = |pi(" +
                       g.display + ")|",
                       fam_cite});
            return bundle(g, cand, branches, fam_cite);
        }
        case Family::TwoF4: {
            if (need > 5)
                return simple_r2("Gamma(2F4(2^(2m+1))) always has independence "
                                 "number at most 5", 5);
            std::vector<Branch> branches;
            branches.push_back(branch_from_concrete(cat, g, GroupId::two_f4(1), "m = 1"));
            FamilyProfile prof = family_profile(GroupId::two_f4(2));
            if (!prof.forced_subgraph ||
                contains_pattern(g.graph, *prof.forced_subgraph))
                throw MissingFact("2F4 branch m >= 2 against " + g.display);
            branches.push_back(
                Branch{"m >= 2", "R4",
                       "Gamma(S) contains an eight-vertex subgraph that does not "
                       "arise in Gamma(" + g.display + ")",
                       fam_cite});
            return bundle(g, cand, branches, fam_cite);
        }
        case Family::Alt: {
            std::vector<Branch> branches;
            for (u64 p : cand.params) {
                PrimeGraph s = alt_prime_graph(p);
                GraphInvariants si = invariants(s);
                std::string label = "p = " + std::to_string(p);
                std::string name = "Alt(" + std::to_string(p) + ")";
                bool cliques = true;
                for (const auto& comp : s.components())
                    for (size_t i = 0; i < comp.size() && cliques; ++i)
                        for (size_t j = i + 1; j < comp.size(); ++j)
                            if (!s.has_edge(comp[i], comp[j])) { cliques = false; break; }
                if (cliques && si.independence_number < need) {
                    branches.push_back(Branch{
                        label, "R2",
                        "Gamma(" + name + ") consists of " +
                            number_word(si.component_count) + " cliques, so t(" + name +
                            ") = " + std::to_string(si.independence_number) + " < " +
                            std::to_string(need),
                        fam_cite});
                    continue;
                }
                if (si.clique_number > g.inv.clique_number) {
                    std::vector<u64> cl = max_clique_primes(s);
                    branches.push_back(Branch{
                        label, "R4",
                        "Gamma(" + name + ") contains a clique {" + prime_list_text(cl) +
                            "} of size " + std::to_string(unsigned(cl.size())) +
                            ", but Gamma(" + g.display + ") has no such clique",
                        fam_cite});
                    continue;
                }
                branches.push_back(branch_from_concrete(cat, g, GroupId::alt(p), label));
            }
            return bundle(g, cand, branches, fam_cite);
        }
        case Family::POmegaMinus: {
            std::vector<Branch> branches;
            branches.push_back(
                Branch{"p >= 17", "R1",
                       "|pi(S)| >= p + 1 >= 18 > " + std::to_string(g.inv.vertex_count) +
                           " = |pi(" + g.display + ")| for every larger Fermat prime",
                       fam_cite});
            for (u64 p : {u64(3), u64(5)}) {
                std::string label = "p = " + std::to_string(p);
                PrimeGraph s = prime_graph(GroupId::pomega_minus(p));
                if (s.vertex_count() < g.coclique_need &&
                    s.vertex_count() < 7 && g.name == SporadicName::B) {
                    branches.push_back(Branch{
                        label, "R2",
                        "POmega" + std::to_string(2 * p) + "-(3) = PSU4(3) has |pi(S)| = " +
                            std::to_string(s.vertex_count()) + " < 7 <= t(" + g.display +
                            ") - 1",
                        fam_cite});
                    continue;
                }
                GroupId id = p == 3 ? GroupId::psu4_3() : GroupId::pomega_minus(5);
                GraphInvariants si = invariants(s);
                if (si.clique_number > g.inv.clique_number) {
                    std::vector<u64> cl = max_clique_primes(s);
                    branches.push_back(Branch{
                        label, "R4",
                        "Gamma(" + concrete_display(id) + ") contains a clique {" +
                            prime_list_text(cl) + "} of size " +
                            std::to_string(unsigned(cl.size())) + ", but Gamma(" +
                            g.display + ") has no such clique",
                        fam_cite});
                    continue;
                }
                branches.push_back(branch_from_concrete(cat, g, id, label));
            }
            // Keep ascending order of p in the trace.
            std::rotate(branches.begin(), branches.begin() + 1, branches.end());
            return bundle(g, cand, branches, fam_cite);
        }
        case Family::F4: {
            std::vector<Branch> branches;
            if (g.name == SporadicName::B) {
                branches.push_back(branch_from_concrete(cat, g, GroupId::f4(1), "q = 2"));
                FamilyProfile prof = family_profile(GroupId::f4(2));
                unsigned have = 0;
                for (const Vertex& v : g.graph.vertices())
                    if (g.graph.degree(v) >= 5) ++have;
                if (!prof.degree_ge5_vertices_lower ||
                    *prof.degree_ge5_vertices_lower <= have)
                    throw MissingFact("F4 branch q >= 4 against " + g.display);
                branches.push_back(Branch{
                    "q >= 4", "R4",
                    "Gamma(S) has at least " +
                        number_word(*prof.degree_ge5_vertices_lower) +
                        " vertices of degree at least 5, but Gamma(" + g.display +
                        ") has only " + number_word(have) + " (2 and 3)",
                    fam_cite});
            } else {
                branches.push_back(branch_from_concrete(cat, g, GroupId::f4(1), "q = 2"));
                unsigned pi4 = static_cast<unsigned>(order(GroupId::f4(2)).factors.size());
                if (pi4 <= g.inv.vertex_count) {
                    FamilyProfile prof = family_profile(GroupId::f4(2));
                    if (!prof.edge_lower_bound ||
                        *prof.edge_lower_bound <= g.inv.edge_count)
                        throw MissingFact("F4 branch q = 4 against " + g.display);
                    branches.push_back(Branch{
                        "q = 4", "R1",
                        "Gamma(F4(4)) has at least " +
                            std::to_string(*prof.edge_lower_bound) + " edges, but Gamma(" +
                            g.display + ") has only " + std::to_string(g.inv.edge_count),
                        fam_cite});
                } else {
                    branches.push_back(Branch{
                        "q = 4", "R1",
                        "|pi(F4(4))| = " + std::to_string(pi4) + " > " +
                            std::to_string(g.inv.vertex_count) + " = |pi(" + g.display +
                            ")|",
                        fam_cite});
                }
                unsigned pi8 = family_profile(GroupId::f4(3)).pi_lower_bound;
                if (pi8 <= g.inv.vertex_count)
                    throw MissingFact("F4 branch q >= 8 against " + g.display);
                branches.push_back(Branch{
                    "q >= 8", "R1",
                    "|pi(S)| >= " + std::to_string(pi8) + " > " +
                        std::to_string(g.inv.vertex_count) + " = |pi(" + g.display + ")|",
                    fam_cite});
            }
            return bundle(g, cand, branches, fam_cite);
        }
        default:
            break;
    }
    throw UnsupportedFamily("eliminate_slice: no handler for family slice " +
                            cand.key());
}

} // namespace detail

// ---------------------------------------------------------------------------
// Candidate enumeration
// ---------------------------------------------------------------------------

inline const std::vector<SporadicName>& recognisable_targets() {
    static const std::vector<SporadicName> t = {
        SporadicName::B,  SporadicName::Fi23, SporadicName::Fi24p,
        SporadicName::J4, SporadicName::Ly,   SporadicName::M,
        SporadicName::ON, SporadicName::Th,
    };
    return t;
}

inline std::vector<Candidate> candidate_socles(const Catalog& cat,
                                               SporadicName target) {
    const auto& eight = recognisable_targets();
    if (std::find(eight.begin(), eight.end(), target) == eight.end())
        throw UnsupportedTarget("candidate_socles: " + sporadic_to_string(target) +
                                " routes to witness verification");
    if (target == SporadicName::J4) return {}; // six-component uniqueness rule

    detail::TargetData g = detail::target_data(cat, target);
    unsigned pi_g = g.inv.vertex_count;
    unsigned s_g = g.inv.component_count;
    // The coclique bound forces |pi(S)| >= t(G) - 1; for Baby Monster this is
    // the constraint 7 <= |pi(S)| used to trim the candidate tables.
    unsigned min_pi = target == SporadicName::B ? g.coclique_need : 0;

    std::vector<Candidate> out;
    auto admit_concrete = [&](GroupId id) {
        if (id == GroupId::sporadic_group(target)) return;
        unsigned pi = static_cast<unsigned>(order(id).factors.size());
        if (pi > pi_g || pi < min_pi) return;
        if (component_partition(id).size() < s_g) return;
        out.push_back(Candidate::concrete(id));
    };

    // Simple groups with s(S) >= 4.
    using SN = SporadicName;
    admit_concrete(GroupId::psl3_4());
    admit_concrete(GroupId::two_e6_2());
    for (SN n : {SN::M22, SN::J1, SN::ON, SN::Ly, SN::Fi24p, SN::J4, SN::M})
        admit_concrete(GroupId::sporadic_group(n));
    out.push_back(Candidate::family_slice(Family::TwoB2, "q = 2^(2m+1), m >= 1"));
    // E8(q) never qualifies: |pi(E8(q))| >= 16 exceeds every target here.

    if (s_g == 3) {
        for (SN n : {SN::M11, SN::HS, SN::J3, SN::Co2, SN::M23, SN::M24, SN::Suz,
                     SN::Th, SN::Fi23, SN::B})
            admit_concrete(GroupId::sporadic_group(n));
        admit_concrete(GroupId::psu6_2());
        admit_concrete(GroupId::e7_2());
        admit_concrete(GroupId::e7_3());
        // Alternating groups Alt(p) with p and p - 2 prime.
        std::vector<u64> alt_ps;
        for (u64 p = 7; p <= 97; p += 2) {
            if (!is_prime(p) || !is_prime(p - 2)) continue;
            unsigned pi = static_cast<unsigned>(alt_order(p).factors.size());
            if (pi >= std::max(min_pi, 1u) && pi <= pi_g && min_pi <= pi)
                alt_ps.push_back(p);
        }
        if (!alt_ps.empty())
            out.push_back(Candidate::family_slice(
                Family::Alt, "p in {" + detail::prime_list_text(alt_ps) + "}", alt_ps));
        out.push_back(Candidate::family_slice(Family::PSL2,
                                              "q >= 4 a prime power"));
        out.push_back(Candidate::family_slice(Family::POmegaMinus,
                                              "p = 2^m + 1 prime", {3, 5}));
        out.push_back(Candidate::family_slice(Family::G2, "q = 3^k, k >= 1"));
        out.push_back(Candidate::family_slice(Family::TwoG2,
                                              "q = 3^(2m+1), m >= 1"));
        out.push_back(Candidate::family_slice(Family::F4, "q = 2^k, k >= 1"));
        if (family_profile(GroupId::two_f4(1)).pi_lower_bound <= pi_g)
            out.push_back(Candidate::family_slice(Family::TwoF4,
                                                  "q = 2^(2m+1), m >= 1"));
    }

    std::sort(out.begin(), out.end(), [](const Candidate& a, const Candidate& b) {
        return a.key() < b.key();
    });
    return out;
}

inline EliminationReport apply_filters(const Catalog& cat, SporadicName target,
                                       const Candidate& cand) {
    detail::TargetData g = detail::target_data(cat, target);
    return cand.is_slice ? detail::eliminate_slice(cat, g, cand)
                         : detail::eliminate_concrete(cat, g, cand);
}

inline EliminationReport eliminate_family(const Catalog& cat, SporadicName target,
                                          const Candidate& slice) {
    if (!slice.is_slice)
        throw DomainError("eliminate_family: candidate is not a family slice");
    return detail::eliminate_slice(cat, detail::target_data(cat, target), slice);
}

// ---------------------------------------------------------------------------
// recognise
// ---------------------------------------------------------------------------

inline RecognitionResult recognise(const Catalog& cat, SporadicName target) {
    RecognitionResult res;
    res.target = target;
    for (const RecognisabilityRow& row : cat.recognisability)
        if (row.group == target) res.row = row;
    const SporadicRecord& rec = sporadic_record(target);
    std::string name = sporadic_to_string(target);

    const auto& eight = recognisable_targets();
    if (std::find(eight.begin(), eight.end(), target) != eight.end()) {
        res.recognisable = true;
        if (target == SporadicName::J4) {
            res.summary = "J4 is the only group whose prime graph has six "
                          "connected components, so it is recognisable by the "
                          "isomorphism type of its prime graph";
            res.citation = "Zavarnitsine 2006, Theorem B";
            return res;
        }
        for (const Candidate& cand : candidate_socles(cat, target)) {
            EliminationReport rep = apply_filters(cat, target, cand);
            if (!rep.eliminated) res.recognisable = false;
            res.reports.push_back(std::move(rep));
        }
        res.summary = res.recognisable
                          ? "every candidate socle is eliminated, so " + name +
                                " is recognisable by the isomorphism type of its "
                                "prime graph"
                          : "a candidate socle admits a completion; recognisability "
                            "is not established";
        res.citation = rec.citation;
        return res;
    }

    res.recognisable = false;
    if (const WitnessSpec* w = find_witness(cat, target)) {
        res.witness = *w;
        res.verification = verify_witness(cat, *w);
        res.summary = name + " is not recognisable by the isomorphism type of its "
                      "prime graph: " + w->citation;
        res.citation = w->citation;
    } else {
        res.summary = name + " is not recognisable by the isomorphism type of its "
                      "prime graph (" + rec.citation + ")";
        res.citation = rec.citation;
    }
    return res;
}

inline RecognitionResult recognise(SporadicName target) {
    return recognise(builtin_catalog(), target);
}

// ---------------------------------------------------------------------------
// Serialization
// ---------------------------------------------------------------------------

inline json candidate_to_json(const Candidate& c) {
    json j;
    j["key"] = c.key();
    j["display"] = c.display();
    j["slice"] = c.is_slice;
    if (!c.is_slice) j["id"] = c.id.key();
    if (c.is_slice) {
        j["predicate"] = c.predicate;
        if (!c.params.empty()) j["params"] = c.params;
    }
    return j;
}

inline json report_to_json(const EliminationReport& r) {
    json j;
    j["target"] = sporadic_to_string(r.target);
    j["candidate"] = candidate_to_json(r.candidate);
    j["eliminated"] = r.eliminated;
    j["rule"] = r.rule;
    j["trace"] = r.trace;
    j["citation"] = r.citation;
    j["earlier_rule"] = r.earlier_rule;
    if (r.completion) j["completion"] = graph_to_json(*r.completion);
    return j;
}

inline json recognition_to_json(const RecognitionResult& r) {
    json j;
    j["target"] = sporadic_to_string(r.target);
    j["recognisable"] = r.recognisable;
    j["summary"] = r.summary;
    j["citation"] = r.citation;
    json reports = json::array();
    for (const EliminationReport& rep : r.reports) reports.push_back(report_to_json(rep));
    j["reports"] = reports;
    j["labelled_status"] = detail::labelled_status_name(r.row.labelled);
    if (r.row.labelled == LabelledStatus::KRecognisable) j["k"] = r.row.k;
    if (r.witness) {
        json w;
        w["base"] = r.witness->base.key();
        w["steps"] = r.witness->steps.size();
        w["citation"] = r.witness->citation;
        if (r.verification) {
            w["verified"] = true;
            w["labelled_equal"] = r.verification->labelled_equal;
            w["graph"] = graph_to_json(r.verification->graph);
        }
        j["witness"] = w;
    }
    return j;
}

inline std::string recognition_to_text(const RecognitionResult& r) {
    std::string out;
    out += "target: " + sporadic_to_string(r.target) + "\n";
    out += "verdict: ";
    out += r.recognisable ? "recognisable" : "unrecognisable";
    out += "\n";
    out += "summary: " + r.summary + "\n";
    if (!r.reports.empty()) {
        out += "candidates: " + std::to_string(r.reports.size()) + "\n";
        for (const EliminationReport& rep : r.reports) {
            out += "- " + rep.candidate.display() + " [" + rep.rule + "] ";
            out += rep.eliminated ? "eliminated" : "SURVIVES";
            out += ": " + rep.trace + "\n";
            out += "  citation: " + rep.citation + "\n";
        }
    }
    if (r.witness) {
        out += "witness: base " + r.witness->base.key() + " with " +
               std::to_string(r.witness->steps.size()) + " step(s); " +
               r.witness->citation + "\n";
        if (r.verification)
            out += std::string("witness verified: isomorphic to the target graph") +
                   (r.verification->labelled_equal ? " (labelled equality)" : "") +
                   "\n";
    }
    out += "citation: " + r.citation + "\n";
    return out;
}

} // namespace gk

#endif // GK_RECOGNISER_HPP

// gk — command-line surface for the prime-graph library.
//
// Subcommands: graph, invariants, iso, lemma, recognise, witness, validate.
// Exit codes: 0 success/verified, 1 negative mathematical result (not
// isomorphic, lemma fails, graph adjacency not fully determined), 2 usage
// error, 3 internal/data error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "gk/catalog.hpp"
#include "gk/extensions.hpp"
#include "gk/graph_io.hpp"
#include "gk/recogniser.hpp"

namespace {

using namespace gk;

enum ExitCode { ExitOk = 0, ExitNegative = 1, ExitUsage = 2, ExitData = 3 };

// A negative mathematical result (exit 1) carrying its already-printed state.
struct NegativeResult : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Catalog load_catalog(const std::string& path_flag) {
    std::string path = path_flag;
    if (path.empty())
        if (const char* env = std::getenv("GK_CATALOG")) path = env;
    if (path.empty()) return builtin_catalog();
    std::ifstream f(path, std::ios::binary);
    if (!f.good()) throw NotFound("cannot open catalog file: " + path);
    json j = json::parse(f, nullptr, /*allow_exceptions=*/true);
    Catalog c = catalog_from_json(j);
    auto violations = validate_catalog(c);
    if (!violations.empty())
        throw Conflict("catalog '" + path + "' fails validation: " + violations.front());
    return c;
}

// Catalog entry graph when tabulated, otherwise the family construction.
PrimeGraph resolve_graph(const Catalog& c, const GroupId& id) {
    for (const CatalogEntry& e : c.entries)
        if (e.id == id && e.has_graph) return e.graph;
    return prime_graph(id);
}

std::string graph_text(const PrimeGraph& g) {
    std::string out;
    out += "vertices (" + std::to_string(g.vertex_count()) + "):";
    for (const Vertex& v : g.vertices()) out += " " + v.label();
    out += "\n";
    out += "edges (" + std::to_string(g.edge_count()) + "):";
    for (const Edge& e : g.edges())
        out += " {" + e.first.label() + "," + e.second.label() + "}";
    out += "\n";
    out += "components (" + std::to_string(g.component_count()) + "):";
    for (const auto& comp : g.components()) {
        out += " {";
        for (size_t i = 0; i < comp.size(); ++i)
            out += (i ? "," : "") + comp[i].label();
        out += "}";
    }
    out += "\n";
    return out;
}

std::string invariants_text(const GraphInvariants& inv) {
    std::string out;
    out += "vertices: " + std::to_string(inv.vertex_count) + "\n";
    out += "edges: " + std::to_string(inv.edge_count) + "\n";
    out += "components: " + std::to_string(inv.component_count) + "\n";
    out += "independence number: " + std::to_string(inv.independence_number) + "\n";
    out += "t(2): " + std::to_string(inv.t_at_two) + "\n";
    out += "clique number: " + std::to_string(inv.clique_number) + "\n";
    out += "isolated vertices: " + std::to_string(inv.isolated_vertex_count) + "\n";
    out += "degree sequence:";
    for (unsigned d : inv.degree_sequence) out += " " + std::to_string(d);
    out += "\n";
    return out;
}

int cmd_graph(const Catalog& c, const std::string& spec, const std::string& format) {
    GroupId id = GroupId::parse(spec);
    PrimeGraph g;
    try {
        g = resolve_graph(c, id);
    } catch (const FullGraphUnknown& e) {
        std::cout << "full graph unknown for " << id.key() << ": " << e.what() << "\n";
        FamilyProfile p = family_profile(id);
        std::cout << "known bound: |pi(S)| >= " << p.pi_lower_bound << "\n";
        const auto parts = component_partition(id);
        if (!parts.empty()) {
            std::cout << "connected components:";
            for (const auto& comp : parts) {
                std::cout << " {";
                for (size_t i = 0; i < comp.size(); ++i)
                    std::cout << (i ? "," : "") << comp[i];
                std::cout << "}";
            }
            std::cout << "\n";
        }
        return ExitNegative;
    }
    if (format == "dot")
        std::cout << to_dot(g);
    else if (format == "json")
        std::cout << graph_to_json(g).dump(2) << "\n";
    else
        std::cout << graph_text(g);
    return ExitOk;
}

int cmd_invariants(const Catalog& c, const std::string& spec, const std::string& format) {
    PrimeGraph g = resolve_graph(c, GroupId::parse(spec));
    GraphInvariants inv = invariants(g);
    if (format == "json")
        std::cout << invariants_to_json(inv).dump(2) << "\n";
    else
        std::cout << invariants_text(inv);
    return ExitOk;
}

int cmd_iso(const Catalog& c, const std::string& spec1, const std::string& spec2) {
    PrimeGraph a = resolve_graph(c, GroupId::parse(spec1));
    PrimeGraph b = resolve_graph(c, GroupId::parse(spec2));
    auto bij = is_isomorphic(a, b);
    if (!bij) {
        std::cout << "not isomorphic: "
                  << detail::distinguishing_invariant(invariants(a), invariants(b))
                  << "\n";
        return ExitNegative;
    }
    std::cout << "isomorphic\n";
    for (const auto& [va, vb] : *bij)
        std::cout << "  " << va.label() << " -> " << vb.label() << "\n";
    return ExitOk;
}

int cmd_lemma(const std::string& id, unsigned max_m, unsigned max_q, unsigned max_n,
              unsigned max_l) {
    bool pass = true;
    std::ostringstream detail;
    if (id == "suz_primes") {
        std::set<unsigned> solutions, expected;
        for (unsigned m = 1; m <= max_m; ++m) {
            if (suzuki_both_prime_powers(m)) solutions.insert(m);
            if (m <= 2) expected.insert(m);
        }
        pass = (solutions == expected);
        detail << "solutions for m <= " << max_m << ": {";
        bool first = true;
        for (unsigned m : solutions) {
            detail << (first ? "" : ", ") << m;
            first = false;
        }
        detail << "}";
    } else if (id == "ree_primes") {
        for (unsigned m = 1; m <= max_m && pass; ++m) {
            // ree_prime_power_check throws if a prime-power value is not
            // prime or the congruence m = 1 (mod 3) fails.
            try {
                ree_prime_power_check(m);
            } catch (const DomainError& e) {
                pass = false;
                detail << "m = " << m << ": " << e.what();
            }
        }
        if (pass)
            detail << "prime-power values are prime and satisfy the congruence "
                      "for m <= " << max_m;
    } else if (id == "gerono") {
        auto sols = gerono_solutions(max_m);
        pass = (sols == std::set<std::pair<unsigned, unsigned>>{{1, 2}});
        detail << "solutions of 2^(2m+1) + 1 = 3^k for m <= " << max_m << ": {";
        bool first = true;
        for (auto [m, k] : sols) {
            detail << (first ? "" : ", ") << "(" << m << "," << k << ")";
            first = false;
        }
        detail << "}";
    } else if (id == "zsigmondy") {
        unsigned checked = 0;
        for (u128 q = 2; q <= max_q && pass; ++q)
            for (unsigned n = 1; n <= max_n && pass; ++n) {
                bool exceptional = (q == 2 && n == 1) || (q == 3 && n == 1) ||
                                   (q == 2 && n == 6);
                ++checked;
                if (!exceptional && primitive_prime_divisors(q, n).empty()) {
                    pass = false;
                    detail << "no primitive prime divisor for q = "
                           << to_string_u128(q) << ", n = " << n;
                }
            }
        if (pass)
            detail << checked << " pairs checked, primitive prime divisors exist "
                      "outside the exceptions (2,1), (3,1), (2,6)";
    } else if (id == "lte") {
        for (unsigned l = 1; l <= max_l && pass; ++l)
            if (lte_two_adic_five(l) != 2 + p_adic_valuation(2, l)) {
                pass = false;
                detail << "identity fails at l = " << l;
            }
        if (pass) detail << "v2(5^l - 1) = 2 + v2(l) for l <= " << max_l;
    } else {
        throw CLI::ValidationError("unknown lemma id: " + id);
    }
    std::cout << "lemma " << id << ": " << (pass ? "pass" : "FAIL") << " ("
              << detail.str() << ")\n";
    return pass ? ExitOk : ExitNegative;
}

int cmd_recognise(const Catalog& c, const std::string& name, const std::string& format) {
    RecognitionResult r = recognise(c, sporadic_from_string(name));
    if (format == "json")
        std::cout << recognition_to_json(r).dump(2) << "\n";
    else
        std::cout << recognition_to_text(r);
    return ExitOk;
}

int cmd_witness(const Catalog& c, const std::string& name) {
    SporadicName target = sporadic_from_string(name);
    const WitnessSpec* w = find_witness(c, target);
    if (!w) {
        std::cout << "no witness construction recorded for "
                  << sporadic_to_string(target) << "\n";
        return ExitNegative;
    }
    std::cout << "witness for " << sporadic_to_string(target) << "\n";
    std::cout << "base: " << w->base.key() << "\n";
    for (size_t i = 0; i < w->steps.size(); ++i) {
        const ExtensionStep& s = w->steps[i];
        std::cout << "step " << (i + 1) << ": ";
        switch (s.kind) {
            case StepKind::Affine: {
                std::cout << "affine extension, characteristic " << s.r.label()
                          << ", fixing {";
                for (size_t k = 0; k < s.fixing.size(); ++k)
                    std::cout << (k ? "," : "") << s.fixing[k];
                std::cout << "}, avoiding {";
                for (size_t k = 0; k < s.avoiding.size(); ++k)
                    std::cout << (k ? "," : "") << s.avoiding[k];
                std::cout << "}";
                break;
            }
            case StepKind::AddOuterPrime:
                std::cout << "adjoin outer prime " << s.prime;
                break;
            case StepKind::AddEdges:
                std::cout << "add edges";
                for (auto [a, b] : s.edges) std::cout << " {" << a << "," << b << "}";
                break;
        }
        if (!s.citation.empty()) std::cout << " (" << s.citation << ")";
        std::cout << "\n";
    }
    WitnessVerification v = verify_witness(c, *w);
    std::cout << "replayed graph:\n" << graph_text(v.graph);
    std::cout << "verified: isomorphic to the " << sporadic_to_string(target)
              << " prime graph"
              << (v.labelled_equal ? " (labelled equality)" : "") << "\n";
    if (!w->citation.empty()) std::cout << "citation: " << w->citation << "\n";
    return ExitOk;
}

int cmd_validate(const Catalog& c) {
    auto violations = validate_catalog(c);
    if (violations.empty()) {
        std::cout << "catalog OK (" << c.entries.size() << " entries, "
                  << c.facts.size() << " facts, " << c.recognisability.size()
                  << " rows, " << c.witnesses.size() << " witnesses)\n";
        return ExitOk;
    }
    for (const std::string& v : violations) std::cout << "violation: " << v << "\n";
    return ExitData;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Prime-graph (Gruenberg-Kegel graph) toolkit for finite simple groups"};
    app.require_subcommand(1);

    std::string catalog_path;
    app.add_option("--catalog", catalog_path,
                   "Catalog JSON file overriding the built-in tables "
                   "(also via GK_CATALOG)");

    const std::string spec_help =
        "Group spec: family:param, e.g. sporadic:J4, alt:19, psl2:61, sz:m=3";
    auto* format_validator = new CLI::Validator(CLI::IsMember({"text", "json", "dot"}));

    std::string g_spec, g_format = "text";
    CLI::App* sub_graph = app.add_subcommand("graph", "Print the prime graph of a group");
    sub_graph->add_option("spec", g_spec, spec_help)->required();
    sub_graph->add_option("--format", g_format, "Output format")->check(*format_validator);

    std::string i_spec, i_format = "text";
    CLI::App* sub_inv =
        app.add_subcommand("invariants", "Print graph invariants of a group");
    sub_inv->add_option("spec", i_spec, spec_help)->required();
    sub_inv->add_option("--format", i_format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));

    std::string iso_a, iso_b;
    CLI::App* sub_iso =
        app.add_subcommand("iso", "Test two prime graphs for isomorphism");
    sub_iso->add_option("spec1", iso_a, spec_help)->required();
    sub_iso->add_option("spec2", iso_b, spec_help)->required();

    std::string lemma_id;
    unsigned max_m = 0, max_q = 20, max_n = 20, max_l = 30;
    CLI::App* sub_lemma =
        app.add_subcommand("lemma", "Check a number-theoretic lemma on a range");
    sub_lemma->add_option("id", lemma_id, "One of: suz_primes, ree_primes, gerono, "
                                          "zsigmondy, lte")
        ->required()
        ->check(CLI::IsMember({"suz_primes", "ree_primes", "gerono", "zsigmondy", "lte"}));
    sub_lemma->add_option("--max-m", max_m, "Range bound for m (suz_primes, "
                                            "ree_primes, gerono)");
    sub_lemma->add_option("--max-q", max_q, "Range bound for q (zsigmondy)");
    sub_lemma->add_option("--max-n", max_n, "Range bound for n (zsigmondy)");
    sub_lemma->add_option("--max-l", max_l, "Range bound for l (lte)");

    std::string r_name, r_format = "text";
    CLI::App* sub_rec = app.add_subcommand(
        "recognise", "Decide recognisability of a sporadic group by its prime graph");
    sub_rec->add_option("name", r_name, "Sporadic group name, e.g. Th, Fi23, B, M")
        ->required();
    sub_rec->add_option("--format", r_format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));

    std::string w_name;
    CLI::App* sub_wit = app.add_subcommand(
        "witness", "Replay and verify the unrecognisability witness for a group");
    sub_wit->add_option("name", w_name, "Sporadic group name, e.g. Ru, Co2")
        ->required();

    app.add_subcommand("validate", "Run all catalog integrity checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? ExitOk : ExitUsage;
    }

    try {
        Catalog catalog = load_catalog(catalog_path);
        if (sub_graph->parsed()) return cmd_graph(catalog, g_spec, g_format);
        if (sub_inv->parsed()) return cmd_invariants(catalog, i_spec, i_format);
        if (sub_iso->parsed()) return cmd_iso(catalog, iso_a, iso_b);
        if (sub_lemma->parsed()) {
            if (max_m == 0)
                max_m = (lemma_id == "ree_primes") ? 8
                      : (lemma_id == "gerono")     ? 30
                                                   : 12;
            return cmd_lemma(lemma_id, max_m, max_q, max_n, max_l);
        }
        if (sub_rec->parsed()) return cmd_recognise(catalog, r_name, r_format);
        if (sub_wit->parsed()) return cmd_witness(catalog, w_name);
        return cmd_validate(catalog);
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return ExitUsage;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return ExitUsage;
    } catch (const NotIsomorphic& e) {
        std::cerr << e.what() << "\n";
        return ExitNegative;
    } catch (const gk::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return ExitData;
    } catch (const json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return ExitData;
    }
}

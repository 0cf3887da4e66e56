#ifndef GK_FAMILIES_HPP
#define GK_FAMILIES_HPP

// Group identifiers, order formulas, connected-component data, and prime-graph
// builders for the simple-group families the analysis touches: alternating
// groups, PSL2(q), the Suzuki and small Ree families, G2(3^k), F4(2^k),
// 2F4(2^(2m+1)), selected unitary/orthogonal/exceptional groups, and the 26
// sporadic groups.
//
// Full adjacency is exposed only where it is determined: clique-structured
// families (every component a clique), alternating groups (cycle-type rule),
// sporadic groups (embedded spectra), and a handful of explicit instances.
// Everything else offers component_partition and family_profile only;
// prime_graph raises FullGraphUnknown there rather than inventing edges.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gk/errors.hpp"
#include "gk/graph.hpp"
#include "gk/numtheory.hpp"
#include "gk/sporadic_data.hpp"

namespace gk {

enum class Family {
    Sporadic, Alt, PSL2, PSL3_4, PSU4_3, PSU6_2, POmegaMinus,
    G2, TwoG2, F4, TwoF4, TwoB2, TwoE6_2, E7_2, E7_3, E8,
};

struct GroupId {
    Family family = Family::Sporadic;
    // Meaning per family: Alt n, PSL2 q, POmegaMinus p, G2/F4 k (field 3^k or
    // 2^k), TwoG2/TwoF4/TwoB2 m (field 3^(2m+1) or 2^(2m+1)), E8 q; unused
    // for the parameterless families.
    u64 param = 0;
    SporadicName sporadic = SporadicName::M11;

    static GroupId sporadic_group(SporadicName n) {
        return GroupId{Family::Sporadic, 0, n};
    }
    static GroupId alt(u64 n) {
        if (n < 5) throw DomainError("Alt(n) requires n >= 5");
        return GroupId{Family::Alt, n, {}};
    }
    static GroupId psl2(u64 q) {
        if (q < 4 || !is_prime_power(q)) throw DomainError("PSL2(q) requires a prime power q >= 4");
        return GroupId{Family::PSL2, q, {}};
    }
    static GroupId psl3_4() { return GroupId{Family::PSL3_4, 0, {}}; }
    static GroupId psu4_3() { return GroupId{Family::PSU4_3, 0, {}}; }
    static GroupId psu6_2() { return GroupId{Family::PSU6_2, 0, {}}; }
    static GroupId pomega_minus(u64 p) {
        // p = 2^m + 1 prime, m >= 1 (so p is a Fermat prime >= 3).
        if (p < 3 || !is_prime(p) || (p - 1) != (u64(1) << std::countr_zero(p - 1)))
            throw DomainError("POmegaMinus(p) requires a prime p = 2^m + 1, m >= 1");
        return GroupId{Family::POmegaMinus, p, {}};
    }
    static GroupId g2(u64 k) {
        if (k < 1) throw DomainError("G2(3^k) requires k >= 1");
        return GroupId{Family::G2, k, {}};
    }
    static GroupId two_g2(u64 m) {
        if (m < 1) throw DomainError("2G2(3^(2m+1)) requires m >= 1");
        return GroupId{Family::TwoG2, m, {}};
    }
    static GroupId f4(u64 k) {
        if (k < 1) throw DomainError("F4(2^k) requires k >= 1");
        return GroupId{Family::F4, k, {}};
    }
    static GroupId two_f4(u64 m) {
        if (m < 1) throw DomainError("2F4(2^(2m+1)) requires m >= 1");
        return GroupId{Family::TwoF4, m, {}};
    }
    static GroupId two_b2(u64 m) {
        if (m < 1) throw DomainError("2B2(2^(2m+1)) requires m >= 1");
        return GroupId{Family::TwoB2, m, {}};
    }
    static GroupId two_e6_2() { return GroupId{Family::TwoE6_2, 0, {}}; }
    static GroupId e7_2() { return GroupId{Family::E7_2, 0, {}}; }
    static GroupId e7_3() { return GroupId{Family::E7_3, 0, {}}; }
    static GroupId e8(u64 q) {
        if (q < 2 || !is_prime_power(q)) throw DomainError("E8(q) requires a prime power q >= 2");
        return GroupId{Family::E8, q, {}};
    }

    friend bool operator==(const GroupId&, const GroupId&) = default;
    friend auto operator<=>(const GroupId&, const GroupId&) = default;

    // Key in the CLI mini-grammar `family[:param]`.
    std::string key() const {
        switch (family) {
            case Family::Sporadic: return "sporadic:" + sporadic_to_string(sporadic);
            case Family::Alt: return "alt:" + std::to_string(param);
            case Family::PSL2: return "psl2:" + std::to_string(param);
            case Family::PSL3_4: return "psl3_4";
            case Family::PSU4_3: return "psu4_3";
            case Family::PSU6_2: return "psu6_2";
            case Family::POmegaMinus: return "pomega_minus:" + std::to_string(param);
            case Family::G2: return "g2:" + std::to_string(param);
            case Family::TwoG2: return "2g2:" + std::to_string(param);
            case Family::F4: return "f4:" + std::to_string(param);
            case Family::TwoF4: return "2f4:" + std::to_string(param);
            case Family::TwoB2: return "sz:" + std::to_string(param);
            case Family::TwoE6_2: return "2e6_2";
            case Family::E7_2: return "e7_2";
            case Family::E7_3: return "e7_3";
            case Family::E8: return "e8:" + std::to_string(param);
        }
        throw DomainError("GroupId::key: bad family");
    }

    static GroupId parse(const std::string& s) {
        std::string fam = s, arg;
        if (auto pos = s.find(':'); pos != std::string::npos) {
            fam = s.substr(0, pos);
            arg = s.substr(pos + 1);
        }
        auto num = [&]() -> u64 {
            if (arg.empty()) throw ParseError("group '" + fam + "' requires a parameter");
            // Accept a named-parameter form, e.g. "sz:m=3" or "psl2:q=61".
            if (auto eq = arg.find('='); eq != std::string::npos) arg = arg.substr(eq + 1);
            if (arg.empty()) throw ParseError("group '" + fam + "' requires a parameter");
            u128 v = parse_u128(arg);
            if (v > ~u64(0)) throw Overflow("group parameter too large");
            return static_cast<u64>(v);
        };
        auto none = [&](GroupId id) {
            if (!arg.empty()) throw ParseError("group '" + fam + "' takes no parameter");
            return id;
        };
        if (fam == "sporadic") {
            if (arg.empty()) throw ParseError("sporadic group name required");
            return sporadic_group(sporadic_from_string(arg));
        }
        if (fam == "alt") return alt(num());
        if (fam == "psl2") return psl2(num());
        if (fam == "psl3_4") return none(psl3_4());
        if (fam == "psu4_3") return none(psu4_3());
        if (fam == "psu6_2") return none(psu6_2());
        if (fam == "pomega_minus") return pomega_minus(num());
        if (fam == "g2") return g2(num());
        if (fam == "2g2") return two_g2(num());
        if (fam == "f4") return f4(num());
        if (fam == "2f4") return two_f4(num());
        if (fam == "sz") return two_b2(num());
        if (fam == "2e6_2") return none(two_e6_2());
        if (fam == "e7_2") return none(e7_2());
        if (fam == "e7_3") return none(e7_3());
        if (fam == "e8") return e8(num());
        throw ParseError("unknown family '" + fam + "'");
    }
};

namespace detail {

inline Factorization fval(u128 v) { return factorize(v); }

inline Factorization fpow(u128 base, unsigned e) {
    Factorization b = factorize(base);
    for (auto& pp : b.factors) pp.exponent *= e;
    return b;
}

inline u128 upow(u128 base, unsigned e) {
    u128 v = 1;
    for (unsigned i = 0; i < e; ++i) {
        if (base != 0 && v > ~u128(0) / base) throw Overflow("upow: exceeds 128 bits");
        v *= base;
    }
    return v;
}

inline std::vector<u64> prime_list(const Factorization& f) {
    std::vector<u64> out;
    for (const auto& pp : f.factors) {
        if (pp.prime > ~u64(0)) throw Overflow("prime exceeds 64 bits");
        out.push_back(static_cast<u64>(pp.prime));
    }
    return out;
}

inline std::vector<u64> primes_of(u128 v) { return prime_list(fval(v)); }

// Sort a component list: the component containing 2 first, then ascending by
// least prime (the same convention PrimeGraph::components uses).
inline std::vector<std::vector<u64>> sort_components(std::vector<std::vector<u64>> parts) {
    for (auto& p : parts) std::sort(p.begin(), p.end());
    std::sort(parts.begin(), parts.end(), [](const auto& a, const auto& b) {
        bool a2 = !a.empty() && a.front() == 2;
        bool b2 = !b.empty() && b.front() == 2;
        if (a2 != b2) return a2;
        return a.front() < b.front();
    });
    return parts;
}

// Disjoint union of cliques, one per component.
inline PrimeGraph cliques_graph(const std::vector<std::vector<u64>>& parts) {
    PrimeGraph g;
    for (const auto& part : parts) {
        for (u64 p : part) g = g.with_vertex(Vertex::prime(p));
        for (size_t i = 0; i < part.size(); ++i)
            for (size_t j = i + 1; j < part.size(); ++j)
                g = g.with_edge(Vertex::prime(part[i]), Vertex::prime(part[j]));
    }
    return g;
}

inline Factorization sporadic_order(SporadicName n) {
    Factorization f;
    for (auto [p, e] : sporadic_record(n).order) f.factors.push_back({p, e});
    return f;
}

inline PrimeGraph sporadic_graph(SporadicName n) {
    const auto& r = sporadic_record(n);
    std::vector<u64> verts;
    for (auto [p, e] : r.order) verts.push_back(p);
    return PrimeGraph::from_edges(verts, r.edges);
}

} // namespace detail

// |Alt(n)| = n!/2, exponents via Legendre's formula.
inline Factorization alt_order(u64 n) {
    if (n < 5) throw DomainError("alt_order: n >= 5");
    Factorization f;
    for (u64 p : detail::small_primes()) {
        if (p > n) break;
        unsigned e = 0;
        for (u64 q = p; q <= n; q *= p) {
            e += static_cast<unsigned>(n / q);
            if (q > n / p) break;
        }
        if (p == 2) e -= 1; // index 2 in Sym(n)
        f.factors.push_back({p, e});
    }
    return f;
}

inline Factorization order(const GroupId& id) {
    using detail::fpow;
    using detail::fval;
    using detail::upow;
    switch (id.family) {
        case Family::Sporadic:
            return detail::sporadic_order(id.sporadic);
        case Family::Alt:
            return alt_order(id.param);
        case Family::PSL2: {
            u128 q = id.param;
            Factorization f = multiply(fval(q), multiply(fval(q - 1), fval(q + 1)));
            return q % 2 == 0 ? f : divide_exact(f, fval(2));
        }
        case Family::PSL3_4:
            return Factorization{{{2, 6}, {3, 2}, {5, 1}, {7, 1}}};
        case Family::PSU4_3:
            return Factorization{{{2, 7}, {3, 6}, {5, 1}, {7, 1}}};
        case Family::PSU6_2:
            return Factorization{{{2, 15}, {3, 6}, {5, 1}, {7, 1}, {11, 1}}};
        case Family::POmegaMinus: {
            unsigned p = static_cast<unsigned>(id.param);
            Factorization f = fpow(3, p * (p - 1));
            f = multiply(f, fval(upow(3, p) + 1));
            for (unsigned i = 1; i <= p - 1; ++i)
                f = multiply(f, fval(upow(3, 2 * i) - 1));
            return divide_exact(f, fval(4)); // gcd(4, 3^p + 1) = 4 for odd p
        }
        case Family::G2: {
            unsigned k = static_cast<unsigned>(id.param);
            u128 q = upow(3, k);
            return multiply(fpow(3, 6 * k),
                            multiply(fval(upow(q, 6) - 1), fval(upow(q, 2) - 1)));
        }
        case Family::TwoG2: {
            unsigned e = 2 * static_cast<unsigned>(id.param) + 1;
            u128 q = upow(3, e);
            return multiply(fpow(3, 3 * e), multiply(fval(upow(q, 3) + 1), fval(q - 1)));
        }
        case Family::F4: {
            unsigned k = static_cast<unsigned>(id.param);
            u128 q = upow(2, k);
            Factorization f = fpow(2, 24 * k);
            for (unsigned d : {12, 8, 6, 2}) f = multiply(f, fval(upow(q, d) - 1));
            return f;
        }
        case Family::TwoF4: {
            unsigned e = 2 * static_cast<unsigned>(id.param) + 1;
            u128 q = upow(2, e);
            Factorization f = fpow(2, 12 * e);
            f = multiply(f, fval(upow(q, 6) + 1));
            f = multiply(f, fval(upow(q, 4) - 1));
            f = multiply(f, fval(upow(q, 3) + 1));
            return multiply(f, fval(q - 1));
        }
        case Family::TwoB2: {
            unsigned e = 2 * static_cast<unsigned>(id.param) + 1;
            u128 q = upow(2, e);
            return multiply(fpow(2, 2 * e), multiply(fval(upow(q, 2) + 1), fval(q - 1)));
        }
        case Family::TwoE6_2:
            return Factorization{{{2, 36}, {3, 9}, {5, 2}, {7, 2},
                                  {11, 1}, {13, 1}, {17, 1}, {19, 1}}};
        case Family::E7_2:
        case Family::E7_3: {
            u128 q = id.family == Family::E7_2 ? 2 : 3;
            Factorization f = fpow(q, 63);
            for (unsigned d : {2, 6, 8, 10, 12, 14, 18}) f = multiply(f, fval(upow(q, d) - 1));
            return q == 2 ? f : divide_exact(f, fval(2));
        }
        case Family::E8: {
            u128 q = id.param;
            auto w = is_prime_power(q);
            Factorization f = detail::fpow(w->base, 120 * w->exponent);
            for (unsigned d : {2, 8, 12, 14, 18, 20, 24, 30}) f = multiply(f, fval(upow(q, d) - 1));
            return f;
        }
    }
    throw DomainError("order: bad family");
}

// Adjacency rule for alternating groups: vertices are the primes <= n; odd
// primes p, q are adjacent iff p + q <= n, and 2 is adjacent to odd p iff
// p + 4 <= n (an even permutation needs a double transposition or a 4-cycle
// companion alongside the p-cycle).
inline PrimeGraph alt_prime_graph(u64 n) {
    if (n < 5 || n > 100) throw DomainError("alt_prime_graph: 5 <= n <= 100");
    std::vector<u64> verts;
    for (u64 p : detail::small_primes()) {
        if (p > n) break;
        verts.push_back(p);
    }
    std::vector<std::pair<u64, u64>> edges;
    for (size_t i = 0; i < verts.size(); ++i) {
        for (size_t j = i + 1; j < verts.size(); ++j) {
            u64 p = verts[i], q = verts[j];
            bool adj = (p == 2) ? (q + 4 <= n) : (p + q <= n);
            if (adj) edges.push_back({p, q});
        }
    }
    return PrimeGraph::from_edges(verts, edges);
}

inline std::vector<std::vector<u64>> component_partition(const GroupId& id) {
    using detail::primes_of;
    using detail::sort_components;
    using detail::upow;
    switch (id.family) {
        case Family::Sporadic: {
            const auto& r = sporadic_record(id.sporadic);
            if (!r.table_components.empty()) return sort_components(r.table_components);
            std::vector<std::vector<u64>> parts;
            for (const auto& comp : detail::sporadic_graph(id.sporadic).components()) {
                std::vector<u64> part;
                for (const Vertex& v : comp) part.push_back(v.prime_value());
                parts.push_back(part);
            }
            return sort_components(parts);
        }
        case Family::Alt: {
            std::vector<std::vector<u64>> parts;
            for (const auto& comp : alt_prime_graph(id.param).components()) {
                std::vector<u64> part;
                for (const Vertex& v : comp) part.push_back(v.prime_value());
                parts.push_back(part);
            }
            return sort_components(parts);
        }
        case Family::PSL2: {
            u128 q = id.param;
            if (q % 2 == 0) return sort_components({{2}, primes_of(q - 1), primes_of(q + 1)});
            u64 p = static_cast<u64>(is_prime_power(q)->base);
            if (q % 4 == 1)
                return sort_components({primes_of(q - 1), {p}, primes_of((q + 1) / 2)});
            return sort_components({primes_of(q + 1), {p}, primes_of((q - 1) / 2)});
        }
        case Family::PSL3_4:
            return {{2}, {3}, {5}, {7}};
        case Family::PSU4_3:
            return {{2, 3}, {5}, {7}};
        case Family::PSU6_2:
            return {{2, 3, 5}, {7}, {11}};
        case Family::POmegaMinus: {
            unsigned p = static_cast<unsigned>(id.param);
            Factorization pi1 = detail::fval(3 * (upow(3, p - 1) - 1));
            for (unsigned i = 1; i <= p - 2; ++i)
                pi1 = multiply(pi1, detail::fval(upow(3, 2 * i) - 1));
            return sort_components({detail::prime_list(pi1),
                                    primes_of((upow(3, p - 1) + 1) / 2),
                                    primes_of((upow(3, p) + 1) / 4)});
        }
        case Family::G2: {
            u128 q = upow(3, static_cast<unsigned>(id.param));
            return sort_components({primes_of(q * (q * q - 1)),
                                    primes_of(q * q - q + 1),
                                    primes_of(q * q + q + 1)});
        }
        case Family::TwoG2: {
            unsigned m = static_cast<unsigned>(id.param);
            u128 q = upow(3, 2 * m + 1), root = upow(3, m + 1);
            return sort_components({primes_of(q * (q * q - 1)),
                                    primes_of(q - root + 1),
                                    primes_of(q + root + 1)});
        }
        case Family::F4: {
            u128 q = upow(2, static_cast<unsigned>(id.param));
            u128 q2 = q * q, q4 = q2 * q2;
            return sort_components({primes_of(q * (q4 - 1) * (q4 * q2 - 1)),
                                    primes_of(q4 - q2 + 1),
                                    primes_of(q4 + 1)});
        }
        case Family::TwoF4: {
            unsigned m = static_cast<unsigned>(id.param);
            u128 q = upow(2, 2 * m + 1);
            u128 r1 = upow(2, m + 1);      // sqrt(2q)
            u128 r3 = upow(2, 3 * m + 2);  // sqrt(2q^3)
            return sort_components({primes_of(q * (q * q * q + 1) * (q * q * q * q - 1)),
                                    primes_of(q * q - r3 + q - r1 + 1),
                                    primes_of(q * q + r3 + q + r1 + 1)});
        }
        case Family::TwoB2: {
            unsigned m = static_cast<unsigned>(id.param);
            u128 q = upow(2, 2 * m + 1), root = upow(2, m + 1);
            return sort_components({{2},
                                    primes_of(q - 1),
                                    primes_of(q - root + 1),
                                    primes_of(q + root + 1)});
        }
        case Family::TwoE6_2:
            return {{2, 3, 5, 7, 11}, {13}, {17}, {19}};
        case Family::E7_2:
            return {{2, 3, 5, 7, 11, 13, 17, 19, 31, 43}, {73}, {127}};
        case Family::E7_3:
            return {{2, 3, 5, 7, 11, 13, 19, 37, 41, 61, 73, 547}, {757}, {1093}};
        case Family::E8: {
            u128 q = id.param;
            if (q % 5 != 2 && q % 5 != 3)
                throw UnsupportedFamily(
                    "E8(q) components modelled only for q = 2,3 (mod 5)");
            Factorization pi1 = detail::fval(q);
            for (unsigned d : {8, 12, 14, 18, 20}) pi1 = multiply(pi1, detail::fval(upow(q, d) - 1));
            u128 q5 = upow(q, 5);
            return sort_components({detail::prime_list(pi1),
                                    primes_of((q5 * q5 + q5 + 1) / (q * q + q + 1)),
                                    primes_of(upow(q, 8) - upow(q, 4) + 1),
                                    primes_of((q5 * q5 - q5 + 1) / (q * q - q + 1))});
        }
    }
    throw DomainError("component_partition: bad family");
}

inline PrimeGraph prime_graph(const GroupId& id) {
    switch (id.family) {
        case Family::Sporadic:
            return detail::sporadic_graph(id.sporadic);
        case Family::Alt:
            return alt_prime_graph(id.param);
        // Clique-structured families: every component is a clique.
        case Family::PSL2:
        case Family::PSL3_4:
        case Family::PSU4_3:
        case Family::PSU6_2:
        case Family::G2:
        case Family::TwoB2:
            return detail::cliques_graph(component_partition(id));
        case Family::POmegaMinus:
            if (id.param == 3) // POmega6-(3) = PSU4(3)
                return detail::cliques_graph(component_partition(GroupId::psu4_3()));
            if (id.param == 5)
                return PrimeGraph::from_edges(
                    {2, 3, 5, 7, 13, 41, 61},
                    {{2, 3}, {2, 5}, {2, 7}, {2, 13}, {3, 5}, {3, 7}, {3, 13}, {5, 13}});
            throw FullGraphUnknown("POmegaMinus(p) full adjacency known only for p in {3,5}");
        case Family::TwoG2:
            if (id.param == 1)
                return PrimeGraph::from_edges({2, 3, 7, 13, 19, 37},
                                              {{2, 3}, {2, 7}, {2, 13}});
            throw FullGraphUnknown("2G2 full adjacency known only for m = 1");
        case Family::F4:
            if (id.param == 1)
                return PrimeGraph::from_edges({2, 3, 5, 7, 13, 17},
                                              {{2, 3}, {2, 5}, {2, 7}, {3, 5}, {3, 7}});
            throw FullGraphUnknown("F4 full adjacency known only for q = 2");
        case Family::TwoF4:
            if (id.param == 1)
                return PrimeGraph::from_edges(
                    {2, 3, 5, 7, 13, 19, 37, 109},
                    {{2, 3}, {2, 5}, {2, 7}, {2, 13}, {3, 7}, {3, 19},
                     {5, 7}, {5, 13}, {7, 13}});
            throw FullGraphUnknown("2F4 full adjacency known only for m = 1");
        case Family::TwoE6_2:
            return PrimeGraph::from_edges(
                {2, 3, 5, 7, 11, 13, 17, 19},
                {{2, 3}, {2, 5}, {2, 7}, {2, 11}, {3, 5}, {3, 7}, {3, 11}, {5, 7}});
        case Family::E7_2:
        case Family::E7_3:
            throw FullGraphUnknown("E7 full adjacency not modelled (components only)");
        case Family::E8:
            throw FullGraphUnknown("E8 full adjacency not modelled (components only)");
    }
    throw DomainError("prime_graph: bad family");
}

enum class CliqueStructure { Unknown, AllCliques };

struct FamilyProfile {
    unsigned pi_lower_bound = 0;
    std::optional<unsigned> pi_exact;
    std::optional<unsigned> t_lower_bound;
    std::optional<unsigned> t_upper_bound;
    Factorization out_order;
    CliqueStructure clique_structure = CliqueStructure::Unknown;
    std::optional<unsigned> edge_lower_bound;
    std::optional<unsigned> degree_ge5_vertices_lower;
    std::optional<Pattern> forced_subgraph; // embeds as a (non-induced) subgraph
    // Applies only when the target graph has at least two isolated vertices.
    std::optional<unsigned> pi_lower_if_two_isolated;
};

namespace detail {

// The eight-vertex forced subgraph of 2F4(2^(2m+1)) for m >= 2: vertices
// 0..7 = (2, 3, p1, ..., p6) with p1, p2 isolated.
inline Pattern two_f4_compact_pattern() {
    // indices: 0=2, 1=3, 2=p1, 3=p2, 4=p3, 5=p4, 6=p5, 7=p6
    return Pattern{8, {{0, 1}, {5, 0}, {5, 1}, {4, 5}, {4, 0}, {6, 0}, {6, 1}, {5, 6}, {7, 1}}};
}

inline unsigned out_order_value(const GroupId& id) {
    switch (id.family) {
        case Family::Sporadic: return sporadic_record(id.sporadic).out_order;
        case Family::Alt: return id.param == 6 ? 4 : 2;
        case Family::PSL2: {
            auto w = is_prime_power(u128(id.param));
            return (id.param % 2 == 0 ? 1 : 2) * w->exponent;
        }
        case Family::PSL3_4: return 12;     // 2 x Sym(3) x 2
        case Family::PSU4_3: return 8;      // dihedral of order 8
        case Family::PSU6_2: return 6;      // Sym(3)
        case Family::POmegaMinus: return 4;
        case Family::G2: return 2 * static_cast<unsigned>(id.param);
        case Family::TwoG2: return 2 * static_cast<unsigned>(id.param) + 1;
        case Family::F4: return 2 * static_cast<unsigned>(id.param);
        case Family::TwoF4: return 2 * static_cast<unsigned>(id.param) + 1;
        case Family::TwoB2: return 2 * static_cast<unsigned>(id.param) + 1;
        case Family::TwoE6_2: return 6;     // Sym(3)
        case Family::E7_2: return 1;
        case Family::E7_3: return 2;
        case Family::E8: return is_prime_power(u128(id.param))->exponent;
    }
    throw DomainError("out_order_value: bad family");
}

} // namespace detail

inline FamilyProfile family_profile(const GroupId& id) {
    FamilyProfile prof;
    prof.out_order = factorize(detail::out_order_value(id));

    // Exact prime count whenever the order is within factorization range.
    try {
        prof.pi_exact = static_cast<unsigned>(order(id).factors.size());
        prof.pi_lower_bound = *prof.pi_exact;
    } catch (const Overflow&) {
    }

    // Exact graph data whenever full adjacency is available.
    try {
        PrimeGraph g = prime_graph(id);
        unsigned t = g.independence_number();
        prof.t_lower_bound = prof.t_upper_bound = t;
        bool cliques = true;
        for (const auto& comp : g.components()) {
            for (size_t i = 0; i < comp.size() && cliques; ++i)
                for (size_t j = i + 1; j < comp.size(); ++j)
                    if (!g.has_edge(comp[i], comp[j])) { cliques = false; break; }
        }
        if (cliques) prof.clique_structure = CliqueStructure::AllCliques;
        return prof;
    } catch (const FullGraphUnknown&) {
    }

    // Families without full adjacency: the proven bounds.
    switch (id.family) {
        case Family::POmegaMinus:
            prof.pi_lower_bound =
                std::max<unsigned>(prof.pi_lower_bound, static_cast<unsigned>(id.param) + 1);
            break;
        case Family::TwoG2:
            prof.t_upper_bound = 5;
            if (id.param >= 2) prof.pi_lower_if_two_isolated = 9;
            break;
        case Family::F4:
            if (id.param >= 3)
                prof.pi_lower_bound = std::max<unsigned>(prof.pi_lower_bound, 11);
            prof.edge_lower_bound = 12;             // q >= 4 only reaches here
            prof.degree_ge5_vertices_lower = 3;
            break;
        case Family::TwoF4:
            prof.pi_lower_bound = std::max<unsigned>(prof.pi_lower_bound, 8);
            prof.t_upper_bound = 5;
            if (id.param >= 2) prof.forced_subgraph = detail::two_f4_compact_pattern();
            break;
        case Family::E7_2:
        case Family::E7_3:
            break; // pi_exact already set from the order
        case Family::E8:
            prof.pi_lower_bound =
                std::max<unsigned>(prof.pi_lower_bound, id.param > 2 ? 17 : 16);
            break;
        default:
            break;
    }
    return prof;
}

} // namespace gk

#endif // GK_FAMILIES_HPP

#ifndef GK_GRAPH_HPP
#define GK_GRAPH_HPP

// The PrimeGraph value type and its analytics: connected components,
// independence numbers, clique enumeration, unlabelled isomorphism, and
// subgraph-pattern search.  Graphs here are tiny (at most ~30 vertices), so
// every computation is exact and exhaustive.
//
// Vertices are either concrete primes or symbolic prime tags ("r1", "r2", ...)
// standing for an unspecified prime coprime to everything concrete.  Symbolic
// vertices participate in all analytics exactly like concrete ones but compare
// unequal to every concrete prime.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "gk/errors.hpp"
#include "gk/numtheory.hpp"

namespace gk {

class Vertex {
public:
    static Vertex prime(u64 p) { return Vertex(p, 0); }
    static Vertex symbolic(unsigned tag) {
        if (tag == 0) throw DomainError("Vertex::symbolic: tags start at 1");
        return Vertex(0, tag);
    }

    bool is_symbolic() const { return tag_ != 0; }
    u64 prime_value() const {
        if (is_symbolic()) throw DomainError("Vertex: symbolic vertex has no prime value");
        return prime_;
    }
    unsigned tag() const { return tag_; }

    std::string label() const {
        return is_symbolic() ? "r" + std::to_string(tag_) : std::to_string(prime_);
    }

    // Concrete primes order before symbolic tags.
    friend std::strong_ordering operator<=>(const Vertex& a, const Vertex& b) {
        bool as = a.tag_ != 0, bs = b.tag_ != 0;
        if (as != bs) return as ? std::strong_ordering::greater : std::strong_ordering::less;
        if (as) return a.tag_ <=> b.tag_;
        return a.prime_ <=> b.prime_;
    }
    friend bool operator==(const Vertex&, const Vertex&) = default;

    // Parse "7" or "r2" back into a vertex.
    static Vertex parse(const std::string& s) {
        if (s.empty()) throw ParseError("Vertex::parse: empty label");
        if (s[0] == 'r' && s.size() > 1) {
            unsigned tag = 0;
            for (size_t i = 1; i < s.size(); ++i) {
                if (s[i] < '0' || s[i] > '9') throw ParseError("Vertex::parse: '" + s + "'");
                tag = tag * 10 + unsigned(s[i] - '0');
            }
            return symbolic(tag);
        }
        u128 v = parse_u128(s);
        if (v > ~u64(0)) throw Overflow("Vertex::parse: prime exceeds 64 bits");
        return prime(static_cast<u64>(v));
    }

private:
    Vertex(u64 p, unsigned tag) : prime_(p), tag_(tag) {}
    u64 prime_;
    unsigned tag_;
};

using Edge = std::pair<Vertex, Vertex>; // stored with first < second

// An abstract unlabelled graph used as a search pattern: vertex indices
// 0..n-1 plus an edge list.
struct Pattern {
    unsigned n = 0;
    std::vector<std::pair<unsigned, unsigned>> edges;

    static Pattern clique(unsigned k) {
        Pattern p{k, {}};
        for (unsigned i = 0; i < k; ++i)
            for (unsigned j = i + 1; j < k; ++j) p.edges.push_back({i, j});
        return p;
    }
    // A triangle and an edge, vertex-disjoint.
    static Pattern triangle_plus_edge() {
        return Pattern{5, {{0, 1}, {0, 2}, {1, 2}, {3, 4}}};
    }
};

class PrimeGraph {
public:
    PrimeGraph() = default;

    static PrimeGraph from_edges(const std::vector<u64>& primes,
                                 const std::vector<std::pair<u64, u64>>& edges) {
        PrimeGraph g;
        for (u64 p : primes) g = g.with_vertex(Vertex::prime(p));
        for (auto [a, b] : edges) g = g.with_edge(Vertex::prime(a), Vertex::prime(b));
        return g;
    }

    const std::vector<Vertex>& vertices() const { return verts_; }
    unsigned vertex_count() const { return static_cast<unsigned>(verts_.size()); }

    bool has_vertex(const Vertex& v) const { return index_of(v).has_value(); }

    bool has_edge(const Vertex& a, const Vertex& b) const {
        auto i = index_of(a), j = index_of(b);
        if (!i || !j) return false;
        return (adj_[*i] >> *j) & 1u;
    }

    unsigned degree(const Vertex& v) const {
        auto i = index_of(v);
        if (!i) throw VertexNotFound("degree: " + v.label());
        return std::popcount(adj_[*i]);
    }

    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        for (unsigned i = 0; i < verts_.size(); ++i)
            for (unsigned j = i + 1; j < verts_.size(); ++j)
                if ((adj_[i] >> j) & 1u) out.push_back({verts_[i], verts_[j]});
        return out;
    }
    unsigned edge_count() const {
        unsigned c = 0;
        for (unsigned i = 0; i < verts_.size(); ++i) c += std::popcount(adj_[i]);
        return c / 2;
    }

    PrimeGraph with_vertex(const Vertex& v) const {
        if (has_vertex(v)) return *this;
        PrimeGraph g;
        g.verts_ = verts_;
        g.verts_.push_back(v);
        std::sort(g.verts_.begin(), g.verts_.end());
        g.adj_.assign(g.verts_.size(), 0);
        for (unsigned i = 0; i < verts_.size(); ++i)
            for (unsigned j = i + 1; j < verts_.size(); ++j)
                if ((adj_[i] >> j) & 1u)
                    g.set_edge(*g.index_of(verts_[i]), *g.index_of(verts_[j]));
        return g;
    }

    PrimeGraph with_edge(const Vertex& a, const Vertex& b) const {
        if (a == b) throw SelfLoop("with_edge: " + a.label());
        PrimeGraph g = with_vertex(a).with_vertex(b);
        g.set_edge(*g.index_of(a), *g.index_of(b));
        return g;
    }

    friend PrimeGraph graph_union(const PrimeGraph& a, const PrimeGraph& b) {
        PrimeGraph g = a;
        for (const Vertex& v : b.verts_) g = g.with_vertex(v);
        for (const Edge& e : b.edges()) g = g.with_edge(e.first, e.second);
        return g;
    }

    friend bool operator==(const PrimeGraph& a, const PrimeGraph& b) {
        return a.verts_ == b.verts_ && a.adj_ == b.adj_;
    }

    // --- analytics -------------------------------------------------------

    // Partition into connected components.  The component containing the
    // vertex 2 (when present) is listed first; the rest follow in ascending
    // order of least vertex.
    std::vector<std::vector<Vertex>> components() const {
        std::vector<int> comp(verts_.size(), -1);
        int n_comp = 0;
        for (unsigned i = 0; i < verts_.size(); ++i) {
            if (comp[i] != -1) continue;
            std::vector<unsigned> stack{i};
            comp[i] = n_comp;
            while (!stack.empty()) {
                unsigned v = stack.back();
                stack.pop_back();
                for (unsigned j = 0; j < verts_.size(); ++j) {
                    if (((adj_[v] >> j) & 1u) && comp[j] == -1) {
                        comp[j] = n_comp;
                        stack.push_back(j);
                    }
                }
            }
            ++n_comp;
        }
        std::vector<std::vector<Vertex>> parts(n_comp);
        for (unsigned i = 0; i < verts_.size(); ++i) parts[comp[i]].push_back(verts_[i]);
        for (auto& p : parts) std::sort(p.begin(), p.end());
        std::sort(parts.begin(), parts.end(), [](const auto& a, const auto& b) {
            Vertex two = Vertex::prime(2);
            bool a2 = std::find(a.begin(), a.end(), two) != a.end();
            bool b2 = std::find(b.begin(), b.end(), two) != b.end();
            if (a2 != b2) return a2;
            return a.front() < b.front();
        });
        return parts;
    }
    unsigned component_count() const { return static_cast<unsigned>(components().size()); }

    unsigned independence_number() const { return max_independent(full_mask()); }

    unsigned t_at(const Vertex& v) const {
        auto i = index_of(v);
        if (!i) throw VertexNotFound("t_at: " + v.label());
        // Largest coclique containing v: drop v and its neighbours, recurse.
        std::uint32_t rest = full_mask() & ~adj_[*i] & ~(1u << *i);
        return 1 + max_independent(rest);
    }

    unsigned clique_number() const {
        // Cliques are cocliques of the complement.
        return complement().independence_number();
    }
    bool has_clique_of_size(unsigned k) const { return clique_number() >= k; }

    std::vector<std::vector<Vertex>> all_maximal_cliques() const {
        std::vector<std::uint32_t> found;
        bron_kerbosch(0, full_mask(), 0, found);
        std::vector<std::vector<Vertex>> out;
        for (auto m : found) {
            std::vector<Vertex> c;
            for (unsigned i = 0; i < verts_.size(); ++i)
                if ((m >> i) & 1u) c.push_back(verts_[i]);
            out.push_back(c);
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    std::vector<Vertex> isolated_vertices() const {
        std::vector<Vertex> out;
        for (unsigned i = 0; i < verts_.size(); ++i)
            if (adj_[i] == 0) out.push_back(verts_[i]);
        return out;
    }

    std::vector<unsigned> degree_sequence() const {
        std::vector<unsigned> d;
        for (unsigned i = 0; i < verts_.size(); ++i) d.push_back(std::popcount(adj_[i]));
        std::sort(d.begin(), d.end());
        return d;
    }

    // Adjacency mask of vertex index i (used by the recogniser's searches).
    std::uint32_t adjacency_mask(unsigned i) const { return adj_[i]; }
    std::optional<unsigned> index_of(const Vertex& v) const {
        auto it = std::lower_bound(verts_.begin(), verts_.end(), v);
        if (it == verts_.end() || *it != v) return std::nullopt;
        return static_cast<unsigned>(it - verts_.begin());
    }

private:
    std::vector<Vertex> verts_; // sorted
    std::vector<std::uint32_t> adj_;

    void set_edge(unsigned i, unsigned j) {
        adj_[i] |= 1u << j;
        adj_[j] |= 1u << i;
    }
    std::uint32_t full_mask() const {
        return verts_.empty() ? 0 : (verts_.size() == 32 ? ~0u : (1u << verts_.size()) - 1);
    }

    PrimeGraph complement() const {
        PrimeGraph g;
        g.verts_ = verts_;
        g.adj_.assign(verts_.size(), 0);
        for (unsigned i = 0; i < verts_.size(); ++i)
            for (unsigned j = i + 1; j < verts_.size(); ++j)
                if (!((adj_[i] >> j) & 1u)) g.set_edge(i, j);
        return g;
    }

    // Exact maximum independent set over the vertex subset `mask`.
    unsigned max_independent(std::uint32_t mask) const {
        if (mask == 0) return 0;
        // Pick the lowest remaining vertex v; either exclude it (only useful
        // if some neighbour is in play) or include it and drop N(v).
        unsigned v = std::countr_zero(mask);
        std::uint32_t without = mask & ~(1u << v);
        unsigned incl = 1 + max_independent(without & ~adj_[v]);
        if ((adj_[v] & without) == 0) return incl; // v has no live neighbours
        unsigned excl = max_independent(without);
        return std::max(incl, excl);
    }

    void bron_kerbosch(std::uint32_t r, std::uint32_t p, std::uint32_t x,
                       std::vector<std::uint32_t>& out) const {
        if (p == 0 && x == 0) {
            out.push_back(r);
            return;
        }
        std::uint32_t px = p | x;
        unsigned pivot = std::countr_zero(px);
        for (std::uint32_t cand = p & ~adj_[pivot]; cand != 0; cand &= cand - 1) {
            unsigned v = std::countr_zero(cand);
            bron_kerbosch(r | (1u << v), p & adj_[v], x & adj_[v], out);
            p &= ~(1u << v);
            x |= 1u << v;
        }
    }
};

struct GraphInvariants {
    unsigned vertex_count = 0;
    unsigned edge_count = 0;
    unsigned component_count = 0;     // s(G)
    unsigned independence_number = 0; // t(G)
    unsigned t_at_two = 0;            // t(2,G); 0 when 2 is not a vertex
    unsigned clique_number = 0;
    unsigned isolated_vertex_count = 0;
    std::vector<unsigned> degree_sequence;
    friend bool operator==(const GraphInvariants&, const GraphInvariants&) = default;
};

inline GraphInvariants invariants(const PrimeGraph& g) {
    GraphInvariants inv;
    inv.vertex_count = g.vertex_count();
    inv.edge_count = g.edge_count();
    inv.component_count = g.component_count();
    inv.independence_number = g.independence_number();
    Vertex two = Vertex::prime(2);
    inv.t_at_two = g.has_vertex(two) ? g.t_at(two) : 0;
    inv.clique_number = g.vertex_count() == 0 ? 0 : g.clique_number();
    inv.isolated_vertex_count = static_cast<unsigned>(g.isolated_vertices().size());
    inv.degree_sequence = g.degree_sequence();
    return inv;
}

// --- unlabelled isomorphism ---------------------------------------------

namespace detail {

// Iterated neighbourhood-degree signatures: a cheap partition refinement that
// prunes the backtracking search.
inline std::vector<u64> refine_signatures(const PrimeGraph& g) {
    unsigned n = g.vertex_count();
    std::vector<u64> sig(n);
    for (unsigned i = 0; i < n; ++i) sig[i] = std::popcount(g.adjacency_mask(i));
    for (unsigned round = 0; round < n; ++round) {
        std::vector<std::pair<u64, std::vector<u64>>> keys(n);
        for (unsigned i = 0; i < n; ++i) {
            keys[i].first = sig[i];
            for (unsigned j = 0; j < n; ++j)
                if ((g.adjacency_mask(i) >> j) & 1u) keys[i].second.push_back(sig[j]);
            std::sort(keys[i].second.begin(), keys[i].second.end());
        }
        std::map<std::pair<u64, std::vector<u64>>, u64> renumber;
        for (unsigned i = 0; i < n; ++i) renumber.emplace(keys[i], 0);
        u64 next = 0;
        for (auto& kv : renumber) kv.second = next++;
        std::vector<u64> fresh(n);
        for (unsigned i = 0; i < n; ++i) fresh[i] = renumber[keys[i]];
        if (fresh == sig) break;
        sig = fresh;
    }
    return sig;
}

inline bool iso_backtrack(const PrimeGraph& a, const PrimeGraph& b,
                          const std::vector<u64>& sa, const std::vector<u64>& sb,
                          std::vector<int>& map, std::uint32_t used, unsigned pos) {
    unsigned n = a.vertex_count();
    if (pos == n) return true;
    for (unsigned j = 0; j < n; ++j) {
        if ((used >> j) & 1u) continue;
        if (sa[pos] != sb[j]) continue;
        bool ok = true;
        for (unsigned i = 0; i < pos && ok; ++i) {
            bool ea = (a.adjacency_mask(pos) >> i) & 1u;
            bool eb = (b.adjacency_mask(j) >> map[i]) & 1u;
            if (ea != eb) ok = false;
        }
        if (!ok) continue;
        map[pos] = static_cast<int>(j);
        if (iso_backtrack(a, b, sa, sb, map, used | (1u << j), pos + 1)) return true;
    }
    return false;
}

} // namespace detail

// Unlabelled isomorphism test; returns a vertex bijection when one exists.
inline std::optional<std::vector<std::pair<Vertex, Vertex>>>
is_isomorphic(const PrimeGraph& a, const PrimeGraph& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count())
        return std::nullopt;
    auto sa = detail::refine_signatures(a);
    auto sb = detail::refine_signatures(b);
    auto multiset = [](std::vector<u64> v) {
        std::sort(v.begin(), v.end());
        return v;
    };
    if (multiset(sa) != multiset(sb)) return std::nullopt;
    std::vector<int> map(a.vertex_count(), -1);
    if (!detail::iso_backtrack(a, b, sa, sb, map, 0, 0)) return std::nullopt;
    std::vector<std::pair<Vertex, Vertex>> out;
    for (unsigned i = 0; i < a.vertex_count(); ++i)
        out.push_back({a.vertices()[i], b.vertices()[static_cast<unsigned>(map[i])]});
    return out;
}

// Injective embedding of `p` into `g` preserving edges (and non-edges when
// induced).  Returns the image vertices indexed by pattern vertex.
inline std::optional<std::vector<Vertex>> contains_pattern(const PrimeGraph& g,
                                                           const Pattern& p,
                                                           bool induced = false) {
    unsigned n = g.vertex_count();
    if (p.n > n) return std::nullopt;
    std::vector<std::uint32_t> padj(p.n, 0);
    for (auto [i, j] : p.edges) {
        if (i == j || i >= p.n || j >= p.n) throw DomainError("contains_pattern: bad pattern");
        padj[i] |= 1u << j;
        padj[j] |= 1u << i;
    }
    std::vector<int> map(p.n, -1);
    std::uint32_t used = 0;
    auto rec = [&](auto&& self, unsigned pos) -> bool {
        if (pos == p.n) return true;
        for (unsigned j = 0; j < n; ++j) {
            if ((used >> j) & 1u) continue;
            bool ok = true;
            for (unsigned i = 0; i < pos && ok; ++i) {
                bool pe = (padj[pos] >> i) & 1u;
                bool ge = (g.adjacency_mask(j) >> map[i]) & 1u;
                if (pe && !ge) ok = false;
                if (induced && !pe && ge) ok = false;
            }
            if (!ok) continue;
            map[pos] = static_cast<int>(j);
            used |= 1u << j;
            if (self(self, pos + 1)) return true;
            used &= ~(1u << j);
        }
        return false;
    };
    if (!rec(rec, 0)) return std::nullopt;
    std::vector<Vertex> out;
    for (unsigned i = 0; i < p.n; ++i) out.push_back(g.vertices()[static_cast<unsigned>(map[i])]);
    return out;
}

// Convert a concrete graph into an abstract pattern (vertex identities dropped).
inline Pattern pattern_of(const PrimeGraph& g) {
    Pattern p{g.vertex_count(), {}};
    for (unsigned i = 0; i < g.vertex_count(); ++i)
        for (unsigned j = i + 1; j < g.vertex_count(); ++j)
            if ((g.adjacency_mask(i) >> j) & 1u) p.edges.push_back({i, j});
    return p;
}

} // namespace gk

#endif // GK_GRAPH_HPP

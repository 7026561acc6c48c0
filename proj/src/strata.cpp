#include <kwb/strata.hpp>

#include <kwb/combinat.hpp>
#include <kwb/hodge.hpp>
#include <kwb/parallel.hpp>

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace kwb {

unsigned DualGraph::add_vertex(unsigned genus) {
    vertices.push_back(Vertex{genus, {}});
    return static_cast<unsigned>(vertices.size() - 1);
}

void DualGraph::add_edge(unsigned a, unsigned b) { edges.emplace_back(a, b); }

namespace {

void require(bool cond, const char* msg) {
    if (!cond) throw std::logic_error(msg);
}

// Union-find over vertex indices.
struct Components {
    std::vector<unsigned> parent;
    explicit Components(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), 0u);
    }
    unsigned find(unsigned x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(unsigned a, unsigned b) { parent[find(a)] = find(b); }
    unsigned count() {
        unsigned c = 0;
        for (unsigned i = 0; i < parent.size(); ++i)
            if (find(i) == i) ++c;
        return c;
    }
};

unsigned component_count(const DualGraph& g) {
    Components uf(g.vertices.size());
    for (auto& e : g.edges) uf.unite(e.first, e.second);
    return uf.count();
}

}  // namespace

unsigned DualGraph::total_genus() const {
    unsigned sum = 0;
    for (auto& v : vertices) sum += v.genus;
    unsigned cycle_rank = static_cast<unsigned>(edges.size() + component_count(*this)) -
                          static_cast<unsigned>(vertices.size());
    return sum + cycle_rank;
}

unsigned DualGraph::num_markings() const {
    unsigned n = 0;
    for (auto& v : vertices) n += static_cast<unsigned>(v.markings.size());
    return n;
}

unsigned DualGraph::valence(unsigned v) const {
    unsigned val = static_cast<unsigned>(vertices[v].markings.size());
    for (auto& e : edges) {
        if (e.first == v) ++val;
        if (e.second == v) ++val;
    }
    return val;
}

long DualGraph::socle_dim(unsigned v) const {
    long val = valence(v);
    long g = vertices[v].genus;
    return g == 0 ? val - 3 : 2 * g - 3 + val;
}

Partition DualGraph::socle_profile() const {
    Partition prof;
    for (unsigned v = 0; v < vertices.size(); ++v) {
        long s = socle_dim(v);
        if (s > 0) prof.push_back(static_cast<unsigned>(s));
    }
    std::sort(prof.begin(), prof.end(), std::greater<unsigned>());
    return prof;
}

void DualGraph::validate(unsigned expected_genus, unsigned expected_markings) const {
    require(!vertices.empty(), "dual graph: no vertices");
    for (auto& e : edges) {
        require(e.first < vertices.size() && e.second < vertices.size(),
                "dual graph: edge endpoint out of range");
        require(e.first != e.second, "dual graph: self loop is not compact type");
    }
    require(component_count(*this) == 1, "dual graph: disconnected");
    require(edges.size() + 1 == vertices.size(), "dual graph: not a tree");
    require(total_genus() == expected_genus, "dual graph: genus mismatch");
    std::vector<unsigned> labels;
    for (auto& v : vertices)
        labels.insert(labels.end(), v.markings.begin(), v.markings.end());
    std::sort(labels.begin(), labels.end());
    require(labels.size() == expected_markings, "dual graph: marking count mismatch");
    for (unsigned i = 0; i < labels.size(); ++i)
        require(labels[i] == i + 1, "dual graph: marking labels not 1..n");
    for (unsigned v = 0; v < vertices.size(); ++v)
        require(2l * vertices[v].genus - 2 + valence(v) > 0, "dual graph: unstable vertex");
}

namespace {

void check_partition(const Partition& p) {
    for (std::size_t i = 0; i < p.size(); ++i) {
        require(p[i] >= 1, "partition parts must be positive");
        if (i) require(p[i - 1] >= p[i], "partition not weakly decreasing");
    }
}

void add_tails(DualGraph& g, unsigned v, unsigned count) {
    for (unsigned i = 0; i < count; ++i) {
        unsigned t = g.add_vertex(1);
        g.add_edge(v, t);
    }
}

// Comb on an odd number 2r-1 of even parts: spine s_1..s_r carrying the r
// largest halved parts, teeth on s_1..s_{r-1} carrying the rest plus a
// genus unit each.  One-marking shape: s_r absorbs a genus unit.
// Two-marking shape: s_r instead carries markings 1 and 2.  Returns s_1.
unsigned add_comb(DualGraph& g, const std::vector<unsigned>& evens, bool two_marks) {
    std::size_t b = evens.size();
    require(b % 2 == 1, "comb needs an odd number of parts");
    for (unsigned e : evens) require(e >= 2 && e % 2 == 0, "comb parts must be even");
    std::size_t r = (b + 1) / 2;
    std::vector<unsigned> spine(r);
    for (std::size_t j = 0; j < r; ++j) {
        unsigned genus = evens[j] / 2;
        if (j + 1 == r && !two_marks) ++genus;
        spine[j] = g.add_vertex(genus);
        if (j > 0) g.add_edge(spine[j - 1], spine[j]);
    }
    for (std::size_t j = 0; j + 1 < r; ++j) {
        unsigned tooth = g.add_vertex(evens[r + j] / 2 + 1);
        g.add_edge(spine[j], tooth);
    }
    if (two_marks) g.vertices[spine[r - 1]].markings = {1, 2};
    return spine[0];
}

// Chain of one vertex of genus (part+1)/2 per odd part; returns {first, last}.
std::pair<unsigned, unsigned> add_odd_chain(DualGraph& g, const std::vector<unsigned>& odds) {
    unsigned first = 0, last = 0;
    for (std::size_t i = 0; i < odds.size(); ++i) {
        require(odds[i] % 2 == 1, "chain parts must be odd");
        unsigned v = g.add_vertex((odds[i] + 1) / 2);
        if (i == 0)
            first = v;
        else
            g.add_edge(last, v);
        last = v;
    }
    return {first, last};
}

void split_parity(const Partition& p, std::vector<unsigned>& odds, std::vector<unsigned>& evens) {
    for (unsigned part : p) (part % 2 ? odds : evens).push_back(part);
}

}  // namespace

DualGraph build_stratum_S(unsigned g, const Partition& p) {
    check_partition(p);
    require(g >= 1 && partition_weight(p) == g - 1, "S stratum needs |p| = g - 1");
    DualGraph G;
    std::size_t l = p.size();
    std::vector<unsigned> chain(l + 1);
    for (std::size_t i = 0; i <= l; ++i) {
        chain[i] = G.add_vertex(1);
        if (i > 0) G.add_edge(chain[i - 1], chain[i]);
    }
    G.vertices[chain[0]].markings = {1};
    for (std::size_t i = 0; i < l; ++i) add_tails(G, chain[i], p[i] - 1);
    G.validate(g, 1);
    require(G.socle_profile() == p, "S stratum: socle profile mismatch");
    return G;
}

DualGraph build_stratum_T(unsigned g, const Partition& p) {
    check_partition(p);
    require(g >= 1 && partition_weight(p) == g, "T stratum needs |p| = g");
    DualGraph G;
    std::size_t l = p.size();
    std::vector<unsigned> chain(l);
    for (std::size_t i = 0; i < l; ++i) {
        chain[i] = G.add_vertex(1);
        if (i > 0) G.add_edge(chain[i - 1], chain[i]);
    }
    G.vertices[chain[0]].markings.push_back(1);
    G.vertices[chain[l - 1]].markings.push_back(2);
    for (std::size_t i = 0; i < l; ++i) add_tails(G, chain[i], p[i] - 1);
    G.validate(g, 2);
    require(G.socle_profile() == p, "T stratum: socle profile mismatch");
    return G;
}

DualGraph build_stratum_U(unsigned g, const Partition& p) {
    check_partition(p);
    require(g >= 2 && partition_weight(p) == g - 1 && !p.empty() && p[0] >= 2,
            "U stratum needs |p| = g - 1 with leading part >= 2");
    DualGraph G;
    unsigned prev = G.add_vertex(2);
    add_tails(G, prev, p[0] - 2);
    for (std::size_t i = 1; i < p.size(); ++i) {
        unsigned e = G.add_vertex(1);
        G.add_edge(prev, e);
        add_tails(G, e, p[i] - 1);
        prev = e;
    }
    unsigned end = G.add_vertex(1);
    G.add_edge(prev, end);
    G.validate(g, 0);
    require(G.socle_profile() == p, "U stratum: socle profile mismatch");
    return G;
}

DualGraph build_stratum_U_prime(unsigned g, const Partition& p) {
    check_partition(p);
    require(g >= 2 && partition_weight(p) == g - 2, "U' stratum needs |p| = g - 2");
    DualGraph G;
    unsigned prev = G.add_vertex(1);
    for (std::size_t i = 0; i < p.size(); ++i) {
        unsigned e = G.add_vertex(1);
        G.add_edge(prev, e);
        add_tails(G, e, p[i] - 1);
        prev = e;
    }
    unsigned end = G.add_vertex(1);
    G.add_edge(prev, end);
    G.validate(g, 0);
    require(G.socle_profile() == p, "U' stratum: socle profile mismatch");
    return G;
}

DualGraph build_stratum_V(unsigned n, const Partition& p) {
    check_partition(p);
    unsigned d = partition_weight(p);
    require(n >= 3 && d + 3 <= n, "V stratum needs degree <= n - 3");
    unsigned L = n - 2 - d;
    require(p.size() <= L, "V stratum: partition too long");
    DualGraph G;
    unsigned label = 1;
    if (L == 1) {
        unsigned v = G.add_vertex(0);
        for (unsigned i = 0; i < n; ++i) G.vertices[v].markings.push_back(label++);
    } else {
        std::vector<unsigned> parts(p);
        parts.resize(L, 0u);
        unsigned prev = 0;
        for (unsigned i = 0; i < L; ++i) {
            unsigned v = G.add_vertex(0);
            if (i > 0) G.add_edge(prev, v);
            unsigned count = parts[i] + 1 + (i == 0) + (i + 1 == L);
            for (unsigned c = 0; c < count; ++c) G.vertices[v].markings.push_back(label++);
            prev = v;
        }
    }
    G.validate(0, n);
    require(G.socle_profile() == p, "V stratum: socle profile mismatch");
    return G;
}

PointedStratum build_stratum_W(unsigned g, const Partition& p) {
    check_partition(p);
    unsigned d = partition_weight(p);
    unsigned l = static_cast<unsigned>(p.size());
    require(g >= 1 && d + l <= 2 * g - 1, "W stratum needs |p| + len(p) <= 2g - 1");
    std::vector<unsigned> odds, evens;
    split_parity(p, odds, evens);

    DualGraph G;
    unsigned marked = 0;
    unsigned expected;
    if (evens.size() % 2 == 1) {
        // 2 g(Gamma) - 1 = d + len, d + len odd
        unsigned s0 = add_comb(G, evens, false);
        if (odds.empty()) {
            marked = s0;
        } else {
            auto [first, last] = add_odd_chain(G, odds);
            G.add_edge(s0, first);
            marked = last;
        }
        expected = (d + l + 1) / 2;
    } else if (!evens.empty()) {
        // 2 g(Gamma) - 1 = d + len + 1, d + len even
        std::vector<unsigned> comb_evens(evens.begin(), evens.end() - 1);
        unsigned s0 = add_comb(G, comb_evens, false);
        unsigned C = G.add_vertex(evens.back() / 2);
        unsigned E = G.add_vertex(1);
        if (odds.empty()) {
            G.add_edge(s0, C);
        } else {
            auto [first, last] = add_odd_chain(G, odds);
            G.add_edge(s0, first);
            G.add_edge(last, C);
        }
        G.add_edge(C, E);
        marked = C;
        expected = (d + l + 2) / 2;
    } else {
        // all parts odd, d + len even; trailing elliptic end
        unsigned E = G.add_vertex(1);
        if (odds.empty()) {
            marked = E;
        } else {
            auto [first, last] = add_odd_chain(G, odds);
            G.add_edge(last, E);
            marked = first;
        }
        expected = (d + l + 2) / 2;
    }
    G.vertices[marked].markings = {1};
    require(G.total_genus() == expected, "W stratum: genus equation failed");
    require(G.socle_profile() == p, "W stratum: socle profile mismatch");
    require(G.total_genus() <= g, "W stratum: partition outside index range");
    unsigned delta = g - G.total_genus();
    G.vertices[marked].genus += delta;
    G.validate(g, 1);
    return {std::move(G), 2 * delta};
}

PointedStratum build_stratum_W_tilde(unsigned g, const Partition& p) {
    check_partition(p);
    unsigned d = partition_weight(p);
    unsigned l = static_cast<unsigned>(p.size());
    require(d >= 1, "W~ stratum undefined in degree 0");
    require(d + l <= 2 * g, "W~ stratum needs |p| + len(p) <= 2g");
    std::vector<unsigned> odds, evens;
    split_parity(p, odds, evens);

    DualGraph G;
    unsigned expected;
    if (!evens.empty() && evens.size() % 2 == 0) {
        // 2 g(Gamma) = d + len, d + len even
        std::vector<unsigned> comb_evens(evens.begin(), evens.end() - 1);
        unsigned s0 = add_comb(G, comb_evens, true);
        unsigned C = G.add_vertex(evens.back() / 2 + 1);
        if (odds.empty()) {
            G.add_edge(s0, C);
        } else {
            auto [first, last] = add_odd_chain(G, odds);
            G.add_edge(s0, first);
            G.add_edge(last, C);
        }
        expected = (d + l) / 2;
    } else if (evens.empty()) {
        // all parts odd, d + len even
        auto [first, last] = add_odd_chain(G, odds);
        G.vertices[first].markings.push_back(1);
        G.vertices[last].markings.push_back(2);
        expected = (d + l) / 2;
    } else {
        // 2 g(Gamma) = d + len + 1, d + len odd
        unsigned s0 = add_comb(G, evens, true);
        unsigned E = G.add_vertex(1);
        if (odds.empty()) {
            G.add_edge(s0, E);
        } else {
            auto [first, last] = add_odd_chain(G, odds);
            G.add_edge(s0, first);
            G.add_edge(last, E);
        }
        expected = (d + l + 1) / 2;
    }
    require(G.total_genus() == expected, "W~ stratum: genus equation failed");
    require(G.socle_profile() == p, "W~ stratum: socle profile mismatch");
    require(G.total_genus() <= g, "W~ stratum: partition outside index range");
    unsigned delta = g - G.total_genus();
    unsigned marked = 0;
    for (unsigned v = 0; v < G.vertices.size(); ++v)
        for (unsigned m : G.vertices[v].markings)
            if (m == 1) marked = v;
    G.vertices[marked].genus += delta;
    G.validate(g, 2);
    return {std::move(G), 2 * delta};
}

void shed_genus_for_markings(DualGraph& g, unsigned amount) {
    unsigned next = g.num_markings() + 1;
    unsigned remaining = amount;
    for (auto& v : g.vertices) {
        if (remaining == 0) break;
        unsigned take = std::min(v.genus, remaining);
        v.genus -= take;
        for (unsigned i = 0; i < 2 * take; ++i) v.markings.push_back(next++);
        remaining -= take;
    }
    require(remaining == 0, "shed: not enough genus");
}

namespace {

// Ordered assignment of the parts of p to vertices.  Parts are grouped by
// value; a group of c equal parts split as (t_1,...,t_V) across vertices
// accounts for multinomial(c; t) of the orderings.  Capacities prune the
// walk; at a full assignment every vertex must be exactly filled.
struct PairingWalk {
    const DualGraph& graph;
    std::vector<std::vector<unsigned>> psi;
    std::vector<long> cap;
    std::vector<std::pair<unsigned, unsigned>> groups;  // (value, count)
    std::vector<Partition> assigned;

    Rational next_group(std::size_t gi) {
        if (gi == groups.size()) {
            Rational prod(1);
            for (std::size_t v = 0; v < cap.size(); ++v) {
                if (cap[v] != 0) return Rational(0);
                prod = prod * socle_integral(graph.vertices[v].genus,
                                             graph.valence(static_cast<unsigned>(v)), psi[v],
                                             assigned[v]);
                if (prod.is_zero()) return prod;
            }
            return prod;
        }
        return distribute(gi, 0, groups[gi].second, Integer(1));
    }

    Rational distribute(std::size_t gi, std::size_t v, unsigned left, const Integer& ways) {
        if (v == cap.size()) {
            if (left != 0) return Rational(0);
            return next_group(gi + 1) * Rational(ways);
        }
        unsigned value = groups[gi].first;
        unsigned fit = static_cast<unsigned>(cap[v] / value);
        unsigned max_take = std::min(left, fit);
        Rational sum(0);
        for (unsigned t = 0; t <= max_take; ++t) {
            if (t > 0) {
                cap[v] -= value;
                assigned[v].push_back(value);
            }
            sum += distribute(gi, v + 1, left - t, ways * binomial(left, t));
        }
        for (unsigned t = 0; t < max_take; ++t) {
            cap[v] += value;
            assigned[v].pop_back();
        }
        return sum;
    }
};

}  // namespace

Rational stratum_pairing(const Partition& p, const DualGraph& graph,
                         const std::map<unsigned, unsigned>& psi_at_marking) {
    std::size_t nv = graph.vertices.size();
    PairingWalk walk{graph, {}, {}, {}, {}};
    walk.psi.resize(nv);
    walk.cap.resize(nv);
    walk.assigned.resize(nv);
    long total_cap = 0;
    for (std::size_t v = 0; v < nv; ++v) {
        unsigned val = graph.valence(static_cast<unsigned>(v));
        walk.psi[v].assign(val, 0u);
        std::size_t slot = 0;
        long used = 0;
        for (unsigned m : graph.vertices[v].markings) {
            auto it = psi_at_marking.find(m);
            if (it != psi_at_marking.end()) {
                walk.psi[v][slot] = it->second;
                used += it->second;
            }
            ++slot;
        }
        walk.cap[v] = graph.socle_dim(static_cast<unsigned>(v)) - used;
        if (walk.cap[v] < 0) return Rational(0);
        total_cap += walk.cap[v];
    }
    if (total_cap != static_cast<long>(partition_weight(p))) return Rational(0);
    for (unsigned part : p) {
        if (!walk.groups.empty() && walk.groups.back().first == part)
            ++walk.groups.back().second;
        else
            walk.groups.emplace_back(part, 1u);
    }
    return walk.next_group(0);
}

std::vector<Partition> pairing_index_set(PairingFamily fam, unsigned g, unsigned n, unsigned d) {
    switch (fam) {
        case PairingFamily::Mu:
            require(g >= 1, "Mu family needs g >= 1");
            return partitions(g - 1);
        case PairingFamily::Nu:
            require(g >= 1, "Nu family needs g >= 1");
            return partitions(g);
        case PairingFamily::Omega: {
            require(g >= 2, "Omega family needs g >= 2");
            std::vector<Partition> idx;
            for (auto& p : partitions(g - 1))
                if (p.size() + 1 != g) idx.push_back(p);  // drop the all-ones partition
            return idx;
        }
        case PairingFamily::OmegaPrime:
            require(g >= 2, "Omega' family needs g >= 2");
            return partitions(g - 2);
        case PairingFamily::Genus0V:
            require(n >= 3, "V family needs n >= 3");
            if (d + 3 > n) return {};
            return partitions(d, n - 2 - d);
        case PairingFamily::W:
            require(g >= 1, "W family needs g >= 1");
            if (d + 1 > 2 * g) return {};
            return partitions(d, 2 * g - 1 - d);
        case PairingFamily::WTilde:
            require(g >= 1 && d >= 1, "W~ family needs g >= 1 and d >= 1");
            if (d > 2 * g) return {};
            return partitions(d, 2 * g - d);
    }
    return {};
}

MatrixQ pairing_matrix(PairingFamily fam, unsigned g, unsigned n, unsigned d) {
    std::vector<Partition> idx = pairing_index_set(fam, g, n, d);
    std::vector<DualGraph> graphs;
    graphs.reserve(idx.size());
    std::vector<std::map<unsigned, unsigned>> psi(idx.size());
    for (std::size_t j = 0; j < idx.size(); ++j) {
        switch (fam) {
            case PairingFamily::Mu:
                graphs.push_back(build_stratum_S(g, idx[j]));
                break;
            case PairingFamily::Nu:
                graphs.push_back(build_stratum_T(g, idx[j]));
                break;
            case PairingFamily::Omega:
                graphs.push_back(build_stratum_U(g, idx[j]));
                break;
            case PairingFamily::OmegaPrime:
                graphs.push_back(build_stratum_U_prime(g, idx[j]));
                break;
            case PairingFamily::Genus0V:
                graphs.push_back(build_stratum_V(n, idx[j]));
                break;
            case PairingFamily::W: {
                PointedStratum ps = build_stratum_W(g, idx[j]);
                if (ps.psi1_power) psi[j][1] = ps.psi1_power;
                graphs.push_back(std::move(ps.graph));
                break;
            }
            case PairingFamily::WTilde: {
                PointedStratum ps = build_stratum_W_tilde(g, idx[j]);
                if (ps.psi1_power) psi[j][1] = ps.psi1_power;
                graphs.push_back(std::move(ps.graph));
                break;
            }
        }
    }
    MatrixQ m(idx.size(), idx.size());
    m.row_labels = idx;
    m.col_labels = idx;
    parallel_for(idx.size() * idx.size(), [&](std::size_t cell) {
        std::size_t i = cell / idx.size(), j = cell % idx.size();
        m.at(i, j) = stratum_pairing(idx[i], graphs[j], psi[j]);
    });
    return m;
}

MatrixQ genus0_full_pairing(unsigned n, unsigned d) {
    require(n >= 3, "genus0_full_pairing needs n >= 3");
    std::vector<Partition> rows = partitions(d);
    std::vector<Partition> cols = pairing_index_set(PairingFamily::Genus0V, 0, n, d);
    std::vector<DualGraph> graphs;
    graphs.reserve(cols.size());
    for (auto& q : cols) graphs.push_back(build_stratum_V(n, q));
    MatrixQ m(rows.size(), cols.size());
    m.row_labels = rows;
    m.col_labels = cols;
    parallel_for(rows.size() * cols.size(), [&](std::size_t cell) {
        std::size_t i = cell / cols.size(), j = cell % cols.size();
        m.at(i, j) = stratum_pairing(rows[i], graphs[j]);
    });
    return m;
}

Partition genus0_q_profile(const DualGraph& graph) {
    for (auto& v : graph.vertices)
        require(v.genus == 0, "q profile is defined for genus-0 trees");
    return graph.socle_profile();
}

}  // namespace kwb

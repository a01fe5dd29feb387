#include "klm/graph.hpp"

#include <algorithm>
#include <queue>
#include <sstream>
#include <unordered_set>

namespace klm {

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(static_cast<size_t>(n)) {
        for (int i = 0; i < n; ++i) parent[static_cast<size_t>(i)] = i;
    }
    int find(int x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    }
    // returns false when already joined
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[static_cast<size_t>(a)] = b;
        return true;
    }
};

} // namespace

void check_graph(const Graph& g) {
    if (g.vertices < 0) throw ValidationError("negative vertex count");
    for (auto [a, b] : g.edges)
        if (a < 0 || b < 0 || a >= g.vertices || b >= g.vertices)
            throw ValidationError("edge endpoint out of range");
}

bool is_connected(const Graph& g) {
    check_graph(g);
    if (g.vertices <= 1) return true;
    UnionFind uf(g.vertices);
    int components = g.vertices;
    for (auto [a, b] : g.edges)
        if (uf.unite(a, b)) --components;
    return components == 1;
}

Graph graph_delete(const Graph& g, int e) {
    check_graph(g);
    if (e < 0 || e >= g.edge_count())
        throw ValidationError("edge id out of range: " + std::to_string(e));
    Graph r = g;
    r.edges.erase(r.edges.begin() + e);
    return r;
}

Graph graph_contract(const Graph& g, int e) {
    check_graph(g);
    if (e < 0 || e >= g.edge_count())
        throw ValidationError("edge id out of range: " + std::to_string(e));
    auto [x, y] = g.edges[static_cast<size_t>(e)];
    if (x == y) throw ValidationError("cannot contract a loop");
    // merge y into x, relabel vertices above y down by one
    Graph r;
    r.vertices = g.vertices - 1;
    auto remap = [&](int v) {
        if (v == y) v = x;
        return v > y ? v - 1 : v;
    };
    for (int i = 0; i < g.edge_count(); ++i) {
        if (i == e) continue;
        auto [a, b] = g.edges[static_cast<size_t>(i)];
        r.edges.emplace_back(remap(a), remap(b));
    }
    return r;
}

namespace {

// closure of an edge set: union the endpoints, then take every edge whose
// endpoints are already connected
FlatMask edge_closure(const Graph& g, FlatMask s) {
    UnionFind uf(g.vertices);
    for (int i = 0; i < g.edge_count(); ++i)
        if (s & bit(i)) uf.unite(g.edges[static_cast<size_t>(i)].first,
                                 g.edges[static_cast<size_t>(i)].second);
    FlatMask out = 0;
    for (int i = 0; i < g.edge_count(); ++i) {
        auto [a, b] = g.edges[static_cast<size_t>(i)];
        if (uf.find(a) == uf.find(b)) out |= bit(i);
    }
    return out;
}

} // namespace

Matroid graphic_matroid(const Graph& g, int cap) {
    check_graph(g);
    int m = g.edge_count();
    if (m > kMaxGround || m > cap)
        throw SizeCapError("graph has " + std::to_string(m) + " edges, cap is " +
                           std::to_string(std::min(cap, kMaxGround)));
    // breadth-first search from the bottom flat; every flat is reached by
    // closing off one more edge
    FlatMask bottom = edge_closure(g, 0);
    std::unordered_set<FlatMask> seen{bottom};
    std::vector<FlatMask> flats{bottom};
    std::queue<FlatMask> todo;
    todo.push(bottom);
    while (!todo.empty()) {
        FlatMask f = todo.front();
        todo.pop();
        for (int e = 0; e < m; ++e) {
            if (f & bit(e)) continue;
            FlatMask c = edge_closure(g, f | bit(e));
            if (seen.insert(c).second) {
                flats.push_back(c);
                todo.push(c);
            }
        }
    }
    std::vector<int> labels(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) labels[static_cast<size_t>(i)] = i;
    return Matroid::from_trusted_lattice(m, std::move(labels), std::move(flats));
}

GluedGraph parallel_connection(const Graph& h1, int e1, const Graph& h2, int e2) {
    check_graph(h1);
    check_graph(h2);
    if (e1 < 0 || e1 >= h1.edge_count() || e2 < 0 || e2 >= h2.edge_count())
        throw ValidationError("connection edge id out of range");
    auto [x1, y1] = h1.edges[static_cast<size_t>(e1)];
    auto [x2, y2] = h2.edges[static_cast<size_t>(e2)];
    if (x1 == y1 || x2 == y2)
        throw ValidationError("connection edge must not be a loop");
    GluedGraph out;
    out.graph.vertices = h1.vertices + h2.vertices - 2;
    out.graph.edges = h1.edges;
    out.connection_edge = e1;
    // h2's vertices: x2 and y2 land on x1 and y1, the rest are appended
    std::vector<int> vmap(static_cast<size_t>(h2.vertices), -1);
    vmap[static_cast<size_t>(x2)] = x1;
    vmap[static_cast<size_t>(y2)] = y1;
    int next = h1.vertices;
    for (int v = 0; v < h2.vertices; ++v)
        if (vmap[static_cast<size_t>(v)] < 0) vmap[static_cast<size_t>(v)] = next++;
    for (int i = 0; i < h2.edge_count(); ++i) {
        if (i == e2) continue;
        auto [a, b] = h2.edges[static_cast<size_t>(i)];
        out.graph.edges.emplace_back(vmap[static_cast<size_t>(a)], vmap[static_cast<size_t>(b)]);
    }
    return out;
}

Graph cycle_graph(int n) {
    if (n < 2) throw ValidationError("cycle needs n >= 2");
    Graph g;
    if (n == 2) {
        g.vertices = 2;
        g.edges = {{0, 1}};
        return g;
    }
    g.vertices = n;
    for (int i = 0; i < n; ++i) g.edges.emplace_back(i, (i + 1) % n);
    return g;
}

Graph complete_graph(int n) {
    if (n < 1) throw ValidationError("complete graph needs n >= 1");
    Graph g;
    g.vertices = n;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.edges.emplace_back(i, j);
    return g;
}

Graph complete_bipartite_graph(int a, int b) {
    if (a < 1 || b < 1) throw ValidationError("bipartite sides must be >= 1");
    Graph g;
    g.vertices = a + b;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) g.edges.emplace_back(i, a + j);
    return g;
}

Graph fan_graph(int n) {
    if (n < 1) throw ValidationError("fan needs n >= 1");
    Graph g;
    g.vertices = n + 1;
    for (int i = 1; i <= n; ++i) g.edges.emplace_back(0, i);
    for (int i = 1; i < n; ++i) g.edges.emplace_back(i, i + 1);
    return g;
}

Graph partial_fan_graph(int n, int r) {
    if (n < 2 || r < 0 || r > n - 2)
        throw ValidationError("partial fan needs n >= 2 and 0 <= r <= n-2");
    Graph g;
    g.vertices = n + 1;
    for (int i = 1; i <= n; ++i)
        if (i < n - r || i == n) g.edges.emplace_back(0, i);
    for (int i = 1; i < n; ++i) g.edges.emplace_back(i, i + 1);
    return g;
}

Graph thagomizer_graph(int n) {
    if (n < 1) throw ValidationError("thagomizer needs n >= 1");
    Graph g;
    g.vertices = n + 2;
    g.edges.emplace_back(0, 1);  // the hub edge
    for (int i = 2; i < n + 2; ++i) {
        g.edges.emplace_back(0, i);
        g.edges.emplace_back(1, i);
    }
    return g;
}

Graph double_cycle_graph(int m, int n) {
    if (m < 3 || n < 3) throw ValidationError("double cycle needs m, n >= 3");
    return parallel_connection(cycle_graph(m), 0, cycle_graph(n), 0).graph;
}

Graph partial_saw_graph(int n, int r) {
    if (n < 2 || r < 0 || r > n)
        throw ValidationError("partial saw needs n >= 2 and 0 <= r <= n");
    Graph g = cycle_graph(n);
    for (int i = 0; i < r; ++i) {
        // glue a triangle to cycle edge i; for n == 2 every triangle lands on
        // the single edge.  Cycle edge ids are stable: gluing only appends.
        int e = (n == 2) ? 0 : i;
        g = parallel_connection(g, e, cycle_graph(3), 0).graph;
    }
    return g;
}

Graph family_graph(const std::string& spec) {
    auto colon = spec.find(':');
    std::string name = spec.substr(0, colon);
    std::vector<int> args;
    if (colon != std::string::npos) {
        std::stringstream ss(spec.substr(colon + 1));
        std::string item;
        while (std::getline(ss, item, ',')) {
            try {
                size_t used = 0;
                args.push_back(std::stoi(item, &used));
                if (used != item.size()) throw std::invalid_argument(item);
            } catch (const std::exception&) {
                throw ValidationError("bad family argument '" + item + "' in spec '" + spec + "'");
            }
        }
    }
    auto want = [&](size_t k) {
        if (args.size() != k)
            throw ValidationError("family '" + name + "' takes " + std::to_string(k) +
                                  " argument(s), got " + std::to_string(args.size()));
    };
    if (name == "cycle") { want(1); return cycle_graph(args[0]); }
    if (name == "complete") { want(1); return complete_graph(args[0]); }
    if (name == "kbipartite") { want(2); return complete_bipartite_graph(args[0], args[1]); }
    if (name == "fan") { want(1); return fan_graph(args[0]); }
    if (name == "fanpartial") { want(2); return partial_fan_graph(args[0], args[1]); }
    if (name == "thagomizer") { want(1); return thagomizer_graph(args[0]); }
    if (name == "doublecycle") { want(2); return double_cycle_graph(args[0], args[1]); }
    if (name == "saw") { want(2); return partial_saw_graph(args[0], args[1]); }
    throw ValidationError("unknown family '" + name + "'");
}

} // namespace klm

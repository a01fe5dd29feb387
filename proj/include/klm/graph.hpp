#pragma once

#include <string>
#include <utility>
#include <vector>

#include "klm/matroid.hpp"

namespace klm {

// Multigraph on vertices {0..vertices-1}.  Edges are ordered: the position of
// an edge in the list is its id, and it becomes the matching ground element
// of the graphic matroid.  Loops and parallel edges are allowed.
struct Graph {
    int vertices = 0;
    std::vector<std::pair<int, int>> edges;

    int edge_count() const { return static_cast<int>(edges.size()); }
};

void check_graph(const Graph& g);  // vertex ids in range, else ValidationError

bool is_connected(const Graph& g);  // isolated vertices count as components

Graph graph_delete(const Graph& g, int e);
// Contracting a loop is rejected.
Graph graph_contract(const Graph& g, int e);

// Cycle matroid: flats are the edge sets closed under completing a cycle.
// Enumerated by closing off one extra edge at a time, so the cost scales with
// the lattice, not with 2^edges.
Matroid graphic_matroid(const Graph& g, int cap = kDefaultCap);

// Glue h2 onto h1 by identifying edge e1 with edge e2 endpoint-for-endpoint
// (first endpoints together).  The result keeps h1's edge ids; h2's surviving
// edges follow in order.  connection_edge is the shared edge's id.
struct GluedGraph {
    Graph graph;
    int connection_edge = 0;
};
GluedGraph parallel_connection(const Graph& h1, int e1, const Graph& h2, int e2);

// Families.  Edge orderings are part of the contract; tables and element ids
// in reports depend on them.
Graph cycle_graph(int n);              // n >= 2; n == 2 degenerates to a single edge
Graph complete_graph(int n);           // edges (i,j) in lexicographic order
Graph complete_bipartite_graph(int a, int b);
Graph fan_graph(int n);                // hub 0, spokes (0,1)..(0,n), then path (1,2)..(n-1,n)
Graph partial_fan_graph(int n, int r); // fan minus spokes (0,n-r)..(0,n-1), 0 <= r <= n-2
Graph thagomizer_graph(int n);         // K_{2,n} plus the hub edge, which gets id 0
Graph double_cycle_graph(int m, int n);   // two cycles glued along one edge, m,n >= 3
Graph partial_saw_graph(int n, int r);    // n-cycle with triangles glued to its first r edges

// "name:args" specs, e.g. "cycle:6", "saw:3,2", "doublecycle:4,5".
Graph family_graph(const std::string& spec);

} // namespace klm

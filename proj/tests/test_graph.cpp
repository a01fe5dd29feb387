#include <doctest.h>

#include <utility>
#include <vector>

#include "catalog.hpp"
#include "klm/graph.hpp"
#include "klm/matroid.hpp"

using klm::bit;
using klm::FlatMask;
using klm::Graph;
using klm::graph_contract;
using klm::graph_delete;
using klm::graphic_matroid;
using klm::Matroid;
using klm::ValidationError;
using klm_test::lattice_isomorphic;

namespace {

bool same_graph(const Graph& a, const Graph& b) {
    return a.vertices == b.vertices && a.edges == b.edges;
}

} // namespace

TEST_SUITE("graph") {

TEST_CASE("check_graph and connectivity") {
    Graph bad{2, {{0, 2}}};
    CHECK_THROWS_AS(klm::check_graph(bad), ValidationError);
    CHECK(klm::is_connected(klm::cycle_graph(4)));
    Graph two_parts{4, {{0, 1}, {2, 3}}};
    CHECK_FALSE(klm::is_connected(two_parts));
    Graph isolated{2, {}};
    CHECK_FALSE(klm::is_connected(isolated));
    CHECK(klm::is_connected(Graph{1, {}}));
}

TEST_CASE("graphic matroid of small graphs") {
    Matroid tri = graphic_matroid(klm::cycle_graph(3));
    CHECK(tri.rank() == 2);
    CHECK(tri.num_flats() == 5);

    CHECK(graphic_matroid(klm::cycle_graph(4)).same_flats(Matroid::uniform(1, 3)));

    Matroid k4 = graphic_matroid(klm::complete_graph(4));
    CHECK(k4.rank() == 3);
    CHECK(k4.num_flats() == 15);
    std::vector<int> by_rank(4, 0);
    for (int i = 0; i < k4.num_flats(); ++i) ++by_rank[static_cast<size_t>(k4.flat_rank(i))];
    CHECK(by_rank == std::vector<int>{1, 6, 7, 1});  // 4 triangles + 3 matchings in rank 2
}

TEST_CASE("loops and parallel edges") {
    Graph loop{1, {{0, 0}}};
    Matroid ml = graphic_matroid(loop);
    CHECK(ml.rank() == 0);
    CHECK_FALSE(ml.is_simple());
    CHECK(ml.simplified().ground_size() == 0);

    Graph dbl{2, {{0, 1}, {0, 1}}};
    CHECK(graphic_matroid(dbl).same_flats(Matroid::uniform(1, 1)));
}

TEST_CASE("graph delete and contract") {
    Graph c4 = klm::cycle_graph(4);
    Graph path = graph_delete(c4, 3);
    CHECK(path.edge_count() == 3);
    CHECK(graphic_matroid(path).same_flats(Matroid::boolean_lattice(3)));

    Graph c3 = graph_contract(c4, 0);
    CHECK(c3.vertices == 3);
    CHECK(c3.edge_count() == 3);
    CHECK(graphic_matroid(c3).same_flats(graphic_matroid(klm::cycle_graph(3))));

    Graph loop{1, {{0, 0}}};
    CHECK_THROWS_AS(graph_contract(loop, 0), ValidationError);
}

TEST_CASE("trees are boolean") {
    Graph path3{4, {{0, 1}, {1, 2}, {2, 3}}};
    CHECK(graphic_matroid(path3).same_flats(Matroid::boolean_lattice(3)));
    Graph star4{5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}}};
    CHECK(graphic_matroid(star4).same_flats(Matroid::boolean_lattice(4)));
    Graph caterpillar{6, {{0, 1}, {1, 2}, {2, 3}, {1, 4}, {2, 5}}};
    CHECK(graphic_matroid(caterpillar).same_flats(Matroid::boolean_lattice(5)));
}

TEST_CASE("family shapes") {
    Graph t2 = klm::thagomizer_graph(2);
    CHECK(t2.vertices == 4);
    std::vector<std::pair<int, int>> t2_edges{{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}};
    CHECK(t2.edges == t2_edges);

    CHECK(same_graph(klm::cycle_graph(2), Graph{2, {{0, 1}}}));
    CHECK(klm::fan_graph(1).edge_count() == 1);
    CHECK(klm::partial_fan_graph(5, 0).edges == klm::fan_graph(5).edges);
    CHECK(klm::complete_bipartite_graph(2, 3).edge_count() == 6);
    CHECK(klm::partial_saw_graph(4, 0).edges == klm::cycle_graph(4).edges);
    CHECK(klm::partial_saw_graph(3, 2).edge_count() == 7);
}

TEST_CASE("fan(2) is the triangle") {
    Graph f2 = klm::fan_graph(2);
    CHECK(f2.vertices == 3);
    CHECK(f2.edge_count() == 3);
    CHECK(graphic_matroid(f2).same_flats(graphic_matroid(klm::cycle_graph(3))));
}

TEST_CASE("maximal partial fan is a cycle") {
    for (int n = 3; n <= 6; ++n) {
        Graph g = klm::partial_fan_graph(n, n - 2);
        CHECK(g.edge_count() == n + 1);
        CHECK(graphic_matroid(g).same_flats(Matroid::uniform(1, n)));
    }
}

TEST_CASE("thagomizer contract hub is a star") {
    for (int n = 2; n <= 4; ++n) {
        Graph contracted = graph_contract(klm::thagomizer_graph(n), 0);
        Matroid m = graphic_matroid(contracted).simplified();
        CHECK(m.same_flats(Matroid::boolean_lattice(n)));
    }
}

TEST_CASE("saw(2,2) equals thagomizer(2)") {
    Matroid saw = graphic_matroid(klm::partial_saw_graph(2, 2));
    Matroid t2 = graphic_matroid(klm::thagomizer_graph(2));
    CHECK(saw.ground_size() == 5);
    CHECK(lattice_isomorphic(saw, t2));
}

TEST_CASE("parallel connection of two triangles") {
    auto glued = klm::parallel_connection(klm::cycle_graph(3), 0, klm::cycle_graph(3), 0);
    CHECK(same_graph(glued.graph, klm::double_cycle_graph(3, 3)));
    CHECK(glued.connection_edge == 0);
    CHECK(glued.graph.edge_count() == 5);
    CHECK(lattice_isomorphic(graphic_matroid(glued.graph),
                             graphic_matroid(klm::thagomizer_graph(2))));
}

TEST_CASE("parallel connection of cycles is the double cycle") {
    for (auto [m, n] : std::vector<std::pair<int, int>>{{3, 4}, {4, 5}, {5, 3}}) {
        auto glued =
            klm::parallel_connection(klm::cycle_graph(m), 0, klm::cycle_graph(n), 0);
        CHECK(same_graph(glued.graph, klm::double_cycle_graph(m, n)));
    }
}

TEST_CASE("partial fan as a parallel connection") {
    // gluing a 4-cycle onto the last spoke of fan(3) gives the partial fan (5,1)
    auto glued = klm::parallel_connection(klm::fan_graph(3), 2, klm::cycle_graph(4), 0);
    Matroid a = graphic_matroid(glued.graph);
    Matroid b = graphic_matroid(klm::partial_fan_graph(5, 1));
    CHECK(a.ground_size() == 8);
    CHECK(lattice_isomorphic(a, b));
}

TEST_CASE("edge deletion matches matroid deletion") {
    std::vector<Graph> gs{klm::cycle_graph(4), klm::complete_graph(4),
                          klm::thagomizer_graph(3), klm::fan_graph(4)};
    for (const Graph& g : gs) {
        Matroid m = graphic_matroid(g);
        for (int e = 0; e < g.edge_count(); ++e) {
            Matroid a = graphic_matroid(graph_delete(g, e));
            Matroid b = m.deleted(e);
            CHECK(a.same_flats(b));
        }
    }
}

TEST_CASE("edge contraction matches matroid contraction") {
    std::vector<Graph> gs{klm::complete_graph(4), klm::thagomizer_graph(3),
                          klm::fan_graph(3), klm::double_cycle_graph(3, 4)};
    for (const Graph& g : gs) {
        Matroid m = graphic_matroid(g);
        for (int e = 0; e < g.edge_count(); ++e) {
            Matroid a = m.contracted(m.closure(bit(e)));
            Matroid b = graphic_matroid(graph_contract(g, e)).simplified();
            CHECK(lattice_isomorphic(a, b));
        }
    }
}

TEST_CASE("contracting the shared edge splits the connection") {
    // after contracting the connection edge, the flats match the direct sum
    // of the two contracted sides
    struct Case {
        Graph h1, h2;
        int e1, e2;
    };
    std::vector<Case> cases{{klm::cycle_graph(3), klm::cycle_graph(3), 0, 0},
                            {klm::cycle_graph(4), klm::cycle_graph(5), 1, 2},
                            {klm::fan_graph(3), klm::cycle_graph(4), 2, 0}};
    for (const auto& c : cases) {
        auto glued = klm::parallel_connection(c.h1, c.e1, c.h2, c.e2);
        Matroid whole = graphic_matroid(glued.graph);
        Matroid left =
            graphic_matroid(graph_contract(c.h1, c.e1)).simplified();
        Matroid right =
            graphic_matroid(graph_contract(c.h2, c.e2)).simplified();
        Matroid glued_contracted =
            whole.contracted(whole.closure(bit(glued.connection_edge)));
        CHECK(glued_contracted.same_flats(Matroid::direct_sum(left, right)));
    }
}

TEST_CASE("family_graph parsing") {
    CHECK(same_graph(klm::family_graph("cycle:5"), klm::cycle_graph(5)));
    CHECK(same_graph(klm::family_graph("saw:3,2"), klm::partial_saw_graph(3, 2)));
    CHECK(same_graph(klm::family_graph("doublecycle:4,5"), klm::double_cycle_graph(4, 5)));
    CHECK(same_graph(klm::family_graph("kbipartite:2,3"),
                     klm::complete_bipartite_graph(2, 3)));
    CHECK_THROWS_AS(klm::family_graph("bogus:3"), ValidationError);
    CHECK_THROWS_AS(klm::family_graph("cycle:x"), ValidationError);
    CHECK_THROWS_AS(klm::family_graph("cycle:3,4"), ValidationError);
    CHECK_THROWS_AS(klm::family_graph("saw:3"), ValidationError);
    CHECK_THROWS_AS(klm::family_graph("cycle:"), ValidationError);
}

TEST_CASE("graph catalog counts") {
    auto cat = klm_test::connected_graph_catalog(4, 8);
    // connected simple graphs: 1 on one vertex, 1 on two, 2 on three, 6 on four
    CHECK(cat.size() == 10);
    for (const Graph& g : cat) {
        CHECK(klm::is_connected(g));
        graphic_matroid(g).validate();
    }
}

} // TEST_SUITE

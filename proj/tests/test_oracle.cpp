#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "checkers.hpp"
#include "kord/graph_gen.hpp"
#include "kord/oracle.hpp"

using kord::CycleCertificate;
using kord::OracleStatus;

TEST_CASE("certificate verification judges all three clauses") {
  kord::Graph g = kord::path_graph(6);
  CycleCertificate cert{6, 2, {0, 2, 4, 5, 3, 1}, {0, 4, 3, 1}, "path"};
  auto r = kord::verify_certificate(g, cert);
  CHECK(r.ok());
  CHECK(r.first_violation.empty());

  CycleCertificate weak = cert;
  weak.power = 1;
  r = kord::verify_certificate(g, weak);
  CHECK(!r.edges_ok);
  CHECK(r.hamiltonian_ok);
  CHECK(r.first_violation == "cycle hop exceeds the stated power");

  CycleCertificate twisted = cert;
  twisted.anchors = {0, 3, 4, 1};
  r = kord::verify_certificate(g, twisted);
  CHECK(!r.order_ok);
  CHECK(r.hamiltonian_ok);
  CHECK(r.edges_ok);
  CHECK(r.first_violation == "anchors are out of cyclic order");

  CycleCertificate broken = cert;
  broken.cycle = {0, 2, 4, 5, 3, 3};
  r = kord::verify_certificate(g, broken);
  CHECK(!r.hamiltonian_ok);
  CHECK(r.first_violation == "cycle is not a permutation of the vertices");

  CycleCertificate offsize = cert;
  offsize.n = 5;
  CHECK_THROWS_AS(kord::verify_certificate(g, offsize),
                  std::invalid_argument);
  CycleCertificate nopower = cert;
  nopower.power = 0;
  CHECK_THROWS_AS(kord::verify_certificate(g, nopower),
                  std::invalid_argument);
}

TEST_CASE("the search finds, refutes and respects its bound") {
  kord::Graph c6 = kord::cycle_graph(6);
  auto r = kord::oracle_cycle(c6, {0, 2, 4}, true);
  CHECK(r.status == OracleStatus::found);
  CHECK(r.witness == std::vector<int>{0, 1, 2, 3, 4, 5});

  // the hexagon realizes no interleaved four-anchor order
  CHECK(kord::oracle_cycle(c6, {0, 2, 1, 3}, true).status ==
        OracleStatus::not_found);
  CHECK(kord::oracle_cycle(c6, {0, 2, 1, 3}, false).status ==
        OracleStatus::not_found);

  kord::Graph tri(4);
  tri.add_edge(0, 1);
  tri.add_edge(1, 2);
  tri.add_edge(0, 2);
  tri.add_edge(0, 3);
  CHECK(kord::oracle_cycle(tri, {0, 1, 2}, true).status ==
        OracleStatus::not_found);  // the pendant blocks Hamiltonicity
  auto any = kord::oracle_cycle(tri, {0, 1, 2}, false);
  CHECK(any.status == OracleStatus::found);
  CHECK(any.witness == std::vector<int>{0, 1, 2});

  CHECK(kord::oracle_cycle(kord::path_graph(30), {0, 10, 20}, true).status ==
        OracleStatus::bound_exceeded);
  CHECK(kord::oracle_cycle(kord::path_graph(30), {0, 10, 20}, true, 30)
            .status == OracleStatus::not_found);  // a tree has no cycle

  auto again = kord::oracle_cycle(c6, {0, 2, 4}, true);
  CHECK(again.witness == r.witness);

  CHECK_THROWS_AS(kord::oracle_cycle(c6, {0, 1}, true),
                  std::invalid_argument);
  CHECK_THROWS_AS(kord::oracle_cycle(c6, {0, 1, 1}, true),
                  std::invalid_argument);
  CHECK_THROWS_AS(kord::oracle_cycle(c6, {0, 1, 6}, true),
                  std::invalid_argument);
}

TEST_CASE("found witnesses satisfy the requested contract") {
  kord::Graph g = kord::power(kord::path_graph(7), 3);
  auto d = kordtest::dist_matrix(g);
  auto r = kord::oracle_cycle(g, {0, 3, 6}, true);
  REQUIRE(r.status == OracleStatus::found);
  CHECK(kordtest::is_permutation_cycle(r.witness, 7));
  CHECK(kordtest::hops_within(d, r.witness, 1));
  CHECK(kordtest::cyclic_order_ok(r.witness, {0, 3, 6}));
}

TEST_CASE("lower-bound witnesses carry the advertised instances") {
  auto w4 = kord::witness_path_lower(4);
  CHECK(w4.base.n() == 7);
  CHECK(w4.base.edge_count() == 6);
  CHECK(w4.power == 3);
  CHECK(w4.anchors == std::vector<int>{0, 5, 1, 6});

  auto w5 = kord::witness_path_lower(5);
  CHECK(w5.base.n() == 9);
  CHECK(w5.power == 4);
  CHECK(w5.anchors == std::vector<int>{0, 6, 1, 7, 2});

  auto c3 = kord::witness_cycle_lower(3, 11);
  CHECK(c3.base.n() == 11);
  CHECK(c3.power == 3);
  CHECK(c3.anchors == std::vector<int>{0, 6, 1, 8, 2, 7});

  CHECK_THROWS_AS(kord::witness_path_lower(3), std::invalid_argument);
  CHECK_THROWS_AS(kord::witness_cycle_lower(2, 11), std::invalid_argument);
  CHECK_THROWS_AS(kord::witness_cycle_lower(3, 10), std::invalid_argument);
}

TEST_CASE("the search confirms the path witness and the power above it") {
  auto w = kord::witness_path_lower(4);
  kord::Graph low = kord::power(w.base, w.power);
  CHECK(kord::oracle_cycle(low, w.anchors, false).status ==
        OracleStatus::not_found);
  kord::Graph high = kord::power(w.base, w.power + 2);
  CHECK(kord::oracle_cycle(high, w.anchors, true).status ==
        OracleStatus::found);

  auto w5 = kord::witness_path_lower(5);
  kord::Graph low5 = kord::power(w5.base, w5.power);
  CHECK(kord::oracle_cycle(low5, w5.anchors, false).status ==
        OracleStatus::not_found);
  kord::Graph high5 = kord::power(w5.base, w5.power + 2);
  CHECK(kord::oracle_cycle(high5, w5.anchors, true).status ==
        OracleStatus::found);
}

TEST_CASE("the search refutes the cycle witness instantly") {
  auto w = kord::witness_cycle_lower(3, 11);
  kord::Graph low = kord::power(w.base, w.power);
  CHECK(kord::oracle_cycle(low, w.anchors, false).status ==
        OracleStatus::not_found);
}

TEST_CASE("power sweeps walk up to the first passing power") {
  auto s = kord::sweep_pk(kord::path_graph(5), 3);
  CHECK(s.p_k == 2);
  REQUIRE(s.rows.size() == 2);
  CHECK(s.rows[0].power == 1);
  CHECK(!s.rows[0].all_pass);
  CHECK(s.rows[1].power == 2);
  CHECK(s.rows[1].all_pass);

  auto c = kord::sweep_pk(kord::cycle_graph(5), 4);
  CHECK(c.p_k == 2);
  CHECK(c.rows.size() == 2);

  CHECK_THROWS_AS(kord::sweep_pk(kord::path_graph(13), 3),
                  std::invalid_argument);
  kord::Graph split(6);
  split.add_edge(0, 1);
  split.add_edge(2, 3);
  split.add_edge(4, 5);
  CHECK_THROWS_AS(kord::sweep_pk(split, 3), std::invalid_argument);
}

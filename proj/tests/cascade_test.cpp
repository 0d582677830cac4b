#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "ck/cascade.hpp"
#include "ck/chevalley.hpp"
#include "ck/rootsys.hpp"

using namespace ck;

namespace {

std::vector<std::vector<int>> cascade_coeffs(const RootSystem& rs, const Cascade& c) {
  std::vector<std::vector<int>> out;
  for (const CascadeNode& node : c.nodes) out.push_back(rs.root(node.beta).coeffs);
  return out;
}

}  // namespace

TEST_CASE("cascade roots are the classical ones, in depth-first order") {
  using V = std::vector<std::vector<int>>;
  const std::map<std::string, V> expected{
      {"A2", {{1, 1}}},
      {"A3", {{1, 1, 1}, {0, 1, 0}}},
      {"A4", {{1, 1, 1, 1}, {0, 1, 1, 0}}},
      {"A5", {{1, 1, 1, 1, 1}, {0, 1, 1, 1, 0}, {0, 0, 1, 0, 0}}},
      {"B2", {{1, 2}, {1, 0}}},
      {"B3", {{1, 2, 2}, {1, 0, 0}, {0, 0, 1}}},
      {"B4", {{1, 2, 2, 2}, {1, 0, 0, 0}, {0, 0, 1, 2}, {0, 0, 1, 0}}},
      {"C3", {{2, 2, 1}, {0, 2, 1}, {0, 0, 1}}},
      {"C4", {{2, 2, 2, 1}, {0, 2, 2, 1}, {0, 0, 2, 1}, {0, 0, 0, 1}}},
      {"D4", {{1, 2, 1, 1}, {1, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}},
      {"D5", {{1, 2, 2, 1, 1}, {1, 0, 0, 0, 0}, {0, 0, 1, 1, 1}, {0, 0, 1, 0, 0}}},
      {"G2", {{3, 2}, {1, 0}}},
      {"B2xG2", {{1, 2, 0, 0}, {1, 0, 0, 0}, {0, 0, 3, 2}, {0, 0, 1, 0}}},
  };
  for (const auto& [type, roots] : expected) {
    const RootSystem rs = build_root_system(type);
    const Cascade c = compute_cascade(rs);
    CHECK(cascade_coeffs(rs, c) == roots);
  }
}

TEST_CASE("cascade cardinality matches the classification") {
  const std::map<std::string, int> m{
      {"A1", 1}, {"A2", 1}, {"A3", 2}, {"A4", 2}, {"A5", 3}, {"B2", 2},
      {"B3", 3}, {"B4", 4}, {"C3", 3}, {"C4", 4}, {"D4", 4}, {"D5", 4},
      {"G2", 2}, {"F4", 4}, {"E6", 4}, {"B2xG2", 4}, {"A1xA2xA3", 4},
  };
  for (const auto& [type, count] : m)
    CHECK(compute_cascade(build_root_system(type)).m() == count);
}

TEST_CASE("layers and twins") {
  const RootSystem a2 = build_root_system("A2");
  const Cascade ca2 = compute_cascade(a2);
  CHECK(ca2.layer(a2.index_of({1, 1})) == std::vector<int>{0, 1, 2});

  const RootSystem b2 = build_root_system("B2");
  const Cascade cb2 = compute_cascade(b2);
  const int b2_theta = b2.index_of({1, 2});
  CHECK(cb2.layer(b2_theta) ==
        std::vector<int>{b2.index_of({0, 1}), b2.index_of({1, 1}), b2_theta});
  CHECK(cb2.layer(0) == std::vector<int>{0});
  CHECK(cb2.twin(b2.index_of({0, 1})) == b2.index_of({1, 1}));
  CHECK(cb2.twin(cb2.twin(b2.index_of({0, 1}))) == b2.index_of({0, 1}));
  CHECK_THROWS_AS(cb2.twin(b2_theta), std::invalid_argument);
  CHECK_THROWS_AS(cb2.layer(1), std::invalid_argument);

  const RootSystem a3 = build_root_system("A3");
  const Cascade ca3 = compute_cascade(a3);
  CHECK(ca3.twin(0) == a3.index_of({0, 1, 1}));
  CHECK(ca3.layer(a3.index_of({0, 1, 0})).size() == 1);

  // Layer sizes down the forest, 2 h_dual - 3 each.
  auto sizes = [](const char* t) {
    std::vector<int> out;
    const RootSystem rs = build_root_system(t);
    for (const CascadeNode& node : compute_cascade(rs).nodes)
      out.push_back(static_cast<int>(node.layer.size()));
    return out;
  };
  CHECK(sizes("G2") == std::vector<int>{5, 1});
  CHECK(sizes("B3") == std::vector<int>{7, 1, 1});
  CHECK(sizes("C3") == std::vector<int>{5, 3, 1});
  CHECK(sizes("D4") == std::vector<int>{9, 1, 1, 1});
  CHECK(sizes("F4") == std::vector<int>{15, 5, 3, 1});
}

TEST_CASE("chains") {
  const RootSystem b2 = build_root_system("B2");
  const Cascade cb2 = compute_cascade(b2);
  const int b2_theta = b2.index_of({1, 2});
  CHECK(cb2.chain_of(0) == std::vector<int>{b2_theta, 0});
  CHECK(cb2.chain_of(b2.index_of({0, 1})) == std::vector<int>{b2_theta});
  CHECK(cb2.chain_of(b2_theta) == std::vector<int>{b2_theta});

  const RootSystem a2 = build_root_system("A2");
  CHECK(compute_cascade(a2).chain_of(0) == std::vector<int>{a2.index_of({1, 1})});

  const RootSystem c3 = build_root_system("C3");
  const Cascade cc3 = compute_cascade(c3);
  CHECK(cc3.chain_of(c3.index_of({0, 0, 1})) ==
        std::vector<int>{c3.index_of({2, 2, 1}), c3.index_of({0, 2, 1}),
                         c3.index_of({0, 0, 1})});
  CHECK_THROWS_AS(cc3.chain_of(-1), std::invalid_argument);
  CHECK_THROWS_AS(cc3.chain_of(99), std::invalid_argument);
}

TEST_CASE("forest structure") {
  const RootSystem d4 = build_root_system("D4");
  const Cascade c = compute_cascade(d4);
  REQUIRE(c.m() == 4);
  CHECK(c.nodes[0].parent == -1);
  CHECK(c.nodes[0].children == std::vector<int>{1, 2, 3});
  CHECK(c.nodes[1].support == std::vector<int>{0});
  CHECK(c.nodes[0].h_dual == 6);
  CHECK(c.in_cascade(c.nodes[0].beta));
  CHECK_FALSE(c.in_cascade(1));  // alpha_2 is not a cascade root in D4
  CHECK_THROWS_AS(c.node_of(1), std::invalid_argument);

  const RootSystem bg = build_root_system("B2xG2");
  const Cascade cbg = compute_cascade(bg);
  CHECK(cbg.nodes[0].parent == -1);
  CHECK(cbg.nodes[2].parent == -1);  // two independent trees
  CHECK(cbg.nodes[1].parent == 0);
  CHECK(cbg.nodes[3].parent == 2);
}

TEST_CASE("verify_section1 passes across the small-rank families") {
  for (const char* t : {"A1", "A2", "A3", "A4", "A5", "B2", "B3", "B4", "C3", "C4", "D4",
                        "G2", "F4", "B2xG2"}) {
    const VerificationReport rep = verify_section1(build_root_system(t), compute_cascade(build_root_system(t)));
    for (const CheckResult& c : rep.checks) {
      CAPTURE(c.check);
      CAPTURE(c.witness);
      CHECK(c.pass);
    }
    CHECK(rep.checks.size() == 10);
  }
}

TEST_CASE("verify_section1 reports a failure when handed a broken cascade") {
  const RootSystem rs = build_root_system("A3");
  Cascade c = compute_cascade(rs);
  c.nodes[1].layer.clear();  // damage the second layer
  const VerificationReport rep = verify_section1(rs, c);
  CHECK_FALSE(rep.all_pass());
  bool partition_failed = false;
  for (const CheckResult& r : rep.checks)
    if (r.check == "section1/partition" && !r.pass && !r.witness.empty())
      partition_failed = true;
  CHECK(partition_failed);
}

TEST_CASE("Heisenberg bracket structure of every layer") {
  for (const char* t : {"A2", "A3", "A4", "B2", "B3", "C3", "D4", "G2", "F4", "B2xG2"}) {
    const RootSystem rs = build_root_system(t);
    const ChevalleyTable tbl(rs);
    const Cascade c = compute_cascade(rs);
    for (const CascadeNode& node : c.nodes) {
      CAPTURE(t);
      CHECK(heisenberg_bracket_check(rs, tbl, c, node.beta));
    }
  }
}

TEST_CASE("twin brackets in B2 hit e_beta with the short-root constant") {
  const RootSystem rs = build_root_system("B2");
  const ChevalleyTable tbl(rs);
  const int n = tbl.structure_constant(root_key(rs.index_of({0, 1})),
                                       root_key(rs.index_of({1, 1})));
  CHECK((n == 2 || n == -2));
}

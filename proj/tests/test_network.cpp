#include "doctest.h"

#include <string>

#include "cliquedec/network.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"

using namespace cliquedec;
using namespace cliquedec::testing;

namespace {

std::string replace_all(std::string text, const std::string& from,
                        const std::string& to) {
  for (std::size_t pos = text.find(from); pos != std::string::npos;
       pos = text.find(from, pos + to.size())) {
    text.replace(pos, from.size(), to);
  }
  return text;
}

std::size_t in_service(const NetworkTopology& t) {
  std::size_t count = 0;
  for (const Branch& b : t.branches) count += b.in_service ? 1 : 0;
  return count;
}

}  // namespace

TEST_CASE("parse_matpower reads bus ids and branch endpoints") {
  const NetworkTopology t = parse_matpower(kLmbm3Matpower);
  CHECK(t.buses == std::vector<BusId>{1, 2, 3});
  REQUIRE(t.branches.size() == 3);
  CHECK(in_service(t) == 3);
  CHECK(t.branches[0] == Branch{1, 3, true});
  CHECK(t.branches[1] == Branch{3, 2, true});
}

TEST_CASE("parse_matpower honours the status column") {
  const std::string text = replace_all(
      kLmbm3Matpower, "0.7\t186\t0\t0\t0\t0\t1", "0.7\t186\t0\t0\t0\t0\t0");
  const NetworkTopology t = parse_matpower(text);
  CHECK(t.buses.size() == 3);
  CHECK(t.branches.size() == 3);
  CHECK(in_service(t) == 2);
  CHECK_FALSE(t.branches[1].in_service);
}

TEST_CASE("parse_matpower rejects bad input with a line number") {
  SUBCASE("unknown bus") {
    const std::string text =
        replace_all(kLmbm3Matpower, "\t1\t3\t0.065", "\t4\t1\t0.065");
    try {
      parse_matpower(text);
      FAIL("expected MalformedInput");
    } catch (const MalformedInput& e) {
      CHECK(e.line() == 17);
      CHECK(std::string(e.what()).find("unknown bus 4") != std::string::npos);
    }
  }
  SUBCASE("missing branch block") {
    const std::string text = replace_all(kLmbm3Matpower, "mpc.branch", "x");
    CHECK_THROWS_AS(parse_matpower(text), MalformedInput);
  }
  SUBCASE("non-numeric entry") {
    const std::string text = replace_all(kLmbm3Matpower, "0.042", "abc");
    try {
      parse_matpower(text);
      FAIL("expected MalformedInput");
    } catch (const MalformedInput& e) {
      CHECK(e.line() == 19);
    }
  }
  SUBCASE("self-loop") {
    const std::string text =
        replace_all(kLmbm3Matpower, "\t1\t3\t0.065", "\t3\t3\t0.065");
    CHECK_THROWS_AS(parse_matpower(text), MalformedInput);
  }
  SUBCASE("duplicate bus") {
    const std::string text =
        replace_all(kLmbm3Matpower, "\t3\t2\t95", "\t2\t2\t95");
    CHECK_THROWS_AS(parse_matpower(text), MalformedInput);
  }
}

TEST_CASE("parse_matpower handles compact and one-line layouts") {
  const std::string text =
      "mpc.bus = [1 3 0; 2 1 0; 7 1 0];  % trailing comment\n"
      "mpc.bus_name = {'a'; 'b'; 'c'};\n"
      "mpc.branch = [1, 2, 0, 0.1, 0, 0, 0, 0, 0, 0, 1; 2, 7, 0, 0.1, 0, 0, "
      "0, 0, 0, 0, 0\n"
      "  7 1 0 0.2 0 0 0 0 0 0 1];\n";
  const NetworkTopology t = parse_matpower(text);
  CHECK(t.buses == std::vector<BusId>{1, 2, 7});
  REQUIRE(t.branches.size() == 3);
  CHECK(t.branches[1] == Branch{2, 7, false});
  CHECK(t.branches[2] == Branch{7, 1, true});
}

TEST_CASE("electrical quantities do not affect the topology") {
  const std::string other = replace_all(
      replace_all(kLmbm3Matpower, "0.065\t0.62", "1.5\t2.5e-3"), "9000",
      "Inf");
  CHECK(parse_matpower(other) == parse_matpower(kLmbm3Matpower));
}

TEST_CASE("parse_edge_list") {
  const NetworkTopology t = parse_edge_list("1 2\n2 3");
  CHECK(t.buses == std::vector<BusId>{1, 2, 3});
  CHECK(t.branches.size() == 2);

  const NetworkTopology empty = parse_edge_list("");
  CHECK(empty.buses.empty());
  CHECK(empty.branches.empty());

  CHECK_THROWS_AS(parse_edge_list("1 1"), MalformedInput);
  CHECK_THROWS_AS(parse_edge_list("1 x"), MalformedInput);
  CHECK_THROWS_AS(parse_edge_list("1 2 3"), MalformedInput);

  const NetworkTopology commented =
      parse_edge_list("# header\n\n10 4  # tie\n4 7\n");
  CHECK(commented.buses == std::vector<BusId>{4, 7, 10});
  CHECK(commented.branches.front() == Branch{10, 4, true});

  try {
    parse_edge_list("1 2\n\n3 q\n");
    FAIL("expected MalformedInput");
  } catch (const MalformedInput& e) {
    CHECK(e.line() == 3);
  }
}

TEST_CASE("write then parse preserves buses and in-service branches") {
  Rng rng(99);
  for (int trial = 0; trial < 20; ++trial) {
    NetworkTopology t =
        grid_like_topology(rng, uniform(rng, 1, 6), uniform(rng, 1, 6));
    for (Branch& b : t.branches) b.in_service = coin(rng, 0.8);
    CHECK(parse_matpower(write_matpower(t)) == t);

    const NetworkTopology from_list = parse_edge_list(write_edge_list(t));
    std::vector<Branch> live;
    for (const Branch& b : t.branches) {
      if (b.in_service) live.push_back(b);
    }
    CHECK(from_list.branches == live);
    CHECK(parse_edge_list(write_edge_list(from_list)) == from_list);
  }
}

#include <catch2/catch_amalgamated.hpp>

#include "twistpoly/gauss_code.hpp"

using twistpoly::Arc;
using twistpoly::Role;
using twistpoly::SyntaxError;
using twistpoly::Token;
using twistpoly::TwistedGaussCode;
using twistpoly::ValidationError;

namespace {
TwistedGaussCode G(const std::string& s) { return TwistedGaussCode::parse(s); }
}  // namespace

TEST_CASE("parse reads passes, bars, and components") {
  auto d = G("O1+ O2+ U1+ U2+");
  REQUIRE(d.components.size() == 1);
  CHECK(d.components[0].size() == 4);
  CHECK(d.components[0][0] == Token::pass(1, Role::Over, +1));
  CHECK(d.components[0][2] == Token::pass(1, Role::Under, +1));
  CHECK(d.bar_count() == 0);
  CHECK(d.crossing_count() == 2);

  auto bars = G("b b");
  REQUIRE(bars.components.size() == 1);
  CHECK(bars.crossing_count() == 0);
  CHECK(bars.bar_count() == 2);

  auto hopf = G("U1+ O2+; O1+ U2+");
  CHECK(hopf.components.size() == 2);
  CHECK(hopf.crossing_count() == 2);

  auto multiline = G("U1+ O2+\nO1+ U2+");
  CHECK(multiline == hopf);

  auto commented = G("U1+ O2+  # first loop\nO1+ U2+  # second loop\n");
  CHECK(commented == hopf);
}

TEST_CASE("empty input and explicit empty components are unknots") {
  auto unknot = G("");
  REQUIRE(unknot.components.size() == 1);
  CHECK(unknot.components[0].empty());
  CHECK(G("()") == unknot);
  CHECK(G("# nothing here\n") == unknot);

  auto two = G("(); ()");
  CHECK(two.components.size() == 2);

  auto mixed = G("O1+ U1+; ()");
  CHECK(mixed.components.size() == 2);
  CHECK(mixed.components[1].empty());

  // Bare separators do not create components.
  CHECK(G("O1+ U1+;;").components.size() == 1);
  CHECK(G("\n\nO1+ U1+\n\n").components.size() == 1);
}

TEST_CASE("validation rejects malformed crossing sets") {
  CHECK_THROWS_AS(G("O1+ U1+ O1+"), ValidationError);      // id three times
  CHECK_THROWS_AS(G("O1+ U1+ O2+ U2+ O2+ U2+"), ValidationError);
  CHECK_THROWS_AS(G("O1+"), ValidationError);              // id once
  CHECK_THROWS_AS(G("O1+ O1+"), ValidationError);          // same role twice
  CHECK_THROWS_AS(G("O1+ U1-"), ValidationError);          // sign mismatch
  CHECK_THROWS_AS(G("O1+; U2+"), ValidationError);         // two dangling ids

  TwistedGaussCode none;
  CHECK_THROWS_AS(none.validate(), ValidationError);       // zero components
}

TEST_CASE("syntax errors carry line and column") {
  try {
    G("O1+ U1");
    FAIL("expected SyntaxError");
  } catch (const SyntaxError& e) {
    CHECK(e.line == 1);
    CHECK(e.column == 5);
  }
  try {
    G("O1+ U1+\nO2+ x U2+");
    FAIL("expected SyntaxError");
  } catch (const SyntaxError& e) {
    CHECK(e.line == 2);
    CHECK(e.column == 5);
  }
  CHECK_THROWS_AS(G("bb"), SyntaxError);
  CHECK_THROWS_AS(G("O+"), SyntaxError);
  CHECK_THROWS_AS(G("Q1+"), SyntaxError);
  CHECK_THROWS_AS(G("("), SyntaxError);
  CHECK_THROWS_AS(G("() O1+ U1+"), SyntaxError);
  CHECK_THROWS_AS(G("O1+ U1+ ()"), SyntaxError);
  CHECK_THROWS_AS(G("O1+U1+"), SyntaxError);
}

TEST_CASE("writhe sums distinct crossing signs") {
  CHECK(G("O1+ O2+ U1+ U2+").writhe() == 2);
  CHECK(G("").writhe() == 0);
  CHECK(G("O1- U1-").writhe() == -1);
  CHECK(G("O1+ U2- O3+ U1+ O2- U3+").writhe() == 1);
  CHECK(G("b b b").writhe() == 0);
}

TEST_CASE("arcs partition components between consecutive passes") {
  CHECK(G("O1+ U1+").arcs().size() == 2);
  CHECK(G("O1+ O2+ U1+ U2+").arcs().size() == 4);

  auto degenerate = G("b").arcs();
  REQUIRE(degenerate.size() == 1);
  CHECK(degenerate[0].degenerate());
  CHECK(degenerate[0].bar_positions == std::vector<int>{0});

  // Bars land on the arc that leaves the preceding pass, wrap included.
  auto arcs = G("O1+ b O2+ U1+ b b U2+ b").arcs();
  REQUIRE(arcs.size() == 4);
  CHECK(arcs[0].start_pos == 0);
  CHECK(arcs[0].end_pos == 2);
  CHECK(arcs[0].bar_positions == std::vector<int>{1});
  CHECK(arcs[1].bar_positions.empty());
  CHECK(arcs[2].bar_positions == std::vector<int>{4, 5});
  CHECK(arcs[3].start_pos == 6);
  CHECK(arcs[3].end_pos == 0);
  CHECK(arcs[3].bar_positions == std::vector<int>{7});

  // Arc count: two per crossing plus one per crossing-free component.
  CHECK(G("O1+ U1+; b; ()").arcs().size() == 4);
  CHECK(G("U1+ O2+; O1+ U2+").arcs().size() == 4);
}

TEST_CASE("serialization round-trips structurally") {
  for (const auto* text : {"", "()", "b", "b b", "O1+ U1+", "O1- U1-", "O1+ O2+ U1+ U2+",
                           "O1+ b O2+ U1+ b b U2+ b", "U1+ O2+; O1+ U2+", "(); ()",
                           "O1+ U2+ O3+ U1+ O2+ U3+", "O5+ U9- O9- U5+"}) {
    auto d = G(text);
    CHECK(TwistedGaussCode::parse(d.serialize()) == d);
  }
  CHECK(G("").serialize() == "()");
  CHECK(G("O1+ U1+; ()").serialize() == "O1+ U1+; ()");
}

TEST_CASE("writhe is stable under rotation and renumbering") {
  auto d = G("O1+ U2- O3+ U1+ O2- U3+");
  for (int r = 0; r < 6; ++r) {
    auto rot = d.rotated(0, r);
    rot.validate();
    CHECK(rot.writhe() == d.writhe());
    CHECK(rot.arcs().size() == d.arcs().size());
  }
  auto dense = G("O5+ U9- O9- U5+").renumbered();
  CHECK(dense == G("O1+ U2- O2- U1+"));
  CHECK(dense.writhe() == G("O5+ U9- O9- U5+").writhe());
}

TEST_CASE("crossing occurrence lookup") {
  auto d = G("O1+ O2+ U1+ U2+");
  auto refs = d.crossing_refs();
  REQUIRE(refs.size() == 2);
  CHECK(refs[1].over == twistpoly::PassRef{0, 0});
  CHECK(refs[1].under == twistpoly::PassRef{0, 2});
  CHECK(refs[2].over == twistpoly::PassRef{0, 1});
  CHECK(refs[2].under == twistpoly::PassRef{0, 3});
  CHECK(refs[1].sign == 1);
}

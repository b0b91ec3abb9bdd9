#include <gtest/gtest.h>

#include "stallings/errors.hpp"
#include "stallings/io.hpp"
#include "support/random_instances.hpp"

namespace stallings {
namespace {

const Alphabet kTwo(2);

InverseAutomaton gamma(Alphabet alpha, std::string_view gens) {
  return stallings_graph(parse_words(gens, alpha), alpha);
}

TEST(AutomatonText, WritesCycle) {
  EXPECT_EQ(write_automaton(gamma(kTwo, "ab")),
            "alphabet 2\nstates 2\nbase 0\nedge 0 1 1\nedge 1 2 0\n");
}

TEST(AutomatonText, ParsesWithCommentsAndBlankLines) {
  auto a = parse_automaton("# a-loop and b-loop\nalphabet 2\n\nstates 1\nbase 0\n"
                           "edge 0 1 0\r\nedge 0   2 0\n");
  EXPECT_EQ(a, bouquet(kTwo));
}

TEST(AutomatonText, Errors) {
  EXPECT_THROW((void)parse_automaton("states 1\nbase 0\n"), ParseError);
  EXPECT_THROW((void)parse_automaton("alphabet 0\nstates 1\nbase 0\n"), ParseError);
  EXPECT_THROW((void)parse_automaton("alphabet 2\nstates 1\nbase 0\nedge 0 -1 0\n"), ParseError);
  EXPECT_THROW((void)parse_automaton("alphabet 2\nstates 1\nbase 0\nedge 0 x 0\n"), ParseError);
  EXPECT_THROW((void)parse_automaton("alphabet 2\nstates 1\nbase 0\nvertex 0\n"), ParseError);
  EXPECT_THROW((void)parse_automaton("alphabet 2\nstates 1\nbase 0\nedge 0 1\n"), ParseError);
  // letter 3 in a rank-2 alphabet, a clash, and a disconnected state
  EXPECT_THROW((void)parse_automaton("alphabet 2\nstates 1\nbase 0\nedge 0 3 0\n"), Error);
  EXPECT_THROW((void)parse_automaton("alphabet 2\nstates 2\nbase 0\nedge 0 1 0\nedge 0 1 1\n"),
               InvalidArgument);
  EXPECT_THROW((void)parse_automaton("alphabet 2\nstates 2\nbase 0\nedge 0 1 0\n"),
               InvalidArgument);
}

TEST(Dot, Shape) {
  std::string dot = write_dot(gamma(kTwo, "ab"));
  EXPECT_NE(dot.find("digraph"), std::string::npos);
  EXPECT_NE(dot.find("0 [shape=doublecircle]"), std::string::npos);
  EXPECT_NE(dot.find("0 -> 1 [label=\"a\"]"), std::string::npos);
  EXPECT_NE(dot.find("1 -> 0 [label=\"b\"]"), std::string::npos);
}

TEST(Dot, ParseErrors) {
  EXPECT_THROW((void)parse_dot("digraph g {\n 0 [shape=doublecircle];\n}\n"), ParseError);
  EXPECT_THROW((void)parse_dot("digraph g {\n // alphabet 2\n 0 [shape=doublecircle];\n"
                               " 0 -> 0 [label=\"A\"];\n}\n"),
               ParseError);
  EXPECT_THROW((void)parse_dot("digraph g {\n // alphabet 2\n 0 [shape=doublecircle];\n"
                               " 0 -> 0;\n}\n"),
               ParseError);
}

TEST(IoProperties, RoundTripsPreserveDigest) {
  testing::Rng rng(3);
  for (int iter = 0; iter < 150; ++iter) {
    Alphabet alpha(testing::uniform(rng, 1, iter % 10 == 0 ? 30 : 3));
    auto a = stallings_graph(testing::random_tuple(rng, alpha, 3, 15), alpha);
    auto digest = canonical_form(a).digest;
    EXPECT_EQ(canonical_form(parse_automaton(write_automaton(a))).digest, digest);
    EXPECT_EQ(canonical_form(parse_dot(write_dot(a))).digest, digest);
  }
}

TEST(Witness, Format) {
  auto gens = parse_words("ab", kTwo);
  auto v = is_free_factor_of_free(gens, kTwo);
  EXPECT_EQ(write_witness(*v.witness, *v.complement), "identify 0 1 adds a\ncomplement: a\n");
  SearchWitness empty;
  EXPECT_EQ(write_witness(empty, {}), "complement: \n");
}

}  // namespace
}  // namespace stallings

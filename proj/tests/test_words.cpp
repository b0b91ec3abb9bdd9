#include <gtest/gtest.h>

#include "stallings/errors.hpp"
#include "stallings/words.hpp"
#include "support/random_instances.hpp"

namespace stallings {
namespace {

const Alphabet kTwo(2);
const Alphabet kThree(3);

Word w2(std::string_view s) { return parse_word(s, kTwo); }
Word w3(std::string_view s) { return parse_word(s, kThree); }

TEST(Letter, InverseIsInvolution) {
  for (int i : {1, -1, 2, -2, 7}) {
    EXPECT_EQ(Letter(i).inverse().inverse(), Letter(i));
  }
}

TEST(Letter, SlotOrderAlternatesSigns) {
  EXPECT_EQ(Letter(1).slot(), 0u);
  EXPECT_EQ(Letter(-1).slot(), 1u);
  EXPECT_EQ(Letter(2).slot(), 2u);
  EXPECT_EQ(Letter(-2).slot(), 3u);
  for (std::size_t s = 0; s < 8; ++s) {
    EXPECT_EQ(Letter::from_slot(s).slot(), s);
  }
}

TEST(Alphabet, RejectsEmpty) { EXPECT_THROW(Alphabet(0), InvalidArgument); }

TEST(Reduce, Examples) {
  EXPECT_EQ(to_string(reduce(w2("aA"))), "");
  EXPECT_EQ(to_string(reduce(w2("abB"))), "a");
  EXPECT_EQ(to_string(reduce(w2("abBAab"))), "ab");
}

TEST(Invert, Examples) {
  EXPECT_EQ(to_string(invert(w2(""))), "");
  EXPECT_EQ(to_string(invert(w2("ab"))), "BA");
  EXPECT_EQ(to_string(invert(w3("aBc"))), "CbA");
}

TEST(Multiply, Examples) {
  EXPECT_EQ(to_string(multiply(w2("ab"), w2("BA"))), "");
  EXPECT_EQ(to_string(multiply(w2("ab"), w2("a"))), "aba");
  EXPECT_EQ(to_string(multiply(w3("ab"), w3("Bc"))), "ac");
}

TEST(Multiply, AlphabetMismatchThrows) {
  EXPECT_THROW((void)multiply(w2("a"), w3("a")), AlphabetError);
}

TEST(ParseWord, Compact) {
  Word w = parse_word("abA", kTwo);
  ASSERT_EQ(w.size(), 3u);
  EXPECT_EQ(w[0].index(), 1);
  EXPECT_EQ(w[1].index(), 2);
  EXPECT_EQ(w[2].index(), -1);
}

TEST(ParseWord, Numeric) {
  Word w = parse_word("3 -1", kThree, WordSyntax::numeric);
  ASSERT_EQ(w.size(), 2u);
  EXPECT_EQ(w[0].index(), 3);
  EXPECT_EQ(w[1].index(), -1);
}

TEST(ParseWord, KeepsCancellations) { EXPECT_EQ(parse_word("aA", kTwo).size(), 2u); }

TEST(ParseWord, Errors) {
  EXPECT_THROW((void)parse_word("c", kTwo), ParseError);
  EXPECT_THROW((void)parse_word("a?", kTwo), ParseError);
  EXPECT_THROW((void)parse_word("0", kTwo, WordSyntax::numeric), ParseError);
  EXPECT_THROW((void)parse_word("4", kThree, WordSyntax::numeric), ParseError);
  EXPECT_THROW((void)parse_word("1x", kThree, WordSyntax::numeric), ParseError);
  EXPECT_THROW((void)parse_word("a", Alphabet(27)), ParseError);
}

TEST(ParseWord, IdentitySpellings) {
  EXPECT_TRUE(parse_word("", kTwo).empty());
  EXPECT_TRUE(parse_word("1", kTwo).empty());
  EXPECT_TRUE(parse_word("  ", kTwo, WordSyntax::numeric).empty());
}

TEST(ParseWords, CommaSeparated) {
  auto ws = parse_words("a,baB", kTwo);
  ASSERT_EQ(ws.size(), 2u);
  EXPECT_EQ(to_string(ws[1]), "baB");
  EXPECT_TRUE(parse_words("", kTwo).empty());
  auto numeric = parse_words("1 2,-2", kTwo, WordSyntax::numeric);
  ASSERT_EQ(numeric.size(), 2u);
  EXPECT_EQ(to_string(numeric[0]), "ab");
}

TEST(ToString, LargeAlphabetFallsBackToNumeric) {
  Alphabet big(30);
  Word w(big, {30, -2});
  EXPECT_EQ(to_string(w), "30 -2");
}

TEST(WordOrder, Shortlex) {
  EXPECT_LT(w2("b"), w2("aa"));
  EXPECT_LT(w2("a"), w2("A"));
  EXPECT_LT(w2("A"), w2("b"));
}

// Randomized algebraic properties.
TEST(WordProperties, ReductionLaws) {
  testing::Rng rng(7);
  for (int iter = 0; iter < 500; ++iter) {
    Alphabet alpha(testing::uniform(rng, 1, 3));
    Word u = testing::random_word(rng, alpha, testing::uniform(rng, 0, 12));
    Word v = testing::random_word(rng, alpha, testing::uniform(rng, 0, 12));
    Word ru = reduce(u);
    EXPECT_TRUE(ru.is_reduced());
    EXPECT_EQ(reduce(ru), ru);
    EXPECT_LE(ru.size(), u.size());
    EXPECT_EQ((u.size() - ru.size()) % 2, 0u);
    EXPECT_EQ(u.is_reduced(), reduce(u) == u);
    EXPECT_TRUE(multiply(u, invert(u)).empty());
    EXPECT_EQ(invert(invert(u)), u);
    EXPECT_EQ(reduce(invert(concatenate(u, v))), reduce(concatenate(invert(v), invert(u))));
    EXPECT_EQ(invert(ru).is_reduced(), true);
    Word x = testing::random_word(rng, alpha, testing::uniform(rng, 0, 6));
    EXPECT_EQ(multiply(multiply(u, v), x), multiply(u, multiply(v, x)));
  }
}

TEST(WordProperties, TextRoundTrip) {
  testing::Rng rng(11);
  for (int iter = 0; iter < 200; ++iter) {
    Alphabet alpha(testing::uniform(rng, 1, 26));
    Word u = testing::random_word(rng, alpha, testing::uniform(rng, 0, 10));
    EXPECT_EQ(parse_word(to_string(u, WordSyntax::compact), alpha), u);
    EXPECT_EQ(parse_word(to_string(u, WordSyntax::numeric), alpha, WordSyntax::numeric), u);
  }
}

}  // namespace
}  // namespace stallings

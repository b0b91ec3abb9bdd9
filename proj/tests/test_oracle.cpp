#include <gtest/gtest.h>

#include "stallings/errors.hpp"
#include "stallings/freefactor.hpp"
#include "stallings/oracle.hpp"
#include "support/random_instances.hpp"

namespace stallings {
namespace {

const Alphabet kOne(1);
const Alphabet kTwo(2);

std::vector<Word> words(Alphabet alpha, std::string_view text) { return parse_words(text, alpha); }

TEST(GeneratesWhole, Examples) {
  EXPECT_TRUE(generates_whole(words(kTwo, "a,b"), kTwo));
  EXPECT_FALSE(generates_whole(words(kTwo, "aa,b"), kTwo));
  EXPECT_TRUE(generates_whole(words(kTwo, "ab,b"), kTwo));
  EXPECT_FALSE(generates_whole(words(kTwo, "a"), kTwo));
}

TEST(ReducedWords, CountsAndOrder) {
  auto ws = reduced_words_up_to(kTwo, 3);
  // 4 + 12 + 36
  EXPECT_EQ(ws.size(), 52u);
  EXPECT_EQ(to_string(ws[0]), "a");
  EXPECT_EQ(to_string(ws[1]), "A");
  EXPECT_EQ(to_string(ws[4]), "aa");
  EXPECT_EQ(to_string(ws[5]), "ab");
  for (std::size_t i = 1; i < ws.size(); ++i) {
    EXPECT_LT(ws[i - 1], ws[i]);
    EXPECT_TRUE(ws[i].is_reduced());
  }
}

TEST(FedererJonsson, Examples) {
  EXPECT_EQ(federer_jonsson(words(kTwo, "ab"), kTwo), OracleVerdict::yes);
  EXPECT_EQ(federer_jonsson(words(kOne, "aa"), kOne), OracleVerdict::no);
  EXPECT_EQ(federer_jonsson(words(kTwo, "abAB"), kTwo), OracleVerdict::no);
  EXPECT_EQ(federer_jonsson(words(kTwo, "a"), kTwo), OracleVerdict::yes);
  EXPECT_EQ(federer_jonsson(words(kTwo, "aa,b"), kTwo), OracleVerdict::no);
  EXPECT_EQ(federer_jonsson(words(kTwo, ""), kTwo), OracleVerdict::yes);
  EXPECT_EQ(federer_jonsson(words(kTwo, "aa,b,abA"), kTwo), OracleVerdict::no);
}

TEST(FedererJonsson, BudgetGivesInconclusive) {
  auto gens = words(Alphabet(3), "abcABCab");
  EXPECT_EQ(federer_jonsson(gens, Alphabet(3), OracleBudget{64, 10}), OracleVerdict::inconclusive);
  EXPECT_EQ(federer_jonsson(gens, Alphabet(3), OracleBudget{4, 1000}),
            OracleVerdict::inconclusive);
  EXPECT_THROW((void)federer_jonsson(gens, Alphabet(3), OracleBudget{0, 1}), InvalidArgument);
}

TEST(UnprunedSearch, Examples) {
  EXPECT_EQ(unpruned_istep_search(words(kTwo, "ab"), kTwo), OracleVerdict::yes);
  EXPECT_EQ(unpruned_istep_search(words(kOne, "aa"), kOne), OracleVerdict::no);
  EXPECT_EQ(unpruned_istep_search(words(kTwo, "a,b"), kTwo), OracleVerdict::yes);
  EXPECT_EQ(unpruned_istep_search(words(kTwo, "aa,b,abA"), kTwo), OracleVerdict::no);
  EXPECT_EQ(unpruned_istep_search(words(kTwo, "abAB"), kTwo, OracleBudget{64, 1}),
            OracleVerdict::inconclusive);
}

TEST(OracleAgreement, SmallRandomSample) {
  testing::Rng rng(5);
  int compared = 0;
  for (int iter = 0; iter < 150; ++iter) {
    Alphabet alpha(testing::uniform(rng, 1, 3));
    auto gens = testing::random_tuple(rng, alpha, 3, 6);
    bool main = is_free_factor_of_free(gens, alpha).is_free_factor;
    auto fj = federer_jonsson(gens, alpha, OracleBudget{64, 20000});
    auto unpruned = unpruned_istep_search(gens, alpha);
    ASSERT_NE(unpruned, OracleVerdict::inconclusive);
    EXPECT_EQ(to_verdict(main), unpruned) << join(gens);
    if (fj != OracleVerdict::inconclusive) {
      ++compared;
      EXPECT_EQ(to_verdict(main), fj) << join(gens);
    }
  }
  EXPECT_GT(compared, 100);
}

TEST(OracleAgreement, ComplementCompletesBasis) {
  testing::Rng rng(6);
  for (int iter = 0; iter < 200; ++iter) {
    Alphabet alpha(testing::uniform(rng, 1, 3));
    auto gens = testing::random_tuple(rng, alpha, 3, 8);
    auto v = is_free_factor_of_free(gens, alpha);
    if (!v.is_free_factor) continue;
    auto all = spanning_tree_basis(stallings_graph(gens, alpha)).words;
    all.insert(all.end(), v.complement->begin(), v.complement->end());
    EXPECT_EQ(all.size(), alpha.size());
    EXPECT_TRUE(generates_whole(all, alpha)) << join(gens);
  }
}

}  // namespace
}  // namespace stallings

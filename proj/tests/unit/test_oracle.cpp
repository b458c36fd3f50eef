#include <gtest/gtest.h>

#include "psdthrottle/error.hpp"
#include "psdthrottle/generators.hpp"
#include "psdthrottle/throttling.hpp"
#include "support.hpp"

namespace psdthrottle {
namespace {

void expect_search_matches_oracle(const Graph& g) {
  const OracleRecord o = oracle_all(g);
  const ThrottlingSummary s = summarize(g);
  const std::string id = encode_graph6(g);
  ASSERT_EQ(s.z_plus.value, o.z_plus) << id;
  ASSERT_EQ(s.pt_plus.value, o.pt_plus) << id;
  ASSERT_EQ(s.th_sum.value, o.th_sum) << id;
  ASSERT_EQ(s.th_times.value, o.th_times) << id;
  ASSERT_EQ(s.th_star.has_value(), o.th_star.has_value()) << id;
  if (o.th_star) ASSERT_EQ(s.th_star->value, *o.th_star) << id;
  for (int k = 1; k <= g.order(); ++k) ASSERT_EQ(pt_k(g, k).value, o.pt_by_k[k]) << id << " k=" << k;
}

TEST(Oracle, AgreesWithSearchOnConnectedCorpus) {
  for (const Graph& g : testing::corpus_upto(7, true)) expect_search_matches_oracle(g);
}

TEST(Oracle, AgreesWithSearchOnDisconnectedGraphs) {
  for (const Graph& g : testing::corpus_upto(6, false)) {
    if (!is_connected(g)) expect_search_matches_oracle(g);
  }
}

TEST(Oracle, ReferenceValues) {
  const OracleRecord p7 = oracle_all(path(7));
  EXPECT_EQ(p7.z_plus, 1);
  EXPECT_EQ(p7.pt_plus, 3);
  EXPECT_EQ(p7.th_sum, 4);
  EXPECT_EQ(p7.th_times, 4);
  EXPECT_EQ(p7.th_star, 3);
  const std::vector<ExtendedInt> p7_pt = {ExtendedInt::infinity(), 3, 2, 1, 1, 1, 1, 0};
  EXPECT_EQ(p7.pt_by_k, p7_pt);

  const OracleRecord c12 = oracle_all(cycle(12));
  EXPECT_EQ(c12.z_plus, 2);
  EXPECT_EQ(c12.pt_plus, 3);
  EXPECT_EQ(c12.th_sum, 5);
  EXPECT_EQ(c12.th_times, 8);
  EXPECT_EQ(c12.th_star, 4);
  const std::vector<ExtendedInt> c12_pt = {ExtendedInt::infinity(), ExtendedInt::infinity(), 3, 2, 1, 1, 1, 1, 1, 1, 1,
                                           1, 0};
  EXPECT_EQ(c12.pt_by_k, c12_pt);

  const OracleRecord pet = oracle_all(decode_graph6("IheA@GUAo"));
  EXPECT_EQ(pet.z_plus, 4);
  EXPECT_EQ(pet.pt_plus, 1);
  EXPECT_EQ(pet.th_sum, 5);
  EXPECT_EQ(pet.th_times, 8);
  EXPECT_EQ(pet.th_star, 4);

  const OracleRecord p4 = oracle_all(path(4));
  EXPECT_EQ(p4.z_plus, 1);
  EXPECT_EQ(p4.th_times, 3);

  const OracleRecord k1 = oracle_all(Graph(1));
  EXPECT_EQ(k1.z_plus, 1);
  EXPECT_EQ(k1.th_times, 1);
  EXPECT_FALSE(k1.th_star.has_value());
}

TEST(Oracle, Limits) {
  EXPECT_THROW(oracle_all(cycle(13)), SizeError);
  EXPECT_THROW(oracle_all(Graph(0)), ParameterError);
}

}  // namespace
}  // namespace psdthrottle

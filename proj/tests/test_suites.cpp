#include <gtest/gtest.h>

#include "linecover/suites.hpp"

using namespace linecover::suites;

TEST(Suites, RegistryNames) {
  std::vector<std::string> names;
  for (const auto& [name, fn] : registry()) names.push_back(name);
  EXPECT_EQ(names, (std::vector<std::string>{"lemma1", "lemma3", "lemma4", "lemma5", "lemma6", "lemma7", "lemma8", "lemma9"}));
}

TEST(Suites, SmallRunsPass) {
  SuiteOptions o;
  o.seed = 7;
  o.cases = 25;
  o.index = 2;
  for (const auto& [name, fn] : registry()) {
    const SuiteReport rep = fn(o);
    EXPECT_TRUE(rep.passed()) << name << " failures=" << rep.failures();
    EXPECT_EQ(rep.seed, 7u);
  }
}

TEST(Suites, SameSeedSameCases) {
  SuiteOptions o;
  o.seed = 42;
  o.cases = 50;
  const auto a = lemma1(o), b = lemma1(o);
  ASSERT_EQ(a.cases.size(), b.cases.size());
  for (std::size_t i = 0; i < a.cases.size(); ++i) EXPECT_EQ(a.cases[i].detail, b.cases[i].detail);
}

// Copyright 2026 The circorbit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "circorbit/words.hpp"

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "gtest/gtest.h"

#include "circorbit/errors.hpp"

namespace circorbit {
namespace {

// Brute-force helpers working on plain strings over {a, b}.

std::string word_of(std::uint32_t mask, int l) {
  std::string s(static_cast<std::size_t>(l), 'a');
  for (int i = 0; i < l; ++i) {
    if (mask >> (l - 1 - i) & 1u) s[static_cast<std::size_t>(i)] = 'b';
  }
  return s;
}

std::string naive_rotate(const std::string& s, std::size_t r) {
  return s.substr(r) + s.substr(0, r);
}

bool naive_primitive(const std::string& s) {
  for (std::size_t r = 1; r < s.size(); ++r) {
    if (naive_rotate(s, r) == s) return false;
  }
  return true;
}

bool naive_lyndon(const std::string& s) {
  for (std::size_t r = 1; r < s.size(); ++r) {
    if (!(s < naive_rotate(s, r))) return false;
  }
  return true;
}

std::set<std::string> powers_of(int l, int k, int p) {
  std::set<std::string> out;
  if (l % p != 0 || k % p != 0) return out;
  const int m = l / p;
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    if (__builtin_popcount(mask) != k / p) continue;
    std::string x = word_of(mask, m), w;
    for (int i = 0; i < p; ++i) w += x;
    out.insert(w);
  }
  return out;
}

bool includes(const std::set<std::string>& big, const std::set<std::string>& small) {
  for (const auto& s : small) {
    if (!big.count(s)) return false;
  }
  return true;
}

TEST(Word, ParseAndPrint) {
  const Word w = Word::parse("aab");
  EXPECT_EQ(w.length(), 3u);
  EXPECT_EQ(w.b_count(), 1u);
  EXPECT_EQ(w.to_string(), "aab");
  EXPECT_EQ(w.to_string(StepAlphabet{1, 4}), "114");
  EXPECT_EQ(Word::parse("114", StepAlphabet{1, 4}), w);
  EXPECT_EQ(Word::parse("aab", StepAlphabet{1, 4}), w);
  EXPECT_EQ(w.to_string(StepAlphabet{5, 14}), "5,5,14");
  EXPECT_EQ(Word::parse("5,5,14", StepAlphabet{5, 14}), w);
  EXPECT_THROW(Word::parse("abc"), InvalidArgument);
  EXPECT_THROW(Word::parse("115", StepAlphabet{1, 4}), InvalidArgument);
}

TEST(Word, OrderIsLexicographicWithPrefixFirst) {
  EXPECT_LT(Word::parse("aab"), Word::parse("aba"));
  EXPECT_LT(Word::parse("ab"), Word::parse("aba"));
  EXPECT_LT(Word::parse("a"), Word::parse("b"));
  EXPECT_EQ(Word::parse("abb") <=> Word::parse("abb"), std::strong_ordering::equal);
}

TEST(Word, NextArrangementVisitsEveryWordInOrder) {
  for (int l = 1; l <= 10; ++l) {
    for (int k = 0; k <= l; ++k) {
      std::vector<std::string> expected;
      for (std::uint32_t mask = 0; mask < (1u << l); ++mask) {
        if (__builtin_popcount(mask) == k) expected.push_back(word_of(mask, l));
      }
      std::vector<std::string> seen;
      Word w = Word::sorted(static_cast<std::size_t>(l), static_cast<std::size_t>(k));
      do {
        seen.push_back(w.to_string());
      } while (w.next_arrangement());
      ASSERT_EQ(seen, expected) << l << "," << k;
      ASSERT_EQ(w, Word::sorted(static_cast<std::size_t>(l), static_cast<std::size_t>(k)));
    }
  }
}

TEST(Rotate, Examples) {
  EXPECT_EQ(rotate(Word::parse("aab"), 1).to_string(), "aba");
  EXPECT_EQ(rotate(Word::parse("aab"), 0).to_string(), "aab");
  EXPECT_EQ(rotate(Word::parse("abb"), 3).to_string(), "abb");
  EXPECT_EQ(rotate(Word::parse("aab"), -1).to_string(), "baa");
}

TEST(Decompose, Examples) {
  const auto cube = decompose(Word::parse("114114114", StepAlphabet{1, 4}));
  EXPECT_EQ(cube.root.to_string(), "aab");
  EXPECT_EQ(cube.repetition, 3u);

  const auto prim = decompose(Word::parse("aabab"));
  EXPECT_EQ(prim.root.to_string(), "aabab");
  EXPECT_EQ(prim.repetition, 1u);

  const auto tenth = decompose(Word::parse("abb").power(10));
  EXPECT_EQ(tenth.root.to_string(), "abb");
  EXPECT_EQ(tenth.repetition, 10u);

  EXPECT_THROW(decompose(Word{}), InvalidArgument);
}

TEST(Decompose, RootPowerReproducesWord) {
  for (int l = 1; l <= 14; ++l) {
    for (std::uint32_t mask = 0; mask < (1u << l); ++mask) {
      const std::string s = word_of(mask, l);
      const auto dec = decompose(Word::parse(s));
      ASSERT_EQ(dec.root.power(dec.repetition).to_string(), s);
      ASSERT_EQ(naive_primitive(dec.root.to_string()), true) << s;
      ASSERT_EQ(dec.repetition == 1, naive_primitive(s)) << s;
    }
  }
}

TEST(IsLyndon, Examples) {
  EXPECT_TRUE(is_lyndon(Word::parse("111111444", StepAlphabet{1, 4})));
  EXPECT_FALSE(is_lyndon(Word::parse("aba")));
  EXPECT_FALSE(is_lyndon(Word::parse("abab")));
  EXPECT_TRUE(is_lyndon(Word::parse("a")));
  EXPECT_TRUE(is_lyndon(Word::parse("b")));
  EXPECT_FALSE(is_lyndon(Word::parse("aa")));
}

TEST(IsLyndon, MatchesNaiveDefinition) {
  for (int l = 1; l <= 14; ++l) {
    for (std::uint32_t mask = 0; mask < (1u << l); ++mask) {
      const std::string s = word_of(mask, l);
      ASSERT_EQ(is_lyndon(Word::parse(s)), naive_lyndon(s)) << s;
    }
  }
}

TEST(LyndonRotation, Examples) {
  EXPECT_EQ(lyndon_rotation(Word::parse("aba"))->to_string(), "aab");
  EXPECT_FALSE(lyndon_rotation(Word::parse("abab")).has_value());
  EXPECT_EQ(lyndon_rotation(Word::parse("baa"))->to_string(), "aab");
}

TEST(LyndonRotation, IsMinimalRotationOfPrimitiveWords) {
  for (int l = 1; l <= 12; ++l) {
    for (std::uint32_t mask = 0; mask < (1u << l); ++mask) {
      const std::string s = word_of(mask, l);
      const auto lyn = lyndon_rotation(Word::parse(s));
      if (!naive_primitive(s)) {
        ASSERT_FALSE(lyn.has_value()) << s;
        continue;
      }
      std::string least = s;
      for (std::size_t r = 1; r < s.size(); ++r) least = std::min(least, naive_rotate(s, r));
      ASSERT_TRUE(lyn.has_value()) << s;
      ASSERT_EQ(lyn->to_string(), least) << s;
    }
  }
}

TEST(CountLyndon, Examples) {
  EXPECT_EQ(count_lyndon(9, 3), BigCount(9));
  EXPECT_EQ(count_lyndon(1, 0), BigCount(1));
  EXPECT_EQ(count_lyndon(1, 1), BigCount(1));
  for (int l = 2; l <= 12; ++l) {
    EXPECT_EQ(count_lyndon(l, 0), BigCount(0)) << l;
    EXPECT_EQ(count_lyndon(l, l), BigCount(0)) << l;
  }
  EXPECT_EQ(count_lyndon(4, 2), BigCount(1));
  EXPECT_THROW(count_lyndon(3, 4), InvalidArgument);
  EXPECT_THROW(count_lyndon(0, 0), InvalidArgument);
}

TEST(CountLyndon, AgreesWithBruteForce) {
  for (int l = 1; l <= 16; ++l) {
    std::map<int, std::uint64_t> by_k;
    for (std::uint32_t mask = 0; mask < (1u << l); ++mask) {
      const std::string s = word_of(mask, l);
      if (naive_lyndon(s)) ++by_k[__builtin_popcount(mask)];
    }
    for (int k = 0; k <= l; ++k) {
      ASSERT_EQ(count_lyndon(l, k), BigCount(by_k[k])) << l << "," << k;
    }
  }
}

TEST(CountLyndon, SumsToUnrestrictedBinaryCount) {
  for (std::int64_t l = 1; l <= 30; ++l) {
    BigInt classic = 0;
    for (std::uint64_t m : divisors(static_cast<std::uint64_t>(l))) {
      classic += moebius(m) * (BigInt(1) << static_cast<unsigned>(l / static_cast<std::int64_t>(m)));
    }
    classic /= l;
    BigCount sum;
    for (std::int64_t k = 0; k <= l; ++k) sum += count_lyndon(l, k);
    ASSERT_EQ(sum.value(), classic) << l;
  }
}

TEST(CountNonprimitive, Examples) {
  EXPECT_EQ(count_nonprimitive(9, 3), BigCount(3));
  EXPECT_EQ(count_nonprimitive(5, 2), BigCount(0));
  // Brute force over W_2(6,4): abbabb, babbab, bbabba.
  EXPECT_EQ(count_nonprimitive(6, 4), BigCount(3));
  EXPECT_EQ(count_nonprimitive(4, 0), BigCount(1));
}

TEST(CountNonprimitive, MatchesDirectGenerationUpTo18) {
  for (int l = 1; l <= 18; ++l) {
    std::vector<std::uint64_t> nonprimitive(static_cast<std::size_t>(l) + 1, 0);
    for (std::uint32_t mask = 0; mask < (1u << l); ++mask) {
      if (!is_primitive(Word::parse(word_of(mask, l)))) {
        ++nonprimitive[static_cast<std::size_t>(__builtin_popcount(mask))];
      }
    }
    for (int k = 0; k <= l; ++k) {
      ASSERT_EQ(count_nonprimitive(l, k), BigCount(nonprimitive[static_cast<std::size_t>(k)]))
          << l << "," << k;
    }
  }
}

TEST(CountNonprimitive, BruteForceAtSixFour) {
  std::uint64_t count = 0;
  for (std::uint32_t mask = 0; mask < 64; ++mask) {
    if (__builtin_popcount(mask) == 4 && !naive_primitive(word_of(mask, 6))) ++count;
  }
  EXPECT_EQ(count, 3u);
}

TEST(WordCounts, LyndonAndNonprimitivePartitionBinomial) {
  for (std::int64_t l = 1; l <= 40; ++l) {
    for (std::int64_t k = 0; k <= l; ++k) {
      ASSERT_EQ(BigCount(BigInt(l * count_lyndon(l, k).value())) + count_nonprimitive(l, k),
                binomial(l, k))
          << l << "," << k;
    }
  }
}

TEST(ListLyndon, FigureWordsForNineThree) {
  const std::vector<std::string> expected{"111111444", "111114144", "111114414",
                                          "111141144", "111141414", "111144114",
                                          "111411144", "111411414", "111414114"};
  std::vector<std::string> got;
  for (const Word& w : list_lyndon(9, 3)) got.push_back(w.to_string(StepAlphabet{1, 4}));
  EXPECT_EQ(got, expected);
}

TEST(ListLyndon, SmallExamples) {
  const auto one = list_lyndon(1, 1);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0].to_string(), "b");
  const auto three = list_lyndon(3, 1);
  ASSERT_EQ(three.size(), 1u);
  EXPECT_EQ(three[0].to_string(), "aab");
  EXPECT_THROW(list_lyndon(40, 20, 1000), BudgetExceeded);
}

TEST(ListLyndon, ExhaustiveUpTo18) {
  for (std::int64_t l = 1; l <= 18; ++l) {
    for (std::int64_t k = 0; k <= l; ++k) {
      const auto words = list_lyndon(l, k);
      ASSERT_EQ(BigCount(words.size()), count_lyndon(l, k)) << l << "," << k;
      for (std::size_t i = 0; i < words.size(); ++i) {
        ASSERT_TRUE(is_lyndon(words[i]));
        ASSERT_EQ(decompose(words[i]).repetition, 1u);
        ASSERT_EQ(words[i].b_count(), static_cast<std::size_t>(k));
        if (i > 0) ASSERT_LT(words[i - 1], words[i]);
      }
    }
  }
}

// P^c_2(l,k,p1) ⊆ P^c_2(l,k,p2) exactly when p2 | p1, for divisors p1, p2 > 1
// of gcd(l, k).
TEST(NonprimitiveContainment, HoldsExactlyForDivisorPairs) {
  struct Case {
    int l, k, p1, p2;
  };
  const std::vector<Case> cases{
      {12, 6, 6, 2}, {12, 6, 6, 3}, {12, 6, 2, 3}, {12, 6, 3, 2}, {12, 6, 2, 6}, {12, 6, 3, 6},
      {24, 12, 4, 2}, {24, 12, 6, 2}, {24, 12, 6, 3}, {24, 12, 4, 3}, {24, 12, 6, 4},
      {24, 12, 12, 4}, {24, 12, 12, 6}, {24, 12, 2, 4},
  };
  for (const Case& c : cases) {
    const auto s1 = powers_of(c.l, c.k, c.p1);
    const auto s2 = powers_of(c.l, c.k, c.p2);
    ASSERT_FALSE(s1.empty());
    ASSERT_FALSE(s2.empty());
    EXPECT_EQ(includes(s2, s1), c.p1 % c.p2 == 0)
        << "l=" << c.l << " k=" << c.k << " p1=" << c.p1 << " p2=" << c.p2;
  }
}

TEST(NonprimitiveIntersection, CoprimePowersIntersectInProduct) {
  const auto twos = powers_of(30, 20, 2);
  const auto fives = powers_of(30, 20, 5);
  const auto tens = powers_of(30, 20, 10);
  std::set<std::string> both;
  for (const auto& s : twos) {
    if (fives.count(s)) both.insert(s);
  }
  EXPECT_EQ(both, tens);
  EXPECT_TRUE(tens.count(Word::parse("abb").power(10).to_string()));
}

}  // namespace
}  // namespace circorbit

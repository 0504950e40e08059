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

#ifndef CIRCORBIT_WORDS_HPP_
#define CIRCORBIT_WORDS_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "circorbit/numtheory.hpp"

namespace circorbit {

// Letters of the binary alphabet, ordered a < b. Letter `a` stands for the
// smaller step of a circulant graph and `b` for the larger one.
enum class Letter : bool { a = false, b = true };

// Binds letters to step sizes for the digit notation used by graph-aware
// commands ("114" for the word aab on C_9(1,4)).
struct StepAlphabet {
  std::int64_t a;
  std::int64_t b;
};

// Finite word over {a, b}, stored as a bit sequence with a = 0, b = 1.
//
// Ordering is lexicographic on letters with a proper prefix preceding all of
// its extensions.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters);

  // Parses a string over {a, b}. Throws InvalidArgument on any other character.
  static Word parse(std::string_view text);
  // Parses step notation for `steps`: either a digit string such as "114"
  // (only when both steps are single digits) or a comma-separated list such
  // as "5,14,14". Also accepts the {a, b} form.
  static Word parse(std::string_view text, const StepAlphabet& steps);

  // a^(l-k) b^k, the least word of W_2(l, k).
  static Word sorted(std::size_t length, std::size_t b_count);

  std::size_t length() const { return bits_.size(); }
  std::size_t b_count() const;
  bool empty() const { return bits_.empty(); }
  Letter operator[](std::size_t i) const { return bits_[i] ? Letter::b : Letter::a; }

  std::string to_string() const;
  std::string to_string(const StepAlphabet& steps) const;

  // w^r.
  Word power(std::size_t r) const;

  // Steps to the lexicographically next arrangement with the same b-count.
  // Returns false, leaving the word sorted again, after the last arrangement.
  bool next_arrangement();

  friend bool operator==(const Word&, const Word&) = default;
  friend std::strong_ordering operator<=>(const Word& lhs, const Word& rhs);

 private:
  std::vector<bool> bits_;
};

struct WordDecomposition {
  Word root;
  std::size_t repetition;
};

// σ^s(w): moves the first s letters to the end, s taken mod l.
Word rotate(const Word& w, std::int64_t s);

// Smallest period p dividing l with w = (w[0..p))^(l/p).
WordDecomposition decompose(const Word& w);

bool is_primitive(const Word& w);

// Strictly smaller than every nontrivial rotation.
bool is_lyndon(const Word& w);

// Index s of the least rotation σ^s(w); the smallest such s on ties.
std::size_t least_rotation_index(const Word& w);

// The Lyndon word in [w], or nullopt for nonprimitive w.
std::optional<Word> lyndon_rotation(const Word& w);

// |L_2(l, k)|, Lyndon words of length l with k letters b.
BigCount count_lyndon(std::int64_t l, std::int64_t k);

// |P^c_2(l, k)|, nonprimitive words of length l with k letters b.
BigCount count_nonprimitive(std::int64_t l, std::int64_t k);

inline constexpr std::uint64_t kDefaultGenerationBudget = std::uint64_t{1} << 28;

// All Lyndon words of length l with b-count k, in lexicographic order.
// Throws BudgetExceeded when l * C(l, k) exceeds `budget`.
std::vector<Word> list_lyndon(std::int64_t l, std::int64_t k,
                              std::uint64_t budget = kDefaultGenerationBudget);

}  // namespace circorbit

#endif  // CIRCORBIT_WORDS_HPP_

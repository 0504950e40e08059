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

#include <algorithm>
#include <charconv>
#include <utility>

#include "circorbit/errors.hpp"

namespace circorbit {

namespace {

void check_length_and_bcount(std::int64_t l, std::int64_t k) {
  if (l < 1) throw InvalidArgument("word length must be positive");
  if (k < 0 || k > l) {
    throw InvalidArgument("b-count must satisfy 0 <= k <= l (k=" + std::to_string(k) +
                          ", l=" + std::to_string(l) + ")");
  }
}

bool single_digit_steps(const StepAlphabet& steps) {
  return steps.a >= 0 && steps.a < 10 && steps.b >= 0 && steps.b < 10;
}

Letter letter_for_step(std::int64_t step, const StepAlphabet& steps) {
  if (step == steps.a) return Letter::a;
  if (step == steps.b) return Letter::b;
  throw InvalidArgument("step " + std::to_string(step) + " is neither " +
                        std::to_string(steps.a) + " nor " + std::to_string(steps.b));
}

}  // namespace

Word::Word(std::vector<Letter> letters) {
  bits_.reserve(letters.size());
  for (Letter c : letters) bits_.push_back(c == Letter::b);
}

Word Word::parse(std::string_view text) {
  Word w;
  w.bits_.reserve(text.size());
  for (char c : text) {
    if (c == 'a') {
      w.bits_.push_back(false);
    } else if (c == 'b') {
      w.bits_.push_back(true);
    } else {
      throw InvalidArgument("invalid letter '" + std::string(1, c) + "' in word \"" +
                            std::string(text) + "\"");
    }
  }
  return w;
}

Word Word::parse(std::string_view text, const StepAlphabet& steps) {
  if (text.find_first_not_of("ab") == std::string_view::npos) return parse(text);
  std::vector<Letter> letters;
  if (text.find(',') != std::string_view::npos || !single_digit_steps(steps)) {
    std::size_t pos = 0;
    while (pos <= text.size()) {
      const std::size_t end = std::min(text.find(',', pos), text.size());
      const std::string_view token = text.substr(pos, end - pos);
      std::int64_t step = 0;
      const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), step);
      if (ec != std::errc{} || ptr != token.data() + token.size() || token.empty()) {
        throw InvalidArgument("invalid step \"" + std::string(token) + "\"");
      }
      letters.push_back(letter_for_step(step, steps));
      pos = end + 1;
    }
  } else {
    for (char c : text) {
      if (c < '0' || c > '9') {
        throw InvalidArgument("invalid step digit '" + std::string(1, c) + "'");
      }
      letters.push_back(letter_for_step(c - '0', steps));
    }
  }
  return Word(std::move(letters));
}

Word Word::sorted(std::size_t length, std::size_t b_count) {
  if (b_count > length) throw InvalidArgument("b-count exceeds word length");
  Word w;
  w.bits_.assign(length, false);
  std::fill(w.bits_.end() - static_cast<std::ptrdiff_t>(b_count), w.bits_.end(), true);
  return w;
}

std::size_t Word::b_count() const {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), true));
}

std::string Word::to_string() const {
  std::string s;
  s.reserve(bits_.size());
  for (bool bit : bits_) s.push_back(bit ? 'b' : 'a');
  return s;
}

std::string Word::to_string(const StepAlphabet& steps) const {
  std::string s;
  const bool digits = single_digit_steps(steps);
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (!digits && i > 0) s.push_back(',');
    s += std::to_string(bits_[i] ? steps.b : steps.a);
  }
  return s;
}

Word Word::power(std::size_t r) const {
  Word w;
  w.bits_.reserve(bits_.size() * r);
  for (std::size_t i = 0; i < r; ++i) w.bits_.insert(w.bits_.end(), bits_.begin(), bits_.end());
  return w;
}

bool Word::next_arrangement() {
  const std::size_t l = bits_.size();
  // Rightmost "ab"; everything after it is of the form b*a*.
  std::size_t i = l;
  for (std::size_t j = l; j-- > 1;) {
    if (!bits_[j - 1] && bits_[j]) {
      i = j - 1;
      break;
    }
  }
  if (i == l) {
    std::sort(bits_.begin(), bits_.end());
    return false;
  }
  bits_[i] = true;
  bits_[i + 1] = false;
  std::sort(bits_.begin() + static_cast<std::ptrdiff_t>(i) + 1, bits_.end());
  return true;
}

std::strong_ordering operator<=>(const Word& lhs, const Word& rhs) {
  const std::size_t common = std::min(lhs.length(), rhs.length());
  for (std::size_t i = 0; i < common; ++i) {
    if (lhs.bits_[i] != rhs.bits_[i]) {
      return lhs.bits_[i] ? std::strong_ordering::greater : std::strong_ordering::less;
    }
  }
  return lhs.length() <=> rhs.length();
}

Word rotate(const Word& w, std::int64_t s) {
  const auto l = static_cast<std::int64_t>(w.length());
  if (l == 0) return w;
  const std::int64_t shift = ((s % l) + l) % l;
  std::vector<Letter> letters;
  letters.reserve(w.length());
  for (std::int64_t i = 0; i < l; ++i) letters.push_back(w[static_cast<std::size_t>((i + shift) % l)]);
  return Word(std::move(letters));
}

WordDecomposition decompose(const Word& w) {
  const std::size_t l = w.length();
  if (l == 0) throw InvalidArgument("cannot decompose the empty word");
  // KMP failure function; l - border is the smallest period.
  std::vector<std::size_t> border(l, 0);
  for (std::size_t i = 1; i < l; ++i) {
    std::size_t j = border[i - 1];
    while (j > 0 && w[i] != w[j]) j = border[j - 1];
    if (w[i] == w[j]) ++j;
    border[i] = j;
  }
  std::size_t period = l - border[l - 1];
  if (l % period != 0) period = l;
  std::vector<Letter> root;
  root.reserve(period);
  for (std::size_t i = 0; i < period; ++i) root.push_back(w[i]);
  return {Word(std::move(root)), l / period};
}

bool is_primitive(const Word& w) { return decompose(w).repetition == 1; }

std::size_t least_rotation_index(const Word& w) {
  const std::size_t l = w.length();
  if (l == 0) return 0;
  std::size_t i = 0, j = 1, k = 0;
  while (i < l && j < l && k < l) {
    const Letter x = w[(i + k) % l];
    const Letter y = w[(j + k) % l];
    if (x == y) {
      ++k;
      continue;
    }
    if (x > y) {
      i += k + 1;
    } else {
      j += k + 1;
    }
    if (i == j) ++j;
    k = 0;
  }
  return std::min(i, j);
}

bool is_lyndon(const Word& w) {
  if (w.empty()) throw InvalidArgument("is_lyndon requires a nonempty word");
  return least_rotation_index(w) == 0 && is_primitive(w);
}

std::optional<Word> lyndon_rotation(const Word& w) {
  if (w.empty()) throw InvalidArgument("lyndon_rotation requires a nonempty word");
  if (!is_primitive(w)) return std::nullopt;
  return rotate(w, static_cast<std::int64_t>(least_rotation_index(w)));
}

BigCount count_lyndon(std::int64_t l, std::int64_t k) {
  check_length_and_bcount(l, k);
  // gcd(l, 0) = l makes the k = 0 and k = l rows fall out of the same sum.
  const auto common = gcd(static_cast<std::uint64_t>(l), static_cast<std::uint64_t>(k));
  BigInt sum = 0;
  for (std::uint64_t m : divisors(common)) {
    const int mu = moebius(m);
    if (mu == 0) continue;
    const auto step = static_cast<std::int64_t>(m);
    sum += mu * binomial(l / step, k / step).value();
  }
  if (sum % l != 0) {
    throw NonIntegerResult("Lyndon count sum " + sum.str() + " not divisible by " +
                           std::to_string(l));
  }
  return BigCount(BigInt(sum / l));
}

BigCount count_nonprimitive(std::int64_t l, std::int64_t k) {
  check_length_and_bcount(l, k);
  const auto common = gcd(static_cast<std::uint64_t>(l), static_cast<std::uint64_t>(k));
  BigInt sum = 0;
  for (std::uint64_t m : divisors(common)) {
    if (m == 1) continue;
    const int mu = moebius(m);
    if (mu == 0) continue;
    const auto step = static_cast<std::int64_t>(m);
    sum -= mu * binomial(l / step, k / step).value();
  }
  return BigCount(std::move(sum));
}

std::vector<Word> list_lyndon(std::int64_t l, std::int64_t k, std::uint64_t budget) {
  check_length_and_bcount(l, k);
  const BigInt work = l * binomial(l, k).value();
  if (work > budget) {
    throw BudgetExceeded("generating L_2(" + std::to_string(l) + "," + std::to_string(k) +
                         ") needs " + work.str() + " letter operations, budget is " +
                         std::to_string(budget));
  }
  std::vector<Word> out;
  Word w = Word::sorted(static_cast<std::size_t>(l), static_cast<std::size_t>(k));
  do {
    if (is_lyndon(w)) out.push_back(w);
  } while (w.next_arrangement());
  return out;
}

}  // namespace circorbit

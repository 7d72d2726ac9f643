#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rauzy/errors.hpp"
#include "rauzy/types.hpp"

namespace rauzy {

// A finite string of letters 0..d-1.  Immutable value type; the empty word
// still carries its alphabet size.
class Word {
 public:
  Word() = default;
  explicit Word(int d) : d_(d) { check_alphabet(d); }
  Word(int d, std::vector<std::uint8_t> letters) : d_(d), letters_(std::move(letters)) {
    check_alphabet(d);
    for (std::uint8_t c : letters_) {
      if (c >= d_) throw std::invalid_argument("Word: letter out of range for alphabet");
    }
  }

  // Digit-string form, e.g. "0102010".  With d < 0 the alphabet size is
  // inferred as max digit + 1 (empty input infers d = 1).
  static Word from_digits(std::string_view text, int d = -1) {
    std::vector<std::uint8_t> letters;
    letters.reserve(text.size());
    int max_letter = -1;
    for (char ch : text) {
      if (ch < '0' || ch > '9') throw std::invalid_argument("Word: expected digit characters");
      const int v = ch - '0';
      max_letter = std::max(max_letter, v);
      letters.push_back(static_cast<std::uint8_t>(v));
    }
    const int alphabet = d >= 0 ? d : std::max(max_letter + 1, 1);
    return Word(alphabet, std::move(letters));
  }

  int alphabet_size() const { return d_; }
  std::int64_t length() const { return static_cast<std::int64_t>(letters_.size()); }
  bool empty() const { return letters_.empty(); }
  std::uint8_t letter(std::int64_t i) const { return letters_.at(static_cast<std::size_t>(i)); }
  const std::vector<std::uint8_t>& letters() const { return letters_; }

  std::string to_digits() const {
    if (d_ > 10) throw std::invalid_argument("Word: digit form requires d <= 10");
    std::string s;
    s.reserve(letters_.size());
    for (std::uint8_t c : letters_) s.push_back(static_cast<char>('0' + c));
    return s;
  }

  friend bool operator==(const Word&, const Word&) = default;

 private:
  static void check_alphabet(int d) {
    if (d < 1) throw std::invalid_argument("Word: alphabet size must be >= 1");
  }

  int d_ = 1;
  std::vector<std::uint8_t> letters_;
};

inline Word concat(const Word& a, const Word& b) {
  if (a.alphabet_size() != b.alphabet_size()) {
    throw std::invalid_argument("concat: alphabet sizes differ");
  }
  std::vector<std::uint8_t> letters;
  letters.reserve(a.letters().size() + b.letters().size());
  letters.insert(letters.end(), a.letters().begin(), a.letters().end());
  letters.insert(letters.end(), b.letters().begin(), b.letters().end());
  return Word(a.alphabet_size(), std::move(letters));
}

// First `len` characters; len = 0 yields the empty word.
inline Word prefix(const Word& w, std::int64_t len) {
  if (len < 0 || len > w.length()) throw std::out_of_range("prefix: length out of range");
  return Word(w.alphabet_size(),
              std::vector<std::uint8_t>(w.letters().begin(), w.letters().begin() + len));
}

// Counts of each letter, as an exact integer vector.
inline LatticeVec word_vector(const Word& w) {
  LatticeVec v = LatticeVec::Zero(w.alphabet_size());
  for (std::uint8_t c : w.letters()) ++v[c];
  return v;
}

// A map sending each single letter to a nonempty word on the same alphabet.
class Substitution {
 public:
  Substitution(int d, std::vector<Word> rules) : d_(d), rules_(std::move(rules)) {
    if (d < 1) throw std::invalid_argument("Substitution: alphabet size must be >= 1");
    if (static_cast<int>(rules_.size()) != d) {
      throw std::invalid_argument("Substitution: expected exactly d rules");
    }
    for (const Word& r : rules_) {
      if (r.alphabet_size() != d_) throw std::invalid_argument("Substitution: rule alphabet mismatch");
      if (r.empty()) throw std::invalid_argument("Substitution: rules must be nonempty");
    }
  }

  int alphabet_size() const { return d_; }
  const Word& rule(int letter) const { return rules_.at(static_cast<std::size_t>(letter)); }
  const std::vector<Word>& rules() const { return rules_; }

 private:
  int d_;
  std::vector<Word> rules_;
};

inline Word apply(const Substitution& sigma, const Word& w) {
  if (w.alphabet_size() != sigma.alphabet_size()) {
    throw std::invalid_argument("apply: word alphabet does not match substitution");
  }
  std::int64_t total = 0;
  for (std::uint8_t c : w.letters()) total += sigma.rule(c).length();
  std::vector<std::uint8_t> letters;
  letters.reserve(static_cast<std::size_t>(total));
  for (std::uint8_t c : w.letters()) {
    const auto& img = sigma.rule(c).letters();
    letters.insert(letters.end(), img.begin(), img.end());
  }
  return Word(sigma.alphabet_size(), std::move(letters));
}

struct IterateOptions {
  std::int64_t max_length = 100'000'000;
};

// w_0 = [0], w_{n+1} = sigma(w_n).  Length growth is exponential, so the
// next length is computed from letter counts before materializing anything.
inline Word iterate(const Substitution& sigma, int n, const IterateOptions& opts = {}) {
  if (n < 0) throw std::invalid_argument("iterate: level must be >= 0");
  Word w(sigma.alphabet_size(), {0});
  for (int step = 0; step < n; ++step) {
    const LatticeVec counts = word_vector(w);
    std::int64_t next_len = 0;
    for (int c = 0; c < sigma.alphabet_size(); ++c) next_len += counts[c] * sigma.rule(c).length();
    if (next_len > opts.max_length) {
      throw ResourceLimitError("iterate: word length would exceed cap at level " +
                               std::to_string(step + 1));
    }
    w = apply(sigma, w);
  }
  return w;
}

namespace presets {

// The four built-in substitutions on three letters; index 0 is the Rauzy
// substitution 0 -> 01, 1 -> 02, 2 -> 0.
inline Substitution sigma(int k) {
  auto mk = [](std::initializer_list<const char*> rules) {
    std::vector<Word> r;
    for (const char* t : rules) r.push_back(Word::from_digits(t, 3));
    return Substitution(3, std::move(r));
  };
  switch (k) {
    case 0: return mk({"01", "02", "0"});
    case 1: return mk({"12", "2", "0"});
    case 2: return mk({"0102", "2", "0"});
    case 3: return mk({"01", "2", "0"});
    default: throw std::invalid_argument("presets::sigma: index must be 0..3");
  }
}

}  // namespace presets
}  // namespace rauzy

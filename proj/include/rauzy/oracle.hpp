#pragma once

#include <algorithm>
#include <vector>

#include "rauzy/errors.hpp"
#include "rauzy/spectral.hpp"
#include "rauzy/types.hpp"
#include "rauzy/words.hpp"

namespace rauzy {

// Which character colors the point reached after `length` steps: the letter
// consumed stepping into the point (default), or the one consumed leaving it.
enum class ColorConvention { step_letter, next_letter };

constexpr int kNoLetter = -1;

inline int color_of(const Word& w, std::int64_t length,
                    ColorConvention convention = ColorConvention::step_letter) {
  if (convention == ColorConvention::step_letter) {
    if (length < 1) return kNoLetter;  // the origin carries no color
    return w.letter(length - 1);
  }
  if (length >= w.length()) return kNoLetter;
  return w.letter(length);
}

// One prefix word vector of the iterated word, keyed by its prefix length.
struct DomainPoint {
  LatticeVec lattice;
  std::int64_t length = 0;
  int letter = kNoLetter;
};

struct Domain {
  Word word;
  std::vector<DomainPoint> points;  // ordered by length 0..L(word)
};

struct OracleOptions {
  std::int64_t max_points = 10'000'000;
  bool force_non_pisot = false;
  ColorConvention color = ColorConvention::step_letter;
  IterateOptions iterate;
};

inline int color_of(const Domain& domain, const DomainPoint& p,
                    ColorConvention convention = ColorConvention::step_letter) {
  return color_of(domain.word, p.length, convention);
}

// Brute-force point set of all prefix word vectors of iterate(sigma, n);
// the ground truth the layered constructions are checked against.  Prefix
// vectors are accumulated one letter per step, O(L) total.
inline Domain enumerate_domain(const Substitution& sigma, int n, const OracleOptions& opts = {}) {
  if (!opts.force_non_pisot) {
    if (!spectrum(sigma).is_pisot) {
      throw NotPisotError("enumerate_domain: substitution is not Pisot (use force to override)");
    }
  }
  Domain domain;
  domain.word = iterate(sigma, n, opts.iterate);
  const std::int64_t total = domain.word.length() + 1;
  if (total > opts.max_points) throw ResourceLimitError("enumerate_domain: point cap exceeded");
  domain.points.reserve(static_cast<std::size_t>(total));

  LatticeVec acc = LatticeVec::Zero(sigma.alphabet_size());
  domain.points.push_back({acc, 0, kNoLetter});
  for (std::int64_t l = 1; l <= domain.word.length(); ++l) {
    ++acc[domain.word.letter(l - 1)];
    domain.points.push_back({acc, l, color_of(domain.word, l, opts.color)});
  }
  return domain;
}

// Sorted lattice keys for fast membership tests.
inline std::vector<LatticeVec> sorted_lattice_points(const Domain& domain) {
  std::vector<LatticeVec> keys;
  keys.reserve(domain.points.size());
  for (const auto& p : domain.points) keys.push_back(p.lattice);
  std::sort(keys.begin(), keys.end(), LatticeLess{});
  return keys;
}

inline bool contains(const std::vector<LatticeVec>& sorted_keys, const LatticeVec& key) {
  return std::binary_search(sorted_keys.begin(), sorted_keys.end(), key, LatticeLess{});
}

}  // namespace rauzy

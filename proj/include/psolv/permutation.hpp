#pragma once

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstdint>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "psolv/errors.hpp"
#include "psolv/limits.hpp"

namespace psolv {

/// A bijection of {0..degree-1} stored as its image sequence.
///
/// Composition follows the right-action convention throughout the library:
/// (a * b)(x) = b(a(x)), i.e. a is applied first.
class Permutation {
public:
  explicit Permutation(unsigned degree) : images_(degree) {
    check_degree(degree);
    std::iota(images_.begin(), images_.end(), 0u);
  }

  explicit Permutation(std::vector<unsigned> images) : images_(std::move(images)) {
    check_degree(static_cast<unsigned>(images_.size()));
    std::vector<bool> seen(images_.size(), false);
    for (unsigned x : images_) {
      if (x >= images_.size() || seen[x])
        throw input_error("image sequence is not a bijection of {0.." +
                          std::to_string(images_.size() - 1) + "}");
      seen[x] = true;
    }
  }

  unsigned degree() const { return static_cast<unsigned>(images_.size()); }

  unsigned operator[](unsigned point) const { return images_[point]; }

  bool is_identity() const {
    for (unsigned i = 0; i < images_.size(); ++i)
      if (images_[i] != i) return false;
    return true;
  }

  Permutation operator*(const Permutation& rhs) const {
    require_same_degree(rhs);
    std::vector<unsigned> result(images_.size());
    for (unsigned i = 0; i < images_.size(); ++i) result[i] = rhs.images_[images_[i]];
    Permutation out(degree());
    out.images_ = std::move(result);
    return out;
  }

  Permutation inverse() const {
    Permutation out(degree());
    for (unsigned i = 0; i < images_.size(); ++i) out.images_[images_[i]] = i;
    return out;
  }

  /// this^h = h^{-1} * this * h.
  Permutation conjugated_by(const Permutation& h) const {
    require_same_degree(h);
    Permutation out(degree());
    for (unsigned i = 0; i < images_.size(); ++i) out.images_[h.images_[i]] = h.images_[images_[i]];
    return out;
  }

  /// [a, b] = a^{-1} b^{-1} a b.
  static Permutation commutator(const Permutation& a, const Permutation& b) {
    return a.inverse() * b.inverse() * a * b;
  }

  Permutation power(std::uint64_t e) const {
    Permutation result(degree());
    Permutation base = *this;
    while (e > 0) {
      if (e & 1) result = result * base;
      base = base * base;
      e >>= 1;
    }
    return result;
  }

  /// Multiplicative order, the lcm of the cycle lengths.
  std::uint64_t order() const {
    std::vector<bool> seen(images_.size(), false);
    std::uint64_t result = 1;
    for (unsigned i = 0; i < images_.size(); ++i) {
      if (seen[i]) continue;
      std::uint64_t len = 0;
      for (unsigned j = i; !seen[j]; j = images_[j]) {
        seen[j] = true;
        ++len;
      }
      std::uint64_t g = std::gcd(result, len);
      if (result / g > UINT64_MAX / len)
        throw capacity_error("element order exceeds 64-bit range");
      result = result / g * len;
    }
    return result;
  }

  /// The p-power-order part: g^(m') where order(g) = p^a * m' with p coprime m'.
  Permutation p_power_part(std::uint64_t p) const {
    std::uint64_t m = order();
    while (m % p == 0) m /= p;
    return power(m);
  }

  int smallest_moved_point() const {
    for (unsigned i = 0; i < images_.size(); ++i)
      if (images_[i] != i) return static_cast<int>(i);
    return -1;
  }

  const std::vector<unsigned>& images() const { return images_; }

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.images_ == b.images_;
  }
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
    return a.images_ <=> b.images_;
  }

private:
  static void check_degree(unsigned degree) {
    if (degree == 0) throw input_error("permutation degree must be positive");
    if (degree > kMaxDegree)
      throw input_error("permutation degree exceeds " + std::to_string(kMaxDegree));
  }

  void require_same_degree(const Permutation& other) const {
    if (other.degree() != degree())
      throw input_error("degree mismatch: " + std::to_string(degree()) + " vs " +
                        std::to_string(other.degree()));
  }

  std::vector<unsigned> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const {
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    for (unsigned x : p.images()) h = (h ^ x) * 0x100000001b3ULL;
    return h;
  }
};

/// Formats in 1-indexed disjoint-cycle notation; identity prints as "()".
inline std::string to_cycle_string(const Permutation& p) {
  std::string out;
  std::vector<bool> seen(p.degree(), false);
  for (unsigned i = 0; i < p.degree(); ++i) {
    if (seen[i] || p[i] == i) {
      seen[i] = true;
      continue;
    }
    out += '(';
    bool first = true;
    for (unsigned j = i; !seen[j]; j = p[j]) {
      seen[j] = true;
      if (!first) out += ' ';
      out += std::to_string(j + 1);
      first = false;
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

/// Parses 1-indexed disjoint-cycle notation, e.g. "(1 2)(3 4)" or "()".
/// Commas and spaces both separate points.
inline Permutation permutation_from_cycles(const std::string& text, unsigned degree) {
  std::vector<unsigned> images(degree);
  std::iota(images.begin(), images.end(), 0u);
  std::vector<bool> used(degree, false);

  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') throw input_error("expected '(' in cycle notation");
    ++i;
    std::vector<unsigned> cycle;
    for (;;) {
      skip_ws();
      if (i >= text.size()) throw input_error("unterminated cycle: missing ')'");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (text[i] == ',') {
        ++i;
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw input_error(std::string("unexpected character '") + text[i] +
                          "' in cycle notation");
      unsigned long value = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        value = value * 10 + static_cast<unsigned long>(text[i] - '0');
        if (value > kMaxDegree) throw input_error("point out of range in cycle notation");
        ++i;
      }
      if (value == 0 || value > degree)
        throw input_error("point " + std::to_string(value) + " outside 1.." +
                          std::to_string(degree));
      unsigned point = static_cast<unsigned>(value - 1);
      if (used[point])
        throw input_error("point " + std::to_string(value) + " repeated in cycle notation");
      used[point] = true;
      cycle.push_back(point);
    }
    for (std::size_t k = 0; k + 1 < cycle.size(); ++k) images[cycle[k]] = cycle[k + 1];
    if (cycle.size() > 1) images[cycle.back()] = cycle.front();
    skip_ws();
  }
  return Permutation(std::move(images));
}

}  // namespace psolv

#pragma once

#include "repmatch/young.hpp"

#include <random>
#include <string>
#include <vector>

namespace repmatch {

// Permutation of {0, ..., n-1}, stored as the image list pi[i] = pi(i).
// Composition is (pi * sigma)(i) = pi(sigma(i)).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int n);
  // Parses 1-based disjoint cycles, e.g. "(1 2 3)(4 5)"; fixed points may be
  // omitted. Whitespace or commas separate entries.
  static Permutation from_cycles(const std::string& text, int n);
  static Permutation random(int n, std::mt19937_64& rng);
  static std::vector<Permutation> all(int n);  // n! <= 10! guard

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[static_cast<size_t>(i)]; }
  const std::vector<int>& images() const { return images_; }

  Permutation operator*(const Permutation& o) const;
  Permutation inverse() const;
  bool is_identity() const;
  bool operator==(const Permutation& o) const { return images_ == o.images_; }

  CycleType cycle_type() const;
  std::string to_cycles() const;  // 1-based, "()" for the identity

 private:
  std::vector<int> images_;
};

}  // namespace repmatch

#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "permstat/partition.hpp"

namespace permstat {

/// A permutation of [n] = {1, ..., n} in one-line notation.
///
/// Positions and values are 1-based: p(i) is the image of i. The bijection
/// invariant is checked on construction from untrusted images.
class Permutation {
public:
  Permutation() = default;
  /// Throws DomainError unless `images` is a bijection on [n].
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);
  /// Transposition (i j) on [n].
  static Permutation transposition(int n, int i, int j);
  /// Reversal rho(i) = n + 1 - i.
  static Permutation reversal(int n);

  /// Accepts "[2,3,1]" (brackets optional).
  static Permutation parse(std::string_view text);

  int n() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }
  std::span<const int> images() const { return images_; }

  Permutation inverse() const;
  /// (this * rhs)(i) = this(rhs(i)).
  Permutation compose(const Permutation& rhs) const;

  /// "[2,3,1]"
  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
  friend class PermutationBuilder;
  struct Unchecked {};
  Permutation(std::vector<int> images, Unchecked) : images_(std::move(images)) {}

  std::vector<int> images_;
};

/// Mutable one-line buffer used by enumerators to avoid re-validating every
/// element they emit. Not for general use.
class PermutationBuilder {
public:
  explicit PermutationBuilder(int n) : perm_(std::vector<int>(static_cast<std::size_t>(n), 0), {}) {}
  void set(int i, int value) { perm_.images_[static_cast<std::size_t>(i - 1)] = value; }
  std::vector<int>& images() { return perm_.images_; }
  const Permutation& view() const { return perm_; }

private:
  Permutation perm_;
};

/// Multiset of cycle lengths of w.
Partition cycle_type(const Permutation& w);

/// sigma w sigma^{-1}. Throws DomainError when sizes differ.
Permutation conjugate(const Permutation& w, const Permutation& sigma);

/// tau_{i,j}(w) = (i j) w (i j).
Permutation tau(const Permutation& w, int i, int j);

}  // namespace permstat

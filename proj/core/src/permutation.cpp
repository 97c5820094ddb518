#include "permstat/permutation.hpp"

#include <charconv>
#include <numeric>
#include <sstream>

#include "permstat/errors.hpp"

namespace permstat {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = static_cast<int>(images_.size());
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v - 1)]) {
      throw DomainError("one-line images are not a bijection on [" + std::to_string(n) + "]");
    }
    seen[static_cast<std::size_t>(v - 1)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  return Permutation(std::move(images), Unchecked{});
}

Permutation Permutation::transposition(int n, int i, int j) {
  if (i < 1 || j < 1 || i > n || j > n) throw DomainError("transposition outside [n]");
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  std::swap(images[static_cast<std::size_t>(i - 1)], images[static_cast<std::size_t>(j - 1)]);
  return Permutation(std::move(images), Unchecked{});
}

Permutation Permutation::reversal(int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) images[static_cast<std::size_t>(i - 1)] = n + 1 - i;
  return Permutation(std::move(images), Unchecked{});
}

Permutation Permutation::parse(std::string_view text) {
  std::string_view body = text;
  while (!body.empty() && body.front() == ' ') body.remove_prefix(1);
  while (!body.empty() && body.back() == ' ') body.remove_suffix(1);
  if (!body.empty() && body.front() == '[') {
    if (body.back() != ']') throw ParseError("malformed permutation '" + std::string(text) + "'");
    body = body.substr(1, body.size() - 2);
  }
  std::vector<int> images;
  while (!body.empty()) {
    const auto comma = body.find(',');
    std::string_view token = body.substr(0, comma);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
      throw ParseError("malformed permutation '" + std::string(text) + "'");
    }
    images.push_back(value);
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
  }
  try {
    return Permutation(std::move(images));
  } catch (const DomainError& e) {
    throw ParseError(std::string(e.what()) + " in '" + std::string(text) + "'");
  }
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    inv[static_cast<std::size_t>(images_[i] - 1)] = static_cast<int>(i) + 1;
  }
  return Permutation(std::move(inv), Unchecked{});
}

Permutation Permutation::compose(const Permutation& rhs) const {
  if (rhs.n() != n()) throw DomainError("composing permutations of different sizes");
  std::vector<int> out(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    out[i] = images_[static_cast<std::size_t>(rhs.images_[i] - 1)];
  }
  return Permutation(std::move(out), Unchecked{});
}

std::string Permutation::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (i) os << ',';
    os << images_[i];
  }
  os << ']';
  return os.str();
}

Partition cycle_type(const Permutation& w) {
  const int n = w.n();
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::vector<int> lengths;
  for (int start = 1; start <= n; ++start) {
    if (seen[static_cast<std::size_t>(start - 1)]) continue;
    int len = 0;
    for (int x = start; !seen[static_cast<std::size_t>(x - 1)]; x = w(x)) {
      seen[static_cast<std::size_t>(x - 1)] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  return Partition(std::move(lengths));
}

Permutation conjugate(const Permutation& w, const Permutation& sigma) {
  if (w.n() != sigma.n()) throw DomainError("conjugate: permutations of different sizes");
  // sigma w sigma^{-1} sends sigma(i) to sigma(w(i)).
  std::vector<int> out(static_cast<std::size_t>(w.n()));
  for (int i = 1; i <= w.n(); ++i) out[static_cast<std::size_t>(sigma(i) - 1)] = sigma(w(i));
  return Permutation(std::move(out));
}

Permutation tau(const Permutation& w, int i, int j) {
  return conjugate(w, Permutation::transposition(w.n(), i, j));
}

}  // namespace permstat

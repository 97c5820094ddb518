#include "permstat/partition.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "permstat/errors.hpp"

namespace permstat {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_) {
    if (p < 1) throw DomainError("partition parts must be positive");
    n_ += p;
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

Partition Partition::ones(int n) { return Partition(std::vector<int>(static_cast<std::size_t>(n), 1)); }

Partition Partition::single(int n) { return Partition(std::vector<int>{n}); }

namespace {

int parse_positive(std::string_view token, std::string_view whole) {
  int value = 0;
  const auto* first = token.data();
  const auto* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (token.empty() || ec != std::errc() || ptr != last || value < 1) {
    throw ParseError("malformed partition '" + std::string(whole) + "'");
  }
  return value;
}

std::string_view strip(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return s;
}

}  // namespace

Partition Partition::parse(std::string_view text) {
  std::string_view body = strip(text);
  if (body.size() >= 2 && body.front() == '(' && body.back() == ')') {
    body = strip(body.substr(1, body.size() - 2));
  }
  if (body.empty()) throw ParseError("empty partition");

  std::vector<int> parts;
  while (true) {
    const auto comma = body.find(',');
    const std::string_view token = strip(body.substr(0, comma));
    const auto caret = token.find('^');
    if (caret == std::string_view::npos) {
      parts.push_back(parse_positive(token, text));
    } else {
      const int size = parse_positive(strip(token.substr(0, caret)), text);
      const int count = parse_positive(strip(token.substr(caret + 1)), text);
      parts.insert(parts.end(), static_cast<std::size_t>(count), size);
    }
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
  }
  return Partition(std::move(parts));
}

int Partition::part_count(int size) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), size));
}

std::string Partition::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) os << ',';
    os << parts_[i];
  }
  os << ')';
  return os.str();
}

BigInt z_lambda(const Partition& lambda) {
  BigInt z = 1;
  const auto& parts = lambda.parts();
  for (std::size_t i = 0; i < parts.size();) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    const auto multiplicity = static_cast<long long>(j - i);
    BigInt power;
    mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(parts[i]),
                  static_cast<unsigned long>(multiplicity));
    z *= power * factorial(multiplicity);
    i = j;
  }
  return z;
}

BigInt class_size(const Partition& lambda) { return factorial(lambda.n()) / z_lambda(lambda); }

namespace {

void partitions_rec(int remaining, int max_part, int min_part, std::vector<int>& prefix,
                    const std::function<void(const Partition&)>& visit) {
  if (remaining == 0) {
    visit(Partition(prefix));
    return;
  }
  for (int p = std::min(remaining, max_part); p >= min_part; --p) {
    prefix.push_back(p);
    partitions_rec(remaining - p, p, min_part, prefix, visit);
    prefix.pop_back();
  }
}

}  // namespace

void for_each_partition(int n, int min_part, const std::function<void(const Partition&)>& visit) {
  if (n < 0) throw DomainError("enumerate_partitions requires n >= 0");
  if (min_part < 1) throw DomainError("enumerate_partitions requires min_part >= 1");
  std::vector<int> prefix;
  partitions_rec(n, n, min_part, prefix, visit);
}

std::vector<Partition> enumerate_partitions(int n, int min_part) {
  std::vector<Partition> out;
  for_each_partition(n, min_part, [&](const Partition& p) { out.push_back(p); });
  return out;
}

}  // namespace permstat

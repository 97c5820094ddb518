#include "permstat/enumerate.hpp"

#include <numeric>

namespace permstat {

namespace {

class ClassWalker {
public:
  ClassWalker(const Partition& lambda, const PermutationVisitor& visit)
      : n_(lambda.n()),
        counts_(static_cast<std::size_t>(n_ + 1), 0),
        used_(static_cast<std::size_t>(n_ + 1), false),
        buf_(n_),
        visit_(visit) {
    for (int p : lambda.parts()) ++counts_[static_cast<std::size_t>(p)];
  }

  void run(Shard shard) {
    if (n_ == 0) {
      if (shard.owns(0)) visit_(buf_.view());
      return;
    }
    // The cycle through 1 is chosen here so that branches can be sharded.
    unsigned long long branch = 0;
    used_[1] = true;
    for (int len = 1; len <= n_; ++len) {
      if (counts_[static_cast<std::size_t>(len)] == 0) continue;
      --counts_[static_cast<std::size_t>(len)];
      if (len == 1) {
        if (shard.owns(branch)) {
          buf_.set(1, 1);
          next_cycle();
        }
        ++branch;
      } else {
        for (int x = 2; x <= n_; ++x) {
          if (shard.owns(branch)) {
            used_[static_cast<std::size_t>(x)] = true;
            buf_.set(1, x);
            extend(1, x, len - 2);
            used_[static_cast<std::size_t>(x)] = false;
          }
          ++branch;
        }
      }
      ++counts_[static_cast<std::size_t>(len)];
    }
    used_[1] = false;
  }

private:
  void next_cycle() {
    int leader = 1;
    while (leader <= n_ && used_[static_cast<std::size_t>(leader)]) ++leader;
    if (leader > n_) {
      visit_(buf_.view());
      return;
    }
    used_[static_cast<std::size_t>(leader)] = true;
    for (int len = 1; len <= n_; ++len) {
      if (counts_[static_cast<std::size_t>(len)] == 0) continue;
      --counts_[static_cast<std::size_t>(len)];
      extend(leader, leader, len - 1);
      ++counts_[static_cast<std::size_t>(len)];
    }
    used_[static_cast<std::size_t>(leader)] = false;
  }

  // Appends `remaining` more members after `last`, then closes the cycle.
  void extend(int leader, int last, int remaining) {
    if (remaining == 0) {
      buf_.set(last, leader);
      next_cycle();
      return;
    }
    for (int x = leader + 1; x <= n_; ++x) {
      if (used_[static_cast<std::size_t>(x)]) continue;
      used_[static_cast<std::size_t>(x)] = true;
      buf_.set(last, x);
      extend(leader, x, remaining - 1);
      used_[static_cast<std::size_t>(x)] = false;
    }
  }

  int n_;
  std::vector<int> counts_;
  std::vector<bool> used_;
  PermutationBuilder buf_;
  const PermutationVisitor& visit_;
};

}  // namespace

void for_each_in_class(const Partition& lambda, const PermutationVisitor& visit, Shard shard) {
  ClassWalker(lambda, visit).run(shard);
}

std::vector<Permutation> enumerate_class(const Partition& lambda) {
  std::vector<Permutation> out;
  for_each_in_class(lambda, [&](const Permutation& w) { out.push_back(w); });
  return out;
}

void for_each_permutation(int n, const PermutationVisitor& visit, Shard shard) {
  PermutationBuilder buf(n);
  auto& images = buf.images();
  if (n == 0) {
    if (shard.owns(0)) visit(buf.view());
    return;
  }
  for (int first = 1; first <= n; ++first) {
    if (!shard.owns(static_cast<unsigned long long>(first - 1))) continue;
    images[0] = first;
    int pos = 1;
    for (int v = 1; v <= n; ++v) {
      if (v != first) images[static_cast<std::size_t>(pos++)] = v;
    }
    do {
      visit(buf.view());
    } while (std::next_permutation(images.begin() + 1, images.end()));
  }
}

}  // namespace permstat

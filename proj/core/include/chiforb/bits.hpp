#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <vector>

namespace chiforb {

// Fixed-size bitset sized at construction. Rows of the adjacency matrices are
// Bits of length n, so all neighbourhood algebra is word-parallel.
class Bits {
 public:
  Bits() = default;
  explicit Bits(int n) : n_(n), w_((n + 63) / 64, 0) {}

  int size() const { return n_; }

  bool test(int i) const {
    assert(i >= 0 && i < n_);
    return (w_[i >> 6] >> (i & 63)) & 1u;
  }
  void set(int i) {
    assert(i >= 0 && i < n_);
    w_[i >> 6] |= uint64_t(1) << (i & 63);
  }
  void reset(int i) {
    assert(i >= 0 && i < n_);
    w_[i >> 6] &= ~(uint64_t(1) << (i & 63));
  }
  void clear() {
    for (auto& x : w_) x = 0;
  }

  bool any() const {
    for (auto x : w_)
      if (x) return true;
    return false;
  }
  bool none() const { return !any(); }

  int count() const {
    int c = 0;
    for (auto x : w_) c += std::popcount(x);
    return c;
  }

  bool intersects(const Bits& o) const {
    assert(n_ == o.n_);
    for (size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & o.w_[i]) return true;
    return false;
  }

  Bits& operator&=(const Bits& o) {
    assert(n_ == o.n_);
    for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }
  Bits& operator|=(const Bits& o) {
    assert(n_ == o.n_);
    for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }
  // this &= ~o
  Bits& subtract(const Bits& o) {
    assert(n_ == o.n_);
    for (size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
    return *this;
  }

  friend Bits operator&(Bits a, const Bits& b) { return a &= b; }
  friend Bits operator|(Bits a, const Bits& b) { return a |= b; }

  // First set bit at position >= from, or -1.
  int next(int from = 0) const {
    if (from >= n_) return -1;
    int wi = from >> 6;
    uint64_t cur = w_[wi] & (~uint64_t(0) << (from & 63));
    while (true) {
      if (cur) {
        int bit = (wi << 6) + std::countr_zero(cur);
        return bit < n_ ? bit : -1;
      }
      if (++wi >= int(w_.size())) return -1;
      cur = w_[wi];
    }
  }
  int first() const { return next(0); }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    for (int i = first(); i >= 0; i = next(i + 1)) out.push_back(i);
    return out;
  }

  friend bool operator==(const Bits& a, const Bits& b) {
    return a.n_ == b.n_ && a.w_ == b.w_;
  }
  friend bool operator<(const Bits& a, const Bits& b) {
    return a.w_ < b.w_;
  }

 private:
  int n_ = 0;
  std::vector<uint64_t> w_;
};

}  // namespace chiforb

#pragma once

#include <cstdint>
#include <vector>

#include "hyperkalman/errors.hpp"

namespace hyperkalman {

/// A subset of the elements {0,...,n-1} of a fixed finite universe,
/// backed by a bitset. Query results may be empty; hyperoperation table
/// cells must not be (that is enforced by the verifiers, not here).
class ElemSet {
 public:
  ElemSet() : universe_(0) {}
  explicit ElemSet(int universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {
    if (universe < 0) throw precondition_error("negative universe size");
  }

  static ElemSet full(int universe) {
    ElemSet s(universe);
    for (int i = 0; i < universe; ++i) s.insert(i);
    return s;
  }

  static ElemSet of(int universe, std::initializer_list<int> xs) {
    ElemSet s(universe);
    for (int x : xs) s.insert(x);
    return s;
  }

  int universe() const { return universe_; }

  bool contains(int x) const {
    return x >= 0 && x < universe_ &&
           (words_[x >> 6] >> (x & 63)) & 1ull;
  }

  void insert(int x) {
    check_index(x);
    words_[x >> 6] |= 1ull << (x & 63);
  }

  void erase(int x) {
    check_index(x);
    words_[x >> 6] &= ~(1ull << (x & 63));
  }

  bool empty() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }

  int size() const {
    int c = 0;
    for (auto w : words_) c += __builtin_popcountll(w);
    return c;
  }

  /// Least member, or -1 when empty.
  int least() const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i]) return static_cast<int>(i * 64 + __builtin_ctzll(words_[i]));
    return -1;
  }

  /// Members in ascending index order.
  std::vector<int> members() const {
    std::vector<int> out;
    out.reserve(size());
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t w = words_[i];
      while (w) {
        out.push_back(static_cast<int>(i * 64 + __builtin_ctzll(w)));
        w &= w - 1;
      }
    }
    return out;
  }

  bool subset_of(const ElemSet& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~other.words_[i]) return false;
    return true;
  }

  ElemSet& operator|=(const ElemSet& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
  }

  ElemSet& operator&=(const ElemSet& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
  }

  friend bool operator==(const ElemSet& a, const ElemSet& b) {
    return a.universe_ == b.universe_ && a.words_ == b.words_;
  }

 private:
  void check_index(int x) const {
    if (x < 0 || x >= universe_)
      throw precondition_error("element index " + std::to_string(x) +
                               " outside universe of size " +
                               std::to_string(universe_));
  }

  int universe_;
  std::vector<std::uint64_t> words_;
};

}  // namespace hyperkalman

#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <vector>

namespace hyperarr {

/// Subset of the color indices {0..n-1} of a hypergraph, stored as a bitmap.
class ColorSet {
public:
  ColorSet() = default;
  explicit ColorSet(std::size_t universe) : n_(universe), words_((universe + 63) / 64, 0) {}

  static ColorSet single(std::size_t universe, std::size_t color) {
    ColorSet s(universe);
    s.insert(color);
    return s;
  }
  static ColorSet full(std::size_t universe) {
    ColorSet s(universe);
    for (std::size_t i = 0; i < universe; ++i) s.insert(i);
    return s;
  }

  std::size_t universe() const { return n_; }

  bool contains(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void insert(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void erase(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  std::size_t size() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool empty() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }

  /// Member indices in increasing order.
  std::vector<std::size_t> members() const {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < words_.size(); ++k) {
      std::uint64_t w = words_[k];
      while (w) {
        out.push_back(k * 64 + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
    return out;
  }

  bool is_subset_of(const ColorSet& o) const {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & ~o.words_[k]) return false;
    return true;
  }

  ColorSet& operator|=(const ColorSet& o) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
    return *this;
  }
  ColorSet& operator&=(const ColorSet& o) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
    return *this;
  }
  friend ColorSet operator|(ColorSet a, const ColorSet& b) { return a |= b; }
  friend ColorSet operator&(ColorSet a, const ColorSet& b) { return a &= b; }

  friend bool operator==(const ColorSet&, const ColorSet&) = default;
  friend auto operator<=>(const ColorSet& a, const ColorSet& b) { return a.words_ <=> b.words_; }

  std::size_t hash() const {
    std::size_t h = n_;
    for (auto w : words_) h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }

private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

struct ColorSetHash {
  std::size_t operator()(const ColorSet& s) const { return s.hash(); }
};

} // namespace hyperarr

#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <absl/container/flat_hash_map.h>
#include <absl/container/flat_hash_set.h>
#include <absl/hash/hash.h>

namespace pgs {

/// A group element as a short vector of 16-bit coordinates.
///
/// The meaning of the coordinates belongs to the group that produced the
/// element. The byte encoding is each coordinate in big-endian order, so the
/// lexicographic order on coordinates coincides with byte-lexicographic order
/// of encodings. The all-zero element is the identity of every group built by
/// this library.
class Element {
 public:
  using Coord = std::uint16_t;
  static constexpr std::size_t kCapacity = 24;

  Element() = default;
  explicit Element(std::size_t size);
  Element(std::initializer_list<Coord> coords);
  explicit Element(std::span<const Coord> coords);

  std::size_t size() const { return size_; }
  Coord operator[](std::size_t i) const { return coords_[i]; }
  Coord& operator[](std::size_t i) { return coords_[i]; }
  std::span<const Coord> coords() const { return {coords_.data(), size_}; }
  bool is_zero() const;

  std::vector<std::uint8_t> encode() const;
  std::string to_string() const;

  Element slice(std::size_t offset, std::size_t length) const;
  static Element concat(std::span<const Element> parts);

  friend bool operator==(const Element&, const Element&) = default;
  friend std::strong_ordering operator<=>(const Element& a, const Element& b) {
    return std::lexicographical_compare_three_way(
        a.coords_.begin(), a.coords_.begin() + a.size_, b.coords_.begin(),
        b.coords_.begin() + b.size_);
  }

  template <typename H>
  friend H AbslHashValue(H h, const Element& e) {
    return H::combine_contiguous(std::move(h), e.coords_.data(), e.size_);
  }

 private:
  std::array<Coord, kCapacity> coords_{};
  std::uint8_t size_ = 0;
};

using ElementSet = absl::flat_hash_set<Element>;
template <typename V>
using ElementMap = absl::flat_hash_map<Element, V>;

}  // namespace pgs

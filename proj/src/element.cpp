#include "pgs/element.hpp"

#include "pgs/errors.hpp"

namespace pgs {

Element::Element(std::size_t size) {
  if (size > kCapacity)
    throw ResourceLimit("element needs more than " +
                        std::to_string(kCapacity) + " coordinates");
  size_ = static_cast<std::uint8_t>(size);
}

Element::Element(std::initializer_list<Coord> coords) : Element(coords.size()) {
  std::copy(coords.begin(), coords.end(), coords_.begin());
}

Element::Element(std::span<const Coord> coords) : Element(coords.size()) {
  std::copy(coords.begin(), coords.end(), coords_.begin());
}

bool Element::is_zero() const {
  return std::all_of(coords_.begin(), coords_.begin() + size_,
                     [](Coord c) { return c == 0; });
}

std::vector<std::uint8_t> Element::encode() const {
  std::vector<std::uint8_t> bytes;
  bytes.reserve(2 * size_);
  for (std::size_t i = 0; i < size_; ++i) {
    bytes.push_back(static_cast<std::uint8_t>(coords_[i] >> 8));
    bytes.push_back(static_cast<std::uint8_t>(coords_[i] & 0xff));
  }
  return bytes;
}

std::string Element::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < size_; ++i) {
    if (i) s += ',';
    s += std::to_string(coords_[i]);
  }
  return s + ")";
}

Element Element::slice(std::size_t offset, std::size_t length) const {
  return Element(coords().subspan(offset, length));
}

Element Element::concat(std::span<const Element> parts) {
  std::size_t total = 0;
  for (const auto& e : parts) total += e.size();
  Element out(total);
  std::size_t at = 0;
  for (const auto& e : parts) {
    std::copy(e.coords_.begin(), e.coords_.begin() + e.size_,
              out.coords_.begin() + static_cast<std::ptrdiff_t>(at));
    at += e.size();
  }
  return out;
}

}  // namespace pgs

#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace setseq {

inline constexpr int kMaxDim = 64;

// An element of F_2^dim. Coordinate 1 is the most significant bit and is
// printed leftmost, so "0011" has bits == 3.
class GF2Vector {
 public:
  // Placeholder with dim 0; not a valid label.
  constexpr GF2Vector() = default;
  GF2Vector(int dim, std::uint64_t bits);

  static GF2Vector zero(int dim) { return GF2Vector(dim, 0); }
  static GF2Vector parse(std::string_view text);

  int dim() const { return dim_; }
  std::uint64_t bits() const { return bits_; }
  bool is_zero() const { return bits_ == 0; }
  // 1-based coordinate, 1 = leftmost.
  bool coordinate(int i) const;
  std::string str() const;

  // Last k coordinates as a k-dimensional vector; prefix is the first k.
  GF2Vector suffix(int k) const;
  GF2Vector prefix(int k) const;

  friend bool operator==(const GF2Vector&, const GF2Vector&) = default;
  friend std::strong_ordering operator<=>(const GF2Vector& a,
                                          const GF2Vector& b) {
    if (auto c = a.dim_ <=> b.dim_; c != 0) return c;
    return a.bits_ <=> b.bits_;
  }

 private:
  int dim_ = 0;
  std::uint64_t bits_ = 0;
};

// Coordinatewise sum mod 2. Throws PreconditionError on dimension mismatch.
GF2Vector operator^(const GF2Vector& a, const GF2Vector& b);

// Concatenation: v's coordinates followed by suffix's.
GF2Vector extend(const GF2Vector& v, const GF2Vector& suffix);

std::uint64_t dim_mask(int dim);

}  // namespace setseq

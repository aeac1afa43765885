#include "setseq/gf2.hpp"

#include "setseq/error.hpp"

namespace setseq {

std::uint64_t dim_mask(int dim) {
  return dim >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << dim) - 1;
}

GF2Vector::GF2Vector(int dim, std::uint64_t bits) : dim_(dim), bits_(bits) {
  if (dim < 1 || dim > kMaxDim)
    throw PreconditionError("vector dimension " + std::to_string(dim) +
                            " outside 1.." + std::to_string(kMaxDim));
  if (bits & ~dim_mask(dim))
    throw PreconditionError("vector bits exceed dimension " +
                            std::to_string(dim));
}

GF2Vector GF2Vector::parse(std::string_view text) {
  if (text.empty() || text.size() > kMaxDim)
    throw PreconditionError("bad bitstring length");
  std::uint64_t bits = 0;
  for (char c : text) {
    if (c != '0' && c != '1')
      throw PreconditionError("bad bitstring '" + std::string(text) + "'");
    bits = (bits << 1) | static_cast<std::uint64_t>(c - '0');
  }
  return GF2Vector(static_cast<int>(text.size()), bits);
}

bool GF2Vector::coordinate(int i) const {
  return (bits_ >> (dim_ - i)) & 1;
}

std::string GF2Vector::str() const {
  std::string s(dim_, '0');
  for (int i = 0; i < dim_; ++i)
    if ((bits_ >> (dim_ - 1 - i)) & 1) s[i] = '1';
  return s;
}

GF2Vector GF2Vector::suffix(int k) const {
  if (k < 1 || k > dim_) throw PreconditionError("bad suffix length");
  return GF2Vector(k, bits_ & dim_mask(k));
}

GF2Vector GF2Vector::prefix(int k) const {
  if (k < 1 || k > dim_) throw PreconditionError("bad prefix length");
  return GF2Vector(k, bits_ >> (dim_ - k));
}

GF2Vector operator^(const GF2Vector& a, const GF2Vector& b) {
  if (a.dim() != b.dim())
    throw PreconditionError("dimension mismatch: " + std::to_string(a.dim()) +
                            " vs " + std::to_string(b.dim()));
  return GF2Vector(a.dim(), a.bits() ^ b.bits());
}

GF2Vector extend(const GF2Vector& v, const GF2Vector& suffix) {
  int d = v.dim() + suffix.dim();
  if (d > kMaxDim) throw PreconditionError("extended dimension too large");
  return GF2Vector(d, (v.bits() << suffix.dim()) | suffix.bits());
}

}  // namespace setseq

#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "toric3/gfq.hpp"

namespace toric3::codes::detail {

// dst += src over the field; returns the Hamming weight of the new dst.
// Vectors passed to the kernel must be in its own byte encoding (see encode);
// zero is always encoded as zero.
class AddKernel {
 public:
  explicit AddKernel(const gfq::FiniteField& f);

  std::vector<std::uint8_t> encode(const std::vector<std::uint8_t>& row) const;
  std::vector<std::uint8_t> decode(const std::vector<std::uint8_t>& row) const;
  std::size_t add_weight(std::uint8_t* dst, const std::uint8_t* src, std::size_t n) const;
  void add(std::uint8_t* dst, const std::uint8_t* src, std::size_t n) const { add_weight(dst, src, n); }

 private:
  enum class Kind { Prime, Char2, Nibble, Table } kind_;
  std::uint8_t p_ = 0;
  std::vector<std::uint8_t> table_;  // q x q addition table
  std::size_t q_ = 0;
  bool wide_ = false;  // AVX-512 path available
};

std::size_t weight(const std::uint8_t* v, std::size_t n);

// s * row
std::vector<std::uint8_t> scaled(const gfq::FiniteField& f, const std::vector<std::uint8_t>& row, gfq::Elem s);

}  // namespace toric3::codes::detail

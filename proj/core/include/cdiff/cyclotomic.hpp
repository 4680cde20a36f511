#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cdiff {

__extension__ typedef __int128 Integer;

std::string to_string(Integer v);

// Exact element of Z[zeta_p], zeta_p = exp(2 pi i / p). Coefficient j
// multiplies zeta^j. Values are kept canonical: coefficient p-1 is zero, so
// {1, zeta, ..., zeta^(p-2)} is the basis in use.
class CyclotomicInt {
 public:
  explicit CyclotomicInt(std::uint32_t p);
  static CyclotomicInt from_integer(std::uint32_t p, Integer v);
  static CyclotomicInt zeta_power(std::uint32_t p, std::uint64_t k);
  // Any length-p vector; the result is canonicalized.
  static CyclotomicInt from_coefficients(std::uint32_t p, std::vector<Integer> coeffs);

  std::uint32_t p() const noexcept { return p_; }
  const std::vector<Integer>& coefficients() const noexcept { return c_; }

  CyclotomicInt& operator+=(const CyclotomicInt& o);
  CyclotomicInt& operator-=(const CyclotomicInt& o);
  friend CyclotomicInt operator+(CyclotomicInt a, const CyclotomicInt& b) { return a += b; }
  friend CyclotomicInt operator-(CyclotomicInt a, const CyclotomicInt& b) { return a -= b; }
  friend CyclotomicInt operator*(const CyclotomicInt& a, const CyclotomicInt& b);
  CyclotomicInt operator-() const;

  // Complex conjugation, zeta^j -> zeta^(p-j).
  CyclotomicInt conj() const;
  // z * conj(z).
  CyclotomicInt norm_sq() const;

  bool is_integer() const noexcept;
  // Throws kNotRationalInteger unless the value lies in Z.
  Integer as_integer() const;

  std::string to_string() const;

  friend bool operator==(const CyclotomicInt&, const CyclotomicInt&) = default;

 private:
  void canonicalize() noexcept;

  std::uint32_t p_;
  std::vector<Integer> c_;
};

}  // namespace cdiff

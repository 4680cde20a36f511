#include "cdiff/cyclotomic.hpp"

#include <algorithm>
#include <sstream>

#include "cdiff/error.hpp"

namespace cdiff {

std::string to_string(Integer v) {
  if (v == 0) return "0";
  const bool negative = v < 0;
  unsigned __int128 u = negative ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
  std::string out;
  while (u != 0) {
    out.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
    u /= 10;
  }
  if (negative) out.push_back('-');
  std::reverse(out.begin(), out.end());
  return out;
}

namespace {

void same_ring(const CyclotomicInt& a, const CyclotomicInt& b) {
  if (a.p() != b.p()) {
    fail(ErrorCode::kInvalidArgument,
         "cyclotomic operands over different p (" + std::to_string(a.p()) + " vs " + std::to_string(b.p()) + ")");
  }
}

}  // namespace

CyclotomicInt::CyclotomicInt(std::uint32_t p) : p_(p), c_(p, 0) {
  if (p < 2) fail(ErrorCode::kInvalidArgument, "cyclotomic ring needs p >= 2");
}

CyclotomicInt CyclotomicInt::from_integer(std::uint32_t p, Integer v) {
  CyclotomicInt z(p);
  z.c_[0] = v;
  z.canonicalize();
  return z;
}

CyclotomicInt CyclotomicInt::zeta_power(std::uint32_t p, std::uint64_t k) {
  CyclotomicInt z(p);
  z.c_[k % p] = 1;
  z.canonicalize();
  return z;
}

CyclotomicInt CyclotomicInt::from_coefficients(std::uint32_t p, std::vector<Integer> coeffs) {
  CyclotomicInt z(p);
  if (coeffs.size() != p) fail(ErrorCode::kInvalidArgument, "cyclotomic coefficient vector must have length p");
  z.c_ = std::move(coeffs);
  z.canonicalize();
  return z;
}

void CyclotomicInt::canonicalize() noexcept {
  const Integer last = c_[p_ - 1];
  if (last == 0) return;
  for (auto& v : c_) v -= last;
}

CyclotomicInt& CyclotomicInt::operator+=(const CyclotomicInt& o) {
  same_ring(*this, o);
  for (std::uint32_t j = 0; j < p_; ++j) c_[j] += o.c_[j];
  return *this;
}

CyclotomicInt& CyclotomicInt::operator-=(const CyclotomicInt& o) {
  same_ring(*this, o);
  for (std::uint32_t j = 0; j < p_; ++j) c_[j] -= o.c_[j];
  return *this;
}

CyclotomicInt CyclotomicInt::operator-() const {
  CyclotomicInt z(p_);
  for (std::uint32_t j = 0; j < p_; ++j) z.c_[j] = -c_[j];
  return z;
}

CyclotomicInt operator*(const CyclotomicInt& a, const CyclotomicInt& b) {
  same_ring(a, b);
  const std::uint32_t p = a.p_;
  CyclotomicInt z(p);
  for (std::uint32_t i = 0; i < p; ++i) {
    if (a.c_[i] == 0) continue;
    for (std::uint32_t j = 0; j < p; ++j) {
      const std::uint32_t k = i + j >= p ? i + j - p : i + j;
      z.c_[k] += a.c_[i] * b.c_[j];
    }
  }
  z.canonicalize();
  return z;
}

CyclotomicInt CyclotomicInt::conj() const {
  CyclotomicInt z(p_);
  for (std::uint32_t j = 0; j < p_; ++j) z.c_[(p_ - j) % p_] = c_[j];
  z.canonicalize();
  return z;
}

CyclotomicInt CyclotomicInt::norm_sq() const { return *this * conj(); }

bool CyclotomicInt::is_integer() const noexcept {
  return std::all_of(c_.begin() + 1, c_.end(), [](Integer v) { return v == 0; });
}

Integer CyclotomicInt::as_integer() const {
  if (!is_integer()) fail(ErrorCode::kNotRationalInteger, to_string() + " is not a rational integer");
  return c_[0];
}

std::string CyclotomicInt::to_string() const {
  std::ostringstream os;
  bool any = false;
  for (std::uint32_t j = 0; j < p_; ++j) {
    if (c_[j] == 0) continue;
    const Integer v = c_[j];
    if (any) os << (v < 0 ? " - " : " + ");
    else if (v < 0) os << "-";
    const Integer mag = v < 0 ? -v : v;
    if (j == 0) {
      os << cdiff::to_string(mag);
    } else {
      if (mag != 1) os << cdiff::to_string(mag) << "*";
      os << "z^" << j;
    }
    any = true;
  }
  if (!any) os << "0";
  return os.str();
}

}  // namespace cdiff

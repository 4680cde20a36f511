#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "cdiff/cyclotomic.hpp"
#include "cdiff/differential.hpp"
#include "cdiff/function_table.hpp"

namespace cdiff {

// W_F(u, v) = sum_x zeta^(Tr(v F(x)) - Tr(u x)) for all (u, v). Each entry is
// held as its exponent histogram: entry k counts the x with exponent k.
class WalshTable {
 public:
  static constexpr Element kMaxOrder = 1024;

  // Throws kSizeGuardExceeded for q > kMaxOrder.
  static WalshTable compute(const FunctionTable& f, const SweepOptions& options = {});

  const Field& field() const noexcept { return field_; }
  Element q() const noexcept { return field_.q(); }
  std::span<const std::uint32_t> histogram(Element u, Element v) const noexcept {
    return std::span<const std::uint32_t>(counts_).subspan((std::size_t{u} * q() + v) * field_.p(), field_.p());
  }
  CyclotomicInt at(Element u, Element v) const;

 private:
  WalshTable(Field field, std::vector<std::uint32_t> counts) : field_(std::move(field)), counts_(std::move(counts)) {}

  Field field_;
  std::vector<std::uint32_t> counts_;
};

CyclotomicInt walsh(const FunctionTable& f, Element u, Element v);

// {"field":..,"p":..,"entries":[[u,v,[coeffs...]],...]} with canonical coefficients
// printed as decimal strings.
nlohmann::json walsh_to_json(const WalshTable& table);

// Coefficients A_0..A_delta of (x - 1)(x - 2)...(x - delta).
std::vector<Integer> phi_coefficients(std::uint32_t delta);

// sum_{u,v} |W(u,v)|^2 |W(u,cv)|^2. Throws kInvalidArgument for c = 1.
Integer pcn_power_sum(const FunctionTable& f, Element c);

struct ApcnStatistic {
  Integer lhs = 0;
  Integer rhs = 0;
  bool equality() const noexcept { return lhs == rhs; }
};

// lhs = sum over u1,u2,v1,v2 of conj G(u1+u2, v1+v2) G(u1,v1) G(u2,v2) with
// G(u,v) = W(u,v) conj W(u,cv); rhs = 3 q^2 S - 2 q^6 with S the pcn sum.
ApcnStatistic apcn_statistic(const FunctionTable& f, Element c, Element max_q = 64);

enum class WalshSide { kSkip, kIfAffordable, kRequire };

struct ConvolutionStatistic {
  std::uint32_t delta = 1;
  Integer count_side = 0;
  std::optional<Integer> walsh_side;
};

// count_side = q^2 A_0 + sum_j A_j sum_{a,b} n(a,b,c)^j with
// n(a,b,c) = #{x : D_a(x) = D_a(b)}; walsh_side is the same quantity built
// from j-fold additive self-convolutions of G. The Walsh side costs about
// delta * q^4 products and is bounded by walsh_limit.
ConvolutionStatistic convolution_statistic(const FunctionTable& f, Element c, std::uint32_t delta,
                                           WalshSide side = WalshSide::kIfAffordable,
                                           std::uint64_t walsh_limit = 1'000'000'000);

// q A_0 + sum_j A_j q^-j sum_V conj Wd(V) (Wd^{*j})(V) where Wd(v) is the
// Walsh value at u = 0 of the c-derivative in direction a.
Integer derivative_walsh_statistic(const FunctionTable& f, Element c, Element a, std::uint32_t delta,
                                   std::uint64_t limit = 1'000'000'000);

struct DerivativeProfile {
  Element c = 0;
  std::uint32_t delta = 1;
  std::vector<Integer> per_a;  // indexed by a
  bool all_zero = false;
};

DerivativeProfile derivative_walsh_profile(const FunctionTable& f, Element c, std::uint32_t delta);

}  // namespace cdiff

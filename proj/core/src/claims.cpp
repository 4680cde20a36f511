#include "cdiff/claims.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cdiff/error.hpp"
#include "cdiff/function_spec.hpp"
#include "cdiff/number_theory.hpp"
#include "parallel.hpp"

namespace cdiff {

const std::vector<std::string>& claim_ids() {
  static const std::vector<std::string> ids{"T0", "T1", "T2", "T3", "T4", "T5", "T6", "T7", "T8", "T9"};
  return ids;
}

std::string_view to_string(ClaimStatus status) {
  switch (status) {
    case ClaimStatus::kConfirmed: return "Confirmed";
    case ClaimStatus::kBoundHolds: return "BoundHolds";
    case ClaimStatus::kRefuted: return "Refuted";
    case ClaimStatus::kNotApplicable: return "NotApplicable";
  }
  return "NotApplicable";
}

std::string_view to_string(Relation relation) { return relation == Relation::kEquals ? "==" : ">="; }

namespace {

Field field_for(std::uint32_t p, std::uint32_t n) {
  static std::mutex mutex;
  static std::map<std::pair<std::uint32_t, std::uint32_t>, Field> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find({p, n});
  if (it == cache.end()) it = cache.emplace(std::make_pair(p, n), Field::build(p, n)).first;
  return it->second;
}

std::uint64_t ipow(std::uint64_t b, std::uint32_t e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

[[noreturn]] void unknown(const ClaimInstance& inst) {
  fail(ErrorCode::kUnknownClaim, "unknown claim/variant " + inst.claim + "/" + inst.variant);
}

template <class T>
T need(const std::optional<T>& v, const char* name, const ClaimInstance& inst) {
  if (!v) fail(ErrorCode::kInvalidArgument, inst.claim + "/" + inst.variant + " needs parameter " + name);
  return *v;
}

void judge(ClaimVerdict& v) {
  const bool holds = v.relation == Relation::kEquals ? v.observed == v.predicted : v.observed >= v.predicted;
  if (!holds) v.status = ClaimStatus::kRefuted;
  else v.status = v.relation == Relation::kEquals ? ClaimStatus::kConfirmed : ClaimStatus::kBoundHolds;
}

// Predicted PcN means uniformity 1; predicted not PcN means uniformity >= 2.
void predict_pcn(ClaimVerdict& v, bool pcn) {
  v.relation = pcn ? Relation::kEquals : Relation::kAtLeast;
  v.predicted = pcn ? 1 : 2;
}

void observe(ClaimVerdict& v, const FunctionTable& f, Element c) {
  auto r = uniformity(f, c, v.instance.convention);
  v.observed = r.value;
  v.witness = std::move(r.witness);
}

ClaimVerdict start(const ClaimInstance& inst, const FunctionTable& f) {
  ClaimVerdict v;
  v.instance = inst;
  v.function = f.origin().describe();
  return v;
}

ClaimVerdict t0(const ClaimInstance& inst, const Field& field) {
  const auto& prm = inst.params;
  const std::uint32_t n = prm.n;
  if (inst.variant == "square" || inst.variant == "gold") {
    const bool square = inst.variant == "square";
    const std::uint32_t k = square ? 0 : need(prm.k, "k", inst);
    auto f = square ? FunctionTable::from_monomial(field, 2) : gold(field, k);
    auto v = start(inst, f);
    predict_pcn(v, square ? field.p() != 2 : field.p() != 2 && (n / std::gcd(n, k)) % 2 == 1);
    observe(v, f, 1);
    judge(v);
    return v;
  }
  if (inst.variant == "ternary" || inst.variant == "ternary-u") {
    const Element u = need(prm.u, "u", inst);
    auto f = ternary_family(field, u);
    auto v = start(inst, f);
    observe(v, f, 1);
    if (inst.variant == "ternary") {
      predict_pcn(v, n == 2 || n % 2 == 1);
      judge(v);
    } else if (n % 2 == 1) {
      predict_pcn(v, true);
      judge(v);
    } else {
      v.status = ClaimStatus::kNotApplicable;
      v.note = "no prediction for even n";
    }
    return v;
  }
  if (inst.variant == "coulter-matthews") {
    const std::uint32_t k = need(prm.k, "k", inst);
    auto f = coulter_matthews(field, k);
    auto v = start(inst, f);
    predict_pcn(v, std::gcd(k, n) == 1 && n % 2 == 1);
    observe(v, f, 1);
    judge(v);
    return v;
  }
  unknown(inst);
}

ClaimVerdict t1(const ClaimInstance& inst, const Field& field) {
  if (inst.variant != "affine") unknown(inst);
  const auto& prm = inst.params;
  const std::uint32_t k = prm.k.value_or(0);
  const Element A = need(prm.A, "A", inst);
  const Element B = need(prm.B, "B", inst);
  const Element c = need(prm.c, "c", inst);
  field.check(A);
  field.check(B);
  if (A == 0) fail(ErrorCode::kInvalidArgument, "affine claim needs A != 0");
  std::vector<Element> values(field.q());
  for (Element x = 0; x < field.q(); ++x) values[x] = field.add(field.mul(A, field.frobenius(x, k)), B);
  Origin origin;
  origin.kind = Origin::Kind::kPolynomial;
  origin.coefficients[ipow(field.p(), k % field.n())] = A;
  if (B != 0) origin.coefficients[0] = B;
  auto f = FunctionTable::from_values(field, std::move(values), origin);
  auto v = start(inst, f);
  if (c == 1) {
    v.status = ClaimStatus::kNotApplicable;
    v.note = "c = 1 excluded";
    return v;
  }
  predict_pcn(v, true);
  observe(v, f, c);
  judge(v);
  return v;
}

ClaimVerdict t2(const ClaimInstance& inst, const Field& field) {
  if (inst.variant != "square") unknown(inst);
  const Element c = need(inst.params.c, "c", inst);
  auto f = FunctionTable::from_monomial(field, 2);
  auto v = start(inst, f);
  if (c == 1) {
    v.status = ClaimStatus::kNotApplicable;
    v.note = "c = 1 excluded";
    return v;
  }
  v.relation = Relation::kEquals;
  v.predicted = 2;
  observe(v, f, c);
  judge(v);
  return v;
}

ClaimVerdict t3(const ClaimInstance& inst, const Field& field) {
  const std::uint32_t k = need(inst.params.k, "k", inst);
  const Element c = need(inst.params.c, "c", inst);
  auto f = gold(field, k);
  auto v = start(inst, f);
  if (c == 1) {
    v.status = ClaimStatus::kNotApplicable;
    v.note = "c = 1 excluded";
    return v;
  }
  observe(v, f, c);
  if (inst.variant == "not-pcn") {
    predict_pcn(v, false);
    judge(v);
    return v;
  }
  if (inst.variant != "bound") unknown(inst);
  const std::uint32_t n = field.n();
  const std::uint32_t g = std::gcd(n, k);
  const auto pk_minus_1 = static_cast<std::int64_t>(ipow(field.p(), k) - 1);
  const bool condition = field.pow(field.sub(1, c), pk_minus_1) == 1 && (n / g) % 2 == 0;
  v.relation = Relation::kAtLeast;
  v.predicted = static_cast<std::int64_t>(ipow(field.p(), g) + 1);
  if (!condition) {
    v.status = ClaimStatus::kNotApplicable;
    v.note = "(1-c)^(p^k-1) = 1 with n/gcd(n,k) even does not hold";
    return v;
  }
  judge(v);
  return v;
}

ClaimVerdict t4(const ClaimInstance& inst, const Field& field) {
  if (field.p() != 3) fail(ErrorCode::kInvalidArgument, "T4 needs p = 3");
  const std::uint32_t k = need(inst.params.k, "k", inst);
  const std::uint32_t n = field.n();
  auto f = coulter_matthews(field, k);
  auto v = start(inst, f);
  const Element c = field.neg(1);
  bool pcn = false;
  if (inst.variant == "stated") {
    pcn = (n / std::gcd(n, k)) % 2 == 1;
  } else if (inst.variant == "gcd-criterion") {
    pcn = chebyshev_is_permutation(3, n, (ipow(3, k) + 1) / 2);
  } else {
    unknown(inst);
  }
  predict_pcn(v, pcn);
  observe(v, f, c);
  judge(v);
  return v;
}

ClaimVerdict t5(const ClaimInstance& inst, const Field& field) {
  if (inst.variant != "bound") unknown(inst);
  const Element u = need(inst.params.u, "u", inst);
  const Element c = need(inst.params.c, "c", inst);
  auto f = ternary_family(field, u);
  auto v = start(inst, f);
  if (c == 1) {
    v.status = ClaimStatus::kNotApplicable;
    v.note = "c = 1 excluded";
    return v;
  }
  v.relation = Relation::kAtLeast;
  v.predicted = 2;
  observe(v, f, c);
  judge(v);
  return v;
}

ClaimVerdict t6(const ClaimInstance& inst, const Field& field) {
  if (inst.variant != "max-over-c") unknown(inst);
  auto f = FunctionTable::from_monomial(field, 3);
  auto v = start(inst, f);
  const std::uint32_t n = field.n();
  if (field.p() != 2 || n < 2) {
    v.status = ClaimStatus::kNotApplicable;
    v.note = "stated for GF(2^n), n >= 2";
    return v;
  }
  v.relation = Relation::kEquals;
  v.predicted = n == 2 ? 2 : 3;
  auto report = spectrum(f, CFilter::nonzero(), inst.convention, SweepOptions{1});
  v.observed = report.overall_max;
  if (report.argmax_c) {
    for (const auto& r : report.results) {
      if (r.c == *report.argmax_c) v.witness = r.witness;
    }
    v.note = "attained at c = " + std::to_string(*report.argmax_c);
  }
  judge(v);
  return v;
}

ClaimVerdict t7(const ClaimInstance& inst, const Field& field) {
  if (inst.variant != "inverse") unknown(inst);
  if (field.p() != 2) fail(ErrorCode::kInvalidArgument, "T7 needs p = 2");
  const Element c = need(inst.params.c, "c", inst);
  auto f = FunctionTable::inverse(field);
  auto v = start(inst, f);
  if (c == 1) {
    v.status = ClaimStatus::kNotApplicable;
    v.note = "c = 1 excluded";
    return v;
  }
  v.relation = Relation::kEquals;
  if (c == 0) v.predicted = 1;
  else v.predicted = field.trace(c) == 1 && field.trace(field.inv(c)) == 1 ? 2 : 3;
  observe(v, f, c);
  judge(v);
  return v;
}

ClaimVerdict t8(const ClaimInstance& inst, const Field& field) {
  if (inst.variant != "inverse") unknown(inst);
  if (field.p() == 2) fail(ErrorCode::kInvalidArgument, "T8 needs odd p");
  const Element c = need(inst.params.c, "c", inst);
  auto f = FunctionTable::inverse(field);
  auto v = start(inst, f);
  if (c == 1) {
    v.status = ClaimStatus::kNotApplicable;
    v.note = "c = 1 excluded";
    return v;
  }
  const Element four = field.from_int(4);
  const Element four_inv = field.inv(four);
  v.relation = Relation::kEquals;
  std::string case_name;
  if (c == 0) {
    v.predicted = 1;
    case_name = "(i)";
  } else if (c == four || c == four_inv) {
    v.predicted = 2;
    case_name = "(iii)";
  } else if (field.is_square(field.sub(field.mul(c, c), field.mul(four, c))) ||
             field.is_square(field.sub(1, field.mul(four, c)))) {
    v.predicted = 3;
    case_name = "(ii)";
  } else {
    v.predicted = 2;
    case_name = "(iv)";
  }
  observe(v, f, c);
  judge(v);
  v.note = "case " + case_name;
  if (field.p() == 3 && field.n() == 2 && c == field.neg(1)) {
    v.note += "; c=-1, p=3, n=2 is the known exceptional case, observed " + std::to_string(v.observed);
  }
  return v;
}

ClaimVerdict t9(const ClaimInstance& inst, const Field& field) {
  FunctionTable f = inst.variant == "square"    ? FunctionTable::from_monomial(field, 2)
                    : inst.variant == "cube"    ? FunctionTable::from_monomial(field, 3)
                    : inst.variant == "inverse" ? FunctionTable::inverse(field)
                                                : (unknown(inst), FunctionTable::inverse(field));
  auto v = start(inst, f);
  v.relation = Relation::kEquals;
  v.predicted = 0;
  const Element q = field.q();
  std::int64_t disagreements = 0;
  std::int64_t checked = 0;
  for (Element a = 0; a < q; ++a) {
    for (Element c1 = 1; c1 < q; ++c1) {
      for (Element c2 = 1; c2 < q; ++c2) {
        if (c1 == c2) continue;
        for (Element b1 = 0; b1 < q; ++b1) {
          for (Element b2 = 0; b2 < q; ++b2) {
            for (const auto& e : cross_solution_check(f, a, b1, b2, c1, c2)) {
              ++checked;
              if (e.predicted == e.actual) continue;
              if (disagreements++ == 0) {
                v.witness = Witness{a, b1, {e.x0}};
                v.note = "first disagreement at b2=" + std::to_string(b2) + ", c1=" + std::to_string(c1) +
                         ", c2=" + std::to_string(c2);
              }
            }
          }
        }
      }
    }
  }
  v.observed = disagreements;
  if (v.note.empty()) v.note = std::to_string(checked) + " solutions checked";
  judge(v);
  return v;
}

void add_all_c(std::vector<ClaimInstance>& out, const ClaimInstance& base, const Field& field, bool skip_one) {
  for (Element c = 0; c < field.q(); ++c) {
    if (skip_one && c == 1) continue;
    auto inst = base;
    inst.params.c = c;
    out.push_back(std::move(inst));
  }
}

ClaimInstance make(std::string claim, std::string variant, std::uint32_t p, std::uint32_t n,
                   AConvention conv = AConvention::kPaperFootnote) {
  ClaimInstance inst;
  inst.claim = std::move(claim);
  inst.variant = std::move(variant);
  inst.params.p = p;
  inst.params.n = n;
  inst.convention = conv;
  return inst;
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> odd_prime_powers(std::uint64_t max_q) {
  std::vector<std::pair<std::uint64_t, std::pair<std::uint32_t, std::uint32_t>>> found;
  for (std::uint32_t p = 3; p <= max_q; p += 2) {
    bool prime = true;
    for (std::uint32_t d = 3; d * d <= p; d += 2) prime = prime && p % d != 0;
    if (!prime) continue;
    std::uint64_t q = p;
    for (std::uint32_t n = 1; q <= max_q; ++n, q *= p) found.push_back({q, {p, n}});
  }
  std::sort(found.begin(), found.end());
  std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
  for (const auto& f : found) out.push_back(f.second);
  return out;
}

}  // namespace

ClaimVerdict verify(const ClaimInstance& inst) {
  const auto& ids = claim_ids();
  if (std::find(ids.begin(), ids.end(), inst.claim) == ids.end()) unknown(inst);
  const Field field = field_for(inst.params.p, inst.params.n);
  if (inst.params.c) field.check(*inst.params.c);
  if (inst.params.u) field.check(*inst.params.u);
  if (inst.claim == "T0") return t0(inst, field);
  if (inst.claim == "T1") return t1(inst, field);
  if (inst.claim == "T2") return t2(inst, field);
  if (inst.claim == "T3") return t3(inst, field);
  if (inst.claim == "T4") return t4(inst, field);
  if (inst.claim == "T5") return t5(inst, field);
  if (inst.claim == "T6") return t6(inst, field);
  if (inst.claim == "T7") return t7(inst, field);
  if (inst.claim == "T8") return t8(inst, field);
  return t9(inst, field);
}

std::vector<ClaimInstance> claim_grid(std::string_view claim, std::string_view preset) {
  if (preset != "quick" && preset != "full") fail(ErrorCode::kInvalidArgument, "unknown grid preset '" + std::string(preset) + "'");
  const bool full = preset == "full";
  std::vector<ClaimInstance> out;
  const auto paper = AConvention::kPaperFootnote;
  const auto nonzero = AConvention::kNonzeroOnly;

  if (claim == "T0") {
    for (auto [p, n] : odd_prime_powers(full ? 125 : 27)) {
      out.push_back(make("T0", "square", p, n));
      for (std::uint32_t k = 1; k <= n; ++k) {
        auto inst = make("T0", "gold", p, n);
        inst.params.k = k;
        out.push_back(inst);
      }
    }
    const std::uint32_t max_n = full ? 5 : 3;
    for (std::uint32_t n = 1; n <= max_n; ++n) {
      const Field field = field_for(3, n);
      for (Element u : {Element{1}, field.neg(1)}) {
        auto inst = make("T0", "ternary", 3, n);
        inst.params.u = u;
        out.push_back(inst);
      }
    }
    for (std::uint32_t n = 1; n <= max_n; n += 2) {
      for (Element u = 0; u < field_for(3, n).q(); ++u) {
        auto inst = make("T0", "ternary-u", 3, n);
        inst.params.u = u;
        out.push_back(inst);
      }
    }
    for (std::uint32_t n = 1; n <= max_n; ++n) {
      for (std::uint32_t k = 1; k <= n; ++k) {
        auto inst = make("T0", "coulter-matthews", 3, n);
        inst.params.k = k;
        out.push_back(inst);
      }
    }
  } else if (claim == "T1") {
    const std::vector<std::pair<std::uint32_t, std::uint32_t>> fields =
        full ? std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 2}, {2, 3}, {3, 2}, {2, 4}, {5, 2}, {3, 3}}
             : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 2}, {5, 1}, {3, 2}};
    for (auto [p, n] : fields) {
      const Field field = field_for(p, n);
      const Element g = field.primitive_element();
      for (std::uint32_t k = 0; k < n; ++k) {
        for (Element A : {Element{1}, g}) {
          for (Element B : {Element{0}, g}) {
            auto base = make("T1", "affine", p, n);
            base.params.k = k;
            base.params.A = A;
            base.params.B = B;
            add_all_c(out, base, field, true);
          }
        }
      }
    }
  } else if (claim == "T2") {
    for (auto [p, n] : odd_prime_powers(full ? 343 : 27)) add_all_c(out, make("T2", "square", p, n), field_for(p, n), true);
  } else if (claim == "T3") {
    struct Pkn {
      std::uint32_t p, k, n;
    };
    const std::vector<Pkn> tuples =
        full ? std::vector<Pkn>{{2, 1, 2}, {2, 1, 3}, {2, 1, 4}, {2, 1, 6}, {2, 2, 4}, {2, 2, 6}, {2, 2, 8},
                                {2, 3, 6}, {3, 1, 2}, {3, 1, 3}, {3, 1, 4}, {3, 2, 4}, {5, 1, 2}, {5, 1, 3}}
             : std::vector<Pkn>{{2, 1, 2}, {2, 2, 4}, {3, 1, 2}, {3, 1, 3}};
    for (const auto& t : tuples) {
      for (const char* variant : {"not-pcn", "bound"}) {
        auto base = make("T3", variant, t.p, t.n);
        base.params.k = t.k;
        add_all_c(out, base, field_for(t.p, t.n), true);
      }
    }
  } else if (claim == "T4") {
    const std::uint32_t max_n = full ? 5 : 3;
    for (std::uint32_t n = 1; n <= max_n; ++n) {
      for (std::uint32_t k = 1; k <= n; ++k) {
        for (const char* variant : {"stated", "gcd-criterion"}) {
          for (auto conv : {paper, nonzero}) {
            auto inst = make("T4", variant, 3, n, conv);
            inst.params.k = k;
            out.push_back(inst);
          }
        }
      }
    }
  } else if (claim == "T5") {
    const std::uint32_t max_n = full ? 4 : 2;
    for (std::uint32_t n = 1; n <= max_n; ++n) {
      const Field field = field_for(3, n);
      for (Element u = 0; u < field.q(); ++u) {
        auto base = make("T5", "bound", 3, n);
        base.params.u = u;
        add_all_c(out, base, field, true);
      }
    }
  } else if (claim == "T6") {
    for (std::uint32_t n = 2; n <= (full ? 8U : 5U); ++n) {
      for (auto conv : {nonzero, paper}) out.push_back(make("T6", "max-over-c", 2, n, conv));
    }
  } else if (claim == "T7") {
    for (std::uint32_t n = 3; n <= (full ? 10U : 6U); ++n) add_all_c(out, make("T7", "inverse", 2, n), field_for(2, n), true);
  } else if (claim == "T8") {
    const std::vector<std::pair<std::uint32_t, std::uint32_t>> fields =
        full ? std::vector<std::pair<std::uint32_t, std::uint32_t>>{{3, 1}, {5, 1}, {7, 1}, {11, 1}, {13, 1},
                                                                      {3, 2}, {5, 2}, {7, 2}, {3, 3}}
             : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{7, 1}, {3, 2}, {5, 2}};
    for (auto [p, n] : fields) add_all_c(out, make("T8", "inverse", p, n), field_for(p, n), true);
  } else if (claim == "T9") {
    const std::vector<std::pair<std::uint32_t, std::uint32_t>> fields =
        full ? std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 2}, {3, 1}, {5, 1}, {7, 1}, {2, 3}, {3, 2}}
             : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 2}, {3, 1}, {5, 1}};
    for (auto [p, n] : fields) {
      for (const char* variant : {"square", "cube", "inverse"}) out.push_back(make("T9", variant, p, n));
    }
  } else {
    fail(ErrorCode::kUnknownClaim, "unknown claim '" + std::string(claim) + "'");
  }
  return out;
}

bool ClaimSweep::any_refuted() const noexcept {
  return std::any_of(verdicts.begin(), verdicts.end(), [](const auto& v) { return v.status == ClaimStatus::kRefuted; });
}

ClaimSweep sweep(const std::vector<ClaimInstance>& instances, const SweepOptions& options) {
  ClaimSweep out;
  out.verdicts.resize(instances.size());
  detail::parallel_for(instances.size(), options.threads,
                       [&](std::size_t i, unsigned) { out.verdicts[i] = verify(instances[i]); });
  for (const auto& v : out.verdicts) {
    auto it = std::find_if(out.summary.begin(), out.summary.end(), [&](const ClaimSummaryRow& r) {
      return r.claim == v.instance.claim && r.variant == v.instance.variant && r.convention == v.instance.convention;
    });
    if (it == out.summary.end()) {
      out.summary.push_back({v.instance.claim, v.instance.variant, v.instance.convention});
      it = std::prev(out.summary.end());
    }
    switch (v.status) {
      case ClaimStatus::kConfirmed: ++it->confirmed; break;
      case ClaimStatus::kBoundHolds: ++it->bound_holds; break;
      case ClaimStatus::kRefuted: ++it->refuted; break;
      case ClaimStatus::kNotApplicable: ++it->not_applicable; break;
    }
  }
  return out;
}

ClaimSweep sweep(std::string_view claim, std::string_view preset, const SweepOptions& options) {
  return sweep(claim_grid(claim, preset), options);
}

nlohmann::json to_json(const ClaimVerdict& v) {
  const auto& prm = v.instance.params;
  nlohmann::json params{{"p", prm.p}, {"n", prm.n}};
  if (prm.k) params["k"] = *prm.k;
  if (prm.c) params["c"] = *prm.c;
  if (prm.u) params["u"] = *prm.u;
  if (prm.A) params["A"] = *prm.A;
  if (prm.B) params["B"] = *prm.B;
  nlohmann::json j{{"claim", v.instance.claim},
                   {"variant", v.instance.variant},
                   {"params", std::move(params)},
                   {"convention", to_string(v.instance.convention)},
                   {"function", v.function},
                   {"relation", to_string(v.relation)},
                   {"predicted", v.predicted},
                   {"observed", v.observed},
                   {"status", to_string(v.status)}};
  if (v.witness) j["witness"] = {{"a", v.witness->a}, {"b", v.witness->b}, {"solutions", v.witness->solutions}};
  if (!v.note.empty()) j["note"] = v.note;
  return j;
}

std::string summary_table(const ClaimSweep& sweep) {
  std::ostringstream os;
  char line[160];
  std::snprintf(line, sizeof line, "%-5s %-18s %-8s %10s %11s %8s %8s\n", "claim", "variant", "conv", "confirmed",
                "bound-holds", "refuted", "n/a");
  os << line;
  for (const auto& r : sweep.summary) {
    std::snprintf(line, sizeof line, "%-5s %-18s %-8s %10zu %11zu %8zu %8zu\n", r.claim.c_str(), r.variant.c_str(),
                  std::string(to_string(r.convention)).c_str(), r.confirmed, r.bound_holds, r.refuted, r.not_applicable);
    os << line;
  }
  return os.str();
}

}  // namespace cdiff

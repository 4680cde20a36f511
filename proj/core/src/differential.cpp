#include "cdiff/differential.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "cdiff/error.hpp"
#include "differential_kernel.hpp"
#include "parallel.hpp"

namespace cdiff {

std::string_view to_string(AConvention conv) {
  return conv == AConvention::kPaperFootnote ? "paper" : "nonzero";
}

AConvention parse_convention(std::string_view text) {
  if (text == "paper" || text == "paper-footnote" || text == "all-a") return AConvention::kPaperFootnote;
  if (text == "nonzero" || text == "nonzero-only") return AConvention::kNonzeroOnly;
  fail(ErrorCode::kInvalidArgument, "unknown a-convention '" + std::string(text) + "' (expected paper|nonzero)");
}

std::string_view to_string(Classification cls) {
  switch (cls) {
    case Classification::kPcN: return "PcN";
    case Classification::kAPcN: return "APcN";
    case Classification::kHigher: return "higher";
  }
  return "higher";
}

Classification classify(std::uint32_t uniformity) {
  if (uniformity == 1) return Classification::kPcN;
  if (uniformity == 2) return Classification::kAPcN;
  return Classification::kHigher;
}

namespace detail {

DifferentialKernel::DifferentialKernel(const FunctionTable& f, bool force_generic) : f_(&f) {
  const Field& field = f.field();
  if (force_generic) {
    mode_ = Mode::kGeneric;
  } else if (field.p() == 2) {
    mode_ = Mode::kXor;
  } else if (field.n() == 1) {
    mode_ = Mode::kPrime;
  } else if (!field.add_hi_table().empty()) {
    mode_ = Mode::kSplit;
    const Element lo = field.lo_order();
    const Element hi = field.hi_order();
    f_hi_.resize(f.q());
    f_lo_.resize(f.q());
    for (Element y = 0; y < f.q(); ++y) {
      f_hi_[y] = (f(y) / lo) * hi;
      f_lo_[y] = (f(y) % lo) * lo;
    }
  } else {
    mode_ = Mode::kGeneric;
  }
}

namespace {

// Runs fill_row(a, hist) for every a, which must populate hist and return the
// row maximum, and keeps the lexicographically first best (a, b).
template <class FillRow>
CScan scan_rows(Element q, std::vector<std::uint32_t>& hist, FillRow&& fill_row) {
  CScan out;
  for (Element a = 0; a < q; ++a) {
    const std::uint32_t m = fill_row(a, hist.data());
    RowBest& slot = a == 0 ? out.zero_row : out.nonzero_rows;
    if (m > slot.value) {
      slot.value = m;
      slot.a = a;
      slot.b = static_cast<Element>(std::find(hist.begin(), hist.end(), m) - hist.begin());
    }
    std::fill(hist.begin(), hist.end(), 0U);
  }
  return out;
}

}  // namespace

CScan DifferentialKernel::scan(Element c, std::vector<std::uint32_t>& hist) const {
  const FunctionTable& f = *f_;
  const Field& field = f.field();
  const Element q = f.q();
  const Element* fv = f.values().data();
  hist.assign(q, 0U);

  // t[x] = -c F(x)
  std::vector<Element> t(q);
  for (Element x = 0; x < q; ++x) t[x] = field.neg(field.mul(c, fv[x]));

  switch (mode_) {
    case Mode::kXor:
      return scan_rows(q, hist, [&](Element a, std::uint32_t* h) {
        std::uint32_t m = 0;
        for (Element x = 0; x < q; ++x) m = std::max(m, ++h[fv[x ^ a] ^ t[x]]);
        return m;
      });
    case Mode::kPrime: {
      const Element p = field.p();
      return scan_rows(q, hist, [&](Element a, std::uint32_t* h) {
        std::uint32_t m = 0;
        for (Element x = 0; x < q; ++x) {
          Element xa = x + a;
          if (xa >= p) xa -= p;
          Element d = fv[xa] + t[x];
          if (d >= p) d -= p;
          m = std::max(m, ++h[d]);
        }
        return m;
      });
    }
    case Mode::kSplit: {
      const Element lo = field.lo_order();
      const Element hi = field.hi_order();
      const Element* add_lo = field.add_lo_table().data();
      const Element* add_hi = field.add_hi_table().data();
      std::vector<Element> t_hi(q), t_lo(q);
      for (Element x = 0; x < q; ++x) {
        t_hi[x] = t[x] / lo;
        t_lo[x] = t[x] % lo;
      }
      const Element* fh = f_hi_.data();
      const Element* fl = f_lo_.data();
      return scan_rows(q, hist, [&](Element a, std::uint32_t* h) {
        const Element a_hi = a / lo;
        const Element a_lo = a % lo;
        std::uint32_t m = 0;
        for (Element xh = 0; xh < hi; ++xh) {
          const Element base = add_hi[xh * hi + a_hi];
          const Element row = xh * lo;
          for (Element xl = 0; xl < lo; ++xl) {
            const Element xa = base + add_lo[xl * lo + a_lo];
            const Element x = row + xl;
            const Element d = add_hi[fh[xa] + t_hi[x]] + add_lo[fl[xa] + t_lo[x]];
            m = std::max(m, ++h[d]);
          }
        }
        return m;
      });
    }
    case Mode::kGeneric:
      break;
  }
  return scan_rows(q, hist, [&](Element a, std::uint32_t* h) {
    std::uint32_t m = 0;
    for (Element x = 0; x < q; ++x) m = std::max(m, ++h[field.add(fv[field.add(x, a)], t[x])]);
    return m;
  });
}

}  // namespace detail

namespace {

UniformityResult resolve(const FunctionTable& f, Element c, AConvention conv, const detail::CScan& scan) {
  const bool include_zero = conv == AConvention::kPaperFootnote && c != 1;
  detail::RowBest best = scan.nonzero_rows;
  // a = 0 precedes every nonzero a, so it wins ties.
  if (include_zero && scan.zero_row.value >= best.value) best = scan.zero_row;
  UniformityResult r;
  r.c = c;
  r.value = best.value;
  r.witness.a = best.a;
  r.witness.b = best.b;
  r.witness.solutions = solutions(f, c, best.a, best.b);
  r.classification = classify(best.value);
  return r;
}

void finish(SpectrumReport& report) {
  report.overall_max = 0;
  report.argmax_c.reset();
  for (const auto& r : report.results) {
    if (r.value > report.overall_max) {
      report.overall_max = r.value;
      report.argmax_c = r.c;
    }
  }
}

}  // namespace

FunctionTable c_derivative(const FunctionTable& f, Element c, Element a) {
  const Field& field = f.field();
  field.check(c);
  field.check(a);
  std::vector<Element> values(f.q());
  for (Element x = 0; x < f.q(); ++x) values[x] = field.sub(f(field.add(x, a)), field.mul(c, f(x)));
  return FunctionTable::from_values(field, std::move(values));
}

DdtMatrix ddt(const FunctionTable& f, Element c) {
  const Field& field = f.field();
  field.check(c);
  if (f.q() > DdtMatrix::kMaxDenseOrder) {
    fail(ErrorCode::kSizeGuardExceeded, "dense DDT limited to q <= " + std::to_string(DdtMatrix::kMaxDenseOrder));
  }
  const Element q = f.q();
  std::vector<std::uint32_t> counts(std::size_t{q} * q, 0);
  for (Element a = 0; a < q; ++a) {
    for (Element x = 0; x < q; ++x) {
      ++counts[std::size_t{a} * q + field.sub(f(field.add(x, a)), field.mul(c, f(x)))];
    }
  }
  return DdtMatrix(q, std::move(counts));
}

std::vector<Element> solutions(const FunctionTable& f, Element c, Element a, Element b) {
  const Field& field = f.field();
  std::vector<Element> out;
  for (Element x = 0; x < f.q(); ++x) {
    if (field.sub(f(field.add(x, a)), field.mul(c, f(x))) == b) out.push_back(x);
  }
  return out;
}

UniformityResult uniformity(const FunctionTable& f, Element c, AConvention conv) {
  f.field().check(c);
  detail::DifferentialKernel kernel(f);
  std::vector<std::uint32_t> hist;
  return resolve(f, c, conv, kernel.scan(c, hist));
}

std::vector<Element> CFilter::select(const Field& field) const {
  std::vector<Element> out;
  switch (kind) {
    case Kind::kAll:
      out = field.elements();
      break;
    case Kind::kNonzero:
      for (Element c = 1; c < field.q(); ++c) out.push_back(c);
      break;
    case Kind::kExclude01:
      for (Element c = 2; c < field.q(); ++c) out.push_back(c);
      break;
    case Kind::kList:
      for (auto c : list) {
        field.check(c);
        out.push_back(c);
      }
      std::sort(out.begin(), out.end());
      out.erase(std::unique(out.begin(), out.end()), out.end());
      break;
  }
  return out;
}

std::string CFilter::describe() const {
  switch (kind) {
    case Kind::kAll: return "all";
    case Kind::kNonzero: return "nonzero";
    case Kind::kExclude01: return "no01";
    case Kind::kList: break;
  }
  std::ostringstream os;
  os << "list:";
  for (std::size_t i = 0; i < list.size(); ++i) os << (i ? "," : "") << list[i];
  return os.str();
}

CFilter parse_c_filter(std::string_view text) {
  if (text == "all") return CFilter::all();
  if (text == "nonzero") return CFilter::nonzero();
  if (text == "no01" || text == "exclude_0_1") return CFilter::exclude_0_1();
  if (text.starts_with("list:")) text.remove_prefix(5);
  std::vector<Element> cs;
  while (!text.empty()) {
    const auto comma = text.find(',');
    const auto token = text.substr(0, comma);
    Element v = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec != std::errc() || ptr != token.data() + token.size() || token.empty()) {
      fail(ErrorCode::kInvalidArgument, "bad c-set entry '" + std::string(token) + "'");
    }
    cs.push_back(v);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  if (cs.empty()) fail(ErrorCode::kInvalidArgument, "empty c-set");
  return CFilter::explicit_list(std::move(cs));
}

DualSpectrum spectrum_both(const FunctionTable& f, const CFilter& filter, const SweepOptions& options) {
  const auto cs = filter.select(f.field());
  detail::DifferentialKernel kernel(f);
  std::vector<detail::CScan> scans(cs.size());
  const unsigned workers = detail::resolve_threads(options.threads, cs.size());
  std::vector<std::vector<std::uint32_t>> hists(workers);
  detail::parallel_for(cs.size(), workers, [&](std::size_t i, unsigned w) { scans[i] = kernel.scan(cs[i], hists[w]); });

  DualSpectrum out{SpectrumReport{f.field(), f.origin(), AConvention::kPaperFootnote, filter, {}, 0, {}},
                   SpectrumReport{f.field(), f.origin(), AConvention::kNonzeroOnly, filter, {}, 0, {}}};
  out.paper_footnote.results.reserve(cs.size());
  out.nonzero_only.results.reserve(cs.size());
  for (std::size_t i = 0; i < cs.size(); ++i) {
    out.paper_footnote.results.push_back(resolve(f, cs[i], AConvention::kPaperFootnote, scans[i]));
    out.nonzero_only.results.push_back(resolve(f, cs[i], AConvention::kNonzeroOnly, scans[i]));
  }
  finish(out.paper_footnote);
  finish(out.nonzero_only);
  return out;
}

SpectrumReport spectrum(const FunctionTable& f, const CFilter& filter, AConvention conv, const SweepOptions& options) {
  auto both = spectrum_both(f, filter, options);
  return conv == AConvention::kPaperFootnote ? std::move(both.paper_footnote) : std::move(both.nonzero_only);
}

std::vector<CrossSolutionEntry> cross_solution_check(const FunctionTable& f, Element a, Element b1, Element b2,
                                                     Element c1, Element c2) {
  const Field& field = f.field();
  for (auto v : {a, b1, b2, c1, c2}) field.check(v);
  if (c1 == c2 || c1 == 0 || c2 == 0) fail(ErrorCode::kDegenerateCs, "need c1 != c2, both nonzero");
  const Element shared_value = field.div(field.sub(b1, b2), field.sub(c2, c1));
  std::vector<CrossSolutionEntry> out;
  for (auto x0 : solutions(f, c1, a, b1)) {
    CrossSolutionEntry e;
    e.x0 = x0;
    e.predicted = f(x0) == shared_value;
    e.actual = field.sub(f(field.add(x0, a)), field.mul(c2, f(x0))) == b2;
    out.push_back(e);
  }
  return out;
}

}  // namespace cdiff

#include "gpl/stats/coupling.hpp"

#include <cmath>
#include <vector>

#include "gpl/error.hpp"
#include "gpl/stats/ks.hpp"
#include "gpl/stats/summary.hpp"

namespace gpl::stats {

namespace {

struct Eps {
  double e1, e2, e3;
};

Eps evaluate(std::span<const double> a, std::span<const double> b) {
  const SampleSummary sa = summarize(a);
  const SampleSummary sb = summarize(b);
  const double sigma_b = sb.sd();
  if (!(sigma_b > 0.0)) throw Error(Errc::degenerate_variance, "coupling reference sample has zero variance");
  return {std::abs(sb.mean - sa.mean) / sigma_b, std::abs(sigma_b - sa.sd()) / sigma_b, two_sample_ks(a, b)};
}

double sd_of(const std::vector<double>& v) {
  return v.size() < 2 ? 0.0 : summarize(v).sd();
}

}  // namespace

CouplingEstimate coupling_estimate(std::span<const double> a, std::span<const double> b, sampling::RngStream& rng,
                                   std::size_t resamples) {
  if (a.empty() || b.empty()) throw Error(Errc::config_invalid, "coupling estimate needs nonempty samples");
  const Eps base = evaluate(a, b);
  CouplingEstimate out{base.e1, base.e2, base.e3, 0.0, 0.0, 0.0, 0.0};
  const bool paired = a.size() == b.size();
  if (paired) {
    std::size_t equal = 0;
    for (std::size_t i = 0; i < a.size(); ++i) equal += a[i] == b[i] ? 1 : 0;
    out.equal_fraction = static_cast<double>(equal) / static_cast<double>(a.size());
  }

  std::vector<double> e1, e2, e3, ra(a.size()), rb(b.size());
  for (std::size_t k = 0; k < resamples; ++k) {
    if (paired) {
      for (std::size_t i = 0; i < a.size(); ++i) {
        const std::size_t j = rng.below(a.size());
        ra[i] = a[j];
        rb[i] = b[j];
      }
    } else {
      for (auto& v : ra) v = a[rng.below(a.size())];
      for (auto& v : rb) v = b[rng.below(b.size())];
    }
    try {
      const Eps e = evaluate(ra, rb);
      e1.push_back(e.e1);
      e2.push_back(e.e2);
      e3.push_back(e.e3);
    } catch (const Error& err) {
      if (err.code() != Errc::degenerate_variance) throw;
    }
  }
  out.eps1_se = sd_of(e1);
  out.eps2_se = sd_of(e2);
  out.eps3_se = sd_of(e3);
  return out;
}

}  // namespace gpl::stats

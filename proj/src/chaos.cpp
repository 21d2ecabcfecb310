#include "gibbsbo/chaos.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "gibbsbo/parallel.hpp"
#include "gibbsbo/spectral.hpp"
#include "gibbsbo/summation.hpp"
#include "gibbsbo/wick.hpp"

namespace gibbsbo {

namespace {

constexpr std::size_t kBootstrapReplicates = 200;
constexpr std::uint64_t kBootstrapTag = 0xB0075;

int arity(ChaosKind kind) {
  switch (kind) {
    case ChaosKind::product3: return 3;
    case ChaosKind::mixed3: return 2;
    case ChaosKind::square2: return 1;
  }
  return 0;
}

struct Monomial {
  double coeff;
  std::vector<int> vars;
};

std::vector<Monomial> expand(const ChaosFunctionSpec& spec) {
  std::vector<Monomial> out;
  for (const auto& t : spec.terms) {
    const auto& i = t.index;
    switch (spec.kind) {
      case ChaosKind::product3:
        out.push_back({t.coeff, {i[0], i[1], i[2]}});
        break;
      case ChaosKind::mixed3:
        out.push_back({t.coeff, {i[0], i[1], i[1]}});
        out.push_back({-t.coeff, {i[0]}});
        break;
      case ChaosKind::square2:
        out.push_back({t.coeff, {i[0], i[0]}});
        out.push_back({-t.coeff, {}});
        break;
    }
  }
  return out;
}

// sum over all p-fold products of monomials
void moment_product(const std::vector<Monomial>& terms, int depth, double coeff,
                    std::vector<int>& vars, CompensatedSum& sum) {
  if (depth == 0) {
    sum.add(coeff * real_gaussian_moment(vars));
    return;
  }
  for (const auto& m : terms) {
    const auto size = vars.size();
    vars.insert(vars.end(), m.vars.begin(), m.vars.end());
    moment_product(terms, depth - 1, coeff * m.coeff, vars, sum);
    vars.resize(size);
  }
}

struct ChunkMoments {
  std::vector<double> abs_p;
  std::vector<double> abs_p_sq;
  double square = 0.0;
  double count = 0.0;
};

double ratio_from(double moment_p, double moment_2, double p) {
  return std::pow(moment_p, 1.0 / p) / std::sqrt(moment_2);
}

}  // namespace

double hermite(int k, double x) {
  if (k < 0) throw PreconditionError("Hermite degree must be nonnegative");
  if (k > kMaxHermiteDegree) throw DegreeTooLargeError("Hermite degree above 30");
  double prev = 1.0;
  if (k == 0) return prev;
  double cur = -x;
  for (int j = 1; j < k; ++j) {
    const double next = -(x * cur + std::sqrt(static_cast<double>(j)) * prev) /
                        std::sqrt(static_cast<double>(j + 1));
    prev = cur;
    cur = next;
  }
  return cur;
}

int chaos_degree(ChaosKind kind) { return kind == ChaosKind::square2 ? 2 : 3; }

void ChaosFunctionSpec::validate() const {
  if (dimension < 1) throw PreconditionError("chaos dimension must be positive");
  if (terms.empty()) throw PreconditionError("chaos spec has no terms");
  const int a = arity(kind);
  for (const auto& t : terms) {
    for (int j = 0; j < a; ++j) {
      if (t.index[j] < 1 || t.index[j] > dimension) {
        throw PreconditionError("chaos index outside 1..dimension");
      }
      for (int l = 0; l < j; ++l) {
        if (t.index[j] == t.index[l]) throw PreconditionError("chaos indices must be distinct");
      }
    }
  }
}

double ChaosFunctionSpec::evaluate(std::span<const double> x) const {
  double sum = 0.0;
  for (const auto& t : terms) {
    const auto& i = t.index;
    switch (kind) {
      case ChaosKind::product3:
        sum += t.coeff * x[i[0] - 1] * x[i[1] - 1] * x[i[2] - 1];
        break;
      case ChaosKind::mixed3: {
        const double y = x[i[1] - 1];
        sum += t.coeff * x[i[0] - 1] * (y * y - 1.0);
        break;
      }
      case ChaosKind::square2: {
        const double y = x[i[0] - 1];
        sum += t.coeff * (y * y - 1.0);
        break;
      }
    }
  }
  return sum;
}

ChaosFunctionSpec random_chaos_spec(ChaosKind kind, int dimension, int n_terms,
                                    RandomStream& stream) {
  const int a = arity(kind);
  if (dimension < a) throw PreconditionError("dimension too small for this chaos kind");
  ChaosFunctionSpec spec{dimension, kind, {}};
  std::set<std::array<int, 3>> seen;
  int attempts = 0;
  while (static_cast<int>(spec.terms.size()) < n_terms && attempts++ < 100 * n_terms) {
    std::array<int, 3> idx{};
    for (int j = 0; j < a; ++j) {
      int v;
      do {
        v = 1 + static_cast<int>(stream.below(static_cast<std::uint64_t>(dimension)));
      } while (std::find(idx.begin(), idx.begin() + j, v) != idx.begin() + j);
      idx[j] = v;
    }
    // products are symmetric; the mixed kind is ordered
    if (kind == ChaosKind::product3) std::sort(idx.begin(), idx.end());
    if (!seen.insert(idx).second) continue;
    spec.terms.push_back({idx, stream.normal()});
  }
  spec.validate();
  return spec;
}

double exact_chaos_moment(const ChaosFunctionSpec& spec, int p) {
  spec.validate();
  if (p < 0 || p % 2 != 0) throw PreconditionError("exact moments need an even order");
  const auto terms = expand(spec);
  CompensatedSum sum;
  std::vector<int> vars;
  moment_product(terms, p, 1.0, vars, sum);
  return sum.value();
}

std::vector<LpRatio> chaos_lp_ratios(const ChaosFunctionSpec& spec, std::span<const double> p_list,
                                     std::size_t samples, const StreamFactory& streams) {
  spec.validate();
  if (samples < 2) throw PreconditionError("need at least two samples");
  for (double p : p_list) {
    if (!(p >= 2.0)) throw PreconditionError("p must be at least 2");
  }
  const std::size_t np = p_list.size();
  auto chunks = parallel_chunks(samples, [&](std::size_t begin, std::size_t end) {
    ChunkMoments m{std::vector<double>(np, 0.0), std::vector<double>(np, 0.0), 0.0,
                    static_cast<double>(end - begin)};
    std::vector<CompensatedSum> acc(np), acc_sq(np);
    CompensatedSum sq;
    std::vector<double> x(static_cast<std::size_t>(spec.dimension));
    for (std::size_t i = begin; i < end; ++i) {
      auto stream = streams.stream(i);
      for (auto& v : x) v = stream.normal();
      const double h = spec.evaluate(x);
      const double h2 = h * h;
      sq.add(h2);
      for (std::size_t j = 0; j < np; ++j) {
        const double hp = p_list[j] == 2.0 ? h2 : std::pow(std::abs(h), p_list[j]);
        acc[j].add(hp);
        acc_sq[j].add(hp * hp);
      }
    }
    for (std::size_t j = 0; j < np; ++j) {
      m.abs_p[j] = acc[j].value();
      m.abs_p_sq[j] = acc_sq[j].value();
    }
    m.square = sq.value();
    return m;
  });

  const auto n = static_cast<double>(samples);
  std::vector<LpRatio> out(np);
  CompensatedSum sq_total;
  for (const auto& c : chunks) sq_total.add(c.square);
  const double moment_2 = sq_total.value() / n;
  const int k = chaos_degree(spec.kind);

  auto boot_stream = streams.substream(kBootstrapTag).stream(0);
  std::vector<std::size_t> picks(kBootstrapReplicates * chunks.size());
  for (auto& idx : picks) idx = boot_stream.below(chunks.size());

  for (std::size_t j = 0; j < np; ++j) {
    const double p = p_list[j];
    CompensatedSum total, total_sq;
    for (const auto& c : chunks) {
      total.add(c.abs_p[j]);
      total_sq.add(c.abs_p_sq[j]);
    }
    out[j].p = p;
    out[j].moment_p = total.value() / n;
    const double var = (total_sq.value() / n - out[j].moment_p * out[j].moment_p) * n / (n - 1.0);
    out[j].moment_p_se = std::sqrt(std::max(var, 0.0) / n);
    out[j].moment_2 = moment_2;
    out[j].bound = std::pow(p - 1.0, 0.5 * k);
    out[j].ratio.value = p == 2.0 ? 1.0 : ratio_from(out[j].moment_p, moment_2, p);
    out[j].ratio.n_samples = samples;
    out[j].ratio.seed = streams.seed();
    if (p == 2.0) continue;

    // resample whole chunks as blocks
    MomentAccumulator replicates;
    for (std::size_t r = 0; r < kBootstrapReplicates; ++r) {
      double sp = 0.0, s2 = 0.0, count = 0.0;
      for (std::size_t b = 0; b < chunks.size(); ++b) {
        const auto& c = chunks[picks[r * chunks.size() + b]];
        sp += c.abs_p[j];
        s2 += c.square;
        count += c.count;
      }
      replicates.add(ratio_from(sp / count, s2 / count, p));
    }
    out[j].ratio.std_error = std::sqrt(replicates.variance());
  }
  return out;
}

LpRatio chaos_lp_ratio(const ChaosFunctionSpec& spec, double p, std::size_t samples,
                       const StreamFactory& streams) {
  const double ps[] = {p};
  return chaos_lp_ratios(spec, ps, samples, streams).front();
}

double gaussian_tail_bound(std::span<const double> c, double lambda) {
  double s2 = 0.0;
  for (double v : c) s2 += v * v;
  if (!(s2 > 0.0)) throw PreconditionError("coefficients must not all vanish");
  return 2.0 * std::exp(-lambda * lambda / (2.0 * s2));
}

double exact_gaussian_tail(std::span<const double> c, double lambda) {
  double s2 = 0.0;
  for (double v : c) s2 += v * v;
  if (!(s2 > 0.0)) throw PreconditionError("coefficients must not all vanish");
  return std::erfc(lambda / std::sqrt(2.0 * s2));
}

EstimateWithError empirical_tail(std::span<const double> c, double lambda, std::size_t samples,
                                 const StreamFactory& streams) {
  if (samples < 2) throw PreconditionError("need at least two samples");
  gaussian_tail_bound(c, lambda);  // validates the coefficients
  auto chunks = parallel_chunks(samples, [&](std::size_t begin, std::size_t end) {
    MomentAccumulator acc;
    for (std::size_t i = begin; i < end; ++i) {
      auto stream = streams.stream(i);
      double s = 0.0;
      for (double v : c) s += v * stream.normal();
      acc.add(std::abs(s) > lambda ? 1.0 : 0.0);
    }
    return acc;
  });
  MomentAccumulator total;
  for (const auto& a : chunks) total.merge(a);
  return total.estimate(streams.seed());
}

double MomentTail::operator()(double lambda) const {
  const double k = spec.k;
  return C1 * std::exp(-delta * std::pow(spec.N, 2.0 * spec.alpha / k) *
                       std::pow(lambda, 2.0 / k));
}

MomentTail moment_to_tail(const MomentTailSpec& spec) {
  if (!(spec.C > 0.0) || !(spec.N > 0.0) || spec.k < 1) {
    throw PreconditionError("moment-tail spec needs C > 0, N > 0, k >= 1");
  }
  MomentTail out{spec, 0.0, 0.0, 0.0};
  const double k = spec.k;
  const double c2k = std::pow(spec.C, 2.0 / k);
  out.ceiling = k / (2.0 * c2k * std::exp(1.0));
  out.delta = 0.5 * out.ceiling;

  // low orders through Hoelder with the L^{2n} bound, high orders through
  // n^n / n! <= e^n / sqrt(2 pi n) and the geometric ratio r
  double c1 = 1.0;
  for (int n = 1; n < spec.k; ++n) {
    c1 += std::pow(c2k, n) * std::pow(2.0 * n, n) * std::pow(out.delta, n) / std::tgamma(n + 1.0);
  }
  const double r = (2.0 / k) * c2k * std::exp(1.0) * out.delta;
  c1 += std::pow(r, k) / (1.0 - r) / std::sqrt(2.0 * kPi);
  out.C1 = c1;
  return out;
}

}  // namespace gibbsbo

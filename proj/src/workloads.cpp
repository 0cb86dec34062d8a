#include "mcsm/workloads.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace mcsm::workloads {

namespace {

bool is_power_of_two(long v) { return v > 0 && (v & (v - 1)) == 0; }

long int_log2(long v) {
  long l = 0;
  while ((1L << l) < v) ++l;
  return l;
}

long int_sqrt(long v) {
  long s = std::lround(std::sqrt(static_cast<double>(v)));
  while (s * s > v) --s;
  while ((s + 1) * (s + 1) <= v) ++s;
  return s;
}

bool is_perfect_square(long v) {
  const long s = int_sqrt(v);
  return v >= 0 && s * s == v;
}

// mt19937 draws mapped to [lo, hi) by hand; the engine's sequence is pinned
// by the standard, the distribution classes are not.
class UniformSource {
 public:
  explicit UniformSource(std::uint32_t seed) : gen_(seed) {}

  double next(double lo, double hi) {
    const double u = gen_() * (1.0 / 4294967296.0);
    return lo + (hi - lo) * u;
  }

  float nextf(double lo, double hi) { return static_cast<float>(next(lo, hi)); }

 private:
  std::mt19937 gen_;
};

}  // namespace

std::string to_string(Kind k) {
  switch (k) {
    case Kind::black_scholes:
      return "black-scholes";
    case Kind::fft:
      return "fft";
    case Kind::dmm:
      return "dmm";
  }
  return "?";
}

Kind kind_from_string(const std::string& name) {
  if (name == "black-scholes") return Kind::black_scholes;
  if (name == "fft") return Kind::fft;
  if (name == "dmm") return Kind::dmm;
  throw std::invalid_argument("unknown workload \"" + name +
                              "\"; expected black-scholes, fft or dmm");
}

WorkloadSpec make_spec(Kind kind, long task_size) {
  if (task_size <= 0) {
    throw std::invalid_argument("task size must be positive");
  }
  WorkloadSpec spec;
  spec.kind = kind;
  spec.name = to_string(kind);
  spec.task_size = task_size;
  switch (kind) {
    case Kind::black_scholes:
      spec.comm_pattern = CommPattern::none;
      break;
    case Kind::fft:
      if (!is_power_of_two(task_size)) {
        throw std::invalid_argument("FFT task size must be a power of two");
      }
      spec.comm_pattern = CommPattern::butterfly;
      break;
    case Kind::dmm:
      if (!is_perfect_square(task_size)) {
        throw std::invalid_argument(
            "DMM task size must be a perfect square element count");
      }
      spec.comm_pattern = CommPattern::cannon_shift;
      break;
  }
  return spec;
}

long serial_cycles(Kind kind, long task_size) {
  make_spec(kind, task_size);  // shape check
  switch (kind) {
    case Kind::black_scholes:
      return 560 * task_size;
    case Kind::fft:
      return 5 * task_size * int_log2(task_size);
    case Kind::dmm: {
      const long m = int_sqrt(task_size);
      return 2 * m * m * m;
    }
  }
  return 0;
}

Volumes declared_volumes(Kind kind, long task_size, long cores) {
  if (cores < 1) {
    throw std::invalid_argument("core count must be >= 1");
  }
  // One core is the sequential core itself: nothing crosses a channel.
  if (cores == 1) return {};
  switch (kind) {
    case Kind::black_scholes:
      // 6 inputs down and 2 prices up per pair.
      return {6 * task_size, 2 * task_size, 0};
    case Kind::fft:
      // N complex samples each way; every remote stage exchanges the
      // whole array once.
      return {task_size, task_size, task_size * int_log2(cores)};
    case Kind::dmm:
      // Two operand matrices down, the product up; Cannon moves both
      // operand blocks every round, sqrt(nc) rounds.
      return {2 * task_size, task_size, 2 * task_size * int_sqrt(cores)};
  }
  return {};
}

bool partition_feasible(Kind kind, long task_size, long cores,
                        std::string* why) {
  auto fail = [&](const std::string& reason) {
    if (why) *why = reason;
    return false;
  };
  if (cores < 1) return fail("core count must be >= 1");
  if (cores > task_size) return fail("more cores than work items");
  switch (kind) {
    case Kind::black_scholes:
      if (task_size % cores != 0) {
        return fail("option count not divisible by core count");
      }
      return true;
    case Kind::fft:
      if (!is_power_of_two(cores)) {
        return fail("FFT needs a power-of-two core count");
      }
      return true;  // N is a power of two, so nc <= N divides it
    case Kind::dmm: {
      if (!is_perfect_square(cores)) {
        return fail("Cannon grid needs a perfect-square core count");
      }
      const long m = int_sqrt(task_size);
      if (m % int_sqrt(cores) != 0) {
        return fail("matrix dim not divisible by the Cannon grid side");
      }
      return true;
    }
  }
  return fail("unknown workload");
}

// --- Black-Scholes ----------------------------------------------------------

double norm_cdf(double x) {
  // Polynomial tail fit with t = 1/(1 + p|x|); symmetric by construction.
  static constexpr double p = 0.2316419;
  static constexpr double b1 = 0.319381530;
  static constexpr double b2 = -0.356563782;
  static constexpr double b3 = 1.781477937;
  static constexpr double b4 = -1.821255978;
  static constexpr double b5 = 1.330274429;
  const double ax = std::abs(x);
  const double t = 1.0 / (1.0 + p * ax);
  const double poly = t * (b1 + t * (b2 + t * (b3 + t * (b4 + t * b5))));
  const double pdf = std::exp(-0.5 * ax * ax) / std::sqrt(2.0 * std::numbers::pi);
  const double tail = pdf * poly;
  return x >= 0.0 ? 1.0 - tail : tail;
}

void price_pair(OptionPair& pair) {
  if (!(pair.spot > 0.0f) || !(pair.strike > 0.0f) || !(pair.expiry > 0.0f) ||
      !(pair.volatility > 0.0f)) {
    throw std::invalid_argument(
        "option inputs (spot, strike, expiry, volatility) must be positive");
  }
  if (!(pair.rate > 0.0f) || !(pair.dividend_yield >= 0.0f)) {
    throw std::invalid_argument("rate must be positive, dividend >= 0");
  }
  const double s = pair.spot;
  const double k = pair.strike;
  const double t = pair.expiry;
  const double r = pair.rate;
  const double v = pair.volatility;
  const double q = pair.dividend_yield;

  const double vol_sqrt_t = v * std::sqrt(t);
  const double d1 =
      (std::log(s / k) + (r - q + 0.5 * v * v) * t) / vol_sqrt_t;
  const double d2 = d1 - vol_sqrt_t;
  const double disc_s = s * std::exp(-q * t);
  const double disc_k = k * std::exp(-r * t);

  pair.call_price =
      static_cast<float>(disc_s * norm_cdf(d1) - disc_k * norm_cdf(d2));
  pair.put_price =
      static_cast<float>(disc_k * norm_cdf(-d2) - disc_s * norm_cdf(-d1));
}

void black_scholes_serial(std::span<OptionPair> pairs) {
  for (OptionPair& pair : pairs) price_pair(pair);
}

// --- FFT --------------------------------------------------------------------

void fft_bit_reverse(std::vector<std::complex<float>>& samples) {
  const long n = static_cast<long>(samples.size());
  if (!is_power_of_two(n)) {
    throw std::invalid_argument("FFT length must be a power of two");
  }
  for (long i = 1, j = 0; i < n; ++i) {
    long bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(samples[static_cast<size_t>(i)],
                         samples[static_cast<size_t>(j)]);
  }
}

void fft_apply_stage(std::vector<std::complex<float>>& samples, long stage) {
  const long n = static_cast<long>(samples.size());
  const long half = 1L << stage;
  const long span = half << 1;
  if (!is_power_of_two(n) || span > n) {
    throw std::invalid_argument("FFT stage out of range");
  }
  for (long base = 0; base < n; base += span) {
    for (long k = 0; k < half; ++k) {
      const double angle = -std::numbers::pi * k / half;
      const std::complex<float> w(static_cast<float>(std::cos(angle)),
                                  static_cast<float>(std::sin(angle)));
      auto& a = samples[static_cast<size_t>(base + k)];
      auto& b = samples[static_cast<size_t>(base + k + half)];
      const std::complex<float> t = w * b;
      b = a - t;
      a += t;
    }
  }
}

std::vector<std::complex<float>> fft_serial(
    std::vector<std::complex<float>> samples) {
  fft_bit_reverse(samples);
  const long stages = int_log2(static_cast<long>(samples.size()));
  for (long s = 0; s < stages; ++s) {
    fft_apply_stage(samples, s);
  }
  return samples;
}

// --- Dense matrix multiplication ---------------------------------------------

MatrixF dmm_serial(const MatrixF& a, const MatrixF& b) {
  if (a.dim != b.dim || a.dim <= 0) {
    throw std::invalid_argument("DMM operands must be square and same size");
  }
  const long n = a.dim;
  MatrixF c(n);
  for (long i = 0; i < n; ++i) {
    for (long j = 0; j < n; ++j) {
      float acc = 0.0f;
      for (long k = 0; k < n; ++k) {
        acc += a.at(i, k) * b.at(k, j);
      }
      c.at(i, j) = acc;
    }
  }
  return c;
}

// --- Deterministic inputs -----------------------------------------------------

std::vector<OptionPair> generate_option_pairs(long count, std::uint32_t seed) {
  UniformSource rng(seed);
  std::vector<OptionPair> pairs(static_cast<size_t>(count));
  for (OptionPair& p : pairs) {
    p.spot = rng.nextf(50.0, 150.0);
    p.strike = rng.nextf(50.0, 150.0);
    p.expiry = rng.nextf(0.25, 2.0);
    p.rate = rng.nextf(0.01, 0.10);
    p.volatility = rng.nextf(0.10, 0.50);
    p.dividend_yield = rng.nextf(0.0, 0.05);
  }
  return pairs;
}

std::vector<std::complex<float>> generate_samples(long count,
                                                  std::uint32_t seed) {
  UniformSource rng(seed);
  std::vector<std::complex<float>> samples(static_cast<size_t>(count));
  for (auto& s : samples) {
    s = {rng.nextf(-1.0, 1.0), rng.nextf(-1.0, 1.0)};
  }
  return samples;
}

MatrixF generate_matrix(long dim, std::uint32_t seed) {
  UniformSource rng(seed);
  MatrixF m(dim);
  for (float& v : m.data) v = rng.nextf(-1.0, 1.0);
  return m;
}

}  // namespace mcsm::workloads

#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace mcsm::workloads {

enum class Kind { black_scholes, fft, dmm };

std::string to_string(Kind k);
Kind kind_from_string(const std::string& name);

enum class CommPattern { none, butterfly, cannon_shift };

// Static description of one instrumented kernel at task size N.
struct WorkloadSpec {
  Kind kind = Kind::black_scholes;
  std::string name;
  long task_size = 0;
  CommPattern comm_pattern = CommPattern::none;
};

// Validates the N shape for the kernel (power of two for FFT, perfect
// square for DMM) and fills in the pattern.
WorkloadSpec make_spec(Kind kind, long task_size);

// Serial cycle charge per the closed forms: 560*N (Black-Scholes),
// 5*N*log2(N) (FFT), 2*N^1.5 (DMM).
long serial_cycles(Kind kind, long task_size);

// Data elements crossing the sync channel and the switch for an nc-core
// run; a single core moves nothing.
struct Volumes {
  long sync_down = 0;
  long sync_up = 0;
  long comm = 0;

  long sync_total() const { return sync_down + sync_up; }
};

Volumes declared_volumes(Kind kind, long task_size, long cores);

// True when the kernel can be partitioned over `cores`; otherwise the
// reason lands in *why when given.
bool partition_feasible(Kind kind, long task_size, long cores,
                        std::string* why = nullptr);

// --- Black-Scholes ---------------------------------------------------------

struct OptionPair {
  float spot = 0.0f;
  float strike = 0.0f;
  float expiry = 0.0f;
  float rate = 0.0f;
  float volatility = 0.0f;
  float dividend_yield = 0.0f;
  float call_price = 0.0f;
  float put_price = 0.0f;
};

// Standard normal CDF, polynomial approximation, |error| <= 7.5e-8. One
// tail evaluation serves both signs, so cdf(x) + cdf(-x) = 1 to rounding.
double norm_cdf(double x);

// Closed-form call/put for one pair. Throws std::invalid_argument on a
// non-positive spot, strike, expiry or volatility.
void price_pair(OptionPair& pair);

void black_scholes_serial(std::span<OptionPair> pairs);

// --- FFT -------------------------------------------------------------------

// Radix-2 decimation-in-time transform; input size must be a power of two.
std::vector<std::complex<float>> fft_serial(
    std::vector<std::complex<float>> samples);

// Stage-level pieces of the same transform, for schedules that interleave
// butterfly stages with data exchanges. fft_serial is bit-reverse followed
// by stages 0..log2(N)-1 in order.
void fft_bit_reverse(std::vector<std::complex<float>>& samples);
void fft_apply_stage(std::vector<std::complex<float>>& samples, long stage);

// --- Dense matrix multiplication -------------------------------------------

struct MatrixF {
  long dim = 0;
  std::vector<float> data;  // row-major dim*dim

  MatrixF() = default;
  explicit MatrixF(long d) : dim(d), data(static_cast<size_t>(d) * d, 0.0f) {}

  float& at(long i, long j) { return data[static_cast<size_t>(i) * dim + j]; }
  float at(long i, long j) const {
    return data[static_cast<size_t>(i) * dim + j];
  }
};

// C = A*B via the triple loop. Throws std::invalid_argument on a shape
// mismatch.
MatrixF dmm_serial(const MatrixF& a, const MatrixF& b);

// --- Deterministic inputs ---------------------------------------------------

inline constexpr std::uint32_t kDefaultInputSeed = 1729;

std::vector<OptionPair> generate_option_pairs(long count,
                                              std::uint32_t seed = kDefaultInputSeed);
std::vector<std::complex<float>> generate_samples(
    long count, std::uint32_t seed = kDefaultInputSeed);
MatrixF generate_matrix(long dim, std::uint32_t seed);

}  // namespace mcsm::workloads

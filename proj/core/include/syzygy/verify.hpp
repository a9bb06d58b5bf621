#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "syzygy/betti.hpp"
#include "syzygy/constructions.hpp"
#include "syzygy/hilbert.hpp"
#include "syzygy/invariants.hpp"

namespace syzygy {

class PreconditionFailed : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Classification { VMD, DelPezzo, VamdDepthNA0, AcmDegreeE3, Other };
std::string to_string(Classification c);

struct VarietyReport {
  std::string instance;
  int n = 0;  // projective dimension
  int e = 0;  // codimension
  std::int64_t degree = 0;
  int depth = 0;
  bool acm = false;
  bool integral = true;
  std::optional<std::int64_t> sectional_genus;
  std::optional<int> gl_index;
  BettiTable betti;
  HilbertData hilbert;
  Classification classification = Classification::Other;
};

/// VMD: d = e+1; del Pezzo: ACM and d = e+2; d = e+2 with depth n and
/// a(X) = 0; ACM with d = e+3; everything else is Other.
Classification classify(int e, std::int64_t d, int n, int depth, bool acm, std::optional<int> gl_index);

template <class F>
VarietyReport analyze(const Construction<F>& c, std::uint64_t seed, bool integral = true);

struct CheckResult {
  std::string check;
  std::string instance;
  std::uint64_t seed = 0;
  std::string expected;
  std::string actual;
  bool pass = false;
  std::optional<std::string> error;
  double millis = 0;
};

/// p * C(e+1, p+1) - 2 * C(e, p-1): the extremal quadratic strand.
std::int64_t extremal_strand(int e, int p);
std::int64_t binomial(std::int64_t n, std::int64_t k);

/// beta_{p,1} <= extremal_strand(e,p) for 1 <= p <= e-1 and 0 for p >= e,
/// outside minimal degree and del Pezzo.
CheckResult bound_A(const VarietyReport& r);
/// The three conditions (classification; equality at one middle p; equality
/// for every 1 <= p <= e-1) agree.
CheckResult classify_extremal_B(const VarietyReport& r);
/// beta_{e-1,1} is 0 or e-1 outside minimal degree and del Pezzo.
CheckResult dichotomy_beta_e_minus_1(const VarietyReport& r);
/// sum (-1)^p beta_{p,q} z^{p+q} equals the Hilbert numerator.
CheckResult alternating_sum_check(const VarietyReport& r);
/// beta_{p,1} = 0 for p > e; beta_{e,1} != 0 only in minimal degree.
CheckResult linear_strand_check(const VarietyReport& r);
/// The closed-form tables of each extremal class.
CheckResult table_shape_check(const VarietyReport& r);
/// beta_{1,1} = C(e+1,2) - 2 iff (d = e+2, depth n) or (d = e+3, ACM).
CheckResult quadric_count_check(const VarietyReport& r);

template <class F>
CheckResult inner_projection_inequality(const Construction<F>& c, const VarietyReport& r, std::uint64_t seed);
template <class F>
CheckResult lefschetz_check(const Construction<F>& c, const VarietyReport& r, std::uint64_t seed);

/// Class of X on the scroll Y from its degree and sectional genus. Throws
/// PreconditionFailed unless I_Y is contained in I_X, and std::domain_error
/// when no integer class fits.
template <class F>
DivisorClass infer_divisor_class(const Ideal<F>& x, const ScrollSpec& y, std::uint64_t seed);

CheckResult broken_divisor_check(unsigned e, std::uint64_t seed);
/// 2e+1-p general points in P^e satisfy N_{2,p}.
CheckResult points_n2p_check(unsigned e, unsigned p, std::uint64_t seed);

struct CorpusEntry {
  std::string instance;
  unsigned e = 0;
  bool integral = true;
  std::set<std::string> tags;
  std::function<Construction<PrimeField>()> build;
};

/// Test varieties of codimension e over GF(32003).
std::vector<CorpusEntry> corpus(unsigned e, std::uint64_t seed);

struct SuiteConfig {
  unsigned e_min = 3;
  unsigned e_max = 5;
  std::uint64_t seed = 1;
  std::set<std::string> checks;
  /// 0: read SYZYGY_THREADS, single-threaded when unset.
  unsigned threads = 0;
};

/// Every check name the suite knows, and the names selected by a theorem flag.
const std::vector<std::string>& all_checks();
std::set<std::string> checks_for(const std::string& theorem);

/// Runs the selected checks over the corpus; results sorted by (check, instance).
std::vector<CheckResult> run_suite(const SuiteConfig& config);

unsigned threads_from_env();

}  // namespace syzygy

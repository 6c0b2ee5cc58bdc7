#pragma once

#include <cstdint>
#include <string>

namespace resdist::cli {

inline constexpr std::uint64_t kDefaultSeed = 0x9E3779B9ULL;

/// Grid request for the rate curves. GL and BBPSSW emit one randomness and
/// one key column per round r = 1..r_max; DW emits raw key, clamped key and
/// the piecewise randomness curve. Output is deterministic CSV with 12
/// significant digits, comment lines prefixed '#'.
struct CurveRequest {
  std::string protocol = "gl";  // gl | bbpssw | dw
  double f_min = 0.75;
  double f_max = 1.0;
  int points = 101;
  int r_max = 4;                    // ignored for dw
  std::string mode = "corrected";   // corrected | verbatim (key accounting)
};

std::string render_curves(const CurveRequest& req);

std::string render_toy1(double a_sq);

/// Text report for a graph document: levels, chordality verdict (with
/// elimination order or witness cycle) and root paths. max_len <= 0 means
/// "up to the node count".
std::string render_rug(const std::string& document_text, int max_len);

struct VerifyOptions {
  std::uint64_t seed = kDefaultSeed;
  long long samples = 1'000'000;
};

struct VerifyOutcome {
  std::string report;
  bool all_passed = false;
};

/// Cross-validation suite: exact circuit oracles vs the analytic step maps,
/// the theta recursion, Monte-Carlo step B, the closed-form residual
/// randomness of the isotropic family and the key threshold.
VerifyOutcome run_verify(const VerifyOptions& opts);

/// Fixed-format number rendering used for all CSV output: 12 significant
/// digits, "%.12g", negative zero normalized to "0".
std::string format_number(double v);

}  // namespace resdist::cli

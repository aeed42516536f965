#ifndef JSTRETCH_ANALYSIS_HPP
#define JSTRETCH_ANALYSIS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "jstretch/reductions.hpp"

namespace jst {

/// Residual hypotheses the toolkit never computes; the user asserts them.
struct Hypotheses {
  bool G_d = false;
  bool AN_minus = false;
  bool depth_RI = false;

  bool all() const { return G_d && AN_minus && depth_RI; }
  std::vector<std::string> missing() const;
  friend bool operator==(const Hypotheses&, const Hypotheses&) = default;
};

/// A theorem verdict; CONDITIONAL unless every hypothesis it rests on was asserted.
struct Verdict {
  bool value = false;
  bool asserted = false;
  std::vector<std::string> unasserted;

  std::string status() const { return asserted ? "ASSERTED" : "CONDITIONAL"; }
  friend bool operator==(const Verdict&, const Verdict&) = default;
};

Verdict make_verdict(bool value, const Hypotheses& hyps);

struct StretchResult {
  bool value = false;
  /// λ(Ī²/(x_d Ī + Ī³))
  LocalLength length;
};

StretchResult is_j_stretched(const ReductionData& rd);

struct Classification {
  /// λ(Ī²/x_d Ī)
  std::int64_t tail = 0;
  bool minimal_j = false;
  bool almost_minimal_j = false;
  bool almost_almost_minimal_j = false;
  bool j_stretched = false;
  LocalLength stretch_length;
};

Classification classify(const ReductionData& rd);

struct NuSequences {
  std::vector<LocalLength> nu;
  std::vector<LocalLength> nubar;
};

/// ν_n = λ(I^{n+1}/J I^n) and ν̄_n in R̄ for n = 0..last.
NuSequences nu_sequence(const ReductionData& rd, int last);

struct AuditItem {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct PropertiesAudit {
  Polynomial a, b;
  /// "product" when (a, b) came from generator products, "random" otherwise.
  std::string witness_source;
  std::vector<AuditItem> items;

  bool all_pass() const;
  const AuditItem* find(const std::string& name) const;
};

/// Witness (a, b) with I² = JI + (ab) locally, then the four structure statements
/// and J ∩ I^{n+1} = J I^n + (a^K b) for n ≤ K.
PropertiesAudit properties_audit(const ReductionData& rd, int K, std::int64_t j_value, std::int64_t rbar_colength,
                                 std::int64_t h);

struct VvResult {
  int n = 0;
  /// J ∩ I^{t+1} = J I^t locally, for t = 0..n
  std::vector<bool> equalities;
  /// I^{K+1} ⊆ J I^n locally
  bool inclusion = false;

  bool all_equal() const;
  bool biconditional() const { return all_equal() == inclusion; }
};

VvResult vv_equalities(const ReductionData& rd, int n, int K);

/// J ∩ I^{t+1} = J I^t locally.
bool vv_equality(const ReductionData& rd, int t);

struct Theorem41 {
  bool predicted_cm = false;
  bool r_equals_K = false;
  Verdict verdict;
};

Theorem41 theorem41_check(int r_J, int s_J, int K, const Hypotheses& hyps);

struct SallyResult {
  std::optional<int> p;
  /// depth gr_I(R) ≥ d-1
  Verdict verdict;
};

SallyResult sally_condition(const ReductionData& rd, int K, const Hypotheses& hyps);

struct Cor46Result {
  bool inclusion = false;
  bool length_one = false;
  bool biconditional() const { return inclusion == length_one; }
  Verdict acm;
};

Cor46Result cor46_check(const ReductionData& rd, int K, const Hypotheses& hyps);

struct TypeResult {
  LocalLength tau;
  std::int64_t h = 0;
  /// λ(R̄/Ī)
  std::int64_t rbar_colength = 0;
  bool small_type = false;
  std::optional<bool> nu2_ok;
  std::optional<bool> vv3_ok;
  Verdict verdict;
};

TypeResult type_and_codim(const ReductionData& rd, int K, const Hypotheses& hyps);

struct StretchedResult {
  bool intersection_property = false;
  /// λ(I²/((J ∩ I²) + I³))
  std::int64_t hf2 = 0;
  bool value = false;
};

/// Stretchedness with respect to the sampled general reduction. A false result
/// holds for every minimal reduction, since stretchedness for some reduction
/// forces it for the general one.
StretchedResult stretched_test(const ReductionData& rd);

bool is_m_primary(const Ideal& ideal);

struct AnCriterion {
  /// λ(I²/[y_d I + I³ + (H_{d-1} : I^∞) ∩ I²])
  LocalLength length;
  /// H ∩ I² = HI, checked only for m-primary I
  std::optional<bool> intersection_property;
  bool value = false;
  Verdict verdict;
};

AnCriterion an_criterion(const Ideal& ideal, const std::vector<Polynomial>& reduction, const Hypotheses& hyps);

struct AnalysisOptions {
  std::uint64_t seed = 1;
  int trials = 5;
  int cap = 20;
  Hypotheses hyps;
};

struct AnalysisReport {
  std::uint64_t seed = 0;
  std::int64_t p = 0;
  int trials = 0;
  int cap = 0;
  /// Seed of the trial the detailed analysis ran on.
  std::uint64_t chosen_seed = 0;

  int d = 0;
  bool ell_is_d = false;
  bool m_primary = false;
  std::optional<std::int64_t> j_mult;
  std::optional<std::int64_t> lambda_head;
  std::optional<std::int64_t> lambda_tail;
  std::optional<int> r_J;
  std::optional<int> s_J;
  /// K with K - 1 = λ(Ī²/x_d Ī)
  std::optional<int> K;
  std::vector<LocalLength> nu;
  std::vector<LocalLength> nubar;
  std::optional<std::int64_t> h;
  std::optional<std::int64_t> rbar_colength;
  std::optional<LocalLength> tau;

  struct Flags {
    bool j_stretched = false;
    bool minimal_j = false;
    bool almost_minimal_j = false;
    bool almost_almost_minimal_j = false;
    std::optional<bool> stretched;
    friend bool operator==(const Flags&, const Flags&) = default;
  } flags;
  std::optional<LocalLength> stretch_length;

  struct Verdicts {
    std::optional<Verdict> thm41_predicted_CM;
    std::optional<Verdict> cor46_acm;
    std::optional<int> thm45_p;
    std::optional<Verdict> thm45_depth;
    std::optional<Verdict> thm49_smalltype;
    friend bool operator==(const Verdicts&, const Verdicts&) = default;
  } verdicts;

  Hypotheses asserted;
  /// Trials disagreeing with the modal value, per tracked invariant.
  std::map<std::string, int> dissent;
  std::vector<std::string> warnings;

  friend bool operator==(const AnalysisReport&, const AnalysisReport&) = default;
};

/// Majority vote over `trials` sampled reductions, then the full analysis on
/// the first trial that agrees with the modal invariants.
AnalysisReport analyze(const Ideal& ideal, const AnalysisOptions& options = {});

/// Same, also returning the reduction the details were computed on.
AnalysisReport analyze(const Ideal& ideal, const AnalysisOptions& options, ReductionData& chosen);

}  // namespace jst

#endif

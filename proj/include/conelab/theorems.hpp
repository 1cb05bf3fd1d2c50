#pragma once

#include <cstdint>
#include <string>

#include "conelab/linear_map.hpp"
#include "conelab/membership.hpp"
#include "conelab/positivity.hpp"

namespace conelab {

// One sampled or constructed test case: a cone, an operator on its ambient
// space, a cone vector, a power index r, and an eigenvalue for the
// eigenvector-statements.
struct TheoremInstance {
  Cone cone;
  LinearMap t;
  QVec v;
  int r = 0;
  Rational lambda = 1;
};

// Certified cone membership recorded during a check, kept so a later pass can
// re-verify every certificate independently.
struct CertifiedMembership {
  QVec vector;
  MembershipVerdict verdict;
};

struct CheckOutcome {
  bool precondition_met = false;
  std::optional<bool> conclusion_holds;  // present iff precondition_met
  std::vector<CertifiedMembership> certificates;
  std::string note;  // skip reason or commentary

  bool failed() const { return precondition_met && conclusion_holds && !*conclusion_holds; }
};

struct SuiteReport {
  long trials = 0;
  long passes = 0;
  long failures = 0;
  long skips = 0;  // precondition unmet or positivity uncertifiable
  std::uint64_t seed = 0;
  double elapsed = 0.0;
};

// If 0 <= v and (T-id)^2 v <= 0 with T positive, then Tv >= v.
CheckOutcome check_rank2(const Cone& cone, const LinearMap& t, const QVec& v);

// If (T-id)^{r+1} v <= 0 with T positive and v in the cone, then
// (T-id)^r v >= 0.
CheckOutcome check_higher_rank(const Cone& cone, const LinearMap& t, const QVec& v,
                               int r);

// The inductive inequality behind the previous check:
//   T^n (T-id)^{r-s} v <= sum_{k=0}^{s} C(n,k) (T-id)^k (T-id)^{r-s} v
// for all n in {0..n_max}, given the higher-rank precondition and 0 <= s <= r.
CheckOutcome check_intermediate_inequality(const Cone& cone, const LinearMap& t,
                                           const QVec& v, int r, int s, int n_max);

// sum_{n=0}^{n1-1} C(n,t), asserted equal to C(n1,t+1).  Exact.
BigInt hockey_stick(int n1, int t);

// A positive T with spectrum {1} and all Jordan blocks of size <= 2 satisfies
// T >= id.
CheckOutcome check_cor_jordan2(const Cone& cone, const LinearMap& t);

// A positive eigenvalue with a generalized eigenvector in the cone has a
// genuine eigenvector in the cone: the last nonzero power (T/lambda - id)^r v.
CheckOutcome check_cor_generalized_ev(const Cone& cone, const LinearMap& t,
                                      const QVec& v, const Rational& lambda);

// For T and T^{-1} both positive, odd r, and (T-id)^{r+1} v <= 0:
// (T-id)^r v = 0 exactly.
CheckOutcome check_cor_odd(const Cone& cone, const LinearMap& t, const QVec& v, int r);

// A 2-isometry L satisfies L*L >= id (expansive).  Precondition gated on
// m_isometry_order(L, 2); k x k with k <= 4.
CheckOutcome check_richter_expansive(const CQMat& l);

// Seeded instance generators.  kind: simplicial-unipotent, nilpotent-rejection,
// soc-random, psd-congruence.  dim <= 6.  Deterministic per (kind, dim, seed).
TheoremInstance generate_instance(const std::string& kind, Index dim,
                                  std::uint64_t seed);

// Suite names: rank2, higher-rank, inequality-s, jordan2, cor-ev, cor-odd,
// richter.  Each trial is a pure function of (seed, index).  Optional sink
// collects every membership certificate produced, grouped by instance cone.
struct SuiteCert {
  Cone cone;
  std::vector<CertifiedMembership> certs;
};

SuiteReport run_suite(const std::string& name, long trials, std::uint64_t seed,
                      std::vector<SuiteCert>* sink = nullptr);

const std::vector<std::string>& suite_names();

}  // namespace conelab

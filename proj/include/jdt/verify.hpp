// SPDX-License-Identifier: Apache-2.0
//
// Verification suites: property checks of the taquin rule, agreement
// with the localization oracle, recursions, folding tables and the E8
// numbers. Each suite returns a report; the CLI maps it to an exit code.

#pragma once

#include "jdt/folding.hpp"
#include "jdt/taquin.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace jdt {

struct SuiteOptions {
  int jobs = 1;
  std::uint64_t seed = 20240917;
  int confluence_samples = 500;
};

struct SuiteReport {
  std::string name;
  long long checks = 0;
  std::vector<std::string> failures;
  std::vector<std::string> info;
  double seconds = 0;
  bool ok() const { return failures.empty() && checks > 0; }
  void fail(std::string msg) {
    if (failures.size() < 50) failures.push_back(std::move(msg));
    else if (failures.size() == 50) failures.push_back("...");
  }
};

const std::vector<std::string>& suite_names();
SuiteReport run_suite(const std::string& name, const SuiteOptions& opt = {});

// A named marked diagram with a mode.
struct ContextSpec {
  std::string tag;
  int node;
  Mode mode;
};
std::string describe(const ContextSpec& s);
Context make_context(const ContextSpec& s);

// Individual checks shared by suites and tests.
SuiteReport check_confluence(const std::vector<ContextSpec>& ambients,
                             const SuiteOptions& opt);
SuiteReport check_t_symmetry(const std::vector<ContextSpec>& ctxs, int max_size);
SuiteReport check_associativity(const std::vector<ContextSpec>& ambients,
                                int max_size);
SuiteReport check_chevalley(const std::vector<ContextSpec>& ctxs, int max_len);
SuiteReport check_chevalley_identity(const std::vector<CartanData>& diagrams,
                                  int max_len);
SuiteReport check_root_lengths(const std::vector<ContextSpec>& ctxs, int max_len);
SuiteReport check_taquin_recursion(const std::vector<ContextSpec>& ctxs,
                                   int max_len);
SuiteReport check_bruhat_recursion(const std::vector<ContextSpec>& ctxs,
                                   int max_len);
SuiteReport check_oracle_agreement(const std::vector<ContextSpec>& ctxs,
                                   int max_len, int jobs);

// <w(alpha), varpi_beta^vee> (beta, beta) = <varpi_beta, w(alpha^vee)> (alpha, alpha).
bool chevalley_identity_holds(const CartanData& c, const Word& w, int alpha,
                           int beta);

// c_{u,v}^w(G/P) against the sum over s of c_{u x^-1, s}^{w x^-1}(H_x/Q_x)
// c_{x,v}^{s x}(G/P). Words are canonical words over the real data.
struct BruhatRecursionCheck {
  bool admissible = false;
  BigInt lhs = 0, rhs = 0;
  bool holds() const { return admissible && lhs == rhs; }
};
BruhatRecursionCheck verify_bruhat_recursion(const Schubert& g, const Context& ctx,
                                             const Word& x, const Word& u,
                                             const Word& v, const Word& w);

// E8/P8 numbers for sigma^10 (.) sigma^10.
struct E8Numbers {
  Word sigma10;
  std::vector<long long> t;       // against the six degree-20 ideals
  std::vector<BigInt> degrees;    // cohomology degrees of those classes
  BigInt self_degree;             // deg(sigma^10 sigma^10)
  BigInt solved_x;                // fourth coefficient recovered by linearity
  int sigma10_candidates = 0;     // degree-10 classes matching the t-vector
};
E8Numbers e8_numbers();

// F4/P1 ring data.
struct F4Numbers {
  Expansion p42_42, p41_42, p41_41;  // keyed by {1} = sigma_{8,1}, {2} = sigma_{8,2}
  BigInt deg81, deg82, deg42_sq, deg41_sq;
  std::vector<std::vector<BigInt>> hasse;  // homology degrees by level 0..7
};
std::map<std::string, BigInt> label_expansion(const Expansion& e,
                                              const std::map<Word, std::string>& names);
F4Numbers f4_numbers();

// Folding tables for F4/P1 in E6/P2 and the twisted-affine case.
struct FoldingTables {
  bool finite_unique = false;
  // label of the folded class -> labeled ambient expansion
  std::map<std::string, std::map<std::string, BigInt>> finite;
  std::map<std::string, BigInt> solver_sigma3;     // from the solver
  std::map<std::string, BigInt> extension_sigma3;  // from pushforward_extension
  std::vector<std::array<long long, 7>> tuples;    // candidates for sigma_{8,3}
  std::vector<std::map<std::string, BigInt>> caps; // tau^{4,1} cap each candidate
  BigInt c42_42 = 0, c41_42 = 0;                   // recovered by injectivity
  BigInt oracle42_42 = 0, oracle41_42 = 0;         // localization oracle
  Rational tm42_42 = 0, tm41_42 = 0;               // taquin rule
};
FoldingTables folding_tables();

}  // namespace jdt

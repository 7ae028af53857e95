#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "permstat/multipoly.hpp"
#include "permstat/permutation.hpp"

namespace permstat {

/// Scalar statistics usable as polynomial exponents.
enum class ScalarStat {
  Depth,
  Drp,
  Exc,
  Des,
  Asc,
  ExcHat,
  Aexc,
  FixHat,
  ExcHatPlusFixHat,
};

const char* scalar_stat_name(ScalarStat s);
std::optional<ScalarStat> scalar_stat_from_name(std::string_view name);
int scalar_stat_value(ScalarStat s, const Permutation& p);

/// Joint (optionally sign-weighted) generating polynomial over S_n.
/// Variable letters follow the usual displays (depth/drp -> q, counting
/// statistics -> t, the hatted triple -> x,y,s); positional q,t,x,y,s on
/// a clash. 1 <= n <= kMaxEnumerationN, 1 <= |stats| <= 5.
MultiPoly joint_polynomial(int n, const std::vector<ScalarStat>& stats, bool with_sign);

/// Exact expansion of (1 - q)^(n-1).
MultiPoly binomial_expand(int n);

/// Set-valued statistics with exact histograms over S_n.
enum class SetStat {
  SucPositions,  // "suc-set"
  FixPositions,  // "fix-set"
  LinearTriple,  // "linear-triple": (asc2, des_values, suc_values)
  CyclicTriple,  // "cyclic-triple": (exc_hat, aexc, fix_hat)
};

const char* set_stat_name(SetStat s);
std::optional<SetStat> set_stat_from_name(std::string_view name);

/// One ascending set per component: a single set for SUC/FIX, three for
/// the triples.
using SetKey = std::vector<std::vector<int>>;

struct DistributionTable {
  std::map<SetKey, long long> rows;
  long long total = 0;  // always n!

  bool operator==(const DistributionTable&) const = default;
};

DistributionTable set_valued_distribution(int n, SetStat stat);

/// "{5,6}|{1,2}|{3}"; the empty set renders as "{}".
std::string render_set_key(const SetKey& key);

/// One row per key in canonical order: quoted key column, count column.
std::string to_csv(const DistributionTable& table);

/// First key (canonical order) with differing counts, if any.
std::optional<SetKey> first_table_mismatch(const DistributionTable& a,
                                           const DistributionTable& b);

/// First exponent vector (graded-lex) with differing coefficients, if any.
std::optional<std::vector<int>> first_poly_mismatch(const MultiPoly& a,
                                                    const MultiPoly& b);

/// The verified identities, one checker each.
enum class TheoremId {
  SucFix,          // SUC and FIX histograms coincide
  Triple,          // phi_triple transports the hatted triple, bijectively
  DepthExcDrpDes,  // sum q^depth t^exc = sum q^drp t^des
  SignedDepth,     // signed depth polynomial = (1-q)^(n-1)
  SignedDrp,       // signed drp polynomial = (1-q)^(n-1)
  SignBijection,   // f_map preserves sign/first letter, depth -> drp
  Displacement,    // depth(w) = depth(w^-1) = half total displacement
  DropDes,         // #drops = des of the phi image; descent bottoms = aexc
  Eulerian,        // exc_hat + fix_hat is Eulerian (matches asc, des, exc)
};

const std::vector<TheoremId>& all_theorems();
const char* theorem_name(TheoremId id);
std::optional<TheoremId> theorem_from_name(std::string_view name);

struct CheckReport {
  std::string theorem;
  int n = 0;
  bool pass = false;
  std::optional<Permutation> witness;  // present whenever pass is false
  std::string detail;                  // e.g. a rendered polynomial
  double elapsed_ms = 0.0;
};

/// Exhaustive check of one identity over S_n. 1 <= n <= 9.
CheckReport check_theorem(TheoremId id, int n);

}  // namespace permstat

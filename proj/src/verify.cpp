#include "permstat/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "permstat/enumerate.hpp"
#include "permstat/phi_triple.hpp"
#include "permstat/signed_bijection.hpp"
#include "permstat/statistics.hpp"

namespace permstat {

namespace {

struct StatInfo {
  ScalarStat stat;
  const char* name;
  const char* letter;
};

constexpr StatInfo kScalarStats[] = {
    {ScalarStat::Depth, "depth", "q"},
    {ScalarStat::Drp, "drp", "q"},
    {ScalarStat::Exc, "exc", "t"},
    {ScalarStat::Des, "des", "t"},
    {ScalarStat::Asc, "asc", "t"},
    {ScalarStat::ExcHat, "exc-hat", "x"},
    {ScalarStat::Aexc, "aexc", "y"},
    {ScalarStat::FixHat, "fix-hat", "s"},
    {ScalarStat::ExcHatPlusFixHat, "exc-hat+fix-hat", "t"},
};

constexpr const char* kPositionalLetters[] = {"q", "t", "x", "y", "s"};

void require_enumerable(int n) {
  if (n < 1 || n > kMaxEnumerationN)
    throw std::out_of_range("n outside 1.." + std::to_string(kMaxEnumerationN));
}

}  // namespace

const char* scalar_stat_name(ScalarStat s) {
  for (const StatInfo& info : kScalarStats)
    if (info.stat == s) return info.name;
  throw std::logic_error("unknown scalar statistic");
}

std::optional<ScalarStat> scalar_stat_from_name(std::string_view name) {
  for (const StatInfo& info : kScalarStats)
    if (name == info.name) return info.stat;
  return std::nullopt;
}

int scalar_stat_value(ScalarStat s, const Permutation& p) {
  const int n = p.size();
  int count = 0;
  switch (s) {
    case ScalarStat::Depth:
      return depth(p);
    case ScalarStat::Drp:
      return drp(p);
    case ScalarStat::Exc:
      for (int i = 1; i <= n; ++i)
        if (p(i) > i) ++count;
      return count;
    case ScalarStat::Des:
      for (int i = 1; i < n; ++i)
        if (p(i) > p(i + 1)) ++count;
      return count;
    case ScalarStat::Asc:
      for (int i = 1; i < n; ++i)
        if (p(i) < p(i + 1)) ++count;
      return count;
    case ScalarStat::ExcHat:
      for (int i = 2; i <= n; ++i)
        if (p(i) > i) ++count;
      return count;
    case ScalarStat::Aexc:
      for (int i = 2; i <= n; ++i)
        if (p(i) < i) ++count;
      return count;
    case ScalarStat::FixHat:
      for (int i = 2; i <= n; ++i)
        if (p(i) == i) ++count;
      return count;
    case ScalarStat::ExcHatPlusFixHat:
      for (int i = 2; i <= n; ++i)
        if (p(i) >= i) ++count;
      return count;
  }
  throw std::logic_error("unknown scalar statistic");
}

MultiPoly joint_polynomial(int n, const std::vector<ScalarStat>& stats, bool with_sign) {
  require_enumerable(n);
  if (stats.empty() || stats.size() > 5)
    throw std::invalid_argument("between 1 and 5 statistics expected");

  // conventional letters per statistic, positional q,t,x,y,s on a clash
  std::vector<std::string> variables;
  for (ScalarStat s : stats) {
    for (const StatInfo& info : kScalarStats)
      if (info.stat == s) variables.emplace_back(info.letter);
  }
  std::vector<std::string> unique_check = variables;
  std::sort(unique_check.begin(), unique_check.end());
  if (std::adjacent_find(unique_check.begin(), unique_check.end()) != unique_check.end()) {
    variables.clear();
    for (std::size_t i = 0; i < stats.size(); ++i) variables.emplace_back(kPositionalLetters[i]);
  }

  MultiPoly poly(variables);
  std::vector<int> exponents(stats.size());
  for (const Permutation& p : SnRange(n)) {
    for (std::size_t i = 0; i < stats.size(); ++i) exponents[i] = scalar_stat_value(stats[i], p);
    poly.add_term(exponents, with_sign ? sign(p) : 1);
  }
  return poly;
}

MultiPoly binomial_expand(int n) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  MultiPoly poly({"q"});
  long long coeff = 1;  // C(n-1, k), alternating
  for (int k = 0; k <= n - 1; ++k) {
    poly.add_term({k}, k % 2 == 0 ? coeff : -coeff);
    coeff = coeff * (n - 1 - k) / (k + 1);
  }
  return poly;
}

const char* set_stat_name(SetStat s) {
  switch (s) {
    case SetStat::SucPositions: return "suc-set";
    case SetStat::FixPositions: return "fix-set";
    case SetStat::LinearTriple: return "linear-triple";
    case SetStat::CyclicTriple: return "cyclic-triple";
  }
  throw std::logic_error("unknown set statistic");
}

std::optional<SetStat> set_stat_from_name(std::string_view name) {
  for (SetStat s : {SetStat::SucPositions, SetStat::FixPositions, SetStat::LinearTriple,
                    SetStat::CyclicTriple})
    if (name == set_stat_name(s)) return s;
  return std::nullopt;
}

namespace {

SetKey set_key_of(SetStat stat, const Permutation& p) {
  switch (stat) {
    case SetStat::SucPositions:
      return {linear_stats(p).suc_positions};
    case SetStat::FixPositions:
      return {cyclic_stats(p).fix_positions};
    case SetStat::LinearTriple: {
      LinearStats ls = linear_stats(p);
      return {std::move(ls.asc2_values), std::move(ls.des_values), std::move(ls.suc_values)};
    }
    case SetStat::CyclicTriple: {
      CyclicStats cs = cyclic_stats(p);
      return {std::move(cs.exc_hat_values), std::move(cs.aexc_values),
              std::move(cs.fix_hat_values)};
    }
  }
  throw std::logic_error("unknown set statistic");
}

}  // namespace

DistributionTable set_valued_distribution(int n, SetStat stat) {
  require_enumerable(n);
  DistributionTable table;
  for (const Permutation& p : SnRange(n)) {
    ++table.rows[set_key_of(stat, p)];
    ++table.total;
  }
  return table;
}

std::string render_set_key(const SetKey& key) {
  std::ostringstream out;
  for (std::size_t s = 0; s < key.size(); ++s) {
    if (s) out << '|';
    out << '{';
    for (std::size_t i = 0; i < key[s].size(); ++i) {
      if (i) out << ',';
      out << key[s][i];
    }
    out << '}';
  }
  return out.str();
}

std::string to_csv(const DistributionTable& table) {
  std::ostringstream out;
  for (const auto& [key, count] : table.rows)
    out << '"' << render_set_key(key) << "\"," << count << '\n';
  return out.str();
}

std::optional<SetKey> first_table_mismatch(const DistributionTable& a,
                                           const DistributionTable& b) {
  auto ia = a.rows.begin();
  auto ib = b.rows.begin();
  while (ia != a.rows.end() || ib != b.rows.end()) {
    if (ib == b.rows.end() || (ia != a.rows.end() && ia->first < ib->first)) return ia->first;
    if (ia == a.rows.end() || ib->first < ia->first) return ib->first;
    if (ia->second != ib->second) return ia->first;
    ++ia;
    ++ib;
  }
  return std::nullopt;
}

std::optional<std::vector<int>> first_poly_mismatch(const MultiPoly& a, const MultiPoly& b) {
  const GrlexLess less;
  auto ia = a.terms().begin();
  auto ib = b.terms().begin();
  while (ia != a.terms().end() || ib != b.terms().end()) {
    if (ib == b.terms().end() || (ia != a.terms().end() && less(ia->first, ib->first)))
      return ia->first;
    if (ia == a.terms().end() || less(ib->first, ia->first)) return ib->first;
    if (ia->second != ib->second) return ia->first;
    ++ia;
    ++ib;
  }
  return std::nullopt;
}

const std::vector<TheoremId>& all_theorems() {
  static const std::vector<TheoremId> ids = {
      TheoremId::SucFix,       TheoremId::Triple,     TheoremId::DepthExcDrpDes,
      TheoremId::SignedDepth,  TheoremId::SignedDrp,  TheoremId::SignBijection,
      TheoremId::Displacement, TheoremId::DropDes,    TheoremId::Eulerian,
  };
  return ids;
}

const char* theorem_name(TheoremId id) {
  switch (id) {
    case TheoremId::SucFix: return "suc-fix";
    case TheoremId::Triple: return "triple";
    case TheoremId::DepthExcDrpDes: return "depth-exc-drp-des";
    case TheoremId::SignedDepth: return "signed-depth";
    case TheoremId::SignedDrp: return "signed-drp";
    case TheoremId::SignBijection: return "sign-bijection";
    case TheoremId::Displacement: return "displacement";
    case TheoremId::DropDes: return "drop-des";
    case TheoremId::Eulerian: return "eulerian";
  }
  throw std::logic_error("unknown theorem id");
}

std::optional<TheoremId> theorem_from_name(std::string_view name) {
  for (TheoremId id : all_theorems())
    if (name == theorem_name(id)) return id;
  return std::nullopt;
}

namespace {

std::optional<Permutation> first_perm_matching(
    int n, const std::function<bool(const Permutation&)>& pred) {
  for (const Permutation& p : SnRange(n))
    if (pred(p)) return p;
  return std::nullopt;
}

// Witness for an aggregate mismatch: the first permutation hitting the
// offending key on either side; the identity as a last resort.
Permutation aggregate_witness(int n, const std::function<bool(const Permutation&)>& pred) {
  if (auto w = first_perm_matching(n, pred)) return *w;
  return Permutation::identity(n);
}

struct Outcome {
  bool pass = true;
  std::optional<Permutation> witness;
  std::string detail;
};

Outcome check_suc_fix(int n) {
  const DistributionTable suc = set_valued_distribution(n, SetStat::SucPositions);
  const DistributionTable fix = set_valued_distribution(n, SetStat::FixPositions);
  if (suc == fix) return {};
  const SetKey key = *first_table_mismatch(suc, fix);
  return {false,
          aggregate_witness(n,
                            [&key](const Permutation& p) {
                              return set_key_of(SetStat::SucPositions, p) == key ||
                                     set_key_of(SetStat::FixPositions, p) == key;
                            }),
          "tables differ at key " + render_set_key(key)};
}

Outcome check_triple(int n) {
  std::vector<bool> seen(factorial(n), false);
  for (const Permutation& p : SnRange(n)) {
    const CyclicStats cs = cyclic_stats(p);
    const PhiResult r = phi_triple(p);
    const LinearStats ls = linear_stats(r.image);
    if (ls.asc2_values != cs.exc_hat_values || ls.des_values != cs.aexc_values ||
        ls.suc_values != cs.fix_hat_values)
      return {false, p, "triple statistics not transported"};
    if (phi_triple_inverse(r.image) != p) return {false, p, "roundtrip failed"};
    const std::uint64_t rank = lex_rank(r.image);
    if (seen[rank]) return {false, p, "image already produced"};
    seen[rank] = true;
  }
  // the transported tables must therefore coincide as histograms
  const DistributionTable linear = set_valued_distribution(n, SetStat::LinearTriple);
  const DistributionTable cyclic = set_valued_distribution(n, SetStat::CyclicTriple);
  if (linear != cyclic) {
    const SetKey key = *first_table_mismatch(linear, cyclic);
    return {false,
            aggregate_witness(n,
                              [&key](const Permutation& p) {
                                return set_key_of(SetStat::LinearTriple, p) == key ||
                                       set_key_of(SetStat::CyclicTriple, p) == key;
                              }),
            "triple tables differ at key " + render_set_key(key)};
  }
  return {};
}

Outcome check_depth_exc_drp_des(int n) {
  const MultiPoly lhs = joint_polynomial(n, {ScalarStat::Depth, ScalarStat::Exc}, false);
  const MultiPoly rhs = joint_polynomial(n, {ScalarStat::Drp, ScalarStat::Des}, false);
  if (lhs == rhs) return {};
  const std::vector<int> e = *first_poly_mismatch(lhs, rhs);
  return {false,
          aggregate_witness(n,
                            [&e](const Permutation& p) {
                              return (depth(p) == e[0] &&
                                      scalar_stat_value(ScalarStat::Exc, p) == e[1]) ||
                                     (drp(p) == e[0] &&
                                      scalar_stat_value(ScalarStat::Des, p) == e[1]);
                            }),
          "joint polynomials differ at exponent (" + std::to_string(e[0]) + "," +
              std::to_string(e[1]) + ")"};
}

Outcome check_signed(int n, ScalarStat stat) {
  const MultiPoly poly = joint_polynomial(n, {stat}, true);
  const MultiPoly closed = binomial_expand(n);
  if (poly == closed) return {true, std::nullopt, poly.str()};
  const std::vector<int> e = *first_poly_mismatch(poly, closed);
  return {false,
          aggregate_witness(
              n, [&](const Permutation& p) { return scalar_stat_value(stat, p) == e[0]; }),
          poly.str() + " != " + closed.str()};
}

Outcome check_sign_bijection(int n) {
  std::vector<bool> seen(factorial(n), false);
  for (const Permutation& w : SnRange(n)) {
    const Permutation v = f_map(w);
    if (sign(v) != sign(w)) return {false, w, "sign not preserved"};
    if (v.first_letter() != w.first_letter()) return {false, w, "first letter not preserved"};
    if (drp(v) != depth(w)) return {false, w, "drp of the image differs from depth"};
    const std::uint64_t rank = lex_rank(v);
    if (seen[rank]) return {false, w, "image already produced"};
    seen[rank] = true;
  }
  return {};
}

Outcome check_displacement(int n) {
  for (const Permutation& w : SnRange(n)) {
    const int d = depth(w);
    if (d != depth(w.inverse())) return {false, w, "depth differs from depth of the inverse"};
    if (d != displacement(w)) return {false, w, "depth differs from half total displacement"};
  }
  return {};
}

Outcome check_drop_des(int n) {
  for (const Permutation& p : SnRange(n)) {
    const CyclicStats cs = cyclic_stats(p);
    const LinearStats ls = linear_stats(phi_triple(p).image);
    if (ls.des_positions.size() != cs.drop_positions.size())
      return {false, p, "descent count of the image differs from the drop count"};
    if (ls.des_values != cs.aexc_values)
      return {false, p, "descent bottoms of the image differ from the aexc values"};
  }
  return {};
}

Outcome check_eulerian(int n) {
  const MultiPoly hat = joint_polynomial(n, {ScalarStat::ExcHatPlusFixHat}, false);
  for (ScalarStat other : {ScalarStat::Asc, ScalarStat::Des, ScalarStat::Exc}) {
    const MultiPoly poly = joint_polynomial(n, {other}, false);
    if (hat == poly) continue;
    const std::vector<int> e = *first_poly_mismatch(hat, poly);
    return {false,
            aggregate_witness(n,
                              [&](const Permutation& p) {
                                return scalar_stat_value(ScalarStat::ExcHatPlusFixHat, p) ==
                                           e[0] ||
                                       scalar_stat_value(other, p) == e[0];
                              }),
            std::string("distribution differs from ") + scalar_stat_name(other) +
                " at exponent " + std::to_string(e[0])};
  }
  return {true, std::nullopt, hat.str()};
}

}  // namespace

CheckReport check_theorem(TheoremId id, int n) {
  if (n < 1 || n > 9) throw std::out_of_range("verification size outside 1..9");
  const auto start = std::chrono::steady_clock::now();

  Outcome outcome;
  switch (id) {
    case TheoremId::SucFix: outcome = check_suc_fix(n); break;
    case TheoremId::Triple: outcome = check_triple(n); break;
    case TheoremId::DepthExcDrpDes: outcome = check_depth_exc_drp_des(n); break;
    case TheoremId::SignedDepth: outcome = check_signed(n, ScalarStat::Depth); break;
    case TheoremId::SignedDrp: outcome = check_signed(n, ScalarStat::Drp); break;
    case TheoremId::SignBijection: outcome = check_sign_bijection(n); break;
    case TheoremId::Displacement: outcome = check_displacement(n); break;
    case TheoremId::DropDes: outcome = check_drop_des(n); break;
    case TheoremId::Eulerian: outcome = check_eulerian(n); break;
  }

  const auto stop = std::chrono::steady_clock::now();
  CheckReport report;
  report.theorem = theorem_name(id);
  report.n = n;
  report.pass = outcome.pass;
  report.witness = std::move(outcome.witness);
  report.detail = std::move(outcome.detail);
  report.elapsed_ms = std::chrono::duration<double, std::milli>(stop - start).count();
  return report;
}

}  // namespace permstat

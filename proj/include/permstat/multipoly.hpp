#pragma once

#include <map>
#include <string>
#include <vector>

namespace permstat {

/// Graded-lexicographic order on exponent vectors: total degree first,
/// ties broken lexicographically.
struct GrlexLess {
  bool operator()(const std::vector<int>& a, const std::vector<int>& b) const;
};

/// Sparse multivariate polynomial with exact integer coefficients over a
/// fixed ordered variable list. No zero coefficient is ever stored, so
/// equality is structural.
class MultiPoly {
 public:
  using TermMap = std::map<std::vector<int>, long long, GrlexLess>;

  explicit MultiPoly(std::vector<std::string> variables);

  const std::vector<std::string>& variables() const { return variables_; }
  const TermMap& terms() const { return terms_; }
  int arity() const { return static_cast<int>(variables_.size()); }
  bool is_zero() const { return terms_.empty(); }

  /// Adds c * prod(var_i ^ exponents[i]); erases the term if it cancels.
  /// Exponent vector length must equal arity(); exponents nonnegative.
  void add_term(const std::vector<int>& exponents, long long c);

  long long coefficient(const std::vector<int>& exponents) const;

  /// Same variable list required.
  MultiPoly& operator+=(const MultiPoly& rhs);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) {
    a += b;
    return a;
  }

  bool operator==(const MultiPoly&) const = default;

  /// Human form in graded-lex order, e.g. "1 - 2q + q^2".
  std::string str() const;

  /// {"variables":[...],"terms":[{"exponents":[...],"coefficient":...},...]}
  /// with terms in graded-lex order.
  std::string json_string() const;

 private:
  std::vector<std::string> variables_;
  TermMap terms_;
};

}  // namespace permstat

#include "permstat/multipoly.hpp"

#include <json.hpp>

#include <numeric>
#include <stdexcept>

namespace permstat {

bool GrlexLess::operator()(const std::vector<int>& a, const std::vector<int>& b) const {
  const long da = std::accumulate(a.begin(), a.end(), 0L);
  const long db = std::accumulate(b.begin(), b.end(), 0L);
  if (da != db) return da < db;
  return a < b;
}

MultiPoly::MultiPoly(std::vector<std::string> variables) : variables_(std::move(variables)) {
  if (variables_.empty()) throw std::invalid_argument("polynomial needs at least one variable");
}

void MultiPoly::add_term(const std::vector<int>& exponents, long long c) {
  if (exponents.size() != variables_.size())
    throw std::invalid_argument("exponent vector length does not match the variable list");
  for (int e : exponents)
    if (e < 0) throw std::invalid_argument("negative exponent");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponents, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

long long MultiPoly::coefficient(const std::vector<int>& exponents) const {
  auto it = terms_.find(exponents);
  return it == terms_.end() ? 0 : it->second;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& rhs) {
  if (variables_ != rhs.variables_)
    throw std::invalid_argument("cannot add polynomials over different variables");
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [exponents, coeff] : terms_) {
    long long a = coeff;
    if (first) {
      if (a < 0) {
        out += '-';
        a = -a;
      }
    } else {
      out += a < 0 ? " - " : " + ";
      if (a < 0) a = -a;
    }
    std::string mono;
    for (std::size_t v = 0; v < variables_.size(); ++v) {
      const int e = exponents[v];
      if (e == 0) continue;
      mono += variables_[v];
      if (e > 1) {
        mono += '^';
        mono += std::to_string(e);
      }
    }
    if (mono.empty()) {
      out += std::to_string(a);
    } else {
      if (a != 1) out += std::to_string(a);
      out += mono;
    }
    first = false;
  }
  return out;
}

std::string MultiPoly::json_string() const {
  nlohmann::ordered_json doc;
  doc["variables"] = variables_;
  auto& arr = doc["terms"] = nlohmann::ordered_json::array();
  for (const auto& [e, c] : terms_) {
    nlohmann::ordered_json term;
    term["exponents"] = e;
    term["coefficient"] = c;
    arr.push_back(std::move(term));
  }
  return doc.dump();
}

}  // namespace permstat

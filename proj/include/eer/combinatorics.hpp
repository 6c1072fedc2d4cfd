#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "eer/error.hpp"
#include "eer/garside.hpp"
#include "eer/simples.hpp"

namespace eer {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

// Integer polynomial, ascending coefficients, no trailing zeros.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<std::int64_t> coeffs) : c_(std::move(coeffs)) { trim(); }

  // 1 + q + ... + q^(n-1)
  static IntPolynomial geometric(int n) { return IntPolynomial(std::vector<std::int64_t>(static_cast<std::size_t>(n), 1)); }

  const std::vector<std::int64_t>& coefficients() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }

  std::int64_t operator[](std::size_t i) const { return i < c_.size() ? c_[i] : 0; }

  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<std::int64_t> out(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i] + b[i];
    return IntPolynomial(std::move(out));
  }

  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<std::int64_t> out(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    return IntPolynomial(std::move(out));
  }

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  BigInt evaluate(long long q) const {
    BigInt acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * q + *it;
    return acc;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<std::int64_t> c_;
};

// `1 4 7 11 7 4 1`; the zero polynomial prints `0`.
inline std::string to_array_string(const IntPolynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < p.coefficients().size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(p.coefficients()[i]);
  }
  return out;
}

namespace detail {
inline std::string monomial(const std::string& coeff, std::size_t deg, bool unit) {
  std::string out = (unit && deg > 0) ? "" : coeff;
  if (deg >= 1) out += "q";
  if (deg >= 2) out += "^" + std::to_string(deg);
  return out;
}
}  // namespace detail

// `1 + 4q + 7q^2 + ...`
inline std::string to_string(const IntPolynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < p.coefficients().size(); ++i) {
    auto c = p.coefficients()[i];
    if (c == 0) continue;
    if (!out.empty()) out += c < 0 ? " - " : " + ";
    else if (c < 0) out += "-";
    auto mag = c < 0 ? -c : c;
    out += detail::monomial(std::to_string(mag), i, mag == 1);
  }
  return out;
}

// Per-factor polynomial 1 + q + ... + q^(k-2) + e q^(k-1) + q^k + ... + q^(2k-2).
inline IntPolynomial poincare_factor(int e, int k) {
  std::vector<std::int64_t> c(static_cast<std::size_t>(2 * k - 1), 1);
  c[static_cast<std::size_t>(k - 1)] = e;
  return IntPolynomial(std::move(c));
}

inline IntPolynomial poincare_closed(int e, int r) {
  if (e < 1 || r < 2) throw InvalidArgument("poincare_closed needs e >= 1, r >= 2");
  IntPolynomial out({1});
  for (int k = 2; k <= r; ++k) out = out * poincare_factor(e, k);
  return out;
}

// Length histogram of a set of simples.
inline IntPolynomial poincare_census(const std::vector<Simple>& simples) {
  std::vector<std::int64_t> c;
  for (const auto& s : simples) {
    if (c.size() <= s.word.size()) c.resize(s.word.size() + 1, 0);
    ++c[s.word.size()];
  }
  return IntPolynomial(std::move(c));
}

inline IntPolynomial poincare_census(const GarsideData& g) { return poincare_census(simples_closed(g)); }

// (q^(2k-1) + (e-1) q^k - (e-1) q^(k-1) - 1) / (q - 1), for q != 1.
inline BigInt poincare_factor_rational_form(int e, int k, long long q) {
  if (q == 1) throw InvalidArgument("rational form needs q != 1");
  BigInt Q = q;
  BigInt num = pow(Q, static_cast<unsigned>(2 * k - 1)) + (e - 1) * pow(Q, static_cast<unsigned>(k)) -
               (e - 1) * pow(Q, static_cast<unsigned>(k - 1)) - 1;
  if (num % (Q - 1) != 0) throw Error("rational form is not integral");
  return num / (Q - 1);
}

// prod_{k=2}^{r} (2(k-1) + e)
inline BigInt simple_count(int e, int r) {
  if (e < 1 || r < 2) throw InvalidArgument("simple_count needs e >= 1, r >= 2");
  BigInt out = 1;
  for (int k = 2; k <= r; ++k) out *= 2 * (k - 1) + e;
  return out;
}

inline BigInt double_factorial(int n) {
  BigInt out = 1;
  for (int k = n; k > 1; k -= 2) out *= k;
  return out;
}

// |G(e,e,r)| = e^(r-1) r!
inline BigInt reflection_group_order(int e, int r) {
  BigInt out = pow(BigInt(e), static_cast<unsigned>(r - 1));
  for (int k = 2; k <= r; ++k) out *= k;
  return out;
}

enum class ClassicalType { A, B, D };

inline IntPolynomial classical_poincare(ClassicalType type, int n) {
  if (n < 1 || (type == ClassicalType::D && n < 2)) throw InvalidArgument("classical_poincare: rank too small");
  IntPolynomial out({1});
  switch (type) {
    case ClassicalType::A:
      for (int k = 1; k <= n; ++k) out = out * IntPolynomial::geometric(k + 1);
      break;
    case ClassicalType::B:
      for (int k = 1; k <= n; ++k) out = out * IntPolynomial::geometric(2 * k);
      break;
    case ClassicalType::D:
      out = IntPolynomial::geometric(n);
      for (int k = 1; k < n; ++k) out = out * IntPolynomial::geometric(2 * k);
      break;
  }
  return out;
}

// Z(q) = number of q-element multichains a_1 <= ... <= a_q of simples, with
// Z(0) = 1. Values for q = 0..q_max.
inline std::vector<BigInt> zeta_values(const SimpleLattice& lat, int q_max) {
  std::vector<BigInt> out{1};
  const std::size_t n = lat.elements.size();
  std::vector<BigInt> chains(n, 1);  // multichains of current length ending at each element
  for (int q = 1; q <= q_max; ++q) {
    if (q > 1) {
      std::vector<BigInt> next(n, 0);
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i <= j; ++i)
          if (lat.leq(i, j)) next[j] += chains[i];
      chains = std::move(next);
    }
    out.push_back(std::accumulate(chains.begin(), chains.end(), BigInt(0)));
  }
  return out;
}

// Exact rational polynomial as integer numerators over one positive denominator.
struct RationalPolynomial {
  std::vector<BigInt> numerators;  // ascending degree
  BigInt denominator = 1;

  BigRational evaluate(long long q) const {
    BigInt acc = 0;
    for (auto it = numerators.rbegin(); it != numerators.rend(); ++it) acc = acc * q + *it;
    return BigRational(acc, denominator);
  }
  friend bool operator==(const RationalPolynomial&, const RationalPolynomial&) = default;
};

// Unique polynomial of degree <= values.size()-1 through (q, values[q]),
// via Newton forward differences in the binomial basis.
inline RationalPolynomial interpolate(const std::vector<BigInt>& values) {
  const std::size_t n = values.size();
  std::vector<BigRational> coeffs(n, 0);
  std::vector<BigInt> diffs = values;
  std::vector<BigInt> falling{1};  // coefficients of q(q-1)...(q-k+1)
  BigInt factorial = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (k > 0) {
      factorial *= static_cast<unsigned long>(k);
      std::vector<BigInt> next(falling.size() + 1, 0);
      for (std::size_t i = 0; i < falling.size(); ++i) {
        next[i + 1] += falling[i];
        next[i] -= falling[i] * static_cast<long long>(k - 1);
      }
      falling = std::move(next);
    }
    const BigInt lead = diffs[0];
    for (std::size_t i = 0; i < falling.size(); ++i) coeffs[i] += BigRational(lead * falling[i], factorial);
    for (std::size_t i = 0; i + 1 < diffs.size(); ++i) diffs[i] = diffs[i + 1] - diffs[i];
    diffs.pop_back();
  }
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
  RationalPolynomial out;
  BigInt den = 1;
  for (const auto& c : coeffs) den = boost::multiprecision::lcm(den, boost::multiprecision::denominator(c));
  out.denominator = den;
  for (const auto& c : coeffs)
    out.numerators.push_back(boost::multiprecision::numerator(c) * (den / boost::multiprecision::denominator(c)));
  return out;
}

// Interpolated through q = 0..r(r-1), the rank of the lattice of simples.
inline RationalPolynomial zeta_polynomial(const GarsideData& g) {
  auto lat = simple_lattice(g);
  return interpolate(zeta_values(lat, static_cast<int>(g.delta.size())));
}

// `(11q^6 + 171q^5 + ... + 240)/240`, highest degree first.
inline std::string to_string(const RationalPolynomial& p) {
  std::string num;
  for (std::size_t k = p.numerators.size(); k-- > 0;) {
    const BigInt& c = p.numerators[k];
    if (c == 0) continue;
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (!num.empty()) num += c < 0 ? " - " : " + ";
    else if (c < 0) num += "-";
    num += detail::monomial(mag.str(), k, mag == 1);
  }
  if (num.empty()) num = "0";
  if (p.denominator == 1) return num;
  return "(" + num + ")/" + p.denominator.str();
}

struct DualityStats {
  std::size_t atom_count = 0;
  std::size_t delta_length = 0;
  std::size_t conj_order = 0;

  friend bool operator==(const DualityStats&, const DualityStats&) = default;
};

// e + r - 2, r(r-1), e / gcd(e, r)
inline DualityStats duality_stats(int e, int r) {
  if (e < 1 || r < 2) throw InvalidArgument("duality_stats needs e >= 1, r >= 2");
  return {static_cast<std::size_t>(e + r - 2), static_cast<std::size_t>(r * (r - 1)),
          static_cast<std::size_t>(e / std::gcd(e, r))};
}

// Same statistics read off the structure: generator count, length of the
// Delta word, order of the permutation x -> y with Delta x = y Delta.
inline DualityStats measure_duality_stats(const GarsideData& g) {
  return {g.presentation.size(), g.delta.size(), delta_conjugation_order(g)};
}

}  // namespace eer

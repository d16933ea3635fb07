// orientation.cpp — ℓ-adic linear orientations at finite precision.

#include "orraag/orientation.hpp"

#include <algorithm>
#include <cctype>

namespace orraag {

int valuation(const Int& x, long ell) {
  if (x == 0) return kValuationInfinity;
  Int a = abs(x);
  int v = 0;
  while (a % ell == 0) {
    a /= ell;
    ++v;
  }
  return v;
}

Int pow_int(long base, int exp) {
  Int r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

namespace {

bool is_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

LinearOrientation LinearOrientation::make(long ell, const Int& lambda1,
                                          std::optional<int> precision) {
  if (!is_prime(ell))
    throw error(error::Code::InvalidOrientation, std::to_string(ell) + " is not prime");
  const Int d = lambda1 - 1;
  if (d == 0)
    throw error(error::Code::InvalidOrientation, "lambda(1) = 1 is the trivial orientation");
  const int f = valuation(d, ell);
  if (f < 1)
    throw error(error::Code::InvalidOrientation,
                "lambda(1) must be congruent to 1 mod " + std::to_string(ell));
  if (ell == 2 && f < 2)
    throw error(error::Code::InvalidOrientation, "for ell = 2, lambda(1) must be 1 mod 4");
  const int N = precision.value_or(std::max(f + 6, 8));
  if (N < 2)
    throw error(error::Code::InvalidOrientation, "precision must be at least 2");
  if (f >= N)
    throw error(error::Code::InvalidOrientation,
                "lambda(1) is trivial at precision " + std::to_string(ell) + "^" +
                    std::to_string(N) + " (depth " + std::to_string(f) + ")");

  LinearOrientation lo;
  lo.ell_ = ell;
  lo.precision_ = N;
  lo.f_ = f;
  lo.modulus_ = pow_int(ell, N);
  lo.c_ = ((lambda1 % lo.modulus_) + lo.modulus_) % lo.modulus_;
  return lo;
}

Int parse_lambda_spec(const std::string& text, long ell) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.empty()) throw error(error::Code::ParseError, "empty lambda value");

  // Symbolic shape: 1+l, 1+l^f.
  if (s.rfind("1+l", 0) == 0) {
    int f = 1;
    std::string rest = s.substr(3);
    if (!rest.empty()) {
      if (rest[0] != '^')
        throw error(error::Code::ParseError, "expected '1+l' or '1+l^f', got '" + text + "'");
      rest = rest.substr(1);
      if (rest.empty() || !std::all_of(rest.begin(), rest.end(), [](char c) {
            return std::isdigit(static_cast<unsigned char>(c));
          }))
        throw error(error::Code::ParseError, "bad exponent in lambda value '" + text + "'");
      f = std::stoi(rest);
      if (f < 1 || f > 1000)
        throw error(error::Code::ParseError, "lambda exponent out of range in '" + text + "'");
    }
    return 1 + pow_int(ell, f);
  }

  std::size_t start = (s[0] == '-') ? 1 : 0;
  if (start == s.size() || !std::all_of(s.begin() + start, s.end(), [](char c) {
        return std::isdigit(static_cast<unsigned char>(c));
      }))
    throw error(error::Code::ParseError,
                "lambda value must be a decimal integer or '1+l^f', got '" + text + "'");
  return Int(s);
}

}  // namespace orraag

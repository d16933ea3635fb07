// orientation.hpp — ℓ-adic linear orientations at finite working precision.
//
// A linear orientation is determined by a prime ℓ and a unit c = λ(1) with
// c ≡ 1 (mod ℓ) — and c ≡ 1 (mod 4) when ℓ = 2 — held to precision ℓ^N.
// The depth f = v_ℓ(c − 1) satisfies 1 ≤ f < N (2 ≤ f when ℓ = 2); c must
// not collapse to 1 at working precision.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>

#include "orraag/graph.hpp"

namespace orraag {

using Int = boost::multiprecision::cpp_int;

// v_ℓ(x) for x ≠ 0; returns huge (kValuationInfinity) for x = 0.
inline constexpr int kValuationInfinity = 1 << 20;
int valuation(const Int& x, long ell);

Int pow_int(long base, int exp);

class LinearOrientation {
 public:
  // lambda1 is the image of 1, as an exact integer (e.g. 4 for ℓ = 3,
  // f = 1).  Without an explicit precision, N = max(f + 6, 8).
  // Throws error(InvalidOrientation) when ell is not prime, lambda1 ≡ 1 at
  // working precision, lambda1 ≢ 1 (mod ℓ), or ℓ = 2 with lambda1 ≢ 1 (mod 4).
  static LinearOrientation make(long ell, const Int& lambda1,
                                std::optional<int> precision = std::nullopt);

  long ell() const { return ell_; }
  int precision() const { return precision_; }
  int depth() const { return f_; }              // f = v_ℓ(c − 1)
  const Int& c() const { return c_; }           // λ(1) reduced mod ℓ^N
  const Int& modulus() const { return modulus_; }

 private:
  LinearOrientation() = default;
  long ell_ = 0;
  int precision_ = 0;
  int f_ = 0;
  Int c_;
  Int modulus_;
};

// Accepts a decimal value ("4") or the shape "1+l^f" / "1+l" with the given
// prime substituted for the letter l.  Throws error(ParseError).
Int parse_lambda_spec(const std::string& text, long ell);

}  // namespace orraag

#pragma once

#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace surfsep {

using BigInt = boost::multiprecision::cpp_int;

// ── elementary exact helpers ────────────────────────────────────────────────

/// floor(x^(1/k)) for x >= 0, k >= 1, by binary search.
BigInt iroot_floor(const BigInt& x, int k);
/// smallest z with z^k >= x.
BigInt iroot_ceil(const BigInt& x, int k);

// ── Moore bound ─────────────────────────────────────────────────────────────

/// M(delta, l) = 1 + delta + delta(delta-1) + ... + delta(delta-1)^(l-1).
/// Exact; requires delta >= 3, l >= 0.
BigInt moore(const BigInt& delta, int l);

// ── degree-diameter parameters ──────────────────────────────────────────────

/// The pair (ell, c) used by the main upper bound. ell is an exact integer.
/// c = c_base + c_cbrt_coeff * g^(1/3) held symbolically, since the cube
/// root is irrational for most g:
///   even diameter: ell = ceil(g^(2/3) + g^(1/2)) + 6,  c = 2 g^(1/3) + 6
///   odd diameter:  ell = ceil(sqrt(42 g)) + 33,        c = 2 ell + 2g - 1
struct EllC {
  BigInt ell;
  BigInt c_base;
  BigInt c_cbrt_coeff;  // 0 when c is a plain integer
  BigInt c_radicand;    // g

  bool c_is_integer() const;
  /// Exact value when integral (cbrt coefficient 0 or g a perfect cube).
  std::optional<BigInt> c_integer() const;
  /// smallest integer >= scale * c (single rounding of the cube-root term)
  BigInt scaled_ceil(const BigInt& scale) const;
  std::string c_string() const;  // symbolic, e.g. "2*g^(1/3)+6 (g=5)"
};

EllC params_ell_c(const BigInt& g, bool k_even);

// ── bounds ──────────────────────────────────────────────────────────────────

/// Order upper bound for genus g, max degree delta, diameter k:
///   (2ell+1) c (delta-1)^floor(k/2)
///     + (2ell+1)(2k+1)(g+ell) M(delta, floor(k/2)-1)
///     + ell (3+2g) k + ell
/// with (ell, c) from params_ell_c by the parity of k. Exact except for one
/// final ceiling on the irrational c term, so the strict inequality
/// |V(G)| < bound is preserved. Requires delta >= 3, k >= 2, g >= 0.
BigInt thm_main_upper(const BigInt& g, const BigInt& delta, int k);

/// Leaf count of the extremal construction: p (delta-p+1) (delta-1)^((k-3)/2).
/// Requires odd k >= 3 and 3 <= p <= delta.
BigInt eq2_lower(const BigInt& g, const BigInt& delta, int k, const BigInt& p);

/// Exact order of the extremal construction on a p-clique:
///   p * (1 + (delta-p+1) * ((delta-1)^((k-1)/2) - 1) / (delta-2)).
BigInt lower_bound_order(const BigInt& delta, int k, const BigInt& p);

/// Complete-graph size used per supported genus (0 -> K4, 1 -> K6, 2 -> K7).
std::optional<int> builtin_clique_order(long long genus);

// ── aggregate report ────────────────────────────────────────────────────────

struct BoundReport {
  BigInt g, delta;
  int k = 0;

  BigInt moore_k;        // M(delta, k), the planar degree-diameter ceiling
  BigInt main_upper;     // thm_main_upper
  EllC ellc;

  bool k_odd = false;
  std::optional<BigInt> eq2;          // odd k with a built-in clique only
  std::optional<BigInt> construction; // exact order of the built construction
  std::optional<int> p;

  /// Asymptotic theorem needs delta >= 2k+1 (odd) or delta >= c(g^(2/3)+1)k
  /// (even); the bound is still reported when unmet, with this flag raised.
  bool preconditions_possibly_unmet = false;
  std::string precondition_note;
};

BoundReport bounds_report(const BigInt& g, const BigInt& delta, int k);
std::string bound_report_to_json(const BoundReport& report);

}  // namespace surfsep

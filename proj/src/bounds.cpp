#include "surfsep/bounds.h"

#include <limits>
#include <stdexcept>

#include "json.hpp"

namespace surfsep {

// ── elementary exact helpers ────────────────────────────────────────────────

BigInt iroot_floor(const BigInt& x, int k) {
  if (x < 0) throw std::invalid_argument("iroot: negative radicand");
  if (k < 1) throw std::invalid_argument("iroot: k must be >= 1");
  if (x == 0) return 0;
  BigInt lo = 1, hi = 1;
  while (boost::multiprecision::pow(hi, static_cast<unsigned>(k)) <= x) hi <<= 1;
  while (lo + 1 < hi) {  // lo^k <= x < hi^k
    BigInt mid = (lo + hi) / 2;
    if (boost::multiprecision::pow(mid, static_cast<unsigned>(k)) <= x) lo = mid;
    else hi = mid;
  }
  return lo;
}

BigInt iroot_ceil(const BigInt& x, int k) {
  BigInt r = iroot_floor(x, k);
  return boost::multiprecision::pow(r, static_cast<unsigned>(k)) == x ? r : r + 1;
}

// ── Moore bound ─────────────────────────────────────────────────────────────

BigInt moore(const BigInt& delta, int l) {
  if (delta < 3) throw std::invalid_argument("moore: delta must be >= 3");
  if (l < 0) throw std::invalid_argument("moore: l must be >= 0");
  BigInt geometric =
      (boost::multiprecision::pow(delta - 1, static_cast<unsigned>(l)) - 1) / (delta - 2);
  return 1 + delta * geometric;
}

// ── degree-diameter parameters ──────────────────────────────────────────────

bool EllC::c_is_integer() const {
  if (c_cbrt_coeff == 0) return true;
  BigInt r = iroot_floor(c_radicand, 3);
  return r * r * r == c_radicand;
}

std::optional<BigInt> EllC::c_integer() const {
  if (!c_is_integer()) return std::nullopt;
  return c_base + c_cbrt_coeff * iroot_floor(c_radicand, 3);
}

BigInt EllC::scaled_ceil(const BigInt& scale) const {
  if (scale < 0) throw std::invalid_argument("scaled_ceil: negative scale");
  BigInt linear = scale * c_base;
  if (c_cbrt_coeff == 0) return linear;
  BigInt a = scale * c_cbrt_coeff;  // smallest t >= a * radicand^(1/3)
  return linear + iroot_ceil(a * a * a * c_radicand, 3);
}

std::string EllC::c_string() const {
  if (std::optional<BigInt> exact = c_integer()) return exact->str();
  return c_cbrt_coeff.str() + "*g^(1/3)+" + c_base.str() + " (g=" + c_radicand.str() +
         ")";
}

namespace {

/// Smallest integer t with t >= g^(2/3) + g^(1/2), exactly: with A = g^2 and
/// B = g, the inequality t - sqrt(B) >= cbrt(A) cubes to
/// L := t^3 + 3tB - A >= (3t^2 + B) sqrt(B), which squares once more.
BigInt ceil_cbrt_square_plus_sqrt(const BigInt& g) {
  BigInt A = g * g, B = g;
  auto holds = [&](const BigInt& t) {
    BigInt L = t * t * t + 3 * t * B - A;
    if (L < 0) return false;
    BigInt rhs = 3 * t * t + B;
    return L * L >= B * rhs * rhs;
  };
  BigInt t = iroot_floor(A, 3) + iroot_floor(B, 2);
  while (!holds(t)) ++t;
  return t;
}

}  // namespace

EllC params_ell_c(const BigInt& g, bool k_even) {
  if (g < 0) throw std::invalid_argument("params_ell_c: genus must be >= 0");
  EllC out;
  out.c_radicand = g;
  if (k_even) {
    out.ell = ceil_cbrt_square_plus_sqrt(g) + 6;
    out.c_base = 6;
    out.c_cbrt_coeff = 2;
  } else {
    out.ell = iroot_ceil(42 * g, 2) + 33;
    out.c_base = 2 * out.ell + 2 * g - 1;
    out.c_cbrt_coeff = 0;
  }
  return out;
}

// ── bounds ──────────────────────────────────────────────────────────────────

BigInt thm_main_upper(const BigInt& g, const BigInt& delta, int k) {
  if (g < 0) throw std::invalid_argument("thm_main_upper: genus must be >= 0");
  if (delta < 3) throw std::invalid_argument("thm_main_upper: delta must be >= 3");
  if (k < 2) throw std::invalid_argument("thm_main_upper: k must be >= 2");

  EllC ellc = params_ell_c(g, k % 2 == 0);
  const BigInt& ell = ellc.ell;
  BigInt two_ell = 2 * ell + 1;
  BigInt growth = boost::multiprecision::pow(delta - 1, static_cast<unsigned>(k / 2));
  BigInt m = moore(delta, k / 2 - 1);

  BigInt head = ellc.scaled_ceil(two_ell * growth);  // the one rounded term
  return head + two_ell * (2 * k + 1) * (g + ell) * m + ell * (3 + 2 * g) * k + ell;
}

BigInt eq2_lower(const BigInt& g, const BigInt& delta, int k, const BigInt& p) {
  if (g < 0) throw std::invalid_argument("eq2_lower: genus must be >= 0");
  if (k < 3 || k % 2 == 0) throw std::invalid_argument("eq2_lower: k must be odd >= 3");
  if (p < 3 || p > delta) throw std::invalid_argument("eq2_lower: need 3 <= p <= delta");
  return p * (delta - p + 1) *
         boost::multiprecision::pow(delta - 1, static_cast<unsigned>((k - 3) / 2));
}

BigInt lower_bound_order(const BigInt& delta, int k, const BigInt& p) {
  if (delta < 3) throw std::invalid_argument("lower_bound_order: delta must be >= 3");
  if (k < 3 || k % 2 == 0)
    throw std::invalid_argument("lower_bound_order: k must be odd >= 3");
  if (p < 3 || p > delta)
    throw std::invalid_argument("lower_bound_order: need 3 <= p <= delta");
  BigInt per_root =
      (boost::multiprecision::pow(delta - 1, static_cast<unsigned>((k - 1) / 2)) - 1) /
      (delta - 2);
  return p * (1 + (delta - p + 1) * per_root);
}

std::optional<int> builtin_clique_order(long long genus) {
  switch (genus) {
    case 0: return 4;
    case 1: return 6;
    case 2: return 7;
    default: return std::nullopt;
  }
}

// ── aggregate report ────────────────────────────────────────────────────────

BoundReport bounds_report(const BigInt& g, const BigInt& delta, int k) {
  BoundReport rep;
  rep.g = g;
  rep.delta = delta;
  rep.k = k;
  rep.k_odd = k % 2 == 1;
  rep.moore_k = moore(delta, k);
  rep.main_upper = thm_main_upper(g, delta, k);
  rep.ellc = params_ell_c(g, !rep.k_odd);

  if (rep.k_odd) {
    std::optional<int> builtin;
    if (g <= std::numeric_limits<long long>::max())
      builtin = builtin_clique_order(static_cast<long long>(g));
    BigInt p = builtin ? BigInt(*builtin) : iroot_ceil(6 * g + 9, 2);
    if (p >= 3 && p <= delta && p <= std::numeric_limits<int>::max()) {
      rep.p = static_cast<int>(p);
      rep.eq2 = eq2_lower(g, delta, k, p);
      if (builtin) rep.construction = lower_bound_order(delta, k, p);
    }
  }

  if (rep.k_odd) {
    rep.precondition_note = "asymptotic theorem assumes delta >= 2k+1";
    rep.preconditions_possibly_unmet = delta < 2 * k + 1;
  } else {
    rep.precondition_note =
        "asymptotic theorem assumes delta >= c(g^(2/3)+1)k for an unspecified "
        "absolute constant c";
    rep.preconditions_possibly_unmet = delta < k;
  }
  return rep;
}

namespace {

nlohmann::json big_to_json(const BigInt& x) {
  static const BigInt lo = std::numeric_limits<long long>::min();
  static const BigInt hi = std::numeric_limits<long long>::max();
  if (x >= lo && x <= hi) return static_cast<long long>(x);
  return x.str();  // too wide for JSON numbers: decimal string
}

}  // namespace

std::string bound_report_to_json(const BoundReport& report) {
  nlohmann::json j;
  j["g"] = big_to_json(report.g);
  j["delta"] = big_to_json(report.delta);
  j["k"] = report.k;
  j["moore_k"] = big_to_json(report.moore_k);
  j["thm_main_upper"] = big_to_json(report.main_upper);
  j["ell"] = big_to_json(report.ellc.ell);
  if (std::optional<BigInt> c = report.ellc.c_integer()) j["c"] = big_to_json(*c);
  else j["c"] = report.ellc.c_string();
  if (report.eq2) j["eq2_lower_formula"] = big_to_json(*report.eq2);
  if (report.construction) j["construction_order"] = big_to_json(*report.construction);
  if (report.p) j["p"] = *report.p;
  j["preconditions_possibly_unmet"] = report.preconditions_possibly_unmet;
  j["precondition_note"] = report.precondition_note;
  return j.dump(2) + "\n";
}

}  // namespace surfsep

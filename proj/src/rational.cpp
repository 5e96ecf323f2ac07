#include "interlace/rational.hpp"

#include "interlace/error.hpp"

#include <cctype>
#include <cmath>

namespace interlace {

std::string_view error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "INVALID_ARGUMENT";
    case ErrorCode::DimensionMismatch: return "DIMENSION_MISMATCH";
    case ErrorCode::NotPsd: return "NOT_PSD";
    case ErrorCode::NotRealRooted: return "NOT_REAL_ROOTED";
    case ErrorCode::NotAboveRoots: return "NOT_ABOVE_ROOTS";
    case ErrorCode::PreconditionFail: return "PRECONDITION_FAIL";
    case ErrorCode::HypothesisViolated: return "HYPOTHESIS_VIOLATED";
    case ErrorCode::GuardExceeded: return "GUARD_EXCEEDED";
    case ErrorCode::Parse: return "PARSE_ERROR";
    case ErrorCode::InterlacingViolation: return "INTERLACING_VIOLATION";
    case ErrorCode::MixedCharNotRealRooted: return "MIXED_CHAR_NOT_REAL_ROOTED";
    case ErrorCode::InternalInvariant: return "INTERNAL_INVARIANT";
  }
  return "UNKNOWN";
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den))
    fail(ErrorCode::Parse, "malformed rational \"" + std::string(text) + "\" (expected p/q)");
  Integer n(std::string(num), 10);
  Integer d(std::string(den), 10);
  if (d == 0) fail(ErrorCode::Parse, "zero denominator in \"" + std::string(text) + "\"");
  if (negative) n = -n;
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational pow2(int exponent) {
  Integer p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
  if (exponent >= 0) return Rational(p);
  Rational q(Integer(1), p);
  q.canonicalize();
  return q;
}

std::string to_decimal(const Rational& q, int digits) {
  if (q == 0) {
    std::string s = "0";
    if (digits > 1) s += "." + std::string(static_cast<std::size_t>(digits - 1), '0');
    return s;
  }
  const bool negative = sgn(q) < 0;
  const Rational a = abs(q);
  Integer ten_pow_digits;
  mpz_ui_pow_ui(ten_pow_digits.get_mpz_t(), 10, static_cast<unsigned long>(digits));

  // Decimal exponent e with 10^e <= a < 10^(e+1).
  auto pow10 = [](long e) {
    Integer p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(e < 0 ? -e : e));
    if (e >= 0) return Rational(p);
    Rational r(Integer(1), p);
    r.canonicalize();
    return r;
  };
  long e = static_cast<long>(std::floor(std::log10(a.get_d())));
  while (pow10(e) > a) --e;
  while (pow10(e + 1) <= a) ++e;

  auto scaled_round = [&](long exp10) {
    // round(a * 10^(digits - 1 - exp10)), half away from zero.
    const Rational s = a * pow10(digits - 1 - exp10);
    Integer rounded = (2 * s.get_num() + s.get_den()) / (2 * s.get_den());
    return rounded;
  };
  Integer n = scaled_round(e);
  if (n >= ten_pow_digits) {
    ++e;
    n = scaled_round(e);
  }
  std::string ds = n.get_str();
  std::string out;
  if (e >= digits - 1) {
    out = ds + std::string(static_cast<std::size_t>(e - (digits - 1)), '0');
  } else if (e >= 0) {
    out = ds.substr(0, static_cast<std::size_t>(e + 1)) + "." + ds.substr(static_cast<std::size_t>(e + 1));
  } else {
    out = "0." + std::string(static_cast<std::size_t>(-e - 1), '0') + ds;
  }
  if (!out.empty() && out.back() == '.') out.pop_back();
  return negative ? "-" + out : out;
}

std::string approx_label(const Rational& q) { return "≈" + to_decimal(q); }

bool exact_sqrt(const Rational& q, Rational& root) {
  if (sgn(q) < 0) return false;
  if (!mpz_perfect_square_p(q.get_num_mpz_t()) || !mpz_perfect_square_p(q.get_den_mpz_t())) return false;
  Integer n, d;
  mpz_sqrt(n.get_mpz_t(), q.get_num_mpz_t());
  mpz_sqrt(d.get_mpz_t(), q.get_den_mpz_t());
  root = Rational(n, d);
  root.canonicalize();
  return true;
}

Rational sqrt_upper(const Rational& q, const Rational& width) {
  if (sgn(q) < 0) fail(ErrorCode::InvalidArgument, "sqrt_upper of a negative rational");
  if (sgn(width) <= 0) fail(ErrorCode::InvalidArgument, "sqrt_upper needs a positive width");
  Rational root;
  if (exact_sqrt(q, root)) return root;
  // r = ceil(sqrt(ceil(q 4^k))) / 2^k overshoots sqrt(q) by at most 2^(1-k).
  int k = 1;
  while (pow2(1 - k) > width) ++k;
  const Rational scaled = q * pow2(2 * k);
  Integer n = scaled.get_num() / scaled.get_den();
  if (n * scaled.get_den() < scaled.get_num()) ++n;
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  if (r * r < n) ++r;
  return Rational(r) * pow2(-k);
}

}  // namespace interlace

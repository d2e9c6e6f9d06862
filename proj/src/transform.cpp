#include "mockcong/transform.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace mockcong {

namespace {

Rational rat(std::int64_t n, std::int64_t d = 1) {
  Rational x(Integer(static_cast<long>(n)), Integer(static_cast<long>(d)));
  x.canonicalize();
  return x;
}

Rational rat(const Integer& n, const Integer& d) {
  Rational x(n, d);
  x.canonicalize();
  return x;
}

Integer big(std::int64_t n) { return Integer(static_cast<long>(n)); }

std::int64_t gcd6_class(std::int64_t m) { return std::gcd(m, std::int64_t{6}); }

void require_positive_c(const UnimodularMatrix& A, const char* what) {
  if (A.c() <= 0) throw Error(ErrorCode::BadMatrix, std::string(what) + " needs c > 0, got " + A.to_string());
}

// Square class test used by the goodness criteria: only primes p >= 5 can
// make 1 - 24t or -3t - 2 a non-residue (both are 1 mod 2 and 1 mod 3 or squares there).
bool has_nonresidue_prime(std::int64_t m, std::int64_t value) {
  for (const std::int64_t p : prime_divisors(m)) {
    if (p < 5) continue;
    if (jacobi(value, p) == -1) return true;
  }
  return false;
}

std::int64_t goodness_value(const Progression& p, TransformKind kind) {
  switch (kind.tag) {
    case TransformKind::Tag::F: return 1 - 24 * p.t;
    case TransformKind::Tag::Omega: return -3 * p.t - 2;
    case TransformKind::Tag::Eta: break;
  }
  throw Error(ErrorCode::InvalidArgument, "goodness is defined for the F and Omega kinds only");
}

}  // namespace

// ---- matrices --------------------------------------------------------------

UnimodularMatrix::UnimodularMatrix(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) : m_{a, b, c, d} {
  if (static_cast<__int128>(a) * d - static_cast<__int128>(b) * c != 1) {
    throw Error(ErrorCode::BadMatrix, "determinant of " + to_string() + " is not 1");
  }
}

std::string UnimodularMatrix::to_string() const {
  std::ostringstream os;
  os << "(" << m_.a << "," << m_.b << ";" << m_.c << "," << m_.d << ")";
  return os.str();
}

UnimodularMatrix operator*(const UnimodularMatrix& x, const UnimodularMatrix& y) {
  const Matrix2 p = x.m_ * y.m_;
  return UnimodularMatrix(p.a, p.b, p.c, p.d);
}

Progression Progression::make(std::int64_t m, std::int64_t t) {
  if (m < 1) throw Error(ErrorCode::InvalidArgument, "progression modulus must be positive");
  return {m, floor_mod(t, m)};
}

// ---- level constants and goodness -----------------------------------------

std::int64_t level_constant(std::int64_t m) {
  if (m < 1) throw Error(ErrorCode::InvalidArgument, "m must be positive");
  switch (gcd6_class(m)) {
    case 1: return 2 * m;
    case 2: return 8 * m;
    case 3: return 6 * m;
    default: return 24 * m;
  }
}

std::int64_t level_constant_eta(std::int64_t m) {
  if (m < 1) throw Error(ErrorCode::InvalidArgument, "m must be positive");
  switch (gcd6_class(m)) {
    case 1: return m;
    case 2: return 8 * m;
    case 3: return 3 * m;
    default: return 24 * m;
  }
}

std::int64_t q_divisor(std::int64_t m, std::int64_t b) {
  if (m < 1) throw Error(ErrorCode::InvalidArgument, "m must be positive");
  if (b % 6 == 0) throw Error(ErrorCode::BDivisibleBySix, "B = " + std::to_string(b));
  const auto [two_part, rest] = split_prime_power(m, 2);
  const auto [three_part, coprime_part] = split_prime_power(rest, 3);
  switch (std::gcd(b, std::int64_t{6})) {
    case 1: return coprime_part;
    case 2: return two_part * coprime_part;
    default: return three_part * coprime_part;
  }
}

bool is_good(const Progression& p, TransformKind kind) {
  return has_nonresidue_prime(p.m, goodness_value(p, kind));
}

Progression refine_to_good(const Progression& p, TransformKind kind) {
  if (is_good(p, kind)) return p;
  for (std::int64_t prime = 5;; ++prime) {
    if (!is_prime(prime) || p.m % prime == 0) continue;
    for (std::int64_t x = 2; x < prime; ++x) {
      if (jacobi(x, prime) != -1) continue;
      // Solve the kind's residue condition for T mod prime with value x.
      const std::int64_t t_mod_prime = kind.tag == TransformKind::Tag::F
                                           ? floor_mod((1 - x) * inverse_mod(24, prime), prime)
                                           : floor_mod((-2 - x) * inverse_mod(3, prime), prime);
      const Congruence system[] = {{p.t, p.m}, {t_mod_prime, prime}};
      const Progression refined{p.m * prime, crt(system)};
      if (is_good(refined, kind)) return refined;
    }
  }
}

// ---- decompositions and t_A -----------------------------------------------

UpperDecomposition decompose_upper(const UnimodularMatrix& A, std::int64_t m, std::int64_t lambda) {
  if (m < 1) throw Error(ErrorCode::InvalidArgument, "m must be positive");
  if (std::gcd(A.a(), m) != 1) {
    throw Error(ErrorCode::NonInvertibleA, "gcd(a, m) != 1 for " + A.to_string() + ", m = " + std::to_string(m));
  }
  const auto [a, b, c, d] = A.matrix();
  const std::int64_t lp = floor_mod(static_cast<std::int64_t>(
                                        static_cast<__int128>(inverse_mod(a, m)) * floor_mod(b + d * lambda, m) % m),
                                    m);
  const __int128 numerator = -static_cast<__int128>(lp) * c * lambda - static_cast<__int128>(lp) * a + b +
                             static_cast<__int128>(d) * lambda;
  if (numerator % m != 0) {
    throw Error(ErrorCode::BadMatrix, "A_lambda is not integral for " + A.to_string() + ", m = " + std::to_string(m));
  }
  UnimodularMatrix a_lambda(a + c * lambda, static_cast<std::int64_t>(numerator / m), m * c, d - c * lp);
  return {a_lambda, lp};
}

std::int64_t t_image(std::int64_t a, const Progression& p, TransformKind kind) {
  const std::int64_t m = p.m;
  if (kind.tag == TransformKind::Tag::Omega) {
    if (a % 3 == 0) throw Error(ErrorCode::BadUnit, "3 divides a = " + std::to_string(a));
    const __int128 a2 = static_cast<__int128>(floor_mod(a, 3 * m)) * floor_mod(a, 3 * m);
    const __int128 value = static_cast<__int128>(p.t) * a2 + 2 * ((a2 - 1) / 3);
    return floor_mod(static_cast<std::int64_t>(value % m), m);
  }
  if (std::gcd(a, std::int64_t{6}) != 1) throw Error(ErrorCode::BadUnit, "gcd(a, 6) != 1 for a = " + std::to_string(a));
  const __int128 a2 = static_cast<__int128>(floor_mod(a, 24 * m)) * floor_mod(a, 24 * m);
  const __int128 correction = (1 - a2) / 24;  // exact since a^2 = 1 mod 24
  const __int128 value = kind.tag == TransformKind::Tag::F ? a2 * p.t + correction : a2 * p.t - kind.b * correction;
  return floor_mod(static_cast<std::int64_t>(value % m), m);
}

std::int64_t covering_b(TransformKind kind) {
  switch (kind.tag) {
    case TransformKind::Tag::F: return -1;
    case TransformKind::Tag::Omega: return 2;  // keeps the 2-part: only powers of 3 are pulled out
    case TransformKind::Tag::Eta: break;
  }
  return kind.b;
}

namespace {

std::set<std::int64_t> image_impl(const Progression& p, TransformKind kind, bool fix_q_class) {
  const bool omega = kind.tag == TransformKind::Tag::Omega;
  const std::int64_t span = omega ? 3 * p.m : 24 * p.m;
  const std::int64_t q = q_divisor(p.m, covering_b(kind));
  const std::int64_t fixer = omega ? 3 * q : 24 * q;
  std::set<std::int64_t> out;
  for (std::int64_t a = 1; a < span; ++a) {
    if (std::gcd(a, span) != 1) continue;
    if (fix_q_class && floor_mod(a * a, fixer) != 1) continue;
    out.insert(t_image(a, p, kind));
  }
  return out;
}

}  // namespace

std::set<std::int64_t> orbit(const Progression& p, TransformKind kind) { return image_impl(p, kind, true); }

std::set<std::int64_t> unit_image(const Progression& p, TransformKind kind) { return image_impl(p, kind, false); }

// ---- multipliers -----------------------------------------------------------

ExactScalar multiplier_w(const UnimodularMatrix& A) {
  require_positive_c(A, "w(A)");
  const auto [a, b, c, d] = A.matrix();
  if (c % 2 != 0) throw Error(ErrorCode::BadMatrix, "w(A) needs A in Gamma_0(2), got " + A.to_string());
  // i^{-1/2} e^{-pi i s(-d,c)} (-1)^{(c+1+ad)/2} e(-(a+d)/24c - a/4 + 3dc/8)
  Rational u = rat(-1, 8);
  u -= dedekind_sum(-d, c) / 2;
  u += rat(big(c) + 1 + big(a) * big(d), big(4));
  u += rat(-(a + d), 24 * c) - rat(a, 4) + rat(big(3) * big(d) * big(c), big(8));
  return ExactScalar::root_of_unity(u);
}

ExactScalar multiplier_w1(const UnimodularMatrix& A) {
  require_positive_c(A, "w1(A)");
  const auto [a, b, c, d] = A.matrix();
  if (c % 2 != 0) throw Error(ErrorCode::ParityMismatch, "w1 needs c even, got " + A.to_string());
  // (-i)^{1/2} (-1)^{(a-1)/2} e^{-pi i s(-d, c/2)} e(3ab/4 - (a+d)/12c)
  Rational u = rat(-1, 8);
  u += rat(a - 1, 4);
  u -= dedekind_sum(-d, c / 2) / 2;
  u += rat(big(3) * big(a) * big(b), big(4)) - rat(a + d, 12 * c);
  return ExactScalar::root_of_unity(u);
}

ExactScalar multiplier_w2(const UnimodularMatrix& A) {
  require_positive_c(A, "w2(A)");
  const auto [a, b, c, d] = A.matrix();
  if (d % 2 != 0) throw Error(ErrorCode::ParityMismatch, "w2 needs d even, got " + A.to_string());
  // i^{1/2} (-1)^{(32a-d)/24c} e^{-pi i s(-d/2, c)} e^{-(pi i/2)(2a + b - 3 - 3ab + 3a/c)}
  Rational u = rat(1, 8);
  u += rat(32 * a - d, 48 * c);
  u -= dedekind_sum(-d / 2, c) / 2;
  const Rational inner = rat(big(2) * big(a) + big(b) - 3 - big(3) * big(a) * big(b), big(1)) + rat(3 * a, c);
  u -= inner / 4;
  return ExactScalar::root_of_unity(u);
}

ExactScalar eta_multiplier(const UnimodularMatrix& A) {
  require_positive_c(A, "eta multiplier");
  const auto [a, b, c, d] = A.matrix();
  return ExactScalar::root_of_unity((rat(a + d, c) - 12 * dedekind_sum(d, c)) / 24);
}

// ---- constancy -------------------------------------------------------------

ExactScalar combined_scalar(const UnimodularMatrix& A, const Progression& p, TransformKind kind, std::int64_t lambda) {
  require_positive_c(A, "combined scalar");
  const std::int64_t m = p.m;
  const bool omega = kind.tag == TransformKind::Tag::Omega;
  if (kind.tag == TransformKind::Tag::Eta) {
    throw Error(ErrorCode::InvalidArgument, "combined scalar is defined for the F and Omega kinds");
  }
  const std::int64_t level = omega ? 2 * level_constant(m) : level_constant(m);
  if (A.c() % level != 0) {
    throw Error(ErrorCode::BadMatrix, A.to_string() + " is not in Gamma_0(" + std::to_string(level) + ")");
  }
  const auto dec = decompose_upper(A, m, lambda);
  const std::int64_t t_a = t_image(A.a(), p, kind);
  // zeta_m^x := e(x / m) for rational x
  const Rational shift = omega ? rat(2, 3) : rat(-1, 24);
  const Rational exponent = (-lambda * (rat(p.t) + shift) + dec.lambda_prime * (rat(t_a) + shift)) / m;
  const ExactScalar mult = omega ? multiplier_w1(dec.a_lambda) : multiplier_w(dec.a_lambda);
  return mult * ExactScalar::root_of_unity(exponent);
}

std::vector<ExactScalar> constancy_check(const UnimodularMatrix& A, const Progression& p, TransformKind kind) {
  std::vector<ExactScalar> distinct;
  for (std::int64_t lambda = 0; lambda < p.m; ++lambda) {
    ExactScalar value = combined_scalar(A, p, kind, lambda);
    if (std::find(distinct.begin(), distinct.end(), value) == distinct.end()) distinct.push_back(std::move(value));
  }
  return distinct;
}

// ---- cusps -----------------------------------------------------------------

CuspDecomposition cusp_decompose(std::int64_t lambda, std::int64_t q, std::int64_t c_entry, std::int64_t lambda_star) {
  if (q < 1 || c_entry < 1) throw Error(ErrorCode::InvalidArgument, "need Q >= 1 and c >= 1");
  const std::int64_t n = 1 + c_entry * lambda;
  const std::int64_t d = std::gcd(n, q);
  const std::int64_t q_red = q / d;
  const std::int64_t n_red = n / d;
  if (floor_mod(n_red * lambda_star - lambda, q_red) != 0) {
    throw Error(ErrorCode::InvalidArgument, "lambda* does not solve the congruence");
  }
  if (c_entry == 1 && q_red % 2 == 1 && (d - lambda_star) % 2 != 0) {
    throw Error(ErrorCode::InvalidArgument, "d_lambda - lambda* must be even when Q/d_lambda is odd");
  }
  const std::int64_t top = -n_red * lambda_star + lambda;
  UnimodularMatrix c(n_red, top / q_red, c_entry * q_red, -c_entry * lambda_star + d);
  // (1 lambda; 0 Q)(1 0; c 1) == C (1 lambda*; 0 Q/d)(d 0; 0 1)
  const Matrix2 lhs = Matrix2{1, lambda, 0, q} * Matrix2{1, 0, c_entry, 1};
  const Matrix2 rhs = c.matrix() * Matrix2{1, lambda_star, 0, q_red} * Matrix2{d, 0, 0, 1};
  if (!(lhs == rhs)) throw Error(ErrorCode::BadMatrix, "cusp factorization failed");
  return {d, lambda_star, c};
}

CuspDecomposition cusp_decompose(std::int64_t lambda, std::int64_t q, std::int64_t c_entry) {
  if (q < 1 || c_entry < 1) throw Error(ErrorCode::InvalidArgument, "need Q >= 1 and c >= 1");
  const std::int64_t n = 1 + c_entry * lambda;
  const std::int64_t d = std::gcd(n, q);
  const std::int64_t q_red = q / d;
  std::int64_t lambda_star = q_red == 1 ? 0 : floor_mod(inverse_mod(n / d, q_red) * floor_mod(lambda, q_red), q_red);
  if (c_entry == 1 && q_red % 2 == 1 && (d - lambda_star) % 2 != 0) lambda_star += q_red;
  return cusp_decompose(lambda, q, c_entry, lambda_star);
}

ExactScalar cusp12_leading(std::int64_t q, std::int64_t t) {
  if (q < 1 || std::gcd(q, std::int64_t{6}) != 1) throw Error(ErrorCode::BadQ, "need gcd(Q, 6) = 1, got " + std::to_string(q));
  const auto p = Progression::make(q, t);
  if (q > 1 && !is_good(p, TransformKind::f())) {
    throw Error(ErrorCode::InvalidArgument, "t = " + std::to_string(t) + " is not good mod " + std::to_string(q));
  }
  const std::int64_t lambda0 = (q - 1) / 2;
  const auto dec = cusp_decompose(lambda0, q, 2);  // d = Q, lambda' = 0, C = (1 (Q-1)/2; 2 Q)
  return ExactScalar::sqrt(rat(1, q)) * multiplier_w(dec.c_matrix) *
         ExactScalar::root_of_unity(rat((1 - q) / 2) * (rat(p.t) - rat(1, 24)) / q);
}

ExactScalar cusp13_leading(std::int64_t q, std::int64_t t) {
  if (q < 1 || q % 3 == 0) throw Error(ErrorCode::BadQ, "need gcd(Q, 3) = 1, got " + std::to_string(q));
  const auto p = Progression::make(q, t);
  if (q > 1 && !is_good(p, TransformKind::omega())) {
    throw Error(ErrorCode::InvalidArgument, "t = " + std::to_string(t) + " is not good mod " + std::to_string(q));
  }
  const auto dec = cusp_decompose(q - 1, q, 1, q);  // D = (1 -1; 1 0)
  return ExactScalar::sqrt(rat(1, 2 * q)) * multiplier_w2(dec.c_matrix) *
         ExactScalar::root_of_unity(rat(1 - q) * (rat(p.t) + rat(2, 3)) / q) * ExactScalar::root_of_unity(rat(-q, 48));
}

// ---- auxiliary identities ---------------------------------------------------

ExactScalar minus1_value(const UnimodularMatrix& A, std::int64_t m, std::int64_t lambda, Minus1Variant variant) {
  require_positive_c(A, "minus1 identity");
  if (std::gcd(A.a(), std::int64_t{6}) != 1) throw Error(ErrorCode::BadUnit, "gcd(a, 6) != 1 for " + A.to_string());
  if (A.c() % level_constant(m) != 0) {
    throw Error(ErrorCode::BadMatrix, A.to_string() + " is not in Gamma_0(N_" + std::to_string(m) + ")");
  }
  const std::int64_t lp = decompose_upper(A, m, lambda).lambda_prime;
  const auto [a, b, c, d] = A.matrix();
  // (-1)^x := e(x / 2)
  Rational u = rat(-big(a) * big(c) * big(lp) + big(c) * big(d) * big(lambda), big(4));
  u -= rat(big(c) * big(lambda), big(4));
  if (variant == Minus1Variant::Exact) u -= rat(big(3) * big(m) * big(c) * big(c) * big(lp), big(8));
  return ExactScalar::root_of_unity(u);
}

bool minus1_identity_check(const UnimodularMatrix& A, std::int64_t m, std::int64_t lambda, Minus1Variant variant) {
  return minus1_value(A, m, lambda, variant).is_one();
}

Rational lewis_residual(const UnimodularMatrix& A) {
  require_positive_c(A, "lewis residual");
  return 12 * dedekind_sum(-A.d(), A.c()) + rat(A.a() + A.d(), A.c());
}

Rational lewis_shift_residual(const UnimodularMatrix& A, std::int64_t m) {
  require_positive_c(A, "Lewis shift identity");
  const auto [a, b, c, d] = A.matrix();
  return dedekind_sum(d + c, m * c) - dedekind_sum(d, m * c) - rat(big(1) - big(a) * big(a), big(12 * m));
}

}  // namespace mockcong

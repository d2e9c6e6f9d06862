#pragma once

// Gamma_0(N) bookkeeping for the progression-sifted forms M_{m,t}, Omega_{m,t}
// and f_{m,t}: level constants, good progressions, the matrix decompositions
// that move A past (1 lambda; 0 m), the t -> t_A maps, the multiplier systems
// and the exact leading terms at the cusps 1/2 and 1.

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "mockcong/arith.hpp"

namespace mockcong {

/// Integer 2x2 matrix (a b; c d) with no determinant constraint.
struct Matrix2 {
  std::int64_t a = 1, b = 0, c = 0, d = 1;

  std::int64_t det() const { return a * d - b * c; }
  friend Matrix2 operator*(const Matrix2& x, const Matrix2& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
  }
  friend bool operator==(const Matrix2&, const Matrix2&) = default;
};

/// Element of SL2(Z).
class UnimodularMatrix {
 public:
  UnimodularMatrix() = default;
  /// Throws BadMatrix unless ad - bc = 1.
  UnimodularMatrix(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d);

  std::int64_t a() const { return m_.a; }
  std::int64_t b() const { return m_.b; }
  std::int64_t c() const { return m_.c; }
  std::int64_t d() const { return m_.d; }
  const Matrix2& matrix() const { return m_; }

  std::string to_string() const;

  friend UnimodularMatrix operator*(const UnimodularMatrix& x, const UnimodularMatrix& y);
  friend bool operator==(const UnimodularMatrix&, const UnimodularMatrix&) = default;

 private:
  Matrix2 m_;
};

struct Progression {
  std::int64_t m;
  std::int64_t t;

  /// Normalizes t into [0, m); m >= 1.
  static Progression make(std::int64_t m, std::int64_t t);

  friend bool operator==(const Progression&, const Progression&) = default;
  friend auto operator<=>(const Progression&, const Progression&) = default;
};

/// Which sifted form a progression belongs to; Eta carries the B of the eta-quotient.
struct TransformKind {
  enum class Tag { F, Omega, Eta };
  Tag tag = Tag::F;
  std::int64_t b = -1;

  static TransformKind f() { return {Tag::F, -1}; }
  static TransformKind omega() { return {Tag::Omega, 0}; }
  static TransformKind eta(std::int64_t b) { return {Tag::Eta, b}; }
};

/// N_m for M_{m,t}: 2m, 8m, 6m, 24m by gcd(m, 6) = 1, 2, 3, 6.
std::int64_t level_constant(std::int64_t m);
/// N_m for f_{m,t}: m, 8m, 3m, 24m by gcd(m, 6) = 1, 2, 3, 6.
std::int64_t level_constant_eta(std::int64_t m);
/// Q_{m,B}: the part of m kept by the covering argument; 6 must not divide B.
std::int64_t q_divisor(std::int64_t m, std::int64_t b);

/// Good: some prime p | m has ((1-24t)/p) = -1 (F) or ((-3t-2)/p) = -1 (Omega).
bool is_good(const Progression& p, TransformKind kind);
/// Sub-progression (mp, T) that is good; returns p unchanged when already good.
Progression refine_to_good(const Progression& p, TransformKind kind);

struct UpperDecomposition {
  UnimodularMatrix a_lambda;
  std::int64_t lambda_prime;
};

/// (1 lambda; 0 m) A = A_lambda (1 lambda'; 0 m), with a lambda' = b + d lambda (mod m).
UpperDecomposition decompose_upper(const UnimodularMatrix& A, std::int64_t m, std::int64_t lambda);

/// t_A mod m for the kind: a^2 t + (1-a^2)/24 (F), t a^2 + 2(a^2-1)/3 (Omega), t a^2 - B(1-a^2)/24 (Eta).
std::int64_t t_image(std::int64_t a, const Progression& p, TransformKind kind);

/// B used for Q_{m,B} when the kind has no eta-quotient of its own.
std::int64_t covering_b(TransformKind kind);

/// t_A over the admissible units that fix t modulo Q = Q_{m,B}; equals {t + jQ mod m}.
std::set<std::int64_t> orbit(const Progression& p, TransformKind kind);
/// t_A over every admissible unit mod 24m (F, Eta) or 3m (Omega); contains orbit().
std::set<std::int64_t> unit_image(const Progression& p, TransformKind kind);

/// w(A) for A in Gamma_0(2), c > 0.
ExactScalar multiplier_w(const UnimodularMatrix& A);
/// w_1(A), c > 0 even.
ExactScalar multiplier_w1(const UnimodularMatrix& A);
/// w_2(A), c > 0, d even.
ExactScalar multiplier_w2(const UnimodularMatrix& A);
/// exp((pi i / 12)((a+d)/c - 12 s(d,c))), c > 0.
ExactScalar eta_multiplier(const UnimodularMatrix& A);

/// The scalar w(A_lambda) zeta_m^{-lambda(t-1/24)} zeta_m^{lambda'(t_A-1/24)} for one lambda
/// (w_1 and t+2/3 for Omega).
ExactScalar combined_scalar(const UnimodularMatrix& A, const Progression& p, TransformKind kind, std::int64_t lambda);
/// Distinct combined scalars over lambda in [0, m).
std::vector<ExactScalar> constancy_check(const UnimodularMatrix& A, const Progression& p, TransformKind kind);

/// Leading coefficient of (2z+1)^{-1/2} M_{Q,t}((1 0; 2 1) z).
ExactScalar cusp12_leading(std::int64_t q, std::int64_t t);
/// Leading coefficient of (z+1)^{-1/2} Omega_{Q,t}((1 0; 1 1) z).
ExactScalar cusp13_leading(std::int64_t q, std::int64_t t);

struct CuspDecomposition {
  std::int64_t d_lambda;
  std::int64_t lambda_star;
  UnimodularMatrix c_matrix;
};

/// (1 lambda; 0 Q)(1 0; c 1) = C (1 lambda*; 0 Q/d)(d 0; 0 1) with d = gcd(1 + c lambda, Q).
/// For c_entry = 1 the smallest lambda* >= 0 with d - lambda* even whenever Q/d is odd is taken.
CuspDecomposition cusp_decompose(std::int64_t lambda, std::int64_t q, std::int64_t c_entry);
/// Same factorization with a caller-chosen lambda* (must solve the congruence).
CuspDecomposition cusp_decompose(std::int64_t lambda, std::int64_t q, std::int64_t c_entry, std::int64_t lambda_star);

enum class Minus1Variant { Exact, DropThreeEighths };

/// (-1)^{(-a c lambda' + c d lambda)/2} e(-c lambda/4 - 3 m c^2 lambda'/8) as an ExactScalar.
ExactScalar minus1_value(const UnimodularMatrix& A, std::int64_t m, std::int64_t lambda,
                         Minus1Variant variant = Minus1Variant::Exact);
bool minus1_identity_check(const UnimodularMatrix& A, std::int64_t m, std::int64_t lambda,
                           Minus1Variant variant = Minus1Variant::Exact);

/// 12 s(-d, c) + (a + d)/c; an integer for every A with c > 0.
Rational lewis_residual(const UnimodularMatrix& A);
/// s(d + c, mc) - s(d, mc) - (1 - a^2)/(12m); an even integer on Gamma_0(N_m), c > 0, 3 !| a.
Rational lewis_shift_residual(const UnimodularMatrix& A, std::int64_t m);

}  // namespace mockcong

#pragma once

// Checks that T_{0,0}, T_{1,0}, T_{0,1}, T_{1,1} applied to traceless
// matrices satisfy the defining relations of the deformed double current
// algebra of type A with lambda = k, beta = -t/2 - k(r-2)/4.

#include <string>
#include <vector>

#include "ddca/spherical.hpp"

namespace ddca {

enum class GuayKind { Z, K, Q, P };

struct GuayGenerator {
  GuayKind kind;
  Matrix z;
};

struct VerificationReport {
  std::string name;
  std::string params;
  SphericalElement lhs, rhs, difference;
  bool pass = false;

  VerificationReport(std::string name, std::string params, SphericalElement lhs, SphericalElement rhs);
};

/// Z -> T00(z), K -> T10(z), Q -> T01(z), P -> T11(z). NonTraceless if tr z != 0.
SphericalElement psi(const GuayGenerator& g, const ContextPtr& ctx);

/// How the right-hand side is read.
///  Corrected:   delta_bc E_ad + delta_ad E_cb, and lambda/4 times the sum of
///               S([E_ab,E_ij],[E_ji,E_cd]) over all i, j in 1..r (no separate
///               S(E_ab,E_cd) term). Holds for every admissible index set.
///  OffDiagonal: the sum over i != j plus lambda/4 (delta_ad + delta_cb) S(E_ab,E_cd).
///               Agrees with Corrected unless a = c or b = d.
///  Literal:     OffDiagonal with delta_ad E_bc in place of delta_ad E_cb.
enum class GuayReading { Corrected, OffDiagonal, Literal };

SphericalElement main_relation_lhs(int a, int b, int c, int d, const ContextPtr& ctx);
SphericalElement main_relation_rhs(int a, int b, int c, int d, const ContextPtr& ctx,
                                   GuayReading reading = GuayReading::Corrected);

/// [K(E_ab), Q(E_cd)] against the right-hand side (0-based indices, r >= 4).
/// IndexConstraintViolated unless a != b, c != d, (a,b) != (d,c). When
/// [E_ab, E_cd] = 0 the report also requires lhs = -k T00(E_ad) T00(E_cb).
VerificationReport verify_main_relation(int a, int b, int c, int d, const ContextPtr& ctx);

/// [T10(z1), T10(z2)] = T20([z1,z2]), [T00(z1), T00(z2)] = T00([z1,z2]) and
/// the same for T01.
std::vector<VerificationReport> verify_sl_current(const Matrix& z1, const Matrix& z2, const ContextPtr& ctx);

/// With H = E11 - E22:
///  (i)  [T10(H), T01(H)] = e(-k sum_{i!=j} H_i H_j sigma_ij - t sum_i (E11+E22)_i
///                         + k sum_{i!=j} (E11+E22)_i sigma_ij)e
///  (ii) [T10(H), T01(H)] - k C = -(t + rk) T00(E11 + E22), where
///       C = sum_a T00(E_1a)T00(E_a1) + sum_a T00(E_2a)T00(E_a2) over a != 1, resp. a != 2,
///       plus T00(E12)T00(E21) + T00(E21)T00(E12).
std::vector<VerificationReport> verify_k_extraction(const ContextPtr& ctx);

/// For z = sum_i (g)_i e (g may have polynomial entries) the multiple of e
/// in the split g = (tr g / r) Id + traceless, i.e. (tr g / r) n.
/// InvalidArgument if z is not of that form.
ParamPoly identity_part(const SphericalElement& z);

/// identity_part of [T10(H), T01(H)] - k C at each rank, fitted as a
/// polynomial of degree 1 in K; ranks beyond the first two validate the fit.
ParamPoly fit_trace_term(int r, const std::vector<int>& ranks);

}  // namespace ddca

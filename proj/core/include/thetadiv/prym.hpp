#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "thetadiv/divisor.hpp"

namespace thetadiv {

struct NamedClass {
  DivisorClass cls;
  std::string description;
};

/// The fixed table of input divisor classes:
///   N0prime  (A5bar)   108 lambda1 - 14 D
///   Dram     (A5bar)   4(153 lambda1 - 19 D)
///   GP_6_4   (M6bar)   94 l - 12 d0 - 50 d1 - 78 d2 - 88 d3
///   GP_6_5   (M6bar)   8(65 l - 8 d0 - 31 d1 - 45 d2 - 49 d3)
///   Qtilde   (R6tilde) 7 l - d0' - 4 d0'' - 3/2 d0ram
///   Z        (R6tilde) 7 l - d0' - d0'' - 3/2 d0ram
///   c1N1     (R6tilde) l - d0ram/4
///   c1N2     (R6tilde) 13 l - d0' - d0'' - 3 d0ram
///   Utilde   (R6tilde) the forgetful pullback of GP_6_4
const std::map<std::string, NamedClass>& known_classes();
const DivisorClass& known(const std::string& name);

/// Pullback along the forgetful cover R6 -> M6, restricted to lambda and
/// delta0 (the higher boundary classes restrict to zero on the partial
/// compactification): lambda -> lambda, delta0 -> d0' + d0'' + 2 d0ram.
LinearMap forgetful_pullback();
struct ForgetfulResult {
  DivisorClass cls;
  bool dropped_higher_boundary;  // input had nonzero delta_{i>=1} coefficients
};
ForgetfulResult forgetful_pullback_apply(const DivisorClass& m6class);

/// Pullback along the Prym map: lambda1 -> lambda - d0ram/4, D -> d0'.
LinearMap prym_pullback();

struct AnticlassCertificate {
  DivisorClass pullback_n0prime;  // in R6tilde
  DivisorClass residual;          // = 20 delta0'' exactly
  Rational boundary_multiplicity; // 20
  Rational solved_c;              // the d0'' coefficient of Qtilde forced: 4
  std::vector<std::string> trace;
};

/// Certifies P*(N0prime) = 2 Qtilde + Utilde + 20 delta0''. Throws
/// CertificateFailure (with the residual) if the identity breaks; the
/// n0prime override exists for negative controls.
AnticlassCertificate antiramification_certificate(
    const std::optional<DivisorClass>& n0prime_override = std::nullopt);

struct PrymPushforward {
  DivisorClass lambda;           // 486 lambda1 - 57 D
  DivisorClass delta0_prime;     // 27 D
  DivisorClass delta0_dblprime;  // 0
  DivisorClass delta0_ram;       // 1836 lambda1 - 228 D
  LinearMap map;                 // R6tilde -> A5bar assembled from the above
  bool degree_identity;          // pushforward o pullback = 27 * id
  bool ramified_consistency;     // delta0_ram = 3 * Dram
  std::vector<std::string> trace;
};

/// Solves the 2x2 exact system from deg(P) = 27 and pushforward of the
/// ramification class = 6 * N0prime, with inputs P_*(d0') = 27 D and
/// P_*(d0'') = 0. Throws SingularSystem if the system degenerates (it cannot
/// with these inputs) and CertificateFailure if the solution misses the
/// expected values.
PrymPushforward prym_pushforward();

struct SlopeValue {
  Rational value;
  bool effective_shape;  // coefficients look like a lambda1 - b D with a,b > 0
  bool infinite;         // b = 0
};
/// a/b for a class a*lambda1 - b*D on A5bar.
SlopeValue slope(const DivisorClass& a5class);

/// Intersection numbers of the certifying pencil against the R6tilde basis.
struct TestCurve {
  Rational dot_lambda{6};
  Rational dot_delta0_prime{35};
  Rational dot_delta0_dblprime{0};
  Rational dot_delta0_ram{6};
};
Rational testcurve_pairing(const DivisorClass& r6class, const TestCurve& R = {});

struct SlopeCertificate {
  Rational pairing_branch;     // R . (2 Qtilde + Utilde + 20 d0'') = -4
  Rational pairing_hodge;      // R . P*(lambda1) = 9/2
  Rational pairing_qtilde;     // R . Qtilde = -2
  Rational pairing_pi_delta0;  // R . pi*(delta0) = 47
  Rational pairing_utilde;     // R . Utilde = 0
  Rational n0prime_slope;      // 54/7
  Rational moving_eps_min;     // 8/9
  Rational moving_slope_bound; // 70/9
  std::vector<std::string> trace;
};

/// Exact reproduction of the slope computation: the pencil pairs to -4
/// against the pulled-back branch class and to 9/2 against the pulled-back
/// Hodge class, so any effective class of slope <= 54/7 off the branch
/// support pairs negatively (rigidity), and a movable class needs an extra
/// 8/9 lambda1, bounding the moving slope below by 70/9. Throws
/// CertificateFailure when any step disagrees.
SlopeCertificate slope_certificate(const TestCurve& R = {});

struct TautCertificate {
  DivisorClass degeneracy_class;  // in G26taut: -lambda + a + d0ram/2 - 4 c1V
  DivisorClass pushed;            // in R6tilde: (35, -5, -5, -15/2)
  DivisorClass target;            // 5 * Z
  Rational cover_degree;          // 5, from the Castelnuovo count
  std::vector<std::string> trace;
};

/// First Chern class of V2 / Sym^2(V1) minus the square of the line subbundle,
/// pushed down the degree-5 cover of net-parametrized curves; certifies that
/// the result equals 5 [Z] after expanding pi*(delta0). Throws
/// CertificateFailure with the residual on mismatch.
TautCertificate taut_class_certificate();

struct MultiplicityChain {
  long long chi_sym4;           // 70
  long long chi_w14;            // -20 (a genus-11 curve)
  long long chi_c14;            // -40
  long long chi_w4;             // 90
  long long chi_theta_generic;  // 120
  long long nodes;              // 10
  long long jacobian_multiplicity;  // 120 - 90 + 10 = 40
  long long boundary_coefficient;   // 40 / 2 = 20
};
/// Euler-characteristic bookkeeping giving the multiplicity of the singular
/// locus along the genus-5 Jacobians, hence the delta0'' coefficient used by
/// the antiramification certificate.
MultiplicityChain jacobian_multiplicity_chain();

/// Euler characteristic of the d-th symmetric product of a genus-g curve:
/// coefficient of t^d in (1-t)^{2g-2}.
long long chi_symmetric_product(int g, int d);

/// Number of linear series g^r_d on a general genus-g curve when the
/// Brill-Noether number g - (r+1)(g-d+r) vanishes.
Rational castelnuovo_count(int g, int r, int d);

}  // namespace thetadiv

#pragma once

#include "hva/ansatz.hpp"
#include "hva/lattice.hpp"
#include "hva/pauli.hpp"

#include <cstdint>

namespace hva
{

/// Structural constants of a layer family feeding the effective-Hamiltonian
/// truncation bounds. lambda = 2 * k * j_strength by construction.
struct FmParameters
{
	uint32_t h_max;      // maximum number of terms in any layer
	uint32_t j_strength; // maximum per-site term incidence
	uint32_t k;          // locality
	double lambda;       // 2 * k * j_strength
	double v0;           // commutator-counting constant, <= h_max

	static FmParameters make(uint32_t h_max, uint32_t j_strength, uint32_t k,
		double v0);
	/// Derived from the layers of an ansatz via structural validation.
	static FmParameters from_spec(const HvaSpec& spec);
};

struct TheoremConstants
{
	double mu;     // 65/64
	double gamma;  // ln(4^7 * 3^3 / e^2), about 11.00
	double c;
	double beta_c;
	double n_min;
};

struct NormBounds
{
	double h_norm_bound;      // sum of |coefficients|
	double commutator_bound;  // 2 s ||O||-bound max|coeff|
	uint32_t s_count;         // terms within lattice distance k of O's support
};

/// Triangle-inequality norm bounds for a sum of unit-norm Pauli terms, plus
/// the locality-aware commutator bound counting only terms within distance k
/// of the observable's support.
NormBounds norm_bounds(const LocalHamiltonian& h, const LocalHamiltonian& o,
	uint32_t k, const Lattice& lattice);

/// t_c = g / (4 K C); all inputs must be positive.
double speed_limit_tc(double g, double big_k, double big_c);

/// n0 = floor(1 / (32 k J t)); t must be positive.
uint32_t fm_order_n0(double t, uint32_t k, uint32_t j);

/// Two-term truncation error bound
/// 6 H_max 2^{-n0} t + (2 H_max (2kJ)^{n+1} / (n+2)^2) (n+1)! t^{n+2};
/// requires n <= n0(t).
double fm_error_bound(uint32_t n, double t, const FmParameters& params);

/// Omega-bar_n = 2 v0 lambda^n n! / (n+1)^2.
double omega_bound(uint32_t n, double v0, double lambda);

/// H_max * sum_{m=0}^{n} (2kJ)^m m! t^m / (m+1)^2.
double k_norm_bound(uint32_t n, double t, const FmParameters& params);

/// mu = 65/64; gamma = ln(4^7 3^3 / e^2); c = g / (8 mu r ||O|| max{mu l, s});
/// beta(c) = 8 c^3 r (2kJ)^2 / 9; N_min = max{128 gamma c k J, 32 r beta(c) ||O|| / g}.
TheoremConstants theorem_constants(double g, double r, double o_norm,
	uint32_t l, uint32_t s, uint32_t k, uint32_t j);

struct FmVerification
{
	double measured_error; // dense spectral norm of U - e^{-i H^(n) tau}
	double bound;          // fm_error_bound; NaN when n exceeds n0(tau)
};

/// Builds the order-n truncated effective Hamiltonian for the
/// piecewise-constant layer schedule (n = 0: time-weighted layer average;
/// n = 1: adds the closed-form first-order commutator term) and compares the
/// dense circuit unitary against its exponential. Requires a single block
/// (p = r = 1), n <= 1, and n_sites <= 8.
FmVerification fm_approx_verify(const HvaSpec& spec, const ParamSet& params,
	uint32_t n);

} // namespace hva

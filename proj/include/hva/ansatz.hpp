#pragma once

#include "hva/lattice.hpp"
#include "hva/pauli.hpp"
#include "hva/rng.hpp"
#include "hva/statevec.hpp"

#include <Eigen/Dense>

#include <string>
#include <vector>

namespace hva
{

/// Circuit structure: q layer Hamiltonians applied per block, p blocks,
/// and the whole p-block word repeated r times with shared parameters.
struct HvaSpec
{
	Lattice lattice;
	std::vector<LocalHamiltonian> layers;
	uint32_t blocks_p;
	uint32_t repetitions_r = 1;

	[[nodiscard]] uint32_t q() const
	{
		return static_cast<uint32_t>(layers.size());
	}
	[[nodiscard]] uint32_t n_sites() const { return lattice.n_sites(); }

	[[nodiscard]] std::string to_json() const;
};

/// p x q matrix of angles; theta(i, j) drives layer j of block i.
using ParamSet = Eigen::MatrixXd;

std::string params_to_json(const ParamSet& params);
ParamSet params_from_json(const std::string& json_text);

/// Parameter-initialization schemes. Constrained rescales uniform draws so
/// every block sums to exactly T.
struct InitScheme
{
	enum class Variant
	{
		Random,     // i.i.d. uniform [0, 2 pi)
		Constrained, // block sums rescaled to T
		Small,      // i.i.d. uniform [0, eps)
		Constant    // all entries equal
	};

	Variant variant;
	double value = 0.0; // T, eps, or the constant, depending on the variant

	static InitScheme random() { return {Variant::Random, 0.0}; }
	static InitScheme constrained(double t) { return {Variant::Constrained, t}; }
	/// The default constraint budget T = pi / (2N).
	static double default_T(uint32_t n_sites);
	static InitScheme small_eps(double eps) { return {Variant::Small, eps}; }
	static InitScheme constant(double v) { return {Variant::Constant, v}; }

	[[nodiscard]] std::string label() const;
};

Lattice build_lattice_ring(uint32_t n);
Lattice build_lattice_torus(uint32_t lx, uint32_t ly);

/// Symmetric superposition of the two alternating (checkerboard) spin
/// patterns; exactly two nonzero amplitudes of 1/sqrt(2) each.
StateVector neel_state(const Lattice& lattice);
StateVector neel_state_ring(uint32_t n_sites);

/// XYZ ansatz: q = 3 layers (sum XX, sum YY, sum ZZ over lattice edges),
/// applied in the order XX then YY then ZZ within each block.
HvaSpec xyz_hva(const Lattice& lattice, uint32_t p, uint32_t r = 1);

/// Ising-with-fields ansatz: layers sum ZZ, sum X, sum Z.
HvaSpec ising_fields_hva(const Lattice& lattice, uint32_t p);

/// Heisenberg cost Hamiltonian sum over edges of XX + YY + ZZ.
LocalHamiltonian heisenberg_hamiltonian(const Lattice& lattice,
	double jx = 1.0, double jy = 1.0, double jz = 1.0);

/// Block i applies layer 1 first and layer q last; the full p-block word is
/// applied r times with the same parameters.
StateVector apply_circuit(const HvaSpec& spec, const ParamSet& params,
	const StateVector& psi0);
void apply_circuit_inplace(const HvaSpec& spec, const ParamSet& params,
	StateVector& state);
void apply_circuit_adjoint_inplace(const HvaSpec& spec, const ParamSet& params,
	StateVector& state);

ParamSet sample_params(const InitScheme& scheme, uint32_t p, uint32_t q,
	RngStream rng);

/// Heaviside-masked cost for the constraint-imposed ansatz: given the free
/// p x (q-1) parameters, returns raw_cost when every free entry and every
/// derived last-layer entry T - sum(free) is >= 0, and 0 otherwise.
/// The Heaviside convention is 1(0) = 1.
double constrained_cost(double raw_cost, const Eigen::MatrixXd& free_params,
	double t_budget);

/// Fill in the derived last column: theta(i, q-1) = T - sum of free entries.
ParamSet derive_constrained_params(const Eigen::MatrixXd& free_params,
	double t_budget);

} // namespace hva

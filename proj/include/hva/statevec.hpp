#pragma once

#include "hva/pauli.hpp"
#include "hva/rng.hpp"

#include <complex>
#include <cstdint>
#include <vector>

namespace hva
{

/// 2^n complex amplitudes with unit L2 norm. Site 0 is the least
/// significant bit of the basis index; bit 0 means spin up (Z = +1).
struct StateVector
{
	uint32_t n_sites;
	std::vector<std::complex<double>> amps;

	explicit StateVector(uint32_t n)
		: n_sites{n}, amps(uint64_t{1} << n, {0.0, 0.0})
	{
		amps[0] = 1.0;
	}

	[[nodiscard]] uint64_t dim() const { return uint64_t{1} << n_sites; }
	[[nodiscard]] double norm() const;

	static StateVector basis_state(uint32_t n, uint64_t index);
	/// |+>^N, the uniform superposition.
	static StateVector plus_state(uint32_t n);
};

/// Uniform single-site measurement axis.
enum class MeasurementBasis
{
	X,
	Y,
	Z
};

// Kernels. The default entry points parallelize the amplitude loop with
// OpenMP when the state is large and the caller is not already inside a
// parallel region; `serial` holds the plain reference implementations the
// tests and the benchmark compare against. Both orders of summation are
// identical (pairwise disjoint writes), so results match bitwise.

namespace serial
{
void apply_pauli_inplace(StateVector& state, const PauliString& p);
void apply_pauli_rotation_inplace(StateVector& state, const PauliString& p,
	double angle);
double expectation(const StateVector& state, const PauliString& p);
} // namespace serial

void apply_pauli_inplace(StateVector& state, const PauliString& p);

/// In-place e^{-i angle P} using cos(angle) psi - i sin(angle) P psi.
void apply_pauli_rotation_inplace(StateVector& state, const PauliString& p,
	double angle);
StateVector apply_pauli_rotation(const StateVector& state,
	const PauliString& p, double angle);

/// In-place e^{-i angle H} for a Hamiltonian with pairwise-commuting terms,
/// applied as the product of per-term rotations (exact for commuting terms).
/// Throws PreconditionError if any pair of terms fails to commute.
void apply_layer_inplace(StateVector& state, const LocalHamiltonian& h,
	double angle);
StateVector apply_layer(const StateVector& state, const LocalHamiltonian& h,
	double angle);

/// dst = H src (dst is overwritten; must be distinct storage).
void apply_hamiltonian(StateVector& dst, const StateVector& src,
	const LocalHamiltonian& h);

double expectation(const StateVector& state, const PauliString& p);
double expectation(const StateVector& state, const LocalHamiltonian& h);
std::complex<double> inner_product(const StateVector& a, const StateVector& b);

/// Rotate all sites so the given axis becomes the computational (Z) axis.
/// X uses the Hadamard per site; Y applies S-dagger then Hadamard per site.
StateVector rotate_to_basis(const StateVector& state, MeasurementBasis basis);

/// n_shot independent draws from the basis-rotated Born distribution.
/// Draw s is a pure function of (rng substream, s).
std::vector<uint64_t> sample_bitstrings(const StateVector& state,
	MeasurementBasis basis, uint32_t n_shot, const RngStream& rng);

/// Mean over samples of (1-2x_a)(1-2x_b); the same-axis two-point estimator.
double estimate_pauli_pair(const std::vector<uint64_t>& samples, uint32_t a,
	uint32_t b);

} // namespace hva

#pragma once

#include "hva/pauli.hpp"
#include "hva/rng.hpp"
#include "hva/statevec.hpp"

#include <Eigen/Dense>

#include <cstdint>

namespace hva
{

/// Dense eigendecomposition with a gap-distinctness diagnostic.
struct EigenSystem
{
	Eigen::VectorXd eigenvalues;  // ascending
	Eigen::MatrixXcd eigenvectors; // columns; unitary
	/// Smallest pairwise difference among all energy gaps E_i - E_j (i > j);
	/// zero signals degenerate gaps (degenerate levels included).
	double min_gap_distinctness;
};

/// Dense diagonalization; refuses n_sites > dense_site_cap.
EigenSystem eigendecompose(const LocalHamiltonian& h);

struct RandomHamiltonianSpec
{
	uint32_t n_sites;
	uint32_t k;
	bool time_reversal = false;
	uint64_t seed = 0;
};

/// Translation-invariant random Hamiltonian on a ring: every length-k Pauli
/// window (all-identity excluded, one representative per cyclic-translation
/// class) gets an independent N(0,1) coefficient and is summed over all N
/// translations. The time-reversal variant drops classes with an odd number
/// of Y letters, leaving a real matrix in the computational basis.
LocalHamiltonian random_k_local_hamiltonian(const RandomHamiltonianSpec& spec);

struct FhBound
{
	double value;
	bool degenerate_warning; // min_gap_distinctness below 1e-10
};

/// Closed-form lower bound on the long-time average of the squared gradient
/// component -<[G, O(t)]>^2, evaluated from the eigendecomposition of the
/// evolving Hamiltonian. O(D^2) after rotating G, O into the eigenbasis.
FhBound f_h_lower_bound(const EigenSystem& eig, const StateVector& psi0,
	const LocalHamiltonian& g, const LocalHamiltonian& o);

/// <psi|[G, O~]|psi>^2 where O~ is the diagonal ensemble of O; real and
/// non-positive (the expectation itself is purely imaginary).
double diag_commutator_sq(const EigenSystem& eig, const StateVector& psi0,
	const LocalHamiltonian& g, const LocalHamiltonian& o);

/// O~ = sum_j O_jj |E_j><E_j| as a dense operator in the computational basis.
Eigen::MatrixXcd diagonal_ensemble(const EigenSystem& eig,
	const LocalHamiltonian& o);

/// Numeric oracle: mean over a uniform time grid in [0, t_max] of
/// -<psi0|[G, O(t)]|psi0>^2 with O(t) = e^{iHt} O e^{-iHt}.
double time_average_grad_sq(const EigenSystem& eig, const StateVector& psi0,
	const LocalHamiltonian& g, const LocalHamiltonian& o, double t_max,
	uint32_t n_times);

/// Tr[rho0 (U O_i U^dag O_j)^2] for the maximally mixed rho0 = I/2^N.
double otoc(const Eigen::MatrixXcd& u, const LocalHamiltonian& o_i,
	const LocalHamiltonian& o_j);
/// Same with rho0 = |psi0><psi0|.
double otoc(const Eigen::MatrixXcd& u, const LocalHamiltonian& o_i,
	const LocalHamiltonian& o_j, const StateVector& psi0);

/// Haar-distributed unitary: QR of a complex Ginibre matrix with the R
/// diagonal phases folded into Q.
Eigen::MatrixXcd haar_unitary(uint32_t dim, RngStream rng);

} // namespace hva

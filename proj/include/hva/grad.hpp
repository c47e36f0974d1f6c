#pragma once

#include "hva/ansatz.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <functional>
#include <vector>

namespace hva
{

/// p x q matrix of cost derivatives, index-aligned with ParamSet.
using GradientVector = Eigen::MatrixXd;

/// Exact gradient of <psi0| U(theta)^dag O U(theta) |psi0> by the
/// reverse (adjoint) sweep: one forward pass plus one backward pass,
/// O(total layers) state operations. Shared parameters (r > 1) accumulate
/// the per-occurrence derivatives.
GradientVector exact_gradient(const HvaSpec& spec, const ParamSet& params,
	const LocalHamiltonian& observable, const StateVector& psi0);

/// The circuit of Eq-style per-edge factorization: every (block, layer,
/// term) gets its own gate e^{-i alpha P} with a single Pauli generator.
struct ExpandedCircuit
{
	struct Gate
	{
		uint32_t block;
		uint32_t layer;
		PauliString generator;
		double coeff; // layer-term coefficient folded into the shared angle
	};

	uint32_t n_sites;
	std::vector<Gate> gates;
};

/// Requires repetitions_r == 1.
ExpandedCircuit expand_circuit(const HvaSpec& spec);

/// One independent angle per gate, initialized to coeff * theta(block,layer).
std::vector<double> expand_parameters(const ExpandedCircuit& circ,
	const ParamSet& params);

/// Collapse per-gate derivatives back onto the shared theta matrix.
GradientVector collapse_gate_gradient(const ExpandedCircuit& circ,
	const std::vector<double>& gate_grads, uint32_t p, uint32_t q);

StateVector apply_expanded(const ExpandedCircuit& circ,
	const std::vector<double>& values, const StateVector& psi0);

/// Two-term parameter-shift derivative for a gate whose generator is a
/// single Pauli string (eigenvalues +-1): f(alpha + pi/4) - f(alpha - pi/4).
/// Exact when the evaluator is exact, unbiased when it is shot-based.
double shift_rule_gradient(const ExpandedCircuit& circ,
	std::vector<double> values, size_t gate_index,
	const std::function<double(const std::vector<double>&)>& evaluator);

enum class GradientMode
{
	Shots,
	Exact // evaluate shifted costs exactly; reproduces the adjoint gradient
};

struct ShotGradient
{
	GradientVector grad;
	uint64_t state_preps; // one per prepared-and-measured shot
};

/// Shift-rule gradient on the expanded circuit with shot-based cost
/// estimates: each shifted cost uses n_shot samples per basis (X, Y, Z),
/// one sample set per basis reused for all same-basis cost terms.
/// The cost Hamiltonian must decompose into same-axis two-site groups.
ShotGradient shot_gradient(const HvaSpec& spec, const ParamSet& params,
	const LocalHamiltonian& cost_hamiltonian, const StateVector& psi0,
	uint32_t n_shot, const RngStream& rng,
	GradientMode mode = GradientMode::Shots);

/// Second-moment statistics of exact gradients over sampled parameters.
struct GradScanResult
{
	uint32_t n_sites;
	uint32_t depth_p;
	InitScheme scheme;
	double mean_sq_grad; // mean of squared components over samples/components
	double rel_std;      // sigma(X)/E[X] for the per-sample component mean X
	uint32_t n_samples;
};

/// Samples parameters from the scheme n_samples times and accumulates the
/// squared exact gradient. Samples are independent and distributed across
/// OpenMP workers; accumulation order is fixed by sample index.
GradScanResult grad_variance_scan(const HvaSpec& spec,
	const InitScheme& scheme, const LocalHamiltonian& observable,
	const StateVector& psi0, uint32_t n_samples, const RngStream& rng);

} // namespace hva

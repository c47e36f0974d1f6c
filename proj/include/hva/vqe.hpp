#pragma once

#include "hva/ansatz.hpp"
#include "hva/grad.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <optional>
#include <vector>

namespace hva
{

/// Bias-corrected Adam with elementwise moments shaped like the parameters.
struct AdamState
{
	Eigen::MatrixXd first_moment;
	Eigen::MatrixXd second_moment;
	uint64_t step_count = 0;
	double alpha = 0.025;
	double beta1 = 0.9;
	double beta2 = 0.999;
	double eps_hat = 1e-8;

	static AdamState init(Eigen::Index rows, Eigen::Index cols,
		double alpha = 0.025);
};

/// One in-place Adam update; increments step_count and applies the
/// bias-corrected step params -= alpha * m_hat / (sqrt(v_hat) + eps_hat).
void adam_step(AdamState& state, const Eigen::MatrixXd& grad,
	Eigen::MatrixXd& params);

struct TrainingRecord
{
	uint32_t iteration;
	double energy; // exact <H> at the current parameters
	std::optional<ParamSet> params_snapshot;
	uint64_t state_prep_count; // cumulative; zero in exact mode
};

struct VqeOptions
{
	uint32_t iterations = 1000;
	double alpha = 0.025;
	GradientMode mode = GradientMode::Exact;
	uint32_t n_shot = 0;          // required in shots mode
	bool snapshot_final = false;  // attach params to the last record
};

/// Adam-driven minimization of <psi|H|psi>. The reported energy per record
/// is always the exact expectation, even when the optimizer consumes
/// shot-estimated gradients. Record 0 is the initial point; records
/// 1..iterations follow each update. Deterministic for a fixed rng stream.
std::vector<TrainingRecord> run_vqe(const HvaSpec& spec,
	const InitScheme& scheme, const LocalHamiltonian& cost_hamiltonian,
	const VqeOptions& opts, const RngStream& rng);

/// Constraint-imposed ansatz: only the first q-1 columns per block are free;
/// column q-1 is derived as T - sum of the free entries. Gradients of the
/// full circuit are folded through the substitution
/// (g_free = g(:, j) - g(:, q-1)), and after each Adam step every block is
/// projected back onto the simplex {theta >= 0, sum = T} so all iterates
/// stay feasible. Requires q >= 2.
std::vector<TrainingRecord> run_vqe_constrained_ansatz(const HvaSpec& spec,
	double t_budget, const LocalHamiltonian& cost_hamiltonian,
	const VqeOptions& opts, const RngStream& rng);

/// Euclidean projection of v onto {x >= 0, sum(x) = total}.
Eigen::VectorXd project_to_simplex(const Eigen::VectorXd& v, double total);

} // namespace hva

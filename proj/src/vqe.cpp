#include "hva/vqe.hpp"

#include "hva/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace hva
{

AdamState AdamState::init(Eigen::Index rows, Eigen::Index cols, double alpha)
{
	AdamState s;
	s.first_moment = Eigen::MatrixXd::Zero(rows, cols);
	s.second_moment = Eigen::MatrixXd::Zero(rows, cols);
	s.alpha = alpha;
	return s;
}

void adam_step(AdamState& state, const Eigen::MatrixXd& grad,
	Eigen::MatrixXd& params)
{
	if(grad.rows() != params.rows() || grad.cols() != params.cols()
		|| state.first_moment.rows() != params.rows()
		|| state.first_moment.cols() != params.cols())
	{
		throw InputError("adam_step: shape mismatch");
	}
	state.step_count += 1;
	state.first_moment = state.beta1 * state.first_moment
		+ (1.0 - state.beta1) * grad;
	state.second_moment = state.beta2 * state.second_moment.array().matrix()
		+ (1.0 - state.beta2) * grad.array().square().matrix();
	const double bc1 =
		1.0 - std::pow(state.beta1, static_cast<double>(state.step_count));
	const double bc2 =
		1.0 - std::pow(state.beta2, static_cast<double>(state.step_count));
	const Eigen::ArrayXXd m_hat = state.first_moment.array() / bc1;
	const Eigen::ArrayXXd v_hat = state.second_moment.array() / bc2;
	params.array() -= state.alpha * m_hat / (v_hat.sqrt() + state.eps_hat);
}

namespace
{

TrainingRecord make_record(uint32_t iteration, double energy, uint64_t preps)
{
	return TrainingRecord{iteration, energy, std::nullopt, preps};
}

} // namespace

std::vector<TrainingRecord> run_vqe(const HvaSpec& spec,
	const InitScheme& scheme, const LocalHamiltonian& cost_hamiltonian,
	const VqeOptions& opts, const RngStream& rng)
{
	if(opts.iterations < 1)
	{
		throw InputError("run_vqe: iterations must be >= 1");
	}
	if(opts.mode == GradientMode::Shots && opts.n_shot < 1)
	{
		throw InputError("run_vqe: shots mode requires n_shot >= 1");
	}

	const StateVector psi0 = neel_state(spec.lattice);
	ParamSet params = sample_params(scheme, spec.blocks_p, spec.q(),
		rng.substream(0));
	AdamState adam = AdamState::init(params.rows(), params.cols(), opts.alpha);

	auto exact_energy = [&](const ParamSet& theta) {
		return expectation(apply_circuit(spec, theta, psi0), cost_hamiltonian);
	};

	std::vector<TrainingRecord> records;
	records.reserve(opts.iterations + 1);
	uint64_t preps = 0;
	records.push_back(make_record(0, exact_energy(params), preps));

	for(uint32_t it = 1; it <= opts.iterations; ++it)
	{
		GradientVector grad;
		if(opts.mode == GradientMode::Exact)
		{
			grad = exact_gradient(spec, params, cost_hamiltonian, psi0);
		}
		else
		{
			const ShotGradient sg = shot_gradient(spec, params,
				cost_hamiltonian, psi0, opts.n_shot, rng.substream(it));
			grad = sg.grad;
			preps += sg.state_preps;
		}
		adam_step(adam, grad, params);
		records.push_back(make_record(it, exact_energy(params), preps));
	}
	if(opts.snapshot_final)
	{
		records.back().params_snapshot = params;
	}
	return records;
}

Eigen::VectorXd project_to_simplex(const Eigen::VectorXd& v, double total)
{
	if(total <= 0.0)
	{
		throw InputError("project_to_simplex: total must be > 0");
	}
	// Sort descending, find the largest prefix with positive thresholded
	// entries, then clip (Held/Wolfe/Crowder algorithm).
	std::vector<double> u(v.data(), v.data() + v.size());
	std::sort(u.begin(), u.end(), std::greater<>());
	double cumsum = 0.0;
	double tau = 0.0;
	for(size_t i = 0; i < u.size(); ++i)
	{
		cumsum += u[i];
		const double t = (cumsum - total) / static_cast<double>(i + 1);
		if(u[i] - t > 0.0)
		{
			tau = t;
		}
	}
	Eigen::VectorXd out(v.size());
	for(Eigen::Index i = 0; i < v.size(); ++i)
	{
		out[i] = std::max(v[i] - tau, 0.0);
	}
	return out;
}

std::vector<TrainingRecord> run_vqe_constrained_ansatz(const HvaSpec& spec,
	double t_budget, const LocalHamiltonian& cost_hamiltonian,
	const VqeOptions& opts, const RngStream& rng)
{
	const uint32_t q = spec.q();
	if(q < 2)
	{
		throw InputError("run_vqe_constrained_ansatz: q must be >= 2");
	}
	if(t_budget <= 0.0)
	{
		throw InputError("run_vqe_constrained_ansatz: T must be > 0");
	}
	if(opts.iterations < 1)
	{
		throw InputError("run_vqe_constrained_ansatz: iterations must be >= 1");
	}

	const StateVector psi0 = neel_state(spec.lattice);
	const ParamSet initial = sample_params(InitScheme::constrained(t_budget),
		spec.blocks_p, q, rng.substream(0));
	Eigen::MatrixXd free_params = initial.leftCols(q - 1);
	for(Eigen::Index i = 0; i < free_params.rows(); ++i)
	{
		if(free_params.row(i).minCoeff() < 0.0
			|| t_budget - free_params.row(i).sum() < 0.0)
		{
			throw InputError(
				"run_vqe_constrained_ansatz: infeasible initial point");
		}
	}

	AdamState adam = AdamState::init(free_params.rows(), free_params.cols(),
		opts.alpha);

	auto exact_energy = [&](const Eigen::MatrixXd& free) {
		const ParamSet full = derive_constrained_params(free, t_budget);
		return expectation(apply_circuit(spec, full, psi0), cost_hamiltonian);
	};

	std::vector<TrainingRecord> records;
	records.reserve(opts.iterations + 1);
	uint64_t preps = 0;
	records.push_back(make_record(0, exact_energy(free_params), preps));

	for(uint32_t it = 1; it <= opts.iterations; ++it)
	{
		const ParamSet full = derive_constrained_params(free_params, t_budget);
		GradientVector grad_full;
		if(opts.mode == GradientMode::Exact)
		{
			grad_full = exact_gradient(spec, full, cost_hamiltonian, psi0);
		}
		else
		{
			const ShotGradient sg = shot_gradient(spec, full, cost_hamiltonian,
				psi0, opts.n_shot, rng.substream(it));
			grad_full = sg.grad;
			preps += sg.state_preps;
		}
		// Substitution chain rule: d/dtheta_{i,j} picks up -d/dtheta_{i,q-1}.
		Eigen::MatrixXd grad_free = grad_full.leftCols(q - 1);
		grad_free.colwise() -= grad_full.col(q - 1);

		adam_step(adam, grad_free, free_params);

		// Keep every iterate on the simplex {theta >= 0, block sum = T}.
		for(Eigen::Index i = 0; i < free_params.rows(); ++i)
		{
			Eigen::VectorXd block(q);
			block.head(q - 1) = free_params.row(i).transpose();
			block[q - 1] = t_budget - free_params.row(i).sum();
			block = project_to_simplex(block, t_budget);
			free_params.row(i) = block.head(q - 1).transpose();
		}

		records.push_back(make_record(it, exact_energy(free_params), preps));
	}
	if(opts.snapshot_final)
	{
		records.back().params_snapshot =
			derive_constrained_params(free_params, t_budget);
	}
	return records;
}

} // namespace hva

#include "hva/grad.hpp"

#include "hva/errors.hpp"

#include <omp.h>

#include <cmath>
#include <numbers>

namespace hva
{

GradientVector exact_gradient(const HvaSpec& spec, const ParamSet& params,
	const LocalHamiltonian& observable, const StateVector& psi0)
{
	const uint32_t p = spec.blocks_p;
	const uint32_t q = spec.q();
	if(params.rows() != static_cast<Eigen::Index>(p)
		|| params.cols() != static_cast<Eigen::Index>(q))
	{
		throw InputError("exact_gradient: parameter shape mismatch");
	}
	if(psi0.n_sites != spec.n_sites()
		|| observable.n_sites != spec.n_sites())
	{
		throw InputError("exact_gradient: size mismatch");
	}

	// Forward state a = U psi0 and boundary vector b = O a. Sweeping gates
	// from last to first, each step reads dC/dtheta_g = 2 Im <b|H_g|a> and
	// then removes gate g from both vectors.
	StateVector a = apply_circuit(spec, params, psi0);
	StateVector b{spec.n_sites()};
	apply_hamiltonian(b, a, observable);
	StateVector scratch{spec.n_sites()};

	GradientVector grad = GradientVector::Zero(p, q);
	for(uint32_t rep = spec.repetitions_r; rep-- > 0;)
	{
		for(uint32_t i = p; i-- > 0;)
		{
			for(uint32_t j = q; j-- > 0;)
			{
				const auto& layer = spec.layers[j];
				apply_hamiltonian(scratch, a, layer);
				grad(i, j) += 2.0 * inner_product(b, scratch).imag();

				const double angle = params(static_cast<Eigen::Index>(i),
					static_cast<Eigen::Index>(j));
				for(const auto& t : layer.terms)
				{
					apply_pauli_rotation_inplace(a, t.string, -t.coeff * angle);
					apply_pauli_rotation_inplace(b, t.string, -t.coeff * angle);
				}
			}
		}
	}
	return grad;
}

ExpandedCircuit expand_circuit(const HvaSpec& spec)
{
	if(spec.repetitions_r != 1)
	{
		throw PreconditionError("expand_circuit: requires r == 1");
	}
	ExpandedCircuit circ{spec.n_sites(), {}};
	for(uint32_t i = 0; i < spec.blocks_p; ++i)
	{
		for(uint32_t j = 0; j < spec.q(); ++j)
		{
			for(const auto& t : spec.layers[j].terms)
			{
				circ.gates.push_back({i, j, t.string, t.coeff});
			}
		}
	}
	return circ;
}

std::vector<double> expand_parameters(const ExpandedCircuit& circ,
	const ParamSet& params)
{
	std::vector<double> values;
	values.reserve(circ.gates.size());
	for(const auto& g : circ.gates)
	{
		values.push_back(g.coeff
			* params(static_cast<Eigen::Index>(g.block),
				static_cast<Eigen::Index>(g.layer)));
	}
	return values;
}

GradientVector collapse_gate_gradient(const ExpandedCircuit& circ,
	const std::vector<double>& gate_grads, uint32_t p, uint32_t q)
{
	if(gate_grads.size() != circ.gates.size())
	{
		throw InputError("collapse_gate_gradient: size mismatch");
	}
	GradientVector grad = GradientVector::Zero(p, q);
	for(size_t g = 0; g < circ.gates.size(); ++g)
	{
		grad(static_cast<Eigen::Index>(circ.gates[g].block),
			static_cast<Eigen::Index>(circ.gates[g].layer)) +=
			circ.gates[g].coeff * gate_grads[g];
	}
	return grad;
}

StateVector apply_expanded(const ExpandedCircuit& circ,
	const std::vector<double>& values, const StateVector& psi0)
{
	if(values.size() != circ.gates.size())
	{
		throw InputError("apply_expanded: value count mismatch");
	}
	StateVector state = psi0;
	for(size_t g = 0; g < circ.gates.size(); ++g)
	{
		apply_pauli_rotation_inplace(state, circ.gates[g].generator, values[g]);
	}
	return state;
}

double shift_rule_gradient(const ExpandedCircuit& circ,
	std::vector<double> values, size_t gate_index,
	const std::function<double(const std::vector<double>&)>& evaluator)
{
	if(gate_index >= circ.gates.size())
	{
		throw InputError("shift_rule_gradient: gate index out of range");
	}
	if(circ.gates[gate_index].generator.support() == 0)
	{
		throw PreconditionError(
			"shift_rule_gradient: generator must be a non-identity Pauli string");
	}
	constexpr double shift = std::numbers::pi / 4.0;
	const double base = values[gate_index];
	values[gate_index] = base + shift;
	const double plus = evaluator(values);
	values[gate_index] = base - shift;
	const double minus = evaluator(values);
	return plus - minus;
}

namespace
{

struct BasisGroups
{
	// (a, b, coeff) per axis; axis order X, Y, Z.
	std::vector<std::tuple<uint32_t, uint32_t, double>> groups[3];
};

BasisGroups group_cost_terms(const LocalHamiltonian& h)
{
	BasisGroups out;
	for(const auto& t : h.terms)
	{
		const auto& s = t.string;
		if(s.weight() != 2)
		{
			throw InputError(
				"shot_gradient: cost terms must be two-site Pauli pairs");
		}
		uint32_t sites[2];
		uint32_t found = 0;
		for(uint32_t i = 0; i < s.n_sites && found < 2; ++i)
		{
			if((s.support() >> i) & 1)
			{
				sites[found++] = i;
			}
		}
		int axis;
		if(s.z_mask == 0)
		{
			axis = 0; // XX
		}
		else if(s.x_mask == 0)
		{
			axis = 2; // ZZ
		}
		else if(s.x_mask == s.z_mask)
		{
			axis = 1; // YY
		}
		else
		{
			throw InputError(
				"shot_gradient: cost terms must share one axis per pair");
		}
		out.groups[axis].emplace_back(sites[0], sites[1], t.coeff);
	}
	return out;
}

constexpr MeasurementBasis bases[3] = {MeasurementBasis::X,
	MeasurementBasis::Y, MeasurementBasis::Z};

} // namespace

ShotGradient shot_gradient(const HvaSpec& spec, const ParamSet& params,
	const LocalHamiltonian& cost_hamiltonian, const StateVector& psi0,
	uint32_t n_shot, const RngStream& rng, GradientMode mode)
{
	if(mode == GradientMode::Shots && n_shot < 1)
	{
		throw InputError("shot_gradient: n_shot must be >= 1 in shots mode");
	}
	const BasisGroups groups = group_cost_terms(cost_hamiltonian);
	const ExpandedCircuit circ = expand_circuit(spec);
	std::vector<double> values = expand_parameters(circ, params);

	uint64_t preps = 0;
	auto estimate_cost = [&](const StateVector& state,
			const RngStream& eval_rng) -> double {
		if(mode == GradientMode::Exact)
		{
			return expectation(state, cost_hamiltonian);
		}
		double total = 0.0;
		for(int axis = 0; axis < 3; ++axis)
		{
			const auto samples = sample_bitstrings(state, bases[axis], n_shot,
				eval_rng.substream(static_cast<uint64_t>(axis)));
			preps += n_shot;
			for(const auto& [a, b, coeff] : groups.groups[axis])
			{
				total += coeff * estimate_pauli_pair(samples, a, b);
			}
		}
		return total;
	};

	constexpr double shift = std::numbers::pi / 4.0;
	std::vector<double> gate_grads(circ.gates.size(), 0.0);
	for(size_t g = 0; g < circ.gates.size(); ++g)
	{
		double shifted[2];
		for(int side = 0; side < 2; ++side)
		{
			const double delta = side == 0 ? shift : -shift;
			const double base = values[g];
			values[g] = base + delta;
			const StateVector state = apply_expanded(circ, values, psi0);
			values[g] = base;
			shifted[side] = estimate_cost(state,
				rng.substream(2 * g + static_cast<uint64_t>(side)));
		}
		gate_grads[g] = shifted[0] - shifted[1];
	}

	return ShotGradient{
		collapse_gate_gradient(circ, gate_grads, spec.blocks_p, spec.q()),
		preps};
}

GradScanResult grad_variance_scan(const HvaSpec& spec,
	const InitScheme& scheme, const LocalHamiltonian& observable,
	const StateVector& psi0, uint32_t n_samples, const RngStream& rng)
{
	if(n_samples < 2)
	{
		throw InputError("grad_variance_scan: n_samples must be >= 2");
	}
	const uint32_t p = spec.blocks_p;
	const uint32_t q = spec.q();

	// X_s = per-sample mean of squared gradient components.
	std::vector<double> x(n_samples, 0.0);
#pragma omp parallel for schedule(dynamic)
	for(int64_t s = 0; s < static_cast<int64_t>(n_samples); ++s)
	{
		const ParamSet params = sample_params(scheme, p, q,
			rng.substream(static_cast<uint64_t>(s)));
		const GradientVector grad = exact_gradient(spec, params, observable,
			psi0);
		x[static_cast<size_t>(s)] =
			grad.array().square().sum() / static_cast<double>(p * q);
	}

	double mean = 0.0;
	for(double v : x)
	{
		mean += v;
	}
	mean /= static_cast<double>(n_samples);
	double var = 0.0;
	for(double v : x)
	{
		var += (v - mean) * (v - mean);
	}
	var /= static_cast<double>(n_samples);
	const double rel_std = mean > 0.0 ? std::sqrt(var) / mean : 0.0;

	return GradScanResult{spec.n_sites(), p, scheme, mean, rel_std, n_samples};
}

} // namespace hva

#include "hva/ansatz.hpp"

#include "hva/errors.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <numbers>

namespace hva
{

namespace
{

// Checkerboard parity: pattern A puts spin up (bit 0) on even-parity sites.
uint32_t site_parity(const Lattice& lat, uint32_t site)
{
	if(lat.kind() == Lattice::Kind::Ring)
	{
		return site % 2;
	}
	const uint32_t x = site % lat.lx();
	const uint32_t y = site / lat.lx();
	return (x + y) % 2;
}

HvaSpec make_edge_hva(const Lattice& lattice, uint32_t p, uint32_t r,
	const std::vector<char>& axes)
{
	HvaSpec spec{lattice, {}, p, r};
	const uint32_t n = lattice.n_sites();
	for(char axis : axes)
	{
		LocalHamiltonian layer{n};
		for(const auto& [a, b] : lattice.edges())
		{
			layer.add_term(1.0, PauliString::pair(n, a, b, axis));
		}
		layer.locality_k = 2;
		spec.layers.push_back(std::move(layer));
	}
	return spec;
}

} // namespace

std::string HvaSpec::to_json() const
{
	nlohmann::json j;
	if(lattice.kind() == Lattice::Kind::Ring)
	{
		j["lattice"] = {{"kind", "ring"}, {"n", lattice.n_sites()}};
	}
	else
	{
		j["lattice"] = {{"kind", "torus"}, {"lx", lattice.lx()},
			{"ly", lattice.ly()}};
	}
	j["p"] = blocks_p;
	j["q"] = q();
	j["r"] = repetitions_r;
	auto layers_json = nlohmann::json::array();
	for(const auto& layer : layers)
	{
		layers_json.push_back(nlohmann::json::parse(layer.to_json()));
	}
	j["layers"] = std::move(layers_json);
	return j.dump();
}

std::string params_to_json(const ParamSet& params)
{
	nlohmann::json j;
	j["p"] = params.rows();
	j["q"] = params.cols();
	auto theta = nlohmann::json::array();
	for(Eigen::Index i = 0; i < params.rows(); ++i)
	{
		for(Eigen::Index k = 0; k < params.cols(); ++k)
		{
			theta.push_back(params(i, k));
		}
	}
	j["theta"] = std::move(theta);
	return j.dump();
}

ParamSet params_from_json(const std::string& json_text)
{
	const auto j = nlohmann::json::parse(json_text);
	const auto p = j.at("p").get<Eigen::Index>();
	const auto q = j.at("q").get<Eigen::Index>();
	const auto theta = j.at("theta");
	if(static_cast<Eigen::Index>(theta.size()) != p * q)
	{
		throw InputError("params_from_json: theta length mismatch");
	}
	ParamSet params(p, q);
	Eigen::Index idx = 0;
	for(Eigen::Index i = 0; i < p; ++i)
	{
		for(Eigen::Index k = 0; k < q; ++k)
		{
			params(i, k) = theta[static_cast<size_t>(idx++)].get<double>();
		}
	}
	return params;
}

double InitScheme::default_T(uint32_t n_sites)
{
	return std::numbers::pi / (2.0 * n_sites);
}

std::string InitScheme::label() const
{
	switch(variant)
	{
	case Variant::Random:
		return "random";
	case Variant::Constrained:
		return "constrained";
	case Variant::Small:
		return "small";
	case Variant::Constant:
		return "constant";
	}
	return "?";
}

Lattice build_lattice_ring(uint32_t n) { return Lattice::ring(n); }

Lattice build_lattice_torus(uint32_t lx, uint32_t ly)
{
	return Lattice::torus(lx, ly);
}

namespace
{
StateVector neel_from_pattern(uint32_t n, uint64_t pattern_a)
{
	StateVector state{n};
	state.amps[0] = 0.0;
	const uint64_t pattern_b = ~pattern_a & ((uint64_t{1} << n) - 1);
	const double amp = 1.0 / std::sqrt(2.0);
	state.amps.at(pattern_a) = amp;
	state.amps.at(pattern_b) = amp;
	return state;
}
} // namespace

StateVector neel_state(const Lattice& lattice)
{
	const uint32_t n = lattice.n_sites();
	if(lattice.kind() == Lattice::Kind::Ring)
	{
		if(n % 2 != 0)
		{
			throw InputError("neel_state: ring length must be even");
		}
	}
	else if(lattice.lx() % 2 != 0 || lattice.ly() % 2 != 0)
	{
		throw InputError("neel_state: torus dimensions must be even");
	}
	uint64_t pattern_a = 0;
	for(uint32_t s = 0; s < n; ++s)
	{
		if(site_parity(lattice, s) == 1)
		{
			pattern_a |= uint64_t{1} << s; // odd-parity sites point down
		}
	}
	return neel_from_pattern(n, pattern_a);
}

StateVector neel_state_ring(uint32_t n_sites)
{
	if(n_sites < 2 || n_sites % 2 != 0)
	{
		throw InputError("neel_state_ring: need an even number of sites >= 2");
	}
	uint64_t pattern_a = 0;
	for(uint32_t s = 1; s < n_sites; s += 2)
	{
		pattern_a |= uint64_t{1} << s;
	}
	return neel_from_pattern(n_sites, pattern_a);
}

HvaSpec xyz_hva(const Lattice& lattice, uint32_t p, uint32_t r)
{
	return make_edge_hva(lattice, p, r, {'X', 'Y', 'Z'});
}

HvaSpec ising_fields_hva(const Lattice& lattice, uint32_t p)
{
	const uint32_t n = lattice.n_sites();
	HvaSpec spec{lattice, {}, p, 1};

	LocalHamiltonian zz{n};
	for(const auto& [a, b] : lattice.edges())
	{
		zz.add_term(1.0, PauliString::pair(n, a, b, 'Z'));
	}
	zz.locality_k = 2;
	spec.layers.push_back(std::move(zz));

	for(char axis : {'X', 'Z'})
	{
		LocalHamiltonian field{n};
		for(uint32_t s = 0; s < n; ++s)
		{
			field.add_term(1.0, PauliString::single(n, s, axis));
		}
		field.locality_k = 1;
		spec.layers.push_back(std::move(field));
	}
	return spec;
}

LocalHamiltonian heisenberg_hamiltonian(const Lattice& lattice, double jx,
	double jy, double jz)
{
	const uint32_t n = lattice.n_sites();
	LocalHamiltonian h{n};
	for(const auto& [a, b] : lattice.edges())
	{
		h.add_term(jx, PauliString::pair(n, a, b, 'X'));
		h.add_term(jy, PauliString::pair(n, a, b, 'Y'));
		h.add_term(jz, PauliString::pair(n, a, b, 'Z'));
	}
	h.locality_k = 2;
	return h;
}

void apply_circuit_inplace(const HvaSpec& spec, const ParamSet& params,
	StateVector& state)
{
	if(params.rows() != static_cast<Eigen::Index>(spec.blocks_p)
		|| params.cols() != static_cast<Eigen::Index>(spec.q()))
	{
		throw InputError("apply_circuit: parameter shape mismatch");
	}
	if(state.n_sites != spec.n_sites())
	{
		throw InputError("apply_circuit: state size mismatch");
	}
	for(uint32_t rep = 0; rep < spec.repetitions_r; ++rep)
	{
		for(uint32_t i = 0; i < spec.blocks_p; ++i)
		{
			for(uint32_t j = 0; j < spec.q(); ++j)
			{
				const double angle = params(i, j);
				for(const auto& t : spec.layers[j].terms)
				{
					apply_pauli_rotation_inplace(state, t.string, t.coeff * angle);
				}
			}
		}
	}
}

void apply_circuit_adjoint_inplace(const HvaSpec& spec, const ParamSet& params,
	StateVector& state)
{
	for(uint32_t rep = 0; rep < spec.repetitions_r; ++rep)
	{
		for(uint32_t i = spec.blocks_p; i-- > 0;)
		{
			for(uint32_t j = spec.q(); j-- > 0;)
			{
				const double angle = params(static_cast<Eigen::Index>(i),
					static_cast<Eigen::Index>(j));
				for(const auto& t : spec.layers[j].terms)
				{
					apply_pauli_rotation_inplace(state, t.string, -t.coeff * angle);
				}
			}
		}
	}
}

StateVector apply_circuit(const HvaSpec& spec, const ParamSet& params,
	const StateVector& psi0)
{
	StateVector out = psi0;
	apply_circuit_inplace(spec, params, out);
	return out;
}

ParamSet sample_params(const InitScheme& scheme, uint32_t p, uint32_t q,
	RngStream rng)
{
	if(p < 1 || q < 1)
	{
		throw InputError("sample_params: p and q must be >= 1");
	}
	constexpr double two_pi = 2.0 * std::numbers::pi;
	ParamSet params(p, q);
	switch(scheme.variant)
	{
	case InitScheme::Variant::Random:
		for(uint32_t i = 0; i < p; ++i)
		{
			for(uint32_t j = 0; j < q; ++j)
			{
				params(i, j) = rng.uniform(0.0, two_pi);
			}
		}
		break;
	case InitScheme::Variant::Small:
		if(scheme.value <= 0.0)
		{
			throw InputError("sample_params: eps must be > 0");
		}
		for(uint32_t i = 0; i < p; ++i)
		{
			for(uint32_t j = 0; j < q; ++j)
			{
				params(i, j) = rng.uniform(0.0, scheme.value);
			}
		}
		break;
	case InitScheme::Variant::Constant:
		params.setConstant(scheme.value);
		break;
	case InitScheme::Variant::Constrained:
	{
		if(scheme.value <= 0.0)
		{
			throw InputError("sample_params: T must be > 0");
		}
		for(uint32_t i = 0; i < p; ++i)
		{
			double block_sum = 0.0;
			for(uint32_t j = 0; j < q; ++j)
			{
				params(i, j) = rng.uniform(0.0, two_pi);
				block_sum += params(i, j);
			}
			for(uint32_t j = 0; j < q; ++j)
			{
				params(i, j) *= scheme.value / block_sum;
			}
		}
		break;
	}
	}
	return params;
}

ParamSet derive_constrained_params(const Eigen::MatrixXd& free_params,
	double t_budget)
{
	ParamSet full(free_params.rows(), free_params.cols() + 1);
	full.leftCols(free_params.cols()) = free_params;
	for(Eigen::Index i = 0; i < free_params.rows(); ++i)
	{
		full(i, free_params.cols()) = t_budget - free_params.row(i).sum();
	}
	return full;
}

double constrained_cost(double raw_cost, const Eigen::MatrixXd& free_params,
	double t_budget)
{
	for(Eigen::Index i = 0; i < free_params.rows(); ++i)
	{
		double block_sum = 0.0;
		for(Eigen::Index j = 0; j < free_params.cols(); ++j)
		{
			if(free_params(i, j) < 0.0)
			{
				return 0.0;
			}
			block_sum += free_params(i, j);
		}
		if(t_budget - block_sum < 0.0)
		{
			return 0.0;
		}
	}
	return raw_cost;
}

} // namespace hva

#include "hva/bounds.hpp"

#include "hva/errors.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>

namespace hva
{

namespace
{

using cx = std::complex<double>;

double factorial(uint32_t n)
{
	double f = 1.0;
	for(uint32_t i = 2; i <= n; ++i)
	{
		f *= static_cast<double>(i);
	}
	return f;
}

} // namespace

FmParameters FmParameters::make(uint32_t h_max, uint32_t j_strength,
	uint32_t k, double v0)
{
	if(h_max < 1 || j_strength < 1 || k < 1)
	{
		throw InputError("FmParameters: counts must be positive");
	}
	if(v0 > static_cast<double>(h_max))
	{
		throw InputError("FmParameters: v0 must not exceed h_max");
	}
	return FmParameters{h_max, j_strength, k,
		2.0 * static_cast<double>(k) * static_cast<double>(j_strength), v0};
}

FmParameters FmParameters::from_spec(const HvaSpec& spec)
{
	uint32_t k = 1;
	for(const auto& layer : spec.layers)
	{
		k = std::max(k, layer.locality_k.value_or(1));
	}
	uint32_t h_max = 0;
	uint32_t j_strength = 0;
	for(const auto& layer : spec.layers)
	{
		const auto report = validate_layer(layer, spec.lattice, k);
		if(!report.all_ok())
		{
			throw InputError(
				"FmParameters: layer violates the structural conditions");
		}
		h_max = std::max(h_max, report.h_max_count);
		j_strength = std::max(j_strength, report.j_strength);
	}
	return make(h_max, j_strength, k, static_cast<double>(h_max));
}

NormBounds norm_bounds(const LocalHamiltonian& h, const LocalHamiltonian& o,
	uint32_t k, const Lattice& lattice)
{
	double h_norm = 0.0;
	double max_coeff = 0.0;
	for(const auto& t : h.terms)
	{
		h_norm += std::abs(t.coeff);
		max_coeff = std::max(max_coeff, std::abs(t.coeff));
	}
	double o_norm = 0.0;
	uint64_t o_support = 0;
	for(const auto& t : o.terms)
	{
		o_norm += std::abs(t.coeff);
		o_support |= t.string.support();
	}

	uint32_t s_count = 0;
	for(const auto& t : h.terms)
	{
		bool near = false;
		for(uint32_t a = 0; a < h.n_sites && !near; ++a)
		{
			if(!((t.string.support() >> a) & 1))
			{
				continue;
			}
			for(uint32_t b = 0; b < o.n_sites; ++b)
			{
				if(((o_support >> b) & 1) && lattice.distance(a, b) <= k)
				{
					near = true;
					break;
				}
			}
		}
		if(near)
		{
			++s_count;
		}
	}

	return NormBounds{h_norm, 2.0 * s_count * o_norm * max_coeff, s_count};
}

double speed_limit_tc(double g, double big_k, double big_c)
{
	if(g <= 0.0 || big_k <= 0.0 || big_c <= 0.0)
	{
		throw InputError("speed_limit_tc: inputs must be positive");
	}
	return g / (4.0 * big_k * big_c);
}

uint32_t fm_order_n0(double t, uint32_t k, uint32_t j)
{
	if(t <= 0.0)
	{
		throw InputError("fm_order_n0: t must be positive");
	}
	const double raw = 1.0 / (32.0 * k * j * t);
	return static_cast<uint32_t>(std::floor(raw));
}

double fm_error_bound(uint32_t n, double t, const FmParameters& params)
{
	const uint32_t n0 = fm_order_n0(t, params.k, params.j_strength);
	if(n > n0)
	{
		throw PreconditionError("fm_error_bound: requires n <= n0(t)");
	}
	const double h_max = params.h_max;
	const double term1 = 6.0 * h_max * std::pow(2.0, -static_cast<double>(n0)) * t;
	const double term2 = 2.0 * h_max * std::pow(params.lambda, n + 1)
		/ ((n + 2.0) * (n + 2.0)) * factorial(n + 1) * std::pow(t, n + 2.0);
	return term1 + term2;
}

double omega_bound(uint32_t n, double v0, double lambda)
{
	return 2.0 * v0 * std::pow(lambda, n) * factorial(n)
		/ ((n + 1.0) * (n + 1.0));
}

double k_norm_bound(uint32_t n, double t, const FmParameters& params)
{
	if(t <= 0.0)
	{
		throw InputError("k_norm_bound: t must be positive");
	}
	double sum = 0.0;
	for(uint32_t m = 0; m <= n; ++m)
	{
		sum += std::pow(params.lambda, m) * factorial(m) * std::pow(t, m)
			/ ((m + 1.0) * (m + 1.0));
	}
	return params.h_max * sum;
}

TheoremConstants theorem_constants(double g, double r, double o_norm,
	uint32_t l, uint32_t s, uint32_t k, uint32_t j)
{
	if(g <= 0.0 || r <= 0.0 || o_norm <= 0.0 || l < 1 || s < 1 || k < 1
		|| j < 1)
	{
		throw InputError("theorem_constants: inputs must be positive");
	}
	TheoremConstants out{};
	out.mu = 65.0 / 64.0;
	out.gamma = 7.0 * std::log(4.0) + 3.0 * std::log(3.0) - 2.0;
	out.c = g / (8.0 * out.mu * r * o_norm
		* std::max(out.mu * l, static_cast<double>(s)));
	const double lambda = 2.0 * static_cast<double>(k) * j;
	out.beta_c = 8.0 * out.c * out.c * out.c * r * lambda * lambda / 9.0;
	out.n_min = std::max(128.0 * out.gamma * out.c * k * j,
		32.0 * r * out.beta_c * o_norm / g);
	return out;
}

namespace
{

Eigen::MatrixXcd dense_exponential(const Eigen::MatrixXcd& hermitian,
	double scale)
{
	// e^{-i scale H} through the eigendecomposition of Hermitian H.
	Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(hermitian);
	const Eigen::ArrayXcd phases =
		(cx{0.0, -1.0} * scale * solver.eigenvalues().array().cast<cx>())
			.exp();
	return solver.eigenvectors() * phases.matrix().asDiagonal()
		* solver.eigenvectors().adjoint();
}

double spectral_norm(const Eigen::MatrixXcd& m)
{
	Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m.adjoint() * m);
	return std::sqrt(std::max(0.0, solver.eigenvalues().maxCoeff()));
}

} // namespace

FmVerification fm_approx_verify(const HvaSpec& spec, const ParamSet& params,
	uint32_t n)
{
	if(n > 1)
	{
		throw InputError("fm_approx_verify: only n in {0, 1} is supported");
	}
	if(spec.n_sites() > 8)
	{
		throw ResourceError("fm_approx_verify: dense check capped at 8 sites");
	}
	if(spec.blocks_p != 1 || spec.repetitions_r != 1)
	{
		throw InputError("fm_approx_verify: requires a single block (p = r = 1)");
	}
	const uint32_t q = spec.q();
	if(params.rows() != 1 || params.cols() != static_cast<Eigen::Index>(q))
	{
		throw InputError("fm_approx_verify: parameter shape mismatch");
	}
	for(Eigen::Index j = 0; j < params.cols(); ++j)
	{
		if(params(0, j) <= 0.0)
		{
			throw InputError("fm_approx_verify: layer durations must be positive");
		}
	}
	const double tau = params.row(0).sum();

	std::vector<Eigen::MatrixXcd> layer_mats;
	layer_mats.reserve(q);
	for(const auto& layer : spec.layers)
	{
		layer_mats.push_back(dense_matrix(layer));
	}

	// Circuit unitary: layer 1 acts first.
	const Eigen::Index dim = layer_mats[0].rows();
	Eigen::MatrixXcd circuit = Eigen::MatrixXcd::Identity(dim, dim);
	for(uint32_t j = 0; j < q; ++j)
	{
		circuit = dense_exponential(layer_mats[j], params(0, j)) * circuit;
	}

	// Effective Hamiltonian of the piecewise-constant schedule.
	Eigen::MatrixXcd h_eff = Eigen::MatrixXcd::Zero(dim, dim);
	for(uint32_t j = 0; j < q; ++j)
	{
		h_eff += params(0, j) / tau * layer_mats[j];
	}
	if(n >= 1)
	{
		for(uint32_t a = 0; a < q; ++a)
		{
			for(uint32_t b = a + 1; b < q; ++b)
			{
				const Eigen::MatrixXcd comm = layer_mats[b] * layer_mats[a]
					- layer_mats[a] * layer_mats[b];
				h_eff += cx{0.0, -1.0} / (2.0 * tau) * params(0, a)
					* params(0, b) * comm;
			}
		}
	}

	const double measured =
		spectral_norm(circuit - dense_exponential(h_eff, tau));

	const FmParameters fm = FmParameters::from_spec(spec);
	double bound = std::numeric_limits<double>::quiet_NaN();
	if(n <= fm_order_n0(tau, fm.k, fm.j_strength))
	{
		bound = fm_error_bound(n, tau, fm);
	}
	return FmVerification{measured, bound};
}

} // namespace hva

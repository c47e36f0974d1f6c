#include "hva/cli.hpp"

#include "hva/ansatz.hpp"
#include "hva/bounds.hpp"
#include "hva/errors.hpp"
#include "hva/grad.hpp"
#include "hva/spectral.hpp"
#include "hva/version.hpp"
#include "hva/vqe.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

namespace hva::cli
{

namespace
{

using nlohmann::json;

inline constexpr uint32_t simulator_site_cap = 24;

json load_config(const RunOptions& opts)
{
	std::ifstream in(opts.config_path);
	if(!in)
	{
		throw InputError("cannot open config file: " + opts.config_path);
	}
	json config = json::parse(in); // throws json::parse_error on bad input
	if(opts.seed)
	{
		config["seed"] = *opts.seed;
	}
	return config;
}

std::ofstream open_output(const RunOptions& opts, const char* subcommand,
	const json& config)
{
	std::ofstream out(opts.out_path);
	if(!out)
	{
		throw InputError("cannot open output file: " + opts.out_path);
	}
	out << "# subcommand=" << subcommand << " version=" << version_string
		<< " config=" << config.dump() << "\n";
	return out;
}

std::string fmt(double v)
{
	char buf[40];
	std::snprintf(buf, sizeof(buf), "%.17g", v);
	return buf;
}

std::string csv_quote(const std::string& s)
{
	std::string out = "\"";
	for(char ch : s)
	{
		out += ch;
		if(ch == '"')
		{
			out += '"';
		}
	}
	out += '"';
	return out;
}

uint64_t config_seed(const json& config)
{
	return config.value("seed", uint64_t{0});
}

InitScheme parse_scheme(const json& j, uint32_t n_sites)
{
	const auto kind = j.at("kind").get<std::string>();
	if(kind == "random")
	{
		return InitScheme::random();
	}
	if(kind == "small")
	{
		return InitScheme::small_eps(j.at("eps").get<double>());
	}
	if(kind == "constrained" || kind == "constrained_opt")
	{
		const double t = j.contains("T") ? j.at("T").get<double>()
										 : InitScheme::default_T(n_sites);
		return InitScheme::constrained(t);
	}
	if(kind == "constant")
	{
		return InitScheme::constant(j.at("value").get<double>());
	}
	throw InputError("unknown scheme kind: " + kind);
}

std::string scheme_name(const json& j)
{
	return j.at("kind").get<std::string>();
}

void check_site_cap(uint32_t n)
{
	if(n > simulator_site_cap)
	{
		throw ResourceError("system size exceeds the simulator cap");
	}
}

int guarded(const RunOptions& opts, const char* name,
	int (*body)(const RunOptions&))
{
	try
	{
		return body(opts);
	}
	catch(const ResourceError& e)
	{
		std::cerr << name << ": " << e.what() << "\n";
		return exit_resource;
	}
	catch(const std::exception& e) // InputError, json errors, preconditions
	{
		std::cerr << name << ": " << e.what() << "\n";
		return exit_config;
	}
}

LocalHamiltonian y0y1_observable(uint32_t n)
{
	LocalHamiltonian o{n};
	o.add_term(1.0, PauliString::pair(n, 0, 1, 'Y'));
	return o;
}

uint32_t repeated_r(const json& config, uint32_t n)
{
	if(!config.contains("r"))
	{
		return 1;
	}
	if(config.at("r").is_string())
	{
		if(config.at("r").get<std::string>() != "auto")
		{
			throw InputError("r must be an integer or \"auto\"");
		}
		return (n * n + 3) / 4; // ceil(N^2 / 4)
	}
	return config.at("r").get<uint32_t>();
}

int grad_scan_body(const RunOptions& opts)
{
	const json config = load_config(opts);
	const auto sizes = config.at("sizes").get<std::vector<uint32_t>>();
	const auto p = config.value("p", uint32_t{16});
	uint32_t samples = config.value("samples", uint32_t{256});
	if(opts.paper_scale)
	{
		samples = std::max(samples, uint32_t{1024});
	}
	const auto& schemes = config.at("schemes");
	const uint64_t seed = config_seed(config);

	auto out = open_output(opts, "grad-scan", config);
	out << "n_sites,p,r,scheme,T_or_eps,mean_sq_grad,rel_std,n_samples,seed\n";

	const RngStream root(seed);
	size_t row = 0;
	for(uint32_t n : sizes)
	{
		check_site_cap(n);
		const uint32_t r = repeated_r(config, n);
		const Lattice lattice = build_lattice_ring(n);
		const HvaSpec spec = xyz_hva(lattice, p, r);
		const StateVector psi0 = neel_state(lattice);
		const LocalHamiltonian obs = y0y1_observable(n);
		for(const auto& scheme_json : schemes)
		{
			const InitScheme scheme = parse_scheme(scheme_json, n);
			const GradScanResult res = grad_variance_scan(spec, scheme, obs,
				psi0, samples, root.substream(row));
			out << n << ',' << p << ',' << r << ',' << scheme.label() << ','
				<< fmt(scheme.value) << ',' << fmt(res.mean_sq_grad) << ','
				<< fmt(res.rel_std) << ',' << res.n_samples << ',' << seed
				<< "\n";
			++row;
		}
	}
	return exit_ok;
}

int eps_scan_body(const RunOptions& opts)
{
	const json config = load_config(opts);
	const auto sizes = config.at("sizes").get<std::vector<uint32_t>>();
	const auto p = config.value("p", uint32_t{16});
	const auto eps_grid = config.at("eps_grid").get<std::vector<double>>();
	uint32_t samples = config.value("samples", uint32_t{256});
	if(opts.paper_scale)
	{
		samples = std::max(samples, uint32_t{1024});
	}
	const uint64_t seed = config_seed(config);

	auto out = open_output(opts, "eps-scan", config);
	out << "n_sites,p,eps,eps_over_logN,mean_sq_grad,rel_std,n_samples\n";

	const RngStream root(seed);
	size_t row = 0;
	for(uint32_t n : sizes)
	{
		check_site_cap(n);
		const Lattice lattice = build_lattice_ring(n);
		const HvaSpec spec = xyz_hva(lattice, p);
		const StateVector psi0 = neel_state(lattice);
		const LocalHamiltonian obs = y0y1_observable(n);
		for(double eps : eps_grid)
		{
			const GradScanResult res = grad_variance_scan(spec,
				InitScheme::small_eps(eps), obs, psi0, samples,
				root.substream(row));
			out << n << ',' << p << ',' << fmt(eps) << ','
				<< fmt(eps / std::log(n)) << ',' << fmt(res.mean_sq_grad)
				<< ',' << fmt(res.rel_std) << ',' << res.n_samples << "\n";
			++row;
		}
	}
	return exit_ok;
}

int vqe_body(const RunOptions& opts)
{
	const json config = load_config(opts);
	const auto n = config.at("n").get<uint32_t>();
	check_site_cap(n);
	const auto p = config.value("p", uint32_t{8});
	const auto& schemes = config.at("schemes");
	const auto n_seeds = config.value("n_seeds", uint32_t{1});
	const auto record_every = config.value("record_every", uint32_t{1});
	const std::string mode_str = config.value("mode", std::string{"exact"});
	const GradientMode mode = mode_str == "shots" ? GradientMode::Shots
												  : GradientMode::Exact;
	std::vector<uint32_t> n_shot_grid{0};
	if(mode == GradientMode::Shots)
	{
		n_shot_grid = config.at("n_shot_grid").get<std::vector<uint32_t>>();
	}
	VqeOptions vopts;
	vopts.iterations = config.value("iterations", uint32_t{1000});
	vopts.alpha = config.value("alpha", 0.025);
	vopts.mode = mode;
	const uint64_t seed = config_seed(config);

	const Lattice lattice = build_lattice_ring(n);
	const HvaSpec spec = xyz_hva(lattice, p);
	const LocalHamiltonian cost = heisenberg_hamiltonian(lattice);

	double e_gs = std::numeric_limits<double>::quiet_NaN();
	if(n <= dense_site_cap)
	{
		e_gs = eigendecompose(cost).eigenvalues.minCoeff();
	}

	auto out = open_output(opts, "vqe", config);
	out << "iteration,energy,energy_minus_egs,state_preps,seed,scheme,"
		   "n_shot\n";

	json summary;
	summary["version"] = version_string;
	summary["e_gs"] = e_gs;
	summary["runs"] = json::array();

	const RngStream root(seed);
	size_t run_index = 0;
	for(const auto& scheme_json : schemes)
	{
		const std::string name = scheme_name(scheme_json);
		const InitScheme scheme = parse_scheme(scheme_json, n);
		const bool constrained_opt = name == "constrained_opt";
		for(uint32_t n_shot : n_shot_grid)
		{
			vopts.n_shot = n_shot;
			for(uint32_t s = 0; s < n_seeds; ++s)
			{
				const RngStream rng = root.substream(run_index);
				const auto records = constrained_opt
					? run_vqe_constrained_ansatz(spec, scheme.value, cost,
						vopts, rng)
					: run_vqe(spec, scheme, cost, vopts, rng);
				for(const auto& rec : records)
				{
					if(rec.iteration % record_every != 0
						&& rec.iteration != vopts.iterations)
					{
						continue;
					}
					out << rec.iteration << ',' << fmt(rec.energy) << ','
						<< fmt(rec.energy - e_gs) << ','
						<< rec.state_prep_count << ',' << s << ',' << name
						<< ',' << n_shot << "\n";
				}
				summary["runs"].push_back({{"scheme", name},
					{"n_shot", n_shot}, {"seed", s},
					{"final_energy", records.back().energy},
					{"final_error", records.back().energy - e_gs}});
				++run_index;
			}
		}
	}

	std::ofstream js(opts.out_path + ".summary.json");
	if(!js)
	{
		throw InputError("cannot open summary file");
	}
	js << summary.dump(1, '\t') << "\n";
	return exit_ok;
}

int fh_scan_body(const RunOptions& opts)
{
	const json config = load_config(opts);
	const auto sizes = config.at("sizes").get<std::vector<uint32_t>>();
	const auto k = config.value("k", uint32_t{2});
	const bool time_reversal = config.value("time_reversal", false);
	uint32_t instances = config.value("instances", uint32_t{128});
	if(opts.paper_scale)
	{
		instances = std::max(instances, uint32_t{1024});
	}
	const bool with_time_avg = config.value("time_avg", false);
	const double t_max = config.value("t_max", 5000.0);
	const auto n_times = config.value("n_times", uint32_t{2000});
	const uint64_t seed = config_seed(config);

	auto out = open_output(opts, "fh-scan", config);
	out << "n_sites,k,time_reversal,instance_seed,f_h,time_avg,diag_term,"
		   "min_gap\n";

	for(size_t si = 0; si < sizes.size(); ++si)
	{
		const uint32_t n = sizes[si];
		if(n > dense_site_cap)
		{
			throw ResourceError("fh-scan requires n_sites within the dense cap");
		}
		const StateVector psi0 = StateVector::plus_state(n);
		LocalHamiltonian g{n};
		LocalHamiltonian o{n};
		for(uint32_t s = 0; s < n; ++s)
		{
			g.add_term(1.0, PauliString::single(n, s, 'Y'));
			o.add_term(1.0, PauliString::single(n, s, 'Z'));
		}
		for(uint32_t inst = 0; inst < instances; ++inst)
		{
			const uint64_t instance_seed =
				seed + 1000003ULL * si + 1000000007ULL * inst;
			const LocalHamiltonian h = random_k_local_hamiltonian(
				{n, k, time_reversal, instance_seed});
			const EigenSystem eig = eigendecompose(h);
			const FhBound fh = f_h_lower_bound(eig, psi0, g, o);
			const double diag = diag_commutator_sq(eig, psi0, g, o);
			out << n << ',' << k << ',' << (time_reversal ? 1 : 0) << ','
				<< instance_seed << ',' << fmt(fh.value) << ',';
			if(with_time_avg)
			{
				out << fmt(
					time_average_grad_sq(eig, psi0, g, o, t_max, n_times));
			}
			out << ',' << fmt(diag) << ',' << fmt(eig.min_gap_distinctness)
				<< "\n";
		}
	}
	return exit_ok;
}

void bounds_row(std::ofstream& out, const std::string& quantity,
	const json& inputs, double value, std::optional<double> measured)
{
	out << quantity << ',' << csv_quote(inputs.dump()) << ',' << fmt(value)
		<< ',';
	if(measured)
	{
		out << fmt(*measured) << ',' << (value >= *measured ? 1 : 0);
	}
	else
	{
		out << ',';
	}
	out << "\n";
}

int bounds_body(const RunOptions& opts)
{
	const json config = load_config(opts);
	auto out = open_output(opts, "bounds", config);
	out << "quantity,inputs,value,measured,dominated\n";

	for(const auto& req : config.at("requests"))
	{
		const auto quantity = req.at("quantity").get<std::string>();
		if(quantity == "theorem-constants")
		{
			const auto tc = theorem_constants(req.value("g", 2.0),
				req.value("r", 1.0), req.value("o_norm", 1.0),
				req.value("l", uint32_t{1}), req.value("s", uint32_t{1}),
				req.value("k", uint32_t{2}), req.value("j", uint32_t{2}));
			bounds_row(out, "theorem-constants.mu", req, tc.mu, {});
			bounds_row(out, "theorem-constants.gamma", req, tc.gamma, {});
			bounds_row(out, "theorem-constants.c", req, tc.c, {});
			bounds_row(out, "theorem-constants.beta_c", req, tc.beta_c, {});
			bounds_row(out, "theorem-constants.n_min", req, tc.n_min, {});
		}
		else if(quantity == "speed-limit")
		{
			bounds_row(out, "speed-limit", req,
				speed_limit_tc(req.at("g").get<double>(),
					req.at("K").get<double>(), req.at("C").get<double>()),
				{});
		}
		else if(quantity == "fm-order")
		{
			bounds_row(out, "fm-order", req,
				fm_order_n0(req.at("t").get<double>(),
					req.at("k").get<uint32_t>(), req.at("j").get<uint32_t>()),
				{});
		}
		else if(quantity == "fm-error")
		{
			const auto params = FmParameters::make(
				req.at("h_max").get<uint32_t>(), req.at("j").get<uint32_t>(),
				req.at("k").get<uint32_t>(),
				req.value("v0", req.at("h_max").get<double>()));
			bounds_row(out, "fm-error", req,
				fm_error_bound(req.at("n").get<uint32_t>(),
					req.at("t").get<double>(), params),
				{});
		}
		else if(quantity == "omega")
		{
			bounds_row(out, "omega", req,
				omega_bound(req.at("n").get<uint32_t>(),
					req.at("v0").get<double>(),
					req.at("lambda").get<double>()),
				{});
		}
		else if(quantity == "k-norm")
		{
			const auto params = FmParameters::make(
				req.at("h_max").get<uint32_t>(), req.at("j").get<uint32_t>(),
				req.at("k").get<uint32_t>(),
				req.value("v0", req.at("h_max").get<double>()));
			bounds_row(out, "k-norm", req,
				k_norm_bound(req.at("n").get<uint32_t>(),
					req.at("t").get<double>(), params),
				{});
		}
		else if(quantity == "norm-bounds")
		{
			const auto n = req.at("n_sites").get<uint32_t>();
			const auto k = req.value("k", uint32_t{2});
			const Lattice lattice = build_lattice_ring(n);
			LocalHamiltonian h{n};
			for(const auto& [a, b] : lattice.edges())
			{
				h.add_term(1.0, PauliString::pair(n, a, b, 'Z'));
			}
			LocalHamiltonian o{n};
			o.add_term(1.0, PauliString::single(n, 0, 'Z'));
			const NormBounds nb = norm_bounds(h, o, k, lattice);
			std::optional<double> h_measured;
			std::optional<double> comm_measured;
			if(req.value("verify", false))
			{
				if(n > 8)
				{
					throw ResourceError("norm-bounds verify capped at 8 sites");
				}
				const Eigen::MatrixXcd hd = dense_matrix(h);
				const Eigen::MatrixXcd od = dense_matrix(o);
				Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(hd);
				h_measured = es.eigenvalues().cwiseAbs().maxCoeff();
				const Eigen::MatrixXcd comm = hd * od - od * hd;
				Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es2(
					comm.adjoint() * comm);
				comm_measured =
					std::sqrt(std::max(0.0, es2.eigenvalues().maxCoeff()));
			}
			bounds_row(out, "norm-bounds.h_norm", req, nb.h_norm_bound,
				h_measured);
			bounds_row(out, "norm-bounds.commutator", req,
				nb.commutator_bound, comm_measured);
		}
		else if(quantity == "fm-verify")
		{
			const auto n_sites = req.at("n_sites").get<uint32_t>();
			const auto tau = req.at("tau").get<double>();
			const Lattice lattice = build_lattice_ring(n_sites);
			const HvaSpec spec = xyz_hva(lattice, 1);
			ParamSet params(1, spec.q());
			params.setConstant(tau / spec.q());
			for(uint32_t order : req.at("n").get<std::vector<uint32_t>>())
			{
				const FmVerification v = fm_approx_verify(spec, params, order);
				json inputs = req;
				inputs["order"] = order;
				bounds_row(out, "fm-verify", inputs, v.bound,
					v.measured_error);
			}
		}
		else
		{
			throw InputError("unknown bounds quantity: " + quantity);
		}
	}
	return exit_ok;
}

} // namespace

int cmd_grad_scan(const RunOptions& opts)
{
	return guarded(opts, "grad-scan", grad_scan_body);
}

int cmd_eps_scan(const RunOptions& opts)
{
	return guarded(opts, "eps-scan", eps_scan_body);
}

int cmd_vqe(const RunOptions& opts)
{
	return guarded(opts, "vqe", vqe_body);
}

int cmd_fh_scan(const RunOptions& opts)
{
	return guarded(opts, "fh-scan", fh_scan_body);
}

int cmd_bounds(const RunOptions& opts)
{
	return guarded(opts, "bounds", bounds_body);
}

} // namespace hva::cli

#include "hva/cli.hpp"
#include "hva/version.hpp"

#include <CLI11.hpp>

#include <functional>
#include <string>

int main(int argc, char** argv)
{
	CLI::App app{"Statevector experiments for Hamiltonian variational ansatz "
				 "circuits"};
	app.set_version_flag("--version", hva::version_string);
	app.require_subcommand(1);

	hva::cli::RunOptions opts;
	uint64_t seed_value = 0;
	bool seed_given = false;

	int (*selected)(const hva::cli::RunOptions&) = nullptr;
	const auto add = [&](const char* name, const char* desc,
						 int (*fn)(const hva::cli::RunOptions&)) {
		auto* sub = app.add_subcommand(name, desc);
		sub->add_option("--config", opts.config_path, "JSON config path")
			->required();
		sub->add_option("--out", opts.out_path, "output CSV path")->required();
		sub->add_option("--seed", seed_value, "override the config seed")
			->each([&](const std::string&) { seed_given = true; });
		sub->add_flag("--paper-scale", opts.paper_scale,
			"raise sample counts toward full-scale settings");
		sub->callback([&selected, fn] { selected = fn; });
	};

	add("grad-scan", "gradient second-moment scan over sizes and schemes",
		hva::cli::cmd_grad_scan);
	add("eps-scan", "gradient scan over small-initialization widths",
		hva::cli::cmd_eps_scan);
	add("vqe", "Adam-driven VQE learning curves", hva::cli::cmd_vqe);
	add("fh-scan", "thermalization lower bound over random Hamiltonians",
		hva::cli::cmd_fh_scan);
	add("bounds", "closed-form bound evaluations and dense verification",
		hva::cli::cmd_bounds);

	CLI11_PARSE(app, argc, argv);

	if(seed_given)
	{
		opts.seed = seed_value;
	}
	return selected(opts);
}

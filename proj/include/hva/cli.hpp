#pragma once

#include <nlohmann/json.hpp>

#include <cstdint>
#include <optional>
#include <string>

namespace hva::cli
{

/// Options shared by every subcommand.
struct RunOptions
{
	std::string config_path;
	std::string out_path;
	std::optional<uint64_t> seed; // overrides the config seed
	bool paper_scale = false;     // raise sample counts toward full scale
};

/// Exit codes: 0 success, 1 resource-cap violation, 2 config/input error.
inline constexpr int exit_ok = 0;
inline constexpr int exit_resource = 1;
inline constexpr int exit_config = 2;

int cmd_grad_scan(const RunOptions& opts);
int cmd_eps_scan(const RunOptions& opts);
int cmd_vqe(const RunOptions& opts);
int cmd_fh_scan(const RunOptions& opts);
int cmd_bounds(const RunOptions& opts);

} // namespace hva::cli

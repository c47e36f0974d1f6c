#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace hva
{

/// A ring (1D periodic chain) or torus (2D periodic rectangle) of spin sites.
/// Sites are indexed 0..N-1; the torus is row-major (site = y*Lx + x).
class Lattice
{
public:
	enum class Kind
	{
		Ring,
		Torus
	};

	static Lattice ring(uint32_t n_sites);
	static Lattice torus(uint32_t lx, uint32_t ly);

	[[nodiscard]] Kind kind() const { return kind_; }
	[[nodiscard]] uint32_t n_sites() const { return n_sites_; }
	[[nodiscard]] uint32_t lx() const { return lx_; }
	[[nodiscard]] uint32_t ly() const { return ly_; }

	/// Deduplicated nearest-neighbor pairs (i < j).
	[[nodiscard]] const std::vector<std::pair<uint32_t, uint32_t>>& edges() const
	{
		return edges_;
	}

	/// Graph (periodic Manhattan) distance between two sites.
	[[nodiscard]] uint32_t distance(uint32_t a, uint32_t b) const;

private:
	Lattice() = default;

	Kind kind_ = Kind::Ring;
	uint32_t n_sites_ = 0;
	uint32_t lx_ = 0;
	uint32_t ly_ = 0;
	std::vector<std::pair<uint32_t, uint32_t>> edges_;
};

} // namespace hva

#include "hva/lattice.hpp"

#include "hva/errors.hpp"

#include <algorithm>
#include <cstdlib>

namespace hva
{

Lattice Lattice::ring(uint32_t n_sites)
{
	// N = 2 is admitted as the degenerate single-edge ring so two-site
	// systems can reuse the lattice-based constructors.
	if(n_sites < 2)
	{
		throw InputError("Lattice::ring requires at least 2 sites");
	}
	Lattice lat;
	lat.kind_ = Kind::Ring;
	lat.n_sites_ = n_sites;
	lat.lx_ = n_sites;
	lat.ly_ = 1;
	for(uint32_t i = 0; i < n_sites; ++i)
	{
		const uint32_t j = (i + 1) % n_sites;
		lat.edges_.emplace_back(std::min(i, j), std::max(i, j));
	}
	std::sort(lat.edges_.begin(), lat.edges_.end());
	lat.edges_.erase(std::unique(lat.edges_.begin(), lat.edges_.end()),
		lat.edges_.end());
	return lat;
}

Lattice Lattice::torus(uint32_t lx, uint32_t ly)
{
	// Lx or Ly = 2 would create duplicate nearest-neighbor pairs under the
	// periodic wrap; such degenerate tori are rejected rather than silently
	// deduplicated with doubled coefficients.
	if(lx < 3 || ly < 3)
	{
		throw InputError("Lattice::torus requires Lx >= 3 and Ly >= 3");
	}
	Lattice lat;
	lat.kind_ = Kind::Torus;
	lat.n_sites_ = lx * ly;
	lat.lx_ = lx;
	lat.ly_ = ly;
	for(uint32_t y = 0; y < ly; ++y)
	{
		for(uint32_t x = 0; x < lx; ++x)
		{
			const uint32_t s = y * lx + x;
			const uint32_t right = y * lx + (x + 1) % lx;
			const uint32_t down = ((y + 1) % ly) * lx + x;
			lat.edges_.emplace_back(std::min(s, right), std::max(s, right));
			lat.edges_.emplace_back(std::min(s, down), std::max(s, down));
		}
	}
	std::sort(lat.edges_.begin(), lat.edges_.end());
	lat.edges_.erase(std::unique(lat.edges_.begin(), lat.edges_.end()),
		lat.edges_.end());
	return lat;
}

uint32_t Lattice::distance(uint32_t a, uint32_t b) const
{
	auto periodic = [](uint32_t u, uint32_t v, uint32_t len) -> uint32_t {
		const uint32_t d = u > v ? u - v : v - u;
		return std::min(d, len - d);
	};
	if(kind_ == Kind::Ring)
	{
		return periodic(a, b, n_sites_);
	}
	const uint32_t ax = a % lx_, ay = a / lx_;
	const uint32_t bx = b % lx_, by = b / lx_;
	return periodic(ax, bx, lx_) + periodic(ay, by, ly_);
}

} // namespace hva

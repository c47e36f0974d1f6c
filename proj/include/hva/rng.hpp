#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

namespace hva
{

namespace detail
{
// SplitMix64 finalizer; full-avalanche 64-bit mixer.
inline constexpr uint64_t mix64(uint64_t z) noexcept
{
	z += 0x9e3779b97f4a7c15ULL;
	z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
	z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
	return z ^ (z >> 31);
}
} // namespace detail

/// Counter-based random stream. A draw is a pure function of
/// (key, counter); substreams derive fresh keys, so parallel workers
/// that own disjoint substreams produce bitwise-reproducible results
/// regardless of execution order.
class RngStream
{
public:
	explicit RngStream(uint64_t seed) : key_{detail::mix64(seed)} {}

	[[nodiscard]] RngStream substream(uint64_t idx) const
	{
		RngStream s{*this};
		s.key_ = detail::mix64(key_ ^ detail::mix64(idx + 0x6a09e667f3bcc909ULL));
		s.ctr_ = 0;
		return s;
	}

	[[nodiscard]] uint64_t u64_at(uint64_t ctr) const
	{
		return detail::mix64(key_ + 0x9e3779b97f4a7c15ULL * (ctr + 1));
	}

	/// Uniform double in [0, 1) from the 53 high bits of the draw.
	[[nodiscard]] double uniform_at(uint64_t ctr) const
	{
		return static_cast<double>(u64_at(ctr) >> 11) * 0x1.0p-53;
	}

	uint64_t next_u64() { return u64_at(ctr_++); }
	double uniform() { return uniform_at(ctr_++); }

	/// Uniform double in [lo, hi).
	double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

	/// Standard normal via Box-Muller (two counter draws per call).
	double normal()
	{
		const double u1 = uniform_at(ctr_);
		const double u2 = uniform_at(ctr_ + 1);
		ctr_ += 2;
		const double r = std::sqrt(-2.0 * std::log1p(-u1));
		return r * std::cos(2.0 * std::numbers::pi * u2);
	}

private:
	uint64_t key_;
	uint64_t ctr_ = 0;
};

} // namespace hva

#include "hva/statevec.hpp"

#include "hva/errors.hpp"

#include <omp.h>

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>

namespace hva
{

using cx = std::complex<double>;

namespace
{

constexpr uint64_t parallel_threshold = uint64_t{1} << 14;
constexpr int reduce_chunks = 64;

bool use_parallel(uint64_t dim)
{
	return dim >= parallel_threshold && omp_in_parallel() == 0;
}

void check_match(const StateVector& state, uint32_t n)
{
	if(state.n_sites != n)
	{
		throw InputError("state/operator site-count mismatch");
	}
}

// Sign of the diagonal part: (-1)^{popcount(b & z_mask)}.
inline double z_sign(uint64_t b, uint64_t z_mask)
{
	return (std::popcount(b & z_mask) & 1) ? -1.0 : 1.0;
}

// Insert a zero bit at position `pos` into a (dim/2)-range counter.
inline uint64_t insert_zero_bit(uint64_t i, uint32_t pos)
{
	const uint64_t low = i & ((uint64_t{1} << pos) - 1);
	return ((i >> pos) << (pos + 1)) | low;
}

inline cx y_phase_of(const PauliString& p)
{
	static constexpr cx i_pow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
	return i_pow[p.y_count() & 3];
}

template <bool Parallel>
void rotation_kernel(cx* amps, uint64_t dim, const PauliString& p, double angle)
{
	const double c = std::cos(angle);
	// -i sin(angle) folded together with the Y-site phase i^{nY}.
	const cx ms = cx{0.0, -std::sin(angle)} * y_phase_of(p);
	const uint64_t x = p.x_mask;
	const uint64_t z = p.z_mask;

	if(x == 0)
	{
#pragma omp parallel for if(Parallel) schedule(static)
		for(int64_t b = 0; b < static_cast<int64_t>(dim); ++b)
		{
			amps[b] *= c + ms * z_sign(static_cast<uint64_t>(b), z);
		}
		return;
	}

	const uint32_t pivot = 63U - static_cast<uint32_t>(std::countl_zero(x));
	const int64_t half = static_cast<int64_t>(dim >> 1);
#pragma omp parallel for if(Parallel) schedule(static)
	for(int64_t i = 0; i < half; ++i)
	{
		const uint64_t b = insert_zero_bit(static_cast<uint64_t>(i), pivot);
		const uint64_t b2 = b ^ x;
		const cx a0 = amps[b];
		const cx a1 = amps[b2];
		amps[b] = c * a0 + ms * z_sign(b2, z) * a1;
		amps[b2] = c * a1 + ms * z_sign(b, z) * a0;
	}
}

template <bool Parallel>
void pauli_kernel(cx* amps, uint64_t dim, const PauliString& p)
{
	const cx yph = y_phase_of(p);
	const uint64_t x = p.x_mask;
	const uint64_t z = p.z_mask;

	if(x == 0)
	{
#pragma omp parallel for if(Parallel) schedule(static)
		for(int64_t b = 0; b < static_cast<int64_t>(dim); ++b)
		{
			amps[b] *= yph * z_sign(static_cast<uint64_t>(b), z);
		}
		return;
	}

	const uint32_t pivot = 63U - static_cast<uint32_t>(std::countl_zero(x));
	const int64_t half = static_cast<int64_t>(dim >> 1);
#pragma omp parallel for if(Parallel) schedule(static)
	for(int64_t i = 0; i < half; ++i)
	{
		const uint64_t b = insert_zero_bit(static_cast<uint64_t>(i), pivot);
		const uint64_t b2 = b ^ x;
		const cx a0 = amps[b];
		amps[b] = yph * z_sign(b2, z) * amps[b2];
		amps[b2] = yph * z_sign(b, z) * a0;
	}
}

template <bool Parallel>
double expectation_kernel(const cx* amps, uint64_t dim, const PauliString& p)
{
	const cx yph = y_phase_of(p);
	const uint64_t x = p.x_mask;
	const uint64_t z = p.z_mask;

	// Fixed-chunk partial sums keep the reduction order independent of the
	// thread count, so serial and parallel runs agree bitwise.
	std::array<double, reduce_chunks> partial{};
	const uint64_t chunk = (dim + reduce_chunks - 1) / reduce_chunks;
#pragma omp parallel for if(Parallel) schedule(static)
	for(int c = 0; c < reduce_chunks; ++c)
	{
		const uint64_t lo = chunk * static_cast<uint64_t>(c);
		const uint64_t hi = std::min(dim, lo + chunk);
		double acc = 0.0;
		for(uint64_t b = lo; b < hi; ++b)
		{
			const cx term = std::conj(amps[b ^ x]) * (yph * z_sign(b, z)) * amps[b];
			acc += term.real();
		}
		partial[static_cast<size_t>(c)] = acc;
	}
	double total = 0.0;
	for(double v : partial)
	{
		total += v;
	}
	return total;
}

// Apply a single-qubit gate [[g00,g01],[g10,g11]] on one site.
void apply_1q_gate(StateVector& state, uint32_t site, cx g00, cx g01, cx g10,
	cx g11)
{
	const uint64_t dim = state.dim();
	const int64_t half = static_cast<int64_t>(dim >> 1);
	cx* amps = state.amps.data();
#pragma omp parallel for if(use_parallel(dim)) schedule(static)
	for(int64_t i = 0; i < half; ++i)
	{
		const uint64_t b0 = insert_zero_bit(static_cast<uint64_t>(i), site);
		const uint64_t b1 = b0 | (uint64_t{1} << site);
		const cx a0 = amps[b0];
		const cx a1 = amps[b1];
		amps[b0] = g00 * a0 + g01 * a1;
		amps[b1] = g10 * a0 + g11 * a1;
	}
}

} // namespace

double StateVector::norm() const
{
	double s = 0.0;
	for(const cx& a : amps)
	{
		s += std::norm(a);
	}
	return std::sqrt(s);
}

StateVector StateVector::basis_state(uint32_t n, uint64_t index)
{
	StateVector s{n};
	s.amps[0] = 0.0;
	s.amps.at(index) = 1.0;
	return s;
}

StateVector StateVector::plus_state(uint32_t n)
{
	StateVector s{n};
	const double a = 1.0 / std::sqrt(static_cast<double>(s.dim()));
	std::fill(s.amps.begin(), s.amps.end(), cx{a, 0.0});
	return s;
}

namespace serial
{
void apply_pauli_inplace(StateVector& state, const PauliString& p)
{
	check_match(state, p.n_sites);
	pauli_kernel<false>(state.amps.data(), state.dim(), p);
}

void apply_pauli_rotation_inplace(StateVector& state, const PauliString& p,
	double angle)
{
	check_match(state, p.n_sites);
	rotation_kernel<false>(state.amps.data(), state.dim(), p, angle);
}

double expectation(const StateVector& state, const PauliString& p)
{
	check_match(state, p.n_sites);
	return expectation_kernel<false>(state.amps.data(), state.dim(), p);
}
} // namespace serial

void apply_pauli_inplace(StateVector& state, const PauliString& p)
{
	check_match(state, p.n_sites);
	if(use_parallel(state.dim()))
	{
		pauli_kernel<true>(state.amps.data(), state.dim(), p);
	}
	else
	{
		pauli_kernel<false>(state.amps.data(), state.dim(), p);
	}
}

void apply_pauli_rotation_inplace(StateVector& state, const PauliString& p,
	double angle)
{
	check_match(state, p.n_sites);
	if(use_parallel(state.dim()))
	{
		rotation_kernel<true>(state.amps.data(), state.dim(), p, angle);
	}
	else
	{
		rotation_kernel<false>(state.amps.data(), state.dim(), p, angle);
	}
}

StateVector apply_pauli_rotation(const StateVector& state,
	const PauliString& p, double angle)
{
	StateVector out = state;
	apply_pauli_rotation_inplace(out, p, angle);
	return out;
}

void apply_layer_inplace(StateVector& state, const LocalHamiltonian& h,
	double angle)
{
	check_match(state, h.n_sites);
	for(size_t a = 0; a < h.terms.size(); ++a)
	{
		for(size_t b = a + 1; b < h.terms.size(); ++b)
		{
			if(!commutes(h.terms[a].string, h.terms[b].string))
			{
				throw PreconditionError(
					"apply_layer: layer Hamiltonian terms must pairwise commute");
			}
		}
	}
	for(const auto& t : h.terms)
	{
		apply_pauli_rotation_inplace(state, t.string, t.coeff * angle);
	}
}

StateVector apply_layer(const StateVector& state, const LocalHamiltonian& h,
	double angle)
{
	StateVector out = state;
	apply_layer_inplace(out, h, angle);
	return out;
}

void apply_hamiltonian(StateVector& dst, const StateVector& src,
	const LocalHamiltonian& h)
{
	check_match(src, h.n_sites);
	if(dst.n_sites != src.n_sites)
	{
		dst = StateVector{src.n_sites};
	}
	const uint64_t dim = src.dim();
	cx* out = dst.amps.data();
	const cx* in = src.amps.data();
#pragma omp parallel for if(use_parallel(dim)) schedule(static)
	for(int64_t b = 0; b < static_cast<int64_t>(dim); ++b)
	{
		cx acc{0.0, 0.0};
		for(const auto& t : h.terms)
		{
			const uint64_t bsrc = static_cast<uint64_t>(b) ^ t.string.x_mask;
			acc += t.coeff * t.string.phase(bsrc) * in[bsrc];
		}
		out[b] = acc;
	}
}

double expectation(const StateVector& state, const PauliString& p)
{
	check_match(state, p.n_sites);
	if(use_parallel(state.dim()))
	{
		return expectation_kernel<true>(state.amps.data(), state.dim(), p);
	}
	return expectation_kernel<false>(state.amps.data(), state.dim(), p);
}

double expectation(const StateVector& state, const LocalHamiltonian& h)
{
	check_match(state, h.n_sites);
	double total = 0.0;
	for(const auto& t : h.terms)
	{
		total += t.coeff * expectation(state, t.string);
	}
	return total;
}

std::complex<double> inner_product(const StateVector& a, const StateVector& b)
{
	check_match(a, b.n_sites);
	cx total{0.0, 0.0};
	for(uint64_t i = 0; i < a.dim(); ++i)
	{
		total += std::conj(a.amps[i]) * b.amps[i];
	}
	return total;
}

StateVector rotate_to_basis(const StateVector& state, MeasurementBasis basis)
{
	StateVector out = state;
	if(basis == MeasurementBasis::Z)
	{
		return out;
	}
	const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
	for(uint32_t site = 0; site < state.n_sites; ++site)
	{
		if(basis == MeasurementBasis::X)
		{
			// Hadamard maps X -> Z.
			apply_1q_gate(out, site, inv_sqrt2, inv_sqrt2, inv_sqrt2, -inv_sqrt2);
		}
		else
		{
			// H * S-dagger maps Y -> Z.
			apply_1q_gate(out, site, inv_sqrt2, cx{0.0, -inv_sqrt2}, inv_sqrt2,
				cx{0.0, inv_sqrt2});
		}
	}
	return out;
}

std::vector<uint64_t> sample_bitstrings(const StateVector& state,
	MeasurementBasis basis, uint32_t n_shot, const RngStream& rng)
{
	if(n_shot < 1)
	{
		throw InputError("sample_bitstrings: n_shot must be >= 1");
	}
	const StateVector rotated = rotate_to_basis(state, basis);
	std::vector<double> cdf(rotated.dim());
	double acc = 0.0;
	for(uint64_t b = 0; b < rotated.dim(); ++b)
	{
		acc += std::norm(rotated.amps[b]);
		cdf[b] = acc;
	}

	std::vector<uint64_t> samples(n_shot);
	for(uint32_t s = 0; s < n_shot; ++s)
	{
		const double u = rng.uniform_at(s) * acc;
		const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
		samples[s] = static_cast<uint64_t>(
			std::min<ptrdiff_t>(it - cdf.begin(),
				static_cast<ptrdiff_t>(cdf.size()) - 1));
	}
	return samples;
}

double estimate_pauli_pair(const std::vector<uint64_t>& samples, uint32_t a,
	uint32_t b)
{
	if(samples.empty())
	{
		throw InputError("estimate_pauli_pair: empty sample list");
	}
	double acc = 0.0;
	for(uint64_t x : samples)
	{
		const double va = ((x >> a) & 1) ? -1.0 : 1.0;
		const double vb = ((x >> b) & 1) ? -1.0 : 1.0;
		acc += va * vb;
	}
	return acc / static_cast<double>(samples.size());
}

} // namespace hva

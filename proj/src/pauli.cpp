#include "hva/pauli.hpp"

#include "hva/errors.hpp"

#include <nlohmann/json.hpp>

#include <bit>

namespace hva
{

using cx = std::complex<double>;

namespace
{
void check_site(uint32_t n, uint32_t site)
{
	if(site >= n || n > 64)
	{
		throw InputError("Pauli site index out of range");
	}
}

void set_axis(PauliString& p, uint32_t site, char axis)
{
	const uint64_t bit = uint64_t{1} << site;
	switch(axis)
	{
	case 'X':
		p.x_mask |= bit;
		break;
	case 'Y':
		p.x_mask |= bit;
		p.z_mask |= bit;
		break;
	case 'Z':
		p.z_mask |= bit;
		break;
	case 'I':
		break;
	default:
		throw InputError("Pauli axis must be one of I, X, Y, Z");
	}
}
} // namespace

PauliString PauliString::single(uint32_t n, uint32_t site, char axis)
{
	check_site(n, site);
	PauliString p{n, 0, 0};
	set_axis(p, site, axis);
	return p;
}

PauliString PauliString::pair(uint32_t n, uint32_t a, uint32_t b, char axis)
{
	check_site(n, a);
	check_site(n, b);
	if(a == b)
	{
		throw InputError("PauliString::pair requires distinct sites");
	}
	PauliString p{n, 0, 0};
	set_axis(p, a, axis);
	set_axis(p, b, axis);
	return p;
}

PauliString PauliString::from_string(std::string_view s)
{
	if(s.empty() || s.size() > 64)
	{
		throw InputError("Pauli string text must have 1..64 letters");
	}
	PauliString p{static_cast<uint32_t>(s.size()), 0, 0};
	for(uint32_t i = 0; i < s.size(); ++i)
	{
		set_axis(p, i, s[i]);
	}
	return p;
}

std::string PauliString::to_string() const
{
	std::string out(n_sites, 'I');
	for(uint32_t i = 0; i < n_sites; ++i)
	{
		const bool x = (x_mask >> i) & 1;
		const bool z = (z_mask >> i) & 1;
		out[i] = x ? (z ? 'Y' : 'X') : (z ? 'Z' : 'I');
	}
	return out;
}

uint32_t PauliString::weight() const
{
	return static_cast<uint32_t>(std::popcount(support()));
}

uint32_t PauliString::y_count() const
{
	return static_cast<uint32_t>(std::popcount(x_mask & z_mask));
}

std::complex<double> PauliString::phase(uint64_t basis_index) const
{
	// Each Z/Y site contributes (-1)^bit; each Y site contributes a further i.
	static constexpr cx i_pow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
	const cx y_phase = i_pow[y_count() & 3];
	const bool neg = std::popcount(basis_index & z_mask) & 1;
	return neg ? -y_phase : y_phase;
}

bool commutes(const PauliString& p, const PauliString& q)
{
	if(p.n_sites != q.n_sites)
	{
		throw InputError("commutes: site-count mismatch");
	}
	const auto overlap =
		std::popcount(p.x_mask & q.z_mask) + std::popcount(p.z_mask & q.x_mask);
	return (overlap % 2) == 0;
}

Eigen::MatrixXcd dense_matrix(const PauliString& p)
{
	if(p.n_sites > dense_site_cap)
	{
		throw ResourceError("dense_matrix: site count above dense cap");
	}
	const uint64_t dim = uint64_t{1} << p.n_sites;
	Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(static_cast<long>(dim),
		static_cast<long>(dim));
	for(uint64_t b = 0; b < dim; ++b)
	{
		m(static_cast<long>(b ^ p.x_mask), static_cast<long>(b)) = p.phase(b);
	}
	return m;
}

void LocalHamiltonian::add_term(double coeff, const PauliString& s)
{
	if(s.n_sites != n_sites)
	{
		throw InputError("LocalHamiltonian::add_term: site-count mismatch");
	}
	for(auto& t : terms)
	{
		if(t.string == s)
		{
			t.coeff += coeff;
			return;
		}
	}
	terms.push_back(Term{coeff, s});
}

std::string LocalHamiltonian::to_json() const
{
	nlohmann::json j = nlohmann::json::array();
	for(const auto& t : terms)
	{
		j.push_back({{"coeff", t.coeff}, {"string", t.string.to_string()}});
	}
	return j.dump();
}

LocalHamiltonian LocalHamiltonian::from_json(std::string_view json_text)
{
	const auto j = nlohmann::json::parse(json_text);
	if(!j.is_array() || j.empty())
	{
		throw InputError("LocalHamiltonian::from_json: expected non-empty array");
	}
	const auto first = PauliString::from_string(
		j.front().at("string").get<std::string>());
	LocalHamiltonian h{first.n_sites};
	for(const auto& e : j)
	{
		h.add_term(e.at("coeff").get<double>(),
			PauliString::from_string(e.at("string").get<std::string>()));
	}
	return h;
}

Eigen::MatrixXcd dense_matrix(const LocalHamiltonian& h)
{
	if(h.n_sites > dense_site_cap)
	{
		throw ResourceError("dense_matrix: site count above dense cap");
	}
	const long dim = 1L << h.n_sites;
	Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
	for(const auto& t : h.terms)
	{
		const uint64_t udim = uint64_t{1} << h.n_sites;
		for(uint64_t b = 0; b < udim; ++b)
		{
			m(static_cast<long>(b ^ t.string.x_mask), static_cast<long>(b)) +=
				t.coeff * t.string.phase(b);
		}
	}
	return m;
}

LayerValidationReport validate_layer(const LocalHamiltonian& h,
	const Lattice& lattice, uint32_t k)
{
	if(h.n_sites != lattice.n_sites())
	{
		throw InputError("validate_layer: Hamiltonian/lattice size mismatch");
	}

	LayerValidationReport rep{true, true, true, 0, 0};
	std::vector<uint32_t> site_incidence(h.n_sites, 0);

	std::vector<const LocalHamiltonian::Term*> nonzero;
	for(const auto& t : h.terms)
	{
		if(t.coeff != 0.0)
		{
			nonzero.push_back(&t);
		}
	}
	rep.h_max_count = static_cast<uint32_t>(nonzero.size());

	for(size_t a = 0; a < nonzero.size(); ++a)
	{
		const auto& sa = nonzero[a]->string;
		for(size_t b = a + 1; b < nonzero.size(); ++b)
		{
			const auto& sb = nonzero[b]->string;
			if(!commutes(sa, sb))
			{
				rep.is_c1_commuting = false;
			}
			if(sa.support() == sb.support())
			{
				rep.is_c3_unique_support = false;
			}
		}

		if(sa.weight() > k)
		{
			rep.is_c2_klocal = false;
		}
		const uint64_t supp = sa.support();
		std::vector<uint32_t> sites;
		for(uint32_t i = 0; i < h.n_sites; ++i)
		{
			if((supp >> i) & 1)
			{
				sites.push_back(i);
				site_incidence[i] += 1;
			}
		}
		for(size_t i = 0; i < sites.size(); ++i)
		{
			for(size_t j = i + 1; j < sites.size(); ++j)
			{
				if(lattice.distance(sites[i], sites[j]) > k)
				{
					rep.is_c2_klocal = false;
				}
			}
		}
	}

	for(uint32_t c : site_incidence)
	{
		rep.j_strength = std::max(rep.j_strength, c);
	}
	return rep;
}

} // namespace hva

#pragma once

#include "hva/lattice.hpp"

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hva
{

inline constexpr uint32_t dense_site_cap = 12;

/// An N-site tensor product of {I, X, Y, Z}, stored as two site-indexed
/// bitmasks. A site with only the x bit carries X, only the z bit carries Z,
/// and both bits carry Y. The phase convention is fixed so the operator is
/// exactly the literal tensor product (Hermitian, squares to identity).
/// Site 0 maps to the least significant bit of a basis index.
struct PauliString
{
	uint32_t n_sites;
	uint64_t x_mask = 0;
	uint64_t z_mask = 0;

	static PauliString identity(uint32_t n) { return PauliString{n, 0, 0}; }
	static PauliString single(uint32_t n, uint32_t site, char axis);
	static PauliString pair(uint32_t n, uint32_t a, uint32_t b, char axis);

	/// Parse from site-ordered letters, e.g. "XIZY" (site 0 leftmost).
	static PauliString from_string(std::string_view s);
	[[nodiscard]] std::string to_string() const;

	[[nodiscard]] uint64_t support() const { return x_mask | z_mask; }
	[[nodiscard]] uint32_t weight() const;
	[[nodiscard]] uint32_t y_count() const;

	/// Phase of P|b> = phase * |b ^ x_mask> for a basis index b.
	[[nodiscard]] std::complex<double> phase(uint64_t basis_index) const;

	friend bool operator==(const PauliString&, const PauliString&) = default;
};

/// True iff the symplectic overlap parity |p.x & q.z| + |p.z & q.x| is even.
bool commutes(const PauliString& p, const PauliString& q);

/// Dense 2^n x 2^n matrix of the string; refuses n_sites > dense_site_cap.
Eigen::MatrixXcd dense_matrix(const PauliString& p);

/// Weighted sum of Pauli strings with real coefficients. Adding a term with
/// a string already present accumulates into its coefficient, so the term
/// list never holds duplicates.
struct LocalHamiltonian
{
	struct Term
	{
		double coeff;
		PauliString string;
	};

	uint32_t n_sites;
	std::vector<Term> terms;
	std::optional<uint32_t> locality_k;

	explicit LocalHamiltonian(uint32_t n) : n_sites{n} {}

	void add_term(double coeff, const PauliString& s);

	[[nodiscard]] std::string to_json() const;
	static LocalHamiltonian from_json(std::string_view json_text);
};

Eigen::MatrixXcd dense_matrix(const LocalHamiltonian& h);

/// Outcome of checking a layer Hamiltonian against the structural
/// requirements of the effective-Hamiltonian analysis: (C1) pairwise
/// commuting terms, (C2) k-locality on the lattice, (C3) unique support
/// per term. Also counts the term total and the per-site incidence maximum.
struct LayerValidationReport
{
	bool is_c1_commuting;
	bool is_c2_klocal;
	bool is_c3_unique_support;
	uint32_t h_max_count;
	uint32_t j_strength;

	[[nodiscard]] bool all_ok() const
	{
		return is_c1_commuting && is_c2_klocal && is_c3_unique_support;
	}
};

LayerValidationReport validate_layer(const LocalHamiltonian& h,
	const Lattice& lattice, uint32_t k);

} // namespace hva

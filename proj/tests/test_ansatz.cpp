#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"

#include "hva/ansatz.hpp"
#include "hva/errors.hpp"

#include <bit>
#include <cmath>
#include <numbers>

using namespace hva;

TEST_CASE("neel_state: two-amplitude cat states")
{
	const StateVector two = neel_state_ring(2);
	CHECK(std::abs(two.amps[0b01] - 1.0 / std::sqrt(2.0)) < 1e-15);
	CHECK(std::abs(two.amps[0b10] - 1.0 / std::sqrt(2.0)) < 1e-15);

	const auto lat = Lattice::ring(4);
	const StateVector neel = neel_state(lat);
	uint32_t nonzero = 0;
	for(const auto& a : neel.amps)
	{
		if(std::abs(a) > 0.0)
		{
			++nonzero;
			CHECK(std::abs(a) == doctest::Approx(1.0 / std::sqrt(2.0)));
		}
	}
	CHECK(nonzero == 2);

	LocalHamiltonian sum_z{4};
	for(uint32_t s = 0; s < 4; ++s)
	{
		sum_z.add_term(1.0, PauliString::single(4, s, 'Z'));
	}
	CHECK(expectation(neel, sum_z) == doctest::Approx(0.0));
	LocalHamiltonian zz{4};
	zz.add_term(1.0, PauliString::pair(4, 0, 1, 'Z'));
	CHECK(expectation(neel, zz) == doctest::Approx(-1.0));

	CHECK_THROWS_AS(neel_state(Lattice::ring(5)), InputError);
	CHECK_THROWS_AS(neel_state(Lattice::torus(3, 4)), InputError);
	CHECK(neel_state(Lattice::torus(4, 4)).n_sites == 16);
}

TEST_CASE("xyz_hva: structure counts and validation")
{
	const auto lat = Lattice::ring(4);
	const HvaSpec spec = xyz_hva(lat, 2);
	REQUIRE(spec.q() == 3);
	CHECK(spec.blocks_p == 2);
	for(const auto& layer : spec.layers)
	{
		CHECK(layer.terms.size() == 4);
		CHECK(validate_layer(layer, lat, 2).all_ok());
	}

	const StateVector psi = oracle::random_state(4, RngStream(1));
	const ParamSet zeros = ParamSet::Zero(2, 3);
	const StateVector out = apply_circuit(spec, zeros, psi);
	CHECK((oracle::as_vector(out) - oracle::as_vector(psi)).norm() < 1e-14);
}

TEST_CASE("apply_circuit: repetition equals duplicated blocks")
{
	const auto lat = Lattice::ring(4);
	const HvaSpec spec_r2 = xyz_hva(lat, 1, 2);
	const HvaSpec spec_p2 = xyz_hva(lat, 2);
	ParamSet one_block(1, 3);
	one_block << 0.3, -0.2, 0.8;
	ParamSet two_blocks(2, 3);
	two_blocks << 0.3, -0.2, 0.8, 0.3, -0.2, 0.8;

	const StateVector psi = oracle::random_state(4, RngStream(2));
	const StateVector a = apply_circuit(spec_r2, one_block, psi);
	const StateVector b = apply_circuit(spec_p2, two_blocks, psi);
	CHECK((oracle::as_vector(a) - oracle::as_vector(b)).norm() < 1e-12);
}

TEST_CASE("apply_circuit: r-fold composition identity")
{
	const auto lat = Lattice::ring(6);
	const HvaSpec spec_r3 = xyz_hva(lat, 2, 3);
	const HvaSpec spec_r1 = xyz_hva(lat, 2, 1);
	const ParamSet params =
		sample_params(InitScheme::random(), 2, 3, RngStream(3));

	const StateVector psi = oracle::random_state(6, RngStream(4));
	StateVector composed = psi;
	for(int rep = 0; rep < 3; ++rep)
	{
		apply_circuit_inplace(spec_r1, params, composed);
	}
	const StateVector direct = apply_circuit(spec_r3, params, psi);
	CHECK((oracle::as_vector(direct) - oracle::as_vector(composed)).norm()
		< 1e-10);
}

TEST_CASE("apply_circuit: dense ordered-product oracle, N = 6, p = 2")
{
	const auto lat = Lattice::ring(6);
	const HvaSpec spec = xyz_hva(lat, 2);
	const ParamSet params =
		sample_params(InitScheme::random(), 2, 3, RngStream(5));
	const StateVector psi = oracle::random_state(6, RngStream(6));

	const StateVector lib = apply_circuit(spec, params, psi);
	const Eigen::VectorXcd ora =
		oracle::dense_circuit(spec, params) * oracle::as_vector(psi);
	CHECK((oracle::as_vector(lib) - ora).norm() < 1e-9);
}

TEST_CASE("apply_circuit: adjoint undoes the circuit")
{
	const auto lat = Lattice::ring(4);
	const HvaSpec spec = xyz_hva(lat, 3, 2);
	const ParamSet params =
		sample_params(InitScheme::random(), 3, 3, RngStream(7));
	const StateVector psi = oracle::random_state(4, RngStream(8));
	StateVector round_trip = apply_circuit(spec, params, psi);
	apply_circuit_adjoint_inplace(spec, params, round_trip);
	CHECK((oracle::as_vector(round_trip) - oracle::as_vector(psi)).norm()
		< 1e-10);
}

TEST_CASE("apply_circuit: shape mismatch throws")
{
	const HvaSpec spec = xyz_hva(Lattice::ring(4), 2);
	StateVector psi{4};
	CHECK_THROWS_AS(apply_circuit(spec, ParamSet::Zero(1, 3), psi),
		InputError);
	StateVector wrong{3};
	CHECK_THROWS_AS(apply_circuit(spec, ParamSet::Zero(2, 3), wrong),
		InputError);
}

TEST_CASE("sample_params: scheme ranges and constraints")
{
	const ParamSet constrained = sample_params(
		InitScheme::constrained(std::numbers::pi / 8.0), 4, 3, RngStream(9));
	for(Eigen::Index i = 0; i < 4; ++i)
	{
		CHECK(constrained.row(i).sum()
			== doctest::Approx(std::numbers::pi / 8.0).epsilon(1e-12));
		CHECK(constrained.row(i).minCoeff() >= 0.0);
	}

	const ParamSet small =
		sample_params(InitScheme::small_eps(0.2), 3, 3, RngStream(10));
	CHECK(small.minCoeff() >= 0.0);
	CHECK(small.maxCoeff() < 0.2);

	const ParamSet constant = sample_params(
		InitScheme::constant(std::numbers::pi), 2, 3, RngStream(11));
	CHECK(constant.minCoeff() == doctest::Approx(std::numbers::pi));
	CHECK(constant.maxCoeff() == doctest::Approx(std::numbers::pi));

	const ParamSet random =
		sample_params(InitScheme::random(), 5, 3, RngStream(12));
	CHECK(random.minCoeff() >= 0.0);
	CHECK(random.maxCoeff() < 2.0 * std::numbers::pi);

	CHECK_THROWS_AS(
		sample_params(InitScheme::constrained(-1.0), 2, 3, RngStream(1)),
		InputError);
	CHECK_THROWS_AS(
		sample_params(InitScheme::small_eps(0.0), 2, 3, RngStream(1)),
		InputError);
	CHECK(InitScheme::default_T(8)
		== doctest::Approx(std::numbers::pi / 16.0));
}

TEST_CASE("constrained_cost: Heaviside gating")
{
	Eigen::MatrixXd free(2, 2);
	free << 0.1, 0.2, 0.05, 0.15;
	const double t = 0.5;
	CHECK(constrained_cost(-3.25, free, t) == doctest::Approx(-3.25));

	free(0, 0) = -0.01;
	CHECK(constrained_cost(-3.25, free, t) == 0.0);

	free(0, 0) = 0.4;
	free(0, 1) = 0.2; // block sum 0.6 > T
	CHECK(constrained_cost(-3.25, free, t) == 0.0);

	// Heaviside(0) = 1: block sum exactly T stays feasible.
	free(0, 0) = 0.3;
	free(0, 1) = 0.2;
	CHECK(constrained_cost(-3.25, free, t) == doctest::Approx(-3.25));

	Eigen::MatrixXd derived = derive_constrained_params(free, t);
	CHECK(derived.cols() == 3);
	CHECK(derived(0, 2) == doctest::Approx(0.0));
	CHECK(derived(1, 2) == doctest::Approx(t - 0.2));
}

TEST_CASE("magnetization sector is preserved when layers commute with sum Z")
{
	// One layer of XX+YY per edge plus one ZZ layer; both commute with the
	// total magnetization, so the Neel (zero-magnetization) sector is stable.
	const auto lat = Lattice::ring(6);
	const uint32_t n = 6;
	LocalHamiltonian hop{n};
	for(const auto& [a, b] : lat.edges())
	{
		hop.add_term(1.0, PauliString::pair(n, a, b, 'X'));
		hop.add_term(1.0, PauliString::pair(n, a, b, 'Y'));
	}
	LocalHamiltonian zz{n};
	for(const auto& [a, b] : lat.edges())
	{
		zz.add_term(1.0, PauliString::pair(n, a, b, 'Z'));
	}
	HvaSpec spec{lat, {hop, zz}, 2, 1};
	const ParamSet params = sample_params(
		InitScheme::constrained(InitScheme::default_T(n)), 2, 2,
		RngStream(13));
	const StateVector out = apply_circuit(spec, params, neel_state(lat));

	double out_of_sector = 0.0;
	for(uint64_t b = 0; b < out.dim(); ++b)
	{
		if(std::popcount(b) != 3)
		{
			out_of_sector += std::norm(out.amps[b]);
		}
	}
	CHECK(out_of_sector < 1e-20);
}

TEST_CASE("serialization round trips")
{
	const ParamSet params =
		sample_params(InitScheme::random(), 3, 4, RngStream(14));
	const ParamSet back = params_from_json(params_to_json(params));
	CHECK((params - back).norm() == 0.0);

	const HvaSpec spec = xyz_hva(Lattice::ring(4), 2, 3);
	CHECK(spec.to_json().find("\"r\":3") != std::string::npos);
}

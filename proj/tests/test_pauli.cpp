#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"

#include "hva/errors.hpp"
#include "hva/lattice.hpp"
#include "hva/pauli.hpp"
#include "hva/rng.hpp"

#include <vector>

using namespace hva;

TEST_CASE("commutes: basic pairs")
{
	const auto x0 = PauliString::single(2, 0, 'X');
	const auto z0 = PauliString::single(2, 0, 'Z');
	CHECK_FALSE(commutes(x0, z0));

	const auto xx = PauliString::pair(2, 0, 1, 'X');
	const auto zz = PauliString::pair(2, 0, 1, 'Z');
	CHECK(commutes(xx, zz));

	CHECK(commutes(PauliString::identity(2), xx));
	CHECK(commutes(PauliString::identity(2), z0));

	CHECK_THROWS_AS(commutes(PauliString::identity(2),
						PauliString::identity(3)),
		InputError);
}

TEST_CASE("commutes agrees with the dense commutator, weight <= 2, n = 4")
{
	std::vector<PauliString> strings;
	for(uint64_t x = 0; x < 16; ++x)
	{
		for(uint64_t z = 0; z < 16; ++z)
		{
			const PauliString p{4, x, z};
			if(p.weight() <= 2)
			{
				strings.push_back(p);
			}
		}
	}
	for(const auto& p : strings)
	{
		const Eigen::MatrixXcd pd = oracle::dense_string(p);
		for(const auto& q : strings)
		{
			const Eigen::MatrixXcd qd = oracle::dense_string(q);
			const double comm_norm = (pd * qd - qd * pd).norm();
			CHECK(commutes(p, q) == (comm_norm < 1e-12));
		}
	}
}

TEST_CASE("dense_matrix: single-site Y")
{
	const auto y = dense_matrix(PauliString::single(1, 0, 'Y'));
	CHECK(std::abs(y(0, 0)) < 1e-15);
	CHECK(std::abs(y(0, 1) - std::complex<double>{0, -1}) < 1e-15);
	CHECK(std::abs(y(1, 0) - std::complex<double>{0, 1}) < 1e-15);
	CHECK(std::abs(y(1, 1)) < 1e-15);
}

TEST_CASE("dense_matrix: matches the Kronecker oracle")
{
	for(const char* text : {"XZ", "XYZI", "YIZX", "ZZYY"})
	{
		const auto p = PauliString::from_string(text);
		const Eigen::MatrixXcd lib = dense_matrix(p);
		const Eigen::MatrixXcd ora = oracle::dense_string(p);
		CHECK((lib - ora).norm() < 1e-13);
	}
}

TEST_CASE("dense_matrix: random strings square to identity")
{
	RngStream rng(11);
	for(int trial = 0; trial < 100; ++trial)
	{
		const uint32_t n = 1 + static_cast<uint32_t>(rng.uniform(0.0, 6.0));
		const uint64_t mask = (uint64_t{1} << n) - 1;
		const PauliString p{n, rng.next_u64() & mask, rng.next_u64() & mask};
		const Eigen::MatrixXcd m = dense_matrix(p);
		const Eigen::MatrixXcd id =
			Eigen::MatrixXcd::Identity(m.rows(), m.cols());
		CHECK((m * m - id).norm() < 1e-12);
		CHECK((m - m.adjoint()).norm() < 1e-12);
	}
}

TEST_CASE("dense_matrix: refuses sizes above the cap")
{
	CHECK_THROWS_AS(dense_matrix(PauliString::identity(13)), ResourceError);
}

TEST_CASE("string round trip")
{
	const auto p = PauliString::from_string("XIZY");
	CHECK(p.to_string() == "XIZY");
	CHECK(p.weight() == 3);
	CHECK(p.y_count() == 1);
	CHECK_THROWS_AS(PauliString::from_string("XQ"), InputError);
}

TEST_CASE("LocalHamiltonian: add_term accumulates duplicates")
{
	LocalHamiltonian h{2};
	h.add_term(1.0, PauliString::pair(2, 0, 1, 'Z'));
	h.add_term(0.5, PauliString::pair(2, 0, 1, 'Z'));
	h.add_term(2.0, PauliString::single(2, 0, 'X'));
	REQUIRE(h.terms.size() == 2);
	CHECK(h.terms[0].coeff == doctest::Approx(1.5));
}

TEST_CASE("LocalHamiltonian: JSON round trip")
{
	LocalHamiltonian h{3};
	h.add_term(0.25, PauliString::from_string("XYZ"));
	h.add_term(-1.5, PauliString::from_string("ZIZ"));
	const auto h2 = LocalHamiltonian::from_json(h.to_json());
	REQUIRE(h2.terms.size() == 2);
	CHECK(h2.n_sites == 3);
	CHECK(h2.terms[0].coeff == doctest::Approx(0.25));
	CHECK(h2.terms[1].string == PauliString::from_string("ZIZ"));
}

TEST_CASE("validate_layer: ring ZZ layer")
{
	const auto lat = Lattice::ring(6);
	LocalHamiltonian h{6};
	for(const auto& [a, b] : lat.edges())
	{
		h.add_term(1.0, PauliString::pair(6, a, b, 'Z'));
	}
	const auto rep = validate_layer(h, lat, 2);
	CHECK(rep.all_ok());
	CHECK(rep.h_max_count == 6);
	CHECK(rep.j_strength == 2);
}

TEST_CASE("validate_layer: duplicate support fails C3")
{
	const auto lat = Lattice::ring(4);
	LocalHamiltonian h{4};
	h.add_term(1.0, PauliString::pair(4, 0, 1, 'X'));
	h.add_term(1.0, PauliString::pair(4, 0, 1, 'Z'));
	const auto rep = validate_layer(h, lat, 2);
	CHECK_FALSE(rep.is_c3_unique_support);
}

TEST_CASE("validate_layer: XYZ layers pass with k = 2 on ring and torus")
{
	for(const Lattice& lat : {Lattice::ring(6), Lattice::torus(3, 4)})
	{
		for(char axis : {'X', 'Y', 'Z'})
		{
			LocalHamiltonian h{lat.n_sites()};
			for(const auto& [a, b] : lat.edges())
			{
				h.add_term(1.0, PauliString::pair(lat.n_sites(), a, b, axis));
			}
			CHECK(validate_layer(h, lat, 2).all_ok());
		}
	}
}

TEST_CASE("lattice: ring adjacency and minimums")
{
	const auto r4 = Lattice::ring(4);
	const std::vector<std::pair<uint32_t, uint32_t>> expect{
		{0, 1}, {0, 3}, {1, 2}, {2, 3}};
	CHECK(r4.edges() == expect);
	CHECK(r4.distance(0, 3) == 1);
	CHECK(r4.distance(0, 2) == 2);

	CHECK(Lattice::ring(2).edges().size() == 1);
	CHECK_THROWS_AS(Lattice::ring(1), InputError);
}

TEST_CASE("lattice: torus edges and minimums")
{
	CHECK(Lattice::torus(4, 4).edges().size() == 32);
	CHECK_THROWS_AS(Lattice::torus(2, 2), InputError);
	CHECK_THROWS_AS(Lattice::torus(4, 2), InputError);

	const auto t = Lattice::torus(3, 3);
	CHECK(t.distance(0, 2) == 1);  // periodic wrap in x
	CHECK(t.distance(0, 8) == 2);  // (0,0) -> (2,2) with wrap
}

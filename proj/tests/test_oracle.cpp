#include <catch2/catch_amalgamated.hpp>

#include <random>

#include <calib/gen.hpp>
#include <calib/oracle.hpp>
#include <calib/plb.hpp>
#include <calib/validator.hpp>

#include "helpers.hpp"

using namespace calib;
using test::make_instance;

TEST_CASE("brute_single on tiny instances") {
	SECTION("one calibration suffices") {
		const Instance inst = make_instance({{0, 5, 2}}, SingleType{2});
		const SolveResult r = brute_single(inst);
		REQUIRE(r.status == SolveStatus::Feasible);
		CHECK(r.cost == Rational(1));
		CHECK(validate(inst, *r.schedule).empty());
	}
	SECTION("the release gap forces two") {
		const Instance inst = make_instance({{0, 2, 1}, {6, 12, 2}}, SingleType{3});
		const SolveResult r = brute_single(inst);
		REQUIRE(r.status == SolveStatus::Feasible);
		CHECK(r.cost == Rational(2));
		CHECK(validate(inst, *r.schedule).empty());
	}
	SECTION("overload is infeasible") {
		const Instance inst = make_instance({{0, 2, 2}, {0, 2, 1}}, SingleType{2});
		CHECK(brute_single(inst).status == SolveStatus::Infeasible);
	}
	SECTION("a single long job may need more than n calibrations") {
		const Instance inst = make_instance({{0, 3, 3}}, SingleType{1});
		const SolveResult r = brute_single(inst);
		REQUIRE(r.status == SolveStatus::Feasible);
		CHECK(r.cost == Rational(3));
	}
}

TEST_CASE("brute_multi reproduces the activation-time phenomenon") {
	const Instance fig1 = make_instance({{3, 4, 1}, {7, 8, 1}},
		test::multi(3, {CalibrationType(4, Rational(1))}));
	SECTION("recalibration at any time keeps the instance feasible") {
		const SolveResult r = brute_multi(fig1);
		REQUIRE(r.status == SolveStatus::Feasible);
		CHECK(r.cost == Rational(2));
		REQUIRE(r.schedule->calibrations.size() == 2);
		// the witness overlaps: the second calibration starts while the
		// first is still active
		const Time first = r.schedule->calibrations[0].start;
		const Time second = r.schedule->calibrations[1].start;
		CHECK(second > first);
		CHECK(second < first + 3 + 4);
		CHECK(validate(fig1, *r.schedule).empty());
	}
	SECTION("forbidding overlap makes it infeasible") {
		OracleConfig config;
		config.allow_overlap = false;
		CHECK(brute_multi(fig1, config).status == SolveStatus::Infeasible);
	}
}

TEST_CASE("brute_multi picks the cheaper covering type") {
	const Instance inst = make_instance({{0, 2, 1}, {0, 2, 1}},
		test::multi(0, {CalibrationType(1, Rational(1)), CalibrationType(2, Rational(3, 2))}));
	const SolveResult r = brute_multi(inst);
	REQUIRE(r.status == SolveStatus::Feasible);
	CHECK(r.cost == Rational(3, 2));
	CHECK(validate(inst, *r.schedule).empty());
}

TEST_CASE("single unit job costs the cheapest reachable type") {
	const Instance inst = make_instance({{0, 4, 1}},
		test::multi(1, {CalibrationType(1, Rational(2)), CalibrationType(3, Rational(3, 2))}));
	const SolveResult r = brute_multi(inst);
	REQUIRE(r.status == SolveStatus::Feasible);
	CHECK(r.cost == Rational(3, 2));
}

TEST_CASE("budget exhaustion raises") {
	const Instance inst = make_instance({{0, 2, 1}, {3, 9, 2}, {4, 12, 2}}, SingleType{2});
	OracleConfig config;
	config.budget = 2;
	CHECK_THROWS_AS(brute_single(inst, config), BudgetExceeded);
}

TEST_CASE("psi restriction loses nothing against unrestricted starts") {
	std::mt19937_64 rng(31);
	for (int trial = 0; trial < 40; ++trial) {
		GenParams params;
		params.n = 1 + static_cast<int>(rng() % 2);
		params.max_processing = 1 + static_cast<Time>(rng() % 2);
		params.horizon = 6;
		params.model = SingleType{1 + static_cast<Time>(rng() % 3)};
		params.seed = rng();
		const Instance inst = gen_feasible(params);

		Time horizon = 0;
		for (const Job& j : inst.jobs) horizon = std::max(horizon, j.deadline);
		OracleConfig everywhere;
		everywhere.start_candidates = std::vector<Time>{};
		for (Time t = 0; t <= horizon; ++t) everywhere.start_candidates->push_back(t);

		const SolveResult restricted = brute_single(inst);
		const SolveResult unrestricted = brute_single(inst, everywhere);
		REQUIRE(restricted.status == SolveStatus::Feasible);
		REQUIRE(unrestricted.status == SolveStatus::Feasible);
		CHECK(restricted.cost == unrestricted.cost);
	}
}

TEST_CASE("theta restriction loses nothing against unrestricted starts") {
	std::mt19937_64 rng(37);
	int done = 0;
	while (done < 40) {
		const int n = 1 + static_cast<int>(rng() % 2);
		const Time lambda = static_cast<Time>(rng() % 3);
		std::vector<Job> jobs;
		for (int i = 0; i < n; ++i) {
			const Time r = static_cast<Time>(rng() % 4);
			const Time d = r + 1 + static_cast<Time>(rng() % 4);
			jobs.emplace_back(i + 1, r, d, 1);
		}
		std::vector<CalibrationType> types{CalibrationType(1 + static_cast<Time>(rng() % 3),
			Rational(1 + static_cast<std::int64_t>(rng() % 3), 2))};
		const Instance inst(jobs, MultiType{lambda, types});

		Time horizon = 0;
		for (const Job& j : inst.jobs) horizon = std::max(horizon, j.deadline);
		OracleConfig everywhere;
		everywhere.start_candidates = std::vector<Time>{};
		for (Time t = 0; t <= horizon; ++t) everywhere.start_candidates->push_back(t);

		const SolveResult restricted = brute_multi(inst);
		const SolveResult unrestricted = brute_multi(inst, everywhere);
		REQUIRE(restricted.status == unrestricted.status);
		if (restricted.status == SolveStatus::Feasible) {
			CHECK(restricted.cost == unrestricted.cost);
			++done;
		}
	}
}

TEST_CASE("brute_single matches plb on random instances") {
	std::mt19937_64 rng(41);
	for (int trial = 0; trial < 60; ++trial) {
		GenParams params;
		params.n = 1 + static_cast<int>(rng() % 3);
		params.max_processing = 1 + static_cast<Time>(rng() % 3);
		params.horizon = params.n * params.max_processing + static_cast<Time>(rng() % 8);
		params.model = SingleType{1 + static_cast<Time>(rng() % 4)};
		params.seed = rng();
		const Instance inst = gen_feasible(params);
		const SolveResult plb = plb_solve(inst);
		const SolveResult brute = brute_single(inst);
		REQUIRE(plb.status == SolveStatus::Feasible);
		REQUIRE(brute.status == SolveStatus::Feasible);
		CHECK(plb.cost == brute.cost);
	}
}

TEST_CASE("matching feasibility agrees with EDF over explicit slots") {
	std::mt19937_64 rng(43);
	for (int trial = 0; trial < 300; ++trial) {
		const int n = 1 + static_cast<int>(rng() % 5);
		std::vector<detail::UnitPiece> pieces;
		for (int i = 0; i < n; ++i) {
			const Time r = static_cast<Time>(rng() % 8);
			const Time d = r + 1 + static_cast<Time>(rng() % 5);
			pieces.push_back({r, d, i + 1});
		}
		std::vector<Time> slots;
		for (Time s = 0; s < 14; ++s)
			if (rng() % 2) slots.push_back(s);
		const bool by_matching = detail::match_pieces(pieces, slots).has_value();
		const bool by_edf = edf_feasible_on_slots(pieces, slots);
		CHECK(by_matching == by_edf);
	}
}

TEST_CASE("raising the calibration bound beyond the default changes nothing") {
	std::mt19937_64 rng(47);
	for (int trial = 0; trial < 30; ++trial) {
		const int n = 1 + static_cast<int>(rng() % 3);
		std::vector<Job> jobs;
		for (int i = 0; i < n; ++i) {
			const Time r = static_cast<Time>(rng() % 4);
			const Time d = r + 1 + static_cast<Time>(rng() % 5);
			jobs.emplace_back(i + 1, r, d, 1);
		}
		const Instance inst(jobs,
			MultiType{static_cast<Time>(rng() % 2), {CalibrationType(2, Rational(1))}});
		const SolveResult def = brute_multi(inst);
		OracleConfig wider;
		wider.max_calibrations = n + 2;
		const SolveResult wide = brute_multi(inst, wider);
		REQUIRE(def.status == wide.status);
		if (def.status == SolveStatus::Feasible) CHECK(def.cost == wide.cost);
	}
}

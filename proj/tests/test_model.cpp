#include <catch2/catch_amalgamated.hpp>

#include <random>

#include <calib/model.hpp>
#include <calib/rational.hpp>

#include "helpers.hpp"

using namespace calib;
using test::make_instance;

TEST_CASE("job construction enforces its window") {
	CHECK_NOTHROW(Job(1, 0, 5, 2));
	CHECK_THROWS_AS(Job(1, 0, 2, 3), std::invalid_argument); // r + p > d
	CHECK_THROWS_AS(Job(1, 3, 3, 1), std::invalid_argument);
	CHECK_THROWS_AS(Job(1, 0, 5, 0), std::invalid_argument);
	CHECK_THROWS_AS(Job(1, -1, 5, 1), std::invalid_argument);
}

TEST_CASE("calibration type invariants") {
	CHECK_THROWS_AS(CalibrationType(0, Rational(1)), std::invalid_argument);
	CHECK_THROWS_AS(CalibrationType(2, Rational(0)), std::invalid_argument);
	CHECK_THROWS_AS(CalibrationType(2, Rational(-1, 2)), std::invalid_argument);
}

TEST_CASE("instance rejects duplicate job ids") {
	std::vector<Job> jobs{Job(1, 0, 3, 1), Job(1, 0, 4, 1)};
	CHECK_THROWS_AS(Instance(std::move(jobs), SingleType{2}), std::invalid_argument);
}

TEST_CASE("total_processing") {
	CHECK(total_processing(make_instance({{0, 5, 2}}, SingleType{2})) == 2);
	CHECK(total_processing(make_instance({{0, 5, 1}, {0, 5, 2}}, SingleType{2})) == 3);
	CHECK(total_processing(std::vector<Job>{}) == 0);
}

TEST_CASE("effective_window") {
	SECTION("single type is [start, start+T)") {
		const CalibrationModel m = SingleType{3};
		CHECK(effective_window({1, 0}, m) == Interval{1, 4});
	}
	SECTION("activation consumes the front of the calibration") {
		const CalibrationModel m = test::multi(3, {CalibrationType(4, Rational(1))});
		CHECK(effective_window({0, 0}, m) == Interval{3, 7});
		CHECK(effective_window({4, 0}, m) == Interval{7, 11});
	}
	SECTION("bad type index is a structural error") {
		const CalibrationModel m = SingleType{3};
		CHECK_THROWS_AS(effective_window({0, 1}, m), std::invalid_argument);
		const CalibrationModel mm = test::multi(0, {CalibrationType(2, Rational(1))});
		CHECK_THROWS_AS(effective_window({0, 2}, mm), std::invalid_argument);
	}
}

TEST_CASE("single type converts to the equivalent multi model") {
	const CalibrationModel single = SingleType{4};
	const MultiType converted = as_multi(single);
	CHECK(converted.activation == 0);
	REQUIRE(converted.types.size() == 1);
	CHECK(converted.types[0].length == 4);
	CHECK(converted.types[0].cost == Rational(1));
	for (Time start = 0; start <= 25; ++start)
		CHECK(effective_window({start, 0}, single) ==
			effective_window({start, 0}, CalibrationModel(converted)));
}

TEST_CASE("edf feasibility precheck") {
	auto jobs = [](const std::vector<std::array<Time, 3>>& triples) {
		std::vector<Job> out;
		int id = 1;
		for (const auto& t : triples) out.emplace_back(id++, t[0], t[1], t[2]);
		return out;
	};
	CHECK(edf_feasible_unconstrained(jobs({{0, 2, 2}})));
	CHECK_FALSE(edf_feasible_unconstrained(jobs({{0, 2, 2}, {0, 2, 1}})));
	CHECK(edf_feasible_unconstrained(jobs({{0, 2, 1}, {1, 2, 1}})));
	CHECK(edf_feasible_unconstrained({}));

	SECTION("machine blocked before a start time") {
		CHECK(edf_feasible_from(jobs({{0, 4, 2}}), 2));
		CHECK_FALSE(edf_feasible_from(jobs({{0, 4, 2}}), 3));
	}

	SECTION("removing a job never breaks feasibility") {
		std::mt19937_64 rng(7);
		for (int trial = 0; trial < 200; ++trial) {
			std::vector<Job> set;
			const int n = 1 + static_cast<int>(rng() % 5);
			for (int i = 0; i < n; ++i) {
				const Time r = static_cast<Time>(rng() % 10);
				const Time p = 1 + static_cast<Time>(rng() % 3);
				const Time d = r + p + static_cast<Time>(rng() % 6);
				set.emplace_back(i + 1, r, d, p);
			}
			if (!edf_feasible_unconstrained(set)) continue;
			for (std::size_t drop = 0; drop < set.size(); ++drop) {
				std::vector<Job> fewer = set;
				fewer.erase(fewer.begin() + static_cast<std::ptrdiff_t>(drop));
				CHECK(edf_feasible_unconstrained(fewer));
			}
		}
	}
}

TEST_CASE("rational arithmetic is exact") {
	CHECK(Rational(3, 2) + Rational(3, 2) == Rational(3));
	CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
	CHECK(Rational(3, 2) < Rational(2));
	CHECK(Rational(3, 2).to_string() == "1.5");
	CHECK(Rational(3, 4).to_string() == "0.75");
	CHECK(Rational(7).to_string() == "7");
	CHECK(Rational(1, 3).to_string() == "1/3");
	CHECK(Rational::parse("1.5") == Rational(3, 2));
	CHECK(Rational::parse("0.25") == Rational(1, 4));
	CHECK(Rational::parse("3") == Rational(3));
	CHECK(Rational::parse("3/2") == Rational(3, 2));
	CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
	CHECK_THROWS_AS(Rational::parse("1.x"), std::invalid_argument);
}

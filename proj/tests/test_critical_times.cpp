#include <catch2/catch_amalgamated.hpp>

#include <random>

#include <calib/critical_times.hpp>

#include "helpers.hpp"

using namespace calib;

namespace {

	std::vector<Job> jobs_rd(const std::vector<std::pair<Time, Time>>& rd, Time p = 1) {
		std::vector<Job> out;
		int id = 1;
		for (const auto& [r, d] : rd) out.emplace_back(id++, r, d, p);
		return out;
	}

} // namespace

TEST_CASE("psi expands [d_i - P, d_i] per job") {
	CHECK(build_psi(jobs_rd({{0, 5}}, 2)) == std::vector<Time>{3, 4, 5});
	CHECK(build_psi(jobs_rd({{0, 2}, {0, 3}})) == std::vector<Time>{0, 1, 2, 3});
	// d=1, P=3: negative candidates snap to 0
	CHECK(build_psi({Job(1, 0, 1, 1), Job(2, 0, 4, 2)}) == std::vector<Time>{0, 1, 2, 3, 4});
	CHECK(build_psi(jobs_rd({{0, 1}}, 1)) == std::vector<Time>{0, 1});
	CHECK_THROWS_AS(build_psi({}), std::invalid_argument);
}

TEST_CASE("theta expands d_i - j*lambda - h") {
	CHECK(build_theta(jobs_rd({{0, 4}}), 2) == std::vector<Time>{1, 2, 3, 4});
	CHECK(build_theta(jobs_rd({{0, 4}}), 0) == std::vector<Time>{3, 4});
	CHECK(build_theta(jobs_rd({{0, 3}, {0, 4}}), 1) == std::vector<Time>{0, 1, 2, 3, 4});
	CHECK_THROWS_AS(build_theta({}, 1), std::invalid_argument);
}

TEST_CASE("phi joins shifted theta with the release grid") {
	CHECK(build_phi(jobs_rd({{0, 4}}), {3, 4}) == std::vector<Time>{0, 1, 3, 4, 5});
	CHECK(build_phi(jobs_rd({{0, 2}}), {1, 2}) == std::vector<Time>{0, 1, 2, 3});
	SECTION("release part contributes r_i..r_i+n") {
		const auto phi = build_phi(jobs_rd({{0, 9}, {5, 9}}), {});
		CHECK(phi == std::vector<Time>{0, 1, 2, 5, 6, 7});
	}
}

TEST_CASE("phi equals its rewritten form when min release is 0") {
	std::mt19937_64 rng(11);
	for (int trial = 0; trial < 300; ++trial) {
		const int n = 1 + static_cast<int>(rng() % 6);
		const Time lambda = static_cast<Time>(rng() % 5);
		std::vector<Job> jobs;
		Time rmin = -1;
		for (int i = 0; i < n; ++i) {
			const Time r = static_cast<Time>(rng() % 12);
			const Time d = r + 1 + static_cast<Time>(rng() % 15);
			jobs.emplace_back(i + 1, r, d, 1);
			rmin = rmin < 0 ? r : std::min(rmin, r);
		}
		for (Job& j : jobs) // normalize so the earliest release is 0
			j = Job(j.id, j.release - rmin, j.deadline - rmin, j.processing);
		const auto via_theta = build_phi(jobs, build_theta(jobs, lambda));
		const auto rewritten = build_phi_rewritten(jobs, lambda);
		REQUIRE(via_theta == rewritten);
	}
}

TEST_CASE("phi via clipped theta is always a superset of the rewritten form") {
	std::mt19937_64 rng(12);
	for (int trial = 0; trial < 200; ++trial) {
		const int n = 1 + static_cast<int>(rng() % 4);
		const Time lambda = static_cast<Time>(rng() % 30);
		std::vector<Job> jobs;
		for (int i = 0; i < n; ++i) {
			const Time r = static_cast<Time>(rng() % 40);
			const Time d = r + 1 + static_cast<Time>(rng() % 60);
			jobs.emplace_back(i + 1, r, d, 1);
		}
		const auto via_theta = build_phi(jobs, build_theta(jobs, lambda));
		const auto rewritten = build_phi_rewritten(jobs, lambda);
		CHECK(std::includes(via_theta.begin(), via_theta.end(), rewritten.begin(), rewritten.end()));
	}
}

TEST_CASE("set sizes stay within their cubic bounds") {
	std::mt19937_64 rng(13);
	for (int n = 1; n <= 20; ++n) {
		const Time lambda = static_cast<Time>(rng() % 4);
		std::vector<Job> jobs;
		for (int i = 0; i < n; ++i) {
			const Time r = static_cast<Time>(rng() % 30);
			const Time d = r + 1 + static_cast<Time>(rng() % 40);
			jobs.emplace_back(i + 1, r, d, 1);
		}
		const auto theta = build_theta(jobs, lambda);
		const auto phi = build_phi(jobs, theta);
		const std::size_t nn = static_cast<std::size_t>(n);
		CHECK(theta.size() <= nn * (nn + 1) * (nn + 1));
		CHECK(phi.size() <= (nn + 1) * theta.size() + nn * (nn + 1));
	}
}

TEST_CASE("sets are sorted and duplicate-free") {
	const auto jobs = jobs_rd({{0, 7}, {2, 9}, {1, 4}});
	for (const auto& set : {build_psi(jobs), build_theta(jobs, 2), build_phi(jobs, build_theta(jobs, 2))}) {
		CHECK(std::is_sorted(set.begin(), set.end()));
		CHECK(std::adjacent_find(set.begin(), set.end()) == set.end());
		for (Time t : set) CHECK(t >= 0);
	}
}

#ifndef CALIB_TEST_HELPERS_HPP
#define CALIB_TEST_HELPERS_HPP

#include <array>
#include <vector>

#include <calib/model.hpp>

namespace calib::test {

	// (release, deadline, processing) triples with ids 1..n
	inline Instance make_instance(const std::vector<std::array<Time, 3>>& triples,
		CalibrationModel model) {
		std::vector<Job> jobs;
		int id = 1;
		for (const auto& t : triples) jobs.emplace_back(id++, t[0], t[1], t[2]);
		return Instance(std::move(jobs), std::move(model));
	}

	inline MultiType multi(Time lambda, std::vector<CalibrationType> types) {
		return MultiType{lambda, std::move(types)};
	}

} // namespace calib::test

#endif

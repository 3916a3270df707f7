#ifndef CALIB_GEN_HPP
#define CALIB_GEN_HPP

#include <algorithm>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "model.hpp"

namespace calib {

	/// Parameters for the seeded instance generator. Feasibility is obtained
	/// by construction: disjoint execution slots are planted on the timeline
	/// first and every job's window is grown around its slot, so the planted
	/// slots witness a feasible schedule.
	struct GenParams {
		int n = 4;
		Time max_processing = 1;      // 1 for unit-job variants
		Time horizon = 20;
		CalibrationModel model = SingleType{2};
		std::uint64_t seed = 0;
		double density = 0.5;         // 1.0 = windows equal the planted slots
		bool allow_infeasible = false; // skip the slot-containment step
	};

	namespace detail {

		// std::uniform_int_distribution is implementation-defined; modulo
		// reduction keeps instances identical across platforms
		inline Time draw(std::mt19937_64& rng, Time lo, Time hi) {
			if (hi <= lo) return lo;
			return lo + static_cast<Time>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
		}

	} // namespace detail

	inline Instance gen_feasible(const GenParams& params) {
		if (params.n < 0 || params.max_processing < 1 || params.density < 0.0 || params.density > 1.0)
			throw std::invalid_argument("gen: bad parameters");
		if (params.horizon < static_cast<Time>(params.n) * params.max_processing)
			throw std::invalid_argument("gen: horizon below n * max_processing");

		std::mt19937_64 rng(params.seed);
		std::vector<Time> lengths;
		Time total = 0;
		for (int i = 0; i < params.n; ++i) {
			lengths.push_back(detail::draw(rng, 1, params.max_processing));
			total += lengths.back();
		}

		std::vector<Job> jobs;
		if (params.allow_infeasible) {
			for (int i = 0; i < params.n; ++i) {
				const Time p = lengths[static_cast<std::size_t>(i)];
				const Time r = detail::draw(rng, 0, params.horizon - p);
				const Time d = detail::draw(rng, r + p, params.horizon);
				jobs.emplace_back(i + 1, r, d, p);
			}
			return Instance(std::move(jobs), params.model);
		}

		// scatter the free space into gaps between consecutive slots
		const Time slack_total = params.horizon - total;
		std::vector<Time> gap_points;
		for (int i = 0; i < params.n; ++i) gap_points.push_back(detail::draw(rng, 0, slack_total));
		std::sort(gap_points.begin(), gap_points.end());

		const Time window_slack =
			static_cast<Time>((1.0 - params.density) * static_cast<double>(params.horizon) / 4.0);
		Time cursor = 0;
		Time used_gap = 0;
		for (int i = 0; i < params.n; ++i) {
			cursor += gap_points[static_cast<std::size_t>(i)] - used_gap;
			used_gap = gap_points[static_cast<std::size_t>(i)];
			const Time p = lengths[static_cast<std::size_t>(i)];
			const Time start = cursor;
			cursor += p;
			const Time r = std::max<Time>(0, start - detail::draw(rng, 0, window_slack));
			const Time d = std::min(params.horizon, start + p + detail::draw(rng, 0, window_slack));
			jobs.emplace_back(i + 1, r, d, p);
		}
		return Instance(std::move(jobs), params.model);
	}

} // namespace calib

#endif

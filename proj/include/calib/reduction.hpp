#ifndef CALIB_REDUCTION_HPP
#define CALIB_REDUCTION_HPP

#include <stdexcept>
#include <vector>

#include "dp.hpp"
#include "model.hpp"
#include "oracle.hpp"

namespace calib {

	/// Unbounded Subset Sum: items with values kappa_j, target V, each item
	/// usable any number of times.
	struct USSInstance {
		std::vector<Time> items;
		Time target = 1;

		USSInstance() = default;
		USSInstance(std::vector<Time> items_, Time target_)
			: items(std::move(items_)), target(target_) {
			if (target < 1) throw std::invalid_argument("uss target must be >= 1");
			for (Time k : items)
				if (k < 1) throw std::invalid_argument("uss item values must be >= 1");
		}
	};

	/// Reachability table over 0..V; the independent decider the
	/// equivalence check leans on.
	inline bool uss_solve(const USSInstance& instance) {
		std::vector<char> reachable(static_cast<std::size_t>(instance.target) + 1, 0);
		reachable[0] = 1;
		for (Time s = 1; s <= instance.target; ++s)
			for (Time k : instance.items)
				if (k <= s && reachable[static_cast<std::size_t>(s - k)]) {
					reachable[static_cast<std::size_t>(s)] = 1;
					break;
				}
		return reachable[static_cast<std::size_t>(instance.target)] != 0;
	}

	/// The hardness construction: one calibration type (length kappa_j,
	/// cost kappa_j) per item, instantaneous calibrations, and V unit jobs
	/// filling [0, V). Unit jobs keep the instance inside dp_solve's domain.
	inline Instance reduce_to_scheduling(const USSInstance& instance) {
		if (instance.items.empty()) throw std::invalid_argument("uss instance without items");
		MultiType model;
		model.activation = 0;
		for (Time k : instance.items) model.types.emplace_back(k, Rational(k));
		std::vector<Job> jobs;
		for (Time i = 0; i < instance.target; ++i)
			jobs.emplace_back(static_cast<int>(i) + 1, 0, instance.target, 1);
		return Instance(std::move(jobs), std::move(model));
	}

	enum class ReductionSolver { Dp, BruteMulti };

	/// Confirms that USS feasibility coincides with "the reduced scheduling
	/// instance has optimal cost exactly V".
	inline bool check_equivalence(const USSInstance& instance,
		ReductionSolver solver = ReductionSolver::Dp, const OracleConfig& oracle_config = {}) {
		const bool uss = uss_solve(instance);
		const Instance reduced = reduce_to_scheduling(instance);
		const SolveResult result = solver == ReductionSolver::Dp
			? dp_solve(reduced)
			: brute_multi(reduced, oracle_config);
		const bool schedule_cost_is_target =
			result.status == SolveStatus::Feasible && result.cost == Rational(instance.target);
		return uss == schedule_cost_is_target;
	}

} // namespace calib

#endif

#ifndef CALIB_MODEL_HPP
#define CALIB_MODEL_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "rational.hpp"

namespace calib {

	/// Abstract time unit. All dates in the model are non-negative integers;
	/// critical-time constructions stay integral for integral inputs, so no
	/// fractional time is ever needed.
	using Time = std::int64_t;

	struct Interval {
		Time begin = 0;
		Time end = 0; // half-open [begin, end)
		bool operator==(const Interval&) const = default;
	};

	/// A test to run: release date r, deadline d, processing time p.
	/// Construction rejects jobs that cannot fit their own window.
	struct Job {
		int id = 0;
		Time release = 0;
		Time deadline = 0;
		Time processing = 1;

		Job() = default;
		Job(int id_, Time release_, Time deadline_, Time processing_)
			: id(id_), release(release_), deadline(deadline_), processing(processing_) {
			if (release < 0) throw std::invalid_argument("job " + std::to_string(id) + ": negative release");
			if (processing < 1) throw std::invalid_argument("job " + std::to_string(id) + ": processing must be >= 1");
			if (release + processing > deadline)
				throw std::invalid_argument("job " + std::to_string(id) + ": release + processing exceeds deadline");
		}
	};

	/// One available calibration mode: the machine stays usable for `length`
	/// time units at price `cost`.
	struct CalibrationType {
		Time length = 1;
		Rational cost = 1;

		CalibrationType() = default;
		CalibrationType(Time length_, Rational cost_) : length(length_), cost(cost_) {
			if (length < 1) throw std::invalid_argument("calibration length must be >= 1");
			if (!(cost > Rational(0))) throw std::invalid_argument("calibration cost must be positive");
		}
	};

	/// Classic single-type machine: instantaneous calibration, stays
	/// calibrated for T units, unit cost per calibration.
	struct SingleType {
		Time T = 1;
	};

	/// K calibration types sharing an activation time: starting a calibration
	/// at t blocks the machine during [t, t+lambda) and makes it usable during
	/// [t+lambda, t+lambda+length_k).
	struct MultiType {
		Time activation = 0; // lambda
		std::vector<CalibrationType> types;
	};

	using CalibrationModel = std::variant<SingleType, MultiType>;

	inline bool is_single(const CalibrationModel& m) { return std::holds_alternative<SingleType>(m); }

	/// SingleType(T) is semantically MultiType(lambda=0, one type (T, cost 1)).
	inline MultiType as_multi(const CalibrationModel& m) {
		if (const auto* s = std::get_if<SingleType>(&m))
			return MultiType{0, {CalibrationType(s->T, Rational(1))}};
		return std::get<MultiType>(m);
	}

	inline std::size_t type_count(const CalibrationModel& m) {
		return is_single(m) ? 1 : std::get<MultiType>(m).types.size();
	}

	struct Instance {
		std::vector<Job> jobs;
		CalibrationModel model = SingleType{1};

		Instance() = default;
		Instance(std::vector<Job> jobs_, CalibrationModel model_)
			: jobs(std::move(jobs_)), model(std::move(model_)) {
			std::set<int> seen;
			for (const Job& j : jobs)
				if (!seen.insert(j.id).second)
					throw std::invalid_argument("duplicate job id " + std::to_string(j.id));
			if (const auto* mt = std::get_if<MultiType>(&model)) {
				if (mt->types.empty()) throw std::invalid_argument("multi-type model needs at least one type");
				if (mt->activation < 0) throw std::invalid_argument("negative activation time");
			} else if (std::get<SingleType>(model).T < 1) {
				throw std::invalid_argument("calibration length T must be >= 1");
			}
		}
	};

	/// A paid calibration: starts at `start`, type index into the model
	/// (always 0 for SingleType).
	struct CalibrationEvent {
		Time start = 0;
		int type_index = 0;
	};

	/// A maximal run of one job's execution; preempted jobs appear as
	/// several segments.
	struct Segment {
		int job_id = 0;
		Time start = 0;
		Time end = 0;

		Segment() = default;
		Segment(int job_id_, Time start_, Time end_) : job_id(job_id_), start(start_), end(end_) {
			if (start >= end) throw std::invalid_argument("segment must have positive length");
		}
	};

	struct Schedule {
		std::vector<CalibrationEvent> calibrations;
		std::vector<Segment> segments;
		Rational total_cost = 0;
	};

	enum class SolveStatus { Feasible, Infeasible };

	struct SolveResult {
		SolveStatus status = SolveStatus::Infeasible;
		Rational cost = 0;                  // meaningful iff feasible
		std::optional<Schedule> schedule;   // witness iff feasible

		static SolveResult infeasible() { return SolveResult{}; }
		static SolveResult feasible(Rational cost, Schedule schedule) {
			SolveResult r;
			r.status = SolveStatus::Feasible;
			r.cost = cost;
			r.schedule = std::move(schedule);
			return r;
		}
	};

	inline Time total_processing(const std::vector<Job>& jobs) {
		Time p = 0;
		for (const Job& j : jobs) p += j.processing;
		return p;
	}

	inline Time total_processing(const Instance& instance) { return total_processing(instance.jobs); }

	/// Usable machine window produced by one calibration event.
	inline Interval effective_window(const CalibrationEvent& event, const CalibrationModel& model) {
		if (const auto* s = std::get_if<SingleType>(&model)) {
			if (event.type_index != 0) throw std::invalid_argument("single-type model has only type 0");
			return {event.start, event.start + s->T};
		}
		const auto& mt = std::get<MultiType>(model);
		if (event.type_index < 0 || static_cast<std::size_t>(event.type_index) >= mt.types.size())
			throw std::invalid_argument("calibration type index out of range");
		const Time ready = event.start + mt.activation;
		return {ready, ready + mt.types[static_cast<std::size_t>(event.type_index)].length};
	}

	namespace detail {

		// Preemptive EDF on a machine that is continuously available from
		// time `from`. Event-driven: advance to the next release or the
		// running job's completion, whichever comes first.
		inline bool edf_feasible_impl(const std::vector<Job>& jobs, Time from) {
			struct Item { Time deadline; int id; Time remaining; };
			auto later = [](const Item& a, const Item& b) {
				return a.deadline != b.deadline ? a.deadline > b.deadline : a.id > b.id;
			};
			std::vector<Job> byRelease = jobs;
			std::sort(byRelease.begin(), byRelease.end(), [](const Job& a, const Job& b) {
				return a.release != b.release ? a.release < b.release : a.id < b.id;
			});
			std::priority_queue<Item, std::vector<Item>, decltype(later)> ready(later);
			std::size_t next = 0;
			Time now = from;
			while (next < byRelease.size() || !ready.empty()) {
				if (ready.empty()) {
					now = std::max(now, byRelease[next].release);
				}
				while (next < byRelease.size() && byRelease[next].release <= now) {
					const Job& j = byRelease[next++];
					ready.push({j.deadline, j.id, j.processing});
				}
				Item cur = ready.top();
				ready.pop();
				const Time horizon = next < byRelease.size() ? byRelease[next].release : now + cur.remaining;
				const Time step = std::min(cur.remaining, std::max<Time>(horizon - now, 1));
				now += step;
				cur.remaining -= step;
				if (cur.remaining == 0) {
					if (now > cur.deadline) return false;
				} else {
					if (now >= cur.deadline) return false; // cannot finish in time
					ready.push(cur);
				}
			}
			return true;
		}

	} // namespace detail

	/// Necessary condition for any calibrated schedule: preemptive EDF on an
	/// always-available machine meets every deadline.
	inline bool edf_feasible_unconstrained(const std::vector<Job>& jobs) {
		if (jobs.empty()) return true;
		Time first = jobs.front().release;
		for (const Job& j : jobs) first = std::min(first, j.release);
		return detail::edf_feasible_impl(jobs, first);
	}

	/// Same check with the machine blocked before `from`.
	inline bool edf_feasible_from(const std::vector<Job>& jobs, Time from) {
		return detail::edf_feasible_impl(jobs, from);
	}

} // namespace calib

#endif

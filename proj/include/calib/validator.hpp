#ifndef CALIB_VALIDATOR_HPP
#define CALIB_VALIDATOR_HPP

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "model.hpp"

namespace calib {

	enum class ViolationKind {
		JobBeforeRelease,
		JobAfterDeadline,
		ProcessingMismatch,
		SegmentOverlap,
		UncalibratedExecution,
		BadCost,
		UnknownJob,
		BadCalibrationType,
	};

	inline const char* to_string(ViolationKind kind) {
		switch (kind) {
			case ViolationKind::JobBeforeRelease: return "JobBeforeRelease";
			case ViolationKind::JobAfterDeadline: return "JobAfterDeadline";
			case ViolationKind::ProcessingMismatch: return "ProcessingMismatch";
			case ViolationKind::SegmentOverlap: return "SegmentOverlap";
			case ViolationKind::UncalibratedExecution: return "UncalibratedExecution";
			case ViolationKind::BadCost: return "BadCost";
			case ViolationKind::UnknownJob: return "UnknownJob";
			case ViolationKind::BadCalibrationType: return "BadCalibrationType";
		}
		return "?";
	}

	struct Violation {
		ViolationKind kind;
		std::string detail;
	};

	/// Checks an (instance, schedule) pair and returns every violation found;
	/// an empty list certifies the schedule. Overlapping calibration windows
	/// are permitted (the machine may be recalibrated at any time), so
	/// execution is checked against the union of effective windows rather
	/// than any per-calibration assignment.
	inline std::vector<Violation> validate(const Instance& instance, const Schedule& schedule) {
		std::vector<Violation> out;
		auto seg_str = [](const Segment& s) {
			return "segment [" + std::to_string(s.start) + "," + std::to_string(s.end) + ") of job " +
				std::to_string(s.job_id);
		};

		std::map<int, const Job*> byId;
		for (const Job& j : instance.jobs) byId[j.id] = &j;

		// calibration windows, merged into disjoint intervals
		std::vector<Interval> windows;
		Rational cost_sum = 0;
		for (const CalibrationEvent& c : schedule.calibrations) {
			if (c.type_index < 0 || static_cast<std::size_t>(c.type_index) >= type_count(instance.model)) {
				out.push_back({ViolationKind::BadCalibrationType,
					"calibration at " + std::to_string(c.start) + " has type index " +
						std::to_string(c.type_index)});
				continue;
			}
			windows.push_back(effective_window(c, instance.model));
			if (is_single(instance.model)) {
				cost_sum += Rational(1);
			} else {
				cost_sum += std::get<MultiType>(instance.model)
					.types[static_cast<std::size_t>(c.type_index)].cost;
			}
		}
		std::sort(windows.begin(), windows.end(), [](const Interval& a, const Interval& b) {
			return a.begin != b.begin ? a.begin < b.begin : a.end < b.end;
		});
		std::vector<Interval> merged;
		for (const Interval& w : windows) {
			if (!merged.empty() && w.begin <= merged.back().end)
				merged.back().end = std::max(merged.back().end, w.end);
			else
				merged.push_back(w);
		}

		std::map<int, Time> executed;
		for (const Segment& s : schedule.segments) {
			auto it = byId.find(s.job_id);
			if (it == byId.end()) {
				out.push_back({ViolationKind::UnknownJob, seg_str(s) + ": no such job"});
				continue;
			}
			const Job& j = *it->second;
			executed[s.job_id] += s.end - s.start;
			if (s.start < j.release)
				out.push_back({ViolationKind::JobBeforeRelease,
					seg_str(s) + " starts before release " + std::to_string(j.release)});
			if (s.end > j.deadline)
				out.push_back({ViolationKind::JobAfterDeadline,
					seg_str(s) + " ends after deadline " + std::to_string(j.deadline)});
			const bool covered = std::any_of(merged.begin(), merged.end(), [&](const Interval& w) {
				return w.begin <= s.start && s.end <= w.end;
			});
			if (!covered)
				out.push_back({ViolationKind::UncalibratedExecution,
					seg_str(s) + " leaves the calibrated windows"});
		}

		std::vector<Segment> ordered = schedule.segments;
		std::sort(ordered.begin(), ordered.end(), [](const Segment& a, const Segment& b) {
			return a.start != b.start ? a.start < b.start : a.end < b.end;
		});
		for (std::size_t i = 1; i < ordered.size(); ++i) {
			if (ordered[i].start < ordered[i - 1].end)
				out.push_back({ViolationKind::SegmentOverlap,
					seg_str(ordered[i - 1]) + " overlaps " + seg_str(ordered[i])});
		}

		for (const Job& j : instance.jobs) {
			const Time done = executed.count(j.id) ? executed[j.id] : 0;
			if (done != j.processing)
				out.push_back({ViolationKind::ProcessingMismatch,
					"job " + std::to_string(j.id) + " executes " + std::to_string(done) +
						" of " + std::to_string(j.processing) + " units"});
		}

		if (cost_sum != schedule.total_cost)
			out.push_back({ViolationKind::BadCost,
				"schedule cost " + schedule.total_cost.to_string() +
					" but calibrations sum to " + cost_sum.to_string()});

		return out;
	}

} // namespace calib

#endif

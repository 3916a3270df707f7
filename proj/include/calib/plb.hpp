#ifndef CALIB_PLB_HPP
#define CALIB_PLB_HPP

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <vector>

#include "model.hpp"

namespace calib {

	/// One iteration of Preemptive Lazy Binning: the chosen latest start t,
	/// the deadline d_k that determined it, the end u of the calibration
	/// block, and how much of each later job ran in [d_k, u).
	struct PlbIterationTrace {
		Time chosen_start = 0;        // t
		int chosen_job = 0;           // k, as a job id
		Time chosen_deadline = 0;     // d_k
		Time block_end = 0;           // u
		std::map<int, Time> processed_after_dk; // q_j
	};

	struct LatestStart {
		Time start = 0;
		int job_id = 0;
		std::size_t index = 0; // position in the remaining list
	};

	/// Latest feasible calibration start for the remaining jobs:
	/// min over i of d_i - sum of processing of jobs up to i in deadline
	/// order. Strict-improvement scan, so the reported job is the first
	/// prefix attaining the minimum.
	inline LatestStart latest_start(const std::vector<Job>& remaining) {
		if (remaining.empty()) throw std::invalid_argument("latest_start: no jobs");
		if (!std::is_sorted(remaining.begin(), remaining.end(), [](const Job& a, const Job& b) {
				return a.deadline != b.deadline ? a.deadline < b.deadline : a.id < b.id;
			}))
			throw std::invalid_argument("latest_start: jobs must be sorted by deadline");
		Time t = 0;
		for (const Job& j : remaining) t = std::max(t, j.deadline);
		LatestStart pick{t, remaining.front().id, 0};
		Time prefix = 0;
		for (std::size_t i = 0; i < remaining.size(); ++i) {
			prefix += remaining[i].processing;
			const Time candidate = remaining[i].deadline - prefix;
			if (pick.start > candidate) pick = {candidate, remaining[i].id, i};
		}
		return pick;
	}

	/// Replaces every job by p_j unit-time copies of its window; ids are
	/// renumbered 1..P in input order.
	inline Instance split_to_unit(const Instance& instance) {
		std::vector<Job> units;
		int next = 1;
		for (const Job& j : instance.jobs)
			for (Time piece = 0; piece < j.processing; ++piece)
				units.emplace_back(next++, j.release, j.deadline, 1);
		return Instance(std::move(units), instance.model);
	}

	namespace detail {

		struct PendingJob {
			Time deadline = 0;
			int id = 0;
			Time release = 0;
			Time remaining = 0;
		};

		// Unit-slot EDF over [from, to): each slot runs the released
		// unfinished job with the smallest (deadline, id) whose deadline has
		// not passed; idles otherwise. by_release indexes pending in release
		// order. Returns the number of units executed; appends merged
		// segments and, when requested, counts work done at slots >= count_from.
		inline Time edf_fill_slots(std::vector<PendingJob>& pending,
			const std::vector<std::size_t>& by_release, Time from, Time to,
			std::vector<Segment>& segments, std::map<int, Time>* processed, Time count_from) {
			struct Entry {
				Time deadline;
				int id;
				std::size_t idx;
			};
			auto later = [](const Entry& a, const Entry& b) {
				return a.deadline != b.deadline ? a.deadline > b.deadline : a.id > b.id;
			};
			std::priority_queue<Entry, std::vector<Entry>, decltype(later)> ready(later);
			std::size_t next = 0;
			Time executed = 0;
			for (Time s = from; s < to; ++s) {
				while (next < by_release.size() && pending[by_release[next]].release <= s) {
					const PendingJob& p = pending[by_release[next]];
					if (p.remaining > 0) ready.push({p.deadline, p.id, by_release[next]});
					++next;
				}
				while (!ready.empty() &&
					(pending[ready.top().idx].remaining == 0 || ready.top().deadline < s + 1))
					ready.pop();
				if (ready.empty()) {
					if (next >= by_release.size()) break;
					s = std::min(to, pending[by_release[next]].release) - 1; // skip idle gap
					continue;
				}
				PendingJob& run = pending[ready.top().idx];
				run.remaining -= 1;
				++executed;
				if (processed && s >= count_from) (*processed)[run.id] += 1;
				if (!segments.empty() && segments.back().job_id == run.id && segments.back().end == s)
					segments.back().end = s + 1;
				else
					segments.push_back(Segment(run.id, s, s + 1));
			}
			return executed;
		}

		inline std::vector<std::size_t> release_order(const std::vector<PendingJob>& pending) {
			std::vector<std::size_t> idx(pending.size());
			std::iota(idx.begin(), idx.end(), std::size_t{0});
			std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
				const auto& x = pending[a];
				const auto& y = pending[b];
				if (x.release != y.release) return x.release < y.release;
				if (x.deadline != y.deadline) return x.deadline < y.deadline;
				return x.id < y.id;
			});
			return idx;
		}

	} // namespace detail

	/// Preemptive Lazy Binning: minimum number of calibrations for a
	/// single-type machine, arbitrary processing times, preemption allowed.
	/// Each iteration opens a block of back-to-back calibrations at the
	/// latest feasible start and consumes work with EDF.
	inline SolveResult plb_solve(const Instance& instance, std::vector<PlbIterationTrace>* trace = nullptr) {
		const auto* single = std::get_if<SingleType>(&instance.model);
		if (!single) throw std::invalid_argument("plb_solve requires a single-type model");
		const Time T = single->T;
		if (!edf_feasible_unconstrained(instance.jobs)) return SolveResult::infeasible();

		std::vector<detail::PendingJob> pending;
		for (const Job& j : instance.jobs) pending.push_back({j.deadline, j.id, j.release, j.processing});
		std::sort(pending.begin(), pending.end(), [](const auto& a, const auto& b) {
			return a.deadline != b.deadline ? a.deadline < b.deadline : a.id < b.id;
		});
		const auto by_release = detail::release_order(pending);

		Schedule schedule;
		Time block_floor = 0; // execution may not reuse slots of earlier blocks
		std::size_t alive = pending.size();
		std::size_t iterations = 0;
		while (alive > 0) {
			if (++iterations > instance.jobs.size())
				throw std::logic_error("plb_solve: more iterations than jobs");

			// latest start: min over prefixes of d_i - sum p_j, strict improvement
			Time t = 0;
			for (const auto& p : pending)
				if (p.remaining > 0) t = std::max(t, p.deadline);
			std::size_t k = 0;
			Time prefix = 0;
			for (std::size_t i = 0; i < pending.size(); ++i) {
				if (pending[i].remaining == 0) continue;
				prefix += pending[i].remaining;
				if (t > pending[i].deadline - prefix) {
					t = pending[i].deadline - prefix;
					k = i;
				}
			}
			const Time dk = pending[k].deadline;
			const Time u = t + ((dk - t + T - 1) / T) * T;

			for (Time c = t; c <= u - T; c += T) schedule.calibrations.push_back({c, 0});

			std::map<int, Time> processed;
			detail::edf_fill_slots(pending, by_release, std::max(t, block_floor), u,
				schedule.segments, trace ? &processed : nullptr, dk);

			// anything due within the block can never run later
			std::size_t still_alive = 0;
			for (const auto& p : pending) {
				if (p.remaining == 0) continue;
				if (p.deadline <= u) return SolveResult::infeasible();
				++still_alive;
			}

			if (trace) {
				PlbIterationTrace rec;
				rec.chosen_start = t;
				rec.chosen_job = pending[k].id;
				rec.chosen_deadline = dk;
				rec.block_end = u;
				for (const auto& [id, q] : processed)
					if (q > 0) rec.processed_after_dk[id] = q;
				trace->push_back(std::move(rec));
			}

			if (still_alive >= alive) throw std::logic_error("plb_solve: block made no progress");
			alive = still_alive;
			block_floor = std::max(block_floor, u);
		}

		schedule.total_cost = Rational(static_cast<std::int64_t>(schedule.calibrations.size()));
		return SolveResult::feasible(schedule.total_cost, std::move(schedule));
	}

	/// Lazy Binning for unit jobs: advance a probe date t while the remaining
	/// jobs still admit a feasible EDF schedule starting at t+1; when they no
	/// longer do, calibrate at t, consume jobs inside [t, t+T) and continue
	/// from t+T.
	inline SolveResult lb_solve(const Instance& instance) {
		const auto* single = std::get_if<SingleType>(&instance.model);
		if (!single) throw std::invalid_argument("lb_solve requires a single-type model");
		for (const Job& j : instance.jobs)
			if (j.processing != 1) throw std::invalid_argument("lb_solve requires unit jobs");
		const Time T = single->T;
		if (!edf_feasible_unconstrained(instance.jobs)) return SolveResult::infeasible();
		if (instance.jobs.empty()) return SolveResult::feasible(Rational(0), Schedule{});

		std::vector<detail::PendingJob> pending;
		Time t = instance.jobs.front().release;
		for (const Job& j : instance.jobs) {
			pending.push_back({j.deadline, j.id, j.release, 1});
			t = std::min(t, j.release);
		}
		t -= 1;

		Schedule schedule;
		while (!pending.empty()) {
			std::vector<Job> live;
			live.reserve(pending.size());
			for (const auto& p : pending) live.emplace_back(p.id, p.release, p.deadline, 1);
			while (edf_feasible_from(live, t + 1)) ++t;

			schedule.calibrations.push_back({t, 0});
			const auto by_release = detail::release_order(pending);
			if (detail::edf_fill_slots(pending, by_release, t, t + T, schedule.segments, nullptr, t) == 0)
				throw std::logic_error("lb_solve: calibration window executed nothing");
			pending.erase(std::remove_if(pending.begin(), pending.end(),
							  [](const auto& p) { return p.remaining == 0; }),
				pending.end());
			t += T;
		}

		schedule.total_cost = Rational(static_cast<std::int64_t>(schedule.calibrations.size()));
		return SolveResult::feasible(schedule.total_cost, std::move(schedule));
	}

} // namespace calib

#endif

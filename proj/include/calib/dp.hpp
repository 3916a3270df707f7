#ifndef CALIB_DP_HPP
#define CALIB_DP_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "critical_times.hpp"
#include "model.hpp"

namespace calib {

	/// Five-index state of the multi-type recurrence: prefix j of the
	/// deadline-sorted jobs, scheduling window [u, v), last calibration
	/// start t and type k.
	struct DPState {
		int job_index = 0;   // j
		Time window_start = 0; // u
		Time window_end = 0;   // v
		Time last_start = 0;   // t, in theta
		int last_type = 0;     // k
	};

	/// Value of a state: exact cost (nullopt encodes +infinity) plus the
	/// argmin needed to rebuild a witness. Split(u',t',k') places job j at
	/// [u',u'+1) inside calibration (t',k'); when (t',k') equals the state's
	/// own (t,k) the job shares the state's last calibration.
	struct DPValue {
		std::optional<Rational> cost;
		enum class Kind { Base, Inherit, Split } kind = Kind::Base;
		Time split_slot = 0;
		Time split_start = 0;
		int split_type = 0;
	};

	struct DpStats {
		std::size_t visited_states = 0;
		std::size_t theta_size = 0;
		std::size_t phi_size = 0;
	};

	/// Exact solver for unit jobs on a multi-type machine with activation
	/// time. Memoized evaluation of the corrected recurrence over the
	/// critical sets theta (calibration starts) and phi (job starts).
	class DpSolver {
	public:
		explicit DpSolver(const Instance& instance) {
			const auto* multi = std::get_if<MultiType>(&instance.model);
			if (!multi) throw std::invalid_argument("dp requires a multi-type model");
			for (const Job& j : instance.jobs)
				if (j.processing != 1) throw std::invalid_argument("dp requires unit jobs");
			lambda_ = multi->activation;
			types_ = multi->types;
			jobs_ = instance.jobs;
			std::sort(jobs_.begin(), jobs_.end(), [](const Job& a, const Job& b) {
				if (a.deadline != b.deadline) return a.deadline < b.deadline;
				if (a.release != b.release) return a.release < b.release;
				return a.id < b.id;
			});
			if (!jobs_.empty()) {
				theta_ = build_theta(jobs_, lambda_);
				phi_ = build_phi(jobs_, theta_);
				horizon_ = 0;
				for (const Job& j : jobs_) horizon_ = std::max(horizon_, j.deadline);
			}
		}

		const std::vector<Time>& theta() const { return theta_; }
		const std::vector<Time>& phi() const { return phi_; }
		const std::vector<Job>& sorted_jobs() const { return jobs_; }
		std::size_t visited_states() const { return memo_.size(); }

		/// Evaluates F(j,u,v,t,k) for probing and tests. Recursive states use
		/// window start 0; other starts are only meaningful at the base.
		DPValue value(const DPState& state) {
			if (state.job_index == 0) return base(state.window_start, state.window_end,
				state.last_start, state.last_type, /*fee_paid=*/false);
			if (state.window_start != 0)
				throw std::invalid_argument("dp recursion is evaluated with window start 0");
			return eval(false, state.job_index, state.window_start, state.window_end,
				state.last_start, state.last_type);
		}

		SolveResult solve() {
			if (jobs_.empty()) return SolveResult::feasible(Rational(0), Schedule{});
			std::optional<Rational> best;
			Time best_t = 0;
			int best_k = 0;
			for (Time t : theta_) {
				for (std::size_t k = 0; k < types_.size(); ++k) {
					const DPValue v = eval(false, static_cast<int>(jobs_.size()), 0, horizon_, t,
						static_cast<int>(k));
					if (v.cost && (!best || *v.cost < *best)) {
						best = v.cost;
						best_t = t;
						best_k = static_cast<int>(k);
					}
				}
			}
			if (!best) return SolveResult::infeasible();
			Schedule schedule;
			rebuild(false, static_cast<int>(jobs_.size()), 0, horizon_, best_t, best_k, schedule);
			std::sort(schedule.calibrations.begin(), schedule.calibrations.end(),
				[](const CalibrationEvent& a, const CalibrationEvent& b) {
					return a.start != b.start ? a.start < b.start : a.type_index < b.type_index;
				});
			std::sort(schedule.segments.begin(), schedule.segments.end(),
				[](const Segment& a, const Segment& b) { return a.start < b.start; });
			schedule.total_cost = *best;
			return SolveResult::feasible(*best, std::move(schedule));
		}

	private:
		Time lambda_ = 0;
		std::vector<CalibrationType> types_;
		std::vector<Job> jobs_; // deadline order; index j is jobs_[j-1]
		std::vector<Time> theta_;
		std::vector<Time> phi_;
		Time horizon_ = 0;

		std::unordered_map<std::uint64_t, DPValue> memo_;
		// best split calibration per (j, u, u'): min over (t',k') covering u'
		struct NewCal {
			std::optional<Rational> cost;
			Time start = 0;
			int type = 0;
		};
		std::unordered_map<std::uint64_t, NewCal> new_cal_memo_;

		static std::size_t index_in(const std::vector<Time>& sorted, Time value, const char* what) {
			const auto it = std::lower_bound(sorted.begin(), sorted.end(), value);
			if (it == sorted.end() || *it != value)
				throw std::invalid_argument(std::string("dp state ") + what + " outside its critical set");
			return static_cast<std::size_t>(it - sorted.begin());
		}

		// exact positional key: every field indexed into its finite domain
		std::uint64_t key(bool fee_paid, int j, Time u, Time v, Time t, int k) const {
			// u is 0 or slot+1 with slot in phi; v and t index phi / theta
			const std::uint64_t u_idx = u == 0 ? 0 : 1 + index_in(phi_, u - 1, "u");
			const std::uint64_t v_idx = index_in(phi_, v, "v");
			const std::uint64_t t_idx = index_in(theta_, t, "t");
			std::uint64_t h = fee_paid ? 1 : 0;
			h = h * static_cast<std::uint64_t>(jobs_.size() + 2) + static_cast<std::uint64_t>(j);
			h = h * (phi_.size() + 2) + u_idx;
			h = h * (phi_.size() + 2) + v_idx;
			h = h * (theta_.size() + 1) + t_idx;
			h = h * (types_.size() + 1) + static_cast<std::uint64_t>(k);
			return h;
		}

		std::uint64_t new_cal_key(int j, Time u, Time slot) const {
			const std::uint64_t u_idx = u == 0 ? 0 : 1 + index_in(phi_, u - 1, "u");
			std::uint64_t h = static_cast<std::uint64_t>(j);
			h = h * (phi_.size() + 2) + u_idx;
			h = h * (phi_.size() + 2) + index_in(phi_, slot, "u'");
			return h;
		}

		DPValue base(Time u, Time v, Time t, int k, bool fee_paid) const {
			(void)u;
			DPValue out;
			out.kind = DPValue::Kind::Base;
			if (fee_paid)
				out.cost = Rational(0);
			else if (t + lambda_ <= v)
				out.cost = types_[static_cast<std::size_t>(k)].cost;
			return out; // nullopt encodes +infinity
		}

		Interval window_of(Time t, int k) const {
			const Time begin = t + lambda_;
			return {begin, begin + types_[static_cast<std::size_t>(k)].length};
		}

		// cheapest calibration able to cover slot u' together with the value
		// of the left problem F(j, 0, u', t', k'); shared across states
		const NewCal& best_new_cal(int j, Time u, Time slot) {
			const std::uint64_t h = new_cal_key(j, u, slot);
			auto it = new_cal_memo_.find(h);
			if (it != new_cal_memo_.end()) return it->second;
			NewCal best;
			for (Time t2 : theta_) {
				if (t2 + lambda_ > slot) break; // theta sorted ascending
				for (std::size_t k2 = 0; k2 < types_.size(); ++k2) {
					if (slot >= t2 + lambda_ + types_[k2].length) continue;
					const DPValue left = eval(false, j, u, slot, t2, static_cast<int>(k2));
					if (left.cost && (!best.cost || *left.cost < *best.cost)) {
						best.cost = left.cost;
						best.start = t2;
						best.type = static_cast<int>(k2);
					}
				}
			}
			return new_cal_memo_.emplace(h, std::move(best)).first->second;
		}

		DPValue eval(bool fee_paid, int j, Time u, Time v, Time t, int k) {
			if (j == 0) return base(u, v, t, k, fee_paid);
			const std::uint64_t h = key(fee_paid, j, u, v, t, k);
			if (auto it = memo_.find(h); it != memo_.end()) return it->second;

			const Job& job = jobs_[static_cast<std::size_t>(j - 1)];
			DPValue out;
			if (!(u <= job.release && job.release < v)) {
				const DPValue inner = eval(fee_paid, j - 1, u, v, t, k);
				out.cost = inner.cost;
				out.kind = DPValue::Kind::Inherit;
				return memo_.emplace(h, out).first->second;
			}

			// releases of other pending jobs inside [u,v); job j may not be
			// placed exactly on one of them
			std::vector<Time> blocked;
			for (int i = 0; i < j - 1; ++i) {
				const Time r = jobs_[static_cast<std::size_t>(i)].release;
				if (u <= r && r < v) blocked.push_back(r);
			}
			std::sort(blocked.begin(), blocked.end());

			out.kind = DPValue::Kind::Split;
			const Interval own = window_of(t, k);
			const Time lo = std::max(job.release, u);
			const Time hi = std::min(job.deadline, v) - 1;
			auto from = std::lower_bound(phi_.begin(), phi_.end(), lo);
			for (auto it2 = from; it2 != phi_.end() && *it2 <= hi; ++it2) {
				const Time slot = *it2;
				if (std::binary_search(blocked.begin(), blocked.end(), slot)) continue;

				// job j inside the state's own last calibration
				if (own.begin <= slot && slot < own.end) {
					const DPValue left = eval(fee_paid, j - 1, u, slot, t, k);
					if (left.cost) {
						const DPValue right = eval(true, j - 1, slot + 1, v, t, k);
						if (right.cost) {
							const Rational total = *left.cost + *right.cost;
							if (!out.cost || total < *out.cost) {
								out.cost = total;
								out.split_slot = slot;
								out.split_start = t;
								out.split_type = k;
							}
						}
					}
				}

				// job j inside a new calibration (t',k')
				const NewCal& fresh = best_new_cal(j - 1, u, slot);
				if (fresh.cost) {
					const DPValue right = eval(fee_paid, j - 1, slot + 1, v, t, k);
					if (right.cost) {
						const Rational total = *fresh.cost + *right.cost;
						if (!out.cost || total < *out.cost) {
							out.cost = total;
							out.split_slot = slot;
							out.split_start = fresh.start;
							out.split_type = fresh.type;
						}
					}
				}
			}
			return memo_.emplace(h, out).first->second;
		}

		void rebuild(bool fee_paid, int j, Time u, Time v, Time t, int k, Schedule& schedule) {
			if (j == 0) {
				if (!fee_paid) schedule.calibrations.push_back({t, k});
				return;
			}
			const std::uint64_t h = key(fee_paid, j, u, v, t, k);
			const DPValue& val = memo_.at(h);
			if (!val.cost) throw std::logic_error("dp rebuild reached an infeasible state");
			switch (val.kind) {
				case DPValue::Kind::Base:
					if (!fee_paid) schedule.calibrations.push_back({t, k});
					return;
				case DPValue::Kind::Inherit:
					rebuild(fee_paid, j - 1, u, v, t, k, schedule);
					return;
				case DPValue::Kind::Split: {
					const Job& job = jobs_[static_cast<std::size_t>(j - 1)];
					schedule.segments.push_back(Segment(job.id, val.split_slot, val.split_slot + 1));
					if (val.split_start == t && val.split_type == k) {
						// shares the state's calibration: fee stays on the left
						rebuild(fee_paid, j - 1, u, val.split_slot, t, k, schedule);
						rebuild(true, j - 1, val.split_slot + 1, v, t, k, schedule);
					} else {
						rebuild(false, j - 1, u, val.split_slot, val.split_start, val.split_type, schedule);
						rebuild(fee_paid, j - 1, val.split_slot + 1, v, t, k, schedule);
					}
					return;
				}
			}
		}
	};

	/// Convenience wrapper: optimal cost and witness for unit jobs with
	/// calibration types and activation time.
	inline SolveResult dp_solve(const Instance& instance, DpStats* stats = nullptr) {
		DpSolver solver(instance);
		SolveResult result = solver.solve();
		if (stats) {
			stats->visited_states = solver.visited_states();
			stats->theta_size = solver.theta().size();
			stats->phi_size = solver.phi().size();
		}
		return result;
	}

} // namespace calib

#endif

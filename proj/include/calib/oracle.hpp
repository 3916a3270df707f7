#ifndef CALIB_ORACLE_HPP
#define CALIB_ORACLE_HPP

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <queue>
#include <stdexcept>
#include <vector>

#include "critical_times.hpp"
#include "model.hpp"

namespace calib {

	struct BudgetExceeded : std::runtime_error {
		explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
	};

	struct OracleConfig {
		/// Cap on calibrations per candidate set. Defaults to the number of
		/// unit pieces for brute_single and to n for brute_multi; any optimum
		/// uses at most that many since every calibration must host a piece.
		std::optional<int> max_calibrations;
		bool allow_overlap = true;
		/// Override for the candidate start times (default: psi / theta).
		std::optional<std::vector<Time>> start_candidates;
		/// Feasibility checks allowed before giving up.
		std::int64_t budget = 5'000'000;
	};

	namespace detail {

		struct UnitPiece {
			Time release = 0;
			Time deadline = 0;
			int job_id = 0;
		};

		// integer slots covered by the given windows, clipped to [0, horizon)
		inline std::vector<Time> covered_slots(const std::vector<Interval>& windows, Time horizon) {
			std::vector<Time> slots;
			for (const Interval& w : windows)
				for (Time s = std::max<Time>(w.begin, 0); s < std::min(w.end, horizon); ++s)
					slots.push_back(s);
			std::sort(slots.begin(), slots.end());
			slots.erase(std::unique(slots.begin(), slots.end()), slots.end());
			return slots;
		}

		// Maximum bipartite matching (Kuhn) between unit pieces and slots;
		// returns per-piece slots iff the matching is perfect on pieces.
		inline std::optional<std::vector<Time>> match_pieces(
			const std::vector<UnitPiece>& pieces, const std::vector<Time>& slots) {
			if (pieces.size() > slots.size()) return std::nullopt;
			std::vector<int> slot_owner(slots.size(), -1);
			std::vector<char> visited;
			auto admissible = [&](const UnitPiece& p, std::size_t j) {
				return p.release <= slots[j] && slots[j] + 1 <= p.deadline;
			};
			std::vector<std::size_t> order(pieces.size());
			for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
			std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
				const auto& x = pieces[a];
				const auto& y = pieces[b];
				if (x.deadline != y.deadline) return x.deadline < y.deadline;
				if (x.release != y.release) return x.release < y.release;
				return a < b;
			});
			std::function<bool(std::size_t)> augment = [&](std::size_t i) -> bool {
				for (std::size_t j = 0; j < slots.size(); ++j) {
					if (visited[j] || !admissible(pieces[i], j)) continue;
					visited[j] = 1;
					if (slot_owner[j] < 0 || augment(static_cast<std::size_t>(slot_owner[j]))) {
						slot_owner[j] = static_cast<int>(i);
						return true;
					}
				}
				return false;
			};
			for (std::size_t i : order) {
				visited.assign(slots.size(), 0);
				if (!augment(i)) return std::nullopt;
			}
			std::vector<Time> assignment(pieces.size(), -1);
			for (std::size_t j = 0; j < slots.size(); ++j)
				if (slot_owner[j] >= 0) assignment[static_cast<std::size_t>(slot_owner[j])] = slots[j];
			return assignment;
		}

		inline Schedule schedule_from_assignment(const std::vector<UnitPiece>& pieces,
			const std::vector<Time>& assignment, std::vector<CalibrationEvent> calibrations,
			Rational cost) {
			std::map<int, std::vector<Time>> perJob;
			for (std::size_t i = 0; i < pieces.size(); ++i) perJob[pieces[i].job_id].push_back(assignment[i]);
			Schedule s;
			std::sort(calibrations.begin(), calibrations.end(), [](const auto& a, const auto& b) {
				return a.start != b.start ? a.start < b.start : a.type_index < b.type_index;
			});
			s.calibrations = std::move(calibrations);
			for (auto& [job, times] : perJob) {
				std::sort(times.begin(), times.end());
				for (Time slot : times) {
					if (!s.segments.empty() && s.segments.back().job_id == job &&
						s.segments.back().end == slot)
						s.segments.back().end = slot + 1;
					else
						s.segments.push_back(Segment(job, slot, slot + 1));
				}
			}
			std::sort(s.segments.begin(), s.segments.end(), [](const Segment& a, const Segment& b) {
				return a.start < b.start;
			});
			s.total_cost = cost;
			return s;
		}

		inline std::vector<UnitPiece> unit_pieces(const std::vector<Job>& jobs) {
			std::vector<UnitPiece> pieces;
			for (const Job& j : jobs)
				for (Time p = 0; p < j.processing; ++p) pieces.push_back({j.release, j.deadline, j.id});
			return pieces;
		}

		// busy interval of a calibration: activation plus calibrated length
		inline Time busy_length(const CalibrationModel& model, int type_index) {
			const MultiType mt = as_multi(model);
			return mt.activation + mt.types[static_cast<std::size_t>(type_index)].length;
		}

	} // namespace detail

	/// Independent feasibility decider used to cross-check the matching:
	/// greedy EDF over an explicit sorted list of calibrated unit slots.
	inline bool edf_feasible_on_slots(const std::vector<detail::UnitPiece>& pieces,
		const std::vector<Time>& slots) {
		std::vector<char> done(pieces.size(), 0);
		std::size_t finished = 0;
		for (Time s : slots) {
			int best = -1;
			for (std::size_t i = 0; i < pieces.size(); ++i) {
				if (done[i] || pieces[i].release > s || pieces[i].deadline < s + 1) continue;
				if (best < 0 || pieces[i].deadline < pieces[static_cast<std::size_t>(best)].deadline ||
					(pieces[i].deadline == pieces[static_cast<std::size_t>(best)].deadline &&
						pieces[i].job_id < pieces[static_cast<std::size_t>(best)].job_id))
					best = static_cast<int>(i);
			}
			if (best >= 0) {
				done[static_cast<std::size_t>(best)] = 1;
				++finished;
			}
		}
		return finished == pieces.size();
	}

	/// Exhaustive minimum-count search for the single-type problem over the
	/// psi candidate set. Enumerates candidate start sets by increasing size
	/// (duplicate starts add cost but no coverage, so sets suffice) and
	/// decides feasibility by matching unit pieces to calibrated slots.
	inline SolveResult brute_single(const Instance& instance, OracleConfig config = {}) {
		const auto* single = std::get_if<SingleType>(&instance.model);
		if (!single) throw std::invalid_argument("brute_single requires a single-type model");
		if (instance.jobs.empty()) return SolveResult::feasible(Rational(0), Schedule{});

		const auto pieces = detail::unit_pieces(instance.jobs);
		const std::vector<Time> candidates =
			config.start_candidates ? *config.start_candidates : build_psi(instance.jobs);
		const int max_cal = config.max_calibrations
			? *config.max_calibrations
			: static_cast<int>(pieces.size());
		Time horizon = 0;
		for (const Job& j : instance.jobs) horizon = std::max(horizon, j.deadline);

		std::int64_t checks = config.budget;
		std::vector<std::size_t> chosen;
		std::optional<SolveResult> found;

		auto conflict_free = [&](const std::vector<std::size_t>& set) {
			if (config.allow_overlap) return true;
			for (std::size_t a = 0; a < set.size(); ++a)
				for (std::size_t b = 0; b < set.size(); ++b) {
					if (a == b) continue;
					const Time sa = candidates[set[a]], sb = candidates[set[b]];
					if (sa <= sb && sb < sa + single->T) return false;
				}
			return true;
		};

		std::function<bool(std::size_t, int)> enumerate = [&](std::size_t from, int left) -> bool {
			if (left == 0) {
				if (!conflict_free(chosen)) return false;
				if (--checks < 0) throw BudgetExceeded("brute_single enumeration budget exhausted");
				std::vector<Interval> windows;
				std::vector<CalibrationEvent> events;
				for (std::size_t c : chosen) {
					events.push_back({candidates[c], 0});
					windows.push_back(effective_window(events.back(), instance.model));
				}
				const auto slots = detail::covered_slots(windows, horizon);
				if (auto assignment = detail::match_pieces(pieces, slots)) {
					const Rational cost(static_cast<std::int64_t>(chosen.size()));
					found = SolveResult::feasible(cost,
						detail::schedule_from_assignment(pieces, *assignment, events, cost));
					return true;
				}
				return false;
			}
			for (std::size_t c = from; c + static_cast<std::size_t>(left) <= candidates.size(); ++c) {
				chosen.push_back(c);
				const bool hit = enumerate(c + 1, left - 1);
				chosen.pop_back();
				if (hit) return true;
			}
			return false;
		};

		for (int m = 1; m <= max_cal && static_cast<std::size_t>(m) <= candidates.size(); ++m)
			if (enumerate(0, m)) return *found;
		return SolveResult::infeasible();
	}

	/// Exact minimum-cost search for unit jobs with calibration types over
	/// theta: uniform-cost search over sets of (start, type) candidates,
	/// cheapest candidate set admitting a perfect job-to-slot matching wins.
	/// With allow_overlap=false, sets where one calibration starts inside
	/// another's busy interval [start, start+lambda+length) are rejected.
	inline SolveResult brute_multi(const Instance& instance, OracleConfig config = {}) {
		const auto* multi = std::get_if<MultiType>(&instance.model);
		if (!multi) throw std::invalid_argument("brute_multi requires a multi-type model");
		for (const Job& j : instance.jobs)
			if (j.processing != 1) throw std::invalid_argument("brute_multi requires unit jobs");
		if (instance.jobs.empty()) return SolveResult::feasible(Rational(0), Schedule{});

		const auto pieces = detail::unit_pieces(instance.jobs);
		const std::vector<Time> starts =
			config.start_candidates ? *config.start_candidates : build_theta(instance.jobs, multi->activation);
		const int max_cal = config.max_calibrations
			? *config.max_calibrations
			: static_cast<int>(instance.jobs.size());
		Time horizon = 0;
		for (const Job& j : instance.jobs) horizon = std::max(horizon, j.deadline);

		struct Candidate {
			Time start;
			int type;
			Rational cost;
		};
		std::vector<Candidate> candidates;
		for (Time s : starts)
			for (std::size_t k = 0; k < multi->types.size(); ++k)
				candidates.push_back({s, static_cast<int>(k), multi->types[k].cost});

		struct Node {
			Rational cost;
			std::vector<std::size_t> picks;
		};
		auto worse = [](const Node& a, const Node& b) {
			if (a.cost != b.cost) return b.cost < a.cost;
			return b.picks < a.picks;
		};
		std::priority_queue<Node, std::vector<Node>, decltype(worse)> frontier(worse);
		frontier.push({Rational(0), {}});

		auto conflicts = [&](const std::vector<std::size_t>& picks, std::size_t extra) {
			if (config.allow_overlap) return false;
			for (std::size_t p : picks) {
				const Time sa = candidates[p].start;
				const Time sb = candidates[extra].start;
				const Time la = detail::busy_length(instance.model, candidates[p].type);
				const Time lb = detail::busy_length(instance.model, candidates[extra].type);
				if (sa <= sb && sb < sa + la) return true;
				if (sb <= sa && sa < sb + lb) return true;
			}
			return false;
		};

		std::int64_t checks = config.budget;
		while (!frontier.empty()) {
			const Node node = frontier.top();
			frontier.pop();
			if (--checks < 0) throw BudgetExceeded("brute_multi search budget exhausted");

			std::vector<Interval> windows;
			std::vector<CalibrationEvent> events;
			for (std::size_t p : node.picks) {
				events.push_back({candidates[p].start, candidates[p].type});
				windows.push_back(effective_window(events.back(), instance.model));
			}
			const auto slots = detail::covered_slots(windows, horizon);
			if (auto assignment = detail::match_pieces(pieces, slots))
				return SolveResult::feasible(node.cost,
					detail::schedule_from_assignment(pieces, *assignment, events, node.cost));

			if (node.picks.size() == static_cast<std::size_t>(max_cal)) continue;
			const std::size_t from = node.picks.empty() ? 0 : node.picks.back() + 1;
			for (std::size_t c = from; c < candidates.size(); ++c) {
				if (conflicts(node.picks, c)) continue;
				Node child;
				child.cost = node.cost + candidates[c].cost;
				child.picks = node.picks;
				child.picks.push_back(c);
				frontier.push(std::move(child));
			}
		}
		return SolveResult::infeasible();
	}

} // namespace calib

#endif

#ifndef CALIB_CRITICAL_TIMES_HPP
#define CALIB_CRITICAL_TIMES_HPP

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "model.hpp"

namespace calib {

	/// Finite candidate sets within which some optimal solution places its
	/// calibration starts (psi for the single-type problem, theta with
	/// activation) and its job start/completion times (phi).
	struct CriticalTimeSets {
		std::vector<Time> psi;
		std::vector<Time> theta;
		std::vector<Time> phi;
	};

	namespace detail {

		// negative candidates are snapped to 0: time starts at 0 and a
		// calibration starting earlier is meaningless
		inline std::vector<Time> clip_sort_dedup(std::vector<Time> v) {
			for (Time& t : v) t = std::max<Time>(t, 0);
			std::sort(v.begin(), v.end());
			v.erase(std::unique(v.begin(), v.end()), v.end());
			return v;
		}

	} // namespace detail

	/// psi := union over jobs of {d_i - P, ..., d_i} with P the total
	/// processing time.
	inline std::vector<Time> build_psi(const std::vector<Job>& jobs) {
		if (jobs.empty()) throw std::invalid_argument("build_psi: no jobs");
		const Time P = total_processing(jobs);
		std::vector<Time> v;
		v.reserve(jobs.size() * static_cast<std::size_t>(P + 1));
		for (const Job& j : jobs)
			for (Time t = j.deadline - P; t <= j.deadline; ++t) v.push_back(t);
		return detail::clip_sort_dedup(v);
	}

	/// theta := union over jobs of {d_i - j*lambda - h : j,h in 0..n}.
	inline std::vector<Time> build_theta(const std::vector<Job>& jobs, Time lambda) {
		if (jobs.empty()) throw std::invalid_argument("build_theta: no jobs");
		if (lambda < 0) throw std::invalid_argument("build_theta: negative activation");
		const Time n = static_cast<Time>(jobs.size());
		std::vector<Time> v;
		for (const Job& job : jobs)
			for (Time j = 0; j <= n; ++j)
				for (Time h = 0; h <= n; ++h) v.push_back(job.deadline - j * lambda - h);
		return detail::clip_sort_dedup(v);
	}

	/// phi := {t + a : t in theta, a in 0..n} joined with
	/// union over jobs of {r_i, ..., r_i + n}.
	inline std::vector<Time> build_phi(const std::vector<Job>& jobs, const std::vector<Time>& theta) {
		const Time n = static_cast<Time>(jobs.size());
		std::vector<Time> v;
		for (Time t : theta)
			for (Time a = 0; a <= n; ++a) v.push_back(t + a);
		for (const Job& job : jobs)
			for (Time a = 0; a <= n; ++a) v.push_back(job.release + a);
		return detail::clip_sort_dedup(v);
	}

	/// The rewritten form of phi used in the size argument:
	/// union of the release part with {d_i - j*lambda + k : j in 0..n, k in -n..n}.
	/// Coincides with build_phi over build_theta whenever min release is 0.
	inline std::vector<Time> build_phi_rewritten(const std::vector<Job>& jobs, Time lambda) {
		if (jobs.empty()) throw std::invalid_argument("build_phi_rewritten: no jobs");
		const Time n = static_cast<Time>(jobs.size());
		std::vector<Time> v;
		for (const Job& job : jobs) {
			for (Time a = 0; a <= n; ++a) v.push_back(job.release + a);
			for (Time j = 0; j <= n; ++j)
				for (Time k = -n; k <= n; ++k) v.push_back(job.deadline - j * lambda + k);
		}
		return detail::clip_sort_dedup(v);
	}

	inline CriticalTimeSets build_critical_times(const Instance& instance) {
		CriticalTimeSets sets;
		sets.psi = build_psi(instance.jobs);
		const Time lambda = as_multi(instance.model).activation;
		sets.theta = build_theta(instance.jobs, lambda);
		sets.phi = build_phi(instance.jobs, sets.theta);
		return sets;
	}

} // namespace calib

#endif

// Two calibration types with a shared activation time: solve with the
// dynamic program and confirm against the brute-force oracle.

#include <iostream>

#include <calib/dp.hpp>
#include <calib/oracle.hpp>

int main() {
	using namespace calib;

	Instance instance({
		Job(1, 3, 4, 1),
		Job(2, 7, 8, 1),
	}, MultiType{3, {CalibrationType(4, Rational(1))}});

	const SolveResult dp = dp_solve(instance);
	const SolveResult oracle = brute_multi(instance);
	std::cout << "dp:     " << (dp.status == SolveStatus::Feasible ? dp.cost.to_string() : "infeasible")
			  << "\n";
	std::cout << "oracle: "
			  << (oracle.status == SolveStatus::Feasible ? oracle.cost.to_string() : "infeasible")
			  << "\n";

	// the same instance becomes infeasible if the machine may not be
	// recalibrated while already calibrated
	OracleConfig no_overlap;
	no_overlap.allow_overlap = false;
	const SolveResult strict = brute_multi(instance, no_overlap);
	std::cout << "without overlapping recalibration: "
			  << (strict.status == SolveStatus::Feasible ? strict.cost.to_string() : "infeasible")
			  << "\n";
	return 0;
}

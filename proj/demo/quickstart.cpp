// Build a small single-type instance in code, solve it with preemptive
// lazy binning and check the witness with the validator.

#include <iostream>

#include <calib/json_io.hpp>
#include <calib/plb.hpp>
#include <calib/validator.hpp>

int main() {
	using namespace calib;

	Instance instance({
		Job(1, 0, 2, 1),
		Job(2, 0, 12, 2),
		Job(3, 6, 12, 2),
	}, SingleType{3});

	std::vector<PlbIterationTrace> trace;
	const SolveResult result = plb_solve(instance, &trace);
	if (result.status == SolveStatus::Infeasible) {
		std::cout << "infeasible\n";
		return 2;
	}

	std::cout << "calibrations: " << result.cost.to_string() << "\n";
	std::cout << "iterations:   " << trace.size() << "\n";
	std::cout << to_json(*result.schedule).dump(2) << "\n";
	std::cout << "violations:   " << validate(instance, *result.schedule).size() << "\n";
	return 0;
}

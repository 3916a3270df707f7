// Command-line front end: solve, validate, compare, gen, reduce, inspect.
// Results are JSON on stdout; renderings and diagnostics go to stderr.
// Exit codes: 0 success, 2 mathematically infeasible, 1 structural errors.

#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include <calib/critical_times.hpp>
#include <calib/dp.hpp>
#include <calib/gen.hpp>
#include <calib/json_io.hpp>
#include <calib/oracle.hpp>
#include <calib/plb.hpp>
#include <calib/reduction.hpp>
#include <calib/validator.hpp>

namespace {

	using namespace calib;

	constexpr int kExitOk = 0;
	constexpr int kExitError = 1;
	constexpr int kExitInfeasible = 2;

	json read_json_file(const std::string& path) {
		std::ifstream in(path);
		if (!in) throw std::runtime_error("cannot read " + path);
		json j;
		in >> j;
		return j;
	}

	void write_output(const json& j, const std::string& path) {
		if (path.empty() || path == "-") {
			std::cout << j.dump() << "\n";
			return;
		}
		std::ofstream out(path);
		if (!out) throw std::runtime_error("cannot write " + path);
		out << j.dump() << "\n";
	}

	// one character per time unit: '~' activation, '=' calibrated,
	// '#' executing, '.' idle
	std::string render_gantt(const Instance& instance, const Schedule& schedule) {
		Time span = 0;
		for (const CalibrationEvent& c : schedule.calibrations)
			span = std::max(span, effective_window(c, instance.model).end);
		for (const Job& j : instance.jobs) span = std::max(span, j.deadline);
		std::ostringstream out;
		out << "time    ";
		for (Time t = 0; t < span; ++t)
			out << (t % 10 == 0 ? static_cast<char>('0' + (t / 10) % 10) : (t % 5 == 0 ? '+' : ' '));
		out << "\n";
		const Time lambda = as_multi(instance.model).activation;
		int index = 0;
		for (const CalibrationEvent& c : schedule.calibrations) {
			const Interval w = effective_window(c, instance.model);
			std::string row(static_cast<std::size_t>(span), '.');
			for (Time t = c.start; t < std::min(c.start + lambda, span); ++t)
				row[static_cast<std::size_t>(t)] = '~';
			for (Time t = w.begin; t < std::min(w.end, span); ++t)
				row[static_cast<std::size_t>(t)] = '=';
			out << "cal " << index++ << "   " << row << "\n";
		}
		for (const Job& j : instance.jobs) {
			std::string row(static_cast<std::size_t>(span), '.');
			for (const Segment& s : schedule.segments)
				if (s.job_id == j.id)
					for (Time t = s.start; t < std::min(s.end, span); ++t)
						row[static_cast<std::size_t>(t)] = '#';
			out << "job " << j.id << "   " << row << "\n";
		}
		return out.str();
	}

	struct SolveOptions {
		std::string algo;
		std::string input;
		std::string output;
		bool trace = false;
		bool no_overlap = false;
		bool dump_states = false;
		bool gantt = false;
		std::int64_t budget = 5'000'000;
	};

	int run_solve(const SolveOptions& opt) {
		const Instance instance = instance_from_json(read_json_file(opt.input));
		SolveResult result;
		DpStats stats;
		std::vector<PlbIterationTrace> trace;

		if (opt.algo == "plb") {
			if (!is_single(instance.model))
				throw std::invalid_argument("plb applies to single-type models only");
			result = plb_solve(instance, opt.trace ? &trace : nullptr);
		} else if (opt.algo == "lb") {
			if (!is_single(instance.model))
				throw std::invalid_argument("lb applies to single-type models only");
			result = lb_solve(instance);
		} else if (opt.algo == "dp") {
			if (is_single(instance.model))
				throw std::invalid_argument(
					"dp applies to multi-type models; convert the model to kind \"multi\" first");
			result = dp_solve(instance, &stats);
		} else if (opt.algo == "brute") {
			OracleConfig config;
			config.allow_overlap = !opt.no_overlap;
			config.budget = opt.budget;
			result = is_single(instance.model) ? brute_single(instance, config)
											   : brute_multi(instance, config);
		} else {
			throw std::invalid_argument("unknown algorithm: " + opt.algo);
		}

		if (opt.trace) {
			for (const PlbIterationTrace& it : trace) {
				json q = json::object();
				for (const auto& [id, units] : it.processed_after_dk)
					q[std::to_string(id)] = units;
				std::cerr << json{{"t", it.chosen_start}, {"k", it.chosen_job},
					{"d_k", it.chosen_deadline}, {"u", it.block_end}, {"q", q}}
								 .dump()
						  << "\n";
			}
		}
		if (opt.dump_states && opt.algo == "dp") {
			std::cerr << json{{"visited_states", stats.visited_states},
				{"theta_size", stats.theta_size}, {"phi_size", stats.phi_size}}
							 .dump()
					  << "\n";
		}

		if (result.status == SolveStatus::Infeasible) {
			write_output(json{{"status", "infeasible"}}, opt.output);
			return kExitInfeasible;
		}
		if (opt.gantt) std::cerr << render_gantt(instance, *result.schedule);
		write_output(to_json(*result.schedule), opt.output);
		return kExitOk;
	}

	int run_compare(const std::string& algos_csv, int trials, const GenParams& base) {
		std::vector<std::string> algos;
		std::stringstream ss(algos_csv);
		for (std::string item; std::getline(ss, item, ',');)
			if (!item.empty()) algos.push_back(item);
		if (algos.empty()) throw std::invalid_argument("compare needs at least one algorithm");

		bool all_agree = true;
		std::cout << "seed,algo,cost,agrees\n";
		for (int i = 0; i < trials; ++i) {
			GenParams params = base;
			params.seed = base.seed + static_cast<std::uint64_t>(i);
			const Instance inst = gen_feasible(params);

			std::vector<std::pair<std::string, std::optional<Rational>>> costs;
			for (const std::string& algo : algos) {
				SolveResult r;
				if (algo == "plb") {
					r = plb_solve(inst);
				} else if (algo == "lb") {
					r = lb_solve(split_to_unit(inst));
				} else if (algo == "dp") {
					r = dp_solve(is_single(inst.model) ? Instance(inst.jobs, as_multi(inst.model)) : inst);
				} else if (algo == "brute") {
					r = is_single(inst.model) ? brute_single(inst) : brute_multi(inst);
				} else {
					throw std::invalid_argument("unknown algorithm: " + algo);
				}
				costs.emplace_back(algo,
					r.status == SolveStatus::Feasible ? std::optional<Rational>(r.cost) : std::nullopt);
			}
			bool agrees = true;
			for (const auto& [name, cost] : costs)
				if (!(cost.has_value() == costs.front().second.has_value() &&
						(!cost || *cost == *costs.front().second)))
					agrees = false;
			if (!agrees) all_agree = false;
			for (const auto& [name, cost] : costs)
				std::cout << params.seed << "," << name << ","
						  << (cost ? cost->to_string() : "infeasible") << ","
						  << (agrees ? "true" : "false") << "\n";
		}
		return all_agree ? kExitOk : kExitError;
	}

	GenParams parse_gen_params(Time T, Time lambda, int K, Time len_min, Time len_max,
		const std::string& costs_csv, int n, Time max_p, Time horizon, std::uint64_t seed,
		double density, bool allow_infeasible, bool multi) {
		GenParams params;
		params.n = n;
		params.max_processing = max_p;
		params.horizon = horizon;
		params.seed = seed;
		params.density = density;
		params.allow_infeasible = allow_infeasible;
		if (!multi) {
			params.model = SingleType{T};
			return params;
		}
		std::vector<Rational> costs;
		std::stringstream ss(costs_csv);
		for (std::string item; std::getline(ss, item, ',');)
			if (!item.empty()) costs.push_back(Rational::parse(item));
		if (costs.empty()) costs = {Rational(1), Rational(3, 2), Rational(2)};
		MultiType model;
		model.activation = lambda;
		std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
		for (int k = 0; k < K; ++k) {
			const Time len = len_min + (len_max > len_min
				? static_cast<Time>(rng() % static_cast<std::uint64_t>(len_max - len_min + 1))
				: 0);
			model.types.emplace_back(len, costs[static_cast<std::size_t>(k) % costs.size()]);
		}
		params.model = std::move(model);
		return params;
	}

} // namespace

int main(int argc, char** argv) {
	CLI::App app{"exact solvers for single-machine calibration scheduling"};
	app.require_subcommand(1);

	SolveOptions solve_opt;
	CLI::App* solve = app.add_subcommand("solve", "solve an instance file");
	solve->add_option("--algo", solve_opt.algo, "plb | lb | dp | brute")->required();
	solve->add_option("-i,--input", solve_opt.input, "instance JSON")->required();
	solve->add_option("-o,--output", solve_opt.output, "schedule JSON (default stdout)");
	solve->add_flag("--trace", solve_opt.trace, "dump PLB iteration records to stderr (JSONL)");
	solve->add_flag("--no-overlap", solve_opt.no_overlap, "brute: forbid overlapping calibrations");
	solve->add_flag("--dump-states", solve_opt.dump_states, "dp: report visited state count");
	solve->add_flag("--gantt", solve_opt.gantt, "render a text gantt chart to stderr");
	solve->add_option("--budget", solve_opt.budget, "brute: feasibility-check budget");

	std::string val_instance, val_schedule;
	CLI::App* validate_cmd = app.add_subcommand("validate", "check a schedule against an instance");
	validate_cmd->add_option("-i,--instance", val_instance, "instance JSON")->required();
	validate_cmd->add_option("-s,--schedule", val_schedule, "schedule JSON")->required();

	std::string cmp_algos = "plb,lb";
	int cmp_trials = 10;
	int gen_n = 4;
	Time gen_T = 3, gen_lambda = 0, gen_len_min = 1, gen_len_max = 4, gen_max_p = 1,
		 gen_horizon = 20;
	int gen_K = 1;
	std::uint64_t gen_seed = 0;
	double gen_density = 0.5;
	bool gen_allow_infeasible = false, gen_multi = false;
	std::string gen_costs, gen_output;

	CLI::App* compare = app.add_subcommand("compare", "cross-check solvers on generated instances");
	compare->add_option("--algos", cmp_algos, "comma-separated: plb,lb,dp,brute");
	compare->add_option("--trials", cmp_trials, "number of instances");

	CLI::App* gen = app.add_subcommand("gen", "generate a feasible instance");
	for (CLI::App* cmd : {compare, gen}) {
		cmd->add_option("--n", gen_n, "job count");
		cmd->add_option("--T", gen_T, "single-type calibration length");
		cmd->add_flag("--multi", gen_multi, "generate a multi-type model");
		cmd->add_option("--lambda", gen_lambda, "activation time (multi)");
		cmd->add_option("--K", gen_K, "number of calibration types (multi)");
		cmd->add_option("--len-min", gen_len_min, "minimum type length (multi)");
		cmd->add_option("--len-max", gen_len_max, "maximum type length (multi)");
		cmd->add_option("--costs", gen_costs, "comma-separated type costs (multi)");
		cmd->add_option("--max-p", gen_max_p, "maximum processing time");
		cmd->add_option("--horizon", gen_horizon, "timeline length");
		cmd->add_option("--seed", gen_seed, "rng seed");
		cmd->add_option("--density", gen_density, "window tightness in [0,1]");
		cmd->add_flag("--allow-infeasible", gen_allow_infeasible, "skip the feasibility construction");
	}
	gen->add_option("-o,--output", gen_output, "instance JSON (default stdout)");

	std::string red_items;
	Time red_target = 1;
	bool red_solve = false;
	std::string red_solver = "dp";
	CLI::App* reduce = app.add_subcommand("reduce", "subset-sum to calibration scheduling");
	reduce->add_option("--items", red_items, "comma-separated item values")->required();
	reduce->add_option("--target", red_target, "target value V")->required();
	reduce->add_flag("--solve", red_solve, "also solve and report the equivalence verdict");
	reduce->add_option("--solver", red_solver, "dp | brute");

	std::string inspect_input;
	CLI::App* inspect = app.add_subcommand("inspect", "print the critical time sets");
	inspect->add_option("-i,--input", inspect_input, "instance JSON")->required();

	CLI11_PARSE(app, argc, argv);

	try {
		if (solve->parsed()) return run_solve(solve_opt);

		if (validate_cmd->parsed()) {
			const Instance inst = instance_from_json(read_json_file(val_instance));
			const Schedule sched = schedule_from_json(read_json_file(val_schedule));
			std::cout << to_json(validate(inst, sched)).dump() << "\n";
			return kExitOk;
		}

		if (compare->parsed() || gen->parsed()) {
			const GenParams params = parse_gen_params(gen_T, gen_lambda, gen_K, gen_len_min,
				gen_len_max, gen_costs, gen_n, gen_max_p, gen_horizon, gen_seed, gen_density,
				gen_allow_infeasible, gen_multi);
			if (gen->parsed()) {
				write_output(to_json(gen_feasible(params)), gen_output);
				return kExitOk;
			}
			return run_compare(cmp_algos, cmp_trials, params);
		}

		if (reduce->parsed()) {
			std::vector<Time> items;
			std::stringstream ss(red_items);
			for (std::string item; std::getline(ss, item, ',');)
				if (!item.empty()) items.push_back(std::stoll(item));
			const USSInstance uss(items, red_target);
			const Instance reduced = reduce_to_scheduling(uss);
			json out = {{"instance", to_json(reduced)}};
			if (red_solve) {
				const SolveResult r =
					red_solver == "brute" ? brute_multi(reduced) : dp_solve(reduced);
				out["uss_feasible"] = uss_solve(uss);
				out["schedule_cost"] =
					r.status == SolveStatus::Feasible ? r.cost.to_string() : "infeasible";
				out["equivalent"] = check_equivalence(uss,
					red_solver == "brute" ? ReductionSolver::BruteMulti : ReductionSolver::Dp);
			}
			std::cout << out.dump() << "\n";
			return kExitOk;
		}

		if (inspect->parsed()) {
			const Instance inst = instance_from_json(read_json_file(inspect_input));
			if (inst.jobs.empty()) throw std::invalid_argument("inspect needs at least one job");
			const CriticalTimeSets sets = build_critical_times(inst);
			auto set_json = [](const std::vector<Time>& v) {
				return json{{"size", v.size()}, {"values", v}};
			};
			std::cout << json{{"n", inst.jobs.size()}, {"P", total_processing(inst)},
				{"psi", set_json(sets.psi)}, {"theta", set_json(sets.theta)},
				{"phi", set_json(sets.phi)}}
							 .dump()
					  << "\n";
			return kExitOk;
		}
	} catch (const BudgetExceeded& e) {
		std::cerr << "error: " << e.what() << "\n";
		return kExitError;
	} catch (const std::exception& e) {
		std::cerr << "error: " << e.what() << "\n";
		return kExitError;
	}
	return kExitError;
}

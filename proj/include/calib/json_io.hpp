#ifndef CALIB_JSON_IO_HPP
#define CALIB_JSON_IO_HPP

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "model.hpp"
#include "validator.hpp"

namespace calib {

	using json = nlohmann::json;

	// Instance wire format:
	//   {"jobs":[{"id":1,"release":0,"deadline":5,"processing":2}],
	//    "model":{"kind":"single","T":3}}
	//   {"model":{"kind":"multi","lambda":3,"types":[{"length":4,"cost":"1"}]}}
	// Costs travel as decimal strings and are parsed exactly.

	inline json to_json(const Instance& instance) {
		json jobs = json::array();
		for (const Job& j : instance.jobs)
			jobs.push_back({{"id", j.id}, {"release", j.release}, {"deadline", j.deadline},
				{"processing", j.processing}});
		json model;
		if (const auto* s = std::get_if<SingleType>(&instance.model)) {
			model = {{"kind", "single"}, {"T", s->T}};
		} else {
			const auto& mt = std::get<MultiType>(instance.model);
			json types = json::array();
			for (const CalibrationType& t : mt.types)
				types.push_back({{"length", t.length}, {"cost", t.cost.to_string()}});
			model = {{"kind", "multi"}, {"lambda", mt.activation}, {"types", types}};
		}
		return {{"jobs", jobs}, {"model", model}};
	}

	inline Instance instance_from_json(const json& j) {
		if (!j.is_object() || !j.contains("jobs") || !j.contains("model"))
			throw std::invalid_argument("instance json needs \"jobs\" and \"model\"");
		std::vector<Job> jobs;
		for (const json& item : j.at("jobs"))
			jobs.emplace_back(item.at("id").get<int>(), item.at("release").get<Time>(),
				item.at("deadline").get<Time>(), item.at("processing").get<Time>());
		const json& m = j.at("model");
		const std::string kind = m.at("kind").get<std::string>();
		if (kind == "single")
			return Instance(std::move(jobs), SingleType{m.at("T").get<Time>()});
		if (kind != "multi") throw std::invalid_argument("unknown model kind: " + kind);
		MultiType mt;
		mt.activation = m.at("lambda").get<Time>();
		for (const json& t : m.at("types"))
			mt.types.emplace_back(t.at("length").get<Time>(),
				Rational::parse(t.at("cost").get<std::string>()));
		return Instance(std::move(jobs), std::move(mt));
	}

	// Schedule wire format:
	//   {"calibrations":[{"start":1,"type":0}],
	//    "segments":[{"job":1,"start":3,"end":5}],"cost":"1"}

	inline json to_json(const Schedule& schedule) {
		json cals = json::array();
		for (const CalibrationEvent& c : schedule.calibrations)
			cals.push_back({{"start", c.start}, {"type", c.type_index}});
		json segs = json::array();
		for (const Segment& s : schedule.segments)
			segs.push_back({{"job", s.job_id}, {"start", s.start}, {"end", s.end}});
		return {{"calibrations", cals}, {"segments", segs}, {"cost", schedule.total_cost.to_string()}};
	}

	inline Schedule schedule_from_json(const json& j) {
		Schedule s;
		for (const json& c : j.at("calibrations"))
			s.calibrations.push_back({c.at("start").get<Time>(), c.at("type").get<int>()});
		for (const json& seg : j.at("segments"))
			s.segments.push_back(Segment(seg.at("job").get<int>(), seg.at("start").get<Time>(),
				seg.at("end").get<Time>()));
		s.total_cost = Rational::parse(j.at("cost").get<std::string>());
		return s;
	}

	inline json to_json(const std::vector<Violation>& violations) {
		json out = json::array();
		for (const Violation& v : violations)
			out.push_back({{"kind", to_string(v.kind)}, {"detail", v.detail}});
		return out;
	}

} // namespace calib

#endif

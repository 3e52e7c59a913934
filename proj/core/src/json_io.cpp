#include "hochkit/json_io.hpp"

#include <json.hpp>

#include "hochkit/errors.hpp"

namespace hochkit {

namespace {

using nlohmann::json;

void reject_unknown(const json& obj, std::initializer_list<const char*> allowed,
                    const char* what) {
	for (auto it = obj.begin(); it != obj.end(); ++it) {
		bool ok = false;
		for (const char* a : allowed)
			if (it.key() == a) ok = true;
		if (!ok)
			throw domain_error(std::string("json: unknown field '") + it.key() +
			                   "' in " + what);
	}
}

json poly_json(const Polynomial& p) {
	json terms = json::array();
	for (const auto& [a, c] : p.terms()) {
		json t;
		t["exps"] = a.exps();
		t["num"] = c.numerator_str();
		t["den"] = c.denominator_str();
		terms.push_back(std::move(t));
	}
	return terms;
}

Polynomial poly_from(const json& j, int vars) {
	if (!j.is_array()) throw domain_error("json: polynomial must be an array of terms");
	Polynomial p(vars);
	for (const auto& t : j) {
		if (!t.is_object()) throw domain_error("json: polynomial term must be an object");
		reject_unknown(t, {"exps", "num", "den"}, "polynomial term");
		if (!t.contains("exps") || !t.contains("num") || !t.contains("den"))
			throw domain_error("json: polynomial term needs exps, num and den");
		std::vector<int> exps = t["exps"].get<std::vector<int>>();
		if (static_cast<int>(exps.size()) != vars)
			throw domain_error("json: exps length does not match the variable count");
		p.add_term(MultiIndex(std::move(exps)),
		           Rational::from_strings(t["num"].get<std::string>(),
		                                  t["den"].get<std::string>()));
	}
	return p;
}

json op_json(const MultiDiffOp& d) {
	json out;
	out["vars"] = d.vars();
	out["arity"] = d.arity();
	json terms = json::array();
	for (const auto& [slots, coeff] : d.terms()) {
		json t;
		t["coeff"] = poly_json(coeff);
		json sl = json::array();
		for (const auto& s : slots) sl.push_back(s.exps());
		t["slots"] = std::move(sl);
		terms.push_back(std::move(t));
	}
	out["terms"] = std::move(terms);
	return out;
}

json mvf_json(const MultiVectorField& f) {
	json out;
	out["vars"] = f.vars();
	out["degree"] = f.degree();
	json comps = json::array();
	for (const auto& [idx, coeff] : f.components()) {
		json c;
		json ix = json::array();
		for (int i : idx) ix.push_back(i + 1);
		c["index"] = std::move(ix);
		c["coeff"] = poly_json(coeff);
		comps.push_back(std::move(c));
	}
	out["components"] = std::move(comps);
	return out;
}

json parse_text(std::string_view text) {
	json j = json::parse(text, nullptr, false);
	if (j.is_discarded()) throw domain_error("json: malformed input");
	return j;
}

}  // namespace

std::string polynomial_to_json(const Polynomial& p) {
	return poly_json(p).dump();
}

Polynomial polynomial_from_json(std::string_view text, int vars) {
	return poly_from(parse_text(text), vars);
}

std::string op_to_json(const MultiDiffOp& d) {
	return op_json(d).dump();
}

MultiDiffOp op_from_json(std::string_view text) {
	json j = parse_text(text);
	if (!j.is_object()) throw domain_error("json: operator must be an object");
	reject_unknown(j, {"vars", "arity", "terms"}, "operator");
	if (!j.contains("vars") || !j.contains("arity") || !j.contains("terms"))
		throw domain_error("json: operator needs vars, arity and terms");
	int vars = j["vars"].get<int>();
	int arity = j["arity"].get<int>();
	MultiDiffOp d(vars, arity);
	for (const auto& t : j["terms"]) {
		if (!t.is_object()) throw domain_error("json: operator term must be an object");
		reject_unknown(t, {"coeff", "slots"}, "operator term");
		if (!t.contains("coeff") || !t.contains("slots"))
			throw domain_error("json: operator term needs coeff and slots");
		SlotTuple slots;
		for (const auto& s : t["slots"])
			slots.emplace_back(s.get<std::vector<int>>());
		d.add_term(slots, poly_from(t["coeff"], vars));
	}
	return d;
}

std::string mvf_to_json(const MultiVectorField& f) {
	return mvf_json(f).dump();
}

std::string decomposition_to_json(const SDerDecomposition& dec) {
	json out;
	out["order"] = dec.order;
	json words = json::array();
	for (const auto& t : dec.words) {
		json w;
		w["scalar"] = t.scalar.str();
		json factors = json::array();
		for (const auto& f : t.word.factors) {
			json comps = json::array();
			for (const auto& c : f.components) comps.push_back(poly_json(c));
			factors.push_back(std::move(comps));
		}
		w["factors"] = std::move(factors);
		words.push_back(std::move(w));
	}
	out["words"] = std::move(words);
	return out.dump();
}

std::string report_to_json(const CohomologyReport& rep) {
	json out;
	out["window"] = {{"m", rep.vars},
	                 {"n", rep.n_max},
	                 {"r", rep.max_slot_order},
	                 {"d", rep.max_coeff_degree},
	                 {"slack", rep.slack}};
	out["dims"] = rep.dims;
	out["basis_sizes"] = rep.basis_sizes;
	out["hkr_prediction"] = rep.hkr_prediction;
	out["match"] = rep.match;
	return out.dump();
}

std::string split_to_json(const CocycleSplit& s) {
	json out;
	out["e"] = op_json(s.e);
	out["eta"] = mvf_json(s.eta);
	return out.dump();
}

}  // namespace hochkit

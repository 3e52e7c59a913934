#include "hochkit/multivector.hpp"

#include <algorithm>
#include <sstream>

#include "hochkit/errors.hpp"

namespace hochkit {

MultiVectorField::MultiVectorField(int vars, int degree)
    : vars_(vars), degree_(degree) {
	if (vars < 1) throw domain_error("multivector: needs at least one variable");
	if (degree < 0) throw domain_error("multivector: negative degree");
	// degree > vars is allowed: such fields are identically zero (no
	// strictly increasing tuple exists), which keeps wedge total.
}

void MultiVectorField::add_component(std::vector<int> idx, const Polynomial& c) {
	if (static_cast<int>(idx.size()) != degree_)
		throw domain_error("multivector: index tuple length does not match degree");
	if (c.vars() != vars_)
		throw domain_error("multivector: coefficient variable count mismatch");
	for (int i : idx)
		if (i < 0 || i >= vars_)
			throw domain_error("multivector: index out of range");
	if (c.is_zero()) return;
	// Sort by adjacent swaps, tracking the sign.
	bool neg = false;
	for (size_t i = 1; i < idx.size(); ++i)
		for (size_t j = i; j > 0 && idx[j - 1] >= idx[j]; --j) {
			if (idx[j - 1] == idx[j]) return;  // repeated direction: zero
			std::swap(idx[j - 1], idx[j]);
			neg = !neg;
		}
	Polynomial signed_c = neg ? -c : c;
	auto [it, inserted] = comps_.emplace(std::move(idx), signed_c);
	if (!inserted) {
		it->second += signed_c;
		if (it->second.is_zero()) comps_.erase(it);
	}
}

MultiVectorField MultiVectorField::operator-() const {
	MultiVectorField r(vars_, degree_);
	for (const auto& [i, c] : comps_) r.comps_.emplace(i, -c);
	return r;
}

MultiVectorField& MultiVectorField::operator+=(const MultiVectorField& o) {
	if (vars_ != o.vars_ || degree_ != o.degree_)
		throw domain_error("multivector: sum of mismatched fields");
	for (const auto& [i, c] : o.comps_) add_component(i, c);
	return *this;
}

MultiVectorField& MultiVectorField::operator-=(const MultiVectorField& o) {
	if (vars_ != o.vars_ || degree_ != o.degree_)
		throw domain_error("multivector: difference of mismatched fields");
	for (const auto& [i, c] : o.comps_) add_component(i, -c);
	return *this;
}

MultiVectorField MultiVectorField::scaled(const Rational& c) const {
	MultiVectorField r(vars_, degree_);
	if (c.is_zero()) return r;
	for (const auto& [i, k] : comps_) r.comps_.emplace(i, k.scaled(c));
	return r;
}

std::string MultiVectorField::str() const {
	if (comps_.empty()) return "0";
	if (degree_ == 0) return comps_.begin()->second.str();
	std::ostringstream os;
	bool first = true;
	for (const auto& [idx, coeff] : comps_) {
		std::string cs = coeff.str();
		bool negated = false;
		std::string body;
		if (coeff.terms().size() == 1) {
			if (cs[0] == '-') {
				negated = true;
				cs.erase(0, 1);
			}
			body = (cs == "1") ? "" : cs + "*";
		} else {
			body = "(" + cs + ")*";
		}
		if (first) {
			if (negated) os << '-';
			first = false;
		} else {
			os << (negated ? " - " : " + ");
		}
		os << body << "W[";
		for (size_t j = 0; j < idx.size(); ++j) {
			if (j) os << ',';
			os << idx[j] + 1;  // 1-based variable labels in text
		}
		os << ']';
	}
	return os.str();
}

MultiVectorField wedge(const MultiVectorField& a, const MultiVectorField& b) {
	if (a.vars() != b.vars())
		throw domain_error("wedge: variable count mismatch");
	MultiVectorField out(a.vars(), a.degree() + b.degree());
	for (const auto& [ia, ca] : a.components())
		for (const auto& [ib, cb] : b.components()) {
			std::vector<int> idx = ia;
			idx.insert(idx.end(), ib.begin(), ib.end());
			out.add_component(std::move(idx), ca * cb);
		}
	return out;
}

}  // namespace hochkit

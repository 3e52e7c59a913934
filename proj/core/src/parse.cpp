#include "hochkit/parse.hpp"

#include <cctype>
#include <string>
#include <vector>

#include "hochkit/errors.hpp"

namespace hochkit {

namespace {

enum class Tok {
	Int, Var, DKey,
	Plus, Minus, Star, Slash, Caret,
	LParen, RParen, LBracket, RBracket, Comma, Pipe,
	End
};

struct Token {
	Tok kind;
	std::string text;  // digits for Int, digits after 'x' for Var
	int line;
	int col;
};

const char* describe(Tok k) {
	switch (k) {
		case Tok::Int: return "an integer";
		case Tok::Var: return "a variable";
		case Tok::DKey: return "'D'";
		case Tok::Plus: return "'+'";
		case Tok::Minus: return "'-'";
		case Tok::Star: return "'*'";
		case Tok::Slash: return "'/'";
		case Tok::Caret: return "'^'";
		case Tok::LParen: return "'('";
		case Tok::RParen: return "')'";
		case Tok::LBracket: return "'['";
		case Tok::RBracket: return "']'";
		case Tok::Comma: return "','";
		case Tok::Pipe: return "'|'";
		case Tok::End: return "end of input";
	}
	return "?";
}

std::vector<Token> lex(std::string_view src) {
	std::vector<Token> out;
	int line = 1, col = 1;
	size_t i = 0;
	auto bump = [&](size_t n) {
		for (size_t k = 0; k < n; ++k) {
			if (src[i + k] == '\n') {
				++line;
				col = 1;
			} else {
				++col;
			}
		}
		i += n;
	};
	while (i < src.size()) {
		char c = src[i];
		if (std::isspace(static_cast<unsigned char>(c))) {
			bump(1);
			continue;
		}
		int tl = line, tc = col;
		if (std::isdigit(static_cast<unsigned char>(c))) {
			size_t j = i;
			while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
			out.push_back({Tok::Int, std::string(src.substr(i, j - i)), tl, tc});
			bump(j - i);
			continue;
		}
		if (c == 'x') {
			size_t j = i + 1;
			while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
			if (j == i + 1)
				throw parse_error("expected a variable index after 'x'", tl, tc + 1,
				                  {"an integer"});
			out.push_back({Tok::Var, std::string(src.substr(i + 1, j - i - 1)), tl, tc});
			bump(j - i);
			continue;
		}
		if (c == 'D') {
			out.push_back({Tok::DKey, "D", tl, tc});
			bump(1);
			continue;
		}
		Tok k;
		switch (c) {
			case '+': k = Tok::Plus; break;
			case '-': k = Tok::Minus; break;
			case '*': k = Tok::Star; break;
			case '/': k = Tok::Slash; break;
			case '^': k = Tok::Caret; break;
			case '(': k = Tok::LParen; break;
			case ')': k = Tok::RParen; break;
			case '[': k = Tok::LBracket; break;
			case ']': k = Tok::RBracket; break;
			case ',': k = Tok::Comma; break;
			case '|': k = Tok::Pipe; break;
			default:
				throw parse_error(std::string("unexpected character '") + c + "'", tl, tc, {});
		}
		out.push_back({k, std::string(1, c), tl, tc});
		bump(1);
	}
	out.push_back({Tok::End, "", line, col});
	return out;
}

class Parser {
public:
	Parser(std::string_view src, int vars) : toks_(lex(src)), vars_(vars) {
		if (vars < 1) throw domain_error("parser: needs at least one variable");
	}

	Polynomial polynomial() {
		Polynomial p = sum();
		expect(Tok::End);
		return p;
	}

	MultiDiffOp op() {
		bool has_d = false;
		for (const auto& t : toks_)
			if (t.kind == Tok::DKey) has_d = true;
		if (!has_d) {
			// No bracket anywhere: accept a constant-zero polynomial as the
			// zero operator (see the canonical printer).
			Polynomial p = sum();
			expect(Tok::End);
			if (!p.is_zero())
				throw parse_error("an operator needs at least one D[...] term",
				                  toks_.front().line, toks_.front().col, {"'D'"});
			return MultiDiffOp(vars_, 1);
		}
		int sign = leading_sign();
		MultiDiffOp first = op_term();
		if (sign < 0) first = -first;
		MultiDiffOp out = first;
		while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
			bool neg = next().kind == Tok::Minus;
			const Token& at = peek();
			MultiDiffOp t = op_term();
			if (t.arity() != out.arity())
				throw parse_error("arity mismatch: this term has " +
				                      std::to_string(t.arity()) + " slots, earlier terms have " +
				                      std::to_string(out.arity()),
				                  at.line, at.col, {});
			out += neg ? -t : t;
		}
		expect(Tok::End);
		return out;
	}

private:
	const Token& peek() const { return toks_[pos_]; }
	const Token& next() { return toks_[pos_++]; }

	[[noreturn]] void fail(const Token& at, std::vector<std::string> expected) {
		std::string what = "unexpected " + std::string(describe(at.kind));
		if (!expected.empty()) {
			what += ", expected ";
			for (size_t i = 0; i < expected.size(); ++i) {
				if (i) what += expected.size() == 2 ? " or " : ", ";
				what += expected[i];
			}
		}
		throw parse_error(what, at.line, at.col, std::move(expected));
	}

	const Token& expect(Tok k) {
		if (peek().kind != k) fail(peek(), {describe(k)});
		return next();
	}

	int leading_sign() {
		if (peek().kind == Tok::Plus) {
			next();
			return 1;
		}
		if (peek().kind == Tok::Minus) {
			next();
			return -1;
		}
		return 1;
	}

	int int_token(const Token& t, const char* what, long max) {
		long v = 0;
		for (char c : t.text) {
			v = v * 10 + (c - '0');
			if (v > max)
				throw parse_error(std::string(what) + " out of range", t.line, t.col, {});
		}
		return static_cast<int>(v);
	}

	// factor := INT ['/' INT] | VAR ['^' INT] | '(' sum ')'
	Polynomial factor() {
		const Token& t = peek();
		if (t.kind == Tok::Int) {
			next();
			if (peek().kind == Tok::Slash) {
				next();
				const Token& den = expect(Tok::Int);
				bool zero = den.text.find_first_not_of('0') == std::string::npos;
				if (zero)
					throw parse_error("zero denominator", den.line, den.col, {});
				return Polynomial::constant(vars_,
				                            Rational::from_strings(t.text, den.text));
			}
			return Polynomial::constant(vars_, Rational::parse(t.text));
		}
		if (t.kind == Tok::Var) {
			next();
			int idx = int_token(t, "variable index", 1 << 20);
			if (idx < 1 || idx > vars_)
				throw parse_error("variable x" + t.text + " is outside x1..x" +
				                      std::to_string(vars_),
				                  t.line, t.col, {});
			int exp = 1;
			if (peek().kind == Tok::Caret) {
				next();
				const Token& e = expect(Tok::Int);
				exp = int_token(e, "exponent", 1 << 20);
			}
			std::vector<int> exps(static_cast<size_t>(vars_), 0);
			exps[static_cast<size_t>(idx - 1)] = exp;
			return Polynomial::monomial(vars_, MultiIndex(std::move(exps)), 1);
		}
		if (t.kind == Tok::LParen) {
			next();
			Polynomial p = sum();
			expect(Tok::RParen);
			return p;
		}
		fail(t, {"an integer", "a variable", "'('"});
	}

	Polynomial product() {
		Polynomial p = factor();
		while (peek().kind == Tok::Star) {
			next();
			p = p * factor();
		}
		return p;
	}

	Polynomial sum() {
		int sign = leading_sign();
		Polynomial p = product();
		if (sign < 0) p = -p;
		while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
			bool neg = next().kind == Tok::Minus;
			Polynomial q = product();
			p = neg ? p - q : p + q;
		}
		return p;
	}

	// opterm := (factor '*')* 'D' '[' slot ('|' slot)* ']'
	MultiDiffOp op_term() {
		Polynomial coeff = Polynomial::constant(vars_, 1);
		for (;;) {
			const Token& t = peek();
			if (t.kind == Tok::DKey) break;
			if (t.kind == Tok::Int || t.kind == Tok::Var || t.kind == Tok::LParen) {
				coeff = coeff * factor();
				expect(Tok::Star);
				continue;
			}
			fail(t, {"an integer", "a variable", "'('", "'D'"});
		}
		expect(Tok::DKey);
		expect(Tok::LBracket);
		SlotTuple slots;
		for (;;) {
			slots.push_back(slot());
			if (peek().kind == Tok::Pipe) {
				next();
				continue;
			}
			break;
		}
		expect(Tok::RBracket);
		return MultiDiffOp::single(vars_, std::move(slots), std::move(coeff));
	}

	MultiIndex slot() {
		std::vector<int> entries;
		for (;;) {
			const Token& t = expect(Tok::Int);
			entries.push_back(int_token(t, "derivative order", 1 << 20));
			if (peek().kind == Tok::Comma) {
				next();
				continue;
			}
			break;
		}
		if (static_cast<int>(entries.size()) != vars_) {
			const Token& at = peek();
			throw parse_error("slot has " + std::to_string(entries.size()) +
			                      " entries, expected " + std::to_string(vars_) +
			                      " (one per variable)",
			                  at.line, at.col, {});
		}
		return MultiIndex(std::move(entries));
	}

	std::vector<Token> toks_;
	int vars_;
	size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view src, int vars) {
	return Parser(src, vars).polynomial();
}

MultiDiffOp parse_operator(std::string_view src, int vars) {
	return Parser(src, vars).op();
}

}  // namespace hochkit

#include <CLI11.hpp>

#include <iostream>
#include <sstream>
#include <string>

#include "hochkit/errors.hpp"
#include "hochkit/hkr.hpp"
#include "hochkit/hochschild.hpp"
#include "hochkit/json_io.hpp"
#include "hochkit/parse.hpp"
#include "hochkit/selftest.hpp"

namespace {

using namespace hochkit;

std::string slurp_stdin() {
	std::ostringstream os;
	os << std::cin.rdbuf();
	return os.str();
}

MultiDiffOp read_op(const std::string& arg, int vars) {
	return parse_operator(arg == "-" ? slurp_stdin() : arg, vars);
}

Polynomial read_poly(const std::string& arg, int vars) {
	return parse_polynomial(arg == "-" ? slurp_stdin() : arg, vars);
}

int coeff_degree(const MultiDiffOp& d) {
	int deg = 0;
	for (const auto& [slots, c] : d.terms()) deg = std::max(deg, c.total_degree());
	return deg;
}

void print_op(const MultiDiffOp& d, bool json) {
	std::cout << (json ? op_to_json(d) : d.str()) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
	CLI::App app{"exact multidifferential operator toolkit over Q[x1..xm]"};
	app.require_subcommand(1);

	bool json_out = false;
	app.add_flag("--json", json_out, "emit JSON instead of text");

	struct BinaryVerb {
		CLI::App* cmd;
		int vars = 0;
		std::vector<std::string> ops;
	};
	auto add_binary = [&](const char* name, const char* help) {
		auto v = std::make_shared<BinaryVerb>();
		v->cmd = app.add_subcommand(name, help);
		v->cmd->fallthrough();
		v->cmd->add_option("--vars", v->vars, "number of variables m")->required();
		v->cmd->add_option("ops", v->ops, "two operators in the D[...] DSL ('-' reads stdin)")
		    ->expected(2);
		return v;
	};

	auto cup_cmd = add_binary("cup", "cup product of two operators");
	std::string cup_sign = "unsigned";
	cup_cmd->cmd->add_option("--cup-sign", cup_sign, "sign convention: unsigned|paper")
	    ->check(CLI::IsMember({"unsigned", "paper"}));
	auto compose_cmd = add_binary("compose", "total composition of two operators");
	auto bracket_cmd = add_binary("bracket", "bracket of two operators");

	struct UnaryVerb {
		CLI::App* cmd;
		int vars = 0;
		std::string op;
	};
	auto add_unary = [&](const char* name, const char* help) {
		auto v = std::make_shared<UnaryVerb>();
		v->cmd = app.add_subcommand(name, help);
		v->cmd->fallthrough();
		v->cmd->add_option("--vars", v->vars, "number of variables m")->required();
		v->cmd->add_option("op", v->op, "operator in the D[...] DSL ('-' reads stdin)")
		    ->required();
		return v;
	};

	auto delta_cmd = add_unary("delta", "apply the complex differential");
	auto alt_cmd = add_unary("alt", "slot-antisymmetrize an operator");

	auto eval_cmd = add_unary("eval", "apply an operator to polynomial arguments");
	std::vector<std::string> eval_args;
	eval_cmd->cmd->add_option("args", eval_args, "one polynomial per operator slot");

	auto split_cmd = add_unary("split", "split a cocycle into a potential and a field part");
	int split_order = -1, split_deg = -1, split_slack = 2;
	split_cmd->cmd->add_option("--order", split_order, "window slot order (default: the operator's)");
	split_cmd->cmd->add_option("--deg", split_deg, "window coefficient degree (default: the operator's)");
	split_cmd->cmd->add_option("--slack", split_slack, "extra coefficient degree for the potential search");

	auto sder_cmd = add_unary("sder-decompose", "write an arity-1 operator as iterated derivations");
	int sder_order = -1;
	sder_cmd->cmd->add_option("--order", sder_order, "filtration level (default: the operator's order)");

	auto coh_cmd = app.add_subcommand("cohomology", "cohomology dimensions of a truncated window");
	coh_cmd->fallthrough();
	int coh_vars = 0, coh_order = 0, coh_deg = 0, coh_nmax = 0, coh_slack = 2;
	coh_cmd->add_option("--vars", coh_vars, "number of variables m")->required();
	coh_cmd->add_option("--order", coh_order, "max slot order r")->required();
	coh_cmd->add_option("--deg", coh_deg, "max coefficient degree d")->required();
	coh_cmd->add_option("--nmax", coh_nmax, "highest level to compute")->required();
	coh_cmd->add_option("--slack", coh_slack, "coefficient degree slack for the boundary window");

	auto self_cmd = app.add_subcommand("selftest", "run the embedded property suite");
	self_cmd->fallthrough();
	std::uint64_t seed = 20240801;
	self_cmd->add_option("--seed", seed, "random seed");

	try {
		app.parse(argc, argv);
	} catch (const CLI::CallForHelp& e) {
		return app.exit(e);
	} catch (const CLI::CallForAllHelp& e) {
		return app.exit(e);
	} catch (const CLI::ParseError& e) {
		std::cerr << "error: " << e.what() << "\n";
		return 2;
	}

	try {
		if (cup_cmd->cmd->parsed()) {
			SignConvention conv = cup_sign == "paper" ? SignConvention::PaperSigned
			                                          : SignConvention::Unsigned;
			print_op(cup(read_op(cup_cmd->ops[0], cup_cmd->vars),
			             read_op(cup_cmd->ops[1], cup_cmd->vars), conv),
			         json_out);
		} else if (compose_cmd->cmd->parsed()) {
			print_op(total_compose(read_op(compose_cmd->ops[0], compose_cmd->vars),
			                       read_op(compose_cmd->ops[1], compose_cmd->vars)),
			         json_out);
		} else if (bracket_cmd->cmd->parsed()) {
			print_op(gerstenhaber(read_op(bracket_cmd->ops[0], bracket_cmd->vars),
			                      read_op(bracket_cmd->ops[1], bracket_cmd->vars)),
			         json_out);
		} else if (delta_cmd->cmd->parsed()) {
			print_op(hochschild_delta(read_op(delta_cmd->op, delta_cmd->vars)), json_out);
		} else if (alt_cmd->cmd->parsed()) {
			print_op(alt(read_op(alt_cmd->op, alt_cmd->vars)), json_out);
		} else if (eval_cmd->cmd->parsed()) {
			MultiDiffOp d = read_op(eval_cmd->op, eval_cmd->vars);
			if (static_cast<int>(eval_args.size()) != d.arity())
				throw domain_error("eval: expected " + std::to_string(d.arity()) +
				                   " polynomial arguments, got " +
				                   std::to_string(eval_args.size()));
			std::vector<Polynomial> args;
			args.reserve(eval_args.size());
			for (const auto& a : eval_args) args.push_back(read_poly(a, eval_cmd->vars));
			Polynomial out = d.apply(args);
			std::cout << (json_out ? polynomial_to_json(out) : out.str()) << "\n";
		} else if (split_cmd->cmd->parsed()) {
			MultiDiffOp d = read_op(split_cmd->op, split_cmd->vars);
			if (d.arity() == 1) {
				if (!hochschild_delta(d).is_zero())
					throw domain_error("split: operator is not a cocycle");
				MultiVectorField eta = op_to_mvf(d);
				if (json_out)
					std::cout << "{\"e\":null,\"eta\":" << mvf_to_json(eta) << "}\n";
				else
					std::cout << "E = 0\neta = " << eta.str() << "\n";
			} else {
				int order = split_order > 0 ? split_order
				                            : (d.is_zero() ? 1 : d.syntactic_order());
				int deg = split_deg >= 0 ? split_deg : coeff_degree(d);
				Truncation t{split_cmd->vars, d.arity(), order, deg};
				CocycleSplit s = split_cocycle(d, t, split_slack);
				if (json_out)
					std::cout << split_to_json(s) << "\n";
				else
					std::cout << "E = " << s.e.str() << "\neta = " << s.eta.str() << "\n";
			}
		} else if (sder_cmd->cmd->parsed()) {
			MultiDiffOp d = read_op(sder_cmd->op, sder_cmd->vars);
			int order = sder_order > 0 ? sder_order
			                           : (d.is_zero() ? 1 : d.syntactic_order());
			SDerDecomposition dec = sder_decompose(d, order);
			if (json_out) {
				std::cout << decomposition_to_json(dec) << "\n";
			} else {
				std::cout << "order " << dec.order << "\n";
				for (const auto& w : dec.words) {
					std::cout << w.scalar.str() << " *";
					for (const auto& f : w.word.factors)
						std::cout << " (" << f.to_op().str() << ")";
					std::cout << "\n";
				}
			}
		} else if (coh_cmd->parsed()) {
			CohomologyReport rep = cohomology_dims(coh_vars, coh_order, coh_deg,
			                                       coh_nmax, coh_slack);
			if (json_out) {
				std::cout << report_to_json(rep) << "\n";
			} else {
				std::cout << "window: m=" << rep.vars << " r=" << rep.max_slot_order
				          << " d=" << rep.max_coeff_degree << " slack=" << rep.slack
				          << " nmax=" << rep.n_max << "\n";
				for (int n = 0; n <= rep.n_max; ++n)
					std::cout << "n=" << n << ": dim " << rep.dims[static_cast<size_t>(n)]
					          << " basis " << rep.basis_sizes[static_cast<size_t>(n)]
					          << " predicted "
					          << rep.hkr_prediction[static_cast<size_t>(n)] << "\n";
				std::cout << "match: " << (rep.match ? "true" : "false") << "\n";
			}
		} else if (self_cmd->parsed()) {
			SelftestReport rep = run_selftest(seed);
			if (json_out) {
				std::ostringstream os;
				os << "{\"checks\":[";
				for (size_t i = 0; i < rep.checks.size(); ++i) {
					const auto& c = rep.checks[i];
					if (i) os << ',';
					os << "{\"name\":\"" << c.name << "\",\"cases\":" << c.cases
					   << ",\"passed\":" << (c.passed ? "true" : "false") << "}";
				}
				os << "],\"passed\":" << rep.passed << ",\"failed\":" << rep.failed << "}";
				std::cout << os.str() << "\n";
			} else {
				for (const auto& c : rep.checks) {
					if (c.passed)
						std::cout << "ok   " << c.name << " (" << c.cases << " cases)\n";
					else
						std::cout << "FAIL " << c.name << ": " << c.detail << "\n";
				}
				std::cout << "selftest: " << rep.passed << " passed, " << rep.failed
				          << " failed\n";
			}
			return rep.failed == 0 ? 0 : 1;
		}
	} catch (const parse_error& e) {
		std::cerr << "error: line " << e.line() << " col " << e.column() << ": "
		          << e.what() << "\n";
		return 2;
	} catch (const domain_error& e) {
		std::cerr << "error: " << e.what() << "\n";
		return 1;
	} catch (const std::exception& e) {
		std::cerr << "internal error: " << e.what() << "\n";
		return 1;
	}
	return 0;
}

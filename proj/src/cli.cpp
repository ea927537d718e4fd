#include "povs/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <iostream>
#include <iterator>
#include <sstream>

#include "povs/decomposition.hpp"
#include "povs/errors.hpp"
#include "povs/imaginaries.hpp"
#include "povs/json_io.hpp"
#include "povs/measure.hpp"
#include "povs/parser.hpp"
#include "povs/qe.hpp"
#include "povs/random_formulas.hpp"

namespace povs {

namespace {

const std::vector<std::string> kCommands = {"qe",    "decide",  "decompose", "measure", "small",
                                            "generic", "code-set", "code-fn", "split",   "oracle-check"};

Variable parse_variable(const std::string& name) {
    if (name.size() < 2 || (name[0] != 'x' && name[0] != 'u') ||
        !std::all_of(name.begin() + 1, name.end(), [](char c) { return c >= '0' && c <= '9'; }))
        throw InputError("bad variable name '" + name + "'");
    int index = std::stoi(name.substr(1));
    return name[0] == 'x' ? Variable::home(index) : Variable::quot(index);
}

Assignment parse_assignments(const std::vector<std::string>& items) {
    Assignment sigma;
    for (const auto& item : items) {
        auto eq = item.find('=');
        if (eq == std::string::npos)
            throw InputError("assignment '" + item + "' is not NAME=VALUE");
        Variable v = parse_variable(item.substr(0, eq));
        std::string value = item.substr(eq + 1);
        if (v.is_home()) {
            sigma.set(v, parse_element(value));
        } else {
            // Quotient values are given by a representative, optionally wrapped in pi(...).
            if (value.rfind("pi(", 0) == 0 && value.back() == ')')
                value = value.substr(3, value.size() - 4);
            sigma.set(v, project(parse_element(value)));
        }
    }
    return sigma;
}

void check_constants(const Formula& f, const ReferenceModel& model) {
    if (f.kind() == FormulaKind::Atom) {
        const Atom& a = f.atom();
        bool ok = a.is_home_kind() ? model.contains(a.home().constant()) : model.contains(a.quot().constant());
        if (!ok)
            throw InputError("constant in '" + a.str() + "' lies outside the model of dimension " +
                             std::to_string(model.dim));
        return;
    }
    for (const auto& c : f.children())
        check_constants(c, model);
}

// The single variable of the requested sort left free once sigma is applied.
Variable pick_variable(const Formula& f, const Assignment& sigma, const std::optional<std::string>& name, Sort sort) {
    if (name) {
        Variable v = parse_variable(*name);
        if (v.sort != sort)
            throw SortError("variable " + v.str() + " has the wrong sort for this command");
        return v;
    }
    std::vector<Variable> open;
    for (auto v : f.free_vars())
        if (!sigma.binds(v))
            open.push_back(v);
    if (open.empty())
        return sort == Sort::Home ? Variable::home(1) : Variable::quot(1);
    if (open.size() != 1 || open.front().sort != sort)
        throw ArityError("expected exactly one free " + std::string(sort == Sort::Home ? "home" : "quotient") +
                         " variable, found " + std::to_string(open.size()) + " free variables");
    return open.front();
}

std::string element_list(const std::vector<ModelElement>& xs) {
    std::string s = "{";
    for (std::size_t i = 0; i < xs.size(); ++i)
        s += (i ? ", " : "") + xs[i].str();
    return s + "}";
}

std::string piece_text(const Endpoint& a, const Endpoint& b, const CosetSet& c) {
    std::string s = "(" + a.str() + ", " + b.str() + ") " + (c.polarity() == Polarity::Finite ? "finite" : "cofinite") + " {";
    for (std::size_t i = 0; i < c.members().size(); ++i)
        s += (i ? ", " : "") + c.members()[i].str();
    return s + "}";
}

std::string decomposition_text(const Decomposition& d) {
    std::string s = "points: " + element_list(d.points) + "\n";
    for (const auto& p : d.pieces)
        s += "piece: " + piece_text(p.a, p.b, p.cosets) + "\n";
    return s;
}

std::string code_text(const UnarySetCode& c, const std::string& indent = "") {
    std::string s = indent + "frontier: " + element_list(c.frontier) + "\n";
    for (const auto& p : c.pieces)
        s += indent + "piece: " + piece_text(p.a, p.b, p.cosets) + "\n";
    return s;
}

std::string function_text(const FunctionCode& c, Variable x, Variable y) {
    std::string s;
    for (const auto& [px, py] : c.exceptional)
        s += "point: (" + px.str() + ", " + py.str() + ")\n";
    for (const auto& p : c.pieces) {
        HomeTerm line = HomeTerm::var(x, p.slope) + HomeTerm(p.intercept);
        s += "line: " + y.str() + " = " + line.str() + "\n" + code_text(p.domain, "  ");
    }
    if (s.empty())
        s = "empty\n";
    return s;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string oracle_check(const CommandRequest& req) {
    FormulaGenerator gen(req.seed.value_or(0), req.model_dim);
    const TheoryMode mode = req.theory;
    const bool two_sorts = mode != TheoryMode::OVS;
    int agree = 0, disagree = 0, satisfiable = 0;
    std::vector<std::string> failures;
    for (int i = 0; i < req.count; ++i) {
        Variable v = two_sorts && gen.coin() ? Variable::quot(1) : Variable::home(1);
        std::vector<Variable> hv = home_vars(2, 2), qv = two_sorts ? quot_vars(1, 2) : std::vector<Variable>{};
        Conjunction c = gen.conjunction(mode, v, hv, qv);
        Formula f = Formula::exists(v, Formula::from_conjunction(c));
        Formula r = qe(f, mode);
        VarSet free(hv.begin(), hv.end());
        free.insert(qv.begin(), qv.end());
        Assignment sigma = gen.assignment(free);
        bool oracle = v.is_home() ? oracle_exists_home(c, v, sigma).satisfiable
                                  : oracle_exists_quotient(c, v, sigma, mode == TheoryMode::POVS_PREC).satisfiable;
        satisfiable += oracle;
        if (eval(r, sigma) == oracle) {
            ++agree;
        } else {
            ++disagree;
            failures.push_back(f.str());
        }
    }
    if (req.format == OutputFormat::Json)
        return dump({{"seed", req.seed.value_or(0)},
                     {"count", req.count},
                     {"agree", agree},
                     {"disagree", disagree},
                     {"satisfiable", satisfiable},
                     {"failures", failures}});
    std::string s = "instances: " + std::to_string(req.count) + "\nagree: " + std::to_string(agree) +
                    "\ndisagree: " + std::to_string(disagree) + "\nsatisfiable: " + std::to_string(satisfiable) + "\n";
    for (const auto& f : failures)
        s += "failure: " + f + "\n";
    if (disagree > 0)
        throw InvariantError(s);
    return s;
}

std::string dispatch(const CommandRequest& req, std::string& diag) {
    if (req.model_dim < 2)
        throw InputError("model dimension must be at least 2");
    if (std::find(kCommands.begin(), kCommands.end(), req.command) == kCommands.end())
        throw InputError("unknown command '" + req.command + "'");
    if (req.command == "oracle-check")
        return oracle_check(req);

    const bool json = req.format == OutputFormat::Json;
    Formula f = parse(req.input, req.theory);
    check_constants(f, ReferenceModel{req.model_dim});
    Assignment sigma = parse_assignments(req.assign);
    if (req.verbose)
        diag += "input: " + f.str() + "\ntheory: " + to_string(req.theory) + "\n";

    if (req.command == "qe") {
        Formula r = qe(ground(f, sigma), req.theory);
        return json ? dump({{"input", f.str()}, {"result", r.str()}}) : r.str() + "\n";
    }
    if (req.command == "decide") {
        bool b = decide_sentence(ground(f, sigma), req.theory);
        return json ? dump({{"result", b}}) : std::string(b ? "true" : "false") + "\n";
    }
    if (req.command == "split") {
        if (f.kind() != FormulaKind::Atom)
            throw PreconditionError("split expects a single atom, got '" + f.str() + "'");
        AtomSplit parts = split_atom(f.atom());
        auto text = [](const std::optional<Formula>& p) { return p ? p->str() : std::string("none"); };
        if (json)
            return dump({{"home", parts.home_part ? Json(parts.home_part->str()) : Json(nullptr)},
                         {"quotient", parts.quotient_part ? Json(parts.quotient_part->str()) : Json(nullptr)}});
        return "home: " + text(parts.home_part) + "\nquotient: " + text(parts.quotient_part) + "\n";
    }
    if (req.command == "generic") {
        if (req.theory != TheoryMode::POVS)
            throw ModeError("the generic type is defined for the povs theory");
        Variable v = pick_variable(f, sigma, req.var, Sort::Quotient);
        bool b = generic_type_contains(f, v, sigma);
        return json ? dump({{"result", b}}) : std::string(b ? "true" : "false") + "\n";
    }
    if (req.command == "code-fn") {
        std::vector<Variable> open;
        for (auto v : f.free_vars())
            if (!sigma.binds(v) && v.is_home())
                open.push_back(v);
        Variable x = req.x ? parse_variable(*req.x) : (open.size() >= 1 ? open[0] : Variable::home(1));
        Variable y = req.y ? parse_variable(*req.y) : (open.size() >= 2 ? open[1] : Variable::home(2));
        if (!req.x && !req.y && open.size() != 2)
            throw ArityError("code-fn needs two free home variables or explicit --x/--y");
        FunctionCode c = code_function(f, x, y, sigma);
        return json ? dump(to_json(c)) : function_text(c, x, y);
    }

    if (req.theory == TheoryMode::POVS_PREC)
        throw ModeError("unary set commands need a formula without the quotient order; use --theory povs");
    Variable v = pick_variable(f, sigma, req.var, Sort::Home);
    if (req.command == "decompose") {
        Decomposition d = decompose(f, v, sigma);
        return json ? dump(to_json(d)) : decomposition_text(d);
    }
    if (req.command == "small") {
        bool b = is_small(decompose(f, v, sigma));
        return json ? dump({{"result", b}}) : std::string(b ? "true" : "false") + "\n";
    }
    if (req.command == "code-set") {
        UnarySetCode c = code_unary_set(f, v, sigma);
        return json ? dump(to_json(c)) : code_text(c);
    }
    // measure
    MeasureValue m = measure(f, v, sigma);
    unsigned digits = req.precision.value_or(20);
    if (json)
        return dump(to_json(m, digits));
    std::string s = m.value.str() + "\n";
    if (req.precision || !m.value.is_rational())
        s += "~ " + m.value.decimal(digits) + "\n";
    return s;
}

} // namespace

CommandResult run(const CommandRequest& req) {
    CommandResult r;
    try {
        r.out = dispatch(req, r.err);
    } catch (const InputError& e) {
        r.exit_code = 2;
        r.err += std::string("error: ") + e.what() + "\n";
    } catch (const PreconditionError& e) {
        r.exit_code = 3;
        r.err += std::string("error: ") + e.what() + "\n";
    } catch (const InvariantError& e) {
        r.exit_code = 4;
        r.err += std::string("internal error: ") + e.what() + "\n";
    } catch (const std::exception& e) {
        r.exit_code = 4;
        r.err += std::string("internal error: ") + e.what() + "\n";
    }
    return r;
}

CommandResult run_cli(const std::vector<std::string>& args, std::istream& in) {
    CommandRequest req;
    std::string theory = "povs", format = "text";
    std::optional<std::string> input;
    CLI::App app{"Quantifier elimination and definable-set tools for dense pairs of ordered vector spaces", "povs"};
    app.add_option("command", req.command, "Command to run")->required()->check(CLI::IsMember(kCommands));
    app.add_option("formula", input, "Formula text (read from standard input when omitted)");
    app.add_option("--theory", theory, "ovs, povs or povs-prec")->check(CLI::IsMember({"ovs", "povs", "povs-prec"}));
    app.add_option("--model-dim", req.model_dim, "Dimension of the reference model (>= 2)");
    app.add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--seed", req.seed, "Seed for oracle-check");
    app.add_option("--count", req.count, "Number of oracle-check instances");
    app.add_option("--precision", req.precision, "Decimal digits for measure approximations");
    app.add_flag("--verbose", req.verbose, "Echo the normalized input");
    app.add_option("--var", req.var, "Variable of the unary set (decompose, measure, small, code-set, generic)");
    app.add_option("--x", req.x, "Argument variable for code-fn");
    app.add_option("--y", req.y, "Value variable for code-fn");
    app.add_option("--assign", req.assign, "Ground a variable, NAME=VALUE (repeatable)");

    std::vector<std::string> storage = {"povs"};
    storage.insert(storage.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& s : storage)
        argv.push_back(s.data());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        return {0, app.help(), ""};
    } catch (const CLI::ParseError& e) {
        return {2, "", std::string("error: ") + e.what() + "\n"};
    }
    req.theory = theory == "ovs" ? TheoryMode::OVS : theory == "povs" ? TheoryMode::POVS : TheoryMode::POVS_PREC;
    req.format = format == "json" ? OutputFormat::Json : OutputFormat::Text;
    if (input && *input != "-")
        req.input = *input;
    else if (req.command != "oracle-check")
        req.input.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    return run(req);
}

} // namespace povs
